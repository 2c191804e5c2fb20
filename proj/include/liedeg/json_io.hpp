#pragma once

// JSON forms of laws, witnesses, deformations and every report type.
// Output uses ordered_json so that key order, and therefore bytes, are
// stable. Scalars are strings in the scalar syntax.
//
// Law:       {"dim": n, "brackets": [{"i":1,"j":2,"coeffs":{"3":"1"}}, ...]}
// Witness:   [[...],...]  or  {"convention": "action"|"new-basis",
//                              "matrix": [[...]], "post_change": <witness>}
// Deformation: {"base": <law>, "terms": [<law>, ...]}

#include "liedeg/contraction.hpp"
#include "liedeg/degeneration.hpp"
#include "liedeg/deformation.hpp"
#include "liedeg/invariants.hpp"
#include "liedeg/lie_core.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace liedeg {

using ojson = nlohmann::ordered_json;

/// Malformed JSON document structure (not JSON syntax).
class FormatError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename S>
ojson law_to_json(const StructureTensor<S>& mu) {
  ojson brackets = ojson::array();
  size_t n = mu.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      ojson coeffs = ojson::object();
      for (size_t r = 0; r < n; ++r)
        if (!mu(i, j, r).is_zero()) coeffs[std::to_string(r + 1)] = mu(i, j, r).to_string();
      if (coeffs.empty()) continue;
      brackets.push_back(ojson{{"i", i + 1}, {"j", j + 1}, {"coeffs", std::move(coeffs)}});
    }
  return ojson{{"dim", n}, {"brackets", std::move(brackets)}};
}

Law law_from_json(const nlohmann::json& j);

template <typename S>
ojson matrix_to_json(const Matrix<S>& m) {
  ojson rows = ojson::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<RatFunc> ratfunc_matrix_from_json(const nlohmann::json& j);
Matrix<GaussRat> gaussrat_matrix_from_json(const nlohmann::json& j);

std::string to_string(Convention c);
Convention convention_from_string(const std::string& s);

struct WitnessSpec {
  Witness witness;
  std::optional<Matrix<GaussRat>> post_change;  // action convention
};

/// convention_override, when set, replaces the convention named in the file.
WitnessSpec witness_from_json(const nlohmann::json& j, std::optional<Convention> convention_override = std::nullopt);

ojson deformation_to_json(const TruncatedDeformation& d);
TruncatedDeformation deformation_from_json(const nlohmann::json& j);

ojson profile_to_json(const InvariantProfile& p);
ojson validation_to_json(const ValidationReport<GaussRat>& r);
ojson contraction_to_json(const ContractionResult& r);
ojson verdict_to_json(const DegenerationVerdict& v);
ojson rigidity_to_json(const RigidityCertificate& c);
ojson defects_to_json(const std::vector<DefectTensor>& defects);
ojson endo_report_to_json(const EndoContractionReport& r);
ojson hasse_to_json(const HasseDiagram& d);

}  // namespace liedeg
