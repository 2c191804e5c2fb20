#include "liedeg/json_io.hpp"

#include "liedeg/scalar_syntax.hpp"

#include <set>

namespace liedeg {

namespace {

using json = nlohmann::json;

RatFunc scalar_from_json(const json& v) {
  if (v.is_string()) return parse_ratfunc(v.get<std::string>());
  if (v.is_number_integer()) return RatFunc(GaussRat(Rat(mpz_class(v.dump()), mpz_class(1))));
  throw FormatError("scalar must be a string or an integer, got " + v.dump());
}

size_t index_from_json(const json& v, size_t n, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > static_cast<long long>(n))
    throw FormatError(std::string(what) + " must be an integer in [1, " + std::to_string(n) + "]");
  return static_cast<size_t>(v.get<long long>() - 1);
}

template <typename S>
Matrix<S> matrix_from_json(const json& j, S (*convert)(const RatFunc&)) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a non-empty array of rows");
  size_t rows = j.size();
  size_t cols = 0;
  for (const auto& row : j) {
    if (!row.is_array()) throw FormatError("matrix rows must be arrays");
    if (cols == 0) cols = row.size();
    if (row.size() != cols || cols == 0) throw FormatError("matrix rows must have equal non-zero length");
  }
  Matrix<S> m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < cols; ++k) m(i, k) = convert(scalar_from_json(j[i][k]));
  return m;
}

RatFunc as_ratfunc(const RatFunc& f) { return f; }

GaussRat as_gaussrat(const RatFunc& f) {
  if (!f.is_constant()) throw FormatError("expected a constant scalar, got " + f.to_string());
  return f.constant();
}

ojson indices(std::optional<std::array<size_t, 3>> at) {
  if (!at) return nullptr;
  return ojson::array({(*at)[0] + 1, (*at)[1] + 1, (*at)[2] + 1});
}

ojson vector_to_json(const Vec<GaussRat>& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

ojson basis_to_json(const std::vector<Vec<GaussRat>>& basis) {
  ojson a = ojson::array();
  for (const auto& v : basis) a.push_back(vector_to_json(v));
  return a;
}

}  // namespace

Law law_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim")) throw FormatError("law must be an object with \"dim\"");
  const json& d = j.at("dim");
  if (!d.is_number_integer() || d.get<long long>() < 0 || d.get<long long>() > 64)
    throw FormatError("\"dim\" must be an integer in [0, 64]");
  size_t n = d.get<size_t>();
  Law mu(n);
  if (!j.contains("brackets")) return mu;
  const json& br = j.at("brackets");
  if (!br.is_array()) throw FormatError("\"brackets\" must be an array");
  std::set<std::pair<size_t, size_t>> seen;
  for (const auto& b : br) {
    if (!b.is_object() || !b.contains("i") || !b.contains("j"))
      throw FormatError("bracket entries need \"i\", \"j\" and \"coeffs\"");
    size_t i = index_from_json(b.at("i"), n, "\"i\"");
    size_t k = index_from_json(b.at("j"), n, "\"j\"");
    if (i == k) throw FormatError("bracket with i == j");
    if (!seen.insert(std::minmax(i, k)).second) throw FormatError("duplicate bracket pair");
    Vec<GaussRat> v(n, GaussRat(0));
    if (b.contains("coeffs")) {
      const json& c = b.at("coeffs");
      if (!c.is_object()) throw FormatError("\"coeffs\" must be an object");
      for (const auto& [key, value] : c.items()) {
        size_t r;
        try {
          r = index_from_json(json(std::stoll(key)), n, "coefficient index");
        } catch (const std::logic_error&) {
          throw FormatError("coefficient index '" + key + "' is not an integer");
        }
        v[r] = as_gaussrat(scalar_from_json(value));
      }
    }
    if (i < k) {
      mu.set_bracket(i, k, v);
    } else {
      for (auto& x : v) x = -x;
      mu.set_bracket(k, i, v);
    }
  }
  return mu;
}

Matrix<RatFunc> ratfunc_matrix_from_json(const json& j) { return matrix_from_json<RatFunc>(j, as_ratfunc); }
Matrix<GaussRat> gaussrat_matrix_from_json(const json& j) { return matrix_from_json<GaussRat>(j, as_gaussrat); }

std::string to_string(Convention c) { return c == Convention::Action ? "action" : "new-basis"; }

Convention convention_from_string(const std::string& s) {
  if (s == "action") return Convention::Action;
  if (s == "new-basis") return Convention::NewBasis;
  throw FormatError("convention must be \"action\" or \"new-basis\", got \"" + s + "\"");
}

WitnessSpec witness_from_json(const json& j, std::optional<Convention> convention_override) {
  Convention conv = Convention::Action;
  const json* matrix = &j;
  std::optional<Matrix<GaussRat>> post;
  if (j.is_object()) {
    if (!j.contains("matrix")) throw FormatError("witness object needs \"matrix\"");
    matrix = &j.at("matrix");
    if (j.contains("convention")) {
      if (!j.at("convention").is_string()) throw FormatError("\"convention\" must be a string");
      conv = convention_from_string(j.at("convention").get<std::string>());
    }
    if (j.contains("post_change")) {
      const json& pc = j.at("post_change");
      Convention pconv = Convention::Action;
      const json* pm = &pc;
      if (pc.is_object()) {
        if (!pc.contains("matrix")) throw FormatError("post_change object needs \"matrix\"");
        pm = &pc.at("matrix");
        if (pc.contains("convention")) pconv = convention_from_string(pc.at("convention").get<std::string>());
      }
      Matrix<GaussRat> m = gaussrat_matrix_from_json(*pm);
      if (!m.is_square()) throw FormatError("post_change must be square");
      if (pconv == Convention::NewBasis) {
        auto inv = inverse(m);
        if (!inv) throw FormatError("post_change is singular");
        m = *inv;
      }
      post = std::move(m);
    }
  }
  if (convention_override) conv = *convention_override;
  Matrix<RatFunc> m = ratfunc_matrix_from_json(*matrix);
  if (!m.is_square()) throw FormatError("witness matrix must be square");
  try {
    return {make_witness(m, conv), std::move(post)};
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("witness: ") + e.what());
  }
}

ojson deformation_to_json(const TruncatedDeformation& d) {
  ojson terms = ojson::array();
  for (const auto& t : d.terms) terms.push_back(law_to_json(t));
  return ojson{{"base", law_to_json(d.base)}, {"terms", std::move(terms)}};
}

TruncatedDeformation deformation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("base")) throw FormatError("deformation needs \"base\"");
  TruncatedDeformation d;
  d.base = law_from_json(j.at("base"));
  if (j.contains("terms")) {
    if (!j.at("terms").is_array()) throw FormatError("\"terms\" must be an array");
    for (const auto& t : j.at("terms")) {
      Law term = law_from_json(t);
      if (term.dim() != d.base.dim()) throw FormatError("deformation term dimension differs from the base");
      d.terms.push_back(std::move(term));
    }
  }
  return d;
}

ojson profile_to_json(const InvariantProfile& p) {
  return ojson{{"dim", p.dim},
               {"lower_central_dims", p.lower_central.dims},
               {"derived_dims", p.derived.dims},
               {"center_dim", p.center_dim},
               {"der_dim", p.der_dim},
               {"orbit_dim", p.orbit_dim},
               {"betti_trivial", p.betti_trivial},
               {"betti_adjoint", p.betti_adjoint},
               {"nilpotent", p.nilpotent},
               {"solvable", p.solvable},
               {"abelian", p.abelian}};
}

ojson validation_to_json(const ValidationReport<GaussRat>& r) {
  using K = ValidationReport<GaussRat>::Kind;
  ojson out{{"ok", r.ok()}};
  if (r.kind == K::Antisymmetry) {
    out["violation"] = "antisymmetry";
    out["at"] = ojson::array({r.i + 1, r.j + 1});
    out["component"] = r.s + 1;
    out["value"] = r.value.to_string();
  } else if (r.kind == K::Jacobi) {
    out["violation"] = "jacobi";
    out["at"] = ojson::array({r.i + 1, r.j + 1, r.k + 1});
    out["component"] = r.s + 1;
    out["value"] = r.value.to_string();
    out["jacobiator"] = vector_to_json(r.jacobiator);
  }
  out["message"] = r.describe();
  return out;
}

ojson contraction_to_json(const ContractionResult& r) {
  ojson out{{"transported", law_to_json(r.transported)}, {"min_valuation", r.min_valuation}};
  out["limit_exists"] = r.limit.has_value();
  out["limit"] = r.limit ? law_to_json(*r.limit) : ojson(nullptr);
  out["offending"] = indices(r.offending);
  return out;
}

ojson verdict_to_json(const DegenerationVerdict& v) {
  ojson out{{"status", to_string(v.status)}};
  if (v.status == VerdictStatus::Obstructed) {
    out["inequality"] = v.inequality;
    out["index"] = v.index ? ojson(*v.index) : ojson(nullptr);
    out["source_value"] = v.source_value;
    out["target_value"] = v.target_value;
  }
  if (!v.note.empty()) out["note"] = v.note;
  if (v.witness) out["witness"] = matrix_to_json(v.witness->matrix());
  if (v.post_change) out["post_change"] = matrix_to_json(*v.post_change);
  return out;
}

ojson rigidity_to_json(const RigidityCertificate& c) {
  return ojson{{"verdict", to_string(c.verdict)}, {"h2_adjoint", c.h2}, {"h3_adjoint", c.h3}};
}

ojson defects_to_json(const std::vector<DefectTensor>& defects) {
  ojson orders = ojson::array();
  for (size_t k = 0; k < defects.size(); ++k) {
    ojson entry{{"order", k + 1}, {"zero", defects[k].is_zero()}};
    if (auto at = defects[k].first_nonzero()) {
      entry["first_nonzero"] = ojson::array({(*at)[0] + 1, (*at)[1] + 1, (*at)[2] + 1, (*at)[3] + 1});
      for (size_t t = 0; t < defects[k].triples.size(); ++t)
        if (defects[k].triples[t] == std::array<size_t, 3>{(*at)[0], (*at)[1], (*at)[2]})
          entry["value"] = vector_to_json(defects[k].values[t]);
    }
    orders.push_back(std::move(entry));
  }
  return orders;
}

ojson endo_report_to_json(const EndoContractionReport& r) {
  return ojson{{"in_lattice", r.in_lattice},
               {"contraction", contraction_to_json(r.result)},
               {"phi0", matrix_to_json(r.phi0)},
               {"image", basis_to_json(r.image)},
               {"kernel", basis_to_json(r.kernel)},
               {"image_is_subalgebra", r.image_is_subalgebra},
               {"kernel_is_ideal", r.kernel_is_ideal},
               {"kernel_is_nilpotent", r.kernel_is_nilpotent},
               {"phi0_is_homomorphism", r.phi0_is_homomorphism},
               {"exact_sequence_verified", r.exact_sequence_verified()}};
}

ojson hasse_to_json(const HasseDiagram& d) {
  ojson nodes = ojson::array();
  for (size_t k = 0; k < d.nodes.size(); ++k) {
    ojson closure = ojson::array();
    for (size_t b = 0; b < d.nodes.size(); ++b)
      if (d.reach[k][b]) closure.push_back(d.nodes[b].name);
    nodes.push_back(ojson{{"name", d.nodes[k].name},
                          {"family", d.nodes[k].family},
                          {"orbit_dim", d.profiles[k].orbit_dim},
                          {"closure", std::move(closure)}});
  }
  ojson edges = ojson::array();
  for (const auto& e : d.edges) {
    ojson entry{{"from", e.from}, {"to", e.to}, {"witness", matrix_to_json(e.witness.matrix())}};
    if (e.post_change) entry["post_change"] = matrix_to_json(*e.post_change);
    edges.push_back(std::move(entry));
  }
  return ojson{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

}  // namespace liedeg
