#include "liedeg/liedeg.h"

#include "liedeg/catalog.hpp"
#include "liedeg/contraction.hpp"
#include "liedeg/degeneration.hpp"
#include "liedeg/deformation.hpp"
#include "liedeg/dsl.hpp"
#include "liedeg/invariants.hpp"
#include "liedeg/json_io.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct liedeg_algebra {
  liedeg::Law law;
  std::string name;
};

namespace {

using namespace liedeg;
using json = nlohmann::json;

thread_local std::string g_last_error;

liedeg_status fail(liedeg_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  if (out) *out = duplicate(s);
}

void emit(char** out, const ojson& j) { emit(out, j.dump(2) + "\n"); }

// Runs body, translating exceptions into status codes.
template <typename F>
liedeg_status guarded(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const SyntaxError& e) {
    return fail(LIEDEG_ERR_PARSE, e.what());
  } catch (const json::exception& e) {
    return fail(LIEDEG_ERR_PARSE, std::string("JSON: ") + e.what());
  } catch (const FormatError& e) {
    return fail(LIEDEG_ERR_PARSE, e.what());
  } catch (const UnknownAlgebra& e) {
    return fail(LIEDEG_ERR_NOT_FOUND, e.what());
  } catch (const ElaborationError& e) {
    return fail(LIEDEG_ERR_INVALID, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LIEDEG_ERR_INVALID, e.what());
  } catch (const std::domain_error& e) {
    return fail(LIEDEG_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LIEDEG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LIEDEG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LIEDEG_ERR_INTERNAL, "unknown error");
  }
}

json parse_json(const char* text, const char* what) {
  if (!text) throw std::invalid_argument(std::string(what) + " is null");
  return json::parse(text);
}

std::optional<Convention> convention_arg(const char* convention) {
  if (!convention) return std::nullopt;
  return convention_from_string(convention);
}

liedeg_status require(const void* p, const char* what) {
  if (p) return LIEDEG_OK;
  return fail(LIEDEG_ERR_INVALID, std::string(what) + " is null");
}

std::vector<Vec<GaussRat>> vectors_from_json(const json& j, size_t n) {
  if (!j.is_array()) throw FormatError("subspace must be an array of vectors");
  std::vector<Vec<GaussRat>> out;
  for (const auto& v : j) {
    Matrix<GaussRat> row = gaussrat_matrix_from_json(json::array({v}));
    if (row.cols() != n) throw FormatError("subspace vector of length " + std::to_string(row.cols()) +
                                           " in dimension " + std::to_string(n));
    Vec<GaussRat> x(n, GaussRat(0));
    for (size_t k = 0; k < n; ++k) x[k] = row(0, k);
    out.push_back(std::move(x));
  }
  return out;
}

ojson deformation_report(const Law& mu, const Witness& g, int order) {
  TruncatedDeformation d = induced_deformation(mu, g, static_cast<size_t>(order));
  auto defects = jacobi_defect(d);
  bool all_zero = true;
  for (const auto& x : defects) all_zero = all_zero && x.is_zero();
  return ojson{{"deformation", deformation_to_json(d)},
               {"jacobi_defects", defects_to_json(defects)},
               {"consistent", all_zero}};
}

}  // namespace

extern "C" {

const char* liedeg_version(void) { return "0.1.0"; }

const char* liedeg_last_error(void) { return g_last_error.c_str(); }

void liedeg_string_free(char* s) { std::free(s); }

liedeg_status liedeg_algebra_from_catalog(const char* ref, liedeg_algebra** out) {
  if (auto s = require(ref, "ref"); s != LIEDEG_OK) return s;
  if (auto s = require(out, "out"); s != LIEDEG_OK) return s;
  return guarded([&] {
    *out = new liedeg_algebra{catalog_ref(ref), ref};
    return LIEDEG_OK;
  });
}

liedeg_status liedeg_algebra_parse(const char* text, liedeg_algebra** out) {
  if (auto s = require(text, "text"); s != LIEDEG_OK) return s;
  if (auto s = require(out, "out"); s != LIEDEG_OK) return s;
  return guarded([&] {
    AlgebraSource src = parse_algebra(text);
    *out = new liedeg_algebra{elaborate(src), src.name};
    return LIEDEG_OK;
  });
}

liedeg_status liedeg_algebra_parse_unchecked(const char* text, liedeg_algebra** out) {
  if (auto s = require(text, "text"); s != LIEDEG_OK) return s;
  if (auto s = require(out, "out"); s != LIEDEG_OK) return s;
  return guarded([&] {
    AlgebraSource src = parse_algebra(text);
    Law mu(src.dim);
    for (const auto& eq : src.brackets) mu.set_bracket(eq.i, eq.j, eq.value);
    *out = new liedeg_algebra{std::move(mu), src.name};
    return LIEDEG_OK;
  });
}

liedeg_status liedeg_algebra_from_json(const char* text, liedeg_algebra** out) {
  if (auto s = require(out, "out"); s != LIEDEG_OK) return s;
  return guarded([&] {
    json j = parse_json(text, "json");
    std::string name = j.is_object() && j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>()
                                                                                     : "algebra";
    *out = new liedeg_algebra{law_from_json(j), name};
    return LIEDEG_OK;
  });
}

void liedeg_algebra_free(liedeg_algebra* a) { delete a; }

size_t liedeg_algebra_dim(const liedeg_algebra* a) { return a ? a->law.dim() : 0; }

const char* liedeg_algebra_name(const liedeg_algebra* a) { return a ? a->name.c_str() : ""; }

liedeg_status liedeg_algebra_to_json(const liedeg_algebra* a, char** out) {
  if (auto s = require(a, "algebra"); s != LIEDEG_OK) return s;
  return guarded([&] {
    emit(out, law_to_json(a->law));
    return LIEDEG_OK;
  });
}

liedeg_status liedeg_algebra_to_text(const liedeg_algebra* a, char** out) {
  if (auto s = require(a, "algebra"); s != LIEDEG_OK) return s;
  return guarded([&] {
    emit(out, print_algebra(a->law, a->name));
    return LIEDEG_OK;
  });
}

liedeg_status liedeg_validate(const liedeg_algebra* a, int* ok, char** out) {
  if (auto s = require(a, "algebra"); s != LIEDEG_OK) return s;
  return guarded([&] {
    auto rep = validate(a->law);
    if (ok) *ok = rep.ok() ? 1 : 0;
    emit(out, validation_to_json(rep));
    return LIEDEG_OK;
  });
}

liedeg_status liedeg_profile(const liedeg_algebra* a, char** out) {
  if (auto s = require(a, "algebra"); s != LIEDEG_OK) return s;
  return guarded([&] {
    emit(out, profile_to_json(profile(a->law)));
    return LIEDEG_OK;
  });
}

liedeg_status liedeg_contract(const liedeg_algebra* a, const char* witness_json, const char* convention, int order,
                              int* has_limit, char** out) {
  if (auto s = require(a, "algebra"); s != LIEDEG_OK) return s;
  return guarded([&] {
    WitnessSpec ws = witness_from_json(parse_json(witness_json, "witness"), convention_arg(convention));
    if (ws.witness.matrix().rows() != a->law.dim())
      throw std::invalid_argument("witness is " + std::to_string(ws.witness.matrix().rows()) + "x" +
                                  std::to_string(ws.witness.matrix().rows()) + " but the algebra has dimension " +
                                  std::to_string(a->law.dim()));
    ContractionResult r = contract(a->law, ws.witness);
    if (r.limit && ws.post_change) r.limit = act(BasisChange<GaussRat>::from_action(*ws.post_change), *r.limit);
    if (has_limit) *has_limit = r.limit ? 1 : 0;
    ojson j = contraction_to_json(r);
    if (order > 0 && r.limit) j["induced"] = deformation_report(a->law, ws.witness, order);
    emit(out, j);
    return LIEDEG_OK;
  });
}

liedeg_status liedeg_iw_contract(const liedeg_algebra* a, const char* subspace_json, int order, char** out) {
  if (auto s = require(a, "algebra"); s != LIEDEG_OK) return s;
  return guarded([&] {
    auto basis = vectors_from_json(parse_json(subspace_json, "subspace"), a->law.dim());
    IwContraction iw = iw_contract(a->law, basis);
    ojson j = contraction_to_json(iw.result);
    ojson sub = ojson::array(), comp = ojson::array();
    for (const auto& v : iw.subalgebra) sub.push_back(matrix_to_json(Matrix<GaussRat>::from_rows({v}))[0]);
    for (const auto& v : iw.complement) comp.push_back(matrix_to_json(Matrix<GaussRat>::from_rows({v}))[0]);
    j["subalgebra"] = std::move(sub);
    j["complement"] = std::move(comp);
    j["witness"] = matrix_to_json(iw.witness.matrix());
    if (order > 0 && iw.result.limit) j["induced"] = deformation_report(a->law, iw.witness, order);
    emit(out, j);
    return LIEDEG_OK;
  });
}

liedeg_status liedeg_endo_contract(const liedeg_algebra* a, const char* phi_json, char** out) {
  if (auto s = require(a, "algebra"); s != LIEDEG_OK) return s;
  return guarded([&] {
    Matrix<RatFunc> m = ratfunc_matrix_from_json(parse_json(phi_json, "phi"));
    Matrix<LaurentPoly> phi(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t k = 0; k < m.cols(); ++k) {
        if (!(m(i, k).den() == LaurentPoly(1))) throw FormatError("phi entries must be Laurent polynomials");
        phi(i, k) = m(i, k).num();
      }
    if (phi.rows() != a->law.dim() || !phi.is_square())
      throw std::invalid_argument("phi must be a square matrix of the algebra's dimension");
    emit(out, endo_report_to_json(check_endo_contraction(a->law, phi)));
    return LIEDEG_OK;
  });
}

liedeg_status liedeg_obstruct(const liedeg_algebra* source, const liedeg_algebra* target, int* verdict, char** out) {
  if (auto s = require(source, "source"); s != LIEDEG_OK) return s;
  if (auto s = require(target, "target"); s != LIEDEG_OK) return s;
  return guarded([&] {
    DegenerationVerdict v = obstruct(source->law, target->law);
    if (verdict) *verdict = v.status == VerdictStatus::Obstructed ? 1 : 0;
    emit(out, verdict_to_json(v));
    return LIEDEG_OK;
  });
}

liedeg_status liedeg_verify(const liedeg_algebra* source, const liedeg_algebra* target, const char* witness_json,
                            const char* convention, int* verified, char** out) {
  if (auto s = require(source, "source"); s != LIEDEG_OK) return s;
  if (auto s = require(target, "target"); s != LIEDEG_OK) return s;
  return guarded([&] {
    WitnessSpec ws = witness_from_json(parse_json(witness_json, "witness"), convention_arg(convention));
    try {
      DegenerationVerdict v = verify(source->law, target->law, ws.witness, ws.post_change);
      if (verified) *verified = 1;
      emit(out, verdict_to_json(v));
      return LIEDEG_OK;
    } catch (const VerificationError& e) {
      if (e.kind() == VerificationError::Kind::DimensionMismatch) throw std::invalid_argument(e.what());
      if (verified) *verified = 0;
      const char* reason = e.kind() == VerificationError::Kind::NoLimit ? "no-limit" : "limit-mismatch";
      emit(out, ojson{{"status", "NotVerified"}, {"reason", reason}, {"message", e.what()}});
      return LIEDEG_OK;
    }
  });
}

liedeg_status liedeg_hasse(const char* catalog_name, const char* format, char** out) {
  if (auto s = require(catalog_name, "catalog"); s != LIEDEG_OK) return s;
  return guarded([&] {
    std::string which = catalog_name;
    std::string fmt = format ? format : "json";
    if (fmt != "json" && fmt != "dot") throw std::invalid_argument("format must be \"json\" or \"dot\"");
    HasseDataset data;
    if (which == "dim2") {
      data = l2_dataset();
    } else if (which == "dim3") {
      data = l3_dataset(default_alpha_samples());
    } else {
      throw UnknownAlgebra("unknown Hasse catalog '" + which + "' (expected dim2 or dim3)");
    }
    HasseDiagram d = build_hasse(std::move(data.nodes), std::move(data.edges));
    if (fmt == "dot") {
      emit(out, to_dot(d));
    } else {
      emit(out, hasse_to_json(d));
    }
    return LIEDEG_OK;
  });
}

liedeg_status liedeg_deform_check(const char* deformation_json, int order, int* consistent, char** out) {
  return guarded([&] {
    TruncatedDeformation d = deformation_from_json(parse_json(deformation_json, "deformation"));
    if (order > 0 && static_cast<size_t>(order) < d.terms.size()) d.terms.resize(static_cast<size_t>(order));
    check_deformation(d);
    auto defects = jacobi_defect(d);
    bool all_zero = true;
    for (const auto& x : defects) all_zero = all_zero && x.is_zero();
    ojson j{{"dim", d.base.dim()}, {"order", d.order()}};
    if (!d.terms.empty()) {
      CocycleCheck c = is_two_cocycle(d.base, d.terms[0]);
      j["phi1_is_cocycle"] = c.is_cocycle;
    }
    j["jacobi_defects"] = defects_to_json(defects);
    j["consistent"] = all_zero;
    if (consistent) *consistent = all_zero ? 1 : 0;
    emit(out, j);
    return LIEDEG_OK;
  });
}

liedeg_status liedeg_rigidity(const liedeg_algebra* a, char** out) {
  if (auto s = require(a, "algebra"); s != LIEDEG_OK) return s;
  return guarded([&] {
    emit(out, rigidity_to_json(rigidity(a->law)));
    return LIEDEG_OK;
  });
}

liedeg_status liedeg_catalog_list(char** out) {
  return guarded([&] {
    ojson list = ojson::array();
    for (const auto& e : catalog_entries())
      list.push_back(ojson{{"alias", e.alias},
                           {"name", e.display_name},
                           {"dim", e.dim},
                           {"params", e.params},
                           {"brackets", e.brackets}});
    emit(out, list);
    return LIEDEG_OK;
  });
}

}  // extern "C"
