#include "liedeg/catalog.hpp"

#include "liedeg/scalar_syntax.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace liedeg {

namespace {

using Params = std::vector<GaussRat>;

struct Recipe {
  CatalogEntry entry;
  std::function<Law(const Params&)> build;
};

// 1-based helper: [e_i, e_j] += coeff * e_r
void put(Law& mu, size_t i, size_t j, size_t r, const GaussRat& coeff) {
  mu.set(i - 1, j - 1, r - 1, coeff);
}

Law abelian(size_t n) { return Law(n); }

Law r2() {
  Law mu(2);
  put(mu, 1, 2, 2, 1);
  return mu;
}

Law heisenberg() {
  Law mu(3);
  put(mu, 1, 2, 3, 1);
  return mu;
}

Law r3() {
  Law mu(3);
  put(mu, 1, 2, 2, 1);
  put(mu, 1, 3, 2, 1);
  put(mu, 1, 3, 3, 1);
  return mu;
}

Law r3_alpha(const GaussRat& alpha) {
  Law mu(3);
  put(mu, 1, 2, 2, 1);
  put(mu, 1, 3, 3, alpha);
  return mu;
}

Law sl2() {
  Law mu(3);
  put(mu, 1, 2, 3, 1);
  put(mu, 1, 3, 1, -2);
  put(mu, 2, 3, 2, 2);
  return mu;
}

Law g4(const GaussRat& alpha, const GaussRat& beta) {
  Law mu(4);
  put(mu, 1, 2, 2, 1);
  put(mu, 1, 3, 2, 1);
  put(mu, 1, 3, 3, alpha);
  put(mu, 1, 4, 3, 1);
  put(mu, 1, 4, 4, beta);
  return mu;
}

Law g5(const GaussRat& alpha) {
  Law mu(4);
  put(mu, 1, 2, 2, 1);
  put(mu, 1, 3, 2, 1);
  put(mu, 1, 3, 3, alpha);
  put(mu, 1, 4, 4, alpha + GaussRat(1));
  put(mu, 2, 3, 4, 1);
  return mu;
}

size_t dimension_param(const GaussRat& v, size_t min) {
  if (!v.is_real() || !v.re().is_integer() || v.re() < Rat(static_cast<long>(min)) || Rat(64) < v.re())
    throw std::invalid_argument("dimension parameter must be an integer in [" + std::to_string(min) + ", 64]");
  return static_cast<size_t>(v.re().numerator().get_ui());
}

const std::vector<Recipe>& recipes() {
  static const std::vector<Recipe> all = [] {
    std::vector<Recipe> r;
    auto fixed = [&](std::string alias, std::string display, size_t dim, std::string brackets, std::function<Law()> f) {
      r.push_back({{std::move(alias), std::move(display), dim, {}, std::move(brackets)},
                   [f = std::move(f)](const Params&) { return f(); }});
    };
    r.push_back({{"abelian", "k^n", 0, {"n"}, "-"},
                 [](const Params& p) { return abelian(dimension_param(p[0], 0)); }});
    fixed("C2", "C^2", 2, "-", [] { return abelian(2); });
    fixed("r2", "r_2", 2, "[e1,e2]=e2", r2);
    fixed("C3", "C^3", 3, "-", [] { return abelian(3); });
    fixed("n3", "n_3", 3, "[e1,e2]=e3", heisenberg);
    fixed("h3", "h_3", 3, "[e1,e2]=e3", heisenberg);
    fixed("r2+C", "r_2 + C", 3, "[e1,e2]=e2", [] { return direct_sum(r2(), abelian(1)); });
    fixed("r3", "r_3", 3, "[e1,e2]=e2, [e1,e3]=e2+e3", r3);
    r.push_back({{"r3_alpha", "r_{3,alpha}", 3, {"alpha"}, "[e1,e2]=e2, [e1,e3]=alpha e3"},
                 [](const Params& p) { return r3_alpha(p[0]); }});
    fixed("r3_m1", "r_{3,-1}", 3, "[e1,e2]=e2, [e1,e3]=-e3", [] { return r3_alpha(-1); });
    fixed("r3_1", "r_{3,1}", 3, "[e1,e2]=e2, [e1,e3]=e3", [] { return r3_alpha(1); });
    fixed("sl2", "sl_2", 3, "[e1,e2]=e3, [e1,e3]=-2e1, [e2,e3]=2e2", sl2);
    fixed("C4", "C^4", 4, "-", [] { return abelian(4); });
    fixed("sl2+C", "sl_2 + C", 4, "sl2 on e1..e3", [] { return direct_sum(sl2(), abelian(1)); });
    fixed("r2+r2", "r_2 + r_2", 4, "[e1,e2]=e2, [e3,e4]=e4", [] { return direct_sum(r2(), r2()); });
    fixed("h3+C", "h_3 + C", 4, "[e1,e2]=e3", [] { return direct_sum(heisenberg(), abelian(1)); });
    r.push_back({{"h3+abelian", "h_3 + k^(n-3)", 0, {"n"}, "[e1,e2]=e3"},
                 [](const Params& p) { return direct_sum(heisenberg(), abelian(dimension_param(p[0], 3) - 3)); }});
    r.push_back({{"g4", "g_4(alpha,beta)", 4, {"alpha", "beta"},
                  "[e1,e2]=e2, [e1,e3]=e2+alpha e3, [e1,e4]=e3+beta e4"},
                 [](const Params& p) { return g4(p[0], p[1]); }});
    r.push_back({{"g5", "g_5(alpha)", 4, {"alpha"},
                  "[e1,e2]=e2, [e1,e3]=e2+alpha e3, [e1,e4]=(alpha+1)e4, [e2,e3]=e4"},
                 [](const Params& p) { return g5(p[0]); }});
    return r;
  }();
  return all;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> e;
    for (const auto& r : recipes()) e.push_back(r.entry);
    return e;
  }();
  return entries;
}

Law catalog(std::string_view name, const std::vector<GaussRat>& params) {
  std::string key(name);
  if (key == "r3,alpha") key = "r3_alpha";
  if (key == "r3,-1") key = "r3_m1";
  if (key == "r3,1") key = "r3_1";
  auto it = std::find_if(recipes().begin(), recipes().end(), [&](const Recipe& r) { return r.entry.alias == key; });
  if (it == recipes().end()) throw UnknownAlgebra("unknown catalog algebra '" + std::string(name) + "'");
  if (params.size() != it->entry.params.size())
    throw std::invalid_argument("catalog algebra '" + key + "' takes " + std::to_string(it->entry.params.size()) +
                                " parameter(s), got " + std::to_string(params.size()));
  Law mu = it->build(params);
  auto rep = validate(mu);
  if (!rep.ok()) throw std::logic_error("catalog entry '" + key + "' is not a Lie algebra: " + rep.describe());
  return mu;
}

Law catalog_ref(std::string_view ref) {
  auto open = ref.find('(');
  if (open == std::string_view::npos) return catalog(ref);
  if (ref.back() != ')') throw std::invalid_argument("malformed algebra reference '" + std::string(ref) + "'");
  std::string_view name = ref.substr(0, open);
  std::string_view inner = ref.substr(open + 1, ref.size() - open - 2);
  std::vector<GaussRat> params;
  size_t depth = 0, start = 0;
  for (size_t k = 0; k <= inner.size(); ++k) {
    if (k == inner.size() || (inner[k] == ',' && depth == 0)) {
      params.push_back(parse_gaussrat(inner.substr(start, k - start)));
      start = k + 1;
    } else if (inner[k] == '(') {
      ++depth;
    } else if (inner[k] == ')') {
      if (depth == 0) throw std::invalid_argument("malformed algebra reference '" + std::string(ref) + "'");
      --depth;
    }
  }
  return catalog(name, params);
}

}  // namespace liedeg
