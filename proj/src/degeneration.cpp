#include "liedeg/degeneration.hpp"

#include "liedeg/catalog.hpp"

#include <algorithm>

namespace liedeg {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Obstructed: return "Obstructed";
    case VerdictStatus::Consistent: return "Consistent";
    case VerdictStatus::Verified: return "Verified";
  }
  return "Consistent";
}

namespace {

DegenerationVerdict obstructed(std::string inequality, std::optional<size_t> index, size_t source, size_t target) {
  DegenerationVerdict v;
  v.status = VerdictStatus::Obstructed;
  v.inequality = std::move(inequality);
  v.index = index;
  v.source_value = source;
  v.target_value = target;
  return v;
}

}  // namespace

DegenerationVerdict obstruct(const InvariantProfile& src, const InvariantProfile& dst) {
  if (src.dim != dst.dim) throw std::invalid_argument("obstruct: dimension mismatch");
  if (src == dst) {
    DegenerationVerdict v;
    v.note = "profiles identical; possibly a trivial degeneration";
    return v;
  }
  // Structural inequalities come first so that the reported violation names
  // the invariant that separates the two laws, not just the orbit dimension.
  // Both series start at index 0 with lambda itself.
  size_t depth = std::max({src.lower_central.dims.size(), dst.lower_central.dims.size(), src.derived.dims.size(),
                           dst.derived.dims.size()});
  for (size_t i = 0; i < depth; ++i)
    if (src.lower_central.at(i) < dst.lower_central.at(i))
      return obstructed("dim lambda^i >= dim mu^i", i, src.lower_central.at(i), dst.lower_central.at(i));
  for (size_t i = 0; i < depth; ++i)
    if (src.derived.at(i) < dst.derived.at(i))
      return obstructed("dim lambda^(i) >= dim mu^(i)", i, src.derived.at(i), dst.derived.at(i));
  if (src.center_dim > dst.center_dim)
    return obstructed("dim Z(lambda) <= dim Z(mu)", std::nullopt, src.center_dim, dst.center_dim);
  for (size_t i = 0; i < src.betti_trivial.size(); ++i)
    if (src.betti_trivial[i] > dst.betti_trivial[i])
      return obstructed("dim H^i(lambda) <= dim H^i(mu)", i, src.betti_trivial[i], dst.betti_trivial[i]);
  for (size_t i = 0; i < src.betti_adjoint.size(); ++i)
    if (src.betti_adjoint[i] > dst.betti_adjoint[i])
      return obstructed("dim H^i(lambda,lambda) <= dim H^i(mu,mu)", i, src.betti_adjoint[i], dst.betti_adjoint[i]);
  if (!(src.der_dim < dst.der_dim))
    return obstructed("dim Der lambda < dim Der mu", std::nullopt, src.der_dim, dst.der_dim);
  if (!(src.orbit_dim > dst.orbit_dim))
    return obstructed("dim O(lambda) > dim O(mu)", std::nullopt, src.orbit_dim, dst.orbit_dim);
  return {};
}

DegenerationVerdict obstruct(const Law& source, const Law& target) {
  if (source.dim() != target.dim()) throw std::invalid_argument("obstruct: dimension mismatch");
  return obstruct(profile(source), profile(target));
}

DegenerationVerdict verify(const Law& source, const Law& target, const Witness& witness,
                           const std::optional<Matrix<GaussRat>>& post_change) {
  size_t n = source.dim();
  if (target.dim() != n || witness.dim() != n || (post_change && post_change->rows() != n))
    throw VerificationError(VerificationError::Kind::DimensionMismatch, "verify: dimension mismatch");
  ContractionResult res = contract(source, witness);
  if (!res.limit) {
    const auto& at = *res.offending;
    throw VerificationError(VerificationError::Kind::NoLimit,
                            "no limit: entry (" + std::to_string(at[0] + 1) + "," + std::to_string(at[1] + 1) + "," +
                                std::to_string(at[2] + 1) + ") has valuation " +
                                std::to_string(*res.transported(at[0], at[1], at[2]).valuation()));
  }
  Law limit_law = *res.limit;
  if (post_change) {
    try {
      limit_law = act(BasisChange<GaussRat>::from_action(*post_change), limit_law);
    } catch (const std::invalid_argument&) {
      throw VerificationError(VerificationError::Kind::LimitMismatch, "post change is singular");
    }
  }
  if (!(limit_law == target)) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        for (size_t r = 0; r < n; ++r)
          if (!(limit_law(i, j, r) == target(i, j, r)))
            throw VerificationError(VerificationError::Kind::LimitMismatch,
                                    "limit differs from target at [e" + std::to_string(i + 1) + ",e" +
                                        std::to_string(j + 1) + "] component e" + std::to_string(r + 1) + ": " +
                                        limit_law(i, j, r).to_string() + " vs " + target(i, j, r).to_string());
    throw VerificationError(VerificationError::Kind::LimitMismatch, "limit differs from target");
  }
  DegenerationVerdict v;
  v.status = VerdictStatus::Verified;
  v.witness = witness;
  v.post_change = post_change;
  return v;
}

size_t HasseDiagram::index_of(const std::string& name) const {
  for (size_t k = 0; k < nodes.size(); ++k)
    if (nodes[k].name == name) return k;
  throw std::out_of_range("no Hasse node named '" + name + "'");
}

std::set<std::string> HasseDiagram::closure(const std::string& name) const {
  size_t a = index_of(name);
  std::set<std::string> out;
  for (size_t b = 0; b < nodes.size(); ++b)
    if (reach[a][b]) out.insert(nodes[b].name);
  return out;
}

HasseDiagram build_hasse(std::vector<HasseNode> nodes, std::vector<WitnessedEdge> edges) {
  HasseDiagram d;
  d.nodes = std::move(nodes);
  size_t m = d.nodes.size();
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a + 1; b < m; ++b)
      if (d.nodes[a].name == d.nodes[b].name) throw HasseError("duplicate node '" + d.nodes[a].name + "'");
  for (const auto& node : d.nodes) d.profiles.push_back(profile(node.law));

  d.reach.assign(m, std::vector<bool>(m, false));
  for (size_t a = 0; a < m; ++a) d.reach[a][a] = true;

  for (auto& e : edges) {
    size_t from, to;
    try {
      from = d.index_of(e.from);
      to = d.index_of(e.to);
    } catch (const std::out_of_range& ex) {
      throw HasseError(ex.what());
    }
    if (from == to) throw HasseError("self-loop on " + e.from);
    try {
      verify(d.nodes[from].law, d.nodes[to].law, e.witness, e.post_change);
    } catch (const VerificationError& ex) {
      throw HasseError("edge " + e.from + " -> " + e.to + " failed verification: " + ex.what());
    }
    if (!(d.profiles[from] == d.profiles[to]) && !(d.profiles[from].orbit_dim > d.profiles[to].orbit_dim))
      throw HasseError("edge " + e.from + " -> " + e.to + " does not decrease the orbit dimension");
    d.edge_index.emplace_back(from, to);
    d.reach[from][to] = true;
    d.edges.push_back(std::move(e));
  }

  // Warshall
  for (size_t k = 0; k < m; ++k)
    for (size_t a = 0; a < m; ++a)
      if (d.reach[a][k])
        for (size_t b = 0; b < m; ++b)
          if (d.reach[k][b]) d.reach[a][b] = true;

  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      if (a == b || !d.reach[a][b]) continue;
      if (d.reach[b][a] && !(d.profiles[a] == d.profiles[b]))
        throw HasseError("cycle between " + d.nodes[a].name + " and " + d.nodes[b].name);
      auto verdict = obstruct(d.profiles[a], d.profiles[b]);
      if (verdict.status == VerdictStatus::Obstructed)
        throw HasseError("closure pair " + d.nodes[a].name + " -> " + d.nodes[b].name +
                         " is obstructed by " + verdict.inequality);
    }
  return d;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const HasseDiagram& diagram) {
  if (diagram.nodes.empty()) return "digraph { }\n";
  std::string out = "digraph {\n";
  for (const auto& node : diagram.nodes) {
    out += "  " + quoted(node.name);
    if (!node.family.empty()) {
      std::string name = quoted(node.name), family = quoted(node.family);
      out += " [label=" + name.substr(0, name.size() - 1) + "\\n" + family.substr(1) + "]";
    }
    out += ";\n";
  }
  auto edges = diagram.edge_index;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto [a, b] : edges)
    out += "  " + quoted(diagram.nodes[a].name) + " -> " + quoted(diagram.nodes[b].name) + ";\n";
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------
// Stored witnesses

namespace {

Matrix<RatFunc> new_basis(const std::vector<std::vector<RatFunc>>& columns) {
  size_t n = columns.size();
  Matrix<RatFunc> h(n, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) h(i, j) = columns[j][i];
  return h;
}

// f1 = t e1, f2 = e2 + e3, f3 = t (e2 + a e3) takes r_{3,a} (a != 1), and
// r2+C for a = 0, to n3 with [f1,f2] = f3.
Witness to_heisenberg_witness(const GaussRat& a) {
  RatFunc t = RatFunc::t();
  return Witness::from_new_basis(new_basis({{t, 0, 0}, {0, 1, 1}, {0, t, t * RatFunc(a)}}));
}

}  // namespace

std::string r3_alpha_name(const GaussRat& alpha) { return "r3_alpha(" + alpha.to_string() + ")"; }

std::vector<GaussRat> default_alpha_samples() {
  return {GaussRat(2), GaussRat(-2), GaussRat(Rat(1, 3)), GaussRat::i()};
}

HasseDataset l2_dataset() {
  HasseDataset ds;
  ds.nodes = {{"r2", "", catalog("r2")}, {"C2", "", catalog("C2")}};
  ds.edges.push_back({"r2", "C2", scaling_witness(2), std::nullopt});
  return ds;
}

HasseDataset l3_dataset(const std::vector<GaussRat>& alpha_samples) {
  HasseDataset ds;
  ds.nodes.push_back({"sl2", "", catalog("sl2")});
  ds.nodes.push_back({"r3_m1", "", catalog("r3_m1")});
  for (const auto& a : alpha_samples) {
    if (a * a == GaussRat(1) || a.is_zero())
      throw std::invalid_argument("r3_alpha samples must satisfy alpha != 0 and alpha^2 != 1");
    ds.nodes.push_back({r3_alpha_name(a), "r3_alpha", catalog("r3_alpha", {a})});
  }
  ds.nodes.push_back({"r3", "", catalog("r3")});
  ds.nodes.push_back({"r2+C", "", catalog("r2+C")});
  ds.nodes.push_back({"n3", "", catalog("n3")});
  ds.nodes.push_back({"r3_1", "", catalog("r3_1")});
  ds.nodes.push_back({"C3", "", catalog("C3")});

  RatFunc t = RatFunc::t();

  // sl2 -> r_{3,-1}: Inonu-Wigner along span{e3}, then f1 = -e3/2, f2 = e2, f3 = e1.
  IwContraction iw = iw_contract(catalog("sl2"), {basis_vector(3, 2)});
  Matrix<GaussRat> h = Matrix<GaussRat>::from_rows({{0, 0, 1}, {0, 1, 0}, {GaussRat(Rat(-1, 2)), 0, 0}});
  ds.edges.push_back({"sl2", "r3_m1", iw.witness, *inverse(h)});

  for (const auto& a : alpha_samples) ds.edges.push_back({r3_alpha_name(a), "n3", to_heisenberg_witness(a), std::nullopt});
  ds.edges.push_back({"r3_m1", "n3", to_heisenberg_witness(GaussRat(-1)), std::nullopt});
  // r3 -> n3: f1 = t e1, f2 = e3, f3 = t (e2 + e3).
  ds.edges.push_back({"r3", "n3", Witness::from_new_basis(new_basis({{t, 0, 0}, {0, 0, 1}, {0, t, t}})), std::nullopt});
  // r3 -> r_{3,1}: f3 = t e3 kills the nilpotent part of ad e1.
  ds.edges.push_back({"r3", "r3_1", Witness::from_new_basis(new_basis({{1, 0, 0}, {0, 1, 0}, {0, 0, t}})), std::nullopt});
  ds.edges.push_back({"r2+C", "n3", to_heisenberg_witness(GaussRat(0)), std::nullopt});
  ds.edges.push_back({"r2+C", "C3", scaling_witness(3), std::nullopt});
  ds.edges.push_back({"n3", "C3", scaling_witness(3), std::nullopt});
  ds.edges.push_back({"r3_1", "C3", scaling_witness(3), std::nullopt});
  return ds;
}

}  // namespace liedeg
