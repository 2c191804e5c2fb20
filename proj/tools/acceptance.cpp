// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include "liedeg/catalog.hpp"
#include "liedeg/contraction.hpp"
#include "liedeg/degeneration.hpp"
#include "liedeg/deformation.hpp"
#include "liedeg/invariants.hpp"
#include "liedeg/scalar_syntax.hpp"
#include "support.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace liedeg;

namespace {

using Names = std::set<std::string>;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

GaussRat g(const char* s) { return parse_gaussrat(s); }

// Every catalog entry, with parametrized ones instantiated at samples.
std::vector<std::pair<std::string, Law>> sampled_catalog() {
  std::vector<std::pair<std::string, Law>> out;
  const std::vector<std::vector<GaussRat>> g4_samples = {
      {g("0"), g("1")}, {g("2"), g("-1")}, {g("i"), g("1/2")}, {g("-1/3"), g("1 + i")}};
  const std::vector<GaussRat> g5_samples = {g("0"), g("1/2"), g("-2"), g("i")};
  for (const auto& e : catalog_entries()) {
    if (e.params.empty()) {
      out.emplace_back(e.alias, catalog(e.alias));
    } else if (e.alias == "abelian") {
      for (long n = 1; n <= 5; ++n) out.emplace_back("abelian(" + std::to_string(n) + ")", catalog(e.alias, {GaussRat(n)}));
    } else if (e.alias == "h3+abelian") {
      for (long n = 3; n <= 6; ++n)
        out.emplace_back("h3+abelian(" + std::to_string(n) + ")", catalog(e.alias, {GaussRat(n)}));
    } else if (e.alias == "r3_alpha") {
      for (const GaussRat& a : default_alpha_samples()) out.emplace_back(r3_alpha_name(a), catalog(e.alias, {a}));
    } else if (e.alias == "g4") {
      for (const auto& p : g4_samples) out.emplace_back("g4(" + p[0].to_string() + "," + p[1].to_string() + ")", catalog(e.alias, p));
    } else if (e.alias == "g5") {
      for (const GaussRat& a : g5_samples) out.emplace_back("g5(" + a.to_string() + ")", catalog(e.alias, {a}));
    } else {
      throw std::logic_error("no samples for catalog entry " + e.alias);
    }
  }
  return out;
}

std::map<std::string, Names> l3_closure_table() {
  std::map<std::string, Names> out = {{"sl2", {"sl2", "r3_m1", "n3", "C3"}}, {"r3", {"r3", "r3_1", "n3", "C3"}},
                                      {"r2+C", {"r2+C", "n3", "C3"}},       {"r3_1", {"r3_1", "C3"}},
                                      {"r3_m1", {"r3_m1", "n3", "C3"}},     {"n3", {"n3", "C3"}},
                                      {"C3", {"C3"}}};
  for (const GaussRat& a : default_alpha_samples()) out[r3_alpha_name(a)] = {r3_alpha_name(a), "n3", "C3"};
  return out;
}

Outcome catalog_validity() {
  Outcome o;
  size_t count = 0;
  for (const auto& [name, mu] : sampled_catalog()) {
    ++count;
    if (!validate(mu).ok()) o.fail(name + " is not a Lie algebra");
  }
  if (o.pass) o.detail = std::to_string(count) + " laws validated";
  return o;
}

Outcome hasse_reproduction() {
  Outcome o;
  HasseDataset data = l3_dataset(default_alpha_samples());
  for (const auto& e : data.edges) {
    const Law* src = nullptr;
    const Law* dst = nullptr;
    for (const auto& n : data.nodes) {
      if (n.name == e.from) src = &n.law;
      if (n.name == e.to) dst = &n.law;
    }
    if (!src || !dst) {
      o.fail("edge " + e.from + " -> " + e.to + " names an unknown node");
      continue;
    }
    try {
      verify(*src, *dst, e.witness, e.post_change);
    } catch (const std::exception& ex) {
      o.fail("edge " + e.from + " -> " + e.to + ": " + ex.what());
    }
  }
  HasseDiagram d = build_hasse(data.nodes, data.edges);
  auto table = l3_closure_table();
  if (d.nodes.size() != table.size()) o.fail("node count differs from the closure table");
  for (const auto& node : d.nodes) {
    auto it = table.find(node.name);
    if (it == table.end() || d.closure(node.name) != it->second) o.fail("closure(" + node.name + ") differs");
  }
  if (o.pass) o.detail = std::to_string(d.edges.size()) + " witnessed edges, " + std::to_string(d.nodes.size()) + " closures";
  return o;
}

Outcome component_dimensions() {
  Outcome o;
  std::vector<std::pair<std::string, size_t>> want = {{"sl2", 6}, {"sl2+C", 12}, {"r2+r2", 12}};
  std::ostringstream got;
  for (const auto& [name, dim] : want) {
    size_t d = profile(catalog(name)).orbit_dim;
    got << name << "=" << d << " ";
    if (d != dim) o.fail("orbit_dim(" + name + ") = " + std::to_string(d) + ", expected " + std::to_string(dim));
  }
  if (o.pass) o.detail = got.str();
  return o;
}

Outcome abelian_contraction() {
  Outcome o;
  size_t count = 0;
  for (const auto& [name, mu] : sampled_catalog()) {
    ++count;
    size_t n = mu.dim();
    Witness w = scaling_witness(n);
    LawT moved = transport(mu, w);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t r = 0; r < n; ++r)
          if (!(moved(i, j, r) == RatFunc::t() * RatFunc(mu(i, j, r)))) o.fail(name + ": transported entry is not t*c");
    try {
      verify(mu, Law(n), w);
    } catch (const std::exception& ex) {
      o.fail(name + ": " + ex.what());
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " laws contract to the abelian law";
  return o;
}

Outcome obstruction_soundness() {
  Outcome o;
  HasseDataset data = l3_dataset(default_alpha_samples());
  auto table = l3_closure_table();
  std::map<std::string, InvariantProfile> profiles;
  for (const auto& n : data.nodes) profiles[n.name] = profile(n.law);
  size_t pairs = 0, members = 0, obstructed = 0;
  for (const auto& [src, ps] : profiles)
    for (const auto& [dst, pd] : profiles) {
      ++pairs;
      bool member = table.at(src).count(dst) > 0;
      bool blocked = obstruct(ps, pd).status == VerdictStatus::Obstructed;
      members += member;
      obstructed += blocked;
      if (member && blocked) o.fail("false positive: " + src + " -> " + dst);
    }
  DegenerationVerdict v = obstruct(catalog("n3"), catalog("r2+C"));
  if (v.status != VerdictStatus::Obstructed || v.inequality != "dim lambda^i >= dim mu^i")
    o.fail("obstruct(n3, r2+C) is not Obstructed via series dims");
  if (o.pass)
    o.detail = std::to_string(pairs) + " ordered pairs, " + std::to_string(members) + " closure pairs, " +
               std::to_string(obstructed) + " obstructed";
  return o;
}

Outcome rigidity_certificates() {
  Outcome o;
  for (const char* name : {"sl2", "r2"}) {
    RigidityCertificate c = rigidity(catalog(name));
    if (c.h2 != 0 || c.verdict != RigidityVerdict::FormallyRigidByH2)
      o.fail(std::string(name) + ": H2 = " + std::to_string(c.h2) + ", " + to_string(c.verdict));
  }
  Law n3 = catalog("n3");
  std::vector<size_t> betti = cohomology_dims(n3, Coefficients::Trivial);
  std::vector<size_t> oracle = testing::oracle_betti(n3);
  if (betti != std::vector<size_t>{1, 2, 2, 1}) o.fail("Heisenberg Betti numbers differ from (1,2,2,1)");
  if (oracle != betti) o.fail("Heisenberg Betti numbers disagree with the brute-force oracle");
  if (o.pass) o.detail = "H2(sl2) = H2(r2) = 0; Betti(n3) = (1,2,2,1) matches oracle";
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::vector<std::string> binaries;
  std::stringstream list(LIEDEG_PROPERTY_BINARIES);
  for (std::string path; std::getline(list, path, ';');)
    if (!path.empty()) binaries.push_back(path);
  auto start = std::chrono::steady_clock::now();
  for (const auto& bin : binaries) {
    std::string cmd = "\"" + bin + "\" --test-suite=property --minimal --no-version 2>&1";
    std::string log;
    int status = -1;
    if (FILE* pipe = popen(cmd.c_str(), "r")) {
      char buf[4096];
      for (size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) log.append(buf, got);
      status = pclose(pipe);
    }
    if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
      std::cerr << log;
      o.fail(bin + " failed its property suite");
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 300) o.fail("property suites took " + std::to_string(secs) + " s");
  if (binaries.empty()) o.fail("no property binaries configured");
  if (o.pass) {
    std::ostringstream d;
    d.precision(1);
    d << std::fixed << binaries.size() << " suites in " << secs << " s";
    o.detail = d.str();
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"catalog validity", catalog_validity},
      {"L3 Hasse reproduction", hasse_reproduction},
      {"component dimensions", component_dimensions},
      {"universal abelian contraction", abelian_contraction},
      {"obstruction soundness", obstruction_soundness},
      {"rigidity certificates", rigidity_certificates},
      {"property suites", property_suites},
  };
  int failures = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first << ": " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
