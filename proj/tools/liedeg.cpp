// liedeg command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 negative answer (not a Lie law, no limit, not
// verified, unexpected verdict, inconsistent deformation), 2 usage or input
// error, 3 internal error.

#include "liedeg/liedeg.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct Failure {
  int code;
  std::string message;
};

int exit_code(liedeg_status s) {
  switch (s) {
    case LIEDEG_OK: return kOk;
    case LIEDEG_ERR_DOMAIN: return kDomain;
    case LIEDEG_ERR_INTERNAL: return kInternal;
    default: return kUsage;
  }
}

void check(liedeg_status s, const std::string& context) {
  if (s != LIEDEG_OK) throw Failure{exit_code(s), context + ": " + liedeg_last_error()};
}

struct CString {
  char* p = nullptr;
  ~CString() { liedeg_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct AlgebraDeleter {
  void operator()(liedeg_algebra* a) const { liedeg_algebra_free(a); }
};
using Algebra = std::unique_ptr<liedeg_algebra, AlgebraDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool file_exists(const std::string& path) {
  std::ifstream in(path);
  return static_cast<bool>(in);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

size_t max_dim() {
  const char* env = std::getenv("LIEDEG_MAX_DIM");
  if (!env || !*env) return 8;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0) throw Failure{kUsage, std::string("LIEDEG_MAX_DIM must be a positive integer, got '") + env + "'"};
  return v;
}

void check_dim(size_t n, const std::string& what) {
  size_t cap = max_dim();
  if (n > cap)
    throw Failure{kUsage, what + " has dimension " + std::to_string(n) + ", above LIEDEG_MAX_DIM=" + std::to_string(cap)};
}

// An algebra argument is a .lie or .json file when such a file exists, and a
// catalog reference otherwise.
Algebra load_algebra(const std::string& arg, bool checked = true) {
  liedeg_algebra* a = nullptr;
  if (file_exists(arg)) {
    std::string text = read_file(arg);
    if (ends_with(arg, ".json")) {
      check(liedeg_algebra_from_json(text.c_str(), &a), arg);
    } else if (checked) {
      check(liedeg_algebra_parse(text.c_str(), &a), arg);
    } else {
      check(liedeg_algebra_parse_unchecked(text.c_str(), &a), arg);
    }
  } else {
    check(liedeg_algebra_from_catalog(arg.c_str(), &a), arg);
  }
  Algebra out(a);
  check_dim(liedeg_algebra_dim(a), arg);
  return out;
}

std::string scalar_list(const json& a) {
  std::string s = "(";
  for (size_t k = 0; k < a.size(); ++k) {
    if (k) s += ", ";
    s += a[k].is_string() ? a[k].get<std::string>() : a[k].dump();
  }
  return s + ")";
}

// Best-effort human rendering of a JSON report.
void print_table(std::ostream& os, const json& j, int indent = 0) {
  std::string pad(static_cast<size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      bool flat = value.is_primitive() ||
                  (value.is_array() && std::all_of(value.begin(), value.end(), [](const json& x) { return x.is_primitive(); }));
      if (flat) {
        os << pad << key << ": " << (value.is_array() ? scalar_list(value) : value.is_string() ? value.get<std::string>() : value.dump())
           << "\n";
      } else {
        os << pad << key << ":\n";
        print_table(os, value, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (x.is_primitive()) {
        os << pad << "- " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
      } else if (x.is_array()) {
        os << pad << "- " << scalar_list(x) << "\n";
      } else {
        os << pad << "-\n";
        print_table(os, x, indent + 2);
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

// Laws inside a report are shown in the .lie text form in table mode.
std::string law_text(const json& law, const std::string& name) {
  json named = law;
  named["name"] = name;
  liedeg_algebra* a = nullptr;
  check(liedeg_algebra_from_json(named.dump().c_str(), &a), "law");
  Algebra owner(a);
  CString text;
  check(liedeg_algebra_to_text(a, &text.p), "law");
  return text.str();
}

void output(const std::string& format, const std::string& report) {
  if (format == "json") {
    std::cout << report;
    return;
  }
  print_table(std::cout, json::parse(report));
}

struct Options {
  std::string format = "table";
  std::string algebra;
  std::string source;
  std::string target;
  std::string witness;
  std::string subalgebra;
  std::string endo;
  std::string convention;
  std::string expect;
  std::string catalog = "dim3";
  std::string dot_path;
  std::string file;
  int order = 0;
};

const char* convention_or_null(const Options& o) { return o.convention.empty() ? nullptr : o.convention.c_str(); }

int cmd_validate(const Options& o) {
  Algebra a = load_algebra(o.algebra, false);
  CString out;
  int ok = 0;
  check(liedeg_validate(a.get(), &ok, &out.p), "validate");
  if (o.format == "json") {
    std::cout << out.str();
  } else {
    json r = json::parse(out.str());
    std::cout << (ok ? "ok: " + std::string(liedeg_algebra_name(a.get())) + " is a Lie algebra"
                     : "not a Lie algebra: " + r["message"].get<std::string>())
              << "\n";
  }
  return ok ? kOk : kDomain;
}

int cmd_invariants(const Options& o) {
  Algebra a = load_algebra(o.algebra);
  CString out;
  check(liedeg_profile(a.get(), &out.p), "invariants");
  output(o.format, out.str());
  return kOk;
}

int cmd_contract(const Options& o) {
  int modes = !o.witness.empty() + !o.subalgebra.empty() + !o.endo.empty();
  if (modes != 1) throw Failure{kUsage, "contract needs exactly one of --witness, --subalgebra, --endo"};
  Algebra a = load_algebra(o.algebra);
  CString out;
  bool has_limit = false;
  if (!o.witness.empty()) {
    int lim = 0;
    check(liedeg_contract(a.get(), read_file(o.witness).c_str(), convention_or_null(o), o.order, &lim, &out.p),
          "contract");
    has_limit = lim != 0;
  } else if (!o.subalgebra.empty()) {
    check(liedeg_iw_contract(a.get(), read_file(o.subalgebra).c_str(), o.order, &out.p), "contract");
    has_limit = true;
  } else {
    check(liedeg_endo_contract(a.get(), read_file(o.endo).c_str(), &out.p), "contract");
    has_limit = json::parse(out.str())["in_lattice"].get<bool>();
  }
  if (o.format == "json") {
    std::cout << out.str();
  } else {
    json r = json::parse(out.str());
    const json& c = r.contains("contraction") ? r["contraction"] : r;
    if (c["limit_exists"].get<bool>()) {
      std::cout << "limit:\n" << law_text(c["limit"], "limit");
    } else {
      const json& at = c["offending"];
      std::cout << "no limit: coefficient of e" << at[2] << " in [e" << at[0] << ",e" << at[1]
                << "] has valuation " << c["min_valuation"] << "\n";
    }
    r.erase("transported");
    r.erase("limit");
    r.erase("limit_exists");
    if (r.contains("contraction")) r.erase("contraction");
    print_table(std::cout, r);
  }
  return has_limit ? kOk : kDomain;
}

int cmd_obstruct(const Options& o) {
  if (!o.expect.empty() && o.expect != "consistent" && o.expect != "obstructed")
    throw Failure{kUsage, "--expect must be 'consistent' or 'obstructed'"};
  Algebra src = load_algebra(o.source);
  Algebra dst = load_algebra(o.target);
  CString out;
  int verdict = 0;
  check(liedeg_obstruct(src.get(), dst.get(), &verdict, &out.p), "obstruct");
  output(o.format, out.str());
  if (o.expect == "consistent" && verdict == 1) return kDomain;
  if (o.expect == "obstructed" && verdict == 0) return kDomain;
  return kOk;
}

int cmd_verify(const Options& o) {
  Algebra src = load_algebra(o.source);
  Algebra dst = load_algebra(o.target);
  CString out;
  int verified = 0;
  check(liedeg_verify(src.get(), dst.get(), read_file(o.witness).c_str(), convention_or_null(o), &verified, &out.p),
        "verify");
  output(o.format, out.str());
  return verified ? kOk : kDomain;
}

int cmd_hasse(const Options& o) {
  std::string fmt = o.format == "table" ? "dot" : o.format;
  if (!o.dot_path.empty()) {
    CString dot;
    check(liedeg_hasse(o.catalog.c_str(), "dot", &dot.p), "hasse");
    std::ofstream f(o.dot_path, std::ios::binary);
    if (!f) throw Failure{kUsage, "cannot write '" + o.dot_path + "'"};
    f << dot.str();
    if (o.format == "table") return kOk;
  }
  CString out;
  check(liedeg_hasse(o.catalog.c_str(), fmt.c_str(), &out.p), "hasse");
  std::cout << out.str();
  return kOk;
}

int cmd_deform_check(const Options& o) {
  std::string text = read_file(o.file);
  CString out;
  int consistent = 0;
  check(liedeg_deform_check(text.c_str(), o.order, &consistent, &out.p), "deform check");
  json r = json::parse(out.str());
  check_dim(r["dim"].get<size_t>(), o.file);
  output(o.format, out.str());
  return consistent ? kOk : kDomain;
}

int cmd_rigidity(const Options& o) {
  Algebra a = load_algebra(o.algebra);
  CString out;
  check(liedeg_rigidity(a.get(), &out.p), "rigidity");
  output(o.format, out.str());
  return kOk;
}

int cmd_catalog(const Options& o) {
  CString out;
  check(liedeg_catalog_list(&out.p), "catalog");
  if (o.format == "json") {
    std::cout << out.str();
    return kOk;
  }
  for (const auto& e : json::parse(out.str())) {
    std::string alias = e["alias"].get<std::string>();
    if (!e["params"].empty()) alias += scalar_list(e["params"]);
    std::cout << alias << std::string(alias.size() < 22 ? 22 - alias.size() : 1, ' ') << e["name"].get<std::string>()
              << ": " << e["brackets"].get<std::string>() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact contractions, degenerations and deformations of Lie algebras"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };

  auto* validate = app.add_subcommand("validate", "Check antisymmetry and the Jacobi identity");
  validate->add_option("algebra", o.algebra, "Catalog reference or .lie/.json file")->required();
  add_format(validate, {"table", "json"});

  auto* invariants = app.add_subcommand("invariants", "Print the invariant profile");
  invariants->add_option("algebra", o.algebra, "Catalog reference or .lie/.json file")->required();
  add_format(invariants, {"table", "json"});

  auto* contract = app.add_subcommand("contract", "Contract along a witness curve");
  contract->add_option("--algebra", o.algebra, "Catalog reference or .lie/.json file")->required();
  contract->add_option("--witness", o.witness, "Witness matrix (JSON)");
  contract->add_option("--subalgebra", o.subalgebra, "Inonu-Wigner: subalgebra basis vectors (JSON)");
  contract->add_option("--endo", o.endo, "Endomorphism phi(t) with polynomial entries (JSON)");
  contract->add_option("--convention", o.convention, "Witness convention")
      ->check(CLI::IsMember({"action", "new-basis"}));
  contract->add_option("--order", o.order, "Report the induced deformation up to t^N")->check(CLI::Range(0, 64));
  add_format(contract, {"table", "json"});

  auto* obstruct = app.add_subcommand("obstruct", "Search for an invariant obstructing source -> target");
  obstruct->add_option("source", o.source)->required();
  obstruct->add_option("target", o.target)->required();
  obstruct->add_option("--expect", o.expect, "Exit 1 unless the verdict is this one (consistent|obstructed)");
  add_format(obstruct, {"table", "json"});

  auto* verify = app.add_subcommand("verify", "Certify source -> target with a witness");
  verify->add_option("source", o.source)->required();
  verify->add_option("target", o.target)->required();
  verify->add_option("--witness", o.witness, "Witness matrix (JSON)")->required();
  verify->add_option("--convention", o.convention, "Witness convention")->check(CLI::IsMember({"action", "new-basis"}));
  add_format(verify, {"table", "json"});

  auto* hasse = app.add_subcommand("hasse", "Build the verified Hasse diagram");
  hasse->add_option("--catalog", o.catalog, "dim2 or dim3")->check(CLI::IsMember({"dim2", "dim3"}));
  hasse->add_option("--dot", o.dot_path, "Also write DOT to this file");
  add_format(hasse, {"table", "dot", "json"});

  auto* deform = app.add_subcommand("deform", "Formal deformations");
  deform->require_subcommand(1);
  auto* deform_check = deform->add_subcommand("check", "Jacobi defects of a truncated deformation");
  deform_check->add_option("file", o.file, "Deformation (JSON)")->required();
  deform_check->add_option("--order", o.order, "Truncate to the first N terms")->check(CLI::Range(0, 64));
  add_format(deform_check, {"table", "json"});

  auto* rigidity = app.add_subcommand("rigidity", "Cohomological rigidity certificate");
  rigidity->add_option("algebra", o.algebra, "Catalog reference or .lie/.json file")->required();
  add_format(rigidity, {"table", "json"});

  auto* catalog = app.add_subcommand("catalog", "List the built-in algebras");
  add_format(catalog, {"table", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*invariants) return cmd_invariants(o);
    if (*contract) return cmd_contract(o);
    if (*obstruct) return cmd_obstruct(o);
    if (*verify) return cmd_verify(o);
    if (*hasse) return cmd_hasse(o);
    if (*deform_check) return cmd_deform_check(o);
    if (*rigidity) return cmd_rigidity(o);
    if (*catalog) return cmd_catalog(o);
  } catch (const Failure& f) {
    std::cerr << "liedeg: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "liedeg: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
