#include "liedeg/dsl.hpp"

#include "syntax.hpp"

#include <cctype>
#include <map>
#include <set>

namespace liedeg {

namespace {

using syntax::Parser;
using syntax::Tok;
using syntax::Token;

constexpr size_t kMaxParsedDim = 64;

bool looks_like_basis(const std::string& s) {
  if (s.size() < 2 || s[0] != 'e') return false;
  for (size_t k = 1; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

class AlgebraParser {
 public:
  explicit AlgebraParser(std::string_view text) : p_(syntax::tokenize(text), &src_.bindings) {}

  AlgebraSource run() {
    skip_newlines();
    header();
    for (;;) {
      skip_newlines();
      if (p_.peek().kind == Tok::End) break;
      bracket_line();
    }
    return std::move(src_);
  }

 private:
  void skip_newlines() {
    while (p_.accept(Tok::Newline)) {
    }
  }

  void end_of_line() {
    if (p_.peek().kind != Tok::Newline && p_.peek().kind != Tok::End)
      p_.fail(p_.peek(), "unexpected " + syntax::describe(p_.peek()) + " at end of line");
  }

  void header() {
    const Token& kw = p_.peek();
    if (kw.kind != Tok::Ident || kw.text != "algebra") p_.fail(kw, "expected 'algebra' header");
    p_.next();
    while (!(p_.peek().kind == Tok::Ident && p_.peek().text == "dim")) {
      const Token& t = p_.peek();
      if (t.kind == Tok::Newline || t.kind == Tok::End) p_.fail(t, "expected algebra name followed by 'dim'");
      src_.name += t.text;
      p_.next();
    }
    if (src_.name.empty()) p_.fail(p_.peek(), "expected algebra name before 'dim'");
    p_.next();
    const Token& d = p_.expect(Tok::Int, "dimension");
    if (d.text.size() > 3 || std::stoul(d.text) > kMaxParsedDim)
      throw SyntaxError("dimension " + d.text + " exceeds " + std::to_string(kMaxParsedDim), d.line, d.column,
                        SyntaxError::Kind::DimensionMismatch);
    src_.dim = std::stoul(d.text);
    for (size_t k = 0; k < src_.dim; ++k) src_.basis.push_back("e" + std::to_string(k + 1));

    if (p_.peek().kind == Tok::Ident && p_.peek().text == "with") {
      p_.next();
      do {
        const Token& name = p_.expect(Tok::Ident, "parameter name");
        if (name.text == "i" || name.text == "t" || looks_like_basis(name.text))
          p_.fail(name, "'" + name.text + "' is reserved and cannot be a parameter");
        if (src_.bindings.count(name.text)) p_.fail(name, "parameter '" + name.text + "' bound twice");
        std::string key = name.text;
        int line = name.line, col = name.column;
        p_.expect(Tok::Equals, "'='");
        RatFunc v = p_.expression();
        if (!v.is_constant())
          throw SyntaxError("parameter '" + key + "' depends on t", line, col, SyntaxError::Kind::NotConstant);
        src_.bindings[key] = v.constant();
      } while (p_.accept(Tok::Comma));
    }
    end_of_line();
  }

  size_t basis_index(const Token& tok) {
    if (tok.kind != Tok::Ident)
      p_.fail(tok, "expected a basis symbol, found " + syntax::describe(tok));
    for (size_t k = 0; k < src_.basis.size(); ++k)
      if (src_.basis[k] == tok.text) return k;
    if (looks_like_basis(tok.text))
      throw SyntaxError("basis symbol '" + tok.text + "' exceeds dimension " + std::to_string(src_.dim), tok.line,
                        tok.column, SyntaxError::Kind::DimensionMismatch);
    throw SyntaxError("unknown basis symbol '" + tok.text + "'", tok.line, tok.column,
                      SyntaxError::Kind::UnknownBasis);
  }

  bool is_basis_name(const std::string& s) const { return looks_like_basis(s); }

  void bracket_line() {
    const Token& open = p_.expect(Tok::LBracket, "'[' starting a bracket");
    size_t i = basis_index(p_.next());
    p_.expect(Tok::Comma, "','");
    size_t j = basis_index(p_.next());
    p_.expect(Tok::RBracket, "']'");
    p_.expect(Tok::Equals, "'='");

    if (i == j) p_.fail(open, "bracket [e" + std::to_string(i + 1) + ",e" + std::to_string(i + 1) + "] is always zero");
    auto key = std::minmax(i, j);
    if (!seen_.insert(key).second)
      throw SyntaxError("duplicate bracket for the pair (e" + std::to_string(key.first + 1) + ",e" +
                            std::to_string(key.second + 1) + ")",
                        open.line, open.column, SyntaxError::Kind::DuplicateBracket);
    if (i > j) p_.fail(open, "write brackets as [e_i,e_j] with i < j");

    BracketEquation eq;
    eq.i = i;
    eq.j = j;
    eq.line = open.line;
    eq.column = open.column;
    eq.value = sum();
    src_.brackets.push_back(std::move(eq));
    end_of_line();
  }

  // sum := '0' | ('+'|'-')? term (('+'|'-') term)*, term := scalar? basis
  Vec<GaussRat> sum() {
    Vec<GaussRat> v(src_.dim, GaussRat(0));
    if (p_.peek().kind == Tok::Int && p_.peek().text == "0" &&
        (p_.peek(1).kind == Tok::Newline || p_.peek(1).kind == Tok::End)) {
      p_.next();
      return v;
    }
    bool negative = false;
    if (p_.accept(Tok::Minus)) {
      negative = true;
    } else {
      p_.accept(Tok::Plus);
    }
    for (;;) {
      auto stop = [this](const std::string& s) { return is_basis_name(s); };
      const Token& start = p_.peek();
      RatFunc coeff(1);
      if (p_.at_factor_start(stop)) coeff = p_.product(stop);
      if (!coeff.is_constant())
        throw SyntaxError("coefficient depends on t", start.line, start.column, SyntaxError::Kind::NotConstant);
      size_t r = basis_index(p_.next());
      GaussRat c = coeff.constant();
      v[r] += negative ? -c : c;
      if (p_.accept(Tok::Plus)) {
        negative = false;
      } else if (p_.accept(Tok::Minus)) {
        negative = true;
      } else {
        return v;
      }
    }
  }

  AlgebraSource src_;
  Parser p_;
  std::set<std::pair<size_t, size_t>> seen_;
};

std::string sanitize_name(std::string_view name) {
  std::string out;
  for (char c : name) {
    bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '-' || c == '(' ||
                c == ')' || c == ',' || c == '/' || c == '^' || c == '*';
    out += keep ? c : '_';
  }
  if (out.empty() || out == "dim") out = "algebra";
  return out;
}

}  // namespace

AlgebraSource parse_algebra(std::string_view text) { return AlgebraParser(text).run(); }

Law elaborate(const AlgebraSource& src) {
  Law mu(src.dim);
  for (const auto& eq : src.brackets) mu.set_bracket(eq.i, eq.j, eq.value);
  auto rep = validate(mu);
  if (!rep.ok()) throw ElaborationError(src.name + ": " + rep.describe(), rep);
  return mu;
}

Law read_algebra(std::string_view text) { return elaborate(parse_algebra(text)); }

std::string print_algebra(const Law& mu, std::string_view name) {
  size_t n = mu.dim();
  std::string out = "algebra " + sanitize_name(name) + " dim " + std::to_string(n) + "\n";
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      std::string rhs;
      for (size_t r = 0; r < n; ++r) {
        const GaussRat& c = mu(i, j, r);
        if (c.is_zero()) continue;
        bool negative = false;
        GaussRat mag = c;
        if (!c.is_compound() && (c.is_real() ? c.re() : c.im()).sign() < 0) {
          negative = true;
          mag = -c;
        }
        if (rhs.empty()) {
          rhs = negative ? "-" : "";
        } else {
          rhs += negative ? " - " : " + ";
        }
        std::string basis = "e" + std::to_string(r + 1);
        rhs += mag == GaussRat(1) ? basis : factor_string(mag) + " " + basis;
      }
      if (rhs.empty()) continue;
      out += "[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "] = " + rhs + "\n";
    }
  return out;
}

}  // namespace liedeg
