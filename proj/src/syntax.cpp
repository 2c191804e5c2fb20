#include "syntax.hpp"

#include <cctype>

namespace liedeg {

SyntaxError::SyntaxError(const std::string& message, int line, int column, Kind kind)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      detail_(message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace syntax {

namespace {

constexpr int kMaxExponent = 4096;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  size_t i = 0;
  auto push = [&](Tok kind, std::string s, int c) { out.push_back({kind, std::move(s), line, c}); };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      push(Tok::Newline, "\n", col);
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    int start_col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Tok::Int, std::string(text.substr(i, j - i)), start_col);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (ident_start(c)) {
      size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      push(Tok::Ident, std::string(text.substr(i, j - i)), start_col);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '=': kind = Tok::Equals; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      default: {
        std::string shown = std::isprint(static_cast<unsigned char>(c))
                                ? std::string("'") + c + "'"
                                : "byte " + std::to_string(static_cast<unsigned char>(c));
        throw SyntaxError("unexpected character " + shown, line, start_col, SyntaxError::Kind::Lexical);
      }
    }
    push(kind, std::string(1, c), start_col);
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

std::string describe(const Token& tok) {
  switch (tok.kind) {
    case Tok::End: return "end of input";
    case Tok::Newline: return "end of line";
    default: return "'" + tok.text + "'";
  }
}

const Token& Parser::peek(size_t ahead) const {
  size_t k = pos_ + ahead;
  return k < toks_.size() ? toks_[k] : toks_.back();
}

const Token& Parser::next() {
  const Token& t = peek();
  if (pos_ < toks_.size() - 1) ++pos_;
  return t;
}

bool Parser::accept(Tok kind) {
  if (peek().kind != kind) return false;
  next();
  return true;
}

const Token& Parser::expect(Tok kind, std::string_view what) {
  if (peek().kind != kind) fail(peek(), "expected " + std::string(what) + ", found " + describe(peek()));
  return next();
}

void Parser::fail(const Token& at, const std::string& message) const {
  throw SyntaxError(message, at.line, at.column);
}

RatFunc Parser::expression() {
  bool negate = false;
  if (accept(Tok::Minus)) {
    negate = true;
  } else {
    accept(Tok::Plus);
  }
  RatFunc acc = product();
  if (negate) acc = -acc;
  while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
    bool minus = next().kind == Tok::Minus;
    RatFunc rhs = product();
    acc = minus ? acc - rhs : acc + rhs;
  }
  return acc;
}

bool Parser::at_factor_start(const std::function<bool(const std::string&)>& stop_before) const {
  const Token& t = peek();
  if (t.kind == Tok::Int || t.kind == Tok::LParen) return true;
  if (t.kind == Tok::Ident) return !(stop_before && stop_before(t.text));
  return false;
}

RatFunc Parser::product(const std::function<bool(const std::string&)>& stop_before) {
  if (!at_factor_start(stop_before)) fail(peek(), "expected a scalar, found " + describe(peek()));
  RatFunc acc = power(stop_before);
  for (;;) {
    if (peek().kind == Tok::Star) {
      next();
      acc *= power(stop_before);
    } else if (peek().kind == Tok::Slash) {
      const Token& op = next();
      RatFunc d = power(stop_before);
      if (d.is_zero()) fail(op, "division by zero");
      acc /= d;
    } else if (at_factor_start(stop_before)) {
      acc *= power(stop_before);
    } else {
      return acc;
    }
  }
}

RatFunc Parser::power(const std::function<bool(const std::string&)>& stop_before) {
  if (!at_factor_start(stop_before)) fail(peek(), "expected a scalar, found " + describe(peek()));
  RatFunc base = atom();
  if (!accept(Tok::Caret)) return base;
  bool negative = false;
  if (accept(Tok::Minus)) {
    negative = true;
  } else {
    accept(Tok::Plus);
  }
  const Token& e = expect(Tok::Int, "an integer exponent");
  if (e.text.size() > 5 || std::stoi(e.text) > kMaxExponent)
    fail(e, "exponent exceeds " + std::to_string(kMaxExponent));
  int k = std::stoi(e.text);
  if (negative) {
    if (base.is_zero()) fail(e, "negative power of zero");
    base = base.inverse();
  }
  // Monomials are raised directly; everything else by squaring.
  const auto& terms = base.num().terms();
  if (base.den() == LaurentPoly(1) && terms.size() == 1 && terms.begin()->second == GaussRat(1)) {
    return RatFunc(LaurentPoly::monomial(GaussRat(1), terms.begin()->first * k));
  }
  RatFunc result(1);
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

RatFunc Parser::atom() {
  const Token& tok = next();
  switch (tok.kind) {
    case Tok::Int:
      return RatFunc(GaussRat(Rat(mpz_class(tok.text), mpz_class(1))));
    case Tok::LParen: {
      RatFunc v = expression();
      expect(Tok::RParen, "')'");
      return v;
    }
    case Tok::Ident: {
      if (tok.text == "i") return RatFunc(GaussRat::i());
      if (tok.text == "t") return RatFunc::t();
      if (bindings_) {
        auto it = bindings_->find(tok.text);
        if (it != bindings_->end()) return RatFunc(it->second);
      }
      throw SyntaxError("unbound symbol '" + tok.text + "'", tok.line, tok.column, SyntaxError::Kind::UnboundSymbol);
    }
    default:
      fail(tok, "expected a scalar, found " + describe(tok));
  }
}

}  // namespace syntax

RatFunc parse_ratfunc(std::string_view text, const ParameterBindings* bindings) {
  syntax::Parser p(syntax::tokenize(text), bindings);
  RatFunc v = p.expression();
  if (p.peek().kind != syntax::Tok::End)
    p.fail(p.peek(), "unexpected " + syntax::describe(p.peek()) + " after scalar");
  return v;
}

GaussRat parse_gaussrat(std::string_view text, const ParameterBindings* bindings) {
  RatFunc v = parse_ratfunc(text, bindings);
  if (!v.is_constant()) throw SyntaxError("scalar depends on t: " + std::string(text), 1, 1, SyntaxError::Kind::NotConstant);
  return v.constant();
}

}  // namespace liedeg
