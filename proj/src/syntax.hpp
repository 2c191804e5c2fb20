#pragma once

// Tokenizer and scalar-expression parser shared by the scalar syntax and the
// .lie algebra format. Internal header.

#include "liedeg/scalar_syntax.hpp"
#include "liedeg/scalars.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace liedeg::syntax {

enum class Tok {
  Int,
  Ident,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Comma,
  Equals,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  Newline,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

/// Throws SyntaxError on characters outside the grammar. '#' starts a
/// comment running to the end of the line.
std::vector<Token> tokenize(std::string_view text);

std::string describe(const Token& tok);

class Parser {
 public:
  using Bindings = std::map<std::string, GaussRat>;

  Parser(std::vector<Token> tokens, const Bindings* bindings)
      : toks_(std::move(tokens)), bindings_(bindings) {}

  const Token& peek(size_t ahead = 0) const;
  const Token& next();
  bool accept(Tok kind);
  const Token& expect(Tok kind, std::string_view what);
  [[noreturn]] void fail(const Token& at, const std::string& message) const;

  /// expr := ('+'|'-')? term (('+'|'-') term)*
  RatFunc expression();
  /// Product of factors with explicit or implicit multiplication. Stops in
  /// front of an identifier for which stop_before returns true.
  RatFunc product(const std::function<bool(const std::string&)>& stop_before = {});
  /// True when the next token can begin a factor.
  bool at_factor_start(const std::function<bool(const std::string&)>& stop_before = {}) const;

 private:
  RatFunc power(const std::function<bool(const std::string&)>& stop_before);
  RatFunc atom();

  std::vector<Token> toks_;
  size_t pos_ = 0;
  const Bindings* bindings_;
};

}  // namespace liedeg::syntax
