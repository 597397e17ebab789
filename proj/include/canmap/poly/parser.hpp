#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "canmap/arith/field_tower.hpp"
#include "canmap/arith/rational.hpp"
#include "canmap/poly/poly.hpp"

namespace canmap {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER ('/' INTEGER)? | IDENT | '(' expr ')'
// Division is only accepted between two integer literals.
template <class T>
struct ExpressionAlgebra {
  std::function<T(const Rational&)> constant;
  std::function<std::optional<T>(std::string_view)> identifier;
};

template <class T>
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const ExpressionAlgebra<T>& alg) : s_(text), alg_(alg) {}

  T parse() {
    T v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  T expr() {
    T v = term();
    for (;;) {
      if (accept('+')) v = v + term();
      else if (accept('-')) v = v - term();
      else return v;
    }
  }

  T term() {
    T v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') fail("division other than a rational literal");
        return v;
      }
    }
  }

  T unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  T power() {
    T base = primary();
    if (!accept('^')) return base;
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail("malformed exponent: expected a nonnegative integer literal");
    }
    const std::string digits = integer_literal();
    if (digits.size() > 4) fail("malformed exponent: too large");
    unsigned e = static_cast<unsigned>(std::stoul(digits));
    T result = alg_.constant(Rational(1));
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  std::string integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  T primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = integer_literal();
      if (accept('/')) {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          fail("division other than a rational literal");
        }
        lit += "/" + integer_literal();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') fail("division other than a rational literal");
      }
      Rational q;
      try {
        q = parse_rational(lit);
      } catch (const std::exception& e) {
        fail(e.what());
      }
      return alg_.constant(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = s_.substr(start, pos_ - start);
      if (auto v = alg_.identifier(name)) return *v;
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const ExpressionAlgebra<T>& alg_;
  std::size_t pos_ = 0;
};

template <class K>
using MacroTable = std::map<std::string, Poly<K>, std::less<>>;

// Parses `text` in `ring`. Identifiers resolve to ring variables, then field
// generators, then macros (bound as parenthesized subexpressions).
template <class K>
Poly<K> parse_poly(std::string_view text, const RingPtr<K>& ring, const MacroTable<K>* macros = nullptr) {
  ExpressionAlgebra<Poly<K>> alg;
  alg.constant = [&](const Rational& q) { return Poly<K>::constant(ring, ring->field().from_rational(q)); };
  alg.identifier = [&](std::string_view name) -> std::optional<Poly<K>> {
    if (auto i = ring->index_of(name)) return Poly<K>::variable(ring, *i);
    if (auto c = field_constant(ring->field(), name)) return Poly<K>::constant(ring, *c);
    if (macros) {
      if (auto it = macros->find(name); it != macros->end()) return it->second;
    }
    return std::nullopt;
  };
  return ExpressionParser<Poly<K>>(text, alg).parse();
}

// Parses a field element such as "r-5" or "1/154*(126*m-181)".
TowerElement parse_tower_element(std::string_view text, const TowerPtr& tower);

struct TowerStepText {
  std::string name;      // generator name
  std::string variable;  // indeterminate used in `minpoly`; defaults to `name`
  std::string minpoly;
};

// Builds a tower from textual minimal polynomials; each may reference
// generators of earlier steps only. Throws on non-monic polynomials,
// degree < 2, or unknown identifiers.
TowerPtr tower_from_text(const std::vector<TowerStepText>& steps);

}  // namespace canmap
