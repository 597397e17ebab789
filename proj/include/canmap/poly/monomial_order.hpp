#pragma once

#include <cstddef>
#include <string>

#include "canmap/poly/monomial.hpp"

namespace canmap {

class MonomialOrder {
 public:
  enum class Kind { kDegRevLex, kLex, kBlock };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::kDegRevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::kLex, 0); }
  // degrevlex on variables [0, split), ties broken by degrevlex on the rest.
  // Eliminates the first `split` variables.
  static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::kBlock, split); }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }
  bool is_degree_compatible() const { return kind_ == Kind::kDegRevLex; }

  // Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::kDegRevLex:
        return revlex_range(a, b, 0, kMaxVariables, a.degree, b.degree);
      case Kind::kLex:
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
          if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? 1 : -1;
        }
        return 0;
      case Kind::kBlock: {
        std::uint32_t da = 0, db = 0;
        for (std::size_t i = 0; i < split_; ++i) {
          da += a.exps[i];
          db += b.exps[i];
        }
        if (int c = revlex_range(a, b, 0, split_, da, db)) return c;
        return revlex_range(a, b, split_, kMaxVariables, a.degree - da, b.degree - db);
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.split_ == b.split_;
  }

 private:
  MonomialOrder(Kind kind, std::size_t split) : kind_(kind), split_(split) {}

  static int revlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                          std::uint32_t da, std::uint32_t db) {
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
    }
    return 0;
  }

  Kind kind_;
  std::size_t split_;
};

}  // namespace canmap
