#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "canmap/arith/prime_field.hpp"
#include "canmap/arith/tower_element.hpp"
#include "canmap/poly/monomial_order.hpp"

namespace canmap {

// Named constants of a coefficient field (tower generators); none for GF(p).
inline std::optional<TowerElement> field_constant(const TowerField& k, std::string_view name) {
  if (auto i = k.tower()->generator_index(name)) return k.generator(*i);
  return std::nullopt;
}
inline std::optional<Fp> field_constant(const PrimeField&, std::string_view) { return std::nullopt; }

template <class K>
class PolyRing;

template <class K>
using RingPtr = std::shared_ptr<const PolyRing<K>>;

template <class K>
class PolyRing {
 public:
  using Field = K;
  using Element = typename K::Element;

  static RingPtr<K> make(K field, std::vector<std::string> variables,
                         MonomialOrder order = MonomialOrder::degrevlex()) {
    return RingPtr<K>(new PolyRing(std::move(field), std::move(variables), order));
  }

  const K& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return i;
    }
    return std::nullopt;
  }

  RingPtr<K> with_order(MonomialOrder order) const { return make(field_, vars_, order); }
  RingPtr<K> with_variables(std::vector<std::string> vars, MonomialOrder order) const {
    return make(field_, std::move(vars), order);
  }

  bool same_as(const PolyRing& other) const {
    return this == &other ||
           (vars_ == other.vars_ && order_ == other.order_ && field_ == other.field_);
  }

 private:
  PolyRing(K field, std::vector<std::string> variables, MonomialOrder order)
      : field_(std::move(field)), vars_(std::move(variables)), order_(order) {
    if (vars_.empty() || vars_.size() > kMaxVariables) {
      throw std::invalid_argument("polynomial rings support 1.." + std::to_string(kMaxVariables) +
                                  " variables");
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (field_constant(field_, vars_[i])) {
        throw std::invalid_argument("variable '" + vars_[i] + "' shadows a field generator");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable '" + vars_[i] + "'");
      }
    }
  }

  K field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

}  // namespace canmap
