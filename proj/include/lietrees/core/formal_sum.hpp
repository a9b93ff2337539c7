#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lietrees/core/decorated_tree.hpp"
#include "lietrees/core/errors.hpp"
#include "lietrees/core/tree.hpp"
#include "lietrees/integer.hpp"

namespace lietrees {

/// Finite integer-linear combination of keys with no zero coefficients.
///
/// All keys of one sum live in the same space (same label set, and for
/// decorated trees the same group model); mixing spaces raises ModelMismatch.
template <class Key>
class FormalSum {
 public:
  using Map = std::map<Key, Integer>;
  using const_iterator = typename Map::const_iterator;

  FormalSum() = default;
  explicit FormalSum(const Key& key, const Integer& coefficient = 1) { add(key, coefficient); }

  void add(const Key& key, const Integer& coefficient) {
    if (coefficient == 0) return;
    if (!terms_.empty() && !same_space(terms_.begin()->first, key))
      throw Error(Errc::ModelMismatch, "terms live over different label sets or group models");
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Integer& coefficient(const Key& key) const {
    static const Integer zero{0};
    auto it = terms_.find(key);
    return it == terms_.end() ? zero : it->second;
  }

  FormalSum& operator+=(const FormalSum& other) {
    check_compatible(other);
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& other) {
    check_compatible(other);
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  FormalSum& operator*=(const Integer& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= k;
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator-(FormalSum a) { return a *= Integer(-1); }
  friend FormalSum operator*(const Integer& k, FormalSum a) { return a *= k; }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;
  friend bool operator<(const FormalSum& a, const FormalSum& b) { return a.terms_ < b.terms_; }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const noexcept { return terms_; }

 private:
  void check_compatible(const FormalSum& other) const {
    if (!terms_.empty() && !other.terms_.empty() &&
        !same_space(terms_.begin()->first, other.terms_.begin()->first))
      throw Error(Errc::ModelMismatch, "sums live over different label sets or group models");
  }

  Map terms_;
};

using TreeSum = FormalSum<Tree>;
using DecoratedTreeSum = FormalSum<DecoratedTree>;

template <class Key>
FormalSum<Key> sum_add(const FormalSum<Key>& a, const FormalSum<Key>& b) {
  return a + b;
}

template <class Key>
FormalSum<Key> sum_scale(const FormalSum<Key>& a, const Integer& k) {
  return k * a;
}

/// Collects possibly repeated terms into canonical form.
template <class Key>
FormalSum<Key> sum_normalize(const std::vector<std::pair<Key, Integer>>& terms) {
  FormalSum<Key> out;
  for (const auto& [k, c] : terms) out.add(k, c);
  return out;
}

}  // namespace lietrees
