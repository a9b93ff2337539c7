#pragma once

#include <map>
#include <string>
#include <vector>

#include "lietrees/core/formal_sum.hpp"
#include "lietrees/freelie/lie_word.hpp"
#include "lietrees/integer.hpp"

namespace lietrees {

using Monomial = std::vector<int>;

/// Noncommutative polynomial with integer coefficients (tensor algebra element).
class AssocPoly {
 public:
  AssocPoly() = default;
  static AssocPoly monomial(Monomial m, const Integer& c = 1);

  void add(const Monomial& m, const Integer& c);
  const Integer& coefficient(const Monomial& m) const;

  AssocPoly& operator+=(const AssocPoly& o);
  AssocPoly& operator-=(const AssocPoly& o);
  AssocPoly& operator*=(const Integer& k);
  friend AssocPoly operator+(AssocPoly a, const AssocPoly& b) { return a += b; }
  friend AssocPoly operator-(AssocPoly a, const AssocPoly& b) { return a -= b; }
  friend AssocPoly operator*(const Integer& k, AssocPoly a) { return a *= k; }
  /// Concatenation product.
  friend AssocPoly operator*(const AssocPoly& a, const AssocPoly& b);

  friend bool operator==(const AssocPoly&, const AssocPoly&) = default;

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::map<Monomial, Integer>& terms() const noexcept { return terms_; }
  /// e.g. "x1x2 - x2x1"
  std::string str() const;

 private:
  std::map<Monomial, Integer> terms_;
};

/// Commutator expansion: x_i -> x_i, [a, b] -> ab - ba.
AssocPoly expand_assoc(const LieWord& w);

/// Sum of the coefficient-weighted expansions of the trees read as words.
/// This is the ungraded comparison oracle: two sums are equal in Lie(S)
/// iff these polynomials agree.
AssocPoly omega2_expansion(const TreeSum& s);

}  // namespace lietrees
