#pragma once

#include <span>
#include <string>
#include <vector>

#include "lietrees/core/formal_sum.hpp"
#include "lietrees/freelie/lie_word.hpp"

namespace lietrees {

/// (first|second)_d = (d - 2) * #{(i, j) in first x second : i > j}.
long split_exponent(std::span<const int> first_labels, std::span<const int> second_labels, int d);

/// Image of a tree under the tree-to-word isomorphism in dimension d.
/// The word has the tree's bracketing; every internal node contributes
/// (-1)^{exponent} with the exponent recorded in preorder.
struct SignedWord {
  int sign = 1;
  LieWord word;
  int dimension = 2;
  std::vector<long> node_exponents;

  /// "-[2,[3,1]]"
  std::string str() const;
  /// Nested form keeping each node's sign, e.g. "(-1)^1[x2,(-1)^1[x3,x1]]".
  std::string nested_str() const;
};

SignedWord omega_d(const Tree& t, int d);

struct SignedTree {
  int sign = 1;
  Tree tree;

  TreeSum to_sum() const { return TreeSum(tree, sign); }
};

/// Inverse of omega_d on a multilinear word: omega_d(inverse(w)) = +w.
/// Throws NotMultilinear.
SignedTree omega_d_inverse(const LieWord& w, int d);

}  // namespace lietrees
