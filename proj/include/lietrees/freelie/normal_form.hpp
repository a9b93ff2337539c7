#pragma once

#include <span>
#include <utility>
#include <vector>

#include "lietrees/core/formal_sum.hpp"
#include "lietrees/freelie/lie_word.hpp"
#include "lietrees/integer.hpp"

namespace lietrees {

/// Left-normed basis trees [s1,[s2,[...,[s_{n-1}, max]...]]] over `labels`,
/// one per permutation of labels \ {max}, permutations in lexicographic order.
std::vector<Tree> left_normed_basis(std::span<const int> labels);

/// Coordinates of a multilinear sum on the left-normed basis.
///
/// The coefficient of basis element sigma is the coefficient of the
/// monomial x_{s1}...x_{s_{n-1}} x_max in the commutator expansion: each
/// left-normed element has exactly one expansion monomial ending in x_max.
/// Throws NotMultilinear when a term does not use every label exactly once.
std::vector<Integer> multilinear_normal_form(const TreeSum& s, std::span<const int> labels);
std::vector<Integer> multilinear_normal_form(const std::vector<std::pair<LieWord, Integer>>& s,
                                             std::span<const int> labels);

}  // namespace lietrees
