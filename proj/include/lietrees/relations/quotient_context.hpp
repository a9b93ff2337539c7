#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lietrees/exactla/quotient.hpp"
#include "lietrees/relations/relation_set.hpp"

namespace lietrees {

/// Z[generators] modulo a relation set, with the reduction data needed to
/// map sums to coordinates. Immutable once built.
///
/// With a preferred basis (which must be a basis of a torsion-free quotient)
/// coordinates are taken on that basis; otherwise they are the free and
/// torsion coordinates of the computed presentation.
template <class Key>
class BasicQuotientContext {
 public:
  BasicQuotientContext(std::vector<Key> generators, BasicRelationSet<Key> relations,
                       std::optional<std::vector<Key>> preferred_basis = std::nullopt,
                       const EliminationOptions& opts = {});

  const std::vector<Key>& generators() const noexcept { return generators_; }
  const BasicRelationSet<Key>& relations() const noexcept { return relations_; }
  const QuotientPresentation& presentation() const noexcept { return presentation_; }
  std::size_t free_rank() const noexcept { return presentation_.free_rank(); }
  const std::vector<Integer>& torsion() const noexcept { return presentation_.torsion(); }

  bool has_preferred_basis() const noexcept { return basis_.has_value(); }
  const std::vector<Key>& basis() const { return basis_.value(); }

  /// Index of a generator; throws ModelMismatch for keys from another space.
  std::size_t index_of(const Key& k) const;
  SparseRow to_vector(const FormalSum<Key>& s) const;
  FormalSum<Key> from_vector(const SparseRow& v) const;

  std::vector<Integer> reduce(const FormalSum<Key>& s) const;
  bool equal(const FormalSum<Key>& a, const FormalSum<Key>& b) const;
  /// A sum whose reduction is `coords`.
  FormalSum<Key> lift(std::span<const Integer> coords) const;

  SparseIntMatrix relation_matrix() const;

 private:
  std::vector<Key> generators_;
  std::map<Key, std::size_t> index_;
  BasicRelationSet<Key> relations_;
  QuotientPresentation presentation_;
  std::optional<std::vector<Key>> basis_;
  DenseIntMatrix basis_inverse_;
};

using QuotientContext = BasicQuotientContext<Tree>;
using DecoratedQuotientContext = BasicQuotientContext<DecoratedTree>;

/// Lie(n) = Z[Tree(n)] / (AS, IHX), coordinates on the left-normed basis.
QuotientContext lie_context(int n, const EliminationOptions& opts = {});

/// A^T_n = Lie(n) / STU^2 over Tree(n).
QuotientContext jacobi_tree_context(int n, const EliminationOptions& opts = {});

/// Lie_pi(n), coordinates on left-normed trees times decoration tuples.
DecoratedQuotientContext decorated_lie_context(int n, const GroupModelPtr& model,
                                               std::optional<std::size_t> max_word_len = std::nullopt,
                                               const EliminationOptions& opts = {});

}  // namespace lietrees
