#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace lietrees {

/// Rooted planar binary tree with distinct positive leaf labels.
///
/// Stored as a preorder sequence: 0 marks an internal node (followed by its
/// first and then its second subtree), a positive value is a leaf label.
/// The order of the two subtrees is the vertex orientation and is never
/// normalized: Graft(a, b) and Graft(b, a) are different values.
///
/// In the planar pictures the first subtree is drawn to the right of the
/// second one, so the cyclic order at every internal node reads
/// (edge towards root, first, second).
class Tree {
 public:
  static Tree leaf(int label);
  /// Throws LabelClash when the leaf sets intersect.
  static Tree graft(const Tree& first, const Tree& second);

  bool is_leaf() const noexcept { return prefix_.size() == 1; }
  int label() const;
  Tree first() const;
  Tree second() const;

  std::size_t leaf_count() const noexcept { return (prefix_.size() + 1) / 2; }
  std::size_t internal_count() const noexcept { return prefix_.size() / 2; }

  /// Leaf labels in planar (preorder) order.
  std::vector<int> leaves() const;
  /// Leaf labels sorted increasingly.
  std::vector<int> label_set() const;

  /// Preorder positions of the internal nodes.
  std::vector<std::size_t> internal_nodes() const;
  /// One past the last prefix position of the subtree rooted at `pos`.
  std::size_t subtree_end(std::size_t pos) const;
  Tree subtree(std::size_t pos) const;
  /// Replaces the subtree at `pos`; the replacement must carry the same labels.
  Tree with_subtree(std::size_t pos, const Tree& replacement) const;
  /// Exchanges the two subtrees of the internal node at `pos`.
  Tree swapped_at(std::size_t pos) const;
  Tree relabeled(const std::function<int(int)>& map) const;

  std::span<const int> prefix() const noexcept { return prefix_; }
  std::string str() const;

  friend bool operator==(const Tree&, const Tree&) = default;
  friend std::strong_ordering operator<=>(const Tree&, const Tree&) = default;

 private:
  friend Tree canonicalize_tree(std::span<const int> prefix);
  explicit Tree(std::vector<int> prefix) : prefix_(std::move(prefix)) {}

  std::vector<int> prefix_;
};

struct TreeHash {
  std::size_t operator()(const Tree& t) const noexcept;
};

/// Validates a raw preorder encoding (0 = internal node, >0 = leaf label)
/// and returns the stored form. Throws DuplicateLeaf / InvalidArgument.
Tree canonicalize_tree(std::span<const int> prefix);

/// Every planar tree over `labels`, sorted by their printed form.
/// Throws EmptyLabelSet.
std::vector<Tree> enumerate_trees(std::span<const int> labels);

/// Labels {1, ..., n}.
std::vector<int> label_range(int n);

/// Two trees live in the same free abelian group iff their label sets agree.
bool same_space(const Tree& a, const Tree& b);

}  // namespace lietrees
