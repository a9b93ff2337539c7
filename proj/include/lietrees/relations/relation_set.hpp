#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lietrees/core/formal_sum.hpp"

namespace lietrees {

enum class RelationFamily { AS, IHX, STU2, AS_IHX, AS_IHX_STU2 };

/// "AS", "IHX", "STU2", "AS+IHX", "AS+IHX+STU2"
std::string family_tag(RelationFamily f);

/// Relation vectors over the trees on `labels`. Every vector is nonzero and
/// no vector appears twice up to sign.
template <class Key>
struct BasicRelationSet {
  std::vector<int> labels;
  RelationFamily family = RelationFamily::AS;
  std::vector<FormalSum<Key>> vectors;

  /// "# TAG" followed by one relation per line in the expression grammar.
  std::string export_text() const;
};

using RelationSet = BasicRelationSet<Tree>;
using DecoratedRelationSet = BasicRelationSet<DecoratedTree>;

/// T + T' for every tree T and internal node v, T' swapping the subtrees at v.
RelationSet as_relations(std::span<const int> labels);

/// I - H + X for every pair of adjacent internal nodes, with
/// I = [G1,[G2,G3]], H = [[G1,G2],G3], X = [G2,[G3,G1]].
RelationSet ihx_relations(std::span<const int> labels);

/// AS and IHX together.
RelationSet lie_relations(std::span<const int> labels);

/// AS and IHX tensored with every decoration tuple in pi^S. Free models
/// need `max_word_len`.
DecoratedRelationSet decorated_relations(std::span<const int> labels, const GroupModelPtr& model,
                                         std::optional<std::size_t> max_word_len = std::nullopt);

/// Every map labels -> pi, as decoration vectors in sorted label order.
std::vector<std::vector<GroupElement>> decoration_tuples(std::size_t label_count, const GroupModel& model,
                                                         std::optional<std::size_t> max_word_len);

/// Appends `extra` to `into`, dropping vectors already present up to sign.
template <class Key>
void merge_relations(BasicRelationSet<Key>& into, const BasicRelationSet<Key>& extra, RelationFamily family);

/// Adds `v` unless it is zero or already present up to sign.
template <class Key>
class RelationCollector {
 public:
  void add(FormalSum<Key> v);
  std::vector<FormalSum<Key>> take() { return std::move(vectors_); }
  std::size_t size() const noexcept { return vectors_.size(); }

 private:
  std::vector<FormalSum<Key>> vectors_;
  std::map<FormalSum<Key>, bool> seen_;
};

}  // namespace lietrees
