#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lietrees/core/group_model.hpp"
#include "lietrees/core/tree.hpp"

namespace lietrees {

using GroupModelPtr = std::shared_ptr<const GroupModel>;

/// A tree whose leaf edges carry elements of a fixed GroupModel.
class DecoratedTree {
 public:
  /// `decorations` must be total on the tree's leaf set and defined nowhere else.
  DecoratedTree(Tree tree, const std::map<int, GroupElement>& decorations, GroupModelPtr model);
  /// Decorations listed in increasing label order.
  DecoratedTree(Tree tree, std::vector<GroupElement> by_sorted_label, GroupModelPtr model);

  /// Every leaf decorated by the identity.
  static DecoratedTree undecorated(Tree tree, GroupModelPtr model);

  const Tree& tree() const noexcept { return tree_; }
  const GroupModelPtr& model() const noexcept { return model_; }
  const GroupElement& decoration(int label) const;
  const std::vector<GroupElement>& decorations_by_sorted_label() const noexcept { return decorations_; }

  std::string str() const;

  friend bool operator==(const DecoratedTree& a, const DecoratedTree& b) {
    return a.tree_ == b.tree_ && a.decorations_ == b.decorations_;
  }
  friend std::strong_ordering operator<=>(const DecoratedTree& a, const DecoratedTree& b) {
    if (auto c = a.tree_ <=> b.tree_; c != 0) return c;
    return a.decorations_ <=> b.decorations_;
  }

 private:
  Tree tree_;
  std::vector<GroupElement> decorations_;
  GroupModelPtr model_;
};

bool same_model(const GroupModelPtr& a, const GroupModelPtr& b);
bool same_space(const DecoratedTree& a, const DecoratedTree& b);

}  // namespace lietrees
