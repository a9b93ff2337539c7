#include "lietrees/core/decorated_tree.hpp"

#include <algorithm>

#include "lietrees/core/errors.hpp"

namespace lietrees {

DecoratedTree::DecoratedTree(Tree tree, const std::map<int, GroupElement>& decorations,
                             GroupModelPtr model)
    : tree_(std::move(tree)), model_(std::move(model)) {
  if (!model_) throw Error(Errc::InvalidArgument, "decorated tree without a group model");
  const auto labels = tree_.label_set();
  if (decorations.size() != labels.size())
    throw Error(Errc::InvalidArgument, "decoration must be defined exactly on the leaf set");
  decorations_.reserve(labels.size());
  for (int l : labels) {
    auto it = decorations.find(l);
    if (it == decorations.end())
      throw Error(Errc::InvalidArgument, "leaf " + std::to_string(l) + " has no decoration");
    if (!model_->contains(it->second))
      throw Error(Errc::UnknownGroupElement, "decoration of leaf " + std::to_string(l) +
                                                 " is not an element of the model");
    decorations_.push_back(it->second);
  }
}

DecoratedTree::DecoratedTree(Tree tree, std::vector<GroupElement> by_sorted_label, GroupModelPtr model)
    : tree_(std::move(tree)), decorations_(std::move(by_sorted_label)), model_(std::move(model)) {
  if (!model_) throw Error(Errc::InvalidArgument, "decorated tree without a group model");
  if (decorations_.size() != tree_.leaf_count())
    throw Error(Errc::InvalidArgument, "decoration must be defined exactly on the leaf set");
  for (const auto& g : decorations_)
    if (!model_->contains(g))
      throw Error(Errc::UnknownGroupElement, "decoration is not an element of the model");
}

DecoratedTree DecoratedTree::undecorated(Tree tree, GroupModelPtr model) {
  std::vector<GroupElement> decs(tree.leaf_count(), model->identity());
  return DecoratedTree(std::move(tree), std::move(decs), model);
}

const GroupElement& DecoratedTree::decoration(int label) const {
  const auto labels = tree_.label_set();
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label)
    throw Error(Errc::InvalidArgument, "label " + std::to_string(label) + " is not a leaf");
  return decorations_[static_cast<std::size_t>(it - labels.begin())];
}

namespace {

void append_decorated(std::span<const int> prefix, std::size_t& pos, const DecoratedTree& t,
                      std::string& out) {
  if (prefix[pos] != 0) {
    const int label = prefix[pos++];
    out += std::to_string(label);
    const auto& g = t.decoration(label);
    if (!t.model()->is_identity(g)) out += "{" + t.model()->format(g) + "}";
    return;
  }
  ++pos;
  out += '[';
  append_decorated(prefix, pos, t, out);
  out += ',';
  append_decorated(prefix, pos, t, out);
  out += ']';
}

}  // namespace

std::string DecoratedTree::str() const {
  std::string out;
  std::size_t pos = 0;
  append_decorated(tree_.prefix(), pos, *this, out);
  return out;
}

bool same_model(const GroupModelPtr& a, const GroupModelPtr& b) {
  return a == b || (a && b && *a == *b);
}

bool same_space(const DecoratedTree& a, const DecoratedTree& b) {
  return same_model(a.model(), b.model()) && same_space(a.tree(), b.tree());
}

}  // namespace lietrees
