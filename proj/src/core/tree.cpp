#include "lietrees/core/tree.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lietrees/core/errors.hpp"

namespace lietrees {

namespace {

std::size_t prefix_subtree_end(std::span<const int> prefix, std::size_t pos) {
  std::size_t need = 1;
  for (std::size_t i = pos; i < prefix.size(); ++i) {
    need -= 1;
    if (prefix[i] == 0) need += 2;
    if (need == 0) return i + 1;
  }
  throw Error(Errc::InvalidArgument, "truncated tree encoding");
}

void append_str(std::span<const int> prefix, std::size_t& pos, std::string& out) {
  if (prefix[pos] != 0) {
    out += std::to_string(prefix[pos++]);
    return;
  }
  ++pos;
  out += '[';
  append_str(prefix, pos, out);
  out += ',';
  append_str(prefix, pos, out);
  out += ']';
}

}  // namespace

Tree Tree::leaf(int label) {
  if (label < 1) throw Error(Errc::InvalidArgument, "leaf labels must be positive");
  return Tree({label});
}

Tree Tree::graft(const Tree& first, const Tree& second) {
  auto a = first.label_set();
  auto b = second.label_set();
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty()) {
    throw Error(Errc::LabelClash, "label " + std::to_string(common.front()) +
                                      " appears on both sides of a graft");
  }
  std::vector<int> p;
  p.reserve(first.prefix_.size() + second.prefix_.size() + 1);
  p.push_back(0);
  p.insert(p.end(), first.prefix_.begin(), first.prefix_.end());
  p.insert(p.end(), second.prefix_.begin(), second.prefix_.end());
  return Tree(std::move(p));
}

int Tree::label() const {
  if (!is_leaf()) throw Error(Errc::InvalidArgument, "label() on an internal node");
  return prefix_.front();
}

Tree Tree::first() const {
  if (is_leaf()) throw Error(Errc::InvalidArgument, "a leaf has no subtrees");
  return subtree(1);
}

Tree Tree::second() const {
  if (is_leaf()) throw Error(Errc::InvalidArgument, "a leaf has no subtrees");
  return subtree(subtree_end(1));
}

std::vector<int> Tree::leaves() const {
  std::vector<int> out;
  out.reserve(leaf_count());
  for (int v : prefix_)
    if (v != 0) out.push_back(v);
  return out;
}

std::vector<int> Tree::label_set() const {
  auto out = leaves();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> Tree::internal_nodes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < prefix_.size(); ++i)
    if (prefix_[i] == 0) out.push_back(i);
  return out;
}

std::size_t Tree::subtree_end(std::size_t pos) const { return prefix_subtree_end(prefix_, pos); }

Tree Tree::subtree(std::size_t pos) const {
  auto end = subtree_end(pos);
  return Tree(std::vector<int>(prefix_.begin() + static_cast<std::ptrdiff_t>(pos),
                               prefix_.begin() + static_cast<std::ptrdiff_t>(end)));
}

Tree Tree::with_subtree(std::size_t pos, const Tree& replacement) const {
  auto end = subtree_end(pos);
  std::vector<int> p;
  p.reserve(prefix_.size() - (end - pos) + replacement.prefix_.size());
  p.insert(p.end(), prefix_.begin(), prefix_.begin() + static_cast<std::ptrdiff_t>(pos));
  p.insert(p.end(), replacement.prefix_.begin(), replacement.prefix_.end());
  p.insert(p.end(), prefix_.begin() + static_cast<std::ptrdiff_t>(end), prefix_.end());
  return Tree(std::move(p));
}

Tree Tree::swapped_at(std::size_t pos) const {
  if (prefix_.at(pos) != 0) throw Error(Errc::InvalidArgument, "swap at a leaf");
  auto mid = subtree_end(pos + 1);
  auto end = subtree_end(mid);
  std::vector<int> p = prefix_;
  std::rotate(p.begin() + static_cast<std::ptrdiff_t>(pos + 1),
              p.begin() + static_cast<std::ptrdiff_t>(mid),
              p.begin() + static_cast<std::ptrdiff_t>(end));
  return Tree(std::move(p));
}

Tree Tree::relabeled(const std::function<int(int)>& map) const {
  std::vector<int> p = prefix_;
  for (int& v : p)
    if (v != 0) v = map(v);
  return canonicalize_tree(p);
}

std::string Tree::str() const {
  std::string out;
  std::size_t pos = 0;
  append_str(prefix_, pos, out);
  return out;
}

std::size_t TreeHash::operator()(const Tree& t) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : t.prefix()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Tree canonicalize_tree(std::span<const int> prefix) {
  if (prefix.empty()) throw Error(Errc::InvalidArgument, "empty tree encoding");
  if (prefix_subtree_end(prefix, 0) != prefix.size())
    throw Error(Errc::InvalidArgument, "trailing data after tree encoding");
  std::set<int> seen;
  for (int v : prefix) {
    if (v < 0) throw Error(Errc::InvalidArgument, "negative leaf label");
    if (v == 0) continue;
    if (!seen.insert(v).second)
      throw Error(Errc::DuplicateLeaf, "leaf label " + std::to_string(v) + " repeats");
  }
  return Tree(std::vector<int>(prefix.begin(), prefix.end()));
}

namespace {

// Trees over the labels selected by `mask` (bits index into `labels`).
const std::vector<Tree>& trees_for_mask(std::span<const int> labels, unsigned mask,
                                        std::map<unsigned, std::vector<Tree>>& memo) {
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  std::vector<Tree> out;
  if ((mask & (mask - 1)) == 0) {
    unsigned bit = 0;
    while (!((mask >> bit) & 1u)) ++bit;
    out.push_back(Tree::leaf(labels[bit]));
  } else {
    for (unsigned sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
      const auto& firsts = trees_for_mask(labels, sub, memo);
      const auto& seconds = trees_for_mask(labels, mask & ~sub, memo);
      for (const auto& a : firsts)
        for (const auto& b : seconds) out.push_back(Tree::graft(a, b));
    }
  }
  return memo.emplace(mask, std::move(out)).first->second;
}

}  // namespace

std::vector<Tree> enumerate_trees(std::span<const int> labels) {
  if (labels.empty()) throw Error(Errc::EmptyLabelSet, "cannot enumerate trees over no labels");
  std::set<int> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) throw Error(Errc::DuplicateLeaf, "label set has repeats");
  if (labels.size() > 16) throw Error(Errc::InvalidArgument, "label set too large to enumerate");
  std::vector<int> sorted(distinct.begin(), distinct.end());
  for (int v : sorted)
    if (v < 1) throw Error(Errc::InvalidArgument, "leaf labels must be positive");

  std::map<unsigned, std::vector<Tree>> memo;
  unsigned full = (1u << sorted.size()) - 1;
  std::vector<Tree> trees = trees_for_mask(sorted, full, memo);

  std::vector<std::pair<std::string, Tree>> keyed;
  keyed.reserve(trees.size());
  for (auto& t : trees) keyed.emplace_back(t.str(), std::move(t));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Tree> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

std::vector<int> label_range(int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) out.push_back(i);
  return out;
}

bool same_space(const Tree& a, const Tree& b) {
  return a.leaf_count() == b.leaf_count() && a.label_set() == b.label_set();
}

}  // namespace lietrees
