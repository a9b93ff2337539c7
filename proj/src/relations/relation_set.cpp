#include "lietrees/relations/relation_set.hpp"

#include <algorithm>
#include <set>

#include "lietrees/core/expr.hpp"

namespace lietrees {

std::string family_tag(RelationFamily f) {
  switch (f) {
    case RelationFamily::AS: return "AS";
    case RelationFamily::IHX: return "IHX";
    case RelationFamily::STU2: return "STU2";
    case RelationFamily::AS_IHX: return "AS+IHX";
    case RelationFamily::AS_IHX_STU2: return "AS+IHX+STU2";
  }
  return "?";
}

template <class Key>
std::string BasicRelationSet<Key>::export_text() const {
  std::string out = "# " + family_tag(family) + "\n";
  for (const auto& v : vectors) out += print_expr(v) + "\n";
  return out;
}

template <class Key>
void RelationCollector<Key>::add(FormalSum<Key> v) {
  if (v.empty()) return;
  if (v.begin()->second < 0) v *= Integer(-1);
  if (seen_.emplace(v, true).second) vectors_.push_back(std::move(v));
}

template <class Key>
void merge_relations(BasicRelationSet<Key>& into, const BasicRelationSet<Key>& extra, RelationFamily family) {
  RelationCollector<Key> c;
  for (auto& v : into.vectors) c.add(std::move(v));
  for (const auto& v : extra.vectors) c.add(v);
  into.vectors = c.take();
  into.family = family;
}

template struct BasicRelationSet<Tree>;
template struct BasicRelationSet<DecoratedTree>;
template class RelationCollector<Tree>;
template class RelationCollector<DecoratedTree>;
template void merge_relations(RelationSet&, const RelationSet&, RelationFamily);
template void merge_relations(DecoratedRelationSet&, const DecoratedRelationSet&, RelationFamily);

namespace {

std::vector<int> checked_labels(std::span<const int> labels) {
  std::vector<int> out(labels.begin(), labels.end());
  std::sort(out.begin(), out.end());
  return out;
}

void add_as(const Tree& t, RelationCollector<Tree>& c) {
  for (std::size_t v : t.internal_nodes()) {
    TreeSum s(t);
    s.add(t.swapped_at(v), 1);
    c.add(std::move(s));
  }
}

void add_ihx(const Tree& t, RelationCollector<Tree>& c) {
  for (std::size_t v : t.internal_nodes()) {
    const Tree node = t.subtree(v);
    const Tree a = node.first();
    const Tree b = node.second();
    auto emit = [&](const Tree& g1, const Tree& g2, const Tree& g3) {
      TreeSum s;
      s.add(t.with_subtree(v, Tree::graft(g1, Tree::graft(g2, g3))), 1);
      s.add(t.with_subtree(v, Tree::graft(Tree::graft(g1, g2), g3)), -1);
      s.add(t.with_subtree(v, Tree::graft(g2, Tree::graft(g3, g1))), 1);
      c.add(std::move(s));
    };
    if (!b.is_leaf()) emit(a, b.first(), b.second());
    if (!a.is_leaf()) emit(a.first(), a.second(), b);
  }
}

}  // namespace

RelationSet as_relations(std::span<const int> labels) {
  RelationSet out{checked_labels(labels), RelationFamily::AS, {}};
  RelationCollector<Tree> c;
  for (const auto& t : enumerate_trees(labels)) add_as(t, c);
  out.vectors = c.take();
  return out;
}

RelationSet ihx_relations(std::span<const int> labels) {
  RelationSet out{checked_labels(labels), RelationFamily::IHX, {}};
  RelationCollector<Tree> c;
  for (const auto& t : enumerate_trees(labels)) add_ihx(t, c);
  out.vectors = c.take();
  return out;
}

RelationSet lie_relations(std::span<const int> labels) {
  RelationSet out{checked_labels(labels), RelationFamily::AS_IHX, {}};
  RelationCollector<Tree> c;
  const auto trees = enumerate_trees(labels);
  for (const auto& t : trees) add_as(t, c);
  for (const auto& t : trees) add_ihx(t, c);
  out.vectors = c.take();
  return out;
}

std::vector<std::vector<GroupElement>> decoration_tuples(std::size_t label_count, const GroupModel& model,
                                                         std::optional<std::size_t> max_word_len) {
  const auto elems = model.elements(max_word_len);
  std::vector<std::vector<GroupElement>> out{{}};
  for (std::size_t i = 0; i < label_count; ++i) {
    std::vector<std::vector<GroupElement>> next;
    next.reserve(out.size() * elems.size());
    for (const auto& prefix : out)
      for (const auto& g : elems) {
        auto v = prefix;
        v.push_back(g);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

DecoratedRelationSet decorated_relations(std::span<const int> labels, const GroupModelPtr& model,
                                         std::optional<std::size_t> max_word_len) {
  const auto tuples = decoration_tuples(labels.size(), *model, max_word_len);
  const RelationSet plain = labels.size() >= 1 ? lie_relations(labels) : RelationSet{};
  DecoratedRelationSet out{plain.labels, RelationFamily::AS_IHX, {}};
  RelationCollector<DecoratedTree> c;
  for (const auto& tuple : tuples)
    for (const auto& v : plain.vectors) {
      DecoratedTreeSum s;
      for (const auto& [t, k] : v) s.add(DecoratedTree(t, tuple, model), k);
      c.add(std::move(s));
    }
  out.vectors = c.take();
  return out;
}

}  // namespace lietrees
