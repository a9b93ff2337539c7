#include "lietrees/relations/one_loop.hpp"

#include <algorithm>
#include <functional>

#include "lietrees/core/errors.hpp"

namespace lietrees {

namespace {

void append_leg_tree(const LegTree& t, std::size_t& pos, std::string& out) {
  if (pos >= t.size()) throw Error(Errc::InvalidArgument, "truncated branch encoding");
  if (t[pos] >= 0) {
    out += std::to_string(t[pos++]);
    return;
  }
  ++pos;
  out += '[';
  append_leg_tree(t, pos, out);
  out += ',';
  append_leg_tree(t, pos, out);
  out += ']';
}

struct Builder {
  OneLoopDiagram::Graph& g;

  int add_node(int degree, bool loop) {
    const int id = static_cast<int>(g.halfedges.size());
    std::vector<int> hs;
    for (int i = 0; i < degree; ++i) {
      hs.push_back(static_cast<int>(g.node_of.size()));
      g.node_of.push_back(id);
      g.twin.push_back(-1);
    }
    g.halfedges.push_back(std::move(hs));
    g.on_loop.push_back(loop ? 1 : 0);
    return id;
  }
  void connect(int a, int b) {
    g.twin[static_cast<std::size_t>(a)] = b;
    g.twin[static_cast<std::size_t>(b)] = a;
  }
  // Returns the half-edge of the branch's top node that points towards the loop.
  int branch(const LegTree& t, std::size_t& pos) {
    if (pos >= t.size()) throw Error(Errc::InvalidArgument, "truncated branch encoding");
    const int v = t[pos++];
    if (v >= 0) return g.halfedges[static_cast<std::size_t>(v)][0];
    const int x = add_node(3, false);
    const auto hs = g.halfedges[static_cast<std::size_t>(x)];
    connect(hs[1], branch(t, pos));
    connect(hs[2], branch(t, pos));
    return hs[0];
  }
};

}  // namespace

OneLoopDiagram::OneLoopDiagram(std::vector<CycleVertex> cycle) : cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw Error(Errc::InvalidArgument, "a loop needs at least one vertex");
  std::vector<int> legs;
  for (const auto& c : cycle_)
    for (int v : c.branch)
      if (v >= 0) legs.push_back(v);
  std::sort(legs.begin(), legs.end());
  for (std::size_t i = 0; i < legs.size(); ++i)
    if (legs[i] != static_cast<int>(i)) throw Error(Errc::InvalidArgument, "legs must be 0..n-1, each once");
  legs_ = static_cast<int>(legs.size());

  Builder b{graph_};
  for (int i = 0; i < legs_; ++i) b.add_node(1, false);
  const std::size_t m = cycle_.size();
  std::vector<int> next(m), prev(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int x = b.add_node(3, true);
    const auto hs = graph_.halfedges[static_cast<std::size_t>(x)];
    std::size_t pos = 0;
    b.connect(hs[0], b.branch(cycle_[i].branch, pos));
    if (pos != cycle_[i].branch.size()) throw Error(Errc::InvalidArgument, "trailing data in branch encoding");
    next[i] = cycle_[i].forward ? hs[1] : hs[2];
    prev[i] = cycle_[i].forward ? hs[2] : hs[1];
  }
  for (std::size_t i = 0; i < m; ++i) b.connect(next[i], prev[(i + 1) % m]);
}

std::vector<int> OneLoopDiagram::loop_adjacent_legs() const {
  std::vector<int> out;
  for (const auto& c : cycle_)
    if (c.branch.size() == 1) out.push_back(c.branch[0]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string OneLoopDiagram::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < cycle_.size(); ++i) {
    if (i) out += ' ';
    std::size_t pos = 0;
    append_leg_tree(cycle_[i].branch, pos, out);
    if (!cycle_[i].forward) out += '*';
  }
  return out + ")";
}

TreeSum stu_resolve(const OneLoopDiagram& d, int leg) {
  const auto& g = d.graph();
  if (leg < 0 || leg >= d.leg_count()) throw Error(Errc::NotResolvable, "no leg " + std::to_string(leg));
  const int hl = g.halfedges[static_cast<std::size_t>(leg)][0];
  const int enter = g.twin[static_cast<std::size_t>(hl)];
  const int v = g.node_of[static_cast<std::size_t>(enter)];
  if (!g.on_loop[static_cast<std::size_t>(v)])
    throw Error(Errc::NotResolvable, "leg " + std::to_string(leg) + " does not meet the loop");
  const auto& vh = g.halfedges[static_cast<std::size_t>(v)];
  const std::size_t i = static_cast<std::size_t>(std::find(vh.begin(), vh.end(), enter) - vh.begin());
  const int ha = vh[(i + 1) % 3];
  const int hb = vh[(i + 2) % 3];

  auto resolve = [&](bool parallel) {
    const int label_b = parallel ? leg : leg + 1;
    const int label_a = parallel ? leg + 1 : leg;
    std::function<Tree(int)> build = [&](int h) -> Tree {
      const int x = g.node_of[static_cast<std::size_t>(h)];
      if (x == v) return Tree::leaf(h == ha ? label_a : label_b);
      if (x < d.leg_count()) return Tree::leaf(x > leg ? x + 1 : x);
      const auto& hs = g.halfedges[static_cast<std::size_t>(x)];
      const std::size_t k = static_cast<std::size_t>(std::find(hs.begin(), hs.end(), h) - hs.begin());
      return Tree::graft(build(g.twin[static_cast<std::size_t>(hs[(k + 1) % 3])]),
                         build(g.twin[static_cast<std::size_t>(hs[(k + 2) % 3])]));
    };
    int start;
    if (leg == 0)
      start = g.twin[static_cast<std::size_t>(label_a == 0 ? ha : hb)];
    else
      start = g.twin[static_cast<std::size_t>(g.halfedges[0][0])];
    return build(start);
  };

  TreeSum out(resolve(true));
  out.add(resolve(false), -1);
  return out;
}

namespace {

// One planar representative per antisymmetry class of trees over `legs`:
// at every vertex the first subtree holds the smallest leg.
std::vector<LegTree> representative_branches(const std::vector<int>& legs) {
  if (legs.size() == 1) return {LegTree{legs[0]}};
  std::vector<LegTree> out;
  const std::size_t k = legs.size();
  for (unsigned mask = 1; mask < (1u << k) - 1; ++mask) {
    if (!(mask & 1u)) continue;  // first side holds legs[0]
    std::vector<int> a, b;
    for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1u ? a : b).push_back(legs[i]);
    for (const auto& ta : representative_branches(a))
      for (const auto& tb : representative_branches(b)) {
        LegTree t{-1};
        t.insert(t.end(), ta.begin(), ta.end());
        t.insert(t.end(), tb.begin(), tb.end());
        out.push_back(std::move(t));
      }
  }
  return out;
}

// Ordered sequences of nonempty blocks covering `legs`, each block turned
// into every representative branch.
void branch_sequences(const std::vector<int>& legs, std::vector<CycleVertex>& current,
                      const std::function<void(const std::vector<CycleVertex>&)>& emit) {
  if (legs.empty()) {
    emit(current);
    return;
  }
  const std::size_t k = legs.size();
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> block, rest;
    for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1u ? block : rest).push_back(legs[i]);
    for (auto& t : representative_branches(block)) {
      current.push_back(CycleVertex{std::move(t), true});
      branch_sequences(rest, current, emit);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<OneLoopDiagram> rooted_one_loop_diagrams(int legs) {
  if (legs < 1) throw Error(Errc::InvalidArgument, "need at least one leg");
  std::vector<OneLoopDiagram> out;
  std::vector<int> rest;
  for (int i = 1; i < legs; ++i) rest.push_back(i);
  std::vector<CycleVertex> current{CycleVertex{LegTree{0}, true}};
  branch_sequences(rest, current, [&](const std::vector<CycleVertex>& c) { out.emplace_back(c); });
  return out;
}

std::vector<OneLoopDiagram> general_one_loop_diagrams(int legs) {
  if (legs < 1) throw Error(Errc::InvalidArgument, "need at least one leg");
  std::vector<OneLoopDiagram> out;
  std::vector<int> all;
  for (int i = 0; i < legs; ++i) all.push_back(i);
  // the block containing leg 0 comes first, fixing the rotation
  const std::size_t k = all.size();
  for (unsigned mask = 1; mask < (1u << k); mask += 2) {
    std::vector<int> block, rest;
    for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1u ? block : rest).push_back(all[i]);
    for (auto& t : representative_branches(block)) {
      std::vector<CycleVertex> current{CycleVertex{std::move(t), true}};
      branch_sequences(rest, current, [&](const std::vector<CycleVertex>& c) { out.emplace_back(c); });
    }
  }
  return out;
}

RelationSet stu2_relations(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be at least 1");
  RelationSet out{label_range(n), RelationFamily::STU2, {}};
  if (n == 1) {
    out.vectors.push_back(TreeSum(Tree::leaf(1)));
    return out;
  }
  RelationCollector<Tree> c;
  for (const auto& d : rooted_one_loop_diagrams(n)) {
    const auto adjacent = d.loop_adjacent_legs();
    const TreeSum base = stu_resolve(d, 0);
    for (int k : adjacent)
      if (k != 0) c.add(stu_resolve(d, k) - base);
  }
  out.vectors = c.take();
  return out;
}

RelationSet general_stu2_relations(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be at least 1");
  RelationSet out{label_range(n), RelationFamily::STU2, {}};
  if (n == 1) {
    out.vectors.push_back(TreeSum(Tree::leaf(1)));
    return out;
  }
  RelationCollector<Tree> c;
  for (const auto& d : general_one_loop_diagrams(n)) {
    const auto adjacent = d.loop_adjacent_legs();
    std::vector<TreeSum> resolved;
    for (int k : adjacent) resolved.push_back(stu_resolve(d, k));
    for (std::size_t i = 0; i < resolved.size(); ++i)
      for (std::size_t j = i + 1; j < resolved.size(); ++j) c.add(resolved[i] - resolved[j]);
  }
  out.vectors = c.take();
  return out;
}

}  // namespace lietrees
