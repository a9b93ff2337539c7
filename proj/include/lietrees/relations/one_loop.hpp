#pragma once

#include <string>
#include <vector>

#include "lietrees/core/formal_sum.hpp"
#include "lietrees/relations/relation_set.hpp"

namespace lietrees {

/// Planar binary tree whose leaves are legs 0, 1, ...; preorder with -1 for
/// an internal vertex and the leg number otherwise. Cyclic order at an
/// internal vertex is (edge towards the cycle, first subtree, second subtree).
using LegTree = std::vector<int>;

/// A vertex on the loop together with the branch hanging off it. With
/// `forward` set the cyclic order is (branch, next cycle edge, previous
/// cycle edge), otherwise (branch, previous, next).
struct CycleVertex {
  LegTree branch;
  bool forward = true;
};

/// Uni-trivalent graph with exactly one loop and legs labelled 0..legs-1.
/// The loop runs through cycle[0], cycle[1], ... and back to cycle[0].
class OneLoopDiagram {
 public:
  explicit OneLoopDiagram(std::vector<CycleVertex> cycle);

  const std::vector<CycleVertex>& cycle() const noexcept { return cycle_; }
  int leg_count() const noexcept { return legs_; }
  /// Legs whose trivalent neighbour lies on the loop.
  std::vector<int> loop_adjacent_legs() const;
  std::string str() const;

  // Half-edge graph. Nodes 0..legs-1 are the legs; the rest are trivalent.
  struct Graph {
    std::vector<int> node_of;                // per half-edge
    std::vector<int> twin;                   // per half-edge
    std::vector<std::vector<int>> halfedges;  // per node, in cyclic order
    std::vector<char> on_loop;               // per node
  };
  const Graph& graph() const noexcept { return graph_; }

 private:
  std::vector<CycleVertex> cycle_;
  int legs_ = 0;
  Graph graph_;
};

/// STU at the loop vertex next to `leg`: parallel minus crossed resolution,
/// as a sum over Tree(legs) rooted at leg 0. In the parallel term the
/// second cycle edge (counting from the leg) receives label `leg` and the
/// first receives `leg + 1`; larger labels shift up by one.
/// Throws NotResolvable unless that vertex is on the loop and `leg` is its
/// whole branch.
TreeSum stu_resolve(const OneLoopDiagram& d, int leg);

/// One-loop diagrams with `legs` legs where leg 0 is a branch of its own.
/// Cycle vertices all carry forward orientation and every branch is one
/// representative per antisymmetry class, which suffices modulo AS.
std::vector<OneLoopDiagram> rooted_one_loop_diagrams(int legs);

/// All one-loop diagrams with `legs` legs (leg 0 anywhere), same
/// normalization of orientations.
std::vector<OneLoopDiagram> general_one_loop_diagrams(int legs);

/// STU(D, v_k) - STU(D, v_0) over the rooted diagrams with n legs, as vectors
/// in Tree(n). For n = 1 this is the single chord relation.
RelationSet stu2_relations(int n);

/// STU(D, v_j) - STU(D, v_k) for every pair of loop-adjacent legs of every
/// diagram, root position unrestricted.
RelationSet general_stu2_relations(int n);

}  // namespace lietrees
