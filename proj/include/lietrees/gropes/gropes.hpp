#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "lietrees/core/formal_sum.hpp"
#include "lietrees/relations/quotient_context.hpp"

namespace lietrees {

/// Combinatorial data of a capped grope: the modelling tree over {1..n},
/// the cap intersection signs and the leaf decorations. Signs and
/// decorations are listed in label order.
struct GropeEncoding {
  Tree tree;
  std::vector<int> signs;
  std::vector<GroupElement> decorations;
  GroupModelPtr model;
};

/// Validates that signs are +-1, both lists cover the leaves, the tree uses
/// labels 1..n and every decoration belongs to the model.
GropeEncoding make_grope(Tree tree, std::vector<int> signs, std::vector<GroupElement> decorations,
                         GroupModelPtr model);

struct SignedDecoratedTree {
  int sign = 1;
  DecoratedTree tree;

  DecoratedTreeSum to_sum() const { return DecoratedTreeSum(tree, sign); }
};

/// Product of the signs times the decorated tree.
SignedDecoratedTree ut(const GropeEncoding& g);

struct ForestEncoding {
  int n = 0;
  GroupModelPtr model;
  std::vector<GropeEncoding> gropes;
};

/// Sum of ut over the constituents. Throws ModelMismatch when a grope uses
/// another group model or label set.
DecoratedTreeSum forest_ut(const ForestEncoding& f);

/// Concatenation of two forests over the same n and model.
ForestEncoding concat(const ForestEncoding& a, const ForestEncoding& b);

/// A forest with forest_ut(realize(s)) == s: |c| gropes per term c * T,
/// the first cap sign carrying the sign of c.
ForestEncoding realize(const DecoratedTreeSum& s, int n, const GroupModelPtr& model);

/// {"n":2,"group":{"kind":"trivial"},"gropes":[{"tree":"[1,2]","signs":[1,-1],"decorations":["",""]}]}
ForestEncoding forest_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const ForestEncoding& f);

/// Coordinates of s in Lie_pi(n).
std::vector<Integer> class_in_lie(const DecoratedTreeSum& s, const DecoratedQuotientContext& ctx);

/// Coordinates of an undecorated sum in A^T_n.
std::vector<Integer> project_at(const TreeSum& s, const QuotientContext& jacobi_ctx);
std::vector<Integer> project_at(const TreeSum& s, int n);

}  // namespace lietrees
