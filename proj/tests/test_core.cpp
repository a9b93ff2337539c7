#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "doctest.h"
#include "lietrees/core/expr.hpp"
#include "lietrees/core/formal_sum.hpp"
#include "lietrees/core/group_model.hpp"
#include "lietrees/core/tree.hpp"
#include "test_util.hpp"

using namespace lietrees;
using testutil::error_code;

namespace {

Tree L(int i) { return Tree::leaf(i); }

// Every bracketing of `labels` in the given order, as strings.
std::vector<std::string> bracketings(const std::vector<int>& labels, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return {std::to_string(labels[lo])};
  std::vector<std::string> out;
  for (std::size_t mid = lo + 1; mid < hi; ++mid)
    for (const auto& a : bracketings(labels, lo, mid))
      for (const auto& b : bracketings(labels, mid, hi)) out.push_back("[" + a + "," + b + "]");
  return out;
}

}  // namespace

TEST_CASE("graft keeps planar order") {
  const Tree t = Tree::graft(L(1), L(2));
  CHECK(t.str() == "[1,2]");
  CHECK(Tree::graft(L(2), L(1)) != t);
  CHECK(t.first() == L(1));
  CHECK(t.second() == L(2));
  CHECK(Tree::graft(L(1), Tree::graft(L(2), L(3))).str() == "[1,[2,3]]");
  CHECK(error_code([] { Tree::graft(L(1), L(1)); }) == Errc::LabelClash);
}

TEST_CASE("canonicalize validates the encoding") {
  const std::vector<int> ok{0, 2, 1};
  CHECK(canonicalize_tree(ok) == Tree::graft(L(2), L(1)));
  const std::vector<int> dup{0, 1, 1};
  CHECK(error_code([&] { canonicalize_tree(dup); }) == Errc::DuplicateLeaf);
  const std::vector<int> truncated{0, 1};
  CHECK(error_code([&] { canonicalize_tree(truncated); }).has_value());
}

TEST_CASE("tree surgery") {
  const Tree t = parse_tree("[[1,2],3]");
  CHECK(t.internal_nodes() == std::vector<std::size_t>{0, 1});
  CHECK(t.swapped_at(1).str() == "[[2,1],3]");
  CHECK(t.swapped_at(0).str() == "[3,[1,2]]");
  CHECK(t.leaves() == std::vector<int>{1, 2, 3});
  CHECK(t.subtree(1).str() == "[1,2]");
  CHECK(t.with_subtree(1, parse_tree("[2,1]")).str() == "[[2,1],3]");
  CHECK(t.relabeled([](int i) { return 4 - i; }).str() == "[[3,2],1]");
}

TEST_CASE("enumerate_trees matches brute force over bracketings and orders") {
  CHECK(enumerate_trees(label_range(1)).size() == 1);
  CHECK(error_code([] { enumerate_trees(std::vector<int>{}); }) == Errc::EmptyLabelSet);
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> perm = label_range(n);
    std::set<std::string> brute;
    do {
      for (auto& s : bracketings(perm, 0, perm.size())) brute.insert(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::set<std::string> ours;
    for (const auto& t : enumerate_trees(label_range(n))) ours.insert(t.str());
    CHECK(ours == brute);
  }
  CHECK(enumerate_trees(label_range(2)).size() == 2);
  CHECK(enumerate_trees(label_range(3)).size() == 12);
}

TEST_CASE("formal sums") {
  const Tree a = parse_tree("[1,2]"), b = parse_tree("[2,1]");
  TreeSum t(a);
  CHECK((t + (-t)).empty());
  CHECK((TreeSum(a, 2) + TreeSum(a, 3)).coefficient(a) == 5);
  const TreeSum sum = (TreeSum(a) + TreeSum(b)) + (TreeSum(a) - TreeSum(b));
  CHECK(sum == TreeSum(a, 2));
  CHECK(error_code([&] { t + TreeSum(parse_tree("[1,3]")); }) == Errc::ModelMismatch);
}

TEST_CASE("expression grammar") {
  CHECK(parse_tree("[1,[2,3]]") == Tree::graft(L(1), Tree::graft(L(2), L(3))));
  const TreeSum s = parse_tree_sum("3*[1,2] - [2,1]");
  CHECK(s.coefficient(parse_tree("[1,2]")) == 3);
  CHECK(s.coefficient(parse_tree("[2,1]")) == -1);
  CHECK(parse_tree_sum("0").empty());
  CHECK(parse_tree_sum("-[1,2]").coefficient(parse_tree("[1,2]")) == -1);
  CHECK(parse_tree_sum(print_expr(s)) == s);
  CHECK(error_code([] { parse_tree("[1,2"); }) == Errc::SyntaxError);
  CHECK(error_code([] { parse_tree_sum("[1{a},2]"); }) == Errc::UnknownGroupElement);

  auto free2 = std::make_shared<const GroupModel>(GroupModel::free(2));
  const auto d = parse_decorated_sum("[1{a},2{ab}]", free2);
  REQUIRE(d.size() == 1);
  const DecoratedTree& dt = d.begin()->first;
  CHECK(dt.decoration(1) == GroupElement{{1}});
  CHECK(dt.decoration(2) == GroupElement{{1, 2}});
  CHECK(parse_decorated_sum(print_expr(d), free2) == d);
}

TEST_CASE("group models") {
  const GroupModel z3 = GroupModel::cyclic(3);
  CHECK(z3.order() == 3u);
  const auto els = z3.elements();
  for (const auto& x : els) {
    CHECK(z3.is_identity(z3.multiply(x, z3.inverse(x))));
    for (const auto& y : els)
      for (const auto& z : els) CHECK(z3.multiply(z3.multiply(x, y), z) == z3.multiply(x, z3.multiply(y, z)));
  }
  CHECK(z3.parse("1.2") == z3.identity());

  const GroupModel f = GroupModel::free(2);
  CHECK(f.is_identity(f.multiply(f.parse("ab"), f.parse("BA"))));
  CHECK(f.format(f.parse("aB")) == "aB");
  CHECK(error_code([&] { f.elements(); }) == Errc::InfiniteEnumeration);
  // 1 + 4 + 12 reduced words of length <= 2
  CHECK(f.elements(2).size() == 17);

  CHECK(error_code([] { GroupModel::finite({{0, 1}, {1, 1}}, {0, 1}); }) == Errc::InvalidGroupModel);
  CHECK(GroupModel::from_json(z3.to_json()) == z3);
  CHECK(error_code([&] { z3.parse("7"); }) == Errc::UnknownGroupElement);
}
