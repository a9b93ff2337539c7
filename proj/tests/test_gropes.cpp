#include <algorithm>

#include "doctest.h"
#include "lietrees/core/expr.hpp"
#include "lietrees/gropes/gropes.hpp"
#include "lietrees/relations/one_loop.hpp"
#include "lietrees/relations/relation_set.hpp"
#include "test_util.hpp"

using namespace lietrees;
using testutil::error_code;

namespace {

GroupModelPtr trivial() { return std::make_shared<const GroupModel>(GroupModel::trivial()); }
GroupModelPtr z2() { return std::make_shared<const GroupModel>(GroupModel::cyclic(2)); }

GropeEncoding plain(const std::string& tree, std::vector<int> signs, const GroupModelPtr& model) {
  const Tree t = parse_tree(tree);
  return make_grope(t, std::move(signs), std::vector<GroupElement>(t.leaf_count(), model->identity()), model);
}

}  // namespace

TEST_CASE("underlying tree of single gropes") {
  // cap signs +1, -1 on the degree-2 grope
  const auto u = ut(plain("[1,2]", {1, -1}, trivial()));
  CHECK(u.sign == -1);
  CHECK(u.tree.tree().str() == "[1,2]");

  const auto model = z2();
  const GroupElement x = model->parse("1");
  const auto g = make_grope(parse_tree("[1,2]"), {1, 1}, {x, model->identity()}, model);
  const auto ug = ut(g);
  CHECK(ug.sign == 1);
  CHECK(ug.tree.decoration(1) == x);
  CHECK(ug.tree.decoration(2) == model->identity());

  CHECK(ut(plain("[[1,2],3]", {1, 1, 1}, trivial())).sign == 1);
  CHECK(error_code([] { plain("[1,2]", {1, 2}, trivial()); }).has_value());
  CHECK(error_code([] { plain("[1,3]", {1, 1}, trivial()); }).has_value());
  CHECK(error_code([&] { make_grope(parse_tree("[1,2]"), {1, 1}, {GroupElement{{5}}, x}, model); }).has_value());
}

TEST_CASE("forests") {
  const auto m = trivial();
  ForestEncoding single{2, m, {plain("[1,2]", {1, 1}, m)}};
  CHECK(forest_ut(single).size() == 1);
  ForestEncoding cancel{2, m, {plain("[1,2]", {1, 1}, m), plain("[1,2]", {-1, 1}, m)}};
  CHECK(forest_ut(cancel).empty());

  ForestEncoding a{3, m, {plain("[1,[2,3]]", {1, -1, 1}, m)}};
  ForestEncoding b{3, m, {plain("[[1,2],3]", {1, 1, 1}, m), plain("[2,[1,3]]", {-1, 1, 1}, m)}};
  CHECK(forest_ut(concat(a, b)) == forest_ut(a) + forest_ut(b));

  ForestEncoding mixed{2, m, {plain("[1,2]", {1, 1}, m), plain("[1,2]", {1, 1}, z2())}};
  CHECK(error_code([&] { forest_ut(mixed); }) == Errc::ModelMismatch);
}

TEST_CASE("realize is a section of forest_ut") {
  const auto model = z2();
  const auto s = parse_decorated_sum("2*[1{1},2] - [2,1{1}] + [1,2{1}]", model);
  const auto f = realize(s, 2, model);
  CHECK(f.gropes.size() == 4);
  CHECK(forest_ut(f) == s);
  const auto ctx = decorated_lie_context(2, model);
  for (const auto& b : ctx.basis()) {
    const DecoratedTreeSum target(b);
    CHECK(forest_ut(realize(target, 2, model)) == target);
    const auto c = class_in_lie(target, ctx);
    CHECK(std::count(c.begin(), c.end(), Integer(1)) == 1);
    CHECK(std::count(c.begin(), c.end(), Integer(0)) == static_cast<long>(c.size()) - 1);
  }
}

TEST_CASE("forest json round trip") {
  const auto doc = nlohmann::json::parse(
      R"({"n":2,"group":{"kind":"finite","table":[[0,1],[1,0]],"inverse":[0,1]},)"
      R"("gropes":[{"tree":"[1,2]","signs":[1,-1],"decorations":["","1"]}]})");
  const auto f = forest_from_json(doc);
  CHECK(f.n == 2);
  REQUIRE(f.gropes.size() == 1);
  CHECK(ut(f.gropes[0]).sign == -1);
  const auto again = forest_from_json(to_json(f));
  CHECK(forest_ut(again) == forest_ut(f));
  CHECK(error_code([] { forest_from_json(nlohmann::json::parse(R"({"n":2})")); }).has_value());
}

TEST_CASE("classes in Lie_pi and A^T") {
  const auto m = trivial();
  const auto ctx = decorated_lie_context(2, m);
  const auto u = ut(plain("[1,2]", {1, -1}, m));
  CHECK(class_in_lie(u.to_sum(), ctx) == std::vector<Integer>{-1});
  // AS-related pair with identical data
  const auto v = ut(plain("[2,1]", {1, -1}, m));
  CHECK(class_in_lie(u.to_sum() + v.to_sum(), ctx) == std::vector<Integer>{0});

  const auto model = z2();
  const auto zctx = decorated_lie_context(2, model);
  const auto x = model->parse("1");
  const DecoratedTree target(parse_tree("[1,2]"), std::vector<GroupElement>{model->identity(), x}, model);
  const auto pos = std::find(zctx.basis().begin(), zctx.basis().end(), target) - zctx.basis().begin();
  const auto c = class_in_lie(DecoratedTreeSum(target), zctx);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == (static_cast<long>(i) == pos ? 1 : 0));

  // flipping one cap sign negates the class
  for (const auto& t : enumerate_trees(label_range(3))) {
    const auto ctx3 = decorated_lie_context(3, m);
    const auto up = class_in_lie(ut(plain(t.str(), {1, 1, 1}, m)).to_sum(), ctx3);
    auto down = class_in_lie(ut(plain(t.str(), {1, -1, 1}, m)).to_sum(), ctx3);
    for (auto& e : down) e = -e;
    CHECK(up == down);
  }

  CHECK(project_at(parse_tree_sum("1"), 1) == std::vector<Integer>{});
  const auto p2 = project_at(parse_tree_sum("[1,2]"), 2);
  REQUIRE(p2.size() == 1);
  CHECK(abs(p2[0]) == 1);
  for (const auto& r : stu2_relations(4).vectors)
    for (const auto& e : project_at(r, 4)) CHECK(e == 0);
}

TEST_CASE("classes are invariant under AS and IHX moves") {
  const auto m = trivial();
  for (int n = 2; n <= 4; ++n) {
    const auto ctx = decorated_lie_context(n, m);
    for (const auto& rel : lie_relations(label_range(n)).vectors) {
      DecoratedTreeSum lifted;
      for (const auto& [t, c] : rel) lifted.add(DecoratedTree::undecorated(t, m), c);
      for (const auto& e : class_in_lie(lifted, ctx)) CHECK(e == 0);
    }
  }
}
