#include <algorithm>
#include <random>

#include "doctest.h"
#include "lietrees/core/expr.hpp"
#include "lietrees/exactla/hermite.hpp"
#include "lietrees/freelie/assoc_poly.hpp"
#include "lietrees/freelie/normal_form.hpp"
#include "lietrees/relations/one_loop.hpp"
#include "lietrees/relations/quotient_context.hpp"
#include "lietrees/relations/relation_set.hpp"
#include "test_util.hpp"

using namespace lietrees;
using testutil::error_code;

namespace {

// The one-loop diagram with six legs drawn next to the STU^2 relation:
// loop v0 - A - v3 - C - E, legs 1 and 4 on a branch at A.
OneLoopDiagram figure_diagram() {
  return OneLoopDiagram({{{0}, true}, {{-1, 1, 4}, true}, {{3}, true}, {{5}, true}, {{2}, true}});
}

GroupModelPtr cyclic(int m) { return std::make_shared<const GroupModel>(GroupModel::cyclic(m)); }

}  // namespace

TEST_CASE("antisymmetry relations") {
  const auto r2 = as_relations(label_range(2));
  REQUIRE(r2.vectors.size() == 1);
  CHECK(r2.vectors[0] == parse_tree_sum("[1,2] + [2,1]"));
  // 12 trees x 2 nodes, each vector found twice
  CHECK(as_relations(label_range(3)).vectors.size() == 12);
  for (int n = 2; n <= 4; ++n)
    for (const auto& v : as_relations(label_range(n)).vectors)
      CHECK(omega2_expansion(v).is_zero());
}

TEST_CASE("IHX relations") {
  CHECK(ihx_relations(label_range(2)).vectors.empty());
  const auto r3 = ihx_relations(label_range(3));
  CHECK_FALSE(r3.vectors.empty());
  for (int n = 3; n <= 5; ++n)
    for (const auto& v : ihx_relations(label_range(n)).vectors) {
      CHECK(v.size() == 3);
      CHECK(omega2_expansion(v).is_zero());
    }
  const auto text = r3.export_text();
  CHECK(text.rfind("# IHX\n", 0) == 0);
}

TEST_CASE("decorated relations") {
  const auto z2 = cyclic(2);
  const auto r = decorated_relations(label_range(2), z2);
  CHECK(r.vectors.size() == 4);
  CHECK(decoration_tuples(2, *z2, std::nullopt).size() == 4);
  const auto triv = std::make_shared<const GroupModel>(GroupModel::trivial());
  CHECK(decorated_relations(label_range(3), triv).vectors.size() == lie_relations(label_range(3)).vectors.size());
  const auto ctx = decorated_lie_context(2, z2);
  CHECK(ctx.free_rank() == 4);
  CHECK(ctx.torsion().empty());
}

TEST_CASE("STU resolution reproduces the figure") {
  const auto d = figure_diagram();
  CHECK(d.leg_count() == 6);
  CHECK(d.loop_adjacent_legs() == std::vector<int>{0, 2, 3, 5});
  CHECK(stu_resolve(d, 3) == parse_tree_sum("[[[1,5],3],[[4,6],2]] - [[[1,5],4],[[3,6],2]]"));
  CHECK(stu_resolve(d, 0) == parse_tree_sum("[[[[1,[2,5]],4],6],3] - [[2,5],[4,[6,[3,1]]]]"));
  CHECK(error_code([&] { stu_resolve(d, 1); }) == Errc::NotResolvable);
}

TEST_CASE("STU on the two-vertex bubble") {
  const OneLoopDiagram bubble({{{0}, true}, {{1}, true}});
  CHECK(stu_resolve(bubble, 0) == parse_tree_sum("[1,2] - [2,1]"));
  // at leg 1 the two cycle edges trade places, giving the same sum
  CHECK(stu_resolve(bubble, 1) == parse_tree_sum("[1,2] - [2,1]"));
}

TEST_CASE("Jacobi tree groups") {
  const std::vector<std::size_t> frozen{0, 1, 1, 2, 3};
  for (int n = 1; n <= 5; ++n) {
    const auto ctx = jacobi_tree_context(n);
    CHECK(ctx.free_rank() == frozen[n - 1]);
    CHECK(ctx.torsion().empty());
  }
  CHECK(stu2_relations(1).vectors.size() == 1);
}

TEST_CASE("general STU^2 relations add nothing new") {
  for (int n = 2; n <= 4; ++n) {
    const auto ctx = jacobi_tree_context(n);
    for (const auto& v : general_stu2_relations(n).vectors)
      for (const auto& c : ctx.reduce(v)) CHECK(c == 0);
  }
}

TEST_CASE("Lie contexts") {
  for (int n = 1; n <= 5; ++n) {
    const auto ctx = lie_context(n);
    CHECK(ctx.torsion().empty());
    CHECK(ctx.free_rank() == left_normed_basis(label_range(n)).size());
    for (std::size_t i = 0; i < ctx.basis().size(); ++i) {
      const auto v = ctx.reduce(TreeSum(ctx.basis()[i]));
      for (std::size_t j = 0; j < v.size(); ++j) CHECK(v[j] == (i == j ? 1 : 0));
    }
    for (const auto& r : ctx.relations().vectors)
      for (const auto& c : ctx.reduce(r)) CHECK(c == 0);
  }
  const auto l2 = lie_context(2);
  CHECK(l2.reduce(parse_tree_sum("[2,1]")) == std::vector<Integer>{-1});
  CHECK(l2.equal(parse_tree_sum("[1,2]"), parse_tree_sum("-[2,1]")));
  CHECK(error_code([&] { l2.index_of(parse_tree("[1,3]")); }) == Errc::ModelMismatch);

  // I = H - X for every IHX instance
  const auto l3 = lie_context(3);
  CHECK(l3.equal(parse_tree_sum("[1,[2,3]]"), parse_tree_sum("[[1,2],3] - [2,[3,1]]")));
}

TEST_CASE("quotient agrees with the expansion oracle") {
  std::mt19937 rng(17);
  for (int n = 2; n <= 4; ++n) {
    const auto labels = label_range(n);
    const auto trees = enumerate_trees(labels);
    const auto ctx = lie_context(n);
    std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int i = 0; i < 100; ++i) {
      TreeSum a, b;
      for (int k = 0; k < 3; ++k) a.add(trees[pick(rng)], coef(rng));
      for (int k = 0; k < 3; ++k) b.add(trees[pick(rng)], coef(rng));
      CHECK(ctx.equal(a, b) == (omega2_expansion(a) == omega2_expansion(b)));
      CHECK(ctx.reduce(a) == multilinear_normal_form(a, labels));
    }
  }
}

TEST_CASE("decorated Lie ranks") {
  CHECK(decorated_lie_context(3, cyclic(3)).free_rank() == 54);
  const auto free1 = std::make_shared<const GroupModel>(GroupModel::free(1));
  CHECK(error_code([&] { decorated_lie_context(2, free1); }) == Errc::InfiniteEnumeration);
  // reduced words of length <= 1 in one generator: 1, a, A
  CHECK(decorated_lie_context(2, free1, 1).free_rank() == 9);
}

TEST_CASE("STU^2 Hermite form ignores relation order") {
  for (int n = 2; n <= 4; ++n) {
    const auto ctx = jacobi_tree_context(n);
    const auto m = ctx.relation_matrix();
    auto rows = m.row_data();
    std::mt19937 rng(n);
    std::shuffle(rows.begin(), rows.end(), rng);
    const auto shuffled = SparseIntMatrix::from_rows(m.cols(), rows);
    CHECK(hermite_normal_form(m, false).form == hermite_normal_form(shuffled, false).form);
  }
}
