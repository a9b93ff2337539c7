#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "lietrees/exactla/hermite.hpp"
#include "lietrees/exactla/matrix_market.hpp"
#include "lietrees/exactla/quotient.hpp"
#include "lietrees/exactla/smith.hpp"
#include "test_util.hpp"

using namespace lietrees;
using testutil::error_code;

namespace {

DenseIntMatrix dense(const std::vector<std::vector<Integer>>& rows) {
  return DenseIntMatrix::from_rows(rows, rows.empty() ? 0 : rows[0].size());
}

DenseIntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  DenseIntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Laplace expansion; fine for the tiny sizes used here.
Integer det(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    out += (j % 2 ? -1 : 1) * a[0][j] * det(minor);
  }
  return out;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// gcd of all k x k minors, the classical characterisation of d_1 ... d_k.
Integer minor_gcd(const DenseIntMatrix& m, std::size_t k) {
  Integer g = 0;
  for (const auto& rs : subsets(m.rows(), k))
    for (const auto& cs : subsets(m.cols(), k)) {
      std::vector<std::vector<Integer>> sub;
      for (auto r : rs) {
        std::vector<Integer> row;
        for (auto c : cs) row.push_back(m(r, c));
        sub.push_back(row);
      }
      g = gcd(g, abs(det(sub)));
    }
  return g;
}

}  // namespace

TEST_CASE("hermite normal form") {
  CHECK(hermite_normal_form(DenseIntMatrix::identity(3)).form == DenseIntMatrix::identity(3));
  const auto h = hermite_normal_form(dense({{2, 4}, {1, 2}}));
  CHECK(h.form == dense({{1, 2}, {0, 0}}));
  CHECK(h.rank() == 1);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const DenseIntMatrix m = random_matrix(rng, 4, 5, 6);
    const auto hf = hermite_normal_form(m);
    REQUIRE(hf.transform.has_value());
    CHECK(*hf.transform * m == hf.form);
    // row order must not matter
    DenseIntMatrix p = m;
    p.swap_rows(0, 3);
    p.swap_rows(1, 2);
    CHECK(hermite_normal_form(p, false).form == hf.form);
    for (std::size_t r = 0; r < hf.rank(); ++r) {
      const auto pc = hf.pivot_columns[r];
      CHECK(hf.form(r, pc) > 0);
      for (std::size_t above = 0; above < r; ++above) {
        CHECK(hf.form(above, pc) >= 0);
        CHECK(hf.form(above, pc) < hf.form(r, pc));
      }
    }
  }
}

TEST_CASE("smith invariants against minors") {
  CHECK(smith_normal_form_dense(dense({{2, 0}, {0, 3}})).diagonal == std::vector<Integer>{1, 6});
  CHECK(smith_normal_form_dense(DenseIntMatrix(2, 3)).diagonal.empty());
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const DenseIntMatrix m = random_matrix(rng, 3, 4, 5);
    const auto s = smith_normal_form_dense(m);
    CHECK(s.right * s.right_inverse == DenseIntMatrix::identity(4));
    Integer prefix = 1;
    for (std::size_t k = 1; k <= 3; ++k) {
      if (k <= s.diagonal.size()) prefix *= s.diagonal[k - 1];
      else prefix = 0;
      CHECK(prefix == minor_gcd(m, k));
    }
    CHECK(smith_invariants(SparseIntMatrix::from_dense(m)) == s.diagonal);
  }
}

TEST_CASE("cokernel presentations") {
  const auto c1 = cokernel(SparseIntMatrix::from_dense(dense({{2}})));
  CHECK(c1.free_rank() == 0);
  CHECK(c1.torsion() == std::vector<Integer>{2});
  const auto c3 = cokernel(SparseIntMatrix(0, 3));
  CHECK(c3.free_rank() == 3);
  CHECK(c3.torsion().empty());

  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const DenseIntMatrix m = random_matrix(rng, 3, 5, 4);
    const auto sp = SparseIntMatrix::from_dense(m);
    const auto q = cokernel(sp);
    const auto inv = smith_normal_form_dense(m).diagonal;
    CHECK(q.free_rank() == 5 - inv.size());
    std::vector<Integer> tors;
    for (const auto& d : inv)
      if (d > 1) tors.push_back(d);
    CHECK(q.torsion() == tors);
    // relations vanish, lift is a section
    for (const auto& row : sp.row_data())
      for (const auto& c : q.coordinates(row)) CHECK(c == 0);
    std::vector<Integer> coords(q.coordinate_count());
    std::uniform_int_distribution<int> dist(-5, 5);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      coords[i] = dist(rng);
      if (i >= q.free_rank()) {
        const Integer& d = q.torsion()[i - q.free_rank()];
        coords[i] = ((coords[i] % d) + d) % d;
      }
    }
    CHECK(q.coordinates(q.lift(coords)) == coords);
  }
}

TEST_CASE("lattice membership") {
  const auto m = SparseIntMatrix::from_dense(dense({{2}}));
  const auto x = solve_membership(m, SparseRow{{0, 4}});
  REQUIRE(x.has_value());
  CHECK(*x == std::vector<Integer>{2});
  CHECK_FALSE(solve_membership(m, SparseRow{{0, 3}}).has_value());
  CHECK(error_code([&] { solve_membership(m, SparseRow{{4, 1}}); }) == Errc::DimensionMismatch);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const DenseIntMatrix a = random_matrix(rng, 3, 4, 5);
    const auto sp = SparseIntMatrix::from_dense(a);
    std::vector<Integer> v(4);
    for (std::size_t j = 0; j < 4; ++j) v[j] = 2 * a(0, j) - 3 * a(2, j);
    const auto sol = solve_membership(sp, sparsify(v));
    REQUIRE(sol.has_value());
    std::vector<Integer> back(4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) back[j] += (*sol)[i] * a(i, j);
    CHECK(back == v);
  }
}

TEST_CASE("matrix market round trip") {
  std::mt19937 rng(13);
  const auto m = SparseIntMatrix::from_dense(random_matrix(rng, 4, 6, 3));
  std::stringstream ss;
  write_matrix_market(ss, m);
  CHECK(ss.str().rfind("%%MatrixMarket matrix coordinate integer general", 0) == 0);
  CHECK(read_matrix_market(ss) == m);
  std::istringstream bad("not a matrix");
  CHECK(error_code([&] { read_matrix_market(bad); }).has_value());
}

TEST_CASE("entry growth guard") {
  EliminationOptions tiny;
  tiny.max_entry_bits = 3;
  CHECK(error_code([&] { check_entry_size(Integer(100), tiny); }) == Errc::EntryBlowUp);
  check_entry_size(Integer(7), tiny);
  CHECK(error_code([&] { hermite_normal_form(dense({{1000, 3}, {7, 1}}), true, tiny); }) == Errc::EntryBlowUp);
}
