#include <random>

#include "doctest.h"
#include "hodgeham/linalg.hpp"

using namespace hodgeham;

namespace {

BlockMatrix random_matrix(std::mt19937& rng, uint32_t rows, uint32_t cols) {
  std::uniform_int_distribution<int> num(-2, 2);
  std::uniform_int_distribution<int> den(1, 2);
  std::uniform_int_distribution<int> keep(0, 3);
  BlockMatrix m(rows, cols);
  for (uint32_t c = 0; c < cols; ++c) {
    SparseVec v;
    for (uint32_t r = 0; r < rows; ++r)
      if (keep(rng) == 0) v.push(r, ratio(num(rng), den(rng)));
    m.set_column(c, std::move(v));
  }
  return m;
}

}  // namespace

TEST_SUITE("exactq") {

TEST_CASE("rational canonical form") {
  CHECK(ratio(2, 4) == ratio(1, 2));
  CHECK(ratio(-3, -6) == ratio(1, 2));
  CHECK(ratio(3, -6) == ratio(-1, 2));
  CHECK(is_zero(ratio(0, 7)));
  CHECK(rational_str(ratio(10, 4)) == "5/2");
  CHECK(rational_str(ratio(-7)) == "-7");
}

TEST_CASE("axpy merges and cancels") {
  SparseVec a;
  a.push(0, ratio(1));
  a.push(3, ratio(2));
  SparseVec b;
  b.push(0, ratio(1, 2));
  b.push(1, ratio(5));
  b.push(3, ratio(-1));
  axpy(a, ratio(2), b);
  REQUIRE(a.nnz() == 2);
  CHECK(a.at(0) == ratio(2));
  CHECK(a.at(1) == ratio(10));
  CHECK(a.at(3) == ratio(0));
}

// One-variable boundary block at total degree 1: all three columns of the
// map from three-slot chains to two-slot chains equal the second basis
// vector, so rank 1, kernel dimension 2.
TEST_CASE("boundary degree-1 block oracle") {
  BlockMatrix d(2, 3);
  for (uint32_t c = 0; c < 3; ++c) d.set_column(c, SparseVec::unit(1));

  CHECK(rank(d) == 1);

  BlockMatrix ker = kernel_basis(d);
  REQUIRE(ker.cols() == 2);
  CHECK(ker.entry(0, 0) == ratio(-1));
  CHECK(ker.entry(1, 0) == ratio(1));
  CHECK(ker.entry(2, 0) == ratio(0));
  CHECK(ker.entry(0, 1) == ratio(-1));
  CHECK(ker.entry(2, 1) == ratio(1));
  CHECK(d.times(ker).is_zero());

  BlockMatrix img = image_basis(d);
  REQUIRE(img.cols() == 1);
  CHECK(img.entry(1, 0) == ratio(1));
  CHECK(img.entry(0, 0) == ratio(0));
}

TEST_CASE("solve picks a preimage and rejects inconsistent targets") {
  // [[1,1],[1,1],[0,2]]
  BlockMatrix a(3, 2);
  SparseVec c0, c1;
  c0.push(0, ratio(1));
  c0.push(1, ratio(1));
  c1.push(0, ratio(1));
  c1.push(1, ratio(1));
  c1.push(2, ratio(2));
  a.set_column(0, std::move(c0));
  a.set_column(1, std::move(c1));

  SparseVec b;
  b.push(0, ratio(3));
  b.push(1, ratio(3));
  b.push(2, ratio(4));
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == b);

  SparseVec bad;
  bad.push(0, ratio(1));
  bad.push(1, ratio(2));
  CHECK_FALSE(solve(a, bad).has_value());
}

TEST_CASE("invert round-trips") {
  BlockMatrix a(3, 3);
  a.add_entry(0, 0, ratio(2));
  a.add_entry(0, 1, ratio(1));
  a.add_entry(1, 1, ratio(1, 3));
  a.add_entry(1, 2, ratio(1));
  a.add_entry(2, 0, ratio(-1));
  a.add_entry(2, 2, ratio(4));
  BlockMatrix inv = invert(a);
  CHECK(a.times(inv) == BlockMatrix::identity(3));
  CHECK(inv.times(a) == BlockMatrix::identity(3));

  BlockMatrix sing(2, 2);
  sing.add_entry(0, 0, ratio(1));
  sing.add_entry(1, 0, ratio(2));
  sing.add_entry(0, 1, ratio(2));
  sing.add_entry(1, 1, ratio(4));
  CHECK_THROWS_AS((void)invert(sing), std::invalid_argument);
}

TEST_CASE("subspace comparison by containment") {
  // span{(1,0,1),(0,1,0)} presented by two different spanning sets
  BlockMatrix u(3, 2), v(3, 3), w(3, 1);
  u.add_entry(0, 0, ratio(1));
  u.add_entry(2, 0, ratio(1));
  u.add_entry(1, 1, ratio(1));
  v.add_entry(0, 0, ratio(2));
  v.add_entry(2, 0, ratio(2));
  v.add_entry(0, 1, ratio(1));
  v.add_entry(1, 1, ratio(3));
  v.add_entry(2, 1, ratio(1));
  v.add_entry(0, 2, ratio(-1));
  v.add_entry(1, 2, ratio(3));
  v.add_entry(2, 2, ratio(-1));
  w.add_entry(0, 0, ratio(1));
  CHECK(subspace_equal(u, v));
  CHECK_FALSE(subspace_equal(u, w));
  CHECK_FALSE(subspace_contained(w, u));
  CHECK(subspace_contained(v, u));
}

TEST_CASE("randomized consistency properties") {
  std::mt19937 rng(20260815);
  for (int trial = 0; trial < 40; ++trial) {
    uint32_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    BlockMatrix a = random_matrix(rng, rows, cols);

    uint32_t r = rank(a);
    CHECK(r == rank(a.transposed()));

    BlockMatrix ker = kernel_basis(a);
    CHECK(ker.cols() == cols - r);
    CHECK(a.times(ker).is_zero());

    BlockMatrix img = image_basis(a);
    CHECK(img.cols() == r);
    CHECK(subspace_equal(img, a));

    // any column combination has a preimage
    SparseVec x;
    for (uint32_t c = 0; c < cols; ++c)
      if (rng() % 2) x.push(c, ratio((int)(rng() % 5) - 2));
    SparseVec b = a.apply(x);
    auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == b);
  }
}

TEST_CASE("deterministic outputs") {
  std::mt19937 rng(7);
  BlockMatrix a = random_matrix(rng, 6, 9);
  CHECK(kernel_basis(a) == kernel_basis(a));
  CHECK(image_basis(a) == image_basis(a));
}

TEST_CASE("column l1 norm") {
  BlockMatrix a(2, 2);
  a.add_entry(0, 0, ratio(-1, 2));
  a.add_entry(1, 0, ratio(1, 3));
  a.add_entry(1, 1, ratio(-2, 7));
  CHECK(a.max_col_l1() == ratio(5, 6));
}

}  // TEST_SUITE
