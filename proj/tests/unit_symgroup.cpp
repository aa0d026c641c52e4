#include "doctest.h"
#include "hodgeham/symgroup.hpp"

using namespace hodgeham;

namespace {

Permutation perm(std::initializer_list<int> images) {
  Permutation p;
  for (int v : images) p.img.push_back(static_cast<uint8_t>(v));
  return p;
}

}  // namespace

TEST_SUITE("symgroup") {

TEST_CASE("permutation algebra") {
  Permutation p = perm({2, 3, 1});
  Permutation q = perm({2, 1, 3});
  CHECK(p.compose(q) == perm({3, 2, 1}));
  CHECK(q.compose(p) == perm({1, 3, 2}));
  CHECK(p.compose(p.inverse()) == Permutation::identity(3));
  CHECK(p.inverse().compose(p) == Permutation::identity(3));
  CHECK(p.sign() == 1);
  CHECK(q.sign() == -1);
  CHECK(p.str() == "[2,3,1]");
}

TEST_CASE("rank round trip") {
  const PermTable& t = PermTable::get(4);
  REQUIRE(t.fact == 24);
  for (uint32_t r = 0; r < t.fact; ++r) {
    CHECK(PermTable::rank_of(t.perms[r]) == r);
    CHECK(t.perms[t.inverses[r]] == t.perms[r].inverse());
  }
  CHECK(t.compose_rank(5, 7) ==
        PermTable::rank_of(t.perms[5].compose(t.perms[7])));
}

TEST_CASE("shuffle sums") {
  GroupAlgebraElement s11 = shuffle_sum(1, 1);
  CHECK(s11.coeff(Permutation::identity(2)) == ratio(1));
  CHECK(s11.coeff(perm({2, 1})) == ratio(-1));
  CHECK(s11.support_size() == 2);

  GroupAlgebraElement s21 = shuffle_sum(2, 1);
  CHECK(s21.coeff(Permutation::identity(3)) == ratio(1));
  CHECK(s21.coeff(perm({1, 3, 2})) == ratio(-1));
  CHECK(s21.coeff(perm({2, 3, 1})) == ratio(1));
  CHECK(s21.support_size() == 3);

  // support of the total shuffle misses nothing in rank: 2^n - 2 shuffles
  // counted with multiplicity, all distinct for n = 3
  CHECK(total_shuffle(3).support_size() == 5);
  CHECK(total_shuffle(2) == shuffle_sum(1, 1));
}

TEST_CASE("total shuffle eigenvalue on the alternating element") {
  for (int n = 2; n <= 5; ++n) {
    GroupAlgebraElement alt = antisymmetrizer(n);
    GroupAlgebraElement lhs = total_shuffle(n).times(alt);
    CHECK(lhs == alt.scaled(Rational((1L << n) - 2)));
  }
}

TEST_CASE("idempotent basics pinned") {
  const GroupAlgebraElement& e22 = eulerian_idempotent(2, 2);
  CHECK(e22 == antisymmetrizer(2));
  CHECK(e22.coeff(Permutation::identity(2)) == ratio(1, 2));
  CHECK(e22.coeff(perm({2, 1})) == ratio(-1, 2));

  const GroupAlgebraElement& e21 = eulerian_idempotent(2, 1);
  CHECK(e21.coeff(Permutation::identity(2)) == ratio(1, 2));
  CHECK(e21.coeff(perm({2, 1})) == ratio(1, 2));

  CHECK(eulerian_idempotent(3, 5).is_zero());
  CHECK(eulerian_idempotent(1, 1) == GroupAlgebraElement::unit(1));
}

TEST_CASE("partition of unity") {
  for (int n = 1; n <= 5; ++n) {
    GroupAlgebraElement sum(n);
    for (int i = 1; i <= n; ++i) sum = sum.plus(eulerian_idempotent(n, i));
    CHECK(sum == GroupAlgebraElement::unit(n));
  }
}

TEST_CASE("orthogonal idempotents") {
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        GroupAlgebraElement prod =
            eulerian_idempotent(n, i).times(eulerian_idempotent(n, j));
        if (i == j)
          CHECK(prod == eulerian_idempotent(n, i));
        else
          CHECK(prod.is_zero());
      }
    }
  }
}

TEST_CASE("spectral equation") {
  for (int n = 2; n <= 4; ++n) {
    GroupAlgebraElement s = total_shuffle(n);
    for (int i = 1; i <= n; ++i) {
      const GroupAlgebraElement& e = eulerian_idempotent(n, i);
      CHECK(s.times(e) == e.scaled(Rational((1L << i) - 2)));
    }
  }
}

TEST_CASE("top idempotent is the antisymmetrizer") {
  for (int n = 2; n <= 5; ++n)
    CHECK(eulerian_idempotent(n, n) == antisymmetrizer(n));
}

}  // TEST_SUITE
