#include <vector>

#include "doctest.h"
#include "hodgeham/harrison.hpp"

using namespace hodgeham;

namespace {

MonomialChain ch(std::vector<int> e) {
  MonomialChain c;
  c.e = std::move(e);
  return c;
}

ChainVector one_var(int legs, std::vector<int> e) {
  return ChainVector::single(legs, ModuleSpec::regular(1), ch(std::move(e)));
}

}  // namespace

TEST_SUITE("harrison") {

TEST_CASE("q averages the leg into the slot") {
  ChainVector q1 = q_map(one_var(1, {2, 1}));
  CHECK(q1.terms.size() == 1);
  CHECK(q1.coeff(ch({3})) == Rational(1, 3));
  CHECK(q_map(one_var(1, {0, 0})).is_zero());
  CHECK(q_map(one_var(1, {3, 0})).is_zero());
}

TEST_CASE("B is a section of q") {
  ChainVector b3 = map_B(3);
  CHECK(b3.terms.size() == 1);
  CHECK(b3.coeff(ch({0, 3})) == Rational(1));
  CHECK_THROWS_AS(map_B(0), std::invalid_argument);
  for (int N = 1; N <= 40; ++N) {
    ChainVector qb = q_map(map_B(N));
    CHECK(qb.terms.size() == 1);
    CHECK(qb.coeff(ch({N})) == Rational(1));
  }
}

TEST_CASE("S branch formulas") {
  ChainVector s = map_S(one_var(1, {2, 1}));  // j = 1 of N = 3, low branch
  CHECK(s.coeff(ch({0, 1, 2})) == Rational(1));
  CHECK(s.coeff(ch({1, 1, 1})) == Rational(1));
  CHECK(s.terms.size() == 2);

  s = map_S(one_var(1, {1, 1}));  // j = N/2 exactly takes the low branch
  CHECK(s.coeff(ch({0, 1, 1})) == Rational(1));
  CHECK(s.coeff(ch({1, 1, 0})) == Rational(1));
  CHECK(s.terms.size() == 2);

  s = map_S(one_var(1, {1, 2}));  // j = 2 of N = 3, high branch
  CHECK(s.coeff(ch({0, 2, 1})) == Rational(1));
  CHECK(s.coeff(ch({1, 1, 1})) == Rational(-1));
  CHECK(s.terms.size() == 2);
}

TEST_CASE("H branch formulas") {
  ChainVector h = map_H(one_var(1, {1, 1}));
  CHECK(h.coeff(ch({1, 1})) == Rational(2));
  CHECK(h.coeff(ch({2, 0})) == Rational(1));
  CHECK(h.terms.size() == 2);
  for (int N = 1; N <= 8; ++N) {
    ChainVector fixed = map_H(one_var(1, {0, N}));
    CHECK(fixed.terms.size() == 1);
    CHECK(fixed.coeff(ch({0, N})) == Rational(1));
  }
}

TEST_CASE("splitting maps reject other shapes") {
  CHECK_THROWS_AS(q_map(one_var(2, {0, 1, 1})), std::invalid_argument);
  auto two_var = ChainVector::single(1, ModuleSpec::regular(2),
                                     ch({0, 0, 1, 0}));
  CHECK_THROWS_AS(map_H(two_var), std::invalid_argument);
}

TEST_CASE("appendix splitting identities hold through degree 40") {
  auto reports = verify_appendix_splitting(40);
  CHECK(reports.size() == 40);
  for (const auto& rep : reports) {
    CAPTURE(rep.degree);
    CHECK(rep.qb_identity);
    CHECK(rep.homotopy_identity);
    CHECK(rep.norm_bound_ok);
    CHECK(rep.contraction_norm <= Rational(1));
    CHECK(rep.h_invertible);
    REQUIRE(rep.neumann_errors.size() == 10);
    for (int M = 1; M <= 10; ++M)
      CHECK(rep.neumann_errors[size_t(M - 1)] <= Rational(1, 1 << M));
    CHECK(rep.neumann_ok);
    CHECK(rep.pass());
    CHECK(rep.witness.empty());
  }
}

TEST_CASE("homotopy identity expanded on the degree two block") {
  // (id - Bq)H(z(x)z) = 2z(x)z + z^2(x)1 - 1(x)z^2 = dS(z(x)z)
  ChainVector hz = map_H(one_var(1, {1, 1}));
  ChainVector bq = map_B(2);
  // q(H(z(x)z)) = q(2 z(x)z) = z^2, so Bq H = 1(x)z^2
  ChainVector lhs = hz;
  lhs.add(ch({0, 2}), Rational(-1));
  ChainVector rhs = boundary(map_S(one_var(1, {1, 1})));
  CHECK(lhs == rhs);
  CHECK(q_map(hz).coeff(ch({2})) == Rational(1));
  CHECK(bq.coeff(ch({0, 2})) == Rational(1));
}

TEST_CASE("kernel of q is the boundary image") {
  for (int N = 0; N <= 40; ++N) {
    CAPTURE(N);
    CHECK(kernel_image_check(N));
  }
}

TEST_CASE("d S Hinv recovers the complement projection") {
  for (int N = 1; N <= 20; ++N) {
    CAPTURE(N);
    CHECK(splitting_homotopy_identity(N));
  }
}

TEST_CASE("one variable summand complex is exact above degree one") {
  auto verdicts =
      harrison_block_exactness(1, 4, 8, ModuleSpec::regular(1));
  CHECK(verdicts.size() == 27);  // 9 degrees x leg counts 2..4
  for (const auto& v : verdicts) {
    CAPTURE(v.n);
    CHECK(v.exact);
  }
}

TEST_CASE("two variable summand complex is exact in low leg counts") {
  auto verdicts =
      harrison_block_exactness(2, 3, 5, ModuleSpec::regular(2));
  for (const auto& v : verdicts) CHECK(v.exact);
}

TEST_CASE("contracting homotopies verify by substitution") {
  struct Cfg {
    int n;
    MultiDegree N;
    ModuleSpec mod;
  };
  const Cfg cfgs[] = {
      {0, {3}, ModuleSpec::regular(1)},  {1, {1}, ModuleSpec::regular(1)},
      {1, {4}, ModuleSpec::regular(1)},  {2, {5}, ModuleSpec::regular(1)},
      {3, {6}, ModuleSpec::regular(1)},  {2, {2, 1}, ModuleSpec::regular(2)},
  };
  for (const auto& cfg : cfgs) {
    CAPTURE(cfg.n);
    ContractionData data = contracting_homotopy(cfg.n, cfg.N, cfg.mod);
    const uint32_t dim = uint32_t(block_dim(cfg.n, cfg.N, cfg.mod));
    BlockMatrix d_out = boundary_block(cfg.n, cfg.N, cfg.mod);
    BlockMatrix lhs = d_out.times(data.rho);
    if (cfg.n >= 1) {
      BlockMatrix d_in = boundary_block(cfg.n - 1, cfg.N, cfg.mod);
      lhs = lhs.plus(data.rho_prev.times(d_in), Rational(1));
    }
    BlockMatrix rhs =
        BlockMatrix::identity(dim).plus(data.projector, Rational(-1));
    CHECK(lhs == rhs);
    // the projector is idempotent and kills boundaries
    CHECK(data.projector.times(data.projector) == data.projector);
    CHECK(data.projector.times(boundary_block(cfg.n, cfg.N, cfg.mod))
              .is_zero());
  }
}

TEST_CASE("level zero homotopy fixes everything") {
  ContractionData data =
      contracting_homotopy(0, MultiDegree{4}, ModuleSpec::regular(1));
  CHECK(data.projector == BlockMatrix::identity(1));
  CHECK(data.rho.is_zero());
}

TEST_CASE("degree one homotopy reproduces the appendix projection") {
  ContractionData data =
      contracting_homotopy(1, MultiDegree{1}, ModuleSpec::regular(1));
  BlockMatrix bq = b_block(1).times(q_block(1));
  CHECK(data.projector == bq);
  BlockMatrix d = boundary_block(1, MultiDegree{1}, ModuleSpec::regular(1));
  CHECK(d.times(data.rho) ==
        BlockMatrix::identity(2).plus(bq, Rational(-1)));
}

TEST_CASE("two variable cells split into one variable parts") {
  for (int n = 1; n <= 2; ++n) {
    for (int n1 = 0; n1 <= 3; ++n1) {
      for (int n2 = 0; n2 <= 3; ++n2) {
        CAPTURE(n);
        CAPTURE(n1);
        CAPTURE(n2);
        CHECK(harrison_kunneth_check(n, MultiDegree{n1, n2}));
      }
    }
  }
}

}  // TEST_SUITE
