#include "hodgeham/harrison.hpp"

#include <stdexcept>

namespace hodgeham {

namespace {

void require_one_var_regular(const ChainVector& v, int legs) {
  if (v.n != legs || v.mod.k != 1 || v.mod.kind != ModuleSpec::Kind::Regular)
    throw std::invalid_argument(
        "splitting maps take one-variable regular chains");
}

MonomialChain ch1(std::initializer_list<int> e) {
  MonomialChain c;
  c.e.assign(e);
  return c;
}

}  // namespace

ChainVector q_map(const ChainVector& v) {
  require_one_var_regular(v, 1);
  ChainVector out;
  out.n = 0;
  out.mod = v.mod;
  for (const auto& [c, coeff] : v.terms) {
    const int a = c.e[0], b = c.e[1];
    if (a + b == 0) continue;
    out.add(ch1({a + b}), coeff * ratio(b, a + b));
  }
  return out;
}

ChainVector map_B(int N) {
  if (N < 1) throw std::invalid_argument("B is defined on degrees >= 1");
  return ChainVector::single(1, ModuleSpec::regular(1), ch1({0, N}));
}

ChainVector map_S(const ChainVector& v) {
  require_one_var_regular(v, 1);
  ChainVector out;
  out.n = 2;
  out.mod = v.mod;
  for (const auto& [c, coeff] : v.terms) {
    const int j = c.e[1], N = c.e[0] + c.e[1];
    out.add(ch1({0, j, N - j}), coeff);
    if (2 * j <= N)
      out.add(ch1({j, j, N - 2 * j}), coeff);
    else
      out.add(ch1({N - j, 2 * j - N, N - j}), -coeff);
  }
  return out;
}

ChainVector map_H(const ChainVector& v) {
  require_one_var_regular(v, 1);
  ChainVector out;
  out.n = 1;
  out.mod = v.mod;
  for (const auto& [c, coeff] : v.terms) {
    const int j = c.e[1], N = c.e[0] + c.e[1];
    out.add(ch1({N - j, j}), coeff * Rational(2));
    if (2 * j <= N)
      out.add(ch1({2 * j, N - 2 * j}), coeff);
    else
      out.add(ch1({2 * N - 2 * j, 2 * j - N}), -coeff);
  }
  return out;
}

namespace {

// Block of a degree-preserving chain-level map over the lex bases.
template <typename F>
BlockMatrix chain_map_block(int N, int legs_in, int legs_out, F&& f) {
  const auto mod = ModuleSpec::regular(1);
  ChainBlock dom = ChainBlock::make(legs_in, MultiDegree{N}, mod);
  ChainBlock cod = ChainBlock::make(legs_out, MultiDegree{N}, mod);
  BlockMatrix out(uint32_t(cod.basis.size()), uint32_t(dom.basis.size()));
  for (uint32_t j = 0; j < dom.basis.size(); ++j) {
    ChainVector img = f(ChainVector::single(legs_in, mod, dom.basis[j]));
    SparseVec col;
    for (const auto& [c, coeff] : img.terms) {
      int r = cod.index_of(c);
      if (r < 0) throw std::logic_error("map left the degree block");
      col.push(uint32_t(r), coeff);
    }
    out.set_column(j, std::move(col));
  }
  return out;
}

}  // namespace

BlockMatrix q_block(int N) {
  return chain_map_block(N, 1, 0, [](const ChainVector& v) { return q_map(v); });
}

BlockMatrix b_block(int N) {
  if (N < 1) throw std::invalid_argument("B is defined on degrees >= 1");
  BlockMatrix out(uint32_t(N + 1), 1);
  out.set_column(0, SparseVec::unit(0));  // 1 (x) z^N is the least chain
  return out;
}

BlockMatrix s_block(int N) {
  return chain_map_block(N, 1, 2, [](const ChainVector& v) { return map_S(v); });
}

BlockMatrix h_block(int N) {
  return chain_map_block(N, 1, 1, [](const ChainVector& v) { return map_H(v); });
}

SplittingReport verify_appendix_splitting_at(int N) {
  if (N < 1) throw std::invalid_argument("splitting blocks start at degree 1");
  SplittingReport rep;
  rep.degree = N;
  const auto mod = ModuleSpec::regular(1);
  ChainBlock c1 = ChainBlock::make(1, MultiDegree{N}, mod);
  const uint32_t dim = uint32_t(c1.basis.size());

  BlockMatrix q = q_block(N), b = b_block(N), h = h_block(N), s = s_block(N);
  BlockMatrix d = boundary_block(1, MultiDegree{N}, mod);  // 2 legs -> 1 leg

  rep.qb_identity = q.times(b) == BlockMatrix::identity(1);

  BlockMatrix lhs = h.plus(b.times(q).times(h), Rational(-1));
  BlockMatrix rhs = d.times(s);
  rep.homotopy_identity = lhs == rhs;
  if (!rep.homotopy_identity) {
    for (uint32_t j = 0; j < dim; ++j)
      if (!(lhs.column(j) == rhs.column(j))) {
        rep.witness = chain_str(c1.basis[j], 1, 1);
        break;
      }
  }

  BlockMatrix defect = BlockMatrix::identity(dim).plus(h, Rational(-1, 2));
  // defect = id - H/2 = (2 id - H)/2; its norm is half the contraction norm
  rep.contraction_norm = defect.max_col_l1() * Rational(2);
  rep.norm_bound_ok = rep.contraction_norm <= Rational(1);

  BlockMatrix hinv;
  try {
    hinv = invert(h);
    rep.h_invertible = true;
  } catch (const std::invalid_argument&) {
    rep.h_invertible = false;
  }

  if (rep.h_invertible) {
    // H = 2 (id - T) with T = defect, so H^{-1} = (1/2) sum_m T^m
    rep.neumann_ok = true;
    BlockMatrix power = BlockMatrix::identity(dim);
    BlockMatrix partial = power;
    for (int M = 1; M <= 10; ++M) {
      power = defect.times(power);
      partial = partial.plus(power, Rational(1));
      Rational err = hinv.plus(partial, Rational(-1, 2)).max_col_l1();
      rep.neumann_errors.push_back(err);
      if (!(err <= Rational(1, 1 << M))) rep.neumann_ok = false;
    }
  }

  if (!rep.pass() && rep.witness.empty() && dim > 0)
    rep.witness = chain_str(c1.basis[0], 1, 1);
  return rep;
}

std::vector<SplittingReport> verify_appendix_splitting(int n_max) {
  std::vector<SplittingReport> out;
  for (int N = 1; N <= n_max; ++N) out.push_back(verify_appendix_splitting_at(N));
  return out;
}

bool kernel_image_check(int N) {
  const auto mod = ModuleSpec::regular(1);
  BlockMatrix q = q_block(N);
  BlockMatrix d = boundary_block(1, MultiDegree{N}, mod);
  if (!subspace_equal(kernel_basis(q), image_basis(d))) return false;
  return N == 0 || rank(q) == 1;  // q hits z^N for every positive degree
}

bool splitting_homotopy_identity(int N) {
  const auto mod = ModuleSpec::regular(1);
  BlockMatrix d = boundary_block(1, MultiDegree{N}, mod);
  BlockMatrix lhs = d.times(s_block(N)).times(invert(h_block(N)));
  const uint32_t dim = uint32_t(N + 1);
  BlockMatrix rhs =
      BlockMatrix::identity(dim).plus(b_block(N).times(q_block(N)),
                                      Rational(-1));
  return lhs == rhs;
}

std::vector<ExactnessVerdict> harrison_block_exactness(int k, int n_max,
                                                       int deg_max,
                                                       const ModuleSpec& mod) {
  if (mod.k != k) throw std::invalid_argument("module arity mismatch");
  HodgeEngine engine;
  std::vector<ExactnessVerdict> out;
  for (int total = 0; total <= deg_max; ++total) {
    for (const auto& N : multidegrees_with_total(k, total)) {
      for (int n = 2; n <= n_max; ++n) {
        HomologyDims h = engine.homology(n, N, mod, 1);
        ExactnessVerdict v;
        v.n = n;
        v.N = N;
        v.dim_cycle = h.dim_cycle;
        v.dim_boundary = h.dim_boundary;
        v.exact = h.dim_homology == 0;
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

ContractionData contracting_homotopy(int n, const MultiDegree& N,
                                     const ModuleSpec& mod) {
  if (n < 0) throw std::invalid_argument("leg count must be >= 0");
  BlockMatrix rho_prev, d_prev;  // maps below the current level
  ContractionData out;
  for (int m = 0; m <= n; ++m) {
    const uint32_t dim = uint32_t(block_dim(m, N, mod));
    BlockMatrix d_next = boundary_block(m, N, mod);  // (m+1)-leg -> m-leg

    // echelon span of the boundaries, then homology representatives on top
    Eliminator span(dim);
    Eliminator solver(dim, /*track_history=*/true);
    uint32_t image_rank = 0;
    for (uint32_t c = 0; c < d_next.cols(); ++c) {
      solver.add_column(d_next.column(c));
      if (span.add_column(d_next.column(c))) ++image_rank;
    }
    if (m == 0) {
      for (uint32_t j = 0; j < dim; ++j) span.add_column(SparseVec::unit(j));
    } else {
      BlockMatrix cycles = kernel_basis(d_prev);
      for (uint32_t j = 0; j < cycles.cols(); ++j)
        span.add_column(cycles.column(j));
    }

    BlockMatrix rho(uint32_t(block_dim(m + 1, N, mod)), dim);
    BlockMatrix pi(dim, dim);
    for (uint32_t j = 0; j < dim; ++j) {
      SparseVec w = SparseVec::unit(j);
      if (m >= 1) axpy(w, Rational(-1), rho_prev.apply(d_prev.column(j)));
      std::vector<std::pair<uint32_t, Rational>> coeffs;
      if (!span.reduce(w, &coeffs).empty())
        throw std::logic_error("defect: chain outside cycles plus boundaries");
      SparseVec bpart, reps;
      for (const auto& [p, c] : coeffs) {
        if (p < image_rank)
          axpy(bpart, c, span.pivot_column(p));
        else
          axpy(reps, c, span.pivot_column(p));
      }
      auto y = solver.solve(bpart);
      if (!y) throw std::logic_error("defect: boundary part not solvable");
      rho.set_column(j, std::move(*y));
      pi.set_column(j, std::move(reps));
    }

    out.rho_prev = std::move(rho_prev);
    out.rho = std::move(rho);
    out.projector = std::move(pi);
    rho_prev = out.rho;
    d_prev = std::move(d_next);
  }
  return out;
}

bool harrison_kunneth_check(int n, const MultiDegree& N) {
  if (N.size() != 2) throw std::invalid_argument("two-variable degrees only");
  HodgeEngine engine;
  uint64_t lhs = engine.homology(n, N, ModuleSpec::regular(2), 1).dim_homology;
  uint64_t rhs = 0;
  for (int var = 1; var <= 2; ++var)
    rhs += engine.homology(n, N, ModuleSpec::var_restriction(var, 2))
               .dim_homology;
  return lhs == rhs;
}

}  // namespace hodgeham
