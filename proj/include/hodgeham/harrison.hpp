#pragma once

#include <string>
#include <vector>

#include "hodgeham/hochschild.hpp"

namespace hodgeham {

// Splitting maps for the one-variable free algebra in the regular module.
// All four act degreewise; q lands in the 0-leg block (monomials), B is its
// section, S raises and H fixes the leg count.

// q(z^a (x) z^b) = (b/(a+b)) z^{a+b}, and 0 on 1 (x) 1.
ChainVector q_map(const ChainVector& v);

// B(z^N) = 1 (x) z^N; rejects N = 0 (the target of q has degree >= 1).
ChainVector map_B(int N);

// Branch at j <= N/2 (ties take this branch):
//   S(z^{N-j} (x) z^j) = 1 (x) z^j (x) z^{N-j} + z^j (x) z^j (x) z^{N-2j}
// and for N/2 < j <= N:
//   S(z^{N-j} (x) z^j) = 1 (x) z^j (x) z^{N-j} - z^{N-j} (x) z^{2j-N} (x) z^{N-j}
ChainVector map_S(const ChainVector& v);

// Branch at j <= N/2 (ties take this branch):
//   H(z^{N-j} (x) z^j) = 2 z^{N-j} (x) z^j + z^{2j} (x) z^{N-2j}
// and for N/2 < j <= N:
//   H(z^{N-j} (x) z^j) = 2 z^{N-j} (x) z^j - z^{2N-2j} (x) z^{2j-N}
ChainVector map_H(const ChainVector& v);

// Degree-N blocks of the maps over the lexicographic chain bases.
BlockMatrix q_block(int N);  // 1-leg block -> 0-leg block
BlockMatrix b_block(int N);  // 0-leg block -> 1-leg block, N >= 1
BlockMatrix s_block(int N);  // 1-leg block -> 2-leg block
BlockMatrix h_block(int N);  // 1-leg block -> 1-leg block

struct SplittingReport {
  int degree = 0;
  bool qb_identity = false;        // q B = id on z^N
  bool homotopy_identity = false;  // (id - B q) H = d S on the block
  Rational contraction_norm;       // max column l1 norm of 2 id - H
  bool norm_bound_ok = false;      // contraction_norm <= 1
  bool h_invertible = false;
  // column-norm distance of the order-M Neumann partial sum from the exact
  // inverse, M = 1..10; each must be <= 2^(-M)
  std::vector<Rational> neumann_errors;
  bool neumann_ok = false;
  std::string witness;  // first failing basis chain, empty on pass

  bool pass() const {
    return qb_identity && homotopy_identity && norm_bound_ok && h_invertible &&
           neumann_ok;
  }
};

SplittingReport verify_appendix_splitting_at(int N);
std::vector<SplittingReport> verify_appendix_splitting(int n_max);

// ker(q) = im(d) into the 1-leg block, and q surjective for N >= 1.
bool kernel_image_check(int N);

// d S H^{-1} = id - B q on the degree-N 1-leg block.
bool splitting_homotopy_identity(int N);

struct ExactnessVerdict {
  int n = 0;
  MultiDegree N;
  uint64_t dim_cycle = 0;
  uint64_t dim_boundary = 0;
  bool exact = false;
};

// Exactness of the i = 1 summand complex over every block with total degree
// <= deg_max and 2 <= n <= n_max.
std::vector<ExactnessVerdict> harrison_block_exactness(int k, int n_max,
                                                       int deg_max,
                                                       const ModuleSpec& mod);

// Block contracting homotopy: d rho_n + rho_{n-1} d = id - projector on the
// n-leg block, with the projector a projection onto chosen homology
// representatives. Throws std::logic_error if the solve is inconsistent,
// which would signal a defect in the boundary blocks.
struct ContractionData {
  BlockMatrix rho;       // n-leg block -> (n+1)-leg block
  BlockMatrix rho_prev;  // (n-1)-leg block -> n-leg block (empty at n = 0)
  BlockMatrix projector;
};

ContractionData contracting_homotopy(int n, const MultiDegree& N,
                                     const ModuleSpec& mod);

// Hodge cell of the two-variable algebra at (n, N, i = 1) against the sum of
// the matching one-variable cells with restricted coefficients.
bool harrison_kunneth_check(int n, const MultiDegree& N);

}  // namespace hodgeham
