#pragma once

#include <utility>
#include <vector>

#include "hodgeham/hochschild.hpp"

namespace hodgeham {

// sigma(x (x) y) = x (x) y - xy (x) 1; lands in the product-map kernel.
ChainVector sigma_chain(const MultiDegree& x, const MultiDegree& y);

// tau(x, y, a) = x (x) ya - xy (x) a - ax (x) y + axy (x) 1.
ChainVector tau_chain(const MultiDegree& x, const MultiDegree& y,
                      const MultiDegree& a);

// Degree-N blocks over lexicographic bases; k is the arity of N.
BlockMatrix product_block(const MultiDegree& N);  // 1-leg -> 0-leg
BlockMatrix sigma_block(const MultiDegree& N);    // 1-leg -> 1-leg
BlockMatrix tau_block(const MultiDegree& N);      // 2-leg -> 1-leg

// Columns spanning the product-map kernel inside the 1-leg block.
BlockMatrix ideal_block_basis(const MultiDegree& N);

struct OmegaBlock {
  MultiDegree N;
  uint64_t dim = 0;                // dim ideal - rank tau
  BlockMatrix representatives;     // ideal vectors completing the tau image
};

// Forms block: ideal modulo the tau image.
OmegaBlock omega_block(const MultiDegree& N);

// Blockwise isomorphism between the 1-leg homology and the forms block:
// sigma fixes the ideal pointwise, id - sigma is a boundary, quotient
// composites are identities up to exact image membership, dims agree.
bool verify_hh1_iso(const MultiDegree& N);

// Presentation of the k-variable algebra as a two-factor tensor product by
// a variable split: the first k_a variables form the A factor.
struct VarSplit {
  int k = 0;
  int k_a = 0;

  static VarSplit first(int k_a, int k_total);
  bool is_a(int v) const { return v < k_a; }
  MultiDegree a_part(const MultiDegree& e) const;
  MultiDegree b_part(const MultiDegree& e) const;
};

// preEx applied to sigma_C(u (x) w) for C-monomials u, w. The first
// component is a 2-leg vector over tuples (p, q, r) with p, q supported on
// the A variables and r on the B variables; the second mirrors it with the
// roles of A and B exchanged in legs (p, q supported: slot on all of C).
//   side A: sigma_A(a (x) x) tensor by,  side B: ax tensor sigma_B(b (x) y)
// where u = ab and w = xy are the variable splits.
std::pair<ChainVector, ChainVector> pre_ex(const MultiDegree& u,
                                           const MultiDegree& w,
                                           const VarSplit& split);

// Ambient extensions of preAss on monomial tuples; on sigma-generators they
// reproduce the defining formulas and always land in the ideal.
//   A side: (p (x) q) (x) r  ->  sigma_C(pr (x) q)
//   B side: p (x) (q (x) r)  ->  sigma_C(pq (x) r)
ChainVector pre_ass_a(const MultiDegree& p, const MultiDegree& q,
                      const MultiDegree& r);
ChainVector pre_ass_b(const MultiDegree& p, const MultiDegree& q,
                      const MultiDegree& r);

// preEx tau_C = (tau_A tensor id, id tensor tau_B) theta on all monomial
// 6-tuples with total degree <= deg_max, plus `samples` seeded random
// tuples at degree sample_degree when samples > 0.
bool verify_claim1(const VarSplit& split, int deg_max, int sample_degree = 0,
                   int samples = 0, uint32_t seed = 12345);

// preAss (tau_A tensor id, id tensor tau_B) = tau_C gamma, checked on each
// summand separately over the same tuple ranges.
bool verify_claim2(const VarSplit& split, int deg_max, int sample_degree = 0,
                   int samples = 0, uint32_t seed = 12345);

// (preAss preEx - id) sigma_C = tau_C rho on monomial pairs of C, and
// preEx preAss = id on sigma-generator tuples of both summands.
bool verify_step3(const VarSplit& split, int deg_max, int sample_degree = 0,
                  int samples = 0, uint32_t seed = 12345);

// Image of tau equals the image of the multiplication composed with
// sigma (x) sigma, and the two agree tuple by tuple through alpha.
bool i_squared_check(const MultiDegree& N);

// Forms dimension at N against the sum of the one-variable forms blocks.
bool omega_kunneth_dims(const MultiDegree& N);

}  // namespace hodgeham
