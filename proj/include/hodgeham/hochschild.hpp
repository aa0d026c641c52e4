#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodgeham/linalg.hpp"
#include "hodgeham/monomial.hpp"
#include "hodgeham/symgroup.hpp"

namespace hodgeham {

// Formal rational combination of basis chains with a fixed leg count. The
// module spec travels with the vector because slot absorption depends on it.
struct ChainVector {
  int n = 0;
  ModuleSpec mod;
  std::vector<std::pair<MonomialChain, Rational>> terms;  // sorted, nonzero

  static ChainVector single(int n, const ModuleSpec& mod, MonomialChain c,
                            Rational coeff = Rational(1));

  bool is_zero() const { return terms.empty(); }
  void add(const MonomialChain& c, const Rational& coeff);
  void add_scaled(const ChainVector& o, const Rational& coeff);
  Rational coeff(const MonomialChain& c) const;
  bool operator==(const ChainVector& o) const {
    return n == o.n && terms == o.terms;
  }
  std::string str() const;
};

// j-th face of a chain with m legs, 0 <= j <= m: j = 0 absorbs the first leg
// into the slot, middle faces merge adjacent legs, j = m absorbs the last
// leg into the slot (symmetric module). Truncated slots return nullopt.
std::optional<MonomialChain> face_chain(int j, const MonomialChain& c, int m,
                                        const ModuleSpec& mod);

ChainVector face_map(int j, const ChainVector& v);

// Alternating face sum; maps m-leg chains to (m-1)-leg chains.
ChainVector boundary(const ChainVector& v);

// Left position action: (sigma . c) has leg sigma(t) equal to leg t of c.
ChainVector act_on_chain(const GroupAlgebraElement& g, const ChainVector& v);

// Action of the degree-n Eulerian idempotent on an n-leg chain vector.
ChainVector bgs_project(int i, const ChainVector& v);

// Projection onto the terms of exact multidegree N.
ChainVector degree_project(const MultiDegree& N, const ChainVector& v);

// Slot truncation: kills terms whose slot has an exponent >= cap and
// retags the module.
ChainVector truncation_project(int cap, const ChainVector& v);

// Basis of one degree block with index lookup.
struct ChainBlock {
  int n = 0;
  MultiDegree N;
  ModuleSpec mod;
  std::vector<MonomialChain> basis;

  static ChainBlock make(int n, const MultiDegree& N, const ModuleSpec& mod);
  int index_of(const MonomialChain& c) const;  // -1 when absent
};

// d_n as a block matrix from the (n+1)-leg block to the n-leg block at
// multidegree N, with chain-string labels.
BlockMatrix boundary_block(int n, const MultiDegree& N, const ModuleSpec& mod);

struct HomologyDims {
  uint64_t dim_chain = 0;
  uint64_t dim_cycle = 0;
  uint64_t dim_boundary = 0;
  uint64_t dim_homology = 0;
};

// Shared per-run cache of idempotent image bases, orbit decompositions and
// restricted boundary ranks. All methods are deterministic in their inputs.
class HodgeEngine {
 public:
  // i = 0 computes the unresolved block dimensions; i >= 1 the summand cell.
  HomologyDims homology(int n, const MultiDegree& N, const ModuleSpec& mod,
                        int i = 0);
  HomologyDims cohomology(int n, const MultiDegree& N, const ModuleSpec& mod,
                          int i = 0);

  // dim of the i-summand of the n-leg block (i >= 1).
  uint64_t summand_dim(int n, const MultiDegree& N, const ModuleSpec& mod,
                       int i);

 public:
  // Echelon image basis of the idempotent acting on arrangements of a leg
  // multiset with the given run-length composition.
  struct PatternData {
    std::vector<SparseVec> image;    // echelon basis over arrangement indices
    std::vector<uint32_t> pivot_rows;
  };

 private:
  struct VBlock {
    uint64_t dim = 0;
    bool identity = false;           // full block, no projection
    std::vector<SparseVec> basis;    // ambient block coordinates
    struct Orbit {
      uint32_t coord_base = 0;
      std::vector<uint32_t> chain_by_arr;  // arrangement -> block index
      const PatternData* pattern = nullptr;
    };
    std::vector<Orbit> orbits;
    std::vector<std::pair<uint32_t, uint32_t>> chain_to_orbit;

    // coordinates of an ambient vector, or throws when it is outside the
    // span (a projection-compatibility violation)
    SparseVec coords(const SparseVec& ambient) const;
  };

  using BlockKey = std::string;
  static BlockKey key(int n, const MultiDegree& N, const ModuleSpec& mod);

  const VBlock& vblock(int m, const MultiDegree& N, const ModuleSpec& mod,
                       int i, bool dual);
  // rank of the boundary (dual: coboundary) restricted to the summand at
  // level m; primal maps level m -> m-1, dual maps level m -> m+1
  uint64_t restricted_rank(int m, const MultiDegree& N, const ModuleSpec& mod,
                           int i, bool dual);
  uint64_t raw_rank(int m, const MultiDegree& N, const ModuleSpec& mod,
                    bool dual);
  const BlockMatrix& raw_block(int m, const MultiDegree& N,
                               const ModuleSpec& mod);

  std::map<std::tuple<BlockKey, int, bool>, VBlock> vblocks_;
  std::map<std::tuple<BlockKey, int, bool>, uint64_t> ranks_;
  std::map<std::tuple<BlockKey, bool>, uint64_t> raw_ranks_;
  std::map<BlockKey, BlockMatrix> raw_blocks_;
  std::map<std::tuple<int, int, bool, std::vector<int>>, PatternData> patterns_;
};

HomologyDims homology_dims(int n, const MultiDegree& N, const ModuleSpec& mod,
                           int i = 0);
HomologyDims cohomology_dims(int n, const MultiDegree& N,
                             const ModuleSpec& mod, int i = 0);

// l1 operator norm of the derivation sending the variable to its p-th power,
// restricted to the degree-N component (one variable). Built by the product
// rule, not the closed form.
int derivation_block_norm(int p, int N);

}  // namespace hodgeham
