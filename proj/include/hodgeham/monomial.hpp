#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hodgeham/rational.hpp"

namespace hodgeham {

// Exponent vector of a monomial in k variables.
using MultiDegree = std::vector<int>;

int total_degree(const MultiDegree& d);

// Coefficient module over the monomial algebra in k variables.
//  Regular         M = the algebra itself
//  Truncation      M = algebra / (all monomials with some exponent >= cap)
//  VarRestriction  M = full k-variable monomials, algebra = the single
//                   variable `var` (legs carry only that variable)
struct ModuleSpec {
  enum class Kind { Regular, Truncation, VarRestriction };
  Kind kind = Kind::Regular;
  int k = 1;
  int cap = 0;   // Truncation only
  int var = 1;   // VarRestriction only, 1-based

  static ModuleSpec regular(int k);
  static ModuleSpec truncation(int k, int cap);
  static ModuleSpec var_restriction(int var, int k_total);

  bool slot_admissible(const int* e) const;
  bool leg_var_allowed(int var0) const;  // 0-based variable index
  std::string str() const;
};

// Inverse of ModuleSpec::str(); throws std::invalid_argument on bad text.
ModuleSpec parse_module_spec(const std::string& text, int k);

// Basis chain of the degree block: exponents of slot then legs, flattened,
// (n+1)*k entries. Chains compare lexicographically on this tuple, which is
// the enumeration and serialization order everywhere.
struct MonomialChain {
  std::vector<int> e;

  bool operator==(const MonomialChain& o) const { return e == o.e; }
  bool operator<(const MonomialChain& o) const { return e < o.e; }
};

std::string monomial_str(const int* e, int k);
std::string chain_str(const MonomialChain& c, int n, int k);
MultiDegree chain_degree(const MonomialChain& c, int n, int k);

uint64_t binomial(uint64_t n, uint64_t r);

// Number of basis chains with n legs and total multidegree N.
uint64_t block_dim(int n, const MultiDegree& N, const ModuleSpec& mod);

// All admissible chains, strictly lexicographically sorted.
std::vector<MonomialChain> enumerate_chain_basis(int n, const MultiDegree& N,
                                                 const ModuleSpec& mod);

// All multidegrees of k variables with the given total, lexicographic.
std::vector<MultiDegree> multidegrees_with_total(int k, int total);

}  // namespace hodgeham
