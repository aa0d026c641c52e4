#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hodgeham/rational.hpp"

namespace hodgeham {

// Permutation of {1..n} in one-line notation: img[i] is the image of i+1.
struct Permutation {
  std::vector<uint8_t> img;

  static Permutation identity(int n);
  int n() const { return static_cast<int>(img.size()); }

  // (this o other)(i) = this(other(i))
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  int sign() const;

  bool operator==(const Permutation& o) const { return img == o.img; }
  bool operator<(const Permutation& o) const { return img < o.img; }

  std::string str() const;
};

// Rank tables for S_n (lexicographic rank of one-line notation). Composition
// is tabulated for n <= 6; larger n composes directly.
struct PermTable {
  int n = 0;
  uint32_t fact = 1;
  std::vector<Permutation> perms;    // by rank
  std::vector<int8_t> signs;         // by rank
  std::vector<uint32_t> inverses;    // by rank
  std::vector<uint16_t> compose;     // fact*fact, only for n <= 6

  uint32_t compose_rank(uint32_t a, uint32_t b) const;
  static const PermTable& get(int n);  // cached; n <= 7
  static uint32_t rank_of(const Permutation& p);
};

// Element of the rational group algebra of S_n. Terms are keyed by
// lexicographic rank; stored coefficients are nonzero.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n) : n_(n) {}
  static GroupAlgebraElement unit(int n);

  int n() const { return n_; }
  const std::map<uint32_t, Rational>& terms() const { return terms_; }
  size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add(const Permutation& p, const Rational& c);
  void add_rank(uint32_t r, const Rational& c);
  Rational coeff(const Permutation& p) const;

  GroupAlgebraElement times(const GroupAlgebraElement& o) const;
  GroupAlgebraElement plus(const GroupAlgebraElement& o,
                           const Rational& scale = Rational(1)) const;
  GroupAlgebraElement scaled(const Rational& c) const;

  bool operator==(const GroupAlgebraElement& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  std::string str() const;

 private:
  int n_;
  std::map<uint32_t, Rational> terms_;
};

// Sum of (p,q)-shuffles weighted by sign, in S_{p+q}.
GroupAlgebraElement shuffle_sum(int p, int q);

// Signed total shuffle: sum of shuffle_sum(p, n-p) over 0 < p < n.
GroupAlgebraElement total_shuffle(int n);

// (1/n!) * sum over sigma of sign(sigma) * sigma.
GroupAlgebraElement antisymmetrizer(int n);

// Spectral projection of the total shuffle at eigenvalue 2^i - 2; zero for
// i > n. Cached per (n, i); n <= 7.
const GroupAlgebraElement& eulerian_idempotent(int n, int i);

}  // namespace hodgeham
