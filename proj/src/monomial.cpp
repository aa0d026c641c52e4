#include "hodgeham/monomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hodgeham {

int total_degree(const MultiDegree& d) {
  return std::accumulate(d.begin(), d.end(), 0);
}

ModuleSpec ModuleSpec::regular(int k) {
  ModuleSpec m;
  m.kind = Kind::Regular;
  m.k = k;
  return m;
}

ModuleSpec ModuleSpec::truncation(int k, int cap) {
  if (cap < 1) throw std::invalid_argument("truncation cap must be >= 1");
  ModuleSpec m;
  m.kind = Kind::Truncation;
  m.k = k;
  m.cap = cap;
  return m;
}

ModuleSpec ModuleSpec::var_restriction(int var, int k_total) {
  if (var < 1 || var > k_total)
    throw std::invalid_argument("var out of range");
  ModuleSpec m;
  m.kind = Kind::VarRestriction;
  m.k = k_total;
  m.var = var;
  return m;
}

bool ModuleSpec::slot_admissible(const int* e) const {
  if (kind != Kind::Truncation) return true;
  for (int i = 0; i < k; ++i)
    if (e[i] >= cap) return false;
  return true;
}

bool ModuleSpec::leg_var_allowed(int var0) const {
  return kind != Kind::VarRestriction || var0 == var - 1;
}

std::string ModuleSpec::str() const {
  switch (kind) {
    case Kind::Regular:
      return "regular";
    case Kind::Truncation:
      return "trunc:" + std::to_string(cap);
    case Kind::VarRestriction:
      return "var:" + std::to_string(var);
  }
  return "";
}

ModuleSpec parse_module_spec(const std::string& text, int k) {
  if (text == "regular") return ModuleSpec::regular(k);
  if (text.rfind("trunc:", 0) == 0) {
    const int m = std::stoi(text.substr(6));
    if (m < 1) throw std::invalid_argument("truncation order must be >= 1");
    return ModuleSpec::truncation(k, m);
  }
  if (text.rfind("var:", 0) == 0) {
    const int v = std::stoi(text.substr(4));
    if (v < 1 || v > k)
      throw std::invalid_argument("variable index out of range 1.." +
                                  std::to_string(k));
    return ModuleSpec::var_restriction(v, k);
  }
  throw std::invalid_argument("unknown module spec '" + text +
                              "' (expected regular|trunc:M|var:I)");
}

std::string monomial_str(const int* e, int k) {
  std::ostringstream os;
  os << "z^[";
  for (int i = 0; i < k; ++i) {
    if (i) os << ',';
    os << e[i];
  }
  os << ']';
  return os.str();
}

std::string chain_str(const MonomialChain& c, int n, int k) {
  std::ostringstream os;
  for (int p = 0; p <= n; ++p) {
    if (p) os << '|';
    os << monomial_str(c.e.data() + size_t(p) * k, k);
  }
  return os.str();
}

MultiDegree chain_degree(const MonomialChain& c, int n, int k) {
  MultiDegree d(k, 0);
  for (int p = 0; p <= n; ++p)
    for (int i = 0; i < k; ++i) d[i] += c.e[size_t(p) * k + i];
  return d;
}

uint64_t binomial(uint64_t n, uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  uint64_t out = 1;
  for (uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

namespace {

// compositions of total into `parts` nonnegative parts
uint64_t compositions(int total, int parts) {
  if (parts == 0) return total == 0 ? 1 : 0;
  return binomial(uint64_t(total) + parts - 1, parts - 1);
}

}  // namespace

uint64_t block_dim(int n, const MultiDegree& N, const ModuleSpec& mod) {
  if (int(N.size()) != mod.k)
    throw std::invalid_argument("block_dim: degree arity mismatch");
  uint64_t out = 1;
  for (int i = 0; i < mod.k; ++i) {
    uint64_t count = 0;
    switch (mod.kind) {
      case ModuleSpec::Kind::Regular:
        count = compositions(N[i], n + 1);
        break;
      case ModuleSpec::Kind::Truncation: {
        int smax = std::min(N[i], mod.cap - 1);
        for (int s = 0; s <= smax; ++s) count += compositions(N[i] - s, n);
        break;
      }
      case ModuleSpec::Kind::VarRestriction:
        count = (i == mod.var - 1) ? compositions(N[i], n + 1) : 1;
        break;
    }
    out *= count;
  }
  return out;
}

namespace {

// Position-major recursion emits the flat exponent tuples in strictly
// increasing lexicographic order. The final position is forced to absorb
// whatever degree remains.
void enumerate_rec(int n, int k, const ModuleSpec& mod, MultiDegree& left,
                   std::vector<int>& cur, int pos,
                   std::vector<MonomialChain>& out) {
  const bool is_slot = pos == 0;
  std::vector<int> maxv(k);
  for (int i = 0; i < k; ++i) {
    if (is_slot) {
      maxv[i] = left[i];
      if (mod.kind == ModuleSpec::Kind::Truncation)
        maxv[i] = std::min(maxv[i], mod.cap - 1);
    } else {
      maxv[i] = mod.leg_var_allowed(i) ? left[i] : 0;
    }
  }

  auto descend = [&](const std::vector<int>& v) {
    for (int j = 0; j < k; ++j) {
      cur.push_back(v[j]);
      left[j] -= v[j];
    }
    if (pos == n)
      out.push_back(MonomialChain{cur});
    else
      enumerate_rec(n, k, mod, left, cur, pos + 1, out);
    for (int j = k - 1; j >= 0; --j) {
      left[j] += cur.back();
      cur.pop_back();
    }
  };

  if (pos == n) {
    for (int i = 0; i < k; ++i)
      if (left[i] > maxv[i]) return;
    const std::vector<int> rest = left;  // descend mutates left
    descend(rest);
    return;
  }

  // odometer over the position's exponent vector, leftmost digit most
  // significant, so descent order is lexicographic
  std::vector<int> v(k, 0);
  while (true) {
    descend(v);
    int j = k - 1;
    while (j >= 0 && v[j] == maxv[j]) {
      v[j] = 0;
      --j;
    }
    if (j < 0) break;
    ++v[j];
  }
}

}  // namespace

std::vector<MonomialChain> enumerate_chain_basis(int n, const MultiDegree& N,
                                                 const ModuleSpec& mod) {
  if (int(N.size()) != mod.k)
    throw std::invalid_argument("enumerate_chain_basis: arity mismatch");
  for (int d : N)
    if (d < 0) throw std::invalid_argument("negative degree");
  std::vector<MonomialChain> out;
  out.reserve(block_dim(n, N, mod));
  MultiDegree left = N;
  std::vector<int> cur;
  cur.reserve(size_t(n + 1) * mod.k);
  enumerate_rec(n, mod.k, mod, left, cur, 0, out);
  return out;
}

std::vector<MultiDegree> multidegrees_with_total(int k, int total) {
  std::vector<MultiDegree> out;
  MultiDegree cur(k, 0);
  // lexicographic: leftmost coordinate most significant
  int i = 0;
  (void)i;
  std::vector<int> v(k, 0);
  while (true) {
    int used = 0;
    for (int j = 0; j + 1 < k; ++j) used += v[j];
    if (used <= total) {
      MultiDegree d(v.begin(), v.end());
      if (k > 0) d[k - 1] = total - used;
      out.push_back(d);
    }
    // advance over the first k-1 coordinates
    int j = k - 2;
    while (j >= 0 && v[j] == total) {
      v[j] = 0;
      --j;
    }
    if (j < 0) break;
    ++v[j];
  }
  if (k == 0 && total == 0) out.push_back({});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hodgeham
