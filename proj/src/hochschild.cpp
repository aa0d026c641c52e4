#include "hodgeham/hochschild.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hodgeham {

ChainVector ChainVector::single(int n, const ModuleSpec& mod, MonomialChain c,
                                Rational coeff) {
  ChainVector v;
  v.n = n;
  v.mod = mod;
  if (!hodgeham::is_zero(coeff)) v.terms.emplace_back(std::move(c), std::move(coeff));
  return v;
}

void ChainVector::add(const MonomialChain& c, const Rational& coeff) {
  if (hodgeham::is_zero(coeff)) return;
  auto it = std::lower_bound(
      terms.begin(), terms.end(), c,
      [](const auto& term, const MonomialChain& key) { return term.first < key; });
  if (it != terms.end() && it->first == c) {
    it->second += coeff;
    if (hodgeham::is_zero(it->second)) terms.erase(it);
  } else {
    terms.emplace(it, c, coeff);
  }
}

void ChainVector::add_scaled(const ChainVector& o, const Rational& coeff) {
  for (const auto& [c, v] : o.terms) add(c, coeff * v);
}

Rational ChainVector::coeff(const MonomialChain& c) const {
  auto it = std::lower_bound(
      terms.begin(), terms.end(), c,
      [](const auto& term, const MonomialChain& key) { return term.first < key; });
  if (it != terms.end() && it->first == c) return it->second;
  return Rational(0);
}

std::string ChainVector::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, v] : terms) {
    if (!first) os << " + ";
    first = false;
    os << rational_str(v) << "*" << chain_str(c, n, mod.k);
  }
  return os.str();
}

std::optional<MonomialChain> face_chain(int j, const MonomialChain& c, int m,
                                        const ModuleSpec& mod) {
  const int k = mod.k;
  if (j < 0 || j > m) throw std::invalid_argument("face index out of range");
  MonomialChain out;
  out.e.resize(size_t(m) * k);
  if (j == 0 || j == m) {
    const int absorbed = j == 0 ? 1 : m;
    for (int i = 0; i < k; ++i) out.e[i] = c.e[i] + c.e[size_t(absorbed) * k + i];
    if (!mod.slot_admissible(out.e.data())) return std::nullopt;
    int w = 1;
    for (int p = 1; p <= m; ++p) {
      if (p == absorbed) continue;
      for (int i = 0; i < k; ++i) out.e[size_t(w) * k + i] = c.e[size_t(p) * k + i];
      ++w;
    }
  } else {
    // merge legs j and j+1
    for (int i = 0; i < k; ++i) out.e[i] = c.e[i];
    int w = 1;
    for (int p = 1; p <= m; ++p) {
      if (p == j + 1) continue;
      for (int i = 0; i < k; ++i) {
        int v = c.e[size_t(p) * k + i];
        if (p == j) v += c.e[size_t(p + 1) * k + i];
        out.e[size_t(w) * k + i] = v;
      }
      ++w;
    }
  }
  return out;
}

ChainVector face_map(int j, const ChainVector& v) {
  ChainVector out;
  out.n = v.n - 1;
  out.mod = v.mod;
  for (const auto& [c, coeff] : v.terms) {
    auto f = face_chain(j, c, v.n, v.mod);
    if (f) out.add(*f, coeff);
  }
  return out;
}

ChainVector boundary(const ChainVector& v) {
  ChainVector out;
  out.n = v.n - 1;
  out.mod = v.mod;
  for (const auto& [c, coeff] : v.terms) {
    for (int j = 0; j <= v.n; ++j) {
      auto f = face_chain(j, c, v.n, v.mod);
      if (f) out.add(*f, j % 2 == 0 ? coeff : -coeff);
    }
  }
  return out;
}

namespace {

MonomialChain permute_legs(const Permutation& sigma, const MonomialChain& c,
                           int n, int k) {
  MonomialChain out;
  out.e.resize(c.e.size());
  for (int i = 0; i < k; ++i) out.e[i] = c.e[i];
  for (int t = 1; t <= n; ++t) {
    const int target = sigma.img[t - 1];
    for (int i = 0; i < k; ++i)
      out.e[size_t(target) * k + i] = c.e[size_t(t) * k + i];
  }
  return out;
}

}  // namespace

ChainVector act_on_chain(const GroupAlgebraElement& g, const ChainVector& v) {
  if (g.n() != v.n) throw std::invalid_argument("act_on_chain: arity mismatch");
  const PermTable& tab = PermTable::get(g.n());
  ChainVector out;
  out.n = v.n;
  out.mod = v.mod;
  for (const auto& [c, coeff] : v.terms)
    for (const auto& [r, gc] : g.terms())
      out.add(permute_legs(tab.perms[r], c, v.n, v.mod.k), coeff * gc);
  return out;
}

ChainVector bgs_project(int i, const ChainVector& v) {
  if (v.n < 1) throw std::invalid_argument("bgs_project: needs legs");
  return act_on_chain(eulerian_idempotent(v.n, i), v);
}

ChainVector degree_project(const MultiDegree& N, const ChainVector& v) {
  ChainVector out;
  out.n = v.n;
  out.mod = v.mod;
  for (const auto& [c, coeff] : v.terms)
    if (chain_degree(c, v.n, v.mod.k) == N) out.terms.emplace_back(c, coeff);
  return out;
}

ChainVector truncation_project(int cap, const ChainVector& v) {
  ChainVector out;
  out.n = v.n;
  out.mod = ModuleSpec::truncation(v.mod.k, cap);
  for (const auto& [c, coeff] : v.terms)
    if (out.mod.slot_admissible(c.e.data())) out.terms.emplace_back(c, coeff);
  return out;
}

ChainBlock ChainBlock::make(int n, const MultiDegree& N,
                            const ModuleSpec& mod) {
  ChainBlock b;
  b.n = n;
  b.N = N;
  b.mod = mod;
  b.basis = enumerate_chain_basis(n, N, mod);
  return b;
}

int ChainBlock::index_of(const MonomialChain& c) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), c);
  if (it != basis.end() && *it == c) return int(it - basis.begin());
  return -1;
}

namespace {

// Raw d_{m-1} block: m-leg chains to (m-1)-leg chains, no labels.
BlockMatrix raw_boundary(const ChainBlock& domain, const ChainBlock& target) {
  BlockMatrix d(uint32_t(target.basis.size()), uint32_t(domain.basis.size()));
  const int m = domain.n;
  for (uint32_t c = 0; c < domain.basis.size(); ++c) {
    std::vector<std::pair<uint32_t, Rational>> buf;
    for (int j = 0; j <= m; ++j) {
      auto f = face_chain(j, domain.basis[c], m, domain.mod);
      if (!f) continue;
      int r = target.index_of(*f);
      if (r < 0) throw std::logic_error("face left the degree block");
      buf.emplace_back(uint32_t(r), Rational(j % 2 == 0 ? 1 : -1));
    }
    std::sort(buf.begin(), buf.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec col;
    for (auto& [r, v] : buf) {
      if (!col.t.empty() && col.t.back().first == r)
        col.t.back().second += v;
      else
        col.t.emplace_back(r, std::move(v));
    }
    std::erase_if(col.t,
                  [](const auto& t) { return hodgeham::is_zero(t.second); });
    d.set_column(c, std::move(col));
  }
  return d;
}

}  // namespace

BlockMatrix boundary_block(int n, const MultiDegree& N,
                           const ModuleSpec& mod) {
  ChainBlock domain = ChainBlock::make(n + 1, N, mod);
  ChainBlock target = ChainBlock::make(n, N, mod);
  BlockMatrix d = raw_boundary(domain, target);
  d.row_labels.reserve(target.basis.size());
  for (const auto& c : target.basis)
    d.row_labels.push_back(chain_str(c, n, mod.k));
  d.col_labels.reserve(domain.basis.size());
  for (const auto& c : domain.basis)
    d.col_labels.push_back(chain_str(c, n + 1, mod.k));
  return d;
}

HodgeEngine::BlockKey HodgeEngine::key(int n, const MultiDegree& N,
                                       const ModuleSpec& mod) {
  std::ostringstream os;
  os << n << '/' << mod.str() << '/' << mod.k;
  for (int d : N) os << ',' << d;
  return os.str();
}

namespace {

SparseVec combine_terms(std::vector<std::pair<uint32_t, Rational>> buf) {
  std::sort(buf.begin(), buf.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [r, v] : buf) {
    if (!out.t.empty() && out.t.back().first == r)
      out.t.back().second += v;
    else
      out.t.emplace_back(r, std::move(v));
  }
  std::erase_if(out.t,
                [](const auto& t) { return hodgeham::is_zero(t.second); });
  return out;
}

HodgeEngine::PatternData build_pattern(int n, int i, bool dual,
                                       const std::vector<int>& lambda) {
  std::vector<uint8_t> letters;
  for (size_t t = 0; t < lambda.size(); ++t)
    letters.insert(letters.end(), size_t(lambda[t]), uint8_t(t));
  std::vector<std::vector<uint8_t>> arr;
  {
    std::vector<uint8_t> w = letters;
    do {
      arr.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
  }
  auto index_of = [&arr](const std::vector<uint8_t>& w) {
    return uint32_t(std::lower_bound(arr.begin(), arr.end(), w) - arr.begin());
  };

  // transposing the action matrix amounts to acting by inverses
  const GroupAlgebraElement& e = eulerian_idempotent(n, i);
  const PermTable& tab = PermTable::get(n);
  Eliminator elim(uint32_t(arr.size()));
  HodgeEngine::PatternData data;
  for (uint32_t b = 0; b < arr.size(); ++b) {
    std::vector<std::pair<uint32_t, Rational>> buf;
    buf.reserve(e.terms().size());
    for (const auto& [r, c] : e.terms()) {
      const Permutation& sigma =
          dual ? tab.perms[tab.inverses[r]] : tab.perms[r];
      std::vector<uint8_t> w(arr[b].size());
      for (size_t t = 0; t < w.size(); ++t) w[sigma.img[t] - 1] = arr[b][t];
      buf.emplace_back(index_of(w), c);
    }
    auto piv = elim.add_column(combine_terms(std::move(buf)));
    if (piv) {
      data.pivot_rows.push_back(*piv);
      data.image.push_back(elim.pivot_column(elim.rank() - 1));
    }
  }
  return data;
}

}  // namespace

SparseVec HodgeEngine::VBlock::coords(const SparseVec& ambient) const {
  if (identity) return ambient;
  // bucket the entries by orbit; ambient order is arrangement order within
  // each orbit, so the buckets come out sorted
  std::map<uint32_t, SparseVec> buckets;
  for (const auto& [idx, c] : ambient.t) {
    auto [orbit, arr] = chain_to_orbit[idx];
    buckets[orbit].t.emplace_back(arr, c);
  }
  SparseVec out;
  for (auto& [o, residual] : buckets) {
    const Orbit& orb = orbits[o];
    for (uint32_t j = 0; j < orb.pattern->image.size(); ++j) {
      Rational c = residual.at(orb.pattern->pivot_rows[j]);
      if (hodgeham::is_zero(c)) continue;
      axpy(residual, -c, orb.pattern->image[j]);
      out.t.emplace_back(orb.coord_base + j, std::move(c));
    }
    if (!residual.empty())
      throw std::logic_error("boundary image escapes the projected summand");
  }
  return out;
}

const HodgeEngine::VBlock& HodgeEngine::vblock(int m, const MultiDegree& N,
                                               const ModuleSpec& mod, int i,
                                               bool dual) {
  auto ckey = std::make_tuple(key(m, N, mod), i, dual);
  auto it = vblocks_.find(ckey);
  if (it != vblocks_.end()) return it->second;

  VBlock v;
  ChainBlock block = ChainBlock::make(m, N, mod);
  v.chain_to_orbit.assign(block.basis.size(), {0, 0});

  if (m == 0 || i == 0) {
    v.identity = true;
    v.dim = block.basis.size();
    v.basis.reserve(block.basis.size());
    for (uint32_t idx = 0; idx < uint32_t(block.basis.size()); ++idx)
      v.basis.push_back(SparseVec::unit(idx));
    return vblocks_.emplace(ckey, std::move(v)).first->second;
  }

  const int k = mod.k;
  std::map<std::vector<int>, uint32_t> orbit_ids;
  uint32_t coord_base = 0;

  for (uint32_t idx = 0; idx < uint32_t(block.basis.size()); ++idx) {
    const MonomialChain& c = block.basis[idx];
    std::vector<std::vector<int>> legs(m);
    for (int t = 0; t < m; ++t)
      legs[t].assign(c.e.begin() + size_t(t + 1) * k,
                     c.e.begin() + size_t(t + 2) * k);
    std::sort(legs.begin(), legs.end());
    std::vector<int> okey(c.e.begin(), c.e.begin() + k);
    for (const auto& leg : legs)
      okey.insert(okey.end(), leg.begin(), leg.end());
    if (!orbit_ids.emplace(okey, uint32_t(v.orbits.size())).second) continue;

    VBlock::Orbit orb;
    orb.coord_base = coord_base;
    std::vector<std::vector<int>> distinct;
    std::vector<int> lambda;
    for (const auto& leg : legs) {
      if (distinct.empty() || distinct.back() != leg) {
        distinct.push_back(leg);
        lambda.push_back(1);
      } else {
        ++lambda.back();
      }
    }
    auto pkey = std::make_tuple(m, i, dual, lambda);
    auto pit = patterns_.find(pkey);
    if (pit == patterns_.end())
      pit = patterns_.emplace(pkey, build_pattern(m, i, dual, lambda)).first;
    orb.pattern = &pit->second;

    // walk the orbit's arrangements (lex order = block order within orbit)
    std::vector<uint8_t> arrangement;
    for (size_t t = 0; t < lambda.size(); ++t)
      arrangement.insert(arrangement.end(), size_t(lambda[t]), uint8_t(t));
    MonomialChain concrete;
    concrete.e.resize(size_t(m + 1) * k);
    std::copy(c.e.begin(), c.e.begin() + k, concrete.e.begin());
    uint32_t arr_idx = 0;
    do {
      for (int t = 0; t < m; ++t)
        std::copy(distinct[arrangement[t]].begin(),
                  distinct[arrangement[t]].end(),
                  concrete.e.begin() + size_t(t + 1) * k);
      int bidx = block.index_of(concrete);
      if (bidx < 0) throw std::logic_error("orbit member missing from block");
      orb.chain_by_arr.push_back(uint32_t(bidx));
      v.chain_to_orbit[uint32_t(bidx)] = {uint32_t(v.orbits.size()), arr_idx};
      ++arr_idx;
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));

    for (const auto& pv : orb.pattern->image) {
      SparseVec amb;
      amb.t.reserve(pv.t.size());
      for (const auto& [a, coeff] : pv.t)
        amb.t.emplace_back(orb.chain_by_arr[a], coeff);
      v.basis.push_back(std::move(amb));
    }
    coord_base += uint32_t(orb.pattern->image.size());
    v.orbits.push_back(std::move(orb));
  }
  v.dim = coord_base;
  return vblocks_.emplace(ckey, std::move(v)).first->second;
}

const BlockMatrix& HodgeEngine::raw_block(int m, const MultiDegree& N,
                                          const ModuleSpec& mod) {
  BlockKey bkey = key(m, N, mod);
  auto it = raw_blocks_.find(bkey);
  if (it != raw_blocks_.end()) return it->second;
  ChainBlock domain = ChainBlock::make(m, N, mod);
  ChainBlock target = ChainBlock::make(m - 1, N, mod);
  return raw_blocks_.emplace(bkey, raw_boundary(domain, target)).first->second;
}

uint64_t HodgeEngine::raw_rank(int m, const MultiDegree& N,
                               const ModuleSpec& mod, bool dual) {
  if (m < 1) return 0;
  auto ckey = std::make_tuple(key(m, N, mod), dual);
  auto it = raw_ranks_.find(ckey);
  if (it != raw_ranks_.end()) return it->second;
  const BlockMatrix& d = raw_block(m, N, mod);
  uint64_t r = dual ? rank(d.transposed()) : rank(d);
  return raw_ranks_.emplace(ckey, r).first->second;
}

uint64_t HodgeEngine::restricted_rank(int m, const MultiDegree& N,
                                      const ModuleSpec& mod, int i,
                                      bool dual) {
  if (!dual && m < 1) return 0;
  auto ckey = std::make_tuple(key(m, N, mod), i, dual);
  auto it = ranks_.find(ckey);
  if (it != ranks_.end()) return it->second;

  const VBlock& dom = vblock(m, N, mod, i, dual);
  uint64_t r = 0;
  if (dom.dim == 0) return ranks_.emplace(ckey, r).first->second;

  // primal: boundary level m -> m-1; dual: coboundary level m -> m+1,
  // the transpose of the boundary one level up
  const BlockMatrix& d = raw_block(dual ? m + 1 : m, N, mod);
  const BlockMatrix op = dual ? d.transposed() : d;
  const VBlock& cod = vblock(dual ? m + 1 : m - 1, N, mod, i, dual);

  Eliminator elim(uint32_t(cod.dim));
  for (const auto& w : dom.basis) elim.add_column(cod.coords(op.apply(w)));
  r = elim.rank();
  return ranks_.emplace(ckey, r).first->second;
}

uint64_t HodgeEngine::summand_dim(int n, const MultiDegree& N,
                                  const ModuleSpec& mod, int i) {
  if (i < 1) throw std::invalid_argument("summand_dim: i >= 1");
  if (n < 1) return 0;
  return vblock(n, N, mod, i, false).dim;
}

HomologyDims HodgeEngine::homology(int n, const MultiDegree& N,
                                   const ModuleSpec& mod, int i) {
  if (n < 0) throw std::invalid_argument("homology: n >= 0");
  if (i != 0 && n == 0)
    throw std::invalid_argument("homology: no summands at n = 0");
  HomologyDims h;
  if (i == 0) {
    h.dim_chain = block_dim(n, N, mod);
    uint64_t r_in = raw_rank(n, N, mod, false);
    uint64_t r_out = raw_rank(n + 1, N, mod, false);
    h.dim_cycle = h.dim_chain - r_in;
    h.dim_boundary = r_out;
    h.dim_homology = h.dim_cycle - h.dim_boundary;
    return h;
  }
  h.dim_chain = summand_dim(n, N, mod, i);
  uint64_t r_in = restricted_rank(n, N, mod, i, false);
  uint64_t r_out = restricted_rank(n + 1, N, mod, i, false);
  h.dim_cycle = h.dim_chain - r_in;
  h.dim_boundary = r_out;
  h.dim_homology = h.dim_cycle - h.dim_boundary;
  return h;
}

HomologyDims HodgeEngine::cohomology(int n, const MultiDegree& N,
                                     const ModuleSpec& mod, int i) {
  if (n < 0) throw std::invalid_argument("cohomology: n >= 0");
  if (i != 0 && n == 0)
    throw std::invalid_argument("cohomology: no summands at n = 0");
  HomologyDims h;
  if (i == 0) {
    h.dim_chain = block_dim(n, N, mod);
    uint64_t r_out = raw_rank(n + 1, N, mod, true);  // rank of delta^n
    uint64_t r_in = raw_rank(n, N, mod, true);       // rank of delta^(n-1)
    h.dim_cycle = h.dim_chain - r_out;
    h.dim_boundary = r_in;
    h.dim_homology = h.dim_cycle - h.dim_boundary;
    return h;
  }
  const VBlock& v = vblock(n, N, mod, i, true);
  h.dim_chain = v.dim;
  uint64_t r_out = restricted_rank(n, N, mod, i, true);
  uint64_t r_in = n >= 1 ? restricted_rank(n - 1, N, mod, i, true) : 0;
  h.dim_cycle = h.dim_chain - r_out;
  h.dim_boundary = r_in;
  h.dim_homology = h.dim_cycle - h.dim_boundary;
  return h;
}

HomologyDims homology_dims(int n, const MultiDegree& N, const ModuleSpec& mod,
                           int i) {
  HodgeEngine engine;
  return engine.homology(n, N, mod, i);
}

HomologyDims cohomology_dims(int n, const MultiDegree& N,
                             const ModuleSpec& mod, int i) {
  HodgeEngine engine;
  return engine.cohomology(n, N, mod, i);
}

int derivation_block_norm(int p, int N) {
  if (p < 0 || N < 0) throw std::invalid_argument("derivation_block_norm");
  // D(z) = z^p extended by the product rule; on z^N the result is a single
  // monomial whose coefficient the loop accumulates factor by factor
  std::map<int, Rational> image;  // exponent -> coefficient of D(z^a)
  if (N >= 1) image.emplace(p, Rational(1));
  for (int a = 2; a <= N; ++a) {
    // D(z^a) = D(z^{a-1}) z + z^{a-1} D(z)
    std::map<int, Rational> next;
    for (const auto& [e, c] : image) next[e + 1] += c;
    next[a - 1 + p] += Rational(1);
    image = std::move(next);
  }
  Rational norm(0);
  for (const auto& [e, c] : image) norm += abs(c);
  // the block is one-dimensional, so the column sum is the norm
  mpz_class num = norm.get_num();
  if (norm.get_den() != 1 || !num.fits_sint_p())
    throw std::logic_error("derivation norm not integral");
  return int(num.get_si());
}

}  // namespace hodgeham
