#include "hodgeham/symgroup.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hodgeham {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), uint8_t(1));
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  Permutation out;
  out.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) out.img[i] = img[other.img[i] - 1];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i)
    out.img[img[i] - 1] = static_cast<uint8_t>(i + 1);
  return out;
}

int Permutation::sign() const {
  int inv = 0;
  for (size_t i = 0; i < img.size(); ++i)
    for (size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < img.size(); ++i) {
    if (i) os << ',';
    os << int(img[i]);
  }
  os << ']';
  return os.str();
}

uint32_t PermTable::compose_rank(uint32_t a, uint32_t b) const {
  if (!compose.empty()) return compose[a * fact + b];
  return rank_of(perms[a].compose(perms[b]));
}

uint32_t PermTable::rank_of(const Permutation& p) {
  const int n = p.n();
  uint32_t r = 0;
  uint32_t f = 1;
  for (int i = 2; i < n; ++i) f *= i;  // (n-1)!
  for (int i = 0; i < n - 1; ++i) {
    uint32_t smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p.img[j] < p.img[i]) ++smaller;
    r += smaller * f;
    f /= (n - 1 - i);
  }
  return r;
}

const PermTable& PermTable::get(int n) {
  if (n < 0 || n > 7) throw std::invalid_argument("PermTable: n out of range");
  static PermTable tables[8];
  static std::once_flag built[8];
  std::call_once(built[n], [n] {
    PermTable& t = tables[n];
    t.n = n;
    t.fact = 1;
    for (int i = 2; i <= n; ++i) t.fact *= i;
    t.perms.reserve(t.fact);
    Permutation p = Permutation::identity(n);
    do {
      t.perms.push_back(p);
    } while (std::next_permutation(p.img.begin(), p.img.end()));
    t.signs.resize(t.fact);
    t.inverses.resize(t.fact);
    for (uint32_t r = 0; r < t.fact; ++r) {
      t.signs[r] = static_cast<int8_t>(t.perms[r].sign());
      t.inverses[r] = rank_of(t.perms[r].inverse());
    }
    if (n <= 6) {
      t.compose.resize(size_t(t.fact) * t.fact);
      for (uint32_t a = 0; a < t.fact; ++a)
        for (uint32_t b = 0; b < t.fact; ++b)
          t.compose[size_t(a) * t.fact + b] =
              static_cast<uint16_t>(rank_of(t.perms[a].compose(t.perms[b])));
    }
  });
  return tables[n];
}

GroupAlgebraElement GroupAlgebraElement::unit(int n) {
  GroupAlgebraElement e(n);
  e.terms_.emplace(0, Rational(1));  // identity has lex rank 0
  return e;
}

void GroupAlgebraElement::add(const Permutation& p, const Rational& c) {
  add_rank(PermTable::rank_of(p), c);
}

void GroupAlgebraElement::add_rank(uint32_t r, const Rational& c) {
  if (hodgeham::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (hodgeham::is_zero(it->second)) terms_.erase(it);
  }
}

Rational GroupAlgebraElement::coeff(const Permutation& p) const {
  auto it = terms_.find(PermTable::rank_of(p));
  return it == terms_.end() ? Rational(0) : it->second;
}

GroupAlgebraElement GroupAlgebraElement::times(
    const GroupAlgebraElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("times: mixed S_n");
  const PermTable& t = PermTable::get(n_);
  std::vector<Rational> acc(t.fact, Rational(0));
  for (const auto& [ra, ca] : terms_)
    for (const auto& [rb, cb] : o.terms_)
      acc[t.compose_rank(ra, rb)] += ca * cb;
  GroupAlgebraElement out(n_);
  for (uint32_t r = 0; r < t.fact; ++r)
    if (!hodgeham::is_zero(acc[r])) out.terms_.emplace(r, std::move(acc[r]));
  return out;
}

GroupAlgebraElement GroupAlgebraElement::plus(const GroupAlgebraElement& o,
                                              const Rational& scale) const {
  GroupAlgebraElement out = *this;
  for (const auto& [r, c] : o.terms_) out.add_rank(r, scale * c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& c) const {
  GroupAlgebraElement out(n_);
  if (hodgeham::is_zero(c)) return out;
  for (const auto& [r, v] : terms_) out.terms_.emplace(r, c * v);
  return out;
}

std::string GroupAlgebraElement::str() const {
  const PermTable& t = PermTable::get(n_);
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [r, c] : terms_) {
    if (!first) os << ", ";
    first = false;
    os << t.perms[r].str() << ": " << rational_str(c);
  }
  os << '}';
  return os.str();
}

GroupAlgebraElement shuffle_sum(int p, int q) {
  const int n = p + q;
  GroupAlgebraElement out(n);
  // choose the ascending images of positions 1..p; the rest, ascending, are
  // the images of positions p+1..n
  std::vector<int> sel(p);
  std::iota(sel.begin(), sel.end(), 1);
  while (true) {
    Permutation sigma;
    sigma.img.resize(n);
    std::vector<bool> used(n + 1, false);
    for (int i = 0; i < p; ++i) {
      sigma.img[i] = static_cast<uint8_t>(sel[i]);
      used[sel[i]] = true;
    }
    int pos = p;
    for (int v = 1; v <= n; ++v)
      if (!used[v]) sigma.img[pos++] = static_cast<uint8_t>(v);
    out.add(sigma, Rational(sigma.sign()));
    // next p-combination of {1..n}
    int i = p - 1;
    while (i >= 0 && sel[i] == n - (p - 1 - i)) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < p; ++j) sel[j] = sel[j - 1] + 1;
  }
  return out;
}

GroupAlgebraElement total_shuffle(int n) {
  GroupAlgebraElement out(n);
  for (int p = 1; p < n; ++p) out = out.plus(shuffle_sum(p, n - p));
  return out;
}

GroupAlgebraElement antisymmetrizer(int n) {
  const PermTable& t = PermTable::get(n);
  Rational inv_fact = ratio(1, long(t.fact));
  GroupAlgebraElement out(n);
  for (uint32_t r = 0; r < t.fact; ++r)
    out.add_rank(r, Rational(int(t.signs[r])) * inv_fact);
  return out;
}

const GroupAlgebraElement& eulerian_idempotent(int n, int i) {
  if (n < 1 || n > 7 || i < 1)
    throw std::invalid_argument("eulerian_idempotent: bad (n, i)");
  static std::map<std::pair<int, int>, GroupAlgebraElement> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, i);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  GroupAlgebraElement e = GroupAlgebraElement::unit(n);
  if (i > n) {
    e = GroupAlgebraElement(n);  // zero
  } else {
    const GroupAlgebraElement s = total_shuffle(n);
    auto eig = [](int j) { return Rational((1L << j) - 2); };
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      // e *= (s - eig(j)) / (eig(i) - eig(j))
      e = e.times(s.plus(GroupAlgebraElement::unit(n), -eig(j)));
      e = e.scaled(Rational(1) / (eig(i) - eig(j)));
    }
  }
  return cache.emplace(key, std::move(e)).first->second;
}

}  // namespace hodgeham
