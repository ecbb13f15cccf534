#include "molcurate/fingerprint.hpp"

#include <algorithm>
#include <bit>

namespace molcurate {

namespace {

bool power_of_two(int w) { return w > 0 && (w & (w - 1)) == 0; }

// splitmix64 finalizer: platform-independent 64-bit mixing.
uint64_t mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t combine(uint64_t h, uint64_t v) { return mix(h ^ mix(v)); }

int bond_code(const Bond& b) {
  if (b.aromatic) return 4;
  return b.order;
}

}  // namespace

Fingerprint::Fingerprint(int width) : width_(width), popcount_(0) {
  if (!power_of_two(width)) {
    throw std::invalid_argument("fingerprint width must be a power of two");
  }
  words_.resize(static_cast<size_t>(width) / 64, 0);
}

bool Fingerprint::test(int bit) const {
  return (words_[static_cast<size_t>(bit) / 64] >> (bit % 64)) & 1u;
}

void Fingerprint::set(int bit) {
  uint64_t& w = words_[static_cast<size_t>(bit) / 64];
  uint64_t mask = 1ULL << (bit % 64);
  if (!(w & mask)) {
    w |= mask;
    ++popcount_;
  }
}

Fingerprint ecfp(const Molecule& m, int radius, int width) {
  Fingerprint fp(width);
  const int n = static_cast<int>(m.atoms.size());
  if (n == 0) return fp;

  std::vector<uint64_t> env(n);
  for (int i = 0; i < n; ++i) {
    const Atom& a = m.atoms[i];
    uint64_t h = mix(0x6d6f6c63ULL);
    h = combine(h, static_cast<uint64_t>(a.atomic_num));
    h = combine(h, static_cast<uint64_t>(a.formal_charge + 16));
    h = combine(h, static_cast<uint64_t>(a.isotope));
    h = combine(h, static_cast<uint64_t>(a.implicit_h));
    h = combine(h, a.aromatic ? 1 : 0);
    h = combine(h, a.in_ring ? 1 : 0);
    h = combine(h, static_cast<uint64_t>(m.degree(i)));
    env[i] = h;
  }
  for (uint64_t h : env) fp.set(static_cast<int>(h % width));

  std::vector<uint64_t> next(n);
  for (int r = 1; r <= radius; ++r) {
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<uint64_t, uint64_t>> nbrs;
      for (int bi : m.adj[i]) {
        const Bond& b = m.bonds[bi];
        nbrs.emplace_back(static_cast<uint64_t>(bond_code(b)),
                          env[b.other(i)]);
      }
      std::sort(nbrs.begin(), nbrs.end());
      uint64_t h = combine(mix(static_cast<uint64_t>(r)), env[i]);
      for (const auto& [code, nb] : nbrs) {
        h = combine(h, code);
        h = combine(h, nb);
      }
      next[i] = h;
    }
    env.swap(next);
    for (uint64_t h : env) fp.set(static_cast<int>(h % width));
  }
  return fp;
}

double tanimoto_distance(const Fingerprint& a, const Fingerprint& b) {
  if (a.width() != b.width()) {
    throw std::invalid_argument("fingerprint width mismatch");
  }
  int inter = 0;
  int uni = 0;
  for (size_t i = 0; i < a.words_.size(); ++i) {
    inter += std::popcount(a.words_[i] & b.words_[i]);
    uni += std::popcount(a.words_[i] | b.words_[i]);
  }
  if (uni == 0) return 0.0;
  return 1.0 - static_cast<double>(inter) / uni;
}

std::pair<double, int> min_distance_to_set(const Fingerprint& q,
                                           const std::vector<Fingerprint>& s) {
  if (s.empty()) throw std::invalid_argument("empty fingerprint set");
  double best = 2.0;
  int best_idx = -1;
  const int pq = q.popcount();
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    const int pc = s[i].popcount();
    // |AND| <= min(pa, pb) and |OR| >= max(pa, pb), so the distance is at
    // least 1 - min/max; skip candidates that cannot beat the current best.
    if (pq > 0 || pc > 0) {
      int lo = std::min(pq, pc);
      int hi = std::max(pq, pc);
      double lower = 1.0 - (hi > 0 ? static_cast<double>(lo) / hi : 0.0);
      if (lower >= best) continue;
    }
    double d = tanimoto_distance(q, s[i]);
    if (d < best) {
      best = d;
      best_idx = i;
    }
  }
  return {best, best_idx};
}

}  // namespace molcurate
