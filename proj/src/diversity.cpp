#include "molcurate/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace molcurate {

std::vector<int> maxmin_pick(const std::vector<Fingerprint>& fps, double t,
                             int k_max, uint64_t seed) {
  if (fps.empty()) throw std::invalid_argument("maxmin_pick: empty input");
  if (k_max < 1) throw std::invalid_argument("maxmin_pick: k_max < 1");
  const int n = static_cast<int>(fps.size());
  std::mt19937_64 rng(seed);
  int first = static_cast<int>(rng() % n);

  std::vector<int> picked = {first};
  std::vector<double> min_dist(n);
  for (int i = 0; i < n; ++i) {
    min_dist[i] = tanimoto_distance(fps[i], fps[first]);
  }
  while (static_cast<int>(picked.size()) < k_max) {
    int best = -1;
    double best_dist = -1.0;
    for (int i = 0; i < n; ++i) {
      if (min_dist[i] > best_dist) {
        best_dist = min_dist[i];
        best = i;
      }
    }
    if (best_dist < t) break;
    picked.push_back(best);
    for (int i = 0; i < n; ++i) {
      min_dist[i] = std::min(min_dist[i], tanimoto_distance(fps[i], fps[best]));
    }
  }
  return picked;
}

std::vector<int> assign_to_centers(const std::vector<Fingerprint>& fps,
                                   const std::vector<int>& centers) {
  if (centers.empty()) {
    throw std::invalid_argument("assign_to_centers: no centers");
  }
  std::vector<int> labels(fps.size());
  for (size_t i = 0; i < fps.size(); ++i) {
    int best = 0;
    double best_dist = tanimoto_distance(fps[i], fps[centers[0]]);
    for (size_t c = 1; c < centers.size(); ++c) {
      double d = tanimoto_distance(fps[i], fps[centers[c]]);
      if (d < best_dist) {
        best_dist = d;
        best = static_cast<int>(c);
      }
    }
    labels[i] = best;
  }
  return labels;
}

std::vector<int> diverse_subset(const std::vector<Fingerprint>& fps, int m,
                                double t, uint64_t seed) {
  const int n = static_cast<int>(fps.size());
  if (m > n) throw std::invalid_argument("diverse_subset: m > dataset size");
  if (m < 1) throw std::invalid_argument("diverse_subset: m < 1");

  std::vector<int> centers = maxmin_pick(fps, t, m, seed);
  const int k = static_cast<int>(centers.size());
  std::vector<bool> selected(n, false);
  for (int c : centers) selected[c] = true;

  std::mt19937_64 rng(seed + 1);
  // floor((m - k) / k) - 1 extra molecules per cluster, clamped at 0; the
  // top-up phase covers the remainder.
  int per_cluster = std::max(0, (m - k) / k - 1);
  if (per_cluster > 0) {
    std::vector<int> labels = assign_to_centers(fps, centers);
    std::vector<std::vector<int>> members(k);
    for (int i = 0; i < n; ++i) {
      if (!selected[i]) members[labels[i]].push_back(i);
    }
    int total = k;
    for (int c = 0; c < k && total < m; ++c) {
      std::vector<int>& pool = members[c];
      std::shuffle(pool.begin(), pool.end(), rng);
      int take = std::min({per_cluster, static_cast<int>(pool.size()), m - total});
      for (int j = 0; j < take; ++j) {
        selected[pool[j]] = true;
        ++total;
      }
    }
  }

  int total = static_cast<int>(std::count(selected.begin(), selected.end(), true));
  if (total < m) {
    std::vector<int> pool;
    for (int i = 0; i < n; ++i) {
      if (!selected[i]) pool.push_back(i);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int j = 0; total < m; ++j) {
      selected[pool[j]] = true;
      ++total;
    }
  }

  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (selected[i]) out.push_back(i);
  }
  return out;
}

NCirclesResult ncircles(const std::vector<Fingerprint>& fps, double t) {
  NCirclesResult out;
  std::vector<Fingerprint> accepted_fps;
  for (int i = 0; i < static_cast<int>(fps.size()); ++i) {
    bool ok = accepted_fps.empty() ||
              min_distance_to_set(fps[i], accepted_fps).first >= t;
    if (ok) {
      accepted_fps.push_back(fps[i]);
      out.accepted.push_back(i);
    }
  }
  out.count = static_cast<long long>(out.accepted.size());
  out.normalized =
      fps.empty() ? 0.0 : static_cast<double>(out.count) / fps.size();
  return out;
}

DistanceSummary summarize_distances(std::vector<double> samples) {
  DistanceSummary s;
  if (samples.empty()) return s;
  std::sort(samples.begin(), samples.end());
  const size_t n = samples.size();
  auto nearest_rank = [&](double p) {
    size_t rank = static_cast<size_t>(std::ceil(p * n));
    if (rank < 1) rank = 1;
    return samples[rank - 1];
  };
  s.p10 = nearest_rank(0.10);
  s.p25 = nearest_rank(0.25);
  s.median = nearest_rank(0.50);
  s.p75 = nearest_rank(0.75);
  s.p90 = nearest_rank(0.90);
  s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  return s;
}

double wasserstein_distance(std::vector<double> x, std::vector<double> y) {
  if (x.empty() || y.empty()) {
    throw std::invalid_argument("wasserstein: empty sample");
  }
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  // Integrate |F_x - F_y| over the merged support.
  double total = 0.0;
  size_t i = 0, j = 0;
  double prev = std::min(x[0], y[0]);
  while (i < x.size() || j < y.size()) {
    double next;
    if (j >= y.size() || (i < x.size() && x[i] <= y[j])) {
      next = x[i];
    } else {
      next = y[j];
    }
    double fx = static_cast<double>(i) / x.size();
    double fy = static_cast<double>(j) / y.size();
    total += std::fabs(fx - fy) * (next - prev);
    prev = next;
    while (i < x.size() && x[i] == next) ++i;
    while (j < y.size() && y[j] == next) ++j;
  }
  return total;
}

double ks_statistic(std::vector<double> x, std::vector<double> y) {
  if (x.empty() || y.empty()) {
    throw std::invalid_argument("ks_statistic: empty sample");
  }
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  double best = 0.0;
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    double next;
    if (j >= y.size() || (i < x.size() && x[i] <= y[j])) {
      next = x[i];
    } else {
      next = y[j];
    }
    while (i < x.size() && x[i] == next) ++i;
    while (j < y.size() && y[j] == next) ++j;
    double fx = static_cast<double>(i) / x.size();
    double fy = static_cast<double>(j) / y.size();
    best = std::max(best, std::fabs(fx - fy));
  }
  return best;
}

namespace {

std::vector<double> sample_pair_distances(const std::vector<Fingerprint>& fps,
                                          long long n_pairs,
                                          std::mt19937_64& rng) {
  const int n = static_cast<int>(fps.size());
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n_pairs));
  for (long long s = 0; s < n_pairs; ++s) {
    int i = pick(rng);
    int j = pick(rng);
    while (j == i) j = pick(rng);
    out.push_back(tanimoto_distance(fps[i], fps[j]));
  }
  return out;
}

}  // namespace

PairDistanceStats pair_distance_stats(const std::vector<Fingerprint>& fps_a,
                                      const std::vector<Fingerprint>& fps_b,
                                      long long n_pairs, uint64_t seed) {
  if (fps_a.size() < 2 || fps_b.size() < 2) {
    throw std::invalid_argument("pair_distance_stats: sets need >= 2 elements");
  }
  if (n_pairs < 1) throw std::invalid_argument("pair_distance_stats: n_pairs < 1");
  std::mt19937_64 rng(seed);
  PairDistanceStats out;
  out.samples_a = sample_pair_distances(fps_a, n_pairs, rng);
  out.samples_b = sample_pair_distances(fps_b, n_pairs, rng);
  out.a = summarize_distances(out.samples_a);
  out.b = summarize_distances(out.samples_b);
  out.wasserstein = wasserstein_distance(out.samples_a, out.samples_b);
  out.ks = ks_statistic(out.samples_a, out.samples_b);
  return out;
}

}  // namespace molcurate
