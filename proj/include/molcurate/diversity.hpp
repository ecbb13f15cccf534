#pragma once

#include <cstdint>
#include <vector>

#include "molcurate/fingerprint.hpp"

namespace molcurate {

// Greedy MaxMin picking: start from a seed-chosen element, repeatedly add
// the element with the largest minimum distance to the picked set (lowest
// index on ties); stop when that distance falls below t or k_max is
// reached. All picked pairs end up at distance >= t.
std::vector<int> maxmin_pick(const std::vector<Fingerprint>& fps, double t,
                             int k_max, uint64_t seed);

// Label every element with the index (into `centers`) of its nearest
// center, lowest-index tie-break. A center labels itself.
std::vector<int> assign_to_centers(const std::vector<Fingerprint>& fps,
                                   const std::vector<int>& centers);

// MaxMin centers + per-cluster uniform samples + global top-up, exactly m
// elements. Returned indices are sorted ascending. Throws
// std::invalid_argument when m > |fps|.
std::vector<int> diverse_subset(const std::vector<Fingerprint>& fps, int m,
                                double t, uint64_t seed);

struct NCirclesResult {
  long long count = 0;
  double normalized = 0.0;      // count / N
  std::vector<int> accepted;    // the greedy packing, in input order
};

// Greedy lower bound on the packing number: scan in input order, accept an
// element iff its distance to every accepted element is >= t.
NCirclesResult ncircles(const std::vector<Fingerprint>& fps, double t);

struct DistanceSummary {
  double p10 = 0, p25 = 0, mean = 0, median = 0, p75 = 0, p90 = 0;
};

struct PairDistanceStats {
  DistanceSummary a;
  DistanceSummary b;
  double wasserstein = 0.0;
  double ks = 0.0;
  std::vector<double> samples_a;  // sampled within-set distances
  std::vector<double> samples_b;
};

// Sample n_pairs within-set Tanimoto distances from each set and compare
// the two empirical distributions. Each set needs >= 2 elements.
PairDistanceStats pair_distance_stats(const std::vector<Fingerprint>& fps_a,
                                      const std::vector<Fingerprint>& fps_b,
                                      long long n_pairs, uint64_t seed);

// Nearest-rank percentile summary of a sample vector.
DistanceSummary summarize_distances(std::vector<double> samples);

// Exact 1-D Wasserstein distance between two empirical distributions.
double wasserstein_distance(std::vector<double> x, std::vector<double> y);

// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic(std::vector<double> x, std::vector<double> y);

}  // namespace molcurate
