#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "molcurate/diversity.hpp"
#include "test_util.hpp"

using namespace molcurate;

namespace {

// Two well-separated clusters of near-duplicate fingerprints.
std::vector<Fingerprint> bimodal(std::mt19937_64& rng, int per_cluster) {
  std::vector<Fingerprint> out;
  for (int c = 0; c < 2; ++c) {
    Fingerprint base(2048);
    for (int i = 0; i < 60; ++i) {
      base.set(static_cast<int>((c * 1024 + rng() % 900)));
    }
    for (int i = 0; i < per_cluster; ++i) {
      Fingerprint fp = base;
      fp.set(static_cast<int>(c * 1024 + rng() % 900));
      out.push_back(fp);
    }
  }
  return out;
}

double brute_min_pairwise(const std::vector<Fingerprint>& fps,
                          const std::vector<int>& idx) {
  double best = 2.0;
  for (size_t i = 0; i < idx.size(); ++i) {
    for (size_t j = i + 1; j < idx.size(); ++j) {
      best = std::min(best, tanimoto_distance(fps[idx[i]], fps[idx[j]]));
    }
  }
  return best;
}

// Exhaustive packing number for tiny instances.
int exact_packing(const std::vector<Fingerprint>& fps, double t) {
  const int n = static_cast<int>(fps.size());
  int best = 0;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
      if (mask & (1 << i)) idx.push_back(i);
    }
    if (static_cast<int>(idx.size()) <= best) continue;
    if (idx.size() == 1 || brute_min_pairwise(fps, idx) >= t) {
      best = static_cast<int>(idx.size());
    }
  }
  return best;
}

double mean_pairwise(const std::vector<Fingerprint>& fps,
                     const std::vector<int>& idx) {
  double sum = 0;
  int count = 0;
  for (size_t i = 0; i < idx.size(); ++i) {
    for (size_t j = i + 1; j < idx.size(); ++j) {
      sum += tanimoto_distance(fps[idx[i]], fps[idx[j]]);
      ++count;
    }
  }
  return count ? sum / count : 0.0;
}

}  // namespace

TEST_CASE("maxmin basics") {
  std::mt19937_64 rng(71);
  std::vector<Fingerprint> same(20, testutil::random_fingerprint(rng));
  CHECK(maxmin_pick(same, 0.9, 20, 1).size() == 1);

  std::vector<Fingerprint> fps;
  for (int i = 0; i < 30; ++i) fps.push_back(testutil::random_fingerprint(rng));
  CHECK(maxmin_pick(fps, 0.5, 1, 3).size() == 1);
}

TEST_CASE("maxmin centers satisfy the pairwise threshold") {
  std::mt19937_64 rng(73);
  const double thresholds[] = {0.5, 0.75, 0.9};
  for (int run = 0; run < 300; ++run) {
    std::vector<Fingerprint> fps;
    int n = 5 + static_cast<int>(rng() % 60);
    for (int i = 0; i < n; ++i) {
      fps.push_back(testutil::random_fingerprint(rng, 2048, 10 + rng() % 50));
    }
    double t = thresholds[run % 3];
    std::vector<int> centers = maxmin_pick(fps, t, n, rng());
    if (centers.size() > 1) {
      CHECK(brute_min_pairwise(fps, centers) >= t);
    }
  }
}

TEST_CASE("assign_to_centers equals naive nearest neighbor") {
  std::mt19937_64 rng(79);
  std::vector<Fingerprint> fps;
  for (int i = 0; i < 200; ++i) {
    fps.push_back(testutil::random_fingerprint(rng));
  }
  std::vector<int> centers = {3, 50, 120, 199};
  std::vector<int> labels = assign_to_centers(fps, centers);
  for (int i = 0; i < 200; ++i) {
    int best = 0;
    double best_d = tanimoto_distance(fps[i], fps[centers[0]]);
    for (size_t c = 1; c < centers.size(); ++c) {
      double d = tanimoto_distance(fps[i], fps[centers[c]]);
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(c);
      }
    }
    CHECK(labels[i] == best);
  }
  for (size_t c = 0; c < centers.size(); ++c) {
    CHECK(labels[centers[c]] == static_cast<int>(c));
  }
}

TEST_CASE("diverse_subset size, determinism, cluster coverage") {
  std::mt19937_64 rng(83);
  std::vector<Fingerprint> fps = bimodal(rng, 25);

  std::vector<int> all = diverse_subset(fps, 50, 0.5, 9);
  CHECK(all.size() == 50);

  std::vector<int> sub = diverse_subset(fps, 10, 0.5, 9);
  CHECK(sub.size() == 10);
  CHECK(sub == diverse_subset(fps, 10, 0.5, 9));
  CHECK(sub != diverse_subset(fps, 10, 0.5, 10));

  bool low = false, high = false;
  for (int i : sub) {
    (i < 25 ? low : high) = true;
  }
  CHECK(low);
  CHECK(high);

  // diverse subset at least as spread out as random ones on average
  std::vector<int> pool(fps.size());
  std::iota(pool.begin(), pool.end(), 0);
  double random_mean = 0;
  const int trials = 30;
  for (int trial = 0; trial < trials; ++trial) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> random_sub(pool.begin(), pool.begin() + 10);
    random_mean += mean_pairwise(fps, random_sub);
  }
  random_mean /= trials;
  CHECK(mean_pairwise(fps, sub) >= random_mean - 0.01);

  CHECK_THROWS_AS(diverse_subset(fps, 51, 0.5, 1), std::invalid_argument);
}

TEST_CASE("diverse_subset m equals k returns exactly the centers") {
  std::mt19937_64 rng(89);
  std::vector<Fingerprint> fps = bimodal(rng, 10);
  std::vector<int> centers = maxmin_pick(fps, 0.5, 2, 5);
  REQUIRE(centers.size() == 2);  // two clusters, within-cluster distance small
  std::vector<int> sub = diverse_subset(fps, 2, 0.5, 5);
  std::vector<int> sorted_centers = centers;
  std::sort(sorted_centers.begin(), sorted_centers.end());
  CHECK(sub == sorted_centers);
}

TEST_CASE("ncircles boundary thresholds") {
  std::mt19937_64 rng(97);
  std::vector<Fingerprint> fps;
  for (int i = 0; i < 40; ++i) fps.push_back(testutil::random_fingerprint(rng));
  NCirclesResult r0 = ncircles(fps, 0.0);
  CHECK(r0.count == 40);
  CHECK(r0.normalized == doctest::Approx(1.0));
  NCirclesResult r2 = ncircles(fps, 1.5);
  CHECK(r2.count == 1);
}

TEST_CASE("ncircles is a valid maximal packing and near-exact on tiny inputs") {
  std::mt19937_64 rng(101);
  int exact_hits = 0;
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Fingerprint> fps;
    int n = 4 + static_cast<int>(rng() % 9);  // up to 12
    for (int i = 0; i < n; ++i) {
      fps.push_back(testutil::random_fingerprint(rng, 256, 4 + rng() % 12));
    }
    double t = 0.5 + 0.4 * (rng() % 100) / 100.0;
    NCirclesResult r = ncircles(fps, t);
    // valid packing
    if (r.accepted.size() > 1) {
      CHECK(brute_min_pairwise(fps, r.accepted) >= t);
    }
    // maximal: every rejected element conflicts with an accepted one
    for (int i = 0; i < n; ++i) {
      if (std::find(r.accepted.begin(), r.accepted.end(), i) !=
          r.accepted.end()) {
        continue;
      }
      bool conflicts = false;
      for (int a : r.accepted) {
        if (tanimoto_distance(fps[i], fps[a]) < t) conflicts = true;
      }
      CHECK(conflicts);
    }
    int exact = exact_packing(fps, t);
    CHECK(r.count <= exact);
    if (r.count == exact) ++exact_hits;
  }
  CHECK(exact_hits >= trials * 95 / 100);
}

TEST_CASE("ncircles monotone nonincreasing in t") {
  std::mt19937_64 rng(103);
  std::vector<Fingerprint> fps;
  for (int i = 0; i < 80; ++i) {
    fps.push_back(testutil::random_fingerprint(rng, 2048, 10 + rng() % 50));
  }
  long long prev = ncircles(fps, 0.0).count;
  for (double t = 0.1; t <= 1.01; t += 0.1) {
    long long cur = ncircles(fps, t).count;
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("distribution statistics against direct oracles") {
  // identical samples
  std::vector<double> x = {0.1, 0.2, 0.3, 0.4};
  CHECK(wasserstein_distance(x, x) == 0.0);
  CHECK(ks_statistic(x, x) == 0.0);

  // point masses at 0 and 1
  std::vector<double> zeros(5, 0.0), ones(5, 1.0);
  CHECK(wasserstein_distance(zeros, ones) == doctest::Approx(1.0));
  CHECK(ks_statistic(zeros, ones) == doctest::Approx(1.0));

  // equal-size samples: Wasserstein equals mean |sorted difference|
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a(1000), b(1000);
    for (auto& v : a) v = u(rng);
    for (auto& v : b) v = u(rng);
    std::vector<double> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    double expected = 0;
    for (int i = 0; i < 1000; ++i) expected += std::fabs(sa[i] - sb[i]);
    expected /= 1000;
    CHECK(std::fabs(wasserstein_distance(a, b) - expected) <= 1e-12);

    // KS against a direct two-pointer scan over all sample points
    double ks = 0;
    for (double v : sa) {
      double fa = std::upper_bound(sa.begin(), sa.end(), v) - sa.begin();
      double fb = std::upper_bound(sb.begin(), sb.end(), v) - sb.begin();
      ks = std::max(ks, std::fabs(fa - fb) / 1000);
    }
    for (double v : sb) {
      double fa = std::upper_bound(sa.begin(), sa.end(), v) - sa.begin();
      double fb = std::upper_bound(sb.begin(), sb.end(), v) - sb.begin();
      ks = std::max(ks, std::fabs(fa - fb) / 1000);
    }
    CHECK(std::fabs(ks_statistic(a, b) - ks) <= 1e-12);
  }
}

TEST_CASE("pair_distance_stats reproducible and internally consistent") {
  std::mt19937_64 rng(109);
  std::vector<Fingerprint> a, b;
  for (int i = 0; i < 30; ++i) {
    a.push_back(testutil::random_fingerprint(rng));
    b.push_back(testutil::random_fingerprint(rng));
  }
  PairDistanceStats s1 = pair_distance_stats(a, b, 2000, 5);
  PairDistanceStats s2 = pair_distance_stats(a, b, 2000, 5);
  CHECK(s1.samples_a == s2.samples_a);
  CHECK(s1.wasserstein == s2.wasserstein);

  CHECK(s1.a.p10 <= s1.a.p25);
  CHECK(s1.a.p25 <= s1.a.median);
  CHECK(s1.a.median <= s1.a.p75);
  CHECK(s1.a.p75 <= s1.a.p90);

  CHECK(wasserstein_distance(s1.samples_a, s1.samples_a) == 0.0);
  CHECK(ks_statistic(s1.samples_a, s1.samples_a) == 0.0);

  std::vector<Fingerprint> tiny = {a[0]};
  CHECK_THROWS_AS(pair_distance_stats(tiny, b, 10, 1), std::invalid_argument);
}
