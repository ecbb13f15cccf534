#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "molcurate/molecule.hpp"

namespace molcurate {

// Fixed-width binary fingerprint with cached popcount. Width is a power of
// two, constant within one analysis run.
class Fingerprint {
 public:
  explicit Fingerprint(int width = 2048);

  int width() const { return width_; }
  int popcount() const { return popcount_; }
  bool test(int bit) const;
  void set(int bit);

  const std::vector<uint64_t>& words() const { return words_; }

  bool operator==(const Fingerprint& other) const {
    return words_ == other.words_;
  }

 private:
  int width_;
  int popcount_;
  std::vector<uint64_t> words_;

  friend double tanimoto_distance(const Fingerprint&, const Fingerprint&);
};

// Circular Morgan environment hashes for all atoms at radii 0..radius,
// folded into the bit vector. Deterministic across runs and platforms.
Fingerprint ecfp(const Molecule& m, int radius = 2, int width = 2048);

// 1 - |a AND b| / |a OR b|; 0 when both fingerprints are empty.
// Throws std::invalid_argument on width mismatch.
double tanimoto_distance(const Fingerprint& a, const Fingerprint& b);

// Exact minimum distance from q to any element of s with lowest-index
// tie-break. Uses popcount bounds to skip candidates that cannot beat the
// current best; the result is identical to a naive scan.
// Throws std::invalid_argument when s is empty.
std::pair<double, int> min_distance_to_set(const Fingerprint& q,
                                           const std::vector<Fingerprint>& s);

}  // namespace molcurate
