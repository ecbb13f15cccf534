#pragma once

#include <map>
#include <string>
#include <vector>

#include "molcurate/descriptors.hpp"
#include "molcurate/molecule.hpp"

namespace molcurate {

// Fraction of molecules containing at least one atom of each element group:
// C, N, O, S, halogens (F/Cl/Br/I/At), metalloids (B/Si/Ge/As/Sb/Te),
// metals, other. Groups are non-exclusive.
std::map<std::string, double> element_profile(
    const std::vector<Molecule>& molecules);

// Generic ring framework: iteratively prune non-ring degree-1 atoms (keeps
// rings plus linker paths), turn every remaining atom into neutral carbon
// and every bond into a single bond, and canonicalize. Acyclic molecules
// return the empty string.
std::string generic_scaffold(const Molecule& m);

// True iff the molecule has >= 2 covalently disconnected fragments each
// carrying nonzero net formal charge.
bool is_salt(const Molecule& m);

// Ten order statistics (nearest-rank percentiles) of one descriptor.
struct DescriptorStats {
  double min = 0, p1 = 0, p5 = 0, q1 = 0, mean = 0, median = 0, q3 = 0,
         p95 = 0, p99 = 0, max = 0;
  bool defined = false;  // false for an empty dataset
};

struct DatasetReport {
  long long n_molecules = 0;
  long long n_unique_scaffolds = 0;  // excludes the empty (acyclic) scaffold
  long long n_salts = 0;
  std::map<std::string, double> element_fractions;
  std::map<std::string, DescriptorStats> descriptor_stats;
};

DatasetReport dataset_summary(const std::vector<Molecule>& molecules);

// JSON serialization with a stable schema version field.
std::string report_json(const DatasetReport& report);

}  // namespace molcurate
