#pragma once

#include <string>
#include <vector>

#include "molcurate/descriptors.hpp"

namespace molcurate {

// One breached rule: which bound, the observed value, and the bound text
// (e.g. "<= 500" or "in [160, 400]").
struct Violation {
  std::string rule;
  double observed = 0.0;
  std::string bound;
};

struct FilterVerdict {
  std::string filter_name;
  bool passed = false;
  std::vector<Violation> violations;
};

// The nine feasibility criteria: fragments <= 3, key length < 2000,
// mol_weight <= 2500, n_atoms <= 150, hba <= 20, hbd <= 15,
// logp in [-10, 25], tpsa <= 500, n_rot_bonds <= 60. key_length is the
// canonical-key byte length, standing in for an identifier-length rule.
FilterVerdict feasibility_check(const DescriptorSet& d, size_t key_length);

// Evaluate one filter from the 13-entry registry. Lipinski passes with at
// most one violation; every other filter requires zero. Unknown names throw
// std::invalid_argument; substructure-rule filter names (glaxo, brenk,
// zinc-basic) throw with message "out-of-scope: substructure rules".
FilterVerdict apply_filter(const std::string& name, const DescriptorSet& d);

// Registered filter names in catalog order.
const std::vector<std::string>& filter_names();

// Per-filter pass fraction with exact counts.
struct FilterPassRate {
  std::string filter_name;
  long long passed = 0;
  long long total = 0;
  double fraction = 0.0;
};
std::vector<FilterPassRate> filter_profile(
    const std::vector<DescriptorSet>& dataset,
    const std::vector<std::string>& names);

// Human-readable serialization of every registered filter's bounds, for
// auditing against the published rule tables.
std::string filter_rules_text();

}  // namespace molcurate
