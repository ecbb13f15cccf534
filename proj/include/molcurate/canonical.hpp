#pragma once

#include <string>
#include <vector>

#include "molcurate/molecule.hpp"

namespace molcurate {

struct CanonicalResult {
  std::string key;     // opaque dedup key, atom-order independent
  std::string smiles;  // canonical SMILES (reparses to the same key)
};

// Morgan-style iterative refinement of (element, charge, isotope, H-count,
// aromatic, ring, degree) invariants. Returns symmetry classes: equal class
// means the atoms are not distinguished by any refined invariant. Dense,
// order-independent values.
std::vector<int> symmetry_classes(const Molecule& m);

// Full canonical ranks: a total order on atoms, invariant under input atom
// renumbering. Ties after refinement are broken by exploring each candidate
// split and keeping the lexicographically smallest output SMILES.
CanonicalResult canonicalize(const Molecule& m);

}  // namespace molcurate
