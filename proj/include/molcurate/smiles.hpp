#pragma once

#include <stdexcept>
#include <string>

#include "molcurate/molecule.hpp"

namespace molcurate {

// Parse / write errors carry the byte offset into the input string.
class SmilesError : public std::runtime_error {
 public:
  SmilesError(const std::string& what, size_t offset)
      : std::runtime_error(what + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// Parse a SMILES string into a molecular graph. Rings are perceived,
// implicit hydrogens assigned per organic-subset rules, lowercase atoms
// flagged aromatic. Dot-separated fragments stay in one Molecule as
// disconnected components. Throws SmilesError on malformed input.
Molecule parse_smiles(const std::string& text);

// Write a SMILES string for the molecule using the given output order of
// atoms (a permutation of 0..n-1). Aromatic atoms are emitted lowercase.
std::string write_smiles(const Molecule& m, const std::vector<int>& order);

// Convenience: write in natural atom order.
std::string write_smiles(const Molecule& m);

}  // namespace molcurate
