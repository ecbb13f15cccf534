#pragma once

#include <stdexcept>
#include <string>

#include "molcurate/molecule.hpp"

namespace molcurate {

// Raised when a sanitization step cannot complete; the step name feeds the
// pipeline's stage accounting.
class StandardizationFailure : public std::runtime_error {
 public:
  explicit StandardizationFailure(const std::string& step)
      : std::runtime_error("standardization failed at step '" + step + "'"),
        step_(step) {}
  const std::string& step() const { return step_; }

 private:
  std::string step_;
};

// Full sanitization pass, in fixed order: valence check, aromaticity
// perception, kekulization, explicit-H folding, metal disconnection,
// functional-group normalization, reionization. Idempotent.
Molecule standardize(const Molecule& m);

// Break covalent bonds between group 1/2 metals (plus Zn) and N/O/halogen
// partners, transferring one charge unit per deleted bond.
Molecule disconnect_metals(const Molecule& m);

}  // namespace molcurate
