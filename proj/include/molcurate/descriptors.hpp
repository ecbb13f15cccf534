#pragma once

#include <string>

#include "molcurate/molecule.hpp"

namespace molcurate {

// Physicochemical profile of one standardized molecule. Counts include
// every disconnected fragment.
struct DescriptorSet {
  double mol_weight = 0.0;      // Da, implicit H included
  int n_atoms = 0;              // heavy + hydrogen
  int n_heavy = 0;
  int n_fragments = 0;
  int hba = 0;                  // N + O atoms
  int hbd = 0;                  // N-H and O-H bonds, each H counted
  double logp = 0.0;
  double mr = 0.0;              // molar refractivity
  double tpsa = 0.0;            // A^2
  int n_rot_bonds = 0;
  int n_rigid_bonds = 0;
  int n_rings = 0;
  int max_ring_size = 0;
  int n_carbons = 0;
  int n_heteroatoms = 0;        // heavy non-carbon
  double hetero_carbon_ratio = 0.0;
  int n_charged_groups = 0;     // atoms with nonzero formal charge
  int total_charge = 0;
  int n_aromatic_bonds = 0;
  int n_stereocenters = 0;
};

DescriptorSet compute_descriptors(const Molecule& m);

// Ertl fragment-contribution polar surface area. Unmatched N/O/S/P
// patterns contribute 0.
double tpsa(const Molecule& m);

// Crippen atomic-contribution logP and molar refractivity. Atom classes
// are resolved by ordered predicates; untypeable atoms use the wildcard
// class of their element.
std::pair<double, double> crippen_logp_mr(const Molecule& m);

namespace tables {
// Serialized contribution tables (atomic weights, TPSA fragments, Crippen
// classes) exactly as shipped in data/, for checksum auditing.
std::string atomic_weights_text();
std::string tpsa_fragments_text();
std::string crippen_classes_text();
uint64_t fnv1a(const std::string& text);
}  // namespace tables

}  // namespace molcurate
