#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace molcurate {

// Tetrahedral parity parsed from SMILES (@ / @@). Retained as an
// annotation only; it never enters canonicalization or dedup keys.
enum class Chirality : uint8_t { None, Anticlockwise, Clockwise };

// Directional single-bond marker (/ or \), annotation only.
enum class BondDir : uint8_t { None, Up, Down };

struct Atom {
  int atomic_num = 0;
  int formal_charge = 0;
  int isotope = 0;         // 0 = natural abundance
  int implicit_h = 0;
  bool aromatic = false;
  bool in_ring = false;
  Chirality chirality = Chirality::None;
};

struct Bond {
  int a = -1;
  int b = -1;
  int order = 1;           // 1, 2 or 3
  bool aromatic = false;
  bool in_ring = false;
  BondDir dir = BondDir::None;

  int other(int atom) const { return atom == a ? b : a; }
};

// Immutable-after-construction molecular graph. Rings hold the smallest
// set of smallest rings as atom-index cycles.
struct Molecule {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::vector<std::vector<int>> rings;

  // adjacency: bond indices per atom, rebuilt by finalize()
  std::vector<std::vector<int>> adj;

  int num_atoms() const { return static_cast<int>(atoms.size()); }
  int num_bonds() const { return static_cast<int>(bonds.size()); }

  int degree(int atom) const { return static_cast<int>(adj[atom].size()); }

  const Bond* bond_between(int a, int b) const;

  // Sum of integer bond orders at an atom; aromatic bonds count per their
  // assigned integer order (1 before kekulization).
  int explicit_valence(int atom) const;

  // Rebuild adjacency, perceive SSSR rings and set in_ring flags.
  void finalize();

  // Connected components as lists of atom indices, in discovery order.
  std::vector<std::vector<int>> components() const;
};

// Element facts used across the toolkit.
namespace elements {

int atomic_number(const std::string& symbol);      // 0 if unknown
const std::string& symbol(int atomic_num);
double standard_weight(int atomic_num);            // IUPAC 2021 values

bool is_organic_subset(int atomic_num);            // B C N O P S F Cl Br I
bool can_be_aromatic(int atomic_num);              // b c n o p s (+ se/as not supported)
bool is_metal(int atomic_num);
bool is_metalloid(int atomic_num);                 // B Si Ge As Sb Te
bool is_halogen(int atomic_num);                   // F Cl Br I At
bool is_alkali_or_alkaline_earth(int atomic_num);  // groups 1 and 2, minus H

// Allowed valences for neutral/charged main-group atoms, smallest first.
// Empty result means "no enforcement" (metals, exotic elements).
std::vector<int> allowed_valences(int atomic_num, int charge);

}  // namespace elements

// Extract connected components as standalone molecules, ordered by
// descending heavy-atom count with canonical-key tie-break.
std::vector<Molecule> fragments(const Molecule& m);

// Component split in raw discovery order (no canonicalization involved).
std::vector<Molecule> split_components(const Molecule& m);

}  // namespace molcurate
