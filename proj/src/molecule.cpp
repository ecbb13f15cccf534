#include "molcurate/molecule.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <unordered_map>

namespace molcurate {

const Bond* Molecule::bond_between(int a, int b) const {
  for (int bi : adj[a]) {
    const Bond& bd = bonds[bi];
    if (bd.other(a) == b) return &bd;
  }
  return nullptr;
}

int Molecule::explicit_valence(int atom) const {
  int v = 0;
  for (int bi : adj[atom]) v += bonds[bi].order;
  return v;
}

std::vector<std::vector<int>> Molecule::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(atoms.size(), 0);
  for (int start = 0; start < num_atoms(); ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::deque<int> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      comp.push_back(a);
      for (int bi : adj[a]) {
        int nb = bonds[bi].other(a);
        if (!seen[nb]) {
          seen[nb] = 1;
          queue.push_back(nb);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

// Shortest cycle through a given bond, as a list of atom indices.
// Returns empty if the bond is a bridge.
std::vector<int> shortest_cycle_through(const Molecule& m, int bond_idx) {
  const Bond& target = m.bonds[bond_idx];
  // BFS from target.a to target.b avoiding the bond itself.
  std::vector<int> prev(m.num_atoms(), -1);
  std::vector<char> seen(m.num_atoms(), 0);
  std::deque<int> queue{target.a};
  seen[target.a] = 1;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    if (a == target.b) break;
    for (int bi : m.adj[a]) {
      if (bi == bond_idx) continue;
      int nb = m.bonds[bi].other(a);
      if (!seen[nb]) {
        seen[nb] = 1;
        prev[nb] = a;
        queue.push_back(nb);
      }
    }
  }
  if (!seen[target.b]) return {};
  std::vector<int> cycle;
  for (int a = target.b; a != -1; a = prev[a]) cycle.push_back(a);
  return cycle;  // path b..a; closing bond is (a,b)
}

using EdgeSet = std::vector<uint64_t>;

EdgeSet cycle_edges(const Molecule& m, const std::vector<int>& cycle) {
  EdgeSet es((m.num_bonds() + 63) / 64, 0);
  auto set_edge = [&](int u, int v) {
    for (int bi : m.adj[u]) {
      if (m.bonds[bi].other(u) == v) {
        es[bi / 64] |= uint64_t{1} << (bi % 64);
        return;
      }
    }
    assert(false && "cycle edge missing");
  };
  for (size_t i = 0; i + 1 < cycle.size(); ++i) set_edge(cycle[i], cycle[i + 1]);
  set_edge(cycle.back(), cycle.front());
  return es;
}

}  // namespace

void Molecule::finalize() {
  adj.assign(atoms.size(), {});
  for (int bi = 0; bi < num_bonds(); ++bi) {
    adj[bonds[bi].a].push_back(bi);
    adj[bonds[bi].b].push_back(bi);
  }

  // SSSR: shortest cycle per bond, then a GF(2)-independent subset of
  // cyclomatic-count many, smallest first.
  rings.clear();
  for (auto& at : atoms) at.in_ring = false;
  for (auto& bd : bonds) bd.in_ring = false;

  int n_comps = static_cast<int>(components().size());
  int cyclomatic = num_bonds() - num_atoms() + n_comps;
  if (cyclomatic <= 0) return;

  struct Candidate {
    std::vector<int> cycle;
    EdgeSet edges;
  };
  std::vector<Candidate> cands;
  for (int bi = 0; bi < num_bonds(); ++bi) {
    auto cyc = shortest_cycle_through(*this, bi);
    if (cyc.empty()) continue;
    cands.push_back({cyc, cycle_edges(*this, cyc)});
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& x, const Candidate& y) {
                     return x.cycle.size() < y.cycle.size();
                   });

  // Gaussian elimination over GF(2) on edge sets.
  std::vector<EdgeSet> basis;
  for (auto& cand : cands) {
    if (static_cast<int>(rings.size()) == cyclomatic) break;
    EdgeSet reduced = cand.edges;
    for (const auto& b : basis) {
      // pivot = lowest set bit of b
      int pivot = -1;
      for (size_t w = 0; w < b.size() && pivot < 0; ++w)
        if (b[w]) pivot = static_cast<int>(w * 64) + __builtin_ctzll(b[w]);
      if (pivot >= 0 && (reduced[pivot / 64] >> (pivot % 64)) & 1)
        for (size_t w = 0; w < b.size(); ++w) reduced[w] ^= b[w];
    }
    bool nonzero = false;
    for (auto w : reduced)
      if (w) nonzero = true;
    if (!nonzero) continue;
    basis.push_back(reduced);
    rings.push_back(cand.cycle);
    for (int a : cand.cycle) atoms[a].in_ring = true;
    for (size_t w = 0; w < cand.edges.size(); ++w) {
      uint64_t bits = cand.edges[w];
      while (bits) {
        int bi = static_cast<int>(w * 64) + __builtin_ctzll(bits);
        bonds[bi].in_ring = true;
        bits &= bits - 1;
      }
    }
  }
}

std::vector<Molecule> split_components(const Molecule& m) {
  std::vector<Molecule> out;
  for (const auto& comp : m.components()) {
    Molecule frag;
    std::unordered_map<int, int> remap;
    for (int a : comp) {
      remap[a] = frag.num_atoms();
      frag.atoms.push_back(m.atoms[a]);
    }
    for (const auto& bd : m.bonds) {
      auto ia = remap.find(bd.a);
      if (ia == remap.end()) continue;
      Bond nb = bd;
      nb.a = ia->second;
      nb.b = remap.at(bd.b);
      frag.bonds.push_back(nb);
    }
    frag.finalize();
    out.push_back(std::move(frag));
  }
  return out;
}

namespace elements {

namespace {

struct ElementInfo {
  const char* symbol;
  double weight;
};

// IUPAC 2021 standard atomic weights (abridged, conventional values for
// interval elements). Index = atomic number.
constexpr std::array<ElementInfo, 104> kElements{{
    {"*", 0.0},       {"H", 1.008},     {"He", 4.0026},  {"Li", 6.94},
    {"Be", 9.0122},   {"B", 10.81},     {"C", 12.011},   {"N", 14.007},
    {"O", 15.999},    {"F", 18.998},    {"Ne", 20.180},  {"Na", 22.990},
    {"Mg", 24.305},   {"Al", 26.982},   {"Si", 28.085},  {"P", 30.974},
    {"S", 32.06},     {"Cl", 35.45},    {"Ar", 39.95},   {"K", 39.098},
    {"Ca", 40.078},   {"Sc", 44.956},   {"Ti", 47.867},  {"V", 50.942},
    {"Cr", 51.996},   {"Mn", 54.938},   {"Fe", 55.845},  {"Co", 58.933},
    {"Ni", 58.693},   {"Cu", 63.546},   {"Zn", 65.38},   {"Ga", 69.723},
    {"Ge", 72.630},   {"As", 74.922},   {"Se", 78.971},  {"Br", 79.904},
    {"Kr", 83.798},   {"Rb", 85.468},   {"Sr", 87.62},   {"Y", 88.906},
    {"Zr", 91.224},   {"Nb", 92.906},   {"Mo", 95.95},   {"Tc", 97.0},
    {"Ru", 101.07},   {"Rh", 102.91},   {"Pd", 106.42},  {"Ag", 107.87},
    {"Cd", 112.41},   {"In", 114.82},   {"Sn", 118.71},  {"Sb", 121.76},
    {"Te", 127.60},   {"I", 126.90},    {"Xe", 131.29},  {"Cs", 132.91},
    {"Ba", 137.33},   {"La", 138.91},   {"Ce", 140.12},  {"Pr", 140.91},
    {"Nd", 144.24},   {"Pm", 145.0},    {"Sm", 150.36},  {"Eu", 151.96},
    {"Gd", 157.25},   {"Tb", 158.93},   {"Dy", 162.50},  {"Ho", 164.93},
    {"Er", 167.26},   {"Tm", 168.93},   {"Yb", 173.05},  {"Lu", 174.97},
    {"Hf", 178.49},   {"Ta", 180.95},   {"W", 183.84},   {"Re", 186.21},
    {"Os", 190.23},   {"Ir", 192.22},   {"Pt", 195.08},  {"Au", 196.97},
    {"Hg", 200.59},   {"Tl", 204.38},   {"Pb", 207.2},   {"Bi", 208.98},
    {"Po", 209.0},    {"At", 210.0},    {"Rn", 222.0},   {"Fr", 223.0},
    {"Ra", 226.0},    {"Ac", 227.0},    {"Th", 232.04},  {"Pa", 231.04},
    {"U", 238.03},    {"Np", 237.0},    {"Pu", 244.0},   {"Am", 243.0},
    {"Cm", 247.0},    {"Bk", 247.0},    {"Cf", 251.0},   {"Es", 252.0},
    {"Fm", 257.0},    {"Md", 258.0},    {"No", 259.0},   {"Lr", 262.0},
}};

const std::unordered_map<std::string, int>& symbol_index() {
  static const std::unordered_map<std::string, int> index = [] {
    std::unordered_map<std::string, int> idx;
    for (int z = 1; z < static_cast<int>(kElements.size()); ++z)
      idx[kElements[z].symbol] = z;
    return idx;
  }();
  return index;
}

}  // namespace

int atomic_number(const std::string& symbol) {
  auto it = symbol_index().find(symbol);
  return it == symbol_index().end() ? 0 : it->second;
}

const std::string& symbol(int atomic_num) {
  static std::vector<std::string> symbols = [] {
    std::vector<std::string> v;
    for (const auto& e : kElements) v.push_back(e.symbol);
    return v;
  }();
  if (atomic_num < 0 || atomic_num >= static_cast<int>(symbols.size()))
    return symbols[0];
  return symbols[atomic_num];
}

double standard_weight(int atomic_num) {
  if (atomic_num < 0 || atomic_num >= static_cast<int>(kElements.size()))
    return 0.0;
  return kElements[atomic_num].weight;
}

bool is_organic_subset(int z) {
  switch (z) {
    case 5: case 6: case 7: case 8: case 15:
    case 16: case 9: case 17: case 35: case 53:
      return true;
    default:
      return false;
  }
}

bool can_be_aromatic(int z) {
  switch (z) {
    case 5: case 6: case 7: case 8: case 15: case 16:
      return true;
    default:
      return false;
  }
}

bool is_halogen(int z) {
  return z == 9 || z == 17 || z == 35 || z == 53 || z == 85;
}

bool is_metalloid(int z) {
  return z == 5 || z == 14 || z == 32 || z == 33 || z == 51 || z == 52;
}

bool is_alkali_or_alkaline_earth(int z) {
  switch (z) {
    case 3: case 11: case 19: case 37: case 55: case 87:   // group 1
    case 4: case 12: case 20: case 38: case 56: case 88:   // group 2
      return true;
    default:
      return false;
  }
}

bool is_metal(int z) {
  if (z <= 0 || z >= static_cast<int>(kElements.size())) return false;
  if (is_alkali_or_alkaline_earth(z)) return true;
  if (z == 13) return true;                      // Al
  if (z >= 21 && z <= 31) return true;           // Sc..Ga
  if (z >= 39 && z <= 50) return true;           // Y..Sn
  if (z >= 57 && z <= 84 && z != 85) {
    // La..Po minus nonmetals in that span (none); metalloids excluded below
    if (is_metalloid(z)) return false;
    return true;
  }
  if (z >= 89 && z <= 103) return true;          // actinides + Lr
  if (is_metalloid(z) || is_halogen(z)) return false;
  return false;
}

std::vector<int> allowed_valences(int z, int charge) {
  switch (z) {
    case 5:  // B
      return {std::max(0, 3 - charge)};
    case 6:  // C
      return {std::max(0, 4 - std::abs(charge))};
    case 7:  // N
      if (charge == 0) return {3, 5};
      return {std::max(0, 3 + charge)};
    case 15:  // P
      if (charge == 0) return {3, 5};
      return {std::max(0, 3 + charge)};
    case 8:  // O
      return {std::max(0, 2 + charge)};
    case 16:  // S
      if (charge == 0) return {2, 4, 6};
      return {std::max(0, 2 + charge), 4, 6};
    case 9: case 17: case 35: case 53: case 85:  // halogens
      return {std::max(0, 1 - std::abs(charge))};
    case 1:  // H
      return {std::max(0, 1 - std::abs(charge))};
    default:
      return {};  // no enforcement
  }
}

}  // namespace elements
}  // namespace molcurate
