#include "molcurate/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

#include "molcurate/smiles.hpp"

namespace molcurate {

namespace {

using Classes = std::vector<int>;

// Dense re-rank: map arbitrary per-atom keys to 0..k-1 by sorted order.
template <typename Key>
Classes densify(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Classes out(keys.size());
  for (size_t i = 0; i < keys.size(); ++i)
    out[i] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
        sorted.begin());
  return out;
}

int class_count(const Classes& classes) {
  return classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end()) + 1;
}

Classes initial_classes(const Molecule& m) {
  using Key = std::array<int, 7>;
  std::vector<Key> keys(m.num_atoms());
  for (int i = 0; i < m.num_atoms(); ++i) {
    const Atom& a = m.atoms[i];
    keys[i] = {a.atomic_num, a.formal_charge, a.isotope, a.implicit_h,
               a.aromatic ? 1 : 0, a.in_ring ? 1 : 0, m.degree(i)};
  }
  return densify(keys);
}

Classes refine(const Molecule& m, Classes classes) {
  while (true) {
    int before = class_count(classes);
    using Key = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Key> keys(m.num_atoms());
    for (int i = 0; i < m.num_atoms(); ++i) {
      std::vector<std::pair<int, int>> nbrs;
      for (int bi : m.adj[i]) {
        const Bond& bd = m.bonds[bi];
        int btype = bd.aromatic ? 4 : bd.order;
        nbrs.push_back({btype, classes[bd.other(i)]});
      }
      std::sort(nbrs.begin(), nbrs.end());
      keys[i] = {classes[i], std::move(nbrs)};
    }
    classes = densify(keys);
    if (class_count(classes) == before) return classes;
  }
}

// Recursive canonical-form search. Ties after refinement are broken by
// trying each tied atom of the smallest ambiguous class and keeping the
// minimal SMILES. `budget` caps total leaf generations.
std::string canon_search(const Molecule& m, Classes classes, int& budget) {
  classes = refine(m, classes);

  // find smallest class value occurring more than once
  std::vector<int> count(class_count(classes), 0);
  for (int c : classes) ++count[c];
  int tied_class = -1;
  for (int c = 0; c < static_cast<int>(count.size()); ++c) {
    if (count[c] > 1) {
      tied_class = c;
      break;
    }
  }

  if (tied_class < 0) {
    --budget;
    return write_smiles(m, classes);
  }

  std::string best;
  for (int i = 0; i < m.num_atoms(); ++i) {
    if (classes[i] != tied_class) continue;
    Classes split(m.num_atoms());
    for (int j = 0; j < m.num_atoms(); ++j) split[j] = classes[j] * 2 + 1;
    split[i] -= 1;
    std::string s = canon_search(m, std::move(split), budget);
    if (best.empty() || s < best) best = s;
    if (budget <= 0) break;
  }
  return best;
}

}  // namespace

std::vector<int> symmetry_classes(const Molecule& m) {
  return refine(m, initial_classes(m));
}

CanonicalResult canonicalize(const Molecule& m) {
  if (m.num_atoms() == 0) return {"", ""};
  int budget = 4096;
  std::string smiles = canon_search(m, initial_classes(m), budget);
  return {smiles, smiles};
}

std::vector<Molecule> fragments(const Molecule& m) {
  std::vector<Molecule> frags = split_components(m);
  std::vector<std::pair<std::pair<int, std::string>, size_t>> order;
  for (size_t i = 0; i < frags.size(); ++i) {
    int heavy = 0;
    for (const auto& a : frags[i].atoms)
      if (a.atomic_num != 1) ++heavy;
    order.push_back({{-heavy, canonicalize(frags[i]).key}, i});
  }
  std::stable_sort(order.begin(), order.end());
  std::vector<Molecule> out;
  for (auto& [k, i] : order) out.push_back(std::move(frags[i]));
  return out;
}

}  // namespace molcurate
