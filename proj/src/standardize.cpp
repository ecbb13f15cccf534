#include "molcurate/standardize.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace molcurate {

namespace {

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Does this aromatic atom still need one double bond to complete its
// kekule valence? (explicit+H already legal means lone-pair contributor.)
enum class KekuleRole { NotAromatic, Satisfied, NeedsDouble, Invalid };

KekuleRole kekule_role(const Molecule& m, int ai) {
  const Atom& atom = m.atoms[ai];
  if (!atom.aromatic) return KekuleRole::NotAromatic;
  auto allowed = elements::allowed_valences(atom.atomic_num, atom.formal_charge);
  if (allowed.empty()) return KekuleRole::Satisfied;
  int total = m.explicit_valence(ai) + atom.implicit_h;
  bool has_double = false;
  for (int bi : m.adj[ai])
    if (m.bonds[bi].order > 1) has_double = true;
  if (has_double) {
    return contains(allowed, total) ? KekuleRole::Satisfied : KekuleRole::Invalid;
  }
  if (contains(allowed, total)) return KekuleRole::Satisfied;
  if (contains(allowed, total + 1)) return KekuleRole::NeedsDouble;
  return KekuleRole::Invalid;
}

void check_valences(const Molecule& m, const char* step) {
  for (int ai = 0; ai < m.num_atoms(); ++ai) {
    const Atom& atom = m.atoms[ai];
    auto allowed = elements::allowed_valences(atom.atomic_num, atom.formal_charge);
    if (allowed.empty()) continue;
    if (atom.aromatic) {
      if (kekule_role(m, ai) == KekuleRole::Invalid)
        throw StandardizationFailure(step);
      continue;
    }
    int total = m.explicit_valence(ai) + atom.implicit_h;
    if (!contains(allowed, total)) throw StandardizationFailure(step);
  }
}

// Huckel perception over SSSR rings of C/N/O/S: flags kekule-form rings
// whose pi count is 4n+2 as aromatic. Already-aromatic input is left as is.
void perceive_aromaticity(Molecule& m) {
  for (const auto& ring : m.rings) {
    bool eligible = true;
    int pi = 0;
    for (int ai : ring) {
      const Atom& atom = m.atoms[ai];
      int z = atom.atomic_num;
      if (z != 6 && z != 7 && z != 8 && z != 16) {
        eligible = false;
        break;
      }
      bool double_to_ring = false, double_exo = false;
      for (int bi : m.adj[ai]) {
        const Bond& bd = m.bonds[bi];
        if (bd.order == 2) {
          if (m.atoms[bd.other(ai)].in_ring)
            double_to_ring = true;
          else
            double_exo = true;
        }
        if (bd.order == 3) eligible = false;
      }
      if (atom.aromatic) {
        // lowercase input without kekule orders: count like perception would
        if (double_to_ring) {
          pi += 1;
        } else if (z == 6) {
          pi += 1;
        } else if (z == 7) {
          pi += (m.degree(ai) + atom.implicit_h >= 3) ? 2 : 1;
        } else {
          pi += 2;
        }
        continue;
      }
      if (double_to_ring) {
        pi += 1;
      } else if (double_exo) {
        pi += 0;  // exocyclic carbonyl-style sp2, no ring pi electron
      } else if (z == 6) {
        eligible = false;  // sp3 carbon breaks conjugation
      } else {
        pi += 2;  // heteroatom lone pair
      }
      if (!eligible) break;
    }
    if (!eligible || ring.size() < 3) continue;
    if ((pi - 2) % 4 != 0) continue;
    for (int ai : ring) m.atoms[ai].aromatic = true;
    for (size_t i = 0; i < ring.size(); ++i) {
      int u = ring[i], v = ring[(i + 1) % ring.size()];
      for (int bi : m.adj[u])
        if (m.bonds[bi].other(u) == v) m.bonds[bi].aromatic = true;
    }
  }
}

// Assign integer double bonds inside aromatic systems via backtracking
// matching over atoms that still need one.
void kekulize(Molecule& m) {
  std::vector<char> needs(m.num_atoms(), 0);
  for (int ai = 0; ai < m.num_atoms(); ++ai) {
    switch (kekule_role(m, ai)) {
      case KekuleRole::NeedsDouble:
        needs[ai] = 1;
        break;
      case KekuleRole::Invalid:
        throw StandardizationFailure("kekulize");
      default:
        break;
    }
  }

  // candidate edges: order-1 aromatic bonds joining two needy atoms
  std::vector<int> matched(m.num_atoms(), -1);
  std::function<bool(int)> solve = [&](int ai) -> bool {
    while (ai < m.num_atoms() && (!needs[ai] || matched[ai] >= 0)) ++ai;
    if (ai >= m.num_atoms()) return true;
    for (int bi : m.adj[ai]) {
      const Bond& bd = m.bonds[bi];
      if (!bd.aromatic || bd.order != 1) continue;
      int nb = bd.other(ai);
      if (!needs[nb] || matched[nb] >= 0) continue;
      matched[ai] = nb;
      matched[nb] = ai;
      if (solve(ai + 1)) return true;
      matched[ai] = -1;
      matched[nb] = -1;
    }
    return false;
  };
  if (!solve(0)) throw StandardizationFailure("kekulize");

  for (auto& bd : m.bonds)
    if (bd.aromatic && bd.order == 1 && matched[bd.a] == bd.b) bd.order = 2;
}

// Fold explicit neutral hydrogens into the partner's implicit count.
Molecule remove_explicit_hydrogens(const Molecule& m) {
  std::vector<char> drop(m.num_atoms(), 0);
  Molecule out = m;
  for (int ai = 0; ai < m.num_atoms(); ++ai) {
    const Atom& atom = m.atoms[ai];
    if (atom.atomic_num != 1 || atom.formal_charge != 0 || atom.isotope != 0)
      continue;
    if (m.degree(ai) != 1) continue;
    const Bond& bd = m.bonds[m.adj[ai][0]];
    if (bd.order != 1) continue;
    int partner = bd.other(ai);
    if (m.atoms[partner].atomic_num == 1) continue;  // H-H stays
    drop[ai] = 1;
    out.atoms[partner].implicit_h += 1;
  }
  bool any = false;
  for (char d : drop) any |= (d != 0);
  if (!any) return out;

  Molecule compact;
  std::vector<int> remap(m.num_atoms(), -1);
  for (int ai = 0; ai < m.num_atoms(); ++ai) {
    if (drop[ai]) continue;
    remap[ai] = compact.num_atoms();
    compact.atoms.push_back(out.atoms[ai]);
  }
  for (const auto& bd : out.bonds) {
    if (remap[bd.a] < 0 || remap[bd.b] < 0) continue;
    Bond nb = bd;
    nb.a = remap[bd.a];
    nb.b = remap[bd.b];
    compact.bonds.push_back(nb);
  }
  compact.finalize();
  return compact;
}

bool is_terminal_neutral(const Molecule& m, int ai, int z) {
  return m.atoms[ai].atomic_num == z && m.atoms[ai].formal_charge == 0 &&
         m.degree(ai) == 1;
}

// Fixed normalization table: nitro, azide, diazonium, sulfoxide, N-oxide,
// phosphate charge forms. Applied to fixed point.
bool normalize_groups_once(Molecule& m) {
  for (int ai = 0; ai < m.num_atoms(); ++ai) {
    Atom& atom = m.atoms[ai];

    // nitro: neutral N(=O)(=O)R -> [N+](=O)[O-]R
    if (atom.atomic_num == 7 && atom.formal_charge == 0) {
      std::vector<int> double_o;
      for (int bi : m.adj[ai]) {
        const Bond& bd = m.bonds[bi];
        if (bd.order == 2 && is_terminal_neutral(m, bd.other(ai), 8))
          double_o.push_back(bi);
      }
      if (double_o.size() >= 2) {
        int bi = double_o[0];
        m.bonds[bi].order = 1;
        m.atoms[m.bonds[bi].other(ai)].formal_charge = -1;
        atom.formal_charge = 1;
        return true;
      }
      // N-oxide: neutral pentavalent R3N=O -> R3[N+][O-]
      if (double_o.size() == 1 &&
          m.explicit_valence(ai) + atom.implicit_h == 5) {
        int bi = double_o[0];
        m.bonds[bi].order = 1;
        m.atoms[m.bonds[bi].other(ai)].formal_charge = -1;
        atom.formal_charge = 1;
        return true;
      }
      // azide: R-N=N=N with cumulated double bonds on the central N
      if (m.explicit_valence(ai) == 4) {
        std::vector<int> double_n;
        for (int bi : m.adj[ai])
          if (m.bonds[bi].order == 2 &&
              m.atoms[m.bonds[bi].other(ai)].atomic_num == 7)
            double_n.push_back(bi);
        if (double_n.size() == 2) {
          for (int bi : double_n) {
            int nb = m.bonds[bi].other(ai);
            if (is_terminal_neutral(m, nb, 7)) {
              atom.formal_charge = 1;
              atom.implicit_h = 0;
              m.atoms[nb].formal_charge = -1;
              m.atoms[nb].implicit_h = 0;
              return true;
            }
          }
        }
      }
      // diazonium: R-N#N with neutral tetravalent inner N -> R-[N+]#N
      if (m.explicit_valence(ai) == 4 && atom.implicit_h == 0) {
        for (int bi : m.adj[ai]) {
          const Bond& bd = m.bonds[bi];
          if (bd.order == 3 && is_terminal_neutral(m, bd.other(ai), 7) &&
              m.atoms[bd.other(ai)].implicit_h == 0) {
            atom.formal_charge = 1;
            return true;
          }
        }
      }
    }

    // sulfoxide / phosphate charge form: [S+]-[O-] or [P+]-[O-] -> X=O
    if ((atom.atomic_num == 16 || atom.atomic_num == 15) &&
        atom.formal_charge == 1) {
      for (int bi : m.adj[ai]) {
        Bond& bd = m.bonds[bi];
        if (bd.order != 1 || bd.aromatic) continue;
        int nb = bd.other(ai);
        if (m.atoms[nb].atomic_num == 8 && m.atoms[nb].formal_charge == -1 &&
            m.degree(nb) == 1) {
          bd.order = 2;
          atom.formal_charge = 0;
          m.atoms[nb].formal_charge = 0;
          return true;
        }
      }
    }
  }
  return false;
}

// Neutralize +/- pairs on adjacent N/O where the neutral valences stay
// legal with bonds and H counts unchanged.
bool reionize_once(Molecule& m) {
  for (const auto& bd : m.bonds) {
    for (auto [pos, neg] : {std::pair{bd.a, bd.b}, std::pair{bd.b, bd.a}}) {
      Atom& ap = m.atoms[pos];
      Atom& an = m.atoms[neg];
      if (ap.formal_charge <= 0 || an.formal_charge >= 0) continue;
      auto n_or_o = [](const Atom& a) {
        return a.atomic_num == 7 || a.atomic_num == 8;
      };
      if (!n_or_o(ap) || !n_or_o(an)) continue;
      auto ok = [&](int ai, int new_charge) {
        auto allowed =
            elements::allowed_valences(m.atoms[ai].atomic_num, new_charge);
        int total = m.explicit_valence(ai) + m.atoms[ai].implicit_h;
        return contains(allowed, total);
      };
      if (ok(pos, ap.formal_charge - 1) && ok(neg, an.formal_charge + 1)) {
        ap.formal_charge -= 1;
        an.formal_charge += 1;
        return true;
      }
      // proton transfer: move one hydrogen from the cation to the anion
      if (ap.implicit_h >= 1) {
        auto ok_h = [&](int ai, int new_charge, int dh) {
          auto allowed =
              elements::allowed_valences(m.atoms[ai].atomic_num, new_charge);
          int total = m.explicit_valence(ai) + m.atoms[ai].implicit_h + dh;
          return contains(allowed, total);
        };
        if (ok_h(pos, ap.formal_charge - 1, -1) &&
            ok_h(neg, an.formal_charge + 1, +1)) {
          ap.formal_charge -= 1;
          ap.implicit_h -= 1;
          an.formal_charge += 1;
          an.implicit_h += 1;
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

Molecule disconnect_metals(const Molecule& m) {
  Molecule out = m;
  bool changed = false;
  std::vector<Bond> kept;
  for (const auto& bd : out.bonds) {
    int metal = -1, partner = -1;
    auto is_target_metal = [&](int ai) {
      int z = out.atoms[ai].atomic_num;
      return elements::is_alkali_or_alkaline_earth(z) || z == 30;
    };
    auto is_partner = [&](int ai) {
      int z = out.atoms[ai].atomic_num;
      return z == 7 || z == 8 || elements::is_halogen(z);
    };
    if (is_target_metal(bd.a) && is_partner(bd.b)) {
      metal = bd.a;
      partner = bd.b;
    } else if (is_target_metal(bd.b) && is_partner(bd.a)) {
      metal = bd.b;
      partner = bd.a;
    }
    if (metal < 0 || bd.order != 1 || bd.aromatic) {
      kept.push_back(bd);
      continue;
    }
    out.atoms[metal].formal_charge += 1;
    out.atoms[partner].formal_charge -= 1;
    changed = true;
  }
  if (!changed) return out;
  out.bonds = std::move(kept);
  out.finalize();
  return out;
}

Molecule standardize(const Molecule& m) {
  Molecule work = m;
  if (work.adj.size() != work.atoms.size()) work.finalize();

  check_valences(work, "valence");
  perceive_aromaticity(work);
  kekulize(work);
  work = remove_explicit_hydrogens(work);
  work = disconnect_metals(work);
  for (int guard = 0; normalize_groups_once(work); ++guard)
    if (guard > 10000) throw StandardizationFailure("normalize");
  for (int guard = 0; reionize_once(work); ++guard)
    if (guard > 10000) throw StandardizationFailure("reionize");

  check_valences(work, "valence");
  return work;
}

}  // namespace molcurate
