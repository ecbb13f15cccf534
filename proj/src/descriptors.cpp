#include "molcurate/descriptors.hpp"

#include <algorithm>
#include <sstream>

#include "molcurate/canonical.hpp"

namespace molcurate {

namespace {

int hydrogen_count(const Molecule& m, int ai) {
  int h = m.atoms[ai].implicit_h;
  for (int bi : m.adj[ai])
    if (m.atoms[m.bonds[bi].other(ai)].atomic_num == 1) ++h;
  return h;
}

struct BondProfile {
  int aromatic = 0;  // aromatic-flagged bonds
  int single = 0;    // plain single bonds (H neighbors excluded)
  int dbl = 0;       // non-aromatic double
  int triple = 0;
};

BondProfile bond_profile(const Molecule& m, int ai) {
  BondProfile p;
  for (int bi : m.adj[ai]) {
    const Bond& bd = m.bonds[bi];
    if (m.atoms[bd.other(ai)].atomic_num == 1 && bd.order == 1) continue;
    if (bd.aromatic)
      ++p.aromatic;
    else if (bd.order == 1)
      ++p.single;
    else if (bd.order == 2)
      ++p.dbl;
    else
      ++p.triple;
  }
  return p;
}

bool in_three_ring(const Molecule& m, int ai) {
  for (const auto& ring : m.rings)
    if (ring.size() == 3 &&
        std::find(ring.begin(), ring.end(), ai) != ring.end())
      return true;
  return false;
}

// ---------------------------------------------------------------------------
// TPSA fragment contributions (Ertl's published table). Returns 0 for
// patterns without an entry.

double tpsa_contribution(const Molecule& m, int ai) {
  const Atom& a = m.atoms[ai];
  int h = hydrogen_count(m, ai);
  int q = a.formal_charge;
  BondProfile p = bond_profile(m, ai);

  if (a.atomic_num == 7) {
    if (a.aromatic) {
      if (q == 0) {
        if (p.aromatic == 2 && h == 0 && p.single == 0 && p.dbl == 0)
          return 12.89;
        if (p.aromatic == 3 && h == 0) return 4.41;
        if (p.aromatic == 2 && p.single == 1 && h == 0) return 4.93;
        if (p.aromatic == 2 && p.dbl == 1 && h == 0) return 8.39;
        if (p.aromatic == 2 && h == 1) return 15.79;
      } else if (q == 1) {
        if (p.aromatic == 3 && h == 0) return 4.10;
        if (p.aromatic == 2 && p.single == 1 && h == 0) return 3.88;
        if (p.aromatic == 2 && h == 1) return 14.14;
      }
      return 0.0;
    }
    if (q == 0) {
      if (h == 0) {
        if (p.single == 3 && p.dbl == 0 && p.triple == 0)
          return in_three_ring(m, ai) ? 3.01 : 3.24;
        if (p.single == 1 && p.dbl == 1) return 12.36;
        if (p.triple == 1 && p.single == 0 && p.dbl == 0) return 23.79;
        if (p.single == 1 && p.dbl == 2) return 11.68;
        if (p.dbl == 1 && p.triple == 1) return 13.60;
      } else if (h == 1) {
        if (p.single == 2) return in_three_ring(m, ai) ? 21.94 : 12.03;
        if (p.dbl == 1 && p.single == 0) return 23.85;
      } else if (h == 2) {
        if (p.single == 1) return 26.02;
      }
      return 0.0;
    }
    if (q == 1) {
      if (h == 0) {
        if (p.single == 4) return 0.00;
        if (p.single == 2 && p.dbl == 1) return 3.01;
        if (p.single == 1 && p.triple == 1) return 4.36;
      } else if (h == 1) {
        if (p.single == 3) return 4.44;
        if (p.single == 1 && p.dbl == 1) return 13.97;
      } else if (h == 2) {
        if (p.single == 2) return 16.61;
        if (p.dbl == 1) return 25.59;
      } else if (h == 3) {
        if (p.single == 1) return 27.64;
      }
      return 0.0;
    }
    return 0.0;
  }

  if (a.atomic_num == 8) {
    if (a.aromatic) return q == 0 ? 13.14 : 0.0;
    if (q == 0) {
      if (h == 0) {
        if (p.single == 2) return in_three_ring(m, ai) ? 12.53 : 9.23;
        if (p.dbl == 1 && p.single == 0) return 17.07;
      }
      // hydroxyl; the table's O-H entry also stands in for water
      if (h >= 1) return 20.23;
      return 0.0;
    }
    if (q == -1 && p.single == 1 && h == 0) return 23.06;
    return 0.0;
  }

  if (a.atomic_num == 16) {
    if (a.aromatic) {
      if (q != 0) return 0.0;
      if (p.aromatic == 2 && p.dbl == 1) return 21.70;
      if (p.aromatic == 2) return 28.24;
      return 0.0;
    }
    if (q != 0) return 0.0;
    if (h == 0) {
      if (p.single == 2 && p.dbl == 0) return 25.30;
      if (p.dbl == 1 && p.single == 0) return 32.09;
      if (p.single == 2 && p.dbl == 1) return 19.21;
      if (p.single == 2 && p.dbl == 2) return 8.38;
    } else if (h == 1 && p.single == 1) {
      return 38.80;
    }
    return 0.0;
  }

  if (a.atomic_num == 15) {
    if (q != 0 || a.aromatic) return 0.0;
    if (h == 0) {
      if (p.single == 3 && p.dbl == 0) return 13.59;
      if (p.single == 1 && p.dbl == 1) return 34.14;
      if (p.single == 3 && p.dbl == 1) return 9.81;
    } else if (h == 1 && p.single == 2 && p.dbl == 1) {
      return 23.47;
    }
    return 0.0;
  }

  return 0.0;
}

// ---------------------------------------------------------------------------
// Crippen atom typing (Wildman & Crippen contribution values). Ordered
// hand-coded predicates; first match wins.

struct Contribution {
  double logp;
  double mr;
};

bool neighbor_is(const Molecule& m, int ai, auto pred) {
  for (int bi : m.adj[ai])
    if (pred(m.atoms[m.bonds[bi].other(ai)])) return true;
  return false;
}

int heavy_degree(const Molecule& m, int ai) {
  int d = 0;
  for (int bi : m.adj[ai])
    if (m.atoms[m.bonds[bi].other(ai)].atomic_num != 1) ++d;
  return d;
}

Contribution crippen_carbon(const Molecule& m, int ai) {
  const Atom& a = m.atoms[ai];
  BondProfile p = bond_profile(m, ai);
  auto arom = [](const Atom& x) { return x.aromatic; };
  auto arom_c = [](const Atom& x) { return x.aromatic && x.atomic_num == 6; };
  auto arom_het = [](const Atom& x) { return x.aromatic && x.atomic_num != 6; };
  auto hetero = [](const Atom& x) {
    return x.atomic_num != 6 && x.atomic_num != 1;
  };

  if (a.aromatic) {
    if (p.aromatic >= 3) return {0.2955, 4.346};                   // C19 fused
    int h = hydrogen_count(m, ai);
    if (h > 0 && p.single == 0 && p.dbl == 0) return {0.1581, 3.350};  // C18
    // one exocyclic neighbor
    int sub = -1;
    for (int bi : m.adj[ai]) {
      const Bond& bd = m.bonds[bi];
      if (!bd.aromatic && m.atoms[bd.other(ai)].atomic_num != 1)
        sub = bd.other(ai);
    }
    if (sub < 0) return {0.1581, 3.350};
    const Atom& s = m.atoms[sub];
    const Bond* sb = m.bond_between(ai, sub);
    if (sb && sb->order == 2) return {-0.8186, 3.135};             // C25 exo =
    if (s.aromatic) return {0.2713, 3.904};                        // C20 biaryl
    switch (s.atomic_num) {
      case 6: return {0.1360, 3.509};                              // C21
      case 7: return {0.4619, 4.067};                              // C22
      case 8: return {0.5437, 3.853};                              // C23
      case 16: return {0.1893, 2.673};                             // C24
      case 9: return {0.0, 3.257};                                 // C14
      case 17: return {0.2450, 3.564};                             // C15
      case 35: return {0.1980, 3.180};                             // C16
      case 53: return {0.0, 3.104};                                // C17
      default: return {-0.5443, 4.041};                            // C13
    }
  }

  if (p.triple >= 1 || p.dbl >= 2) return {0.0017, 3.888};         // C7 sp
  if (p.dbl == 1) {
    for (int bi : m.adj[ai]) {
      const Bond& bd = m.bonds[bi];
      if (bd.order == 2 && hetero(m.atoms[bd.other(ai)]))
        return {-0.2783, 5.007};                                   // C5 C=X
    }
    if (neighbor_is(m, ai, arom)) return {0.2640, 4.305};          // C26
    return {0.1551, 3.513};                                        // C6 C=C
  }

  // sp3
  int hvy = heavy_degree(m, ai);
  if (neighbor_is(m, ai, arom)) {
    int h = hydrogen_count(m, ai);
    if (h >= 3)
      return neighbor_is(m, ai, arom_het) && !neighbor_is(m, ai, arom_c)
                 ? Contribution{-0.1444, 2.412}                    // C9
                 : Contribution{0.08452, 2.464};                   // C8
    if (h == 2) return {-0.0516, 2.488};                           // C10
    if (h == 1) return {0.1193, 2.582};                            // C11
    return {-0.0967, 2.576};                                       // C12
  }
  if (neighbor_is(m, ai, hetero))
    return hvy <= 2 ? Contribution{-0.2035, 2.753}                 // C3
                    : Contribution{-0.2051, 2.731};                // C4
  return hvy <= 2 ? Contribution{0.1441, 2.503}                    // C1
                  : Contribution{0.0000, 2.433};                   // C2
}

Contribution crippen_nitrogen(const Molecule& m, int ai) {
  const Atom& a = m.atoms[ai];
  BondProfile p = bond_profile(m, ai);
  int h = hydrogen_count(m, ai);
  auto arom = [](const Atom& x) { return x.aromatic; };

  if (a.aromatic)
    return a.formal_charge > 0 ? Contribution{-1.1190, 0.0}        // N12
                               : Contribution{-0.3239, 2.202};     // N11
  if (a.formal_charge > 0) {
    if (p.dbl == 0 && p.triple == 0)
      return h >= 1 ? Contribution{-1.9500, 0.0}                   // N10
                    : Contribution{-0.3396, 0.2604};               // N13
    return {0.2887, 3.359};                                        // N14
  }
  if (a.formal_charge < 0) return {0.2887, 3.359};                 // N14
  if (p.triple >= 1) return {0.01508, 1.725};                      // N9
  if (p.dbl >= 1)
    return h >= 1 ? Contribution{0.08387, 1.757}                   // N5
                  : Contribution{0.1836, 2.428};                   // N6
  bool on_aromatic = neighbor_is(m, ai, arom);
  if (h >= 2)
    return on_aromatic ? Contribution{-1.0270, 2.827}              // N3
                       : Contribution{-1.0190, 2.262};             // N1
  if (h == 1)
    return on_aromatic ? Contribution{-0.5188, 2.819}              // N4
                       : Contribution{-0.7096, 2.173};             // N2
  return on_aromatic ? Contribution{-0.4458, 2.819}                // N8
                     : Contribution{-0.3187, 1.839};               // N7
}

Contribution crippen_oxygen(const Molecule& m, int ai) {
  const Atom& a = m.atoms[ai];
  BondProfile p = bond_profile(m, ai);
  int h = hydrogen_count(m, ai);
  auto arom = [](const Atom& x) { return x.aromatic; };

  if (a.aromatic) return {0.1552, 1.080};                          // O1
  auto attached = [&](int z) {
    return neighbor_is(m, ai, [z](const Atom& x) { return x.atomic_num == z; });
  };
  if (a.formal_charge < 0) {
    if (attached(7)) return {0.0335, 3.367};                       // O5
    if (attached(16)) return {-0.3339, 0.7774};                    // O6
    // carboxylate oxygen
    for (int bi : m.adj[ai]) {
      int c = m.bonds[bi].other(ai);
      if (m.atoms[c].atomic_num != 6) continue;
      for (int bj : m.adj[c]) {
        const Bond& bd = m.bonds[bj];
        if (bd.order == 2 && m.atoms[bd.other(c)].atomic_num == 8)
          return {-1.3260, 0.0};                                   // O12
      }
    }
    return {-0.1188, 0.6865};                                      // OS
  }
  if (p.dbl == 1) {
    if (attached(7)) return {0.0335, 3.367};                       // O5 (=N)
    if (attached(16)) return {-0.3339, 0.7774};                    // O6 (=S)
    // carbonyl: classify by the carbon's other neighbors
    int c = -1;
    for (int bi : m.adj[ai])
      if (m.bonds[bi].order == 2) c = m.bonds[bi].other(ai);
    if (c >= 0 && m.atoms[c].atomic_num == 6) {
      bool c_arom_nbr = false, c_het_nbr = false;
      for (int bj : m.adj[c]) {
        const Atom& x = m.atoms[m.bonds[bj].other(c)];
        if (m.bonds[bj].other(c) == ai) continue;
        if (x.aromatic) c_arom_nbr = true;
        if (x.atomic_num != 6 && x.atomic_num != 1) c_het_nbr = true;
      }
      if (c_het_nbr) return {0.4833, 0.389};                       // O11
      if (c_arom_nbr) return {0.1129, 0.2215};                     // O10
      return {-0.1526, 0.0};                                       // O9
    }
    return {-0.1188, 0.6865};                                      // OS
  }
  if (h >= 1) return {-0.2893, 0.8238};                            // O2
  if (p.single == 2)
    return neighbor_is(m, ai, arom) ? Contribution{0.4833, 1.182}  // O4
                                    : Contribution{-0.0684, 1.085};// O3
  return {-0.1188, 0.6865};                                        // OS
}

Contribution crippen_atom(const Molecule& m, int ai) {
  const Atom& a = m.atoms[ai];
  switch (a.atomic_num) {
    case 6: return crippen_carbon(m, ai);
    case 7: return crippen_nitrogen(m, ai);
    case 8: return crippen_oxygen(m, ai);
    case 9:
      return a.formal_charge < 0 ? Contribution{-2.9960, 0.0}
                                 : Contribution{0.4202, 1.108};
    case 17:
      return a.formal_charge < 0 ? Contribution{-2.9960, 0.0}
                                 : Contribution{0.6895, 5.853};
    case 35:
      return a.formal_charge < 0 ? Contribution{-2.9960, 0.0}
                                 : Contribution{0.8456, 8.927};
    case 53:
      return a.formal_charge < 0 ? Contribution{-2.9960, 0.0}
                                 : Contribution{0.8857, 14.02};
    case 15: return {0.8612, 6.920};
    case 16:
      if (a.aromatic) return {0.6237, 6.691};
      if (a.formal_charge != 0) return {-0.0024, 7.365};
      return {0.6482, 7.591};
    case 1: return {0.1230, 1.057};  // explicit H treated as H on C
    default:
      return elements::is_metal(a.atomic_num)
                 ? Contribution{-0.3808, 5.754}   // Me1
                 : Contribution{0.08129, 3.243};  // CS wildcard
  }
}

Contribution crippen_hydrogen_on(const Molecule& m, int ai) {
  const Atom& a = m.atoms[ai];
  if (a.atomic_num == 6) return {0.1230, 1.057};                   // H1
  if (a.atomic_num == 7) return {0.2142, 0.9627};                  // H3
  if (a.atomic_num == 8) {
    // acid-like O-H: O attached to N/O/S or to a carbonyl carbon
    for (int bi : m.adj[ai]) {
      const Atom& nb = m.atoms[m.bonds[bi].other(ai)];
      if (nb.atomic_num == 7 || nb.atomic_num == 8 || nb.atomic_num == 16)
        return {0.2980, 1.805};                                    // H4
      if (nb.atomic_num == 6) {
        int c = m.bonds[bi].other(ai);
        for (int bj : m.adj[c]) {
          const Bond& bd = m.bonds[bj];
          if (bd.order == 2 && !bd.aromatic &&
              m.atoms[bd.other(c)].atomic_num == 8)
            return {0.2980, 1.805};                                // H4 (acid)
        }
      }
    }
    return {-0.2677, 1.395};                                       // H2
  }
  return {0.1125, 1.112};                                          // HS
}

bool is_amide_bond(const Molecule& m, const Bond& bd) {
  if (bd.order != 1 || bd.aromatic) return false;
  for (auto [c, n] : {std::pair{bd.a, bd.b}, std::pair{bd.b, bd.a}}) {
    if (m.atoms[c].atomic_num != 6 || m.atoms[n].atomic_num != 7) continue;
    for (int bi : m.adj[c]) {
      const Bond& other = m.bonds[bi];
      if (other.order == 2 && !other.aromatic &&
          m.atoms[other.other(c)].atomic_num == 8)
        return true;
    }
  }
  return false;
}

}  // namespace

double tpsa(const Molecule& m) {
  double sum = 0.0;
  for (int ai = 0; ai < m.num_atoms(); ++ai) sum += tpsa_contribution(m, ai);
  return sum;
}

std::pair<double, double> crippen_logp_mr(const Molecule& m) {
  double logp = 0.0, mr = 0.0;
  for (int ai = 0; ai < m.num_atoms(); ++ai) {
    Contribution c = crippen_atom(m, ai);
    logp += c.logp;
    mr += c.mr;
    Contribution hc = crippen_hydrogen_on(m, ai);
    int h = m.atoms[ai].implicit_h;
    logp += h * hc.logp;
    mr += h * hc.mr;
  }
  return {logp, mr};
}

DescriptorSet compute_descriptors(const Molecule& m) {
  DescriptorSet d;
  d.n_fragments = static_cast<int>(m.components().size());

  for (int ai = 0; ai < m.num_atoms(); ++ai) {
    const Atom& a = m.atoms[ai];
    d.mol_weight += elements::standard_weight(a.atomic_num) +
                    a.implicit_h * elements::standard_weight(1);
    if (a.atomic_num != 1) {
      ++d.n_heavy;
      if (a.atomic_num == 6)
        ++d.n_carbons;
      else
        ++d.n_heteroatoms;
    }
    d.n_atoms += 1 + a.implicit_h;
    if (a.atomic_num == 7 || a.atomic_num == 8) {
      ++d.hba;
      d.hbd += hydrogen_count(m, ai);
    }
    if (a.formal_charge != 0) ++d.n_charged_groups;
    d.total_charge += a.formal_charge;
  }
  d.hetero_carbon_ratio =
      d.n_carbons > 0 ? static_cast<double>(d.n_heteroatoms) / d.n_carbons : 0.0;

  for (const auto& bd : m.bonds) {
    if (bd.aromatic) ++d.n_aromatic_bonds;
    bool amide = is_amide_bond(m, bd);
    bool heavy_terminal =
        heavy_degree(m, bd.a) < 2 || heavy_degree(m, bd.b) < 2;
    if (bd.in_ring || bd.order > 1 || amide)
      ++d.n_rigid_bonds;
    else if (bd.order == 1 && !heavy_terminal &&
             m.atoms[bd.a].atomic_num != 1 && m.atoms[bd.b].atomic_num != 1)
      ++d.n_rot_bonds;
  }

  d.n_rings = static_cast<int>(m.rings.size());
  for (const auto& ring : m.rings)
    d.max_ring_size = std::max(d.max_ring_size, static_cast<int>(ring.size()));

  // stereocenters: sp3 carbon with four pairwise-distinct substituents
  auto classes = symmetry_classes(m);
  for (int ai = 0; ai < m.num_atoms(); ++ai) {
    const Atom& a = m.atoms[ai];
    if (a.atomic_num != 6 || a.aromatic) continue;
    BondProfile p = bond_profile(m, ai);
    if (p.dbl > 0 || p.triple > 0) continue;
    int h = hydrogen_count(m, ai);
    int hvy = heavy_degree(m, ai);
    if (hvy + h != 4 || h > 1) continue;
    std::vector<int> nbr_classes;
    for (int bi : m.adj[ai]) {
      int nb = m.bonds[bi].other(ai);
      if (m.atoms[nb].atomic_num == 1) continue;
      nbr_classes.push_back(classes[nb]);
    }
    std::sort(nbr_classes.begin(), nbr_classes.end());
    if (std::adjacent_find(nbr_classes.begin(), nbr_classes.end()) ==
        nbr_classes.end())
      ++d.n_stereocenters;
  }

  d.tpsa = tpsa(m);
  auto [logp, mr] = crippen_logp_mr(m);
  d.logp = logp;
  d.mr = mr;
  return d;
}

namespace tables {

uint64_t fnv1a(const std::string& text) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string atomic_weights_text() {
  std::ostringstream out;
  out << "# atomic_weights v1 (IUPAC 2021 abridged)\n";
  out << "# z\tsymbol\tweight\n";
  for (int z = 1; z <= 103; ++z) {
    out << z << '\t' << elements::symbol(z) << '\t'
        << elements::standard_weight(z) << '\n';
  }
  return out.str();
}

std::string tpsa_fragments_text() {
  // entries mirror tpsa_contribution() exactly; columns:
  // element charge aromatic H single double triple contribution
  static const char* kText =
      "# tpsa_fragments v1 (Ertl fragment contributions)\n"
      "# element\tcharge\taromatic\tH\tsingle\tdouble\ttriple\tvalue\n"
      "N\t0\t0\t0\t3\t0\t0\t3.24\n"
      "N\t0\t0\t0\t3ring\t0\t0\t3.01\n"
      "N\t0\t0\t0\t1\t1\t0\t12.36\n"
      "N\t0\t0\t0\t0\t0\t1\t23.79\n"
      "N\t0\t0\t0\t1\t2\t0\t11.68\n"
      "N\t0\t0\t0\t0\t1\t1\t13.60\n"
      "N\t0\t0\t1\t2\t0\t0\t12.03\n"
      "N\t0\t0\t1\t2ring3\t0\t0\t21.94\n"
      "N\t0\t0\t1\t0\t1\t0\t23.85\n"
      "N\t0\t0\t2\t1\t0\t0\t26.02\n"
      "N\t+1\t0\t0\t4\t0\t0\t0.00\n"
      "N\t+1\t0\t0\t2\t1\t0\t3.01\n"
      "N\t+1\t0\t0\t1\t0\t1\t4.36\n"
      "N\t+1\t0\t1\t3\t0\t0\t4.44\n"
      "N\t+1\t0\t1\t1\t1\t0\t13.97\n"
      "N\t+1\t0\t2\t2\t0\t0\t16.61\n"
      "N\t+1\t0\t2\t0\t1\t0\t25.59\n"
      "N\t+1\t0\t3\t1\t0\t0\t27.64\n"
      "n\t0\t1\t0\t:2\t0\t0\t12.89\n"
      "n\t0\t1\t0\t:3\t0\t0\t4.41\n"
      "n\t0\t1\t0\t:2+1\t0\t0\t4.93\n"
      "n\t0\t1\t0\t:2\t1\t0\t8.39\n"
      "n\t0\t1\t1\t:2\t0\t0\t15.79\n"
      "n\t+1\t1\t0\t:3\t0\t0\t4.10\n"
      "n\t+1\t1\t0\t:2+1\t0\t0\t3.88\n"
      "n\t+1\t1\t1\t:2\t0\t0\t14.14\n"
      "O\t0\t0\t0\t2\t0\t0\t9.23\n"
      "O\t0\t0\t0\t2ring3\t0\t0\t12.53\n"
      "O\t0\t0\t0\t0\t1\t0\t17.07\n"
      "O\t0\t0\t1+\t*\t0\t0\t20.23\n"
      "O\t-1\t0\t0\t1\t0\t0\t23.06\n"
      "o\t0\t1\t0\t:2\t0\t0\t13.14\n"
      "S\t0\t0\t0\t2\t0\t0\t25.30\n"
      "S\t0\t0\t0\t0\t1\t0\t32.09\n"
      "S\t0\t0\t0\t2\t1\t0\t19.21\n"
      "S\t0\t0\t0\t2\t2\t0\t8.38\n"
      "S\t0\t0\t1\t1\t0\t0\t38.80\n"
      "s\t0\t1\t0\t:2\t0\t0\t28.24\n"
      "s\t0\t1\t0\t:2\t1\t0\t21.70\n"
      "P\t0\t0\t0\t3\t0\t0\t13.59\n"
      "P\t0\t0\t0\t1\t1\t0\t34.14\n"
      "P\t0\t0\t0\t3\t1\t0\t9.81\n"
      "P\t0\t0\t1\t2\t1\t0\t23.47\n";
  return kText;
}

std::string crippen_classes_text() {
  static const char* kText =
      "# crippen_classes v1 (Wildman-Crippen contributions)\n"
      "# class\tlogp\tmr\n"
      "C1\t0.1441\t2.503\nC2\t0.0000\t2.433\nC3\t-0.2035\t2.753\n"
      "C4\t-0.2051\t2.731\nC5\t-0.2783\t5.007\nC6\t0.1551\t3.513\n"
      "C7\t0.0017\t3.888\nC8\t0.08452\t2.464\nC9\t-0.1444\t2.412\n"
      "C10\t-0.0516\t2.488\nC11\t0.1193\t2.582\nC12\t-0.0967\t2.576\n"
      "C13\t-0.5443\t4.041\nC14\t0.0000\t3.257\nC15\t0.2450\t3.564\n"
      "C16\t0.1980\t3.180\nC17\t0.0000\t3.104\nC18\t0.1581\t3.350\n"
      "C19\t0.2955\t4.346\nC20\t0.2713\t3.904\nC21\t0.1360\t3.509\n"
      "C22\t0.4619\t4.067\nC23\t0.5437\t3.853\nC24\t0.1893\t2.673\n"
      "C25\t-0.8186\t3.135\nC26\t0.2640\t4.305\nCS\t0.08129\t3.243\n"
      "H1\t0.1230\t1.057\nH2\t-0.2677\t1.395\nH3\t0.2142\t0.9627\n"
      "H4\t0.2980\t1.805\nHS\t0.1125\t1.112\n"
      "N1\t-1.0190\t2.262\nN2\t-0.7096\t2.173\nN3\t-1.0270\t2.827\n"
      "N4\t-0.5188\t2.819\nN5\t0.08387\t1.757\nN6\t0.1836\t2.428\n"
      "N7\t-0.3187\t1.839\nN8\t-0.4458\t2.819\nN9\t0.01508\t1.725\n"
      "N10\t-1.9500\t0.0\nN11\t-0.3239\t2.202\nN12\t-1.1190\t0.0\n"
      "N13\t-0.3396\t0.2604\nN14\t0.2887\t3.359\nNS\t-0.4806\t2.134\n"
      "O1\t0.1552\t1.080\nO2\t-0.2893\t0.8238\nO3\t-0.0684\t1.085\n"
      "O4\t0.4833\t1.182\nO5\t0.0335\t3.367\nO6\t-0.3339\t0.7774\n"
      "O9\t-0.1526\t0.0\nO10\t0.1129\t0.2215\nO11\t0.4833\t0.389\n"
      "O12\t-1.3260\t0.0\nOS\t-0.1188\t0.6865\n"
      "F\t0.4202\t1.108\nCl\t0.6895\t5.853\nBr\t0.8456\t8.927\n"
      "I\t0.8857\t14.02\nHalAnion\t-2.9960\t0.0\n"
      "P\t0.8612\t6.920\nS1\t0.6482\t7.591\nS2\t-0.0024\t7.365\n"
      "S3\t0.6237\t6.691\nMe1\t-0.3808\t5.754\n";
  return kText;
}

}  // namespace tables
}  // namespace molcurate
