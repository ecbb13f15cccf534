#include "molcurate/filters.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace molcurate {

namespace {

constexpr double kNoBound = std::numeric_limits<double>::infinity();

// One bound over a descriptor field: closed interval [lo, hi], with
// infinities marking one-sided rules.
struct Rule {
  std::string name;
  double (*get)(const DescriptorSet&);
  double lo;
  double hi;
};

struct FilterDef {
  std::string name;
  std::vector<Rule> rules;
  int violation_budget = 0;
};

double g_mw(const DescriptorSet& d) { return d.mol_weight; }
double g_atoms(const DescriptorSet& d) { return d.n_atoms; }
double g_heavy(const DescriptorSet& d) { return d.n_heavy; }
double g_hba(const DescriptorSet& d) { return d.hba; }
double g_hbd(const DescriptorSet& d) { return d.hbd; }
double g_logp(const DescriptorSet& d) { return d.logp; }
double g_mr(const DescriptorSet& d) { return d.mr; }
double g_tpsa(const DescriptorSet& d) { return d.tpsa; }
double g_rot(const DescriptorSet& d) { return d.n_rot_bonds; }
double g_rigid(const DescriptorSet& d) { return d.n_rigid_bonds; }
double g_rings(const DescriptorSet& d) { return d.n_rings; }
double g_maxring(const DescriptorSet& d) { return d.max_ring_size; }
double g_carbons(const DescriptorSet& d) { return d.n_carbons; }
double g_hetero(const DescriptorSet& d) { return d.n_heteroatoms; }
double g_ratio(const DescriptorSet& d) { return d.hetero_carbon_ratio; }
double g_charged(const DescriptorSet& d) { return d.n_charged_groups; }
double g_charge(const DescriptorSet& d) { return d.total_charge; }
double g_arbonds(const DescriptorSet& d) { return d.n_aromatic_bonds; }
double g_stereo(const DescriptorSet& d) { return d.n_stereocenters; }

Rule atmost(const std::string& name, double (*get)(const DescriptorSet&),
            double hi) {
  return {name, get, -kNoBound, hi};
}
Rule atleast(const std::string& name, double (*get)(const DescriptorSet&),
             double lo) {
  return {name, get, lo, kNoBound};
}
Rule range(const std::string& name, double (*get)(const DescriptorSet&),
           double lo, double hi) {
  return {name, get, lo, hi};
}

const std::vector<FilterDef>& registry() {
  static const std::vector<FilterDef> defs = {
      {"lipinski",
       {atmost("mol_weight", g_mw, 500), atmost("hba", g_hba, 10),
        atmost("hbd", g_hbd, 5), atmost("logp", g_logp, 5)},
       1},
      {"veber",
       {atmost("n_rot_bonds", g_rot, 10), atmost("tpsa", g_tpsa, 140)}},
      {"gsk", {atmost("mol_weight", g_mw, 400), atmost("logp", g_logp, 4)}},
      {"ghose",
       {range("mol_weight", g_mw, 160, 400), range("logp", g_logp, -0.4, 5.6),
        range("n_atoms", g_atoms, 20, 70), range("mr", g_mr, 40, 130)}},
      {"xu",
       {atmost("hbd", g_hbd, 5), atmost("hba", g_hba, 10),
        range("n_rot_bonds", g_rot, 2, 35), range("n_rings", g_rings, 1, 7),
        range("n_heavy", g_heavy, 10, 50)}},
      {"oprea",
       {atmost("hbd", g_hbd, 2), range("hba", g_hba, 2, 9),
        range("n_rot_bonds", g_rot, 2, 8), range("n_rings", g_rings, 1, 4)}},
      {"faf4-druglike",
       {range("mol_weight", g_mw, 100, 600), range("logp", g_logp, -3, 6),
        atmost("hba", g_hba, 12), atmost("hbd", g_hbd, 7),
        atmost("tpsa", g_tpsa, 180), atmost("n_rot_bonds", g_rot, 11),
        atmost("n_rigid_bonds", g_rigid, 30), atmost("n_rings", g_rings, 6),
        atmost("max_ring_size", g_maxring, 18),
        range("n_carbons", g_carbons, 3, 35),
        range("n_heteroatoms", g_hetero, 1, 15),
        range("hetero_carbon_ratio", g_ratio, 0.1, 1.1),
        atmost("n_charged_groups", g_charged, 4),
        range("total_charge", g_charge, -4, 4)}},
      {"faf4-leadlike",
       {range("mol_weight", g_mw, 150, 400), range("logp", g_logp, -3, 4),
        atmost("hba", g_hba, 7), atmost("hbd", g_hbd, 4),
        atmost("tpsa", g_tpsa, 160), atmost("n_rot_bonds", g_rot, 9),
        atmost("n_rigid_bonds", g_rigid, 30), atmost("n_rings", g_rings, 4),
        atmost("max_ring_size", g_maxring, 18),
        range("n_carbons", g_carbons, 3, 35),
        range("n_heteroatoms", g_hetero, 1, 15),
        range("hetero_carbon_ratio", g_ratio, 0.1, 1.1),
        atmost("n_charged_groups", g_charged, 4),
        range("total_charge", g_charge, -4, 4),
        atmost("n_stereocenters", g_stereo, 2)}},
      {"zinc-druglike",
       {range("mol_weight", g_mw, 60, 600), range("logp", g_logp, -4, 6),
        atmost("hba", g_hba, 11), atmost("hbd", g_hbd, 6),
        atmost("tpsa", g_tpsa, 150), atmost("n_rot_bonds", g_rot, 12),
        atmost("n_rigid_bonds", g_rigid, 50), atmost("n_rings", g_rings, 7),
        atmost("max_ring_size", g_maxring, 12),
        atleast("n_carbons", g_carbons, 3),
        atmost("hetero_carbon_ratio", g_ratio, 2.0),
        atmost("n_charged_groups", g_charged, 4),
        range("total_charge", g_charge, -4, 4)}},
      {"beyond-ro5",
       {atmost("mol_weight", g_mw, 1000), range("logp", g_logp, -2, 10),
        atmost("hba", g_hba, 15), atmost("hbd", g_hbd, 6),
        atmost("tpsa", g_tpsa, 250), atmost("n_rot_bonds", g_rot, 20)}},
      {"hao",
       {atmost("mol_weight", g_mw, 435), atmost("logp", g_logp, 6),
        atmost("hbd", g_hbd, 2), atmost("hba", g_hba, 6),
        atmost("n_rot_bonds", g_rot, 9),
        atmost("n_aromatic_bonds", g_arbonds, 17)}},
      {"reos",
       {range("mol_weight", g_mw, 200, 500), range("logp", g_logp, -5, 5),
        atmost("hba", g_hba, 10), atmost("hbd", g_hbd, 5),
        range("total_charge", g_charge, -2, 2),
        atmost("n_rot_bonds", g_rot, 8), range("n_heavy", g_heavy, 15, 50)}},
      {"pfizer-3-75",
       {atmost("logp", g_logp, 3), atleast("tpsa", g_tpsa, 75)}},
  };
  return defs;
}

std::string format_number(double v) {
  std::ostringstream os;
  if (v == static_cast<long long>(v)) {
    os << static_cast<long long>(v);
  } else {
    os << v;
  }
  return os.str();
}

std::string bound_text(const Rule& r) {
  if (r.lo == -kNoBound) return "<= " + format_number(r.hi);
  if (r.hi == kNoBound) return ">= " + format_number(r.lo);
  return "in [" + format_number(r.lo) + ", " + format_number(r.hi) + "]";
}

FilterVerdict evaluate(const FilterDef& def, const DescriptorSet& d) {
  FilterVerdict v;
  v.filter_name = def.name;
  for (const Rule& r : def.rules) {
    double obs = r.get(d);
    if (obs < r.lo || obs > r.hi) {
      v.violations.push_back({r.name, obs, bound_text(r)});
    }
  }
  v.passed = static_cast<int>(v.violations.size()) <= def.violation_budget;
  return v;
}

}  // namespace

FilterVerdict feasibility_check(const DescriptorSet& d, size_t key_length) {
  static const FilterDef def = {
      "feasibility",
      {atmost("n_fragments", [](const DescriptorSet& x) {
         return static_cast<double>(x.n_fragments);
       }, 3),
       atmost("mol_weight", g_mw, 2500), atmost("n_atoms", g_atoms, 150),
       atmost("hba", g_hba, 20), atmost("hbd", g_hbd, 15),
       range("logp", g_logp, -10, 25), atmost("tpsa", g_tpsa, 500),
       atmost("n_rot_bonds", g_rot, 60)}};
  FilterVerdict v = evaluate(def, d);
  if (key_length >= 2000) {
    v.violations.push_back(
        {"key_length", static_cast<double>(key_length), "< 2000"});
    v.passed = false;
  }
  return v;
}

FilterVerdict apply_filter(const std::string& name, const DescriptorSet& d) {
  if (name == "glaxo" || name == "brenk" || name == "zinc-basic") {
    throw std::invalid_argument("out-of-scope: substructure rules");
  }
  for (const FilterDef& def : registry()) {
    if (def.name == name) return evaluate(def, d);
  }
  throw std::invalid_argument("unknown filter: " + name);
}

const std::vector<std::string>& filter_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const FilterDef& def : registry()) v.push_back(def.name);
    return v;
  }();
  return names;
}

std::vector<FilterPassRate> filter_profile(
    const std::vector<DescriptorSet>& dataset,
    const std::vector<std::string>& names) {
  std::vector<FilterPassRate> out;
  for (const std::string& name : names) {
    FilterPassRate row;
    row.filter_name = name;
    row.total = static_cast<long long>(dataset.size());
    for (const DescriptorSet& d : dataset) {
      if (apply_filter(name, d).passed) ++row.passed;
    }
    row.fraction = row.total > 0
                       ? static_cast<double>(row.passed) / row.total
                       : 0.0;
    out.push_back(row);
  }
  return out;
}

std::string filter_rules_text() {
  std::ostringstream os;
  os << "# filter rules v1\n";
  os << "# filter\trule\tbound\n";
  for (const FilterDef& def : registry()) {
    for (const Rule& r : def.rules) {
      os << def.name << "\t" << r.name << "\t" << bound_text(r) << "\n";
    }
    if (def.violation_budget > 0) {
      os << def.name << "\t(budget)\tat most " << def.violation_budget
         << " violation\n";
    }
  }
  return os.str();
}

}  // namespace molcurate
