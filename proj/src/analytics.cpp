#include "molcurate/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "molcurate/canonical.hpp"

namespace molcurate {

namespace {

const std::vector<std::string>& group_names() {
  static const std::vector<std::string> names = {
      "C", "N", "O", "S", "halogens", "metalloids", "metals", "other"};
  return names;
}

std::string element_group(int z) {
  switch (z) {
    case 6: return "C";
    case 7: return "N";
    case 8: return "O";
    case 16: return "S";
    default: break;
  }
  if (elements::is_halogen(z)) return "halogens";
  if (elements::is_metalloid(z)) return "metalloids";
  if (elements::is_metal(z)) return "metals";
  return "other";
}

}  // namespace

std::map<std::string, double> element_profile(
    const std::vector<Molecule>& molecules) {
  std::map<std::string, long long> counts;
  for (const std::string& g : group_names()) counts[g] = 0;
  for (const Molecule& m : molecules) {
    std::unordered_set<std::string> present;
    for (const Atom& a : m.atoms) {
      if (a.atomic_num == 1) continue;
      present.insert(element_group(a.atomic_num));
    }
    for (const std::string& g : present) ++counts[g];
  }
  std::map<std::string, double> out;
  const double n = molecules.empty() ? 1.0 : static_cast<double>(molecules.size());
  for (const auto& [g, c] : counts) out[g] = c / n;
  return out;
}

std::string generic_scaffold(const Molecule& m) {
  if (m.rings.empty()) return "";

  const int n = m.num_atoms();
  std::vector<bool> keep(n, true);
  std::vector<int> deg(n);
  for (int i = 0; i < n; ++i) deg[i] = m.degree(i);

  // Iteratively prune degree-1 non-ring atoms; what survives is the ring
  // systems plus every path connecting them.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (!keep[i] || m.atoms[i].in_ring || deg[i] > 1) continue;
      keep[i] = false;
      changed = true;
      for (int bi : m.adj[i]) {
        int j = m.bonds[bi].other(i);
        if (keep[j]) --deg[j];
      }
    }
  }

  Molecule scaffold;
  std::vector<int> remap(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    remap[i] = scaffold.num_atoms();
    Atom a;
    a.atomic_num = 6;
    scaffold.atoms.push_back(a);
  }
  for (const Bond& b : m.bonds) {
    if (remap[b.a] < 0 || remap[b.b] < 0) continue;
    Bond nb;
    nb.a = remap[b.a];
    nb.b = remap[b.b];
    nb.order = 1;
    scaffold.bonds.push_back(nb);
  }
  std::vector<int> degrees(scaffold.num_atoms(), 0);
  for (const Bond& b : scaffold.bonds) {
    ++degrees[b.a];
    ++degrees[b.b];
  }
  for (int i = 0; i < scaffold.num_atoms(); ++i) {
    scaffold.atoms[i].implicit_h = std::max(0, 4 - degrees[i]);
  }
  scaffold.finalize();
  return canonicalize(scaffold).key;
}

bool is_salt(const Molecule& m) {
  int charged_fragments = 0;
  for (const Molecule& frag : split_components(m)) {
    int net = 0;
    for (const Atom& a : frag.atoms) net += a.formal_charge;
    if (net != 0) ++charged_fragments;
  }
  return charged_fragments >= 2;
}

namespace {

DescriptorStats order_stats(std::vector<double> values) {
  DescriptorStats s;
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  auto nearest_rank = [&](double p) {
    size_t rank = static_cast<size_t>(std::ceil(p * n));
    if (rank < 1) rank = 1;
    return values[rank - 1];
  };
  s.min = values.front();
  s.p1 = nearest_rank(0.01);
  s.p5 = nearest_rank(0.05);
  s.q1 = nearest_rank(0.25);
  s.median = nearest_rank(0.50);
  s.q3 = nearest_rank(0.75);
  s.p95 = nearest_rank(0.95);
  s.p99 = nearest_rank(0.99);
  s.max = values.back();
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  s.defined = true;
  return s;
}

}  // namespace

DatasetReport dataset_summary(const std::vector<Molecule>& molecules) {
  DatasetReport report;
  report.n_molecules = static_cast<long long>(molecules.size());
  report.element_fractions = element_profile(molecules);

  std::unordered_set<std::string> scaffolds;
  std::map<std::string, std::vector<double>> columns;
  for (const Molecule& m : molecules) {
    std::string sc = generic_scaffold(m);
    if (!sc.empty()) scaffolds.insert(sc);
    if (is_salt(m)) ++report.n_salts;

    DescriptorSet d = compute_descriptors(m);
    columns["mol_weight"].push_back(d.mol_weight);
    columns["n_heavy"].push_back(d.n_heavy);
    columns["hba"].push_back(d.hba);
    columns["hbd"].push_back(d.hbd);
    columns["logp"].push_back(d.logp);
    columns["mr"].push_back(d.mr);
    columns["tpsa"].push_back(d.tpsa);
    columns["n_rot_bonds"].push_back(d.n_rot_bonds);
    columns["n_rings"].push_back(d.n_rings);
    columns["n_stereocenters"].push_back(d.n_stereocenters);
  }
  report.n_unique_scaffolds = static_cast<long long>(scaffolds.size());
  for (auto& [name, values] : columns) {
    report.descriptor_stats[name] = order_stats(std::move(values));
  }
  return report;
}

std::string report_json(const DatasetReport& report) {
  std::ostringstream os;
  os.precision(10);
  os << "{\n  \"schema_version\": 1,\n";
  os << "  \"percentile_method\": \"nearest-rank\",\n";
  os << "  \"n_molecules\": " << report.n_molecules << ",\n";
  os << "  \"n_unique_scaffolds\": " << report.n_unique_scaffolds << ",\n";
  os << "  \"n_salts\": " << report.n_salts << ",\n";
  os << "  \"element_fractions\": {";
  bool first = true;
  for (const auto& [g, f] : report.element_fractions) {
    os << (first ? "" : ", ") << "\"" << g << "\": " << f;
    first = false;
  }
  os << "},\n  \"descriptors\": {\n";
  first = true;
  for (const auto& [name, s] : report.descriptor_stats) {
    if (!first) os << ",\n";
    first = false;
    os << "    \"" << name << "\": ";
    if (!s.defined) {
      os << "null";
      continue;
    }
    os << "{\"min\": " << s.min << ", \"p1\": " << s.p1 << ", \"p5\": " << s.p5
       << ", \"q1\": " << s.q1 << ", \"mean\": " << s.mean
       << ", \"median\": " << s.median << ", \"q3\": " << s.q3
       << ", \"p95\": " << s.p95 << ", \"p99\": " << s.p99
       << ", \"max\": " << s.max << "}";
  }
  os << "\n  }\n}\n";
  return os.str();
}

}  // namespace molcurate
