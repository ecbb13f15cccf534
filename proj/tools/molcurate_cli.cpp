#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "molcurate/analytics.hpp"
#include "molcurate/canonical.hpp"
#include "molcurate/descriptors.hpp"
#include "molcurate/diversity.hpp"
#include "molcurate/filters.hpp"
#include "molcurate/fingerprint.hpp"
#include "molcurate/pipeline.hpp"
#include "molcurate/smiles.hpp"
#include "molcurate/standardize.hpp"

namespace mc = molcurate;

namespace {

constexpr const char* kVersion = "molcurate 1.0.0";

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string version_text() {
  std::ostringstream os;
  os << kVersion << "\n";
  os << "table checksums (fnv1a):\n";
  os << "  atomic_weights  " << std::hex
     << mc::tables::fnv1a(mc::tables::atomic_weights_text()) << "\n";
  os << "  tpsa_fragments  "
     << mc::tables::fnv1a(mc::tables::tpsa_fragments_text()) << "\n";
  os << "  crippen_classes "
     << mc::tables::fnv1a(mc::tables::crippen_classes_text()) << "\n";
  return os.str();
}

// Standardized molecules for every record of a curated record file.
std::vector<mc::Molecule> load_molecules(
    const std::vector<mc::MoleculeRecord>& records) {
  std::vector<mc::Molecule> out;
  out.reserve(records.size());
  for (const auto& rec : records) {
    out.push_back(mc::standardize(mc::parse_smiles(rec.smiles)));
  }
  return out;
}

std::vector<mc::Fingerprint> fingerprints_of(
    const std::vector<mc::Molecule>& mols, int radius, int width) {
  std::vector<mc::Fingerprint> out;
  out.reserve(mols.size());
  for (const auto& m : mols) out.push_back(mc::ecfp(m, radius, width));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Molecular dataset curation toolkit"};
  app.set_config("--config", "", "Config file (key=value), overridden by flags");
  app.set_version_flag("--version", version_text);
  app.require_subcommand(1);

  int threads = 1;
  app.add_option("--threads", threads, "Worker thread cap")->capture_default_str();

  int fp_radius = 2;
  int fp_width = 2048;

  std::string in_path, in_path_b, out_path, ledger_path, quarantine_path,
      report_path;
  std::vector<std::string> in_paths, filter_list;
  long long m_target = 0, n_pairs = 100000;
  double t_subset = 0.9, t_circles = 0.75;
  uint64_t seed = 0;

  CLI::App* c_ingest = app.add_subcommand("ingest", "Parse and dedup one source file");
  c_ingest->add_option("--in", in_path, "Input record TSV")->required();
  c_ingest->add_option("--out", out_path, "Surviving raw records")->required();
  c_ingest->add_option("--ledger", ledger_path, "Ledger JSON");
  c_ingest->add_option("--quarantine", quarantine_path, "Quarantine TSV");

  CLI::App* c_run = app.add_subcommand("run", "Full per-source pipeline");
  c_run->add_option("--in", in_path, "Input record TSV")->required();
  c_run->add_option("--out", out_path, "Curated records")->required();
  c_run->add_option("--ledger", ledger_path, "Ledger JSON");
  c_run->add_option("--quarantine", quarantine_path, "Quarantine TSV");

  CLI::App* c_merge = app.add_subcommand("merge", "Merge curated sources in order");
  c_merge->add_option("--in", in_paths, "Curated record TSVs, merge order")->required();
  c_merge->add_option("--out", out_path, "Merged records")->required();
  c_merge->add_option("--gains", report_path, "Gain table JSON");

  CLI::App* c_subset = app.add_subcommand("subset", "Diverse subset selection");
  c_subset->add_option("--in", in_path, "Curated record TSV")->required();
  c_subset->add_option("--out", out_path, "Subset records")->required();
  c_subset->add_option("--m", m_target, "Subset size")->required();
  c_subset->add_option("--t", t_subset, "MaxMin distance threshold")->capture_default_str();
  c_subset->add_option("--seed", seed, "RNG seed")->required();
  c_subset->add_option("--radius", fp_radius, "ECFP radius")->capture_default_str();
  c_subset->add_option("--width", fp_width, "Fingerprint width")->capture_default_str();

  CLI::App* c_ncircles = app.add_subcommand("ncircles", "Greedy packing-number estimate");
  c_ncircles->add_option("--in", in_path, "Curated record TSV")->required();
  c_ncircles->add_option("--t", t_circles, "Distance threshold")->capture_default_str();
  c_ncircles->add_option("--report", report_path, "Report JSON")->required();
  c_ncircles->add_option("--radius", fp_radius, "ECFP radius")->capture_default_str();
  c_ncircles->add_option("--width", fp_width, "Fingerprint width")->capture_default_str();

  CLI::App* c_stats = app.add_subcommand("stats", "Pair-distance distribution comparison");
  c_stats->add_option("--in-a", in_path, "First record TSV")->required();
  c_stats->add_option("--in-b", in_path_b, "Second record TSV")->required();
  c_stats->add_option("--pairs", n_pairs, "Sampled pairs per set")->capture_default_str();
  c_stats->add_option("--seed", seed, "RNG seed")->required();
  c_stats->add_option("--report", report_path, "Report JSON")->required();
  c_stats->add_option("--radius", fp_radius, "ECFP radius")->capture_default_str();
  c_stats->add_option("--width", fp_width, "Fingerprint width")->capture_default_str();

  CLI::App* c_filters = app.add_subcommand("filters", "Drug-likeness filter profile");
  c_filters->add_option("--in", in_path, "Curated record TSV")->required();
  c_filters->add_option("--report", report_path, "Pass-rate JSON")->required();
  c_filters->add_option("--filters", filter_list, "Filter names (default: all)");

  CLI::App* c_summary = app.add_subcommand("summary", "Dataset characterization report");
  c_summary->add_option("--in", in_path, "Curated record TSV")->required();
  c_summary->add_option("--report", report_path, "Report JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_ingest->parsed()) {
      mc::IngestResult r = mc::ingest(in_path);
      mc::write_records(r.records, out_path);
      if (!ledger_path.empty()) write_text(ledger_path, mc::ledger_json({r.ledger}));
      if (!quarantine_path.empty()) mc::write_quarantine(r.quarantine, quarantine_path);
      return r.quarantine.empty() ? 0 : 2;
    }
    if (c_run->parsed()) {
      mc::SourceResult r = mc::run_source(mc::ingest(in_path), threads);
      mc::write_records(r.kept, out_path);
      if (!ledger_path.empty()) write_text(ledger_path, mc::ledger_json({r.ledger}));
      if (!quarantine_path.empty()) mc::write_quarantine(r.quarantine, quarantine_path);
      return r.quarantine.empty() ? 0 : 2;
    }
    if (c_merge->parsed()) {
      std::vector<std::vector<mc::MoleculeRecord>> sources;
      for (const std::string& p : in_paths) sources.push_back(mc::ingest(p).records);
      mc::MergeResult r = mc::merge_sources(sources);
      mc::write_records(r.merged, out_path);
      if (!report_path.empty()) write_text(report_path, mc::gains_json(r.gains));
      return 0;
    }

    if (c_subset->parsed()) {
      mc::IngestResult in = mc::ingest(in_path);
      auto fps = fingerprints_of(load_molecules(in.records), fp_radius, fp_width);
      std::vector<int> picked =
          mc::diverse_subset(fps, static_cast<int>(m_target), t_subset, seed);
      std::vector<mc::MoleculeRecord> subset;
      for (int i : picked) subset.push_back(in.records[i]);
      mc::write_records(subset, out_path);
      return 0;
    }
    if (c_ncircles->parsed()) {
      mc::IngestResult in = mc::ingest(in_path);
      auto fps = fingerprints_of(load_molecules(in.records), fp_radius, fp_width);
      mc::NCirclesResult r = mc::ncircles(fps, t_circles);
      std::ostringstream os;
      os.precision(10);
      os << "{\"t\": " << t_circles << ", \"n\": " << fps.size()
         << ", \"radius\": " << fp_radius << ", \"width\": " << fp_width
         << ", \"ncircles\": " << r.count
         << ", \"normalized\": " << r.normalized << "}\n";
      write_text(report_path, os.str());
      return 0;
    }
    if (c_stats->parsed()) {
      mc::IngestResult in_a = mc::ingest(in_path);
      mc::IngestResult in_b = mc::ingest(in_path_b);
      auto fps_a = fingerprints_of(load_molecules(in_a.records), fp_radius, fp_width);
      auto fps_b = fingerprints_of(load_molecules(in_b.records), fp_radius, fp_width);
      mc::PairDistanceStats s = mc::pair_distance_stats(fps_a, fps_b, n_pairs, seed);
      auto summary = [](const mc::DistanceSummary& d) {
        std::ostringstream os;
        os.precision(10);
        os << "{\"p10\": " << d.p10 << ", \"p25\": " << d.p25
           << ", \"mean\": " << d.mean << ", \"median\": " << d.median
           << ", \"p75\": " << d.p75 << ", \"p90\": " << d.p90 << "}";
        return os.str();
      };
      std::ostringstream os;
      os.precision(10);
      os << "{\n  \"a\": " << summary(s.a) << ",\n  \"b\": " << summary(s.b)
         << ",\n  \"wasserstein\": " << s.wasserstein << ",\n  \"ks\": " << s.ks
         << "\n}\n";
      write_text(report_path, os.str());
      return 0;
    }
    if (c_filters->parsed()) {
      mc::IngestResult in = mc::ingest(in_path);
      std::vector<mc::DescriptorSet> ds;
      for (const mc::Molecule& m : load_molecules(in.records)) {
        ds.push_back(mc::compute_descriptors(m));
      }
      if (filter_list.empty()) filter_list = mc::filter_names();
      std::vector<mc::FilterPassRate> rows = mc::filter_profile(ds, filter_list);
      std::ostringstream os;
      os.precision(10);
      os << "{\n  \"filters\": [\n";
      for (size_t i = 0; i < rows.size(); ++i) {
        os << "    {\"name\": \"" << rows[i].filter_name
           << "\", \"passed\": " << rows[i].passed
           << ", \"total\": " << rows[i].total
           << ", \"fraction\": " << rows[i].fraction << "}"
           << (i + 1 < rows.size() ? "," : "") << "\n";
      }
      os << "  ]\n}\n";
      write_text(report_path, os.str());
      return 0;
    }
    if (c_summary->parsed()) {
      mc::IngestResult in = mc::ingest(in_path);
      mc::DatasetReport report = mc::dataset_summary(load_molecules(in.records));
      write_text(report_path, mc::report_json(report));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
