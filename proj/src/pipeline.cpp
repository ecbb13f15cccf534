#include "molcurate/pipeline.hpp"

#include <zlib.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "molcurate/canonical.hpp"
#include "molcurate/descriptors.hpp"
#include "molcurate/filters.hpp"
#include "molcurate/smiles.hpp"
#include "molcurate/standardize.hpp"

namespace molcurate {

namespace {

constexpr const char* kHeader = "source\tsource_id\tsmiles";
constexpr int kIndexBlock = 10000;

// gzread handles both gzip and plain files transparently.
std::string read_whole_file(const std::string& path) {
  gzFile f = gzopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("cannot open " + path);
  std::string out;
  char buf[1 << 16];
  int n;
  while ((n = gzread(f, buf, sizeof(buf))) > 0) out.append(buf, n);
  bool failed = n < 0;
  gzclose(f);
  if (failed) throw std::runtime_error("read error in " + path);
  return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::string id_pair(const std::string& source, const std::string& id) {
  return source + '\x1f' + id;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "\\u%04x", c);
      out += buf;
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

IngestResult ingest(const std::string& path) {
  std::string text = read_whole_file(path);
  IngestResult out;
  out.ledger.source = std::filesystem::path(path).stem().string();

  std::istringstream lines(text);
  std::string line;
  if (!std::getline(lines, line) || line != kHeader) {
    throw std::runtime_error("malformed header in " + path +
                             " (expected '" + kHeader + "')");
  }
  std::unordered_set<std::string> seen_ids;
  std::unordered_set<std::string> seen_keys;
  bool source_named = false;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    if (line.back() == '\r') line.pop_back();
    ++out.ledger.initial;
    std::vector<std::string> f = split_tabs(line);
    if (f.size() != 3) {
      ++out.ledger.removed_preprocessing;
      out.quarantine.push_back({f.empty() ? "" : f[0],
                                f.size() > 1 ? f[1] : "", line,
                                "preprocessing", "malformed row"});
      continue;
    }
    if (!source_named) {
      out.ledger.source = f[0];
      source_named = true;
    }
    if (!seen_ids.insert(id_pair(f[0], f[1])).second) {
      ++out.ledger.removed_preprocessing;
      out.quarantine.push_back(
          {f[0], f[1], f[2], "preprocessing", "duplicate source_id"});
      continue;
    }
    std::string key;
    try {
      Molecule m = parse_smiles(f[2]);
      key = canonicalize(m).key;
    } catch (const SmilesError& e) {
      ++out.ledger.removed_preprocessing;
      out.quarantine.push_back(
          {f[0], f[1], f[2], "preprocessing", std::string("parse: ") + e.what()});
      continue;
    }
    if (!seen_keys.insert(key).second) {
      ++out.ledger.removed_preprocessing;
      out.quarantine.push_back(
          {f[0], f[1], f[2], "preprocessing", "duplicate structure"});
      continue;
    }
    MoleculeRecord rec;
    rec.source = f[0];
    rec.source_id = f[1];
    rec.smiles = f[2];
    rec.key = key;
    out.records.push_back(std::move(rec));
  }
  return out;
}

namespace {

struct StageOutcome {
  RecordStatus status = RecordStatus::ok;
  std::string smiles;  // canonical, when ok
  std::string key;
  std::string reason;
};

StageOutcome process_record(const std::string& raw) {
  StageOutcome o;
  Molecule m;
  try {
    m = parse_smiles(raw);
  } catch (const SmilesError& e) {
    o.status = RecordStatus::parse_failed;
    o.reason = std::string("parse: ") + e.what();
    return o;
  }
  try {
    m = standardize(m);
  } catch (const StandardizationFailure& e) {
    o.status = RecordStatus::standardize_failed;
    o.reason = std::string("standardize: ") + e.step();
    return o;
  }
  CanonicalResult canon = canonicalize(m);
  DescriptorSet d = compute_descriptors(m);
  FilterVerdict v = feasibility_check(d, canon.key.size());
  if (!v.passed) {
    o.status = RecordStatus::filtered;
    std::string rules;
    for (const Violation& viol : v.violations) {
      if (!rules.empty()) rules += ",";
      rules += viol.rule;
    }
    o.reason = "feasibility: " + rules;
    return o;
  }
  o.smiles = canon.smiles;
  o.key = canon.key;
  return o;
}

}  // namespace

SourceResult run_source(const IngestResult& in, int threads) {
  SourceResult out;
  out.ledger = in.ledger;
  out.quarantine = in.quarantine;

  const size_t n = in.records.size();
  std::vector<StageOutcome> outcomes(n);
  if (threads < 1) threads = 1;
  if (threads == 1 || n < 256) {
    for (size_t i = 0; i < n; ++i) {
      outcomes[i] = process_record(in.records[i].smiles);
    }
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (size_t i = t; i < n; i += threads) {
          outcomes[i] = process_record(in.records[i].smiles);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // Sequential commit so dedup attribution is scheduler-independent.
  std::unordered_set<std::string> seen_keys;
  for (size_t i = 0; i < n; ++i) {
    const MoleculeRecord& rec = in.records[i];
    StageOutcome& o = outcomes[i];
    switch (o.status) {
      case RecordStatus::parse_failed:
        ++out.ledger.removed_preprocessing;
        out.quarantine.push_back(
            {rec.source, rec.source_id, rec.smiles, "preprocessing", o.reason});
        continue;
      case RecordStatus::standardize_failed:
        ++out.ledger.removed_standardization;
        out.quarantine.push_back({rec.source, rec.source_id, rec.smiles,
                                  "standardization", o.reason});
        continue;
      case RecordStatus::filtered:
        ++out.ledger.removed_filtering;
        out.quarantine.push_back(
            {rec.source, rec.source_id, rec.smiles, "filtering", o.reason});
        continue;
      default:
        break;
    }
    if (!seen_keys.insert(o.key).second) {
      ++out.ledger.removed_preprocessing;
      out.quarantine.push_back({rec.source, rec.source_id, rec.smiles,
                                "preprocessing", "duplicate structure"});
      continue;
    }
    MoleculeRecord kept = rec;
    kept.smiles = std::move(o.smiles);
    kept.key = std::move(o.key);
    kept.status = RecordStatus::ok;
    out.kept.push_back(std::move(kept));
  }
  out.ledger.final_count = static_cast<long long>(out.kept.size());
  return out;
}

MergeResult merge_sources(
    const std::vector<std::vector<MoleculeRecord>>& sources) {
  MergeResult out;
  std::unordered_set<std::string> keys;
  std::unordered_set<std::string> ids;
  for (const auto& src : sources) {
    GainRow gain;
    if (!src.empty()) gain.source = src.front().source;
    for (const MoleculeRecord& rec : src) {
      if (gain.source.empty()) gain.source = rec.source;
      if (!ids.insert(id_pair(rec.source, rec.source_id)).second) {
        throw std::runtime_error("duplicate (source, source_id): " +
                                 rec.source + "/" + rec.source_id);
      }
      ++gain.offered;
      if (keys.insert(rec.key).second) {
        ++gain.added;
        out.merged.push_back(rec);
      }
    }
    out.gains.push_back(std::move(gain));
  }
  return out;
}

void write_records(const std::vector<MoleculeRecord>& records,
                   const std::string& path) {
  std::ostringstream body;
  std::vector<long long> offsets;
  body << kHeader << "\n";
  for (size_t i = 0; i < records.size(); ++i) {
    if (i % kIndexBlock == 0) {
      offsets.push_back(static_cast<long long>(body.tellp()));
    }
    const MoleculeRecord& r = records[i];
    body << r.source << '\t' << r.source_id << '\t' << r.smiles << '\n';
  }
  std::string text = body.str();

  bool gz = path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0;
  if (gz) {
    gzFile f = gzopen(path.c_str(), "wb");
    if (!f) throw std::runtime_error("cannot write " + path);
    if (gzwrite(f, text.data(), static_cast<unsigned>(text.size())) !=
        static_cast<int>(text.size())) {
      gzclose(f);
      throw std::runtime_error("write error in " + path);
    }
    gzclose(f);
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
  }

  std::ofstream idx(path + ".idx");
  idx << "# record block index v1\tblock=" << kIndexBlock << "\n";
  for (long long off : offsets) idx << off << "\n";
}

void write_quarantine(const std::vector<QuarantineRow>& rows,
                      const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << "source\tsource_id\tsmiles\tstage\treason\n";
  for (const QuarantineRow& r : rows) {
    f << r.source << '\t' << r.source_id << '\t' << r.smiles << '\t' << r.stage
      << '\t' << r.reason << '\n';
  }
}

std::string ledger_json(const std::vector<LedgerRow>& rows) {
  std::ostringstream os;
  os << "{\n  \"sources\": [\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const LedgerRow& r = rows[i];
    os << "    {\"source\": \"" << json_escape(r.source)
       << "\", \"initial\": " << r.initial
       << ", \"removed_preprocessing\": " << r.removed_preprocessing
       << ", \"removed_standardization\": " << r.removed_standardization
       << ", \"removed_filtering\": " << r.removed_filtering
       << ", \"final\": " << r.final_count << "}"
       << (i + 1 < rows.size() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

std::string gains_json(const std::vector<GainRow>& rows) {
  std::ostringstream os;
  os << "{\n  \"merge_order\": [\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const GainRow& r = rows[i];
    os << "    {\"source\": \"" << json_escape(r.source)
       << "\", \"offered\": " << r.offered << ", \"added\": " << r.added
       << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

}  // namespace molcurate
