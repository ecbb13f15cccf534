#pragma once

#include <string>
#include <vector>

#include "molcurate/molecule.hpp"

namespace molcurate {

enum class RecordStatus {
  ok,
  parse_failed,
  standardize_failed,
  filtered,
  duplicate,
};

// One curated molecule with provenance. For ok records `smiles` is the
// canonical form and `key` the canonical key.
struct MoleculeRecord {
  std::string source;
  std::string source_id;
  std::string smiles;
  std::string key;
  RecordStatus status = RecordStatus::ok;
};

// One rejected input row: which stage dropped it and why.
struct QuarantineRow {
  std::string source;
  std::string source_id;
  std::string smiles;
  std::string stage;   // preprocessing | standardization | filtering
  std::string reason;
};

// Stage accounting for one source. Conservation invariant:
// initial == removed_preprocessing + removed_standardization +
//            removed_filtering + final_count.
struct LedgerRow {
  std::string source;
  long long initial = 0;
  long long removed_preprocessing = 0;    // parse failures + duplicates
  long long removed_standardization = 0;
  long long removed_filtering = 0;
  long long final_count = 0;
};

// Raw rows surviving ingest-time parsing and within-source dedup. Records
// still carry the input SMILES; standardization happens in run_source.
struct IngestResult {
  std::vector<MoleculeRecord> records;
  LedgerRow ledger;
  std::vector<QuarantineRow> quarantine;
};

// Read a record TSV (header `source\tsource_id\tsmiles`, plain or gzip).
// Parse failures count as preprocessing removals; duplicate canonical keys
// within the file keep the first occurrence. Throws std::runtime_error on
// unreadable files or a malformed header.
IngestResult ingest(const std::string& path);

struct SourceResult {
  std::vector<MoleculeRecord> kept;
  LedgerRow ledger;
  std::vector<QuarantineRow> quarantine;
};

// Standardize every ingested record, apply the feasibility filter, and
// drop any keys that collide after standardization. Ledger starts from the
// ingest row and satisfies the conservation invariant.
SourceResult run_source(const IngestResult& in, int threads = 1);

struct GainRow {
  std::string source;
  long long offered = 0;  // records presented at merge
  long long added = 0;    // records new to the global key set
};

struct MergeResult {
  std::vector<MoleculeRecord> merged;
  std::vector<GainRow> gains;
};

// Merge internally-deduplicated sources in the given order; a record is
// kept only if its key is globally unseen (first-wins attribution).
// Throws std::runtime_error on duplicate (source, source_id) pairs.
MergeResult merge_sources(const std::vector<std::vector<MoleculeRecord>>& sources);

// Write records as TSV (gzip when path ends in .gz) plus a `path.idx`
// sidecar listing byte offsets of block starts. Byte-identical output for
// identical input sequences.
void write_records(const std::vector<MoleculeRecord>& records,
                   const std::string& path);

void write_quarantine(const std::vector<QuarantineRow>& rows,
                      const std::string& path);

// Ledger / gain tables as JSON with exact integer counts.
std::string ledger_json(const std::vector<LedgerRow>& rows);
std::string gains_json(const std::vector<GainRow>& rows);

}  // namespace molcurate
