#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "molcurate/pipeline.hpp"

using namespace molcurate;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name, const std::string& content = "") {
    path = fs::temp_directory_path() / ("molcurate_test_" + name);
    if (!content.empty()) {
      std::ofstream f(path, std::ios::binary);
      f << content;
    }
  }
  ~TempFile() {
    std::error_code ec;
    fs::remove(path, ec);
    fs::remove(path.string() + ".idx", ec);
  }
  std::string str() const { return path.string(); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

long long conserved(const LedgerRow& l) {
  return l.removed_preprocessing + l.removed_standardization +
         l.removed_filtering + l.final_count;
}

}  // namespace

TEST_CASE("ingest counts parse failures and dedups within source") {
  TempFile in("ingest.tsv",
              "source\tsource_id\tsmiles\n"
              "alpha\t1\tCCO\n"
              "alpha\t2\tnot_a_smiles\n"
              "alpha\t3\tOCC\n");
  IngestResult r = ingest(in.str());
  CHECK(r.ledger.initial == 3);
  CHECK(r.ledger.removed_preprocessing == 2);  // parse failure + duplicate
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].source_id == "1");
  REQUIRE(r.quarantine.size() == 2);
  CHECK(r.quarantine[0].stage == "preprocessing");
  CHECK(r.quarantine[1].reason == "duplicate structure");
}

TEST_CASE("ingest edge cases") {
  TempFile empty("empty.tsv", "source\tsource_id\tsmiles\n");
  IngestResult r = ingest(empty.str());
  CHECK(r.ledger.initial == 0);
  CHECK(r.records.empty());

  TempFile bad_header("badheader.tsv", "smiles,id\nCCO,1\n");
  CHECK_THROWS_AS(ingest(bad_header.str()), std::runtime_error);
  CHECK_THROWS_AS(ingest("/nonexistent/nowhere.tsv"), std::runtime_error);

  TempFile dup_id("dupid.tsv",
                  "source\tsource_id\tsmiles\n"
                  "a\t1\tCCO\n"
                  "a\t1\tCCC\n");
  IngestResult r2 = ingest(dup_id.str());
  CHECK(r2.records.size() == 1);
  CHECK(r2.quarantine[0].reason == "duplicate source_id");
}

TEST_CASE("run_source stages removals correctly") {
  // 10 records: 1 parse failure, 1 kekulization failure, 1 four-fragment
  // complex; 7 survive.
  TempFile in("run.tsv",
              "source\tsource_id\tsmiles\n"
              "src\t1\tCCO\n"
              "src\t2\t((((\n"
              "src\t3\tc1cccc1\n"
              "src\t4\tC.C.C.C\n"
              "src\t5\tCCC\n"
              "src\t6\tc1ccccc1\n"
              "src\t7\tCC(=O)O\n"
              "src\t8\tCCN\n"
              "src\t9\tCCCC\n"
              "src\t10\tCS\n");
  SourceResult r = run_source(ingest(in.str()));
  CHECK(r.ledger.initial == 10);
  CHECK(r.ledger.removed_preprocessing == 1);
  CHECK(r.ledger.removed_standardization == 1);
  CHECK(r.ledger.removed_filtering == 1);
  CHECK(r.ledger.final_count == 7);
  CHECK(conserved(r.ledger) == r.ledger.initial);
  for (const MoleculeRecord& rec : r.kept) {
    CHECK(rec.status == RecordStatus::ok);
    CHECK(!rec.key.empty());
  }
  bool found = false;
  for (const QuarantineRow& q : r.quarantine) {
    if (q.source_id == "3") {
      found = true;
      CHECK(q.stage == "standardization");
    }
  }
  CHECK(found);
}

TEST_CASE("run_source on all-valid input removes nothing") {
  TempFile in("valid.tsv",
              "source\tsource_id\tsmiles\n"
              "src\t1\tCC1CCCCC1\n"
              "src\t2\tC1CCOC1\n"
              "src\t3\tc1ccncc1\n");
  SourceResult r = run_source(ingest(in.str()));
  CHECK(r.ledger.removed_preprocessing == 0);
  CHECK(r.ledger.removed_standardization == 0);
  CHECK(r.ledger.removed_filtering == 0);
  CHECK(r.ledger.final_count == 3);
}

TEST_CASE("run_source merges kekule and aromatic duplicates post-standardization") {
  TempFile in("kek.tsv",
              "source\tsource_id\tsmiles\n"
              "src\t1\tc1ccccc1\n"
              "src\t2\tC1=CC=CC=C1\n");
  SourceResult r = run_source(ingest(in.str()));
  CHECK(r.ledger.final_count == 1);
  CHECK(conserved(r.ledger) == 2);
}

TEST_CASE("multi-threaded run matches single-threaded") {
  std::ostringstream content2;
  content2 << "source\tsource_id\tsmiles\n";
  for (int i = 0; i < 600; ++i) {
    if (i % 29 == 0) {
      content2 << "src\t" << i << "\tc1cccc1\n";  // standardization failure
    } else if (i % 31 == 0) {
      content2 << "src\t" << i << "\t((\n";  // parse failure
    } else {
      // distinct ether chains so enough records survive ingest dedup
      content2 << "src\t" << i << "\t" << std::string(i / 25 + 1, 'C') << "O"
               << std::string(i % 25, 'C') << "\n";
    }
  }
  TempFile in("threads.tsv", content2.str());
  SourceResult seq = run_source(ingest(in.str()), 1);
  SourceResult par = run_source(ingest(in.str()), 8);
  CHECK(seq.ledger.final_count == par.ledger.final_count);
  CHECK(seq.ledger.removed_standardization == par.ledger.removed_standardization);
  REQUIRE(seq.kept.size() == par.kept.size());
  for (size_t i = 0; i < seq.kept.size(); ++i) {
    CHECK(seq.kept[i].key == par.kept[i].key);
    CHECK(seq.kept[i].source_id == par.kept[i].source_id);
  }
}

namespace {

std::vector<MoleculeRecord> curated(const std::string& source,
                                    const std::vector<std::string>& smiles) {
  std::ostringstream os;
  os << "source\tsource_id\tsmiles\n";
  for (size_t i = 0; i < smiles.size(); ++i) {
    os << source << "\t" << i + 1 << "\t" << smiles[i] << "\n";
  }
  TempFile f("curated_" + source + ".tsv", os.str());
  return run_source(ingest(f.str())).kept;
}

}  // namespace

TEST_CASE("merge keeps first-seen keys with attribution") {
  auto a = curated("A", {"CCO", "CC"});
  auto b = curated("B", {"OCC", "C"});
  MergeResult r = merge_sources({a, b});
  CHECK(r.merged.size() == 3);
  REQUIRE(r.gains.size() == 2);
  CHECK(r.gains[0].added == 2);
  CHECK(r.gains[1].added == 1);
  for (const MoleculeRecord& rec : r.merged) {
    if (rec.smiles == "CCO") CHECK(rec.source == "A");
  }
}

TEST_CASE("merge key set is order invariant, attribution order determined") {
  auto a = curated("A", {"CCO", "CC", "CCC"});
  auto b = curated("B", {"OCC", "CCCC"});
  auto c = curated("C", {"CC", "CCCC", "CO"});
  std::vector<std::vector<MoleculeRecord>> sources = {a, b, c};
  std::vector<int> order = {0, 1, 2};
  std::set<std::string> reference_keys;
  std::sort(order.begin(), order.end());
  do {
    MergeResult r = merge_sources({sources[order[0]], sources[order[1]],
                                   sources[order[2]]});
    std::set<std::string> keys;
    for (const MoleculeRecord& rec : r.merged) keys.insert(rec.key);
    if (reference_keys.empty()) reference_keys = keys;
    CHECK(keys == reference_keys);
    long long total_added = 0;
    for (const GainRow& g : r.gains) total_added += g.added;
    CHECK(total_added == static_cast<long long>(keys.size()));
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("merge is idempotent and rejects duplicate ids") {
  auto a = curated("A", {"CCO", "CC"});
  MergeResult once = merge_sources({a});
  CHECK_THROWS_AS(merge_sources({a, a}), std::runtime_error);
  MergeResult self = merge_sources({once.merged});
  CHECK(self.merged.size() == once.merged.size());
}

TEST_CASE("write_records round trip, determinism, gzip, index sidecar") {
  auto a = curated("A", {"CCO", "CC", "c1ccccc1"});
  TempFile out("records_out.tsv");
  write_records(a, out.str());
  std::string first = read_file(out.str());
  write_records(a, out.str());
  CHECK(read_file(out.str()) == first);

  IngestResult back = ingest(out.str());
  REQUIRE(back.records.size() == a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(back.records[i].source_id == a[i].source_id);
    CHECK(back.records[i].smiles == a[i].smiles);
    CHECK(back.records[i].key == a[i].key);
  }
  CHECK(read_file(out.str() + ".idx").rfind("# record block index", 0) == 0);

  TempFile gz_out("records_out.tsv.gz");
  write_records(a, gz_out.str());
  IngestResult gz_back = ingest(gz_out.str());
  CHECK(gz_back.records.size() == a.size());

  TempFile empty_out("records_empty.tsv");
  write_records({}, empty_out.str());
  CHECK(read_file(empty_out.str()) == "source\tsource_id\tsmiles\n");
}

TEST_CASE("quarantine file and ledger json") {
  TempFile in("qj.tsv",
              "source\tsource_id\tsmiles\n"
              "src\t1\tCCO\n"
              "src\t2\t]bad\n");
  SourceResult r = run_source(ingest(in.str()));
  TempFile q("quarantine.tsv");
  write_quarantine(r.quarantine, q.str());
  std::string qt = read_file(q.str());
  CHECK(qt.find("source\tsource_id\tsmiles\tstage\treason") == 0);
  CHECK(qt.find("preprocessing") != std::string::npos);

  std::string lj = ledger_json({r.ledger});
  CHECK(lj.find("\"initial\": 2") != std::string::npos);
  CHECK(lj.find("\"final\": 1") != std::string::npos);

  std::string gj = gains_json({{"A", 5, 3}});
  CHECK(gj.find("\"offered\": 5") != std::string::npos);
  CHECK(gj.find("\"added\": 3") != std::string::npos);
}
