#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "molcurate/canonical.hpp"
#include "molcurate/filters.hpp"
#include "molcurate/smiles.hpp"
#include "molcurate/standardize.hpp"
#include "test_util.hpp"

using namespace molcurate;

namespace {

DescriptorSet describe(const std::string& smi) {
  return compute_descriptors(standardize(parse_smiles(smi)));
}

// A DescriptorSet deep inside every filter's bounds; tests perturb one
// field at a time.
DescriptorSet compliant() {
  DescriptorSet d;
  d.mol_weight = 300;
  d.n_atoms = 40;
  d.n_heavy = 22;
  d.n_fragments = 1;
  d.hba = 4;
  d.hbd = 2;
  d.logp = 2.0;
  d.mr = 80;
  d.tpsa = 90;
  d.n_rot_bonds = 4;
  d.n_rigid_bonds = 10;
  d.n_rings = 2;
  d.max_ring_size = 6;
  d.n_carbons = 16;
  d.n_heteroatoms = 6;
  d.hetero_carbon_ratio = 6.0 / 16.0;
  d.n_charged_groups = 0;
  d.total_charge = 0;
  d.n_aromatic_bonds = 6;
  d.n_stereocenters = 1;
  return d;
}

}  // namespace

TEST_CASE("feasibility bounds, one per criterion") {
  DescriptorSet d = compliant();
  CHECK(feasibility_check(d, 20).passed);

  SUBCASE("fragments") {
    d.n_fragments = 4;
    FilterVerdict v = feasibility_check(d, 20);
    CHECK(!v.passed);
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].rule == "n_fragments");
    CHECK(v.violations[0].observed == 4);
    d.n_fragments = 3;
    CHECK(feasibility_check(d, 20).passed);
  }
  SUBCASE("key length") {
    CHECK(feasibility_check(d, 1999).passed);
    CHECK(!feasibility_check(d, 2000).passed);
  }
  SUBCASE("weight") {
    d.mol_weight = 2500;
    CHECK(feasibility_check(d, 20).passed);
    d.mol_weight = 2500.1;
    CHECK(!feasibility_check(d, 20).passed);
  }
  SUBCASE("atoms") {
    d.n_atoms = 150;
    CHECK(feasibility_check(d, 20).passed);
    d.n_atoms = 151;
    CHECK(!feasibility_check(d, 20).passed);
  }
  SUBCASE("hba hbd") {
    d.hba = 21;
    CHECK(!feasibility_check(d, 20).passed);
    d.hba = 20;
    d.hbd = 16;
    CHECK(!feasibility_check(d, 20).passed);
  }
  SUBCASE("logp range") {
    d.logp = -10;
    CHECK(feasibility_check(d, 20).passed);
    d.logp = -10.01;
    CHECK(!feasibility_check(d, 20).passed);
    d.logp = 25;
    CHECK(feasibility_check(d, 20).passed);
    d.logp = 25.01;
    CHECK(!feasibility_check(d, 20).passed);
  }
  SUBCASE("tpsa and rotatable") {
    d.tpsa = 500.5;
    CHECK(!feasibility_check(d, 20).passed);
    d.tpsa = 100;
    d.n_rot_bonds = 61;
    CHECK(!feasibility_check(d, 20).passed);
  }
}

TEST_CASE("feasibility on real molecules") {
  DescriptorSet ethanol = describe("CCO");
  CHECK(feasibility_check(ethanol, canonicalize(parse_smiles("CCO")).key.size())
            .passed);
  DescriptorSet complex4 = describe("C.O.N.S");
  FilterVerdict v = feasibility_check(complex4, 10);
  CHECK(!v.passed);
  CHECK(v.violations[0].rule == "n_fragments");
}

TEST_CASE("lipinski allows exactly one violation") {
  DescriptorSet d = compliant();
  CHECK(apply_filter("lipinski", d).passed);
  d.mol_weight = 550;  // one violation
  FilterVerdict v = apply_filter("lipinski", d);
  CHECK(v.passed);
  CHECK(v.violations.size() == 1);
  d.hbd = 6;  // second violation
  v = apply_filter("lipinski", d);
  CHECK(!v.passed);
  CHECK(v.violations.size() == 2);
}

TEST_CASE("filter bounds at the printed edges") {
  DescriptorSet d = compliant();

  SUBCASE("veber") {
    d.n_rot_bonds = 10;
    d.tpsa = 140;
    CHECK(apply_filter("veber", d).passed);
    d.n_rot_bonds = 11;
    CHECK(!apply_filter("veber", d).passed);
    d.n_rot_bonds = 10;
    d.tpsa = 140.1;
    CHECK(!apply_filter("veber", d).passed);
  }
  SUBCASE("gsk") {
    d.mol_weight = 400;
    d.logp = 4;
    CHECK(apply_filter("gsk", d).passed);
    d.logp = 4.01;
    CHECK(!apply_filter("gsk", d).passed);
  }
  SUBCASE("ghose closed ranges") {
    d.mol_weight = 160;
    d.logp = -0.4;
    d.n_atoms = 20;
    d.mr = 40;
    CHECK(apply_filter("ghose", d).passed);
    d.mol_weight = 159.9;
    CHECK(!apply_filter("ghose", d).passed);
    d.mol_weight = 400;
    d.logp = 5.6;
    d.n_atoms = 70;
    d.mr = 130;
    CHECK(apply_filter("ghose", d).passed);
    d.mr = 130.1;
    CHECK(!apply_filter("ghose", d).passed);
  }
  SUBCASE("xu") {
    d.n_rot_bonds = 2;
    d.n_rings = 1;
    d.n_heavy = 10;
    CHECK(apply_filter("xu", d).passed);
    d.n_rot_bonds = 1;
    CHECK(!apply_filter("xu", d).passed);
    d.n_rot_bonds = 35;
    d.n_heavy = 50;
    d.n_rings = 7;
    CHECK(apply_filter("xu", d).passed);
    d.n_heavy = 51;
    CHECK(!apply_filter("xu", d).passed);
  }
  SUBCASE("oprea") {
    d.hbd = 2;
    d.hba = 2;
    d.n_rot_bonds = 2;
    d.n_rings = 1;
    CHECK(apply_filter("oprea", d).passed);
    d.n_rot_bonds = 9;
    CHECK(!apply_filter("oprea", d).passed);
  }
  SUBCASE("pfizer 3/75") {
    d.logp = 3;
    d.tpsa = 75;
    CHECK(apply_filter("pfizer-3-75", d).passed);
    d.tpsa = 74.9;
    CHECK(!apply_filter("pfizer-3-75", d).passed);
    d.tpsa = 75;
    d.logp = 3.1;
    CHECK(!apply_filter("pfizer-3-75", d).passed);
  }
  SUBCASE("hao aromatic bonds") {
    d.n_aromatic_bonds = 17;
    CHECK(apply_filter("hao", d).passed);
    d.n_aromatic_bonds = 18;
    CHECK(!apply_filter("hao", d).passed);
  }
  SUBCASE("reos") {
    d.total_charge = -2;
    CHECK(apply_filter("reos", d).passed);
    d.total_charge = -3;
    CHECK(!apply_filter("reos", d).passed);
  }
  SUBCASE("zinc druglike max ring") {
    d.max_ring_size = 12;
    CHECK(apply_filter("zinc-druglike", d).passed);
    d.max_ring_size = 13;
    CHECK(!apply_filter("zinc-druglike", d).passed);
  }
  SUBCASE("beyond ro5") {
    d.mol_weight = 1000;
    d.logp = 10;
    d.hba = 15;
    d.hbd = 6;
    d.tpsa = 250;
    d.n_rot_bonds = 20;
    CHECK(apply_filter("beyond-ro5", d).passed);
    d.logp = -2.01;
    CHECK(!apply_filter("beyond-ro5", d).passed);
  }
  SUBCASE("faf4 druglike ratio") {
    d.hetero_carbon_ratio = 1.1;
    CHECK(apply_filter("faf4-druglike", d).passed);
    d.hetero_carbon_ratio = 1.11;
    CHECK(!apply_filter("faf4-druglike", d).passed);
    d.hetero_carbon_ratio = 0.1;
    CHECK(apply_filter("faf4-druglike", d).passed);
    d.hetero_carbon_ratio = 0.09;
    CHECK(!apply_filter("faf4-druglike", d).passed);
  }
  SUBCASE("faf4 leadlike stereocenters") {
    d.n_stereocenters = 2;
    CHECK(apply_filter("faf4-leadlike", d).passed);
    d.n_stereocenters = 3;
    CHECK(!apply_filter("faf4-leadlike", d).passed);
  }
}

TEST_CASE("violations list every breached rule") {
  DescriptorSet d = compliant();
  d.mol_weight = 700;
  d.logp = 7;
  d.tpsa = 200;
  FilterVerdict v = apply_filter("faf4-druglike", d);
  CHECK(!v.passed);
  CHECK(v.violations.size() == 3);
}

TEST_CASE("unknown and out-of-scope filter names") {
  DescriptorSet d = compliant();
  CHECK_THROWS_AS(apply_filter("nonexistent", d), std::invalid_argument);
  CHECK_THROWS_WITH_AS(apply_filter("glaxo", d),
                       "out-of-scope: substructure rules",
                       std::invalid_argument);
  CHECK_THROWS_AS(apply_filter("brenk", d), std::invalid_argument);
}

TEST_CASE("leadlike is at least as strict as druglike on shared rules") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int leadlike_passes = 0;
  for (int i = 0; i < 5000; ++i) {
    DescriptorSet d;
    d.mol_weight = u(rng) * 800;
    d.logp = u(rng) * 16 - 6;
    d.hba = static_cast<int>(u(rng) * 16);
    d.hbd = static_cast<int>(u(rng) * 10);
    d.tpsa = u(rng) * 250;
    d.n_rot_bonds = static_cast<int>(u(rng) * 16);
    d.n_rigid_bonds = static_cast<int>(u(rng) * 40);
    d.n_rings = static_cast<int>(u(rng) * 8);
    d.max_ring_size = 3 + static_cast<int>(u(rng) * 20);
    d.n_carbons = static_cast<int>(u(rng) * 40);
    d.n_heteroatoms = static_cast<int>(u(rng) * 20);
    d.hetero_carbon_ratio =
        d.n_carbons > 0 ? static_cast<double>(d.n_heteroatoms) / d.n_carbons : 0;
    d.n_charged_groups = static_cast<int>(u(rng) * 6);
    d.total_charge = static_cast<int>(u(rng) * 10) - 5;
    d.n_stereocenters = static_cast<int>(u(rng) * 4);
    if (apply_filter("faf4-leadlike", d).passed) {
      ++leadlike_passes;
      CHECK(apply_filter("faf4-druglike", d).passed);
    }
  }
  CHECK(leadlike_passes > 0);  // the property must actually be exercised
}

TEST_CASE("filter profile exact fractions") {
  std::vector<DescriptorSet> ds;
  for (int i = 0; i < 100; ++i) {
    DescriptorSet d = compliant();
    if (i < 30) d.mol_weight = 450;  // fails gsk, passes lipinski
    ds.push_back(d);
  }
  auto rows = filter_profile(ds, {"lipinski", "gsk"});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].passed == 100);
  CHECK(rows[0].fraction == doctest::Approx(1.0));
  CHECK(rows[1].passed == 70);
  CHECK(rows[1].fraction == doctest::Approx(0.7));

  CHECK(filter_profile(ds, {}).empty());
}

TEST_CASE("registry lists 13 filters and the rules file matches") {
  CHECK(filter_names().size() == 13);
  std::ifstream in(testutil::repo_data_dir() + "/filter_rules.txt",
                   std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  CHECK(os.str() == filter_rules_text());
}
