#include "doctest.h"

#include <cmath>

#include "mirrorext/catalog.hpp"
#include "mirrorext/errors.hpp"

using namespace mirrorext;

TEST_CASE("level-1 constants pass their modular self-checks") {
    for (const char* name :
         {"A1_level1", "A2_level1", "A5_level1", "A8_level1", "A9_level1",
          "A14_level1", "A20_level1", "B1_level1", "B2_level1", "B7_level1",
          "B17_level1", "D4_level1", "D12_level1", "G2_level1", "E6_level1",
          "E7_level1", "E8_level1"}) {
        RationalCFT cft = level1_cft(name);
        Report rep = cft.self_check();
        INFO(name);
        CHECK(rep.passed());
    }
}

TEST_CASE("level-1 constants: dimensions and charges") {
    Level1Algebra b2 = level1_spin(5);
    CHECK(b2.sector_count == 3);
    CHECK(b2.global_dimension() == doctest::Approx(4.0));
    CHECK(b2.central_charge == Rational(5, 2));
    CHECK(b2.h_values[2] == Rational(5, 16));

    Level1Algebra g2 = level1_g2();
    CHECK(g2.quantum_dims[1] == doctest::Approx((1 + std::sqrt(5.0)) / 2));
    CHECK(g2.central_charge == Rational(14, 5));

    CHECK(level1_e8().sector_count == 1);
    CHECK(level1_su(9).central_charge == Rational(8));
    CHECK(level1_by_name("B2_level1").name == "B2_level1");
    CHECK_THROWS_AS(level1_by_name("F4_level1"), ArgumentError);
    CHECK_THROWS_AS(level1_spin(6), ArgumentError); // 6 is neither odd nor 0 mod 8
}

TEST_CASE("shipped catalog: load, inventory, published spectrum") {
    auto recs = builtin_inclusions(false);
    CHECK(recs.size() >= 15);

    const auto& spin5 = find_inclusion(recs, "su2_10_in_b2_1");
    CHECK(spin5.provenance == "paper-given");
    CHECK(spin5.dynkin_index == 10);
    CHECK(spin5.vacuum_spectrum.mult_of({0}) == 1);
    CHECK(spin5.vacuum_spectrum.mult_of({6}) == 1);
    CHECK(spin5.vacuum_spectrum.multiplicities.size() == 2);
    REQUIRE(spin5.full_branching);
    CHECK(spin5.full_branching->size() == 3);

    const auto& g2 = find_inclusion(recs, "su2_28_in_g2_1");
    CHECK(g2.provenance == "search-derived");
    for (int l : {0, 10, 18, 28})
        CHECK(g2.vacuum_spectrum.mult_of({l}) == 1);

    const auto& e8 = find_inclusion(recs, "su9_1_in_e8_1");
    CHECK(e8.vacuum_spectrum.multiplicities.size() == 3);
    std::vector<int> l3(8, 0), l6(8, 0);
    l3[2] = 1;
    l6[5] = 1;
    CHECK(e8.vacuum_spectrum.mult_of(l3) == 1);
    CHECK(e8.vacuum_spectrum.mult_of(l6) == 1);

    // Series levels follow the series formulas.
    CHECK(find_inclusion(recs, "su4_2_in_a5_1").level_k == 2);
    CHECK(find_inclusion(recs, "su5_7_in_a14_1").level_k == 7);
    CHECK(find_inclusion(recs, "su6_6_in_b17_1").level_k == 6);

    CHECK_THROWS_AS(find_inclusion(recs, "nope"), ArgumentError);
    CHECK(!levelrank_series_note().empty());
}

TEST_CASE("every shipped record passes validation") {
    // The validating load throws on any failure.
    CHECK_NOTHROW(builtin_inclusions(true));
}

TEST_CASE("record validation checks the documented invariants") {
    auto recs = builtin_inclusions(false);
    const auto& spin5 = find_inclusion(recs, "su2_10_in_b2_1");
    Report rep = validate_inclusion(spin5);
    CHECK(rep.passed());

    // Tampered spectrum: drop the nontrivial sector's conjugate symmetry
    // by moving it to a non-integer-h label.
    InclusionRecord bad = spin5;
    bad.vacuum_spectrum = Spectrum(2, 10);
    bad.vacuum_spectrum.add({0});
    bad.vacuum_spectrum.add({4});
    bad.full_branching.reset();
    Report bad_rep = validate_inclusion(bad);
    CHECK(!bad_rep.passed());
}

TEST_CASE("catalog JSON round trip preserves every field") {
    auto recs = builtin_inclusions(false);
    auto again = catalog_from_json(catalog_to_json(recs));
    REQUIRE(again.size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(again[i].name == recs[i].name);
        CHECK(again[i].rank_n == recs[i].rank_n);
        CHECK(again[i].level_k == recs[i].level_k);
        CHECK(again[i].dynkin_index == recs[i].dynkin_index);
        CHECK(again[i].provenance == recs[i].provenance);
        CHECK(again[i].target.name == recs[i].target.name);
        CHECK(again[i].target.h_values == recs[i].target.h_values);
        CHECK(again[i].target.central_charge == recs[i].target.central_charge);
        CHECK(again[i].vacuum_spectrum == recs[i].vacuum_spectrum);
        CHECK(again[i].full_branching.has_value() ==
              recs[i].full_branching.has_value());
        if (recs[i].full_branching)
            CHECK(*again[i].full_branching == *recs[i].full_branching);
    }
}
