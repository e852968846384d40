#include "doctest.h"

#include "mirrorext/catalog.hpp"
#include "mirrorext/errors.hpp"
#include "mirrorext/modinv.hpp"

using namespace mirrorext;

namespace {

MassMatrix diagonal_invariant(const WeightSet& ws) {
    MassMatrix z;
    z.weights = ws;
    z.entries.assign(ws.size() * ws.size(), 0);
    for (std::size_t i = 0; i < ws.size(); ++i)
        z.at(i, i) = 1;
    return z;
}

} // namespace

TEST_CASE("SU(2)_2 admits only the diagonal invariant") {
    ModularData md = build_modular_data(2, 2);
    auto found = commutant_search(md, 3);
    REQUIRE(found.size() == 1);
    CHECK(found[0] == diagonal_invariant(md.weights));
}

TEST_CASE("SU(2)_4 invariants: diagonal plus the simple-current block") {
    ModularData md = build_modular_data(2, 4);
    auto found = commutant_search(md, 3);
    REQUIRE(found.size() == 2);

    // The block invariant |x0 + x4|^2 + 2 |x2|^2.
    MassMatrix block;
    block.weights = md.weights;
    block.entries.assign(25, 0);
    block.at(0, 0) = block.at(0, 4) = block.at(4, 0) = block.at(4, 4) = 1;
    block.at(2, 2) = 2;
    bool has_diag = false, has_block = false;
    for (const auto& z : found) {
        if (z == diagonal_invariant(md.weights))
            has_diag = true;
        if (z == block)
            has_block = true;
    }
    CHECK(has_diag);
    CHECK(has_block);
    CHECK(verify_invariant(block, md).passed());
}

TEST_CASE("SU(2)_10: the three ADE invariants") {
    ModularData md = build_modular_data(2, 10);
    auto found = commutant_search(md, 3);
    REQUIRE(found.size() == 3);

    // Odd-sector permutation a <-> 10 - a.
    MassMatrix perm;
    perm.weights = md.weights;
    perm.entries.assign(121, 0);
    for (int a = 0; a <= 10; ++a)
        perm.at(a, a % 2 == 1 ? 10 - a : a) = 1;
    // Exceptional block invariant on {0,6}, {3,7}, {4,10}.
    MassMatrix block;
    block.weights = md.weights;
    block.entries.assign(121, 0);
    for (auto [a, b] : {std::pair<int, int>{0, 6}, {3, 7}, {4, 10}}) {
        block.at(a, a) = block.at(a, b) = block.at(b, a) = block.at(b, b) = 1;
    }
    bool has_diag = false, has_perm = false, has_block = false;
    for (const auto& z : found) {
        if (z == diagonal_invariant(md.weights))
            has_diag = true;
        if (z == perm)
            has_perm = true;
        if (z == block)
            has_block = true;
    }
    CHECK(has_diag);
    CHECK(has_perm);
    CHECK(has_block);
}

TEST_CASE("verify_invariant enforces T-congruence, S-commutation, Z00") {
    ModularData md = build_modular_data(2, 4);
    MassMatrix z = diagonal_invariant(md.weights);

    MassMatrix bad_t = z;
    bad_t.at(0, 1) = 1; // h=0 against h=3/16
    CHECK(!verify_invariant(bad_t, md).passed());

    MassMatrix bad_s = z;
    bad_s.at(2, 2) = 2; // T-congruent but breaks S-commutation
    CHECK(!verify_invariant(bad_s, md).passed());

    MassMatrix bad_vac = z;
    bad_vac.at(0, 0) = 2;
    CHECK(!verify_invariant(bad_vac, md).passed());

    MassMatrix wrong_size;
    wrong_size.weights = alcove_weights(2, 2);
    wrong_size.entries.assign(9, 0);
    CHECK_THROWS_AS(verify_invariant(wrong_size, md), ArgumentError);
}

TEST_CASE("branching reconstruction reproduces the exceptional invariant") {
    ModularData md = build_modular_data(2, 10);
    auto recs = builtin_inclusions(false);
    const auto& spin5 = find_inclusion(recs, "su2_10_in_b2_1");
    REQUIRE(spin5.full_branching);
    MassMatrix z = invariant_from_branching(*spin5.full_branching, md.weights);
    CHECK(verify_invariant(z, md).passed());

    MassMatrix block;
    block.weights = md.weights;
    block.entries.assign(121, 0);
    for (auto [a, b] : {std::pair<int, int>{0, 6}, {3, 7}, {4, 10}})
        block.at(a, a) = block.at(a, b) = block.at(b, a) = block.at(b, b) = 1;
    CHECK(z == block);

    CHECK_THROWS_AS(invariant_from_branching({}, md.weights), ArgumentError);
}

TEST_CASE("branching search against the Spin(5) target is unique") {
    ModularData md = build_modular_data(2, 10);
    RationalCFT target = level1_cft("B2_level1");
    auto sols = branching_search(target, md, 3);
    REQUIRE(sols.size() == 1);
    const auto& b = sols[0];
    // Vacuum branch {0, 6}; the vector sector v -> {4, 10}; spinor -> {3, 7}.
    const std::size_t na = md.size();
    CHECK(b[0 * na + 0] == 1);
    CHECK(b[0 * na + 6] == 1);
    CHECK(b[1 * na + 4] == 1);
    CHECK(b[1 * na + 10] == 1);
    CHECK(b[2 * na + 3] == 1);
    CHECK(b[2 * na + 7] == 1);
    int total = 0;
    for (int v : b)
        total += v;
    CHECK(total == 6);
}

TEST_CASE("scale guards") {
    ModularData md = build_modular_data(3, 10); // 66 sectors > 64
    CHECK_THROWS_AS(commutant_search(md, 2), ScaleError);
    ModularData small = build_modular_data(2, 2);
    CHECK_THROWS_AS(commutant_search(small, 0), ArgumentError);
}
