#include "doctest.h"

#include "mirrorext/errors.hpp"
#include "mirrorext/levelrank.hpp"

using namespace mirrorext;

TEST_CASE("exp(2,10): members and published partners") {
    ExpSet exp = exp_set_levelrank(2, 10);
    CHECK(exp.members.size() == 6); // even labels 0..10
    for (const auto& w : exp.members)
        CHECK(w.labels[0] % 2 == 0);

    std::vector<int> l37(9, 0);
    l37[2] = 1;
    l37[6] = 1;
    CHECK(exp.partner(AffineWeight(2, 10, {6})).labels == l37);
    std::vector<int> l19(9, 0);
    l19[0] = 1;
    l19[8] = 1;
    CHECK(exp.partner(AffineWeight(2, 10, {2})).labels == l19);
    CHECK(exp.partner(AffineWeight(2, 10, {0})).is_vacuum());

    CHECK(exp.contains(AffineWeight(2, 10, {4})));
    CHECK(!exp.contains(AffineWeight(2, 10, {5})));
    CHECK_THROWS_AS(exp.partner(AffineWeight(2, 10, {5})), ArgumentError);
}

TEST_CASE("transpose is an involution on interior weights") {
    for (auto [n, m] : {std::pair<int, int>{3, 5}, {2, 10}, {4, 3}}) {
        WeightSet ws = alcove_weights(n, m);
        for (const auto& w : ws.members) {
            int sum = 0;
            for (int l : w.labels)
                sum += l;
            AffineWeight t = transpose_weight(w);
            CHECK(t.rank_n == m);
            CHECK(t.level_k == n);
            if (sum < m) // boundary weights lose their height-m columns
                CHECK(transpose_weight(t) == w);
        }
    }
    // A boundary example: the full column is deleted, so the transpose of
    // the level-saturating SU(2) weight collapses to the vacuum.
    CHECK(transpose_weight(AffineWeight(2, 10, {10})).is_vacuum());
}

TEST_CASE("mirror pair: exact h-integrality across every exp family") {
    for (auto [n, m] :
         {std::pair<int, int>{2, 10}, {3, 3}, {3, 5}, {4, 4}, {5, 2}}) {
        ExpSet exp = exp_set_levelrank(n, m);
        for (const auto& w : exp.members)
            CHECK(is_integer(conformal_weight_exact(w) +
                             conformal_weight_exact(exp.partner(w))));
    }
}

TEST_CASE("mirror pair commutes with charge conjugation") {
    for (auto [n, m] : {std::pair<int, int>{3, 5}, {3, 3}, {4, 4}}) {
        ExpSet exp = exp_set_levelrank(n, m);
        for (const auto& w : exp.members)
            CHECK(exp.partner(conjugate(w)) == conjugate(exp.partner(w)));
    }
}

TEST_CASE("mirror pair at the SU(3)_3 fixed-point orbit") {
    // Three twists of the transpose are h-integral here; the closed-form
    // branching twist resolves the tie.
    CHECK(mirror_pair(AffineWeight(3, 3, {3, 0})).labels == std::vector<int>{0, 3});
    CHECK(mirror_pair(AffineWeight(3, 3, {0, 3})).labels == std::vector<int>{3, 0});
    CHECK(mirror_pair(AffineWeight(3, 3, {1, 1})).labels == std::vector<int>{1, 1});
    CHECK(mirror_pair(AffineWeight(3, 3, {0, 0})).is_vacuum());
}

TEST_CASE("mirror pair rejects non-root-lattice input") {
    CHECK_THROWS_AS(mirror_pair(AffineWeight(2, 10, {5})), ArgumentError);
}

TEST_CASE("pairing is a bijection onto root-lattice weights of the mirror") {
    for (auto [n, m] : {std::pair<int, int>{3, 4}, {2, 6}}) {
        ExpSet fwd = exp_set_levelrank(n, m);
        ExpSet bwd = exp_set_levelrank(m, n);
        CHECK(fwd.members.size() == bwd.members.size());
        for (const auto& w : fwd.members) {
            const AffineWeight& p = fwd.partner(w);
            CHECK(bwd.contains(p));
            CHECK(bwd.partner(p) == w); // pairing inverts across the swap
        }
    }
}

TEST_CASE("ring isomorphism and conjugation reports on small families") {
    for (auto [n, m] : {std::pair<int, int>{2, 4}, {3, 3}, {2, 6}}) {
        ExpSet exp = exp_set_levelrank(n, m);
        Report iso = verify_ring_isomorphism(exp);
        CHECK(iso.passed());
        Report conj = verify_mirror_conjugation(exp);
        CHECK(conj.passed());
    }
}

TEST_CASE("ring isomorphism uses sliced rows beyond the dense cap") {
    ExpSet exp = exp_set_levelrank(2, 6);
    Report dense = verify_ring_isomorphism(exp, 128);
    Report sliced = verify_ring_isomorphism(exp, 128, 1); // force the slice path
    CHECK(dense.passed());
    CHECK(sliced.passed());
}
