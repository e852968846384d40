#include "doctest.h"

#include <algorithm>

#include "mirrorext/errors.hpp"
#include "mirrorext/weights.hpp"

using namespace mirrorext;

TEST_CASE("alcove enumeration: size, order, vacuum position") {
    for (auto [n, k] : {std::pair<int, int>{2, 10}, {3, 5}, {4, 3}, {10, 2}}) {
        WeightSet ws = alcove_weights(n, k);
        CHECK(static_cast<long long>(ws.size()) == alcove_cardinality(n, k));
        CHECK(ws.members[0].is_vacuum());
        CHECK(ws.index_of(std::vector<int>(n - 1, 0)) == 0);
        CHECK(std::is_sorted(ws.members.begin(), ws.members.end()));
        for (const auto& w : ws.members) {
            int sum = 0;
            for (int l : w.labels)
                sum += l;
            CHECK(sum <= k);
            CHECK(w.zeroth_label() == k - sum);
        }
    }
    CHECK(alcove_weights(2, 1).size() == 2);
    CHECK(alcove_weights(10, 2).size() == 55);
    CHECK(alcove_weights(28, 2).size() == 406);
}

TEST_CASE("invalid weights and alcoves are rejected") {
    CHECK_THROWS_AS(AffineWeight(2, 3, {4}), ArgumentError);
    CHECK_THROWS_AS(AffineWeight(3, 2, {1}), ArgumentError); // wrong rank
    CHECK_THROWS_AS(AffineWeight(2, 2, {-1}), ArgumentError);
    CHECK_THROWS_AS(alcove_weights(1, 2), ArgumentError);
    CHECK_THROWS_AS(alcove_weights(2, 0), ArgumentError);
}

TEST_CASE("conformal weights: SU(2) closed form a(a+2)/(4(k+2))") {
    for (int k : {1, 4, 10, 28})
        for (int a = 0; a <= k; ++a) {
            AffineWeight w(2, k, {a});
            CHECK(conformal_weight_exact(w) ==
                  Rational(static_cast<std::int64_t>(a) * (a + 2), 4LL * (k + 2)));
        }
}

TEST_CASE("conformal weights and central charge: known exact values") {
    CHECK(conformal_weight_exact(AffineWeight(2, 10, {6})) == Rational(1));
    std::vector<int> l37(9, 0);
    l37[2] = 1;
    l37[6] = 1;
    CHECK(conformal_weight_exact(AffineWeight(10, 2, l37)) == Rational(2));
    std::vector<int> l6(9, 0);
    l6[5] = 1;
    CHECK(conformal_weight_exact(AffineWeight(10, 2, l6)) == Rational(11, 10));
    CHECK(central_charge_exact(2, 10) == Rational(5, 2));
    CHECK(central_charge_exact(2, 1) == Rational(1));
    CHECK(central_charge_exact(3, 9) == Rational(6));  // matches the E6 target
    CHECK(central_charge_exact(9, 1) == Rational(8));  // matches the E8 target
    CHECK(central_charge_exact(2, 28) == Rational(14, 5)); // matches the G2 target
}

TEST_CASE("conjugation is an involution preserving h") {
    WeightSet ws = alcove_weights(3, 5);
    for (const auto& w : ws.members) {
        AffineWeight c = conjugate(w);
        CHECK(conjugate(c) == w);
        CHECK(conformal_weight_exact(c) == conformal_weight_exact(w));
    }
}

TEST_CASE("simple current: order N, alcove-preserving, vacuum orbit") {
    for (auto [n, k] : {std::pair<int, int>{3, 3}, {4, 2}, {2, 10}}) {
        WeightSet ws = alcove_weights(n, k);
        for (const auto& w : ws.members) {
            AffineWeight acc = w;
            for (int t = 0; t < n; ++t)
                acc = simple_current(acc, 1);
            CHECK(acc == w);
            CHECK(simple_current(w, n) == w);
        }
        // The vacuum maps to the level-scaled first fundamental corner.
        AffineWeight vac(n, k, std::vector<int>(n - 1, 0));
        AffineWeight tw = simple_current(vac, 1);
        std::vector<int> corner(n - 1, 0);
        corner[0] = k;
        CHECK(tw.labels == corner);
    }
}

TEST_CASE("box count and root lattice") {
    CHECK(box_count(AffineWeight(2, 10, {6})) == 6);
    CHECK(in_root_lattice(AffineWeight(2, 10, {6})));
    CHECK(!in_root_lattice(AffineWeight(2, 10, {5})));
    CHECK(in_root_lattice(AffineWeight(3, 3, {3, 0})));
    CHECK(!in_root_lattice(AffineWeight(3, 3, {1, 0})));
    // The simple current shifts the N-ality by the level.
    WeightSet ws = alcove_weights(3, 4);
    for (const auto& w : ws.members)
        CHECK(((box_count(simple_current(w, 1)) - box_count(w) - 4) % 3 + 3) % 3 == 0);
}

TEST_CASE("diagram rows round trip") {
    for (auto [n, k] : {std::pair<int, int>{3, 5}, {5, 3}}) {
        WeightSet ws = alcove_weights(n, k);
        for (const auto& w : ws.members) {
            auto rows = diagram_rows(w);
            CHECK(static_cast<int>(rows.size()) == n - 1);
            CHECK(std::is_sorted(rows.rbegin(), rows.rend()));
            CHECK(labels_from_rows(rows, n) == w.labels);
        }
    }
}
