#include "doctest.h"

#include <cmath>

#include "mirrorext/errors.hpp"
#include "mirrorext/modular.hpp"

using namespace mirrorext;

namespace {

double dbl(const Real& r) { return static_cast<double>(r); }

} // namespace

TEST_CASE("SU(2)_k S matrix matches the sine closed form") {
    for (int k : {1, 2, 3, 4, 10}) {
        ModularData md = build_modular_data(2, k);
        const double kappa = k + 2;
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b) {
                double expect =
                    std::sqrt(2.0 / kappa) * std::sin(M_PI * (a + 1) * (b + 1) / kappa);
                CHECK(dbl(md.s.at(a, b).re) == doctest::Approx(expect).epsilon(1e-12));
                CHECK(dbl(md.s.at(a, b).im) == doctest::Approx(0.0).epsilon(1e-12));
            }
    }
}

TEST_CASE("construction self-checks reject nothing on a sample grid") {
    // Representative alcoves up to ~200 sectors; unitarity, S^2 = C and
    // (ST)^3 = S^2 are asserted inside build_modular_data.
    for (auto [n, k] : {std::pair<int, int>{2, 28}, {3, 8}, {4, 4}, {5, 3},
                        {6, 2}, {10, 2}, {7, 2}})
        CHECK_NOTHROW(build_modular_data(n, k));
}

TEST_CASE("quantum dimensions: known values and S-row consistency") {
    ModularData md = build_modular_data(2, 10);
    CHECK(dbl(md.quantum_dims[6]) == doctest::Approx(2 + std::sqrt(3.0)).epsilon(1e-12));
    CHECK(dbl(global_dimension(md)) ==
          doctest::Approx(48 + 24 * std::sqrt(3.0)).epsilon(1e-12));
    CHECK(dbl(abs(global_dimension(md) - global_dimension_closed(2, 10))) < 1e-20);
    // d_lambda = S_{0 lambda} / S_{0 0}, and the sine-product shortcut agrees.
    for (std::size_t a = 0; a < md.size(); ++a) {
        Real from_s = md.s.at(0, a).re / md.s.at(0, 0).re;
        CHECK(dbl(abs(from_s - md.quantum_dims[a])) < 1e-20);
        CHECK(dbl(abs(quantum_dim(md.weights.members[a]) - md.quantum_dims[a])) <
              1e-20);
    }
    std::vector<int> l37(9, 0);
    l37[2] = 1;
    l37[6] = 1;
    CHECK(dbl(quantum_dim(AffineWeight(10, 2, l37))) ==
          doctest::Approx(2 + std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("Verlinde fusion equals the SU(2) oracle") {
    for (int k : {1, 2, 3, 7, 10}) {
        ModularData md = build_modular_data(2, k);
        FusionTensor v = verlinde_fusion(md);
        FusionTensor o = fusion_oracle_su2(k);
        CHECK(v.coefficients == o.coefficients);
    }
}

TEST_CASE("fusion ring axioms on SU(3)_4") {
    ModularData md = build_modular_data(3, 4);
    FusionTensor f = verlinde_fusion(md);
    const std::size_t dim = md.size();
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            // Unit and commutativity.
            CHECK(f.at(0, a, b) == (a == b ? 1 : 0));
            for (std::size_t c = 0; c < dim; ++c) {
                CHECK(f.at(a, b, c) == f.at(b, a, c));
                // N-ality grading: nonzero only when charges add up.
                if (f.at(a, b, c) != 0) {
                    long ga = box_count(md.weights.members[a]);
                    long gb = box_count(md.weights.members[b]);
                    long gc = box_count(md.weights.members[c]);
                    CHECK((ga + gb - gc) % 3 == 0);
                }
            }
        }
    // Associativity: sum_e N_{ab}^e N_{ec}^d = sum_e N_{bc}^e N_{ae}^d.
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t c = 0; c < dim; ++c)
                for (std::size_t d = 0; d < dim; ++d) {
                    long lhs = 0, rhs = 0;
                    for (std::size_t e = 0; e < dim; ++e) {
                        lhs += static_cast<long>(f.at(a, b, e)) * f.at(e, c, d);
                        rhs += static_cast<long>(f.at(b, c, e)) * f.at(a, e, d);
                    }
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("S-matrix slices agree with the full matrix") {
    ModularData md = build_modular_data(3, 3);
    std::vector<AffineWeight> sel = {md.weights.members[4], md.weights.members[7]};
    SMatrixSlice slice = s_matrix_rows(3, 3, sel);
    // Row 0 of a slice is always the vacuum.
    CHECK(slice.selected[0].is_vacuum());
    for (std::size_t r = 0; r < slice.selected.size(); ++r) {
        int full_row = md.weights.index_of(slice.selected[r]);
        for (std::size_t c = 0; c < md.size(); ++c) {
            CHECK(dbl((slice.rows.at(r, c) - md.s.at(full_row, c)).abs()) < 1e-25);
        }
    }
    // Per-entry fusion from the slice matches the Verlinde tensor.
    FusionTensor f = verlinde_fusion(md);
    std::vector<AffineWeight> all(md.weights.members);
    SMatrixSlice full_slice = s_matrix_rows(3, 3, all);
    for (std::size_t a = 0; a < md.size(); ++a)
        for (std::size_t b = 0; b < md.size(); ++b)
            for (std::size_t c = 0; c < md.size(); ++c)
                CHECK(fusion_entry(full_slice, md.weights.members[a],
                                   md.weights.members[b],
                                   md.weights.members[c]) == f.at(a, b, c));
}

TEST_CASE("T phases come from the exact conformal weights") {
    ModularData md = build_modular_data(3, 5);
    for (std::size_t a = 0; a < md.size(); ++a) {
        Cplx expect = unit_phase(md.h_values[a] - md.charge / 24);
        CHECK(dbl((md.t_phases[a] - expect).abs()) < 1e-25);
    }
}

TEST_CASE("precision knob changes the verified tolerance") {
    CHECK_NOTHROW(build_modular_data(2, 10, 64));
    CHECK_NOTHROW(build_modular_data(2, 10, 256));
    CHECK(dbl(modular_tolerance(128)) == doctest::Approx(1e-16));
}

TEST_CASE("oversized alcoves are refused") {
    CHECK_THROWS_AS(build_modular_data(12, 12), ScaleError);
}
