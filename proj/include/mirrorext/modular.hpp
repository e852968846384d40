#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mirrorext/mp.hpp"
#include "mirrorext/weights.hpp"

namespace mirrorext {

/// S and T matrices, conformal weights, central charge and quantum
/// dimensions for SU(N)_K, indexed against the canonical alcove order.
/// Immutable after construction; construction verifies unitarity,
/// symmetry, S^2 = C and (ST)^3 = S^2 to 10^(-bits/8).
struct ModularData {
    WeightSet weights;
    CMatrix s;
    std::vector<Cplx> t_phases;
    std::vector<Rational> h_values;
    Rational charge;
    std::vector<Real> quantum_dims;
    unsigned precision_bits = 128;

    std::size_t size() const { return weights.size(); }
};

/// Verlinde coefficients as a dense three-index integer table.
struct FusionTensor {
    WeightSet weights;
    std::vector<std::int32_t> coefficients; // size n^3, index (a*n + b)*n + c

    std::int32_t at(std::size_t a, std::size_t b, std::size_t c) const {
        const std::size_t n = weights.size();
        return coefficients[(a * n + b) * n + c];
    }
};

inline constexpr std::size_t kAlcoveCap = 5000;

ModularData build_modular_data(int n, int k, unsigned precision_bits = 128);

/// Global dimension (mu-index) = sum of d^2 = 1/|S00|^2.
Real global_dimension(const ModularData& md);
/// Same quantity from the closed-form S00 product; no S matrix needed.
Real global_dimension_closed(int n, int k);

/// Quantum dimension of one weight via the Weyl sine product.
Real quantum_dim(const AffineWeight& w);

/// Verlinde formula over the full alcove. Every raw value must be within
/// 1e-6 of a nonnegative integer or a PrecisionError is thrown.
FusionTensor verlinde_fusion(const ModularData& md);

/// Independent SU(2)_k oracle: N_{ab}^c = 1 iff |a-b| <= c <= min(a+b, 2k-a-b)
/// and a+b+c is even.
FusionTensor fusion_oracle_su2(int k);

/// Selected rows of the SU(N)_K S matrix over the full alcove, for alcoves
/// too large to materialize in full. Row 0 of the selection is always the
/// vacuum.
struct SMatrixSlice {
    WeightSet ambient;
    std::vector<AffineWeight> selected;
    CMatrix rows; // selected.size() x ambient.size()
    unsigned precision_bits = 128;

    int row_of(const AffineWeight& w) const;
};

SMatrixSlice s_matrix_rows(int n, int k, std::span<const AffineWeight> rows,
                           unsigned precision_bits = 128);

/// One Verlinde coefficient from a slice; all three weights must be selected.
long fusion_entry(const SMatrixSlice& slice, const AffineWeight& a,
                  const AffineWeight& b, const AffineWeight& c);

/// Single Kac-Peterson entry (normalized); kappa = K + N.
Cplx kac_peterson_entry(const AffineWeight& lam, const AffineWeight& mu);

} // namespace mirrorext
