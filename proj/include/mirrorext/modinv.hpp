#pragma once

#include <map>
#include <string>

#include "mirrorext/modular.hpp"
#include "mirrorext/report.hpp"
#include "mirrorext/spectrum.hpp"

namespace mirrorext {

/// Nonnegative-integer mass matrix Z over one alcove, Z00 = 1.
struct MassMatrix {
    WeightSet weights;
    std::vector<int> entries; // row-major, size n^2

    int at(std::size_t i, std::size_t j) const { return entries[i * weights.size() + j]; }
    int& at(std::size_t i, std::size_t j) { return entries[i * weights.size() + j]; }
    bool operator==(const MassMatrix& o) const { return entries == o.entries; }
    bool operator<(const MassMatrix& o) const { return entries < o.entries; }
};

/// S-commutation to 1e-8 plus exact T-congruence on the support.
Report verify_invariant(const MassMatrix& z, const ModularData& md);

/// Z = sum_i b_i b_i^T over the branching vectors of the target sectors.
MassMatrix invariant_from_branching(const std::map<int, Spectrum>& branchings,
                                    const WeightSet& ambient);

/// All nonnegative-integer Z with entries <= entry_bound, Z00 = 1, exact
/// T-congruent support and S-commutation; solves the linear commutant
/// conditions first, then enumerates integer points of the solution space.
std::vector<MassMatrix> commutant_search(const ModularData& md, int entry_bound = 3);

/// Modular data of a small rational theory given by constants (the level-1
/// target algebras of the catalog).
struct RationalCFT {
    std::string name;
    std::vector<Rational> h;
    Rational charge;
    CMatrix s;
    std::vector<Real> dims;

    std::size_t size() const { return h.size(); }
    /// Verifies unitarity, (ST)^3 = S^2, positive vacuum row.
    Report self_check(unsigned precision_bits = 128) const;
};

/// Nonnegative-integer branching matrices B (target sectors x alcove) with
/// B_{00} = 1 intertwining the modular data: B S^G = S^H B and the exact
/// T-congruence h_lambda - c_G/24 = h_i - c_H/24 mod 1 on the support.
std::vector<std::vector<int>> branching_search(const RationalCFT& target,
                                               const ModularData& a_side,
                                               int entry_bound = 3);

} // namespace mirrorext
