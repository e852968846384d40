#pragma once

#include <optional>

#include "mirrorext/levelrank.hpp"
#include "mirrorext/report.hpp"
#include "mirrorext/spectrum.hpp"

namespace mirrorext {

/// exp data for a diagonal normal subnet SU(N)_K inside the l-fold product
/// SU(N)_{K1} x ... x SU(N)_{Kl}, K = sum Ki. Coset partners are formal
/// labels carried by their exact h mod 1 only; no coset modular data.
struct DiagonalExpSet {
    int rank_n = 0;
    std::vector<int> levels;
    int level_total = 0;
    WeightSet ambient;
    std::vector<AffineWeight> members; // root-lattice weights
    Rational coset_c;
    std::map<std::vector<int>, Rational> partner_h_mod1; // (-h_lambda) mod 1

    bool contains(const AffineWeight& w) const {
        return partner_h_mod1.find(w.labels) != partner_h_mod1.end();
    }
};

DiagonalExpSet exp_set_diagonal(int n, const std::vector<int>& levels);

/// The normal-subnet context feeding the mirror engine: either the
/// level-rank family or a diagonal embedding.
struct NormalSubnetSpec {
    enum class Kind { LevelRank, Diagonal };
    Kind kind = Kind::LevelRank;
    std::optional<ExpSet> level_rank;
    std::optional<DiagonalExpSet> diagonal;

    static NormalSubnetSpec make_level_rank(int n, int m);
    static NormalSubnetSpec make_diagonal(int n, const std::vector<int>& levels);
};

/// One entry of a mirror spectrum: the partner label (a genuine SU(M)_N
/// weight for level-rank, the source label of the formal coset sector
/// (1,lambda) for diagonal) with its multiplicity.
struct MirrorEntry {
    AffineWeight label;
    int multiplicity = 0;
    std::optional<Rational> h_mod1; // diagonal kind only
};

struct MirrorSpectrum {
    NormalSubnetSpec::Kind kind = NormalSubnetSpec::Kind::LevelRank;
    std::vector<MirrorEntry> entries;
    Real index;
    bool index_assumed_preserved = false; // diagonal kind: index copied, not recomputed
    Spectrum source;
    std::optional<Rational> coset_c;
};

/// Mirror-extension engine: copy the multiplicities of an exp-supported spectrum onto
/// the branch partners.
MirrorSpectrum mirror_extension(const NormalSubnetSpec& spec, const Spectrum& rho,
                                unsigned precision_bits = 128);

/// Frobenius-Perron weight sum m_lambda d_lambda of a spectrum.
Real extension_index(const Spectrum& rho);
Real extension_index(const Spectrum& rho, const ModularData& md);

/// Full consistency bundle: hypothesis checks, index equality across the
/// mirror, h-integrality, ring-isomorphism restriction (level-rank), and
/// coset central charge / Kac-table congruences (diagonal).
Report mirror_report(const NormalSubnetSpec& spec, const Spectrum& rho,
                     unsigned precision_bits = 128);

/// If c = 1 - 6/(m(m+1)) for an integer m >= 3, return m.
std::optional<int> minimal_model_m(const Rational& c);
/// Unitary Kac-table weight h_{r,s} at minimal-model parameter m.
Rational kac_h(int m, int r, int s);

} // namespace mirrorext
