#pragma once

#include <map>

#include "mirrorext/modular.hpp"
#include "mirrorext/report.hpp"
#include "mirrorext/weights.hpp"

namespace mirrorext {

/// The exp set of the level-rank normal subnet SU(N)_M x SU(M)_N inside
/// SU(NM)_1: root-lattice weights of the SU(N)_M alcove, each paired with
/// its branch partner in the SU(M)_N alcove.
struct ExpSet {
    int rank_n = 0;  // N
    int level_m = 0; // M
    WeightSet ambient;
    std::vector<AffineWeight> members;
    std::map<std::vector<int>, AffineWeight> pairing;

    const AffineWeight& partner(const AffineWeight& w) const;
    bool contains(const AffineWeight& w) const;
};

ExpSet exp_set_levelrank(int n, int m);

/// Young-diagram transpose with column reduction: SU(N)_M -> SU(M)_N.
AffineWeight transpose_weight(const AffineWeight& w);

/// Branch partner (1,lambda) of a root-lattice weight: the simple-current
/// twist of the transpose selected by exact h-integrality, with the
/// closed-form twist t = -|lambda|/N mod M breaking simple-current
/// fixed-point ties.
AffineWeight mirror_pair(const AffineWeight& w);

/// Closure of exp under fusion and equality of fusion coefficients across
/// the pairing. For ambient alcoves above `full_tensor_cap` sectors the
/// mirror-side coefficients are evaluated entry by entry.
Report verify_ring_isomorphism(const ExpSet& exp, unsigned precision_bits = 128,
                               std::size_t full_tensor_cap = 150);

/// Twist conjugation (exact) and Hopf-link conjugation (to 1e-8, or a
/// recorded uniform phase) across the pairing.
Report verify_mirror_conjugation(const ExpSet& exp, unsigned precision_bits = 128);

} // namespace mirrorext
