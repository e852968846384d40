#pragma once

#include <map>
#include <vector>

#include "mirrorext/weights.hpp"

namespace mirrorext {

/// Finite multiset of sectors with positive integer multiplicities,
/// keyed by Dynkin labels over a fixed SU(N)_K alcove.
struct Spectrum {
    int rank_n = 0;
    int level_k = 0;
    std::map<std::vector<int>, int> multiplicities;

    Spectrum() = default;
    Spectrum(int n, int k) : rank_n(n), level_k(k) {}

    void add(const std::vector<int>& labels, int mult = 1) {
        multiplicities[labels] += mult;
    }
    int mult_of(const std::vector<int>& labels) const {
        auto it = multiplicities.find(labels);
        return it == multiplicities.end() ? 0 : it->second;
    }
    bool is_vacuum_only() const {
        return multiplicities.size() == 1 &&
               mult_of(std::vector<int>(rank_n - 1, 0)) == 1;
    }
    bool operator==(const Spectrum& o) const {
        return rank_n == o.rank_n && level_k == o.level_k &&
               multiplicities == o.multiplicities;
    }
};

} // namespace mirrorext
