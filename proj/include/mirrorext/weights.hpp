#pragma once

#include <map>
#include <vector>

#include "mirrorext/rational.hpp"

namespace mirrorext {

/// A level-K dominant weight of SU(N), stored by its N-1 finite Dynkin
/// labels. The affine zeroth label is always derived from the level,
/// never stored.
struct AffineWeight {
    int rank_n = 0;
    int level_k = 0;
    std::vector<int> labels; // size rank_n - 1, sum <= level_k

    AffineWeight() = default;
    AffineWeight(int n, int k, std::vector<int> lab);

    int zeroth_label() const; // level_k - sum(labels)
    bool is_vacuum() const;

    bool operator==(const AffineWeight& o) const {
        return rank_n == o.rank_n && level_k == o.level_k && labels == o.labels;
    }
    bool operator<(const AffineWeight& o) const { return labels < o.labels; }
};

/// All level-K dominant weights of SU(N), lexicographically ordered with
/// the vacuum at index 0. Everything downstream indexes against this order.
struct WeightSet {
    int rank_n = 0;
    int level_k = 0;
    std::vector<AffineWeight> members;
    std::map<std::vector<int>, int> index;

    std::size_t size() const { return members.size(); }
    int index_of(const AffineWeight& w) const;
    int index_of(const std::vector<int>& labels) const;
};

WeightSet alcove_weights(int n, int k);

/// Young-diagram box count sum(i * lambda_i).
long box_count(const AffineWeight& w);

/// box_count == 0 mod N, i.e. the weight lies in the root lattice.
bool in_root_lattice(const AffineWeight& w);

/// Charge conjugation: reverse the label string.
AffineWeight conjugate(const AffineWeight& w);

/// Simple-current twist: rotate the affine label string [a0,...,a_{N-1}]
/// by t positions.
AffineWeight simple_current(const AffineWeight& w, int t);

/// h_lambda = (lambda, lambda + 2 rho) / (2 (K + N)), exact.
Rational conformal_weight_exact(const AffineWeight& w);
double conformal_weight(const AffineWeight& w);

/// c = K (N^2 - 1) / (K + N), exact.
Rational central_charge_exact(int n, int k);
double central_charge(int n, int k);

/// Young-diagram row lengths r_1 >= ... >= r_{N-1} (r_i = sum_{j>=i} lambda_j).
std::vector<int> diagram_rows(const AffineWeight& w);

/// Rebuild Dynkin labels from row lengths (rows may carry trailing zeros).
std::vector<int> labels_from_rows(const std::vector<int>& rows, int rank_n);

/// binomial(n-1+k, k), the alcove cardinality.
long long alcove_cardinality(int n, int k);

} // namespace mirrorext
