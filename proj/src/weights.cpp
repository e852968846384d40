#include "mirrorext/weights.hpp"

#include <numeric>

#include "mirrorext/errors.hpp"

namespace mirrorext {

AffineWeight::AffineWeight(int n, int k, std::vector<int> lab)
    : rank_n(n), level_k(k), labels(std::move(lab)) {
    if (n < 2 || k < 1)
        throw ArgumentError("AffineWeight: need rank >= 2 and level >= 1");
    if (static_cast<int>(labels.size()) != n - 1)
        throw ArgumentError("AffineWeight: expected " + std::to_string(n - 1) + " labels");
    int sum = 0;
    for (int l : labels) {
        if (l < 0)
            throw ArgumentError("AffineWeight: negative Dynkin label");
        sum += l;
    }
    if (sum > k)
        throw ArgumentError("AffineWeight: label sum exceeds level");
}

int AffineWeight::zeroth_label() const {
    return level_k - std::accumulate(labels.begin(), labels.end(), 0);
}

bool AffineWeight::is_vacuum() const {
    for (int l : labels)
        if (l != 0)
            return false;
    return true;
}

int WeightSet::index_of(const AffineWeight& w) const { return index_of(w.labels); }

int WeightSet::index_of(const std::vector<int>& labels) const {
    auto it = index.find(labels);
    if (it == index.end())
        throw ArgumentError("WeightSet: weight not in alcove");
    return it->second;
}

WeightSet alcove_weights(int n, int k) {
    if (n < 2 || k < 1)
        throw ArgumentError("alcove_weights: need n >= 2 and k >= 1");
    WeightSet ws;
    ws.rank_n = n;
    ws.level_k = k;
    std::vector<int> cur(n - 1, 0);
    // Lexicographic enumeration; the all-zero vacuum comes first.
    auto rec = [&](auto&& self, int pos, int budget) -> void {
        if (pos == n - 1) {
            ws.index[cur] = static_cast<int>(ws.members.size());
            ws.members.emplace_back(n, k, cur);
            return;
        }
        for (int v = 0; v <= budget; ++v) {
            cur[pos] = v;
            self(self, pos + 1, budget - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, k);
    return ws;
}

long box_count(const AffineWeight& w) {
    long b = 0;
    for (std::size_t i = 0; i < w.labels.size(); ++i)
        b += static_cast<long>(i + 1) * w.labels[i];
    return b;
}

bool in_root_lattice(const AffineWeight& w) { return box_count(w) % w.rank_n == 0; }

AffineWeight conjugate(const AffineWeight& w) {
    std::vector<int> lab(w.labels.rbegin(), w.labels.rend());
    return {w.rank_n, w.level_k, std::move(lab)};
}

AffineWeight simple_current(const AffineWeight& w, int t) {
    const int n = w.rank_n;
    t = ((t % n) + n) % n;
    std::vector<int> affine(n);
    affine[0] = w.zeroth_label();
    for (int i = 1; i < n; ++i)
        affine[i] = w.labels[i - 1];
    std::vector<int> rotated(n);
    for (int i = 0; i < n; ++i)
        rotated[(i + t) % n] = affine[i];
    std::vector<int> lab(rotated.begin() + 1, rotated.end());
    return {n, w.level_k, std::move(lab)};
}

Rational conformal_weight_exact(const AffineWeight& w) {
    const int n = w.rank_n;
    const int kappa = w.level_k + n;
    // (Lambda_i, Lambda_j) = (min(i,j) n - i j) / n; rho = sum Lambda_i.
    // numerator accumulates n * (lambda, lambda + 2 rho).
    long long num = 0;
    for (int i = 1; i < n; ++i) {
        if (w.labels[i - 1] == 0)
            continue;
        for (int j = 1; j < n; ++j) {
            long long gij = static_cast<long long>(std::min(i, j)) * n -
                            static_cast<long long>(i) * j;
            num += static_cast<long long>(w.labels[i - 1]) * gij * (w.labels[j - 1] + 2);
        }
    }
    return Rational(num, 2LL * n * kappa);
}

double conformal_weight(const AffineWeight& w) { return to_double(conformal_weight_exact(w)); }

Rational central_charge_exact(int n, int k) {
    if (n < 2 || k < 1)
        throw ArgumentError("central_charge: need n >= 2 and k >= 1");
    return Rational(static_cast<std::int64_t>(k) * (static_cast<std::int64_t>(n) * n - 1),
                    k + n);
}

double central_charge(int n, int k) { return to_double(central_charge_exact(n, k)); }

std::vector<int> diagram_rows(const AffineWeight& w) {
    std::vector<int> rows(w.rank_n - 1, 0);
    int acc = 0;
    for (int i = w.rank_n - 2; i >= 0; --i) {
        acc += w.labels[i];
        rows[i] = acc;
    }
    return rows;
}

std::vector<int> labels_from_rows(const std::vector<int>& rows, int rank_n) {
    std::vector<int> lab(rank_n - 1, 0);
    for (int i = 0; i < rank_n - 1; ++i) {
        int r = i < static_cast<int>(rows.size()) ? rows[i] : 0;
        int next = i + 1 < static_cast<int>(rows.size()) ? rows[i + 1] : 0;
        lab[i] = r - next;
    }
    return lab;
}

long long alcove_cardinality(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - 1 + i) / i;
    return r;
}

} // namespace mirrorext
