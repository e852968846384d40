#include "mirrorext/modular.hpp"

#include <algorithm>
#include <cmath>

#include "mirrorext/errors.hpp"

namespace mirrorext {

namespace {

// Shifted exponents l_a = lambda_a + ... + lambda_{N-1} + (N - a), a = 1..N.
std::vector<int> shifted_exponents(const AffineWeight& w) {
    const int n = w.rank_n;
    std::vector<int> l(n);
    int acc = 0;
    for (int a = n; a >= 1; --a) {
        if (a <= n - 1)
            acc += w.labels[a - 1];
        l[a - 1] = acc + (n - a);
    }
    return l;
}

// i^m as a Cplx.
Cplx i_power(int m) {
    switch (((m % 4) + 4) % 4) {
    case 0: return Cplx(Real(1));
    case 1: return {Real(0), Real(1)};
    case 2: return Cplx(Real(-1));
    default: return {Real(0), Real(-1)};
    }
}

Real kp_prefactor_magnitude(int n, int kappa) {
    // 1 / (sqrt(N) * kappa^{(N-1)/2})
    return Real(1) / (sqrt(Real(n)) * pow(Real(kappa), Real(n - 1) / 2));
}

} // namespace

Cplx kac_peterson_entry(const AffineWeight& lam, const AffineWeight& mu) {
    const int n = lam.rank_n;
    const int kappa = lam.level_k + n;
    auto la = shifted_exponents(lam);
    auto lb = shifted_exponents(mu);
    long suma = 0, sumb = 0;
    for (int v : la)
        suma += v;
    for (int v : lb)
        sumb += v;
    // Mean-centered exponents keep the determinant SU(N)-projected; the
    // phase of entry (a,b) is -(n*la_a - suma)(n*lb_b - sumb) / (n^2 kappa).
    const long long denom = static_cast<long long>(n) * n * kappa;
    CMatrix m(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            long long num = -(static_cast<long long>(n) * la[a] - suma) *
                            (static_cast<long long>(n) * lb[b] - sumb);
            m.at(a, b) = unit_phase(Rational(num, denom));
        }
    Cplx det = lu_determinant(std::move(m));
    return det * i_power(n * (n - 1) / 2) * kp_prefactor_magnitude(n, kappa);
}

Real quantum_dim(const AffineWeight& w) {
    const int n = w.rank_n;
    const int kappa = w.level_k + n;
    auto l = shifted_exponents(w);
    Real pi = mp_pi();
    Real d = 1;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            d *= sin(pi * (l[a] - l[b]) / kappa) / sin(pi * Real(b - a) / kappa);
    return d;
}

Real global_dimension_closed(int n, int k) {
    const int kappa = k + n;
    Real pi = mp_pi();
    // S00 = prefactor * prod_{a<b} 2 sin(pi (b-a) / kappa)
    Real s00 = kp_prefactor_magnitude(n, kappa);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            s00 *= 2 * sin(pi * Real(b - a) / kappa);
    return 1 / (s00 * s00);
}

Real global_dimension(const ModularData& md) {
    Real n = md.s.at(0, 0).norm();
    return 1 / n;
}

ModularData build_modular_data(int n, int k, unsigned precision_bits) {
    if (n < 2 || k < 1)
        throw ArgumentError("build_modular_data: need n >= 2 and k >= 1");
    if (precision_bits < 53)
        throw ArgumentError("build_modular_data: need precision >= 53 bits");
    if (alcove_cardinality(n, k) > static_cast<long long>(kAlcoveCap))
        throw ScaleError("build_modular_data: alcove exceeds sector cap");
    set_precision_bits(precision_bits);

    ModularData md;
    md.weights = alcove_weights(n, k);
    md.precision_bits = precision_bits;
    md.charge = central_charge_exact(n, k);
    const std::size_t dim = md.weights.size();

    md.s = CMatrix(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            Cplx v = kac_peterson_entry(md.weights.members[i], md.weights.members[j]);
            md.s.at(i, j) = v;
            md.s.at(j, i) = v; // symmetric by construction of the phases
        }

    md.h_values.reserve(dim);
    md.t_phases.reserve(dim);
    for (const auto& w : md.weights.members) {
        Rational h = conformal_weight_exact(w);
        md.h_values.push_back(h);
        md.t_phases.push_back(unit_phase(h - md.charge / 24));
    }

    const Real tol = modular_tolerance(precision_bits);
    const Real s00 = md.s.at(0, 0).re;
    md.quantum_dims.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        Cplx e = md.s.at(0, i);
        if (abs(e.im) > tol || e.re <= 0)
            throw PrecisionError("build_modular_data: S row 0 not positive real; "
                                 "retry with higher precision");
        md.quantum_dims.push_back(e.re / s00);
    }

    // Self checks: unitarity, S^2 = C, (ST)^3 = S^2.
    CMatrix ssd = md.s * md.s.adjoint();
    if (ssd.max_diff(CMatrix::identity(dim)) > tol)
        throw PrecisionError("build_modular_data: S unitarity check failed; "
                             "retry with higher precision");
    CMatrix conj_perm(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        int j = md.weights.index_of(conjugate(md.weights.members[i]));
        conj_perm.at(i, j) = Cplx(Real(1));
    }
    CMatrix s2 = md.s * md.s;
    if (s2.max_diff(conj_perm) > tol)
        throw PrecisionError("build_modular_data: S^2 != C; retry with higher precision");
    CMatrix st = md.s;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            st.at(i, j) = st.at(i, j) * md.t_phases[j];
    CMatrix st3 = st * st * st;
    if (st3.max_diff(s2) > tol)
        throw PrecisionError("build_modular_data: (ST)^3 != S^2; retry with higher precision");
    return md;
}

FusionTensor verlinde_fusion(const ModularData& md) {
    const std::size_t dim = md.size();
    FusionTensor ft;
    ft.weights = md.weights;
    ft.coefficients.assign(dim * dim * dim, 0);

    const Real integrality_tol = Real("1e-6");
    // N_{ab}^c = sum_s S_as S_bs conj(S_cs) / S_0s
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a; b < dim; ++b) {
            for (std::size_t c = 0; c < dim; ++c) {
                Cplx acc(Real(0));
                for (std::size_t s = 0; s < dim; ++s)
                    acc += md.s.at(a, s) * md.s.at(b, s) * md.s.at(c, s).conj() /
                           md.s.at(0, s);
                long rounded = std::lround(static_cast<double>(acc.re));
                if (abs(acc.re - Real(rounded)) > integrality_tol ||
                    abs(acc.im) > integrality_tol || rounded < 0)
                    throw PrecisionError("verlinde_fusion: value not a nonnegative "
                                         "integer within 1e-6");
                ft.coefficients[(a * dim + b) * dim + c] = static_cast<std::int32_t>(rounded);
                ft.coefficients[(b * dim + a) * dim + c] = static_cast<std::int32_t>(rounded);
            }
        }
    return ft;
}

FusionTensor fusion_oracle_su2(int k) {
    if (k < 1)
        throw ArgumentError("fusion_oracle_su2: need k >= 1");
    FusionTensor ft;
    ft.weights = alcove_weights(2, k);
    const std::size_t dim = ft.weights.size();
    ft.coefficients.assign(dim * dim * dim, 0);
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b)
            for (int c = 0; c <= k; ++c) {
                bool ok = (a + b + c) % 2 == 0 && std::abs(a - b) <= c &&
                          c <= std::min(a + b, 2 * k - a - b);
                if (ok)
                    ft.coefficients[(static_cast<std::size_t>(a) * dim + b) * dim + c] = 1;
            }
    return ft;
}

int SMatrixSlice::row_of(const AffineWeight& w) const {
    for (std::size_t i = 0; i < selected.size(); ++i)
        if (selected[i] == w)
            return static_cast<int>(i);
    throw ArgumentError("SMatrixSlice: weight not among selected rows");
}

SMatrixSlice s_matrix_rows(int n, int k, std::span<const AffineWeight> rows,
                           unsigned precision_bits) {
    set_precision_bits(precision_bits);
    SMatrixSlice slice;
    slice.ambient = alcove_weights(n, k);
    slice.precision_bits = precision_bits;
    slice.selected.emplace_back(n, k, std::vector<int>(n - 1, 0));
    for (const auto& w : rows) {
        bool seen = false;
        for (const auto& have : slice.selected)
            if (have == w)
                seen = true;
        if (!seen)
            slice.selected.push_back(w);
    }
    const std::size_t dim = slice.ambient.size();
    slice.rows = CMatrix(slice.selected.size(), dim);
    for (std::size_t i = 0; i < slice.selected.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j)
            slice.rows.at(i, j) =
                kac_peterson_entry(slice.selected[i], slice.ambient.members[j]);
    return slice;
}

long fusion_entry(const SMatrixSlice& slice, const AffineWeight& a,
                  const AffineWeight& b, const AffineWeight& c) {
    const std::size_t dim = slice.ambient.size();
    int ia = slice.row_of(a), ib = slice.row_of(b), ic = slice.row_of(c);
    Cplx acc(Real(0));
    for (std::size_t s = 0; s < dim; ++s)
        acc += slice.rows.at(ia, s) * slice.rows.at(ib, s) * slice.rows.at(ic, s).conj() /
               slice.rows.at(0, s);
    long rounded = std::lround(static_cast<double>(acc.re));
    if (abs(acc.re - Real(rounded)) > Real("1e-6") || abs(acc.im) > Real("1e-6") ||
        rounded < 0)
        throw PrecisionError("fusion_entry: value not a nonnegative integer within 1e-6");
    return rounded;
}

} // namespace mirrorext
