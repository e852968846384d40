#include "mirrorext/modinv.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "mirrorext/errors.hpp"

namespace mirrorext {

namespace {

// Integer points of {x in [0,bound]^V : A x = 0} with a pinned coordinate
// x[pin] = 1. A is given implicitly by an orthonormal nullspace basis: every
// solution satisfies x = N y for the V x d basis N. Free coordinates are
// chosen by column-pivoted QR so the d x d subblock is well conditioned;
// the rest are linear in them and must come out as integers in range.
std::vector<std::vector<int>> enumerate_integer_nullspace(
    const Eigen::MatrixXd& constraints, std::size_t n_vars, int bound, int pin_var) {
    constexpr double kTol = 1e-6;

    Eigen::MatrixXd null_basis;
    if (constraints.rows() == 0) {
        null_basis = Eigen::MatrixXd::Identity(n_vars, n_vars);
    } else {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(constraints,
                                           Eigen::ComputeThinU | Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        double thresh = 1e-7 * std::max(1.0, sv.size() ? sv(0) : 1.0);
        int rank = 0;
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > thresh)
                ++rank;
        null_basis = svd.matrixV().rightCols(static_cast<int>(n_vars) - rank);
    }
    const int d = static_cast<int>(null_basis.cols());
    if (d == 0)
        return {};
    if (d > 16)
        throw ScaleError("integer nullspace enumeration: solution space dimension " +
                         std::to_string(d) + " exceeds guard");

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(null_basis.transpose());
    Eigen::VectorXi perm = qr.colsPermutation().indices();
    std::vector<int> free_vars(perm.data(), perm.data() + d);

    Eigen::MatrixXd n_free(d, d);
    for (int i = 0; i < d; ++i)
        n_free.row(i) = null_basis.row(free_vars[i]);
    Eigen::MatrixXd reconstruct = null_basis * n_free.inverse(); // V x d

    std::vector<std::vector<int>> solutions;
    std::vector<int> assignment(d, 0);
    Eigen::VectorXd xf(d);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == d) {
            for (int i = 0; i < d; ++i)
                xf(i) = assignment[i];
            Eigen::VectorXd x = reconstruct * xf;
            std::vector<int> sol(n_vars);
            for (std::size_t v = 0; v < n_vars; ++v) {
                double r = std::round(x(static_cast<int>(v)));
                if (std::abs(x(static_cast<int>(v)) - r) > kTol || r < -0.5 ||
                    r > bound + 0.5)
                    return;
                sol[v] = static_cast<int>(r);
            }
            if (pin_var >= 0 && sol[pin_var] != 1)
                return;
            solutions.push_back(std::move(sol));
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            assignment[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    std::sort(solutions.begin(), solutions.end());
    solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
    return solutions;
}

} // namespace

Report verify_invariant(const MassMatrix& z, const ModularData& md) {
    Report rep;
    const std::size_t dim = md.size();
    if (z.weights.size() != dim)
        throw ArgumentError("verify_invariant: dimension mismatch");

    bool t_ok = true;
    for (std::size_t i = 0; i < dim && t_ok; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (z.at(i, j) != 0 &&
                mod1(md.h_values[i]) != mod1(md.h_values[j])) {
                t_ok = false;
                break;
            }
    rep.add("t-commutation", t_ok, "exact congruence h_i = h_j mod 1 on support");

    // max |(ZS - SZ)_{ab}|
    Real worst = 0;
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            Cplx acc(Real(0));
            for (std::size_t x = 0; x < dim; ++x) {
                if (z.at(a, x) != 0)
                    acc += md.s.at(x, b) * Real(z.at(a, x));
                if (z.at(x, b) != 0)
                    acc -= md.s.at(a, x) * Real(z.at(x, b));
            }
            Real v = acc.abs();
            if (v > worst)
                worst = v;
        }
    rep.add("s-commutation", worst < Real("1e-8"),
            "max residual " + std::to_string(static_cast<double>(worst)));
    rep.add("vacuum-entry", z.at(0, 0) == 1);
    return rep;
}

MassMatrix invariant_from_branching(const std::map<int, Spectrum>& branchings,
                                    const WeightSet& ambient) {
    if (branchings.empty())
        throw ArgumentError("invariant_from_branching: no branchings");
    if (branchings.find(0) == branchings.end())
        throw ArgumentError("invariant_from_branching: vacuum branch missing");
    const std::size_t dim = ambient.size();
    MassMatrix z;
    z.weights = ambient;
    z.entries.assign(dim * dim, 0);
    for (const auto& [sector, spec] : branchings) {
        std::vector<int> b(dim, 0);
        for (const auto& [labels, mult] : spec.multiplicities)
            b[ambient.index_of(labels)] = mult;
        for (std::size_t i = 0; i < dim; ++i) {
            if (b[i] == 0)
                continue;
            for (std::size_t j = 0; j < dim; ++j)
                z.at(i, j) += b[i] * b[j];
        }
    }
    return z;
}

std::vector<MassMatrix> commutant_search(const ModularData& md, int entry_bound) {
    const std::size_t dim = md.size();
    if (dim > 64)
        throw ScaleError("commutant_search: more than 64 sectors");
    if (entry_bound < 1)
        throw ArgumentError("commutant_search: entry_bound must be >= 1");

    // T-congruence classes give the allowed support.
    std::vector<std::pair<int, int>> positions;
    std::vector<std::vector<int>> pos_index(dim, std::vector<int>(dim, -1));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (mod1(md.h_values[i]) == mod1(md.h_values[j])) {
                pos_index[i][j] = static_cast<int>(positions.size());
                positions.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
    const std::size_t n_vars = positions.size();

    // (ZS - SZ)_{ab} = 0, split into real and imaginary rows.
    Eigen::MatrixXd constraints(2 * dim * dim, n_vars);
    constraints.setZero();
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            const std::size_t row = 2 * (a * dim + b);
            for (std::size_t v = 0; v < n_vars; ++v) {
                auto [i, j] = positions[v];
                double re = 0, im = 0;
                if (static_cast<std::size_t>(i) == a) {
                    re += static_cast<double>(md.s.at(j, b).re);
                    im += static_cast<double>(md.s.at(j, b).im);
                }
                if (static_cast<std::size_t>(j) == b) {
                    re -= static_cast<double>(md.s.at(a, i).re);
                    im -= static_cast<double>(md.s.at(a, i).im);
                }
                constraints(row, v) = re;
                constraints(row + 1, v) = im;
            }
        }

    int pin = pos_index[0][0];
    auto solutions = enumerate_integer_nullspace(constraints, n_vars, entry_bound, pin);

    std::vector<MassMatrix> out;
    for (const auto& sol : solutions) {
        MassMatrix z;
        z.weights = md.weights;
        z.entries.assign(dim * dim, 0);
        for (std::size_t v = 0; v < n_vars; ++v)
            z.at(positions[v].first, positions[v].second) = sol[v];
        if (verify_invariant(z, md).passed())
            out.push_back(std::move(z));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Report RationalCFT::self_check(unsigned precision_bits) const {
    set_precision_bits(precision_bits);
    Report rep;
    const std::size_t dim = size();
    const Real tol = Real("1e-10");
    rep.add("unitary", (s * s.adjoint()).max_diff(CMatrix::identity(dim)) < tol);
    CMatrix st = s;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            st.at(i, j) = st.at(i, j) * unit_phase(h[j] - charge / 24);
    rep.add("st-cubed", ((st * st * st).max_diff(s * s)) < tol);
    bool row0 = true;
    for (std::size_t j = 0; j < dim; ++j)
        if (s.at(0, j).re <= 0 || abs(s.at(0, j).im) > tol)
            row0 = false;
    rep.add("vacuum-row-positive", row0);
    rep.add("vacuum-h-zero", h[0] == Rational(0));
    Real mu = 0;
    for (const auto& d : dims)
        mu += d * d;
    rep.add("global-dimension", abs(mu - 1 / s.at(0, 0).norm()) < Real("1e-8"));
    return rep;
}

std::vector<std::vector<int>> branching_search(const RationalCFT& target,
                                               const ModularData& a_side,
                                               int entry_bound) {
    const std::size_t nt = target.size();
    const std::size_t na = a_side.size();

    std::vector<std::pair<int, int>> positions; // (target sector, alcove index)
    int pin = -1;
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t l = 0; l < na; ++l) {
            if (mod1(a_side.h_values[l] - a_side.charge / 24) !=
                mod1(target.h[i] - target.charge / 24))
                continue;
            if (i == 0 && l == 0)
                pin = static_cast<int>(positions.size());
            positions.emplace_back(static_cast<int>(i), static_cast<int>(l));
        }
    if (pin < 0)
        return {};
    const std::size_t n_vars = positions.size();

    // (B S^G - S^H B)_{i mu} = 0.
    Eigen::MatrixXd constraints(2 * nt * na, n_vars);
    constraints.setZero();
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t mu = 0; mu < na; ++mu) {
            const std::size_t row = 2 * (i * na + mu);
            for (std::size_t v = 0; v < n_vars; ++v) {
                auto [ti, l] = positions[v];
                double re = 0, im = 0;
                if (static_cast<std::size_t>(ti) == i) {
                    re += static_cast<double>(a_side.s.at(l, mu).re);
                    im += static_cast<double>(a_side.s.at(l, mu).im);
                }
                if (static_cast<std::size_t>(l) == mu) {
                    re -= static_cast<double>(target.s.at(i, ti).re);
                    im -= static_cast<double>(target.s.at(i, ti).im);
                }
                constraints(row, v) = re;
                constraints(row + 1, v) = im;
            }
        }

    auto solutions = enumerate_integer_nullspace(constraints, n_vars, entry_bound, pin);
    std::vector<std::vector<int>> out;
    for (const auto& sol : solutions) {
        std::vector<int> b(nt * na, 0);
        for (std::size_t v = 0; v < n_vars; ++v)
            b[positions[v].first * na + positions[v].second] = sol[v];
        out.push_back(std::move(b));
    }
    return out;
}

} // namespace mirrorext
