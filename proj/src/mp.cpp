#include "mirrorext/mp.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>

namespace mirrorext {

namespace {
thread_local unsigned g_bits = 128;
}

void set_precision_bits(unsigned bits) {
    if (bits < 53)
        bits = 53;
    g_bits = bits;
    // boost counts decimal digits; bits * log10(2) rounded up plus guard.
    unsigned digits = static_cast<unsigned>(bits * 0.30103) + 4;
    Real::default_precision(digits);
}

unsigned precision_bits() { return g_bits; }

Real modular_tolerance(unsigned bits) {
    return pow(Real(10), -static_cast<int>(bits / 8));
}

Real mp_pi() {
    return boost::math::constants::pi<Real>();
}

Cplx unit_phase(const Rational& x) {
    Rational r = mod1(x);
    Real angle = 2 * mp_pi() * Real(r.numerator()) / Real(r.denominator());
    return {cos(angle), sin(angle)};
}

Cplx unit_phase(const Real& x) {
    Real angle = 2 * mp_pi() * x;
    return {cos(angle), sin(angle)};
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Cplx(Real(1));
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    CMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Cplx& a = at(i, k);
            if (a.re == 0 && a.im == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j).conj();
    return r;
}

Real CMatrix::max_diff(const CMatrix& o) const {
    Real m = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            Real d = (at(i, j) - o.at(i, j)).abs();
            if (d > m)
                m = d;
        }
    return m;
}

Real CMatrix::max_abs() const {
    Real m = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            Real d = at(i, j).abs();
            if (d > m)
                m = d;
        }
    return m;
}

Cplx lu_determinant(CMatrix a) {
    const std::size_t n = a.rows();
    Cplx det(Real(1));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        Real best = a.at(c, c).norm();
        for (std::size_t r = c + 1; r < n; ++r) {
            Real v = a.at(r, c).norm();
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0)
            return Cplx(Real(0));
        if (pivot != c) {
            for (std::size_t j = c; j < n; ++j)
                std::swap(a.at(c, j), a.at(pivot, j));
            det = det * Real(-1);
        }
        det = det * a.at(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            Cplx f = a.at(r, c) / a.at(c, c);
            for (std::size_t j = c; j < n; ++j)
                a.at(r, j) -= f * a.at(c, j);
        }
    }
    return det;
}

} // namespace mirrorext
