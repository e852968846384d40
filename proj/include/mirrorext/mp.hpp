#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <cstddef>
#include <vector>

#include "mirrorext/rational.hpp"

namespace mirrorext {

/// Arbitrary-precision real; working precision is set globally via
/// set_precision_bits (thread-local underneath, like MPFR itself).
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Set the working precision in bits (>= 53).
void set_precision_bits(unsigned bits);
unsigned precision_bits();

/// Tolerance 10^(-bits/8) used by modular-data self checks.
Real modular_tolerance(unsigned bits);

Real mp_pi();

/// Minimal complex scalar over Real. std::complex is not specified for
/// user-defined types, so we keep our own.
struct Cplx {
    Real re{0}, im{0};

    Cplx() = default;
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Cplx(Real r) : re(std::move(r)) {}
    explicit Cplx(double r) : re(r) {}

    Cplx operator+(const Cplx& o) const { return {re + o.re, im + o.im}; }
    Cplx operator-(const Cplx& o) const { return {re - o.re, im - o.im}; }
    Cplx operator*(const Cplx& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Cplx operator*(const Real& s) const { return {re * s, im * s}; }
    Cplx operator/(const Real& s) const { return {re / s, im / s}; }
    Cplx operator/(const Cplx& o) const {
        Real n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    Cplx& operator+=(const Cplx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cplx& operator-=(const Cplx& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Cplx conj() const { return {re, -im}; }
    Real norm() const { return re * re + im * im; }
    Real abs() const { return sqrt(norm()); }
};

/// exp(2*pi*i*x) for rational x; reduces mod 1 before evaluating.
Cplx unit_phase(const Rational& x);
/// exp(2*pi*i*x) for real x.
Cplx unit_phase(const Real& x);

/// Dense complex matrix, row-major.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Cplx& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Cplx& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CMatrix operator*(const CMatrix& o) const;
    CMatrix adjoint() const;

    /// max_ij |A_ij - B_ij|
    Real max_diff(const CMatrix& o) const;
    /// max_ij |A_ij|
    Real max_abs() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Cplx> data_;
};

/// Determinant by LU with partial pivoting; destroys a copy.
Cplx lu_determinant(CMatrix a);

} // namespace mirrorext
