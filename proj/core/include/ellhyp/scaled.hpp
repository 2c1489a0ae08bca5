#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>

namespace ellhyp {

using cplx = std::complex<double>;

// Complex number stored as mantissa * 2^exponent with 1 <= |mantissa| < 2.
// Zero is mantissa 0 with exponent 0. Products and quotients touch the
// exponent exactly; only the mantissa is rounded.
class ScaledComplex {
public:
    ScaledComplex() = default;
    ScaledComplex(cplx z);  // NOLINT(google-explicit-constructor)
    ScaledComplex(double x) : ScaledComplex(cplx(x, 0.0)) {}  // NOLINT

    static ScaledComplex from_parts(cplx mantissa, std::int64_t exp2);

    cplx mantissa() const { return m_; }
    std::int64_t exponent() const { return e_; }
    bool is_zero() const { return m_ == cplx(0.0, 0.0); }
    bool is_finite() const;

    // log2 |value|; -inf for zero
    double log2_abs() const;
    double abs_ratio(const ScaledComplex& other) const;  // |this| / |other|

    // Throws OverflowError when the value does not fit a double.
    cplx to_complex() const;
    // Saturating conversion used only for diagnostics.
    cplx to_complex_unchecked() const;

    ScaledComplex& operator*=(const ScaledComplex& o);
    ScaledComplex& operator/=(const ScaledComplex& o);
    ScaledComplex& operator+=(const ScaledComplex& o);
    ScaledComplex& operator-=(const ScaledComplex& o);
    ScaledComplex operator-() const { return from_raw(-m_, e_); }

    ScaledComplex pow(long long k) const;

    friend bool operator==(const ScaledComplex& a, const ScaledComplex& b) {
        return a.m_ == b.m_ && a.e_ == b.e_;
    }

private:
    static ScaledComplex from_raw(cplx m, std::int64_t e) {
        ScaledComplex r;
        r.m_ = m;
        r.e_ = e;
        return r;
    }
    void normalize();

    cplx m_{0.0, 0.0};
    std::int64_t e_ = 0;
};

inline ScaledComplex operator*(ScaledComplex a, const ScaledComplex& b) { return a *= b; }
inline ScaledComplex operator/(ScaledComplex a, const ScaledComplex& b) { return a /= b; }
inline ScaledComplex operator+(ScaledComplex a, const ScaledComplex& b) { return a += b; }
inline ScaledComplex operator-(ScaledComplex a, const ScaledComplex& b) { return a -= b; }

// |a-b| / (|a|+|b|+1e-300), computed without leaving the scaled range.
double relative_residual(const ScaledComplex& a, const ScaledComplex& b);

// Neumaier-compensated sum. Terms are rescaled to the largest exponent seen,
// so the result depends only on the order of add() calls.
class ScaledSum {
public:
    void add(const ScaledComplex& x);
    ScaledComplex value() const;
    std::size_t count() const { return n_; }

private:
    void rescale_to(std::int64_t e);
    cplx sum_{0.0, 0.0};
    cplx comp_{0.0, 0.0};
    std::int64_t e_ = 0;
    bool empty_ = true;
    std::size_t n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ScaledComplex& z);

}  // namespace ellhyp
