#include "ellhyp/scaled.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "ellhyp/errors.hpp"

namespace ellhyp {

namespace {

// Shifts beyond this are below double resolution relative to the larger term.
constexpr std::int64_t kDropShift = 1100;

cplx scale2(cplx z, std::int64_t k) {
    if (k < -2000) return {0.0, 0.0};
    int kk = static_cast<int>(k);
    return {std::ldexp(z.real(), kk), std::ldexp(z.imag(), kk)};
}

}  // namespace

ScaledComplex::ScaledComplex(cplx z) : m_(z), e_(0) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("ScaledComplex: non-finite value");
    normalize();
}

ScaledComplex ScaledComplex::from_parts(cplx mantissa, std::int64_t exp2) {
    ScaledComplex r(mantissa);
    if (!r.is_zero()) r.e_ += exp2;
    return r;
}

void ScaledComplex::normalize() {
    if (m_ == cplx(0.0, 0.0)) {
        e_ = 0;
        return;
    }
    double a = std::max(std::fabs(m_.real()), std::fabs(m_.imag()));
    int ex = 0;
    std::frexp(a, &ex);
    // first pass brings the larger component into [0.5, 1)
    m_ = scale2(m_, -ex);
    e_ += ex;
    double mod = std::abs(m_);
    while (mod >= 2.0) {
        m_ *= 0.5;
        e_ += 1;
        mod *= 0.5;
    }
    while (mod < 1.0) {
        m_ *= 2.0;
        e_ -= 1;
        mod *= 2.0;
    }
}

bool ScaledComplex::is_finite() const {
    return std::isfinite(m_.real()) && std::isfinite(m_.imag());
}

double ScaledComplex::log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log2(std::abs(m_)) + static_cast<double>(e_);
}

double ScaledComplex::abs_ratio(const ScaledComplex& other) const {
    if (is_zero()) return 0.0;
    if (other.is_zero()) return std::numeric_limits<double>::infinity();
    double lr = log2_abs() - other.log2_abs();
    if (lr > 1020) return std::numeric_limits<double>::infinity();
    return std::exp2(lr);
}

cplx ScaledComplex::to_complex() const {
    if (is_zero()) return m_;
    if (e_ > 1022) throw OverflowError("ScaledComplex: value exceeds double range");
    return scale2(m_, e_);
}

cplx ScaledComplex::to_complex_unchecked() const {
    if (is_zero()) return m_;
    if (e_ > 1022) {
        double inf = std::numeric_limits<double>::infinity();
        return {m_.real() == 0 ? 0 : std::copysign(inf, m_.real()),
                m_.imag() == 0 ? 0 : std::copysign(inf, m_.imag())};
    }
    return scale2(m_, e_);
}

ScaledComplex& ScaledComplex::operator*=(const ScaledComplex& o) {
    if (is_zero() || o.is_zero()) {
        *this = ScaledComplex();
        return *this;
    }
    m_ *= o.m_;
    e_ += o.e_;
    normalize();
    return *this;
}

ScaledComplex& ScaledComplex::operator/=(const ScaledComplex& o) {
    if (o.is_zero()) throw PoleError("ScaledComplex: division by zero");
    if (is_zero()) return *this;
    m_ /= o.m_;
    e_ -= o.e_;
    normalize();
    return *this;
}

ScaledComplex& ScaledComplex::operator+=(const ScaledComplex& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (e_ >= o.e_) {
        std::int64_t d = e_ - o.e_;
        if (d < kDropShift) m_ += scale2(o.m_, -d);
    } else {
        std::int64_t d = o.e_ - e_;
        cplx mine = d < kDropShift ? scale2(m_, -d) : cplx(0.0, 0.0);
        m_ = o.m_ + mine;
        e_ = o.e_;
    }
    normalize();
    return *this;
}

ScaledComplex& ScaledComplex::operator-=(const ScaledComplex& o) { return *this += -o; }

ScaledComplex ScaledComplex::pow(long long k) const {
    if (k == 0) return ScaledComplex(1.0);
    if (is_zero()) {
        if (k < 0) throw PoleError("ScaledComplex: zero to negative power");
        return *this;
    }
    ScaledComplex base = k > 0 ? *this : ScaledComplex(1.0) / *this;
    unsigned long long n = static_cast<unsigned long long>(k > 0 ? k : -k);
    ScaledComplex r(1.0);
    while (n) {
        if (n & 1ULL) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

double relative_residual(const ScaledComplex& a, const ScaledComplex& b) {
    if (a.is_zero() && b.is_zero()) return 0.0;
    std::int64_t e = std::max(a.is_zero() ? INT64_MIN : a.exponent(),
                              b.is_zero() ? INT64_MIN : b.exponent());
    auto down = [e](const ScaledComplex& z) {
        if (z.is_zero()) return cplx(0.0, 0.0);
        return scale2(z.mantissa(), z.exponent() - e);
    };
    cplx x = down(a), y = down(b);
    double num = std::abs(x - y);
    double den = std::abs(x) + std::abs(y);
    // the 1e-300 floor of the metric only matters when both sides are tiny
    double floor = e < -900 ? 0.0 : std::ldexp(1e-300, static_cast<int>(-e));
    return num / (den + floor);
}

void ScaledSum::rescale_to(std::int64_t e) {
    std::int64_t d = e_ - e;  // <= 0
    sum_ = scale2(sum_, d);
    comp_ = scale2(comp_, d);
    e_ = e;
}

void ScaledSum::add(const ScaledComplex& x) {
    ++n_;
    if (x.is_zero()) return;
    if (empty_) {
        e_ = x.exponent();
        empty_ = false;
    } else if (x.exponent() > e_) {
        rescale_to(x.exponent());
    }
    cplx v = scale2(x.mantissa(), x.exponent() - e_);
    // Neumaier on each real component
    auto step = [](double& s, double& c, double v) {
        double t = s + v;
        if (std::fabs(s) >= std::fabs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    };
    double sr = sum_.real(), si = sum_.imag(), cr = comp_.real(), ci = comp_.imag();
    step(sr, cr, v.real());
    step(si, ci, v.imag());
    sum_ = {sr, si};
    comp_ = {cr, ci};
}

ScaledComplex ScaledSum::value() const {
    if (empty_) return ScaledComplex();
    return ScaledComplex::from_parts(sum_ + comp_, e_);
}

std::ostream& operator<<(std::ostream& os, const ScaledComplex& z) {
    return os << "(" << z.mantissa().real() << (z.mantissa().imag() < 0 ? "" : "+")
              << z.mantissa().imag() << "i)*2^" << z.exponent();
}

}  // namespace ellhyp
