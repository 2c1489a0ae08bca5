#pragma once

#include <cmath>

#include "ellhyp/scaled.hpp"

namespace ellhyp::detail {

// Multiplies plain complex factors and folds into a ScaledComplex only when
// the running product leaves a safe window. Cheaper than normalizing per factor.
class ProductAcc {
public:
    void mul(cplx f) {
        acc_ *= f;
        double m = std::abs(acc_.real()) + std::abs(acc_.imag());
        if (m > 1e150 || m < 1e-150) flush();
    }
    ScaledComplex value() {
        flush();
        return total_;
    }

private:
    void flush() {
        total_ *= ScaledComplex(acc_);
        acc_ = cplx(1.0, 0.0);
    }
    cplx acc_{1.0, 0.0};
    ScaledComplex total_{1.0};
};

}  // namespace ellhyp::detail
