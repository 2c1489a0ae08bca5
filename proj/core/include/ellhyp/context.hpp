#pragma once

#include "ellhyp/scaled.hpp"

namespace ellhyp {

// Nome, base and Macdonald parameter plus the truncation policy shared by
// every primitive.
struct Context {
    cplx p{0.0, 0.0};
    cplx q{0.5, 0.0};
    cplx t{0.5, 0.0};
    double trunc_tol = 1e-17;
    int max_terms = 10000;
    // denominator factors of the elliptic gamma product closer than this to
    // zero raise PoleError
    double pole_guard = 1e-12;
    // when positive, denominator theta values below this modulus raise
    // PoleError; the sampler uses it to reject near-singular bindings
    double factor_guard = 0.0;

    // Checks the public invariants: |p| < 1, 0 < |q| < 1, positive tolerances.
    void validate() const;

    // Copy with (q, t) replaced. Used by the symmetry checks that evaluate at
    // (1/q, 1/t) or (t, q); those values are not re-validated because theta
    // and the partition factorials never need |q| < 1.
    Context with_qt(cplx q2, cplx t2) const {
        Context c = *this;
        c.q = q2;
        c.t = t2;
        return c;
    }
    Context with_pq(cplx p2, cplx q2) const {
        Context c = *this;
        c.p = p2;
        c.q = q2;
        return c;
    }
    Context unguarded() const {
        Context c = *this;
        c.factor_guard = 0.0;
        return c;
    }
};

}  // namespace ellhyp
