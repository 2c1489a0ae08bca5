#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ellhyp/context.hpp"
#include "ellhyp/scaled.hpp"

namespace ellhyp {

// Weakly decreasing sequence of positive integers; trailing zeros are dropped
// on construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // "[3,1]", "[]", "3,1" are accepted
    static Partition parse(const std::string& text);
    std::string to_string() const;

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    // 1-based part access, 0 beyond the length
    int operator()(int i) const {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    Partition conjugate() const;
    // n(λ) = Σ (i-1) λ_i
    long long n_stat() const;
    // μ ⊂ λ
    bool contains(const Partition& mu) const;
    // μ ≺ λ: λ_i ≥ μ_i ≥ λ_{i+1}
    bool interlaces(const Partition& mu) const;
    // (i, j) cells in row-major order, 1-based
    std::vector<std::pair<int, int>> cells() const;
    // (2λ_1, 2λ_1, 2λ_2, 2λ_2, ...)
    Partition doubled_square() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

inline bool interlaces(const Partition& lam, const Partition& mu) { return lam.interlaces(mu); }
inline Partition conjugate(const Partition& lam) { return lam.conjugate(); }

// (N^n); empty when N = 0 or n = 0
Partition rectangle(int N, int n);
// all λ ⊂ (N^n), lexicographically decreasing in the part vector
std::vector<Partition> partitions_in_box(int N, int n);
// all μ ≺ λ, lexicographically decreasing
std::vector<Partition> interlaced_below(const Partition& lam);
// all μ ⊂ λ, lexicographically decreasing
std::vector<Partition> contained_in(const Partition& lam);

// (z;q,t;p)_λ = ∏_i (z t^{1-i};q,p)_{λ_i}
ScaledComplex partition_factorial(cplx z, const Partition& lam, const Context& ctx);
ScaledComplex partition_factorial_den(cplx z, const Partition& lam, const Context& ctx);
ScaledComplex partition_factorial(const std::vector<cplx>& zs, const Partition& lam,
                                  const Context& ctx);
ScaledComplex partition_factorial_den(const std::vector<cplx>& zs, const Partition& lam,
                                      const Context& ctx);

// C^-_λ(z) = ∏_{(i,j)∈λ} θ(z q^{λ_i-j} t^{λ'_j-i})
ScaledComplex c_minus(cplx z, const Partition& lam, const Context& ctx);
// C^+_λ(z) = ∏_{(i,j)∈λ} θ(z q^{λ_i+j-1} t^{2-λ'_j-i})
ScaledComplex c_plus(cplx z, const Partition& lam, const Context& ctx);

// Δ_λ(a | b_1,…,b_k) =
//   (pqa)_{2λ²} (b_1,…,b_k)_λ / (C^-_λ(t, pq) C^+_λ(a, pqa/t) (pqa/b_1,…,pqa/b_k)_λ)
ScaledComplex delta_lambda(cplx a, const std::vector<cplx>& bs, const Partition& lam,
                           const Context& ctx);

}  // namespace ellhyp
