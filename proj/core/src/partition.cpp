#include "ellhyp/partition.hpp"

#include <cctype>
#include <sstream>

#include "ellhyp/elliptic.hpp"
#include "ellhyp/errors.hpp"

namespace ellhyp {

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw DomainError("partition: negative part");
        if (i > 0 && parts[i] > parts[i - 1]) throw DomainError("partition: parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw ParseError("partition: missing ']' in '" + text + "'");
        s = s.substr(1, s.size() - 2);
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw ParseError("partition: empty part in '" + text + "'");
        for (char c : tok)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("partition: bad part '" + tok + "'");
        parts.push_back(std::stoi(tok));
    }
    try {
        return Partition(std::move(parts));
    } catch (const DomainError& e) {
        throw ParseError(std::string(e.what()) + " in '" + text + "'");
    }
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

int Partition::weight() const {
    int w = 0;
    for (int x : parts_) w += x;
    return w;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> c(static_cast<std::size_t>(parts_[0]), 0);
    for (int x : parts_)
        for (int j = 0; j < x; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

long long Partition::n_stat() const {
    long long s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<long long>(i) * parts_[i];
    return s;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu(i) > (*this)(i)) return false;
    return true;
}

bool Partition::interlaces(const Partition& mu) const {
    int L = std::max(length(), mu.length()) + 1;
    for (int i = 1; i <= L; ++i)
        if (!((*this)(i) >= mu(i) && mu(i) >= (*this)(i + 1))) return false;
    return true;
}

std::vector<std::pair<int, int>> Partition::cells() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= (*this)(i); ++j) out.emplace_back(i, j);
    return out;
}

Partition Partition::doubled_square() const {
    std::vector<int> out;
    for (int x : parts_) {
        out.push_back(2 * x);
        out.push_back(2 * x);
    }
    return Partition(std::move(out));
}

Partition rectangle(int N, int n) {
    if (N < 0 || n < 0) throw DomainError("rectangle: negative size");
    return Partition(std::vector<int>(static_cast<std::size_t>(N > 0 ? n : 0), N));
}

namespace {

// Enumerates vectors v with lo[i] <= v[i] <= hi[i], v weakly decreasing,
// larger values first.
void enumerate(const std::vector<int>& lo, const std::vector<int>& hi, std::vector<int>& cur,
               std::vector<Partition>& out) {
    std::size_t i = cur.size();
    if (i == lo.size()) {
        out.emplace_back(cur);
        return;
    }
    int top = hi[i];
    if (i > 0) top = std::min(top, cur[i - 1]);
    for (int v = top; v >= lo[i]; --v) {
        cur.push_back(v);
        enumerate(lo, hi, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(int N, int n) {
    if (N < 0 || n < 0) throw DomainError("partitions_in_box: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate(std::vector<int>(static_cast<std::size_t>(n), 0),
              std::vector<int>(static_cast<std::size_t>(n), N), cur, out);
    return out;
}

std::vector<Partition> interlaced_below(const Partition& lam) {
    std::vector<int> lo, hi;
    for (int i = 1; i <= lam.length(); ++i) {
        lo.push_back(lam(i + 1));
        hi.push_back(lam(i));
    }
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate(lo, hi, cur, out);
    return out;
}

std::vector<Partition> contained_in(const Partition& lam) {
    std::vector<int> lo(static_cast<std::size_t>(lam.length()), 0);
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate(lo, lam.parts(), cur, out);
    return out;
}

ScaledComplex partition_factorial(cplx z, const Partition& lam, const Context& ctx) {
    ScaledComplex r(1.0);
    cplx zi = z;
    for (int i = 1; i <= lam.length(); ++i) {
        r *= shifted_factorial(zi, lam(i), ctx);
        zi /= ctx.t;
    }
    return r;
}

ScaledComplex partition_factorial_den(cplx z, const Partition& lam, const Context& ctx) {
    ScaledComplex r(1.0);
    cplx zi = z;
    for (int i = 1; i <= lam.length(); ++i) {
        r *= shifted_factorial_den(zi, lam(i), ctx);
        zi /= ctx.t;
    }
    return r;
}

ScaledComplex partition_factorial(const std::vector<cplx>& zs, const Partition& lam,
                                  const Context& ctx) {
    ScaledComplex r(1.0);
    for (cplx z : zs) r *= partition_factorial(z, lam, ctx);
    return r;
}

ScaledComplex partition_factorial_den(const std::vector<cplx>& zs, const Partition& lam,
                                      const Context& ctx) {
    ScaledComplex r(1.0);
    for (cplx z : zs) r *= partition_factorial_den(z, lam, ctx);
    return r;
}

ScaledComplex c_minus(cplx z, const Partition& lam, const Context& ctx) {
    Partition lc = lam.conjugate();
    ScaledComplex r(1.0);
    for (auto [i, j] : lam.cells())
        r *= theta(z * ipow(ctx.q, lam(i) - j) * ipow(ctx.t, lc(j) - i), ctx);
    return r;
}

ScaledComplex c_plus(cplx z, const Partition& lam, const Context& ctx) {
    Partition lc = lam.conjugate();
    ScaledComplex r(1.0);
    for (auto [i, j] : lam.cells())
        r *= theta(z * ipow(ctx.q, lam(i) + j - 1) * ipow(ctx.t, 2 - lc(j) - i), ctx);
    return r;
}

namespace {

ScaledComplex c_minus_den(cplx z, const Partition& lam, const Context& ctx) {
    Partition lc = lam.conjugate();
    ScaledComplex r(1.0);
    for (auto [i, j] : lam.cells())
        r *= theta_den(z * ipow(ctx.q, lam(i) - j) * ipow(ctx.t, lc(j) - i), ctx);
    return r;
}

ScaledComplex c_plus_den(cplx z, const Partition& lam, const Context& ctx) {
    Partition lc = lam.conjugate();
    ScaledComplex r(1.0);
    for (auto [i, j] : lam.cells())
        r *= theta_den(z * ipow(ctx.q, lam(i) + j - 1) * ipow(ctx.t, 2 - lc(j) - i), ctx);
    return r;
}

}  // namespace

ScaledComplex delta_lambda(cplx a, const std::vector<cplx>& bs, const Partition& lam,
                           const Context& ctx) {
    if (lam.empty()) return ScaledComplex(1.0);
    const cplx pq = ctx.p * ctx.q;
    ScaledComplex num = partition_factorial(pq * a, lam.doubled_square(), ctx);
    num *= partition_factorial(bs, lam, ctx);
    ScaledComplex den = c_minus_den(ctx.t, lam, ctx) * c_minus_den(pq, lam, ctx);
    den *= c_plus_den(a, lam, ctx) * c_plus_den(pq * a / ctx.t, lam, ctx);
    for (cplx b : bs) den *= partition_factorial_den(pq * a / b, lam, ctx);
    return num / den;
}

}  // namespace ellhyp
