#include "eval_command.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ellhyp/bc.hpp"
#include "ellhyp/config.hpp"
#include "ellhyp/elliptic.hpp"
#include "ellhyp/errors.hpp"
#include "ellhyp/partition.hpp"
#include "ellhyp/series.hpp"

namespace ellverify {

using namespace ellhyp;

namespace {

class Args {
public:
    explicit Args(const std::map<std::string, std::string>& a) : a_(a) {}

    const std::string& raw(const std::string& k) const {
        auto it = a_.find(k);
        if (it == a_.end()) throw ParseError("missing --" + k);
        return it->second;
    }
    cplx z(const std::string& k) const { return parse_complex(raw(k)); }
    cplx z(const std::string& k, cplx fallback) const { return a_.count(k) ? z(k) : fallback; }
    int i(const std::string& k) const {
        try {
            return std::stoi(raw(k));
        } catch (const std::logic_error&) {
            throw ParseError("--" + k + " needs an integer");
        }
    }
    int i(const std::string& k, int fallback) const { return a_.count(k) ? i(k) : fallback; }
    std::vector<cplx> list(const std::string& k) const {
        std::vector<cplx> out;
        std::istringstream in(raw(k));
        std::string item;
        while (std::getline(in, item, ','))
            if (item.find_first_not_of(" []") != std::string::npos) {
                auto b = item.find_first_not_of(" ["), e = item.find_last_not_of(" ]");
                out.push_back(parse_complex(item.substr(b, e - b + 1)));
            }
        return out;
    }
    Partition lam(const std::string& k) const { return Partition::parse(raw(k)); }

private:
    const std::map<std::string, std::string>& a_;
};

Context context(const Args& a) {
    Context c;
    c.p = a.z("p", 0.0);
    c.q = a.z("q", c.q);
    c.t = a.z("t", c.t);
    c.validate();
    return c;
}

}  // namespace

const std::vector<std::string>& eval_functions() {
    static const std::vector<std::string> names{"theta",   "gamma",   "qfac",  "partfac", "deltaA",     "deltaC",
                                                "vseries", "rstar",   "rtilde", "binom",  "deltalambda"};
    return names;
}

ScaledComplex evaluate(const std::string& fn, const std::map<std::string, std::string>& raw) {
    Args a(raw);
    const Context c = context(a);
    if (fn == "theta") return theta(a.z("z"), c);
    if (fn == "gamma") return elliptic_gamma(a.z("z"), c);
    if (fn == "qfac") return shifted_factorial(a.z("z"), a.i("k"), c);
    if (fn == "partfac") return partition_factorial(a.z("z"), a.lam("lam"), c);
    if (fn == "deltaA") return delta_A(a.list("x"), c);
    if (fn == "deltaC") return delta_C(a.list("x"), c);
    if (fn == "vseries") return v_series(a.i("n"), a.z("a"), a.list("b"), c);
    if (fn == "rstar") return r_star(a.lam("lam"), a.list("x"), a.z("a"), a.z("b"), c);
    if (fn == "rtilde")
        return r_tilde(a.lam("lam"), a.list("x"), {a.z("a"), a.z("b"), a.z("c"), a.z("d"), a.z("u"), a.z("v")}, c);
    if (fn == "binom") return elliptic_binomial(a.lam("lam"), a.lam("mu"), a.z("a"), a.z("b"), c, a.i("n", 0));
    if (fn == "deltalambda") return delta_lambda(a.z("a"), a.list("b"), a.lam("lam"), c);
    throw ParseError("unknown function '" + fn + "'");
}

std::string format_value(const ScaledComplex& v) {
    if (v.is_zero()) return "0 x 10^0\n0";
    double l10 = v.log2_abs() * std::log10(2.0);
    double e10 = std::floor(l10);
    cplx m10 = std::polar(std::pow(10.0, l10 - e10), std::arg(v.mantissa()));
    char buf[160];
    std::snprintf(buf, sizeof buf, "(%.15g%+.15gi) x 10^%.0f", m10.real(), m10.imag(), e10);
    std::string out = buf;
    if (std::abs(e10) < 300) {
        cplx d = v.to_complex();
        if (d.imag() == 0.0)
            std::snprintf(buf, sizeof buf, "%.17g", d.real());
        else
            std::snprintf(buf, sizeof buf, "%.17g%+.17gi", d.real(), d.imag());
        out += "\n";
        out += buf;
    }
    return out;
}

}  // namespace ellverify
