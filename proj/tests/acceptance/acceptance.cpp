// One PASS/FAIL line per acceptance criterion. Tolerances and time limits
// are the published ones; the exit status is nonzero when any line fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ellhyp/elliptic.hpp"
#include "ellhyp/harness.hpp"
#include "ellhyp/partition.hpp"
#include "ellhyp/registry.hpp"
#include "ellhyp/report_json.hpp"
#include "oracles.hpp"

using namespace ellhyp;
using oracle::rel_err;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int k, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s  criterion %d  %-22s %s\n", ok ? "PASS" : "FAIL", k, name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

cplx draw(std::mt19937_64& g, double lo, double hi) {
    std::uniform_real_distribution<double> r(std::log(lo), std::log(hi)), ph(-M_PI, M_PI);
    return std::polar(std::exp(r(g)), ph(g));
}

Context nomes(cplx p, cplx q, cplx t = 0.5) {
    Context c;
    c.p = p;
    c.q = q;
    c.t = t;
    return c;
}

// worst relative error of a check over `draws` seeded draws
double worst(int draws, std::uint64_t seed, const std::function<double(std::mt19937_64&)>& check) {
    std::mt19937_64 g(seed);
    double w = 0;
    for (int i = 0; i < draws; ++i) w = std::max(w, check(g));
    return w;
}

void primitives() {
    const double tol = 1e-12;
    auto t0 = Clock::now();
    std::vector<std::pair<const char*, double>> errs;
    errs.emplace_back("theta(pz)", worst(100, 1, [](auto& g) {
        cplx p = draw(g, 0.01, 0.5), z = draw(g, 0.2, 3.0);
        Context c = nomes(p, 0.5);
        return std::max(relative_residual(theta(p * z, c), theta(z, c) * (-1.0 / z)),
                        rel_err(theta(z, c).to_complex(), oracle::theta(z, p)));
    }));
    errs.emplace_back("theta(1/z)", worst(100, 2, [](auto& g) {
        cplx p = draw(g, 0.01, 0.5), z = draw(g, 0.2, 3.0);
        Context c = nomes(p, 0.5);
        return relative_residual(theta(1.0 / z, c), theta(z, c) * (-1.0 / z));
    }));
    errs.emplace_back("gamma reflection", worst(100, 3, [](auto& g) {
        cplx p = draw(g, 0.01, 0.5), q = draw(g, 0.01, 0.5), z = draw(g, 0.3, 0.95);
        Context c = nomes(p, q);
        return std::max(relative_residual(elliptic_gamma(p * q / z, c) * elliptic_gamma(z, c), 1.0),
                        rel_err(elliptic_gamma(z, c).to_complex(), oracle::gamma_log_series(z, p, q)));
    }));
    errs.emplace_back("gamma q-shift", worst(100, 4, [](auto& g) {
        cplx p = draw(g, 0.01, 0.5), q = draw(g, 0.01, 0.5), z = draw(g, 0.3, 2.0);
        Context c = nomes(p, q);
        return relative_residual(elliptic_gamma(q * z, c), theta(z, c) * elliptic_gamma(z, c));
    }));
    errs.emplace_back("gamma p<->q", worst(100, 5, [](auto& g) {
        cplx p = draw(g, 0.01, 0.5), q = draw(g, 0.01, 0.5), z = draw(g, 0.3, 2.0);
        return relative_residual(elliptic_gamma(z, nomes(p, q)), elliptic_gamma(z, nomes(q, p)));
    }));
    double secs = seconds_since(t0), w = 0;
    std::string detail;
    for (const auto& [name, e] : errs) {
        w = std::max(w, e);
        detail += fmt("%.1e ", e).insert(0, std::string(name) + " ");
    }
    report(1, "primitives", w < tol && secs < 5, fmt("max err %.2e (< 1e-12), %.2f s (< 5 s); ", w, secs) + detail);
}

Partition random_partition(std::mt19937_64& g, int max_part, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len), part(1, max_part);
    std::vector<int> v(static_cast<std::size_t>(len(g)));
    for (int& x : v) x = part(g);
    std::sort(v.rbegin(), v.rend());
    return Partition(v);
}

void partitions() {
    const double tol = 1e-11;
    auto t0 = Clock::now();
    double cell = worst(50, 11, [](auto& g) {
        cplx p = draw(g, 0.05, 0.4), q = draw(g, 0.3, 0.9), t = draw(g, 0.3, 0.9), z = draw(g, 0.3, 2.0);
        Partition lam = random_partition(g, 4, 3);
        cplx lib = partition_factorial(z, lam, nomes(p, q, t)).to_complex();
        return std::max(rel_err(lib, oracle::cell_factorial(z, lam, p, q, t)),
                        rel_err(lib, oracle::row_factorial(z, lam, p, q, t)));
    });
    double quasi = worst(50, 12, [](auto& g) {
        cplx p = draw(g, 0.05, 0.4), q = draw(g, 0.3, 0.9), t = draw(g, 0.3, 0.9), z = draw(g, 0.4, 1.5);
        Partition lam = random_partition(g, 3, 3);
        Context c = nomes(p, q, t);
        double w = 0;
        for (int k : {1, 2}) {
            cplx base = oracle::ipow(-z, -lam.weight()) * oracle::ipow(q, -static_cast<int>(lam.conjugate().n_stat())) *
                        oracle::ipow(t, static_cast<int>(lam.n_stat()));
            cplx factor = oracle::ipow(base, k) * oracle::ipow(p, -(k * (k - 1) / 2) * lam.weight());
            w = std::max(w, relative_residual(partition_factorial(oracle::ipow(p, k) * z, lam, c),
                                              partition_factorial(z, lam, c) * factor));
        }
        return w;
    });
    double delta = worst(50, 13, [](auto& g) {
        cplx p = draw(g, 0.05, 0.3), q = draw(g, 0.3, 0.8), t = draw(g, 0.3, 0.8), a = draw(g, 0.3, 0.8);
        std::vector<cplx> bs{draw(g, 0.3, 0.9), draw(g, 0.3, 0.9), draw(g, 0.3, 0.9)};
        Partition lam = random_partition(g, 3, 2);
        cplx lib = delta_lambda(a, bs, lam, nomes(p, q, t)).to_complex();
        int n = std::max(1, lam.length());
        return std::max(rel_err(lib, oracle::delta_explicit(a, bs, lam, n, p, q, t)),
                        rel_err(lib, oracle::delta_explicit(a, bs, lam, n + 2, p, q, t)));
    });
    double secs = seconds_since(t0), w = std::max({cell, quasi, delta});
    report(2, "partitions", w < tol && secs < 10,
           fmt("max err %.2e (< 1e-11), %.2f s (< 10 s); ", w, secs) +
               fmt("cell/row %.1e  quasi-periodicity %.1e  delta compact/explicit %.1e", cell, quasi, delta));
}

struct FamilyRun {
    SuiteResult res;
    double secs = 0;
};

FamilyRun run_family(std::vector<std::string> select) {
    SuiteConfig cfg;
    cfg.select = std::move(select);
    auto t0 = Clock::now();
    FamilyRun f;
    f.res = run_suite(Registry::instance(), cfg);
    f.secs = seconds_since(t0);
    return f;
}

// every report evaluated (no skips) and under its pinned tolerance
struct Tally {
    int pass = 0, fail = 0, skip = 0;
    double worst = 0;
    std::string worst_id;
};

Tally tally(const SuiteResult& res, const std::function<double(const std::string&)>& pinned) {
    Tally t;
    for (const auto& r : res.reports) {
        if (r.status == Status::skipped) {
            ++t.skip;
            continue;
        }
        double ratio = r.residual / pinned(r.id);
        if (!(ratio < 1)) ++t.fail; else ++t.pass;
        if (!(ratio <= t.worst)) {
            t.worst = ratio;
            t.worst_id = r.id;
        }
    }
    return t;
}

std::string tally_text(const Tally& t, double secs, double limit) {
    return fmt("%.0f pass, %.0f fail, ", t.pass, t.fail) + fmt("%.0f skipped, worst residual/tol %.2e", t.skip, t.worst) +
           " (" + t.worst_id + ")" + fmt(", %.1f s (< %.0f s)", secs, limit);
}

void series() {
    FamilyRun f = run_family({"series/*", "degen/*"});
    Tally t = tally(f.res, [](const std::string&) { return 1e-9; });
    const Registry& reg = Registry::instance();
    bool shape = reg.select({"series/*"}).size() == 15 && reg.select({"degen/*"}).size() == 4;
    for (const auto& id : reg.select({"series/*"})) shape = shape && reg.get(id).reps >= 25;
    report(3, "series+degenerations", shape && t.fail == 0 && t.skip == 0 && f.secs < 120,
           "15 identities x 25 seeds + 4 degenerations; " + tally_text(t, f.secs, 120));
}

void integrals() {
    FamilyRun f = run_family({"integrals/*"});
    Tally t = tally(f.res, [](const std::string&) { return 1e-5; });
    const Registry& reg = Registry::instance();
    bool shape = true;
    for (const auto& id : reg.select({"integrals/*"})) {
        const auto& d = reg.get(id);
        shape = shape && d.reps >= 10 && d.nome_hi <= 0.25;
    }
    report(4, "integrals", shape && t.fail == 0 && t.skip == 0 && f.secs < 600,
           "10 seeds each, |p|,|q| <= 0.25, incl. n=1 cross-equality; " + tally_text(t, f.secs, 600));
}

void bc() {
    FamilyRun f = run_family({"bc/*"});
    Tally t = tally(f.res, [](const std::string& id) {
        if (id == "bc/VANISHING") return 1e-12;
        if (id == "bc/ORTHOGONALITY") return 1e-10;
        return 1e-9;
    });
    report(5, "bc-theory", t.fail == 0 && t.skip == 0 && f.secs < 300,
           "vanishing 1e-12, orthogonality 1e-10, rest 1e-9; " + tally_text(t, f.secs, 300));
}

void determinism() {
    SuiteConfig cfg;
    auto t0 = Clock::now();
    std::string a = to_json(run_suite(Registry::instance(), cfg));
    std::string b = to_json(run_suite(Registry::instance(), cfg));
    report(6, "determinism", !a.empty() && a == b,
           fmt("two full runs, %.0f bytes each, identical: ", static_cast<double>(a.size())) + (a == b ? "yes" : "no") +
               fmt(", %.1f s", seconds_since(t0)));
}

void negative_controls() {
    const Registry& reg = Registry::instance();
    std::vector<std::string> essential, structural, unsolved;
    for (const auto& id : reg.ids()) {
        const auto& d = reg.get(id);
        if (d.solved_symbols.empty())
            unsolved.push_back(id);
        else if (d.constraint_essential)
            essential.push_back(id);
        else
            structural.push_back(id);
    }
    SuiteConfig cfg;
    cfg.select = essential;
    cfg.perturb_solved = true;
    SuiteResult res = run_suite(reg, cfg);
    int broken = 0, held = 0, skipped = 0;
    double smallest = INFINITY;
    std::string smallest_id;
    for (const auto& r : res.reports) {
        if (r.status == Status::skipped) {
            ++skipped;
            continue;
        }
        if (r.residual > 1e-6) ++broken; else ++held;
        if (!(r.residual >= smallest)) {
            smallest = r.residual;
            smallest_id = r.id;
        }
    }
    std::string excluded;
    for (const auto& id : structural) excluded += (excluded.empty() ? "" : ",") + id;
    std::string detail = fmt("%.0f identities, %.0f perturbed draws with residual > 1e-6, %.0f held", essential.size(),
                             broken, held) +
                         fmt(", %.0f skipped; smallest %.2e", skipped, smallest) + " (" + smallest_id + ")";
    detail += "; constraint not essential (identity holds off it): " + (excluded.empty() ? "none" : excluded);
    if (!unsolved.empty()) detail += fmt("; %.0f carry no balancing constraint", unsolved.size());
    report(7, "negative controls", held == 0 && broken > 0, detail);
}

}  // namespace

int main() {
    primitives();
    partitions();
    series();
    integrals();
    bc();
    determinism();
    negative_controls();
    std::printf("%d of 7 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
