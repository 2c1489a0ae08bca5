#include "ellhyp/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "ellhyp/errors.hpp"

namespace ellhyp {

std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

bool operator==(const IdentityReport& a, const IdentityReport& b) {
    auto same = [](double x, double y) { return (std::isnan(x) && std::isnan(y)) || x == y; };
    return a.id == b.id && a.family == b.family && a.seed == b.seed && a.dims == b.dims && a.params == b.params &&
           a.partitions == b.partitions && a.solved == b.solved && a.lhs == b.lhs && a.rhs == b.rhs &&
           same(a.residual, b.residual) && a.tol == b.tol && a.status == b.status &&
           a.skip_reason == b.skip_reason && a.message == b.message && a.attempts == b.attempts &&
           a.diagnostics == b.diagnostics;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Bounds {
    double nome_lo, nome_hi;
};

Bounds bounds_for(const IdentityDescriptor& d, const SuiteConfig* cfg) {
    Bounds b{d.nome_lo, d.nome_hi};
    if (cfg && cfg->nome_lo) b.nome_lo = *cfg->nome_lo;
    if (cfg && cfg->nome_hi) b.nome_hi = *cfg->nome_hi;
    return b;
}

// One draw + solve for attempt k. Value overrides are applied after the draw
// and win over solved values.
ParameterBinding attempt_binding(const IdentityDescriptor& d, long long seed, int k,
                                 const std::map<std::string, int>& dims, const Bounds& bounds,
                                 const std::map<std::string, cplx>* values = nullptr) {
    std::uint64_t s = splitmix(fnv1a(d.id) ^ splitmix(static_cast<std::uint64_t>(seed)) ^
                               splitmix(static_cast<std::uint64_t>(k) + 0x51ed));
    Sampler sampler(s, d.mod_lo, d.mod_hi, bounds.nome_lo, bounds.nome_hi);
    ParameterBinding b;
    for (const auto& [name, v] : dims) b.set_int(name, v);
    d.behavior.draw(sampler, b);
    if (values)
        for (const auto& [name, v] : *values) b.set(name, v);
    if (d.behavior.solve) d.behavior.solve(b);
    if (values)
        for (const auto& [name, v] : *values) b.set(name, v);
    return b;
}

bool over_cap(const std::map<std::string, int>& dims, const SuiteConfig& cfg) {
    for (const auto& [k, v] : dims) {
        if ((k == "n" || k == "m") && v > cfg.max_n) return true;
        if ((k == "N" || k == "M") && v > cfg.max_N) return true;
    }
    return false;
}

double tolerance(const IdentityDescriptor& d, const SuiteConfig& cfg) {
    auto it = cfg.family_tol.find(d.family);
    return (it != cfg.family_tol.end() ? it->second : d.tol) * cfg.tol_scale;
}

void perturb_first_solved(ParameterBinding& b, double rel) {
    if (b.solved().empty()) return;
    const std::string& s = b.solved().front().symbol;
    b.set(s, b.get(s) * (1.0 + rel));
}

}  // namespace

EvalEnv default_env(const IdentityDescriptor&, double tol) {
    EvalEnv env;
    env.ctx.factor_guard = 1e-10;
    env.quad.tol = std::min(1e-9, tol * 1e-3);
    env.quad.threads = 1;
    return env;
}

std::map<std::string, int> dims_for_seed(const IdentityDescriptor& d, long long seed) {
    long long k = static_cast<long long>(d.dims.size());
    long long i = ((seed - 1) % k + k) % k;
    return d.dims[static_cast<std::size_t>(i)];
}

ParameterBinding sample_binding(const Registry& reg, const std::string& id, long long seed,
                                const std::map<std::string, int>& dims, int* attempts) {
    const auto& d = reg.get(id);
    Bounds bounds = bounds_for(d, nullptr);
    for (int k = 0;; ++k) {
        try {
            ParameterBinding b = attempt_binding(d, seed, k, dims, bounds);
            if (attempts) *attempts = k + 1;
            return b;
        } catch (const PoleError&) {
            if (k + 1 >= kMaxAttempts) throw;
        } catch (const AdmissibilityError&) {
            if (k + 1 >= kMaxAttempts) throw;
        }
    }
}

namespace {

IdentityReport run_impl(const Registry& reg, const std::string& id, long long seed, const SuiteConfig& cfg,
                        const std::map<std::string, long long>* int_over, const std::map<std::string, cplx>* val_over) {
    const auto& d = reg.get(id);
    IdentityReport r;
    r.id = id;
    r.family = d.family;
    r.seed = seed;
    r.dims = dims_for_seed(d, seed);
    if (int_over)
        for (const auto& [k, v] : *int_over) r.dims[k] = static_cast<int>(v);
    r.tol = tolerance(d, cfg);
    r.residual = std::numeric_limits<double>::quiet_NaN();
    if (over_cap(r.dims, cfg)) {
        r.status = Status::skipped;
        r.skip_reason = "unsupported-dimension";
        return r;
    }
    const EvalEnv env = default_env(d, r.tol);
    const Bounds bounds = bounds_for(d, &cfg);
    auto t0 = std::chrono::steady_clock::now();
    std::string last_kind, last_msg;
    for (int k = 0; k < kMaxAttempts; ++k) {
        r.attempts = k + 1;
        try {
            ParameterBinding b = attempt_binding(d, seed, k, r.dims, bounds, val_over);
            if (cfg.perturb_solved)
                perturb_first_solved(b, 1e-3);
            else if (val_over && !val_over->empty())
                reg.check_constraints(id, b);  // ConstraintError propagates
            Sides s = reg.evaluate(id, b, env, false);
            r.params = b.values();
            r.partitions = b.partitions();
            r.solved = b.solved();
            r.lhs = s.lhs;
            r.rhs = s.rhs;
            r.residual = s.residual ? *s.residual : relative_residual(s.lhs, s.rhs);
            r.diagnostics = s.diagnostics;
            r.status = r.residual < r.tol ? Status::pass : Status::fail;
            if (cfg.timing)
                r.diagnostics["ms"] =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            return r;
        } catch (const PoleError& e) {
            last_kind = "inadmissible";
            last_msg = e.what();
        } catch (const AdmissibilityError& e) {
            last_kind = "inadmissible";
            last_msg = e.what();
        } catch (const ConvergenceError& e) {
            last_kind = "capped";
            last_msg = e.what();
        }
    }
    r.status = Status::skipped;
    r.skip_reason = last_kind;
    r.message = last_msg;
    return r;
}

}  // namespace

IdentityReport run_identity(const Registry& reg, const std::string& id, long long seed, const SuiteConfig& cfg) {
    return run_impl(reg, id, seed, cfg, nullptr, nullptr);
}

IdentityReport run_identity(const Registry& reg, const std::string& id, long long seed, const SuiteConfig& cfg,
                            const std::map<std::string, long long>& ints, const std::map<std::string, cplx>& values) {
    return run_impl(reg, id, seed, cfg, &ints, &values);
}

SuiteResult run_suite(const Registry& reg, const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult out;
    out.config_echo = echo(cfg);
    std::vector<std::pair<std::string, long long>> tasks;
    for (const auto& id : reg.select(cfg.select)) {
        int reps = cfg.reps > 0 ? cfg.reps : reg.get(id).reps;
        for (int s = 1; s <= reps; ++s) tasks.emplace_back(id, s + cfg.seed_offset);
    }
    out.reports.resize(tasks.size());
    unsigned nthreads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::thread::hardware_concurrency();
    nthreads = std::max(1u, std::min<unsigned>(nthreads, static_cast<unsigned>(tasks.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
            out.reports[i] = run_identity(reg, tasks[i].first, tasks[i].second, cfg);
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    if (!tasks.empty()) worker();
    for (auto& th : pool) th.join();
    for (const auto& r : out.reports) {
        if (r.status == Status::pass) ++out.summary.pass;
        else if (r.status == Status::fail) ++out.summary.fail;
        else ++out.summary.skip;
    }
    if (cfg.timing)
        out.summary.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::optional<double> perturbed_residual(const Registry& reg, const std::string& id, const ParameterBinding& b,
                                         const EvalEnv& env, double rel) {
    if (b.solved().empty()) return std::nullopt;
    ParameterBinding c = b;
    perturb_first_solved(c, rel);
    Sides s = reg.evaluate(id, c, env, false);
    return s.residual ? *s.residual : relative_residual(s.lhs, s.rhs);
}

std::map<std::string, std::string> echo(const SuiteConfig& cfg) {
    std::map<std::string, std::string> e;
    std::string sel;
    for (const auto& s : cfg.select) sel += (sel.empty() ? "" : ",") + s;
    e["select"] = sel;
    e["reps"] = std::to_string(cfg.reps);
    e["seed_offset"] = std::to_string(cfg.seed_offset);
    e["tol_scale"] = num(cfg.tol_scale);
    e["max_n"] = std::to_string(cfg.max_n);
    e["max_N"] = std::to_string(cfg.max_N);
    if (cfg.nome_lo) e["nome_lo"] = num(*cfg.nome_lo);
    if (cfg.nome_hi) e["nome_hi"] = num(*cfg.nome_hi);
    for (const auto& [fam, tol] : cfg.family_tol) e["tol." + fam] = num(tol);
    e["timing"] = cfg.timing ? "true" : "false";
    e["perturb_solved"] = cfg.perturb_solved ? "true" : "false";
    return e;
}

}  // namespace ellhyp
