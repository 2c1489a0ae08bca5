#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellhyp/binding.hpp"
#include "ellhyp/registry.hpp"

namespace ellhyp {

struct SuiteConfig {
    std::vector<std::string> select{"*"};
    int reps = 0;                // 0: the manifest's count for each identity
    long long seed_offset = 0;   // seeds are 1..reps shifted by this
    double tol_scale = 1.0;
    std::map<std::string, double> family_tol;  // overrides per family
    int max_n = 3;               // cap on the rank n (and the second rank m)
    int max_N = 3;               // cap on series/box sizes N and M
    std::optional<double> nome_lo, nome_hi;
    int threads = 0;             // 0: hardware concurrency
    bool timing = false;         // wall times in the report; off keeps output byte-stable
    // debug: evaluate with every first solved symbol multiplied by 1 + 1e-3
    bool perturb_solved = false;
};

enum class Status { pass, fail, skipped };

std::string status_name(Status s);

struct IdentityReport {
    std::string id;
    std::string family;
    long long seed = 0;
    std::map<std::string, int> dims;
    std::map<std::string, cplx> params;
    std::map<std::string, std::string> partitions;
    std::vector<SolvedSymbol> solved;
    ScaledComplex lhs, rhs;
    double residual = 0.0;  // NaN when the evaluation produced no number
    double tol = 0.0;
    Status status = Status::skipped;
    std::string skip_reason;  // inadmissible | capped | unsupported-dimension
    std::string message;
    int attempts = 0;
    std::map<std::string, double> diagnostics;

    friend bool operator==(const IdentityReport& a, const IdentityReport& b);
};

struct Summary {
    int pass = 0, fail = 0, skip = 0;
    double wall_ms = 0.0;
    friend bool operator==(const Summary&, const Summary&) = default;
};

struct SuiteResult {
    std::map<std::string, std::string> config_echo;
    std::vector<IdentityReport> reports;  // by id, then seed
    Summary summary;
    bool any_failed() const { return summary.fail > 0; }
    friend bool operator==(const SuiteResult& a, const SuiteResult& b) {
        return a.config_echo == b.config_echo && a.reports == b.reports && a.summary == b.summary;
    }
};

// Evaluation settings for one identity: guard, quadrature tolerance.
EvalEnv default_env(const IdentityDescriptor& d, double tol);

// Dimension set used for a seed: dims[(seed-1) mod size].
std::map<std::string, int> dims_for_seed(const IdentityDescriptor& d, long long seed);

// Deterministic binding for (id, seed). Draws are retried (new sub-seed each
// time) on pole, admissibility and convergence errors; after kMaxAttempts the
// last error is rethrown. `attempts` receives the number of draws used.
ParameterBinding sample_binding(const Registry& reg, const std::string& id, long long seed,
                                const std::map<std::string, int>& dims, int* attempts = nullptr);

inline constexpr int kMaxAttempts = 200;

IdentityReport run_identity(const Registry& reg, const std::string& id, long long seed, const SuiteConfig& cfg);
// Integer overrides replace the dimension set; value overrides replace drawn
// and solved values, after which the constraints are checked (ConstraintError
// escapes unless cfg.perturb_solved is set).
IdentityReport run_identity(const Registry& reg, const std::string& id, long long seed, const SuiteConfig& cfg,
                            const std::map<std::string, long long>& ints, const std::map<std::string, cplx>& values);

SuiteResult run_suite(const Registry& reg, const SuiteConfig& cfg);

// Multiplies the first solved symbol by 1 + rel and evaluates without the
// constraint check. Returns nullopt when the identity has no solved symbol.
std::optional<double> perturbed_residual(const Registry& reg, const std::string& id, const ParameterBinding& b,
                                         const EvalEnv& env, double rel = 1e-3);

std::map<std::string, std::string> echo(const SuiteConfig& cfg);

}  // namespace ellhyp
