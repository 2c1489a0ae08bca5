#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ellhyp/binding.hpp"
#include "ellhyp/context.hpp"
#include "ellhyp/integrals.hpp"
#include "ellhyp/scaled.hpp"

namespace ellhyp {

// Both sides of one identity evaluation.
struct Sides {
    ScaledComplex lhs;
    ScaledComplex rhs;
    // Matrix and vanishing checks report their own residual (max entry error);
    // otherwise the relative residual of lhs and rhs is used.
    std::optional<double> residual;
    std::map<std::string, double> diagnostics;
};

struct EvalEnv {
    Context ctx;
    QuadratureOptions quad;
};

// Deterministic parameter source for one (id, seed, attempt).
class Sampler {
public:
    Sampler(std::uint64_t seed, double mod_lo, double mod_hi, double nome_lo, double nome_hi);

    double uniform();                    // [0, 1)
    double uniform(double lo, double hi);
    int integer(int lo, int hi);         // inclusive
    // log-uniform modulus in the parameter range, uniform phase
    cplx param();
    cplx param(double lo, double hi);
    std::vector<cplx> params(std::size_t k);
    // log-uniform modulus in the nome range, uniform phase
    cplx nome();
    // modulus |C|^{1/k} e^{±jitter}, uniform phase: one of k factors whose
    // product is pinned to C
    cplx balanced(int k, cplx C, double jitter = 0.15);
    // random composition of N into r non-negative parts
    std::vector<int> composition(int N, int r);

    double mod_lo() const { return mod_lo_; }
    double mod_hi() const { return mod_hi_; }

private:
    std::mt19937_64 rng_;
    double mod_lo_, mod_hi_, nome_lo_, nome_hi_;
};

struct IdentityBehavior {
    // Binds every free symbol. Integer data (n, N, ...) is already bound.
    std::function<void(Sampler&, ParameterBinding&)> draw;
    // Computes the solved symbols from the constraints; may be empty.
    std::function<void(ParameterBinding&)> solve;
    std::function<Sides(const ParameterBinding&, const EvalEnv&)> eval;
};

struct IdentityDescriptor {
    std::string id;
    std::string family;  // series | integrals | bc
    std::string description;
    double tol = 1e-9;
    int reps = 25;
    std::vector<std::string> constraints;
    std::vector<std::string> free_symbols;
    std::vector<std::string> solved_symbols;
    // false when the identity also holds off the constraint surface (a change
    // of variables, or a sum that is true for generic parameters); the
    // constraint then only names the family and perturbing it breaks nothing
    bool constraint_essential = true;
    // integer data cycled through by seed
    std::vector<std::map<std::string, int>> dims;
    double mod_lo = 0.05, mod_hi = 0.5;
    double nome_lo = 0.05, nome_hi = 0.5;
    IdentityBehavior behavior;

    // largest n or m over the dimension sets
    int max_dim() const;
};

using BehaviorTable = std::map<std::string, IdentityBehavior>;

void register_series_behaviors(BehaviorTable& table);
void register_integral_behaviors(BehaviorTable& table);
void register_bc_behaviors(BehaviorTable& table);

class Registry {
public:
    // Built from the embedded manifest joined with the behavior tables.
    static const Registry& instance();
    Registry(const std::string& manifest_json, BehaviorTable behaviors);

    bool contains(const std::string& id) const { return by_id_.count(id) > 0; }
    const IdentityDescriptor& get(const std::string& id) const;
    const std::vector<std::string>& ids() const { return ids_; }
    // ids matching any of the glob patterns (* and ?), in sorted order
    std::vector<std::string> select(const std::vector<std::string>& globs) const;

    // Re-solves a copy of the binding and compares every solved symbol.
    // Throws ConstraintError naming the first violated constraint.
    void check_constraints(const std::string& id, const ParameterBinding& b, double rel_tol = 1e-12) const;

    Sides evaluate(const std::string& id, const ParameterBinding& b, const EvalEnv& env,
                   bool check = true) const;

private:
    std::vector<std::string> ids_;
    std::map<std::string, IdentityDescriptor> by_id_;
};

bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace ellhyp
