#include "ellhyp/registry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "ellhyp/errors.hpp"
#include "manifest_data.hpp"

namespace ellhyp {

using nlohmann::json;

Sampler::Sampler(std::uint64_t seed, double mod_lo, double mod_hi, double nome_lo, double nome_hi)
    : rng_(seed), mod_lo_(mod_lo), mod_hi_(mod_hi), nome_lo_(nome_lo), nome_hi_(nome_hi) {}

// Fixed bit recipe rather than std::uniform_real_distribution, whose output
// is implementation-defined.
double Sampler::uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

double Sampler::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Sampler::integer(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(rng_() % span);
}

cplx Sampler::param(double lo, double hi) {
    double r = std::exp(uniform(std::log(lo), std::log(hi)));
    return std::polar(r, uniform(-std::numbers::pi, std::numbers::pi));
}

cplx Sampler::param() { return param(mod_lo_, mod_hi_); }

std::vector<cplx> Sampler::params(std::size_t k) {
    std::vector<cplx> v;
    for (std::size_t i = 0; i < k; ++i) v.push_back(param());
    return v;
}

cplx Sampler::nome() { return param(nome_lo_, nome_hi_); }

cplx Sampler::balanced(int k, cplx C, double jitter) {
    double r = std::pow(std::abs(C), 1.0 / k) * std::exp(uniform(-jitter, jitter));
    return std::polar(r, uniform(-std::numbers::pi, std::numbers::pi));
}

std::vector<int> Sampler::composition(int N, int r) {
    std::vector<int> k(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < N; ++i) ++k[static_cast<std::size_t>(integer(0, r - 1))];
    return k;
}

int IdentityDescriptor::max_dim() const {
    int m = 0;
    for (const auto& d : dims)
        for (const char* key : {"n", "m"})
            if (auto it = d.find(key); it != d.end()) m = std::max(m, it->second);
    return m;
}

bool glob_match(const std::string& pattern, const std::string& text) {
    std::size_t p = 0, s = 0, star = std::string::npos, mark = 0;
    while (s < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[s])) {
            ++p;
            ++s;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = s;
        } else if (star != std::string::npos) {
            p = star + 1;
            s = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

namespace {

std::vector<std::string> strings(const json& j, const char* key) {
    std::vector<std::string> out;
    if (j.contains(key))
        for (const auto& s : j.at(key)) out.push_back(s.get<std::string>());
    return out;
}

BehaviorTable default_behaviors() {
    BehaviorTable t;
    register_series_behaviors(t);
    register_integral_behaviors(t);
    register_bc_behaviors(t);
    return t;
}

}  // namespace

Registry::Registry(const std::string& manifest_json, BehaviorTable behaviors) {
    json doc;
    try {
        doc = json::parse(manifest_json);
    } catch (const json::exception& e) {
        throw ParseError(std::string("manifest: ") + e.what());
    }
    const json& defaults = doc.at("defaults");
    for (const auto& e : doc.at("identities")) {
        IdentityDescriptor d;
        d.id = e.at("id").get<std::string>();
        d.family = e.at("family").get<std::string>();
        const json& fam = defaults.at(d.family);
        d.description = e.value("description", "");
        d.tol = e.value("tol", fam.at("tol").get<double>());
        d.reps = e.value("reps", fam.at("reps").get<int>());
        auto range = e.value("mod_range", fam.at("mod_range"));
        d.mod_lo = range.at(0).get<double>();
        d.mod_hi = range.at(1).get<double>();
        auto nrange = e.value("nome_range", fam.at("nome_range"));
        d.nome_lo = nrange.at(0).get<double>();
        d.nome_hi = nrange.at(1).get<double>();
        d.constraints = strings(e, "constraints");
        d.free_symbols = strings(e, "free");
        d.solved_symbols = strings(e, "solved");
        d.constraint_essential = e.value("constraint_essential", true);
        for (const auto& dim : e.at("dims")) {
            std::map<std::string, int> m;
            for (auto it = dim.begin(); it != dim.end(); ++it) m[it.key()] = it.value().get<int>();
            d.dims.push_back(std::move(m));
        }
        if (d.dims.empty()) d.dims.emplace_back();
        auto b = behaviors.find(d.id);
        if (b == behaviors.end()) throw DomainError("registry: manifest entry without evaluator: " + d.id);
        d.behavior = std::move(b->second);
        behaviors.erase(b);
        if (by_id_.count(d.id)) throw DomainError("registry: duplicate id " + d.id);
        ids_.push_back(d.id);
        by_id_.emplace(d.id, std::move(d));
    }
    if (!behaviors.empty()) throw DomainError("registry: evaluator without manifest entry: " + behaviors.begin()->first);
    std::sort(ids_.begin(), ids_.end());
}

const Registry& Registry::instance() {
    static const Registry reg(detail::kManifestJson, default_behaviors());
    return reg;
}

const IdentityDescriptor& Registry::get(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) throw DomainError("unknown identity id '" + id + "'");
    return it->second;
}

std::vector<std::string> Registry::select(const std::vector<std::string>& globs) const {
    std::vector<std::string> out;
    for (const auto& id : ids_)
        for (const auto& g : globs)
            if (glob_match(g, id)) {
                out.push_back(id);
                break;
            }
    return out;
}

void Registry::check_constraints(const std::string& id, const ParameterBinding& b, double rel_tol) const {
    const auto& d = get(id);
    if (!d.behavior.solve) return;
    ParameterBinding fresh = b;
    d.behavior.solve(fresh);
    for (const auto& s : fresh.solved()) {
        if (!b.has(s.symbol)) throw ConstraintError("symbol '" + s.symbol + "' is unbound; required by " + s.constraint,
                                                    s.constraint);
        cplx want = fresh.get(s.symbol), have = b.get(s.symbol);
        if (std::abs(want - have) > rel_tol * std::abs(want))
            throw ConstraintError("constraint violated: " + s.constraint, s.constraint);
    }
}

Sides Registry::evaluate(const std::string& id, const ParameterBinding& b, const EvalEnv& env, bool check) const {
    const auto& d = get(id);
    if (check) check_constraints(id, b);
    return d.behavior.eval(b, env);
}

}  // namespace ellhyp
