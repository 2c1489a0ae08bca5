#include "ellhyp/binding.hpp"

#include <cmath>

#include "ellhyp/errors.hpp"

namespace ellhyp {

void ParameterBinding::set(const std::string& name, cplx v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw DomainError("binding: non-finite value for '" + name + "'");
    values_[name] = v;
}

cplx ParameterBinding::get(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw DomainError("binding: symbol '" + name + "' is not bound");
    return it->second;
}

long long ParameterBinding::get_int(const std::string& name) const {
    auto it = ints_.find(name);
    if (it == ints_.end()) throw DomainError("binding: integer '" + name + "' is not bound");
    return it->second;
}

long long ParameterBinding::get_int(const std::string& name, long long fallback) const {
    auto it = ints_.find(name);
    return it == ints_.end() ? fallback : it->second;
}

void ParameterBinding::set_vec(const std::string& prefix, const std::vector<cplx>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) set(prefix + std::to_string(i + 1), v[i]);
}

std::vector<cplx> ParameterBinding::vec(const std::string& prefix, std::size_t count) const {
    std::vector<cplx> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(get(prefix + std::to_string(i + 1)));
    return out;
}

std::vector<int> ParameterBinding::int_vec(const std::string& prefix, std::size_t count) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(static_cast<int>(get_int(prefix + std::to_string(i + 1))));
    return out;
}

void ParameterBinding::set_int_vec(const std::string& prefix, const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) set_int(prefix + std::to_string(i + 1), v[i]);
}

Partition ParameterBinding::partition(const std::string& name) const {
    auto it = partitions_.find(name);
    if (it == partitions_.end()) throw DomainError("binding: partition '" + name + "' is not bound");
    return Partition::parse(it->second);
}

void ParameterBinding::mark_solved(const std::string& symbol, const std::string& constraint) {
    for (auto& s : solved_)
        if (s.symbol == symbol) {
            s.constraint = constraint;
            return;
        }
    solved_.push_back({symbol, constraint});
}

Context ParameterBinding::context(const Context& base) const {
    Context c = base;
    if (has("p")) c.p = get("p");
    if (has("q")) c.q = get("q");
    if (has("t")) c.t = get("t");
    return c;
}

}  // namespace ellhyp
