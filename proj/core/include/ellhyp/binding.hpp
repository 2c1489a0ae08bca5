#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellhyp/context.hpp"
#include "ellhyp/partition.hpp"
#include "ellhyp/scaled.hpp"

namespace ellhyp {

// Records that `symbol` was computed from the balancing constraint `constraint`.
struct SolvedSymbol {
    std::string symbol;
    std::string constraint;
    friend bool operator==(const SolvedSymbol& a, const SolvedSymbol& b) {
        return a.symbol == b.symbol && a.constraint == b.constraint;
    }
};

// Named assignment of an identity's symbols. Indexed families are stored
// flat: x_1..x_n live under "x1".."xn".
class ParameterBinding {
public:
    void set(const std::string& name, cplx v);
    cplx get(const std::string& name) const;
    bool has(const std::string& name) const { return values_.count(name) > 0; }
    void erase(const std::string& name) { values_.erase(name); }

    void set_int(const std::string& name, long long v) { ints_[name] = v; }
    long long get_int(const std::string& name) const;
    long long get_int(const std::string& name, long long fallback) const;
    bool has_int(const std::string& name) const { return ints_.count(name) > 0; }

    void set_vec(const std::string& prefix, const std::vector<cplx>& v);
    std::vector<cplx> vec(const std::string& prefix, std::size_t count) const;
    std::vector<int> int_vec(const std::string& prefix, std::size_t count) const;
    void set_int_vec(const std::string& prefix, const std::vector<int>& v);

    void set_partition(const std::string& name, const Partition& lam) { partitions_[name] = lam.to_string(); }
    Partition partition(const std::string& name) const;
    bool has_partition(const std::string& name) const { return partitions_.count(name) > 0; }

    void mark_solved(const std::string& symbol, const std::string& constraint);
    const std::vector<SolvedSymbol>& solved() const { return solved_; }
    void clear_solved() { solved_.clear(); }

    const std::map<std::string, cplx>& values() const { return values_; }
    const std::map<std::string, long long>& ints() const { return ints_; }
    const std::map<std::string, std::string>& partitions() const { return partitions_; }

    // base with p, q, t replaced by the bound values when present
    Context context(const Context& base) const;

    friend bool operator==(const ParameterBinding& a, const ParameterBinding& b) {
        return a.values_ == b.values_ && a.ints_ == b.ints_ && a.partitions_ == b.partitions_ &&
               a.solved_ == b.solved_;
    }

private:
    std::map<std::string, cplx> values_;
    std::map<std::string, long long> ints_;
    std::map<std::string, std::string> partitions_;
    std::vector<SolvedSymbol> solved_;
};

}  // namespace ellhyp
