#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eval_command.hpp"
#include "ellhyp/config.hpp"
#include "ellhyp/errors.hpp"
#include "ellhyp/harness.hpp"
#include "ellhyp/registry.hpp"
#include "ellhyp/report_json.hpp"

using namespace ellhyp;

namespace {

// integer data of the identities; everything else given to --param is complex
bool is_int_param(const std::string& name) {
    static const std::vector<std::string> ints{"n", "N", "m", "M", "variant", "branch"};
    for (const auto& i : ints)
        if (name == i) return true;
    return false;
}

std::string line(const IdentityReport& r) {
    char res[32];
    std::snprintf(res, sizeof res, "%.3e", r.residual);
    std::string dims;
    for (const auto& [k, v] : r.dims) dims += " " + k + "=" + std::to_string(v);
    std::string out = status_name(r.status);
    for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out += "  " + r.id + "  seed=" + std::to_string(r.seed) + dims;
    if (r.status == Status::skipped)
        out += "  (" + r.skip_reason + ")";
    else
        out += "  residual=" + std::string(res);
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

int run_suite_cmd(SuiteConfig cfg, const std::string& config_path, const std::vector<std::string>& select, int reps,
                  long long offset, double tol_scale, int max_n, int threads, bool timing, bool perturb,
                  const std::string& json_path, bool quiet) {
    if (!config_path.empty()) cfg = load_config_file(config_path, cfg);
    if (!select.empty()) cfg.select = select;
    if (reps > 0) cfg.reps = reps;
    if (offset != 0) cfg.seed_offset = offset;
    if (tol_scale > 0) cfg.tol_scale = tol_scale;
    if (max_n > 0) cfg.max_n = max_n;
    if (threads > 0) cfg.threads = threads;
    if (timing) cfg.timing = true;
    if (perturb) cfg.perturb_solved = true;
    SuiteResult res = run_suite(Registry::instance(), cfg);
    if (!quiet)
        for (const auto& r : res.reports) std::cout << line(r) << "\n";
    std::cout << "pass " << res.summary.pass << "  fail " << res.summary.fail << "  skip " << res.summary.skip;
    if (cfg.timing) std::cout << "  wall " << res.summary.wall_ms << " ms";
    std::cout << "\n";
    if (!json_path.empty()) write_file(json_path, to_json(res));
    return res.any_failed() ? 1 : 0;
}

int run_check_cmd(const std::string& id, long long seed, const std::vector<std::string>& params, bool perturb,
                  const std::string& json_path) {
    const Registry& reg = Registry::instance();
    std::map<std::string, long long> ints;
    std::map<std::string, cplx> values;
    for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("--param expects name=value, got '" + p + "'");
        std::string name = p.substr(0, eq), value = p.substr(eq + 1);
        if (is_int_param(name)) {
            try {
                ints[name] = std::stoll(value);
            } catch (const std::logic_error&) {
                throw ParseError("--param " + name + " needs an integer");
            }
        } else {
            values[name] = parse_complex(value);
        }
    }
    SuiteConfig cfg;
    cfg.perturb_solved = perturb;
    IdentityReport r;
    try {
        r = run_identity(reg, id, seed, cfg, ints, values);
    } catch (const ConstraintError& e) {
        std::cerr << "ellverify: " << e.what() << "\n";
        return 2;
    }
    std::cout << line(r) << "\n";
    if (r.status != Status::skipped) {
        std::cout << "lhs  " << format_complex(r.lhs.mantissa()) << " * 2^" << r.lhs.exponent() << "\n";
        std::cout << "rhs  " << format_complex(r.rhs.mantissa()) << " * 2^" << r.rhs.exponent() << "\n";
        for (const auto& s : r.solved) std::cout << "solved " << s.symbol << " from " << s.constraint << "\n";
    } else if (!r.message.empty()) {
        std::cout << r.message << "\n";
    }
    if (!json_path.empty()) write_file(json_path, to_json(r));
    return r.status == Status::fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of elliptic hypergeometric identities"};
    app.require_subcommand(1);

    // suite
    auto* suite = app.add_subcommand("suite", "run the registered identities over seeded draws");
    std::vector<std::string> select;
    int reps = 0, max_n = 0, threads = 0;
    long long offset = 0;
    double tol_scale = 0;
    std::string json_path, config_path;
    bool timing = false, perturb = false, quiet = false;
    suite->add_option("--select", select, "glob over identity ids (repeatable)");
    suite->add_option("--reps", reps, "seeds per identity (default: manifest)")->check(CLI::PositiveNumber);
    suite->add_option("--seed-offset", offset, "shift applied to seeds 1..reps");
    suite->add_option("--tol-scale", tol_scale, "multiplier on every tolerance")->check(CLI::PositiveNumber);
    suite->add_option("--json", json_path, "write the JSON report here");
    suite->add_option("--max-n", max_n, "cap on the rank n")->check(CLI::PositiveNumber);
    suite->add_option("--config", config_path, "key = value configuration file")->check(CLI::ExistingFile);
    suite->add_option("--threads", threads, "worker threads (default: all cores)");
    suite->add_flag("--timing", timing, "record wall times (makes the JSON run-dependent)");
    suite->add_flag("--perturb-solved", perturb, "debug: multiply each first solved symbol by 1 + 1e-3");
    suite->add_flag("--quiet", quiet, "print only the summary");

    // check
    auto* check = app.add_subcommand("check", "evaluate one identity at one seed");
    std::string check_id;
    long long check_seed = 1;
    std::vector<std::string> params;
    bool check_perturb = false;
    std::string check_json;
    check->add_option("id", check_id, "identity id")->required();
    check->add_option("--seed", check_seed, "seed");
    check->add_option("--param", params, "name=value override (repeatable)");
    check->add_flag("--perturb-solved", check_perturb, "debug: perturb the first solved symbol by 1e-3");
    check->add_option("--json", check_json, "write the report here");

    // list
    auto* list = app.add_subcommand("list", "print the registered identity ids");
    std::vector<std::string> list_select{"*"};
    list->add_option("--select", list_select, "glob over identity ids");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a primitive");
    std::string fn;
    eval->add_option("fn", fn, "function")->required()->check(CLI::IsMember(ellverify::eval_functions()));
    eval->allow_extras();
    eval->footer(
        "flags: --z --k --lam --mu --x (comma list) --a --b (list for vseries, deltalambda) --c --d --u --v --n\n"
        "       --p --q --t; complex values as re+imi or mod@phase");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*suite)
            return run_suite_cmd({}, config_path, select, reps, offset, tol_scale, max_n, threads, timing, perturb,
                                 json_path, quiet);
        if (*check) return run_check_cmd(check_id, check_seed, params, check_perturb, check_json);
        if (*list) {
            const Registry& reg = Registry::instance();
            for (const auto& id : reg.select(list_select))
                std::cout << id << "  " << reg.get(id).description << "\n";
            return 0;
        }
        if (*eval) {
            std::map<std::string, std::string> args;
            auto extras = eval->remaining();
            for (std::size_t i = 0; i < extras.size(); ++i) {
                const std::string& k = extras[i];
                if (k.rfind("--", 0) != 0 || i + 1 >= extras.size())
                    throw ParseError("eval expects --name value pairs, got '" + k + "'");
                args[k.substr(2)] = extras[++i];
            }
            std::cout << ellverify::format_value(ellverify::evaluate(fn, args)) << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "ellverify: " << e.what() << "\n" << app.help() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "ellverify: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
