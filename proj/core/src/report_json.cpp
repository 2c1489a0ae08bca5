#include "ellhyp/report_json.hpp"

#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "ellhyp/errors.hpp"

namespace ellhyp {

using nlohmann::json;

namespace {

json real(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double real_from(const json& j) { return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>(); }

json scaled(const ScaledComplex& z) {
    return json::array({real(z.mantissa().real()), real(z.mantissa().imag()), z.exponent()});
}

ScaledComplex scaled_from(const json& j) {
    return ScaledComplex::from_parts({real_from(j.at(0)), real_from(j.at(1))}, j.at(2).get<std::int64_t>());
}

Status status_from(const std::string& s) {
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    if (s == "skipped") return Status::skipped;
    throw ParseError("report: unknown status '" + s + "'");
}

json report_json(const IdentityReport& r) {
    json params = json::object(), diag = json::object(), solved = json::array();
    for (const auto& [k, v] : r.params) params[k] = json::array({real(v.real()), real(v.imag()), 0});
    for (const auto& [k, v] : r.diagnostics) diag[k] = real(v);
    for (const auto& s : r.solved) solved.push_back({{"symbol", s.symbol}, {"constraint", s.constraint}});
    return {{"id", r.id},
            {"family", r.family},
            {"seed", r.seed},
            {"dims", r.dims},
            {"params", params},
            {"partitions", r.partitions},
            {"solved", solved},
            {"lhs", scaled(r.lhs)},
            {"rhs", scaled(r.rhs)},
            {"residual", real(r.residual)},
            {"tol", r.tol},
            {"status", status_name(r.status)},
            {"skip_reason", r.skip_reason},
            {"message", r.message},
            {"attempts", r.attempts},
            {"diagnostics", diag}};
}

IdentityReport report_from(const json& j) {
    IdentityReport r;
    r.id = j.at("id").get<std::string>();
    r.family = j.at("family").get<std::string>();
    r.seed = j.at("seed").get<long long>();
    r.dims = j.at("dims").get<std::map<std::string, int>>();
    for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
        r.params[it.key()] = {real_from(it.value().at(0)), real_from(it.value().at(1))};
    r.partitions = j.at("partitions").get<std::map<std::string, std::string>>();
    for (const auto& s : j.at("solved"))
        r.solved.push_back({s.at("symbol").get<std::string>(), s.at("constraint").get<std::string>()});
    r.lhs = scaled_from(j.at("lhs"));
    r.rhs = scaled_from(j.at("rhs"));
    r.residual = real_from(j.at("residual"));
    r.tol = j.at("tol").get<double>();
    r.status = status_from(j.at("status").get<std::string>());
    r.skip_reason = j.at("skip_reason").get<std::string>();
    r.message = j.at("message").get<std::string>();
    r.attempts = j.at("attempts").get<int>();
    for (auto it = j.at("diagnostics").begin(); it != j.at("diagnostics").end(); ++it)
        r.diagnostics[it.key()] = real_from(it.value());
    return r;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

}  // namespace

std::string to_json(const SuiteResult& result) {
    json reports = json::array();
    for (const auto& r : result.reports) reports.push_back(report_json(r));
    json doc = {{"version", kReportVersion},
                {"config_echo", result.config_echo},
                {"reports", reports},
                {"summary",
                 {{"pass", result.summary.pass},
                  {"fail", result.summary.fail},
                  {"skip", result.summary.skip},
                  {"wall_ms", result.summary.wall_ms}}}};
    return doc.dump(2) + "\n";
}

SuiteResult suite_from_json(const std::string& text) {
    json doc = parse(text);
    try {
        if (doc.at("version").get<int>() != kReportVersion) throw ParseError("report: unsupported version");
        SuiteResult r;
        r.config_echo = doc.at("config_echo").get<std::map<std::string, std::string>>();
        for (const auto& e : doc.at("reports")) r.reports.push_back(report_from(e));
        const json& s = doc.at("summary");
        r.summary.pass = s.at("pass").get<int>();
        r.summary.fail = s.at("fail").get<int>();
        r.summary.skip = s.at("skip").get<int>();
        r.summary.wall_ms = s.at("wall_ms").get<double>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

std::string to_json(const IdentityReport& report) { return report_json(report).dump(2) + "\n"; }

IdentityReport report_from_json(const std::string& text) {
    json doc = parse(text);
    try {
        return report_from(doc);
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

}  // namespace ellhyp
