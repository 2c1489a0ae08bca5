#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "ellhyp/config.hpp"
#include "ellhyp/errors.hpp"
#include "ellhyp/harness.hpp"
#include "ellhyp/registry.hpp"
#include "ellhyp/report_json.hpp"

using namespace ellhyp;

namespace {

const Registry& reg() { return Registry::instance(); }

SuiteConfig quick(std::vector<std::string> select, int reps = 2) {
    SuiteConfig cfg;
    cfg.select = std::move(select);
    cfg.reps = reps;
    cfg.threads = 1;
    return cfg;
}

// does some seed over one pass of the dimension list fail?
bool fails_somewhere(const std::string& id, const std::map<std::string, long long>& ints) {
    const auto& d = reg().get(id);
    SuiteConfig cfg;
    for (long long s = 1; s <= static_cast<long long>(d.dims.size()); ++s)
        if (run_identity(reg(), id, s, cfg, ints, {}).status == Status::fail) return true;
    return false;
}

}  // namespace

TEST(Registry, IdsAndGlobs) {
    EXPECT_EQ(reg().ids().size(), 61u);
    EXPECT_EQ(reg().select({"degen/*"}).size(), 4u);
    EXPECT_EQ(reg().select({"integrals/CI?"}).size(), 4u);
    EXPECT_TRUE(reg().select({"nothing/*"}).empty());
    EXPECT_TRUE(glob_match("bc/*BINOM", "bc/RECT-BINOM"));
    EXPECT_FALSE(glob_match("bc/?", "bc/PSPEC"));
    EXPECT_THROW(reg().get("bc/NOPE"), Error);
}

TEST(Registry, SolvedSymbolsMatchTheManifest) {
    for (const auto& id : reg().ids()) {
        const auto& d = reg().get(id);
        ParameterBinding b = sample_binding(reg(), id, 1, dims_for_seed(d, 1));
        // the manifest lists the solved symbols over every dimension set
        for (const auto& s : b.solved()) {
            EXPECT_NE(std::find(d.solved_symbols.begin(), d.solved_symbols.end(), s.symbol), d.solved_symbols.end())
                << id << ": " << s.symbol;
            EXPECT_NE(std::find(d.constraints.begin(), d.constraints.end(), s.constraint), d.constraints.end())
                << id << ": " << s.constraint;
        }
        EXPECT_NO_THROW(reg().check_constraints(id, b)) << id;
    }
}

TEST(Sampler, SameSeedSameBinding) {
    for (const char* id : {"series/W", "integrals/CI1", "bc/BINOMCONV"}) {
        const auto& d = reg().get(id);
        EXPECT_EQ(sample_binding(reg(), id, 5, dims_for_seed(d, 5)), sample_binding(reg(), id, 5, dims_for_seed(d, 5)));
        EXPECT_FALSE(sample_binding(reg(), id, 5, dims_for_seed(d, 5)) ==
                     sample_binding(reg(), id, 6, dims_for_seed(d, 5)));
    }
}

TEST(Harness, ConstraintViolationIsReported) {
    SuiteConfig cfg;
    EXPECT_THROW(run_identity(reg(), "series/W", 1, cfg, {}, {{"e", cplx(0.3, 0.1)}}), ConstraintError);
    // free symbols are overridden before the solve, so the binding stays consistent
    EXPECT_EQ(run_identity(reg(), "series/W", 1, cfg, {}, {{"a", cplx(0.3, 0.1)}}).status, Status::pass);
}

TEST(Harness, InadmissibleRankIsSkipped) {
    SuiteConfig cfg;
    IdentityReport r = run_identity(reg(), "integrals/CI3", 1, cfg, {{"n", 2}}, {});
    EXPECT_EQ(r.status, Status::skipped);
    EXPECT_EQ(r.skip_reason, "inadmissible");
}

TEST(Harness, RankCapSkips) {
    SuiteConfig cfg;
    cfg.max_n = 1;
    IdentityReport r = run_identity(reg(), "bc/RECTANGLE", 1, cfg, {{"n", 2}}, {});
    EXPECT_EQ(r.status, Status::skipped);
    EXPECT_EQ(r.skip_reason, "unsupported-dimension");
}

TEST(Harness, EmptySelection) {
    SuiteResult res = run_suite(reg(), quick({"nothing/*"}));
    EXPECT_TRUE(res.reports.empty());
    EXPECT_FALSE(res.any_failed());
}

TEST(Harness, PerturbingSolvedSymbolBreaksEssentialIdentities) {
    SuiteConfig cfg;
    cfg.perturb_solved = true;
    for (const char* id : {"series/W", "series/WT", "bc/BINOMCONV", "bc/ITERATED", "integrals/CI1"}) {
        IdentityReport r = run_identity(reg(), id, 1, cfg);
        EXPECT_EQ(r.status, Status::fail) << id;
        EXPECT_GT(r.residual, 1e-6) << id;
    }
}

TEST(Harness, WrongVariantFails) {
    for (const char* id : {"bc/CONJSYM", "series/AS4", "integrals/CI3", "integrals/CIT3"})
        EXPECT_TRUE(fails_somewhere(id, {{"variant", 1}})) << id;
}

TEST(Harness, OtherBranchStillHolds) {
    SuiteConfig cfg;
    for (const char* id : {"bc/DIFFEQ", "bc/TILDE-DIFFEQ", "integrals/AIT", "integrals/CIT", "integrals/ACIT",
                           "integrals/AIT2", "integrals/CIT2"}) {
        IdentityReport r = run_identity(reg(), id, 1, cfg, {{"branch", 1}}, {});
        EXPECT_EQ(r.status, Status::pass) << id << " residual " << r.residual;
    }
}

TEST(Harness, ThreadCountDoesNotChangeTheReport) {
    SuiteConfig one = quick({"series/*", "bc/B*", "integrals/AI1"}, 3), many = one;
    many.threads = 4;
    EXPECT_EQ(to_json(run_suite(reg(), one)), to_json(run_suite(reg(), many)));
}

TEST(ReportJson, RoundTrip) {
    SuiteResult res = run_suite(reg(), quick({"series/W", "bc/PSPEC", "integrals/CI3"}, 2));
    std::string text = to_json(res);
    SuiteResult back = suite_from_json(text);
    EXPECT_TRUE(back == res);
    EXPECT_EQ(to_json(back), text);
    IdentityReport one = res.reports.front();
    EXPECT_TRUE(report_from_json(to_json(one)) == one);
}

TEST(ReportJson, NanResidualIsNull) {
    SuiteConfig cfg;
    IdentityReport r = run_identity(reg(), "integrals/CI3", 1, cfg, {{"n", 2}}, {});
    EXPECT_NE(to_json(r).find("\"residual\": null"), std::string::npos) << to_json(r);
    EXPECT_TRUE(std::isnan(report_from_json(to_json(r)).residual));
}

TEST(Config, ComplexParsing) {
    EXPECT_EQ(parse_complex("0.5"), cplx(0.5, 0));
    EXPECT_EQ(parse_complex("0.5-0.25i"), cplx(0.5, -0.25));
    EXPECT_EQ(parse_complex("2i"), cplx(0, 2));
    cplx polar = parse_complex("0.5@1.25");
    EXPECT_NEAR(std::abs(polar), 0.5, 1e-15);
    EXPECT_NEAR(std::arg(polar), 1.25, 1e-15);
    EXPECT_THROW(parse_complex("abc"), ParseError);
    EXPECT_EQ(parse_complex(format_complex(cplx(0.1, -1.0 / 3))), cplx(0.1, -1.0 / 3));
}

TEST(Config, KeyValueFile) {
    auto kv = parse_key_values("# comment\nreps = 4\n\nselect = series/*, bc/P*\ntol.bc = 1e-8\n");
    SuiteConfig cfg;
    apply_config(cfg, kv);
    EXPECT_EQ(cfg.reps, 4);
    EXPECT_EQ(cfg.select, (std::vector<std::string>{"series/*", "bc/P*"}));
    EXPECT_EQ(cfg.family_tol.at("bc"), 1e-8);
    EXPECT_THROW(apply_config(cfg, {{"colour", "blue"}}), ParseError);
    EXPECT_THROW(apply_config(cfg, {{"reps", "many"}}), ParseError);
}
