#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#ifndef ELLVERIFY_PATH
#error "ELLVERIFY_PATH must point at the ellverify binary"
#endif

namespace {

struct Outcome {
    int code = -1;
    std::string out;
};

Outcome run(const std::string& args) {
    Outcome r;
    std::string cmd = std::string(ELLVERIFY_PATH) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), got);
    int status = pclose(f);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// eval prints "mantissa x 10^e" and then the plain value on the last line
std::string last_line(std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s.substr(s.rfind('\n') + 1);
}

}  // namespace

TEST(Cli, EvalTheta) {
    Outcome r = run("eval theta --z 0.5 --p 0");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(last_line(r.out), "0.5") << r.out;
}

TEST(Cli, EvalPartitionEdgeCases) {
    Outcome binom = run("eval binom --lam 2,1 --mu \"\" --a 0.3 --b 0.4 --p 0.1 --q 0.4 --t 0.3");
    EXPECT_EQ(binom.code, 0) << binom.out;
    EXPECT_EQ(last_line(binom.out), "1") << binom.out;
    Outcome rstar = run("eval rstar --lam 1,1,1 --x 0.5,0.7 --a 0.3 --b 0.4 --p 0.1 --q 0.4 --t 0.3");
    EXPECT_EQ(rstar.code, 0) << rstar.out;
    EXPECT_EQ(last_line(rstar.out), "0") << rstar.out;
}

TEST(Cli, UnknownFunctionAndBadFlags) {
    EXPECT_NE(run("eval nosuchfn --z 1").code, 0);
    EXPECT_EQ(run("eval theta --z").code, 2);
    EXPECT_NE(run("").code, 0);
}

TEST(Cli, CheckPassesAndReportsSolvedSymbols) {
    Outcome r = run("check series/W --seed 3");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.rfind("PASS", 0), 0u) << r.out;
    EXPECT_NE(r.out.find("solved "), std::string::npos) << r.out;
}

TEST(Cli, CheckConstraintViolationExitsTwo) { EXPECT_EQ(run("check series/W --param e=0.3+0.1i").code, 2); }

TEST(Cli, CheckInadmissibleIsSkipped) {
    Outcome r = run("check integrals/CI3 --param n=2");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("SKIPPED"), std::string::npos) << r.out;
}

TEST(Cli, SuiteExitCodes) {
    EXPECT_EQ(run("suite --select series/W --reps 2 --quiet").code, 0);
    EXPECT_EQ(run("suite --select series/W --reps 2 --quiet --perturb-solved").code, 1);
    Outcome empty = run("suite --select nothing/* --quiet");
    EXPECT_EQ(empty.code, 0);
    EXPECT_NE(empty.out.find("pass 0  fail 0  skip 0"), std::string::npos) << empty.out;
}

TEST(Cli, List) {
    Outcome r = run("list --select bc/PSPEC*");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("bc/PSPEC-TILDE"), std::string::npos);
}
