#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "stirperm/cli.hpp"

using namespace stirperm;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("enumerate lines, csv and json")
{
    CHECK(run({"enumerate", "--n", "2"}).out == "1122\n1221\n2211\n");
    CHECK(run({"enumerate", "--n", "3", "--avoid", "213", "--avoid", "1233"}).out.size() == 8 * 7);
    const Run csv = run({"enumerate", "--n", "2", "--stats"});
    CHECK(csv.code == kExitOk);
    CHECK(csv.out == "word,des,asc,plat\n1122,0,1,2\n1221,1,1,1\n2211,1,0,2\n");
    const auto j = nlohmann::json::parse(run({"enumerate", "--n", "2", "--format", "json"}).out);
    CHECK(j == nlohmann::json::array({"1122", "1221", "2211"}));
    CHECK(nlohmann::json::parse(run({"enumerate", "--n", "0", "--format", "json"}).out) == nlohmann::json::array({""}));
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({"enumerate", "--n", "2", "--avoid", "13"}).code == kExitUsage);
    CHECK(run({"enumerate", "--n", "2", "--format", "xml"}).code == kExitUsage);
    CHECK(run({"nope"}).code == kExitUsage);
    CHECK(run({"series", "--eq", "999"}).code == kExitUsage);
    CHECK(run({"biject", "phi", "--input", "221133"}).code == kExitUsage);
    CHECK(run({"verify", "--suite", "nope"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("order limit needs --force")
{
    const Run r = run({"enumerate", "--n", "9"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("--force") != std::string::npos);
}

TEST_CASE("distribution and formulas")
{
    CHECK(run({"eulerian", "--n", "4"}).out == "1 22 58 24\n");
    CHECK(run({"formula", "--id", "kuba-213", "--n", "5"}).out == "273\n");
    const auto j = nlohmann::json::parse(run({"distribution", "--n", "2", "--format", "json"}).out);
    CHECK(j["vars"] == nlohmann::json::array({"p", "q", "r"}));
    CHECK(j["terms"].size() == 3);
}

TEST_CASE("series output")
{
    CHECK(run({"series", "--eq", "213", "--order", "3", "--spec", "p=1,q=1,r=1"}).out == "1\n1\n3\n12\n");
    CHECK(run({"series", "--eq", "prepend11:11,11", "--order", "4", "--spec", "all=1"}).out == "1\n1\n2\n5\n14\n");
    const auto j = nlohmann::json::parse(run({"series", "--eq", "R", "--order", "2", "--format", "json"}).out);
    CHECK(j["order"] == 2);
    CHECK(j["vars"] == nlohmann::json::array({"p", "z"}));
    const auto s = nlohmann::json::parse(run({"series", "--eq", "R", "--order", "2", "--spec", "z=1", "--format", "json"}).out);
    CHECK(s["vars"] == nlohmann::json::array({"p"}));
}

TEST_CASE("bijection commands")
{
    CHECK(run({"biject", "phi", "--input", "1221"}).out == "(-,(-,-,-),-)\n");
    CHECK(run({"biject", "phi", "--direction", "inv", "--input", "(-,(-,-,-),-)"}).out == "1221\n");
    CHECK(run({"biject", "psi", "--input", "1221"}).out == "12;2\n");
    CHECK(run({"biject", "psi", "--direction", "inv", "--input", "12;2"}).out == "1221\n");
    CHECK(run({"biject", "fc", "--input", "465213;3,1,1"}).out == "((())@1(()()())@3)@1\n");
    const Run v = run({"biject", "verify", "--map", "rho", "--n", "4"});
    CHECK(v.code == kExitOk);
    const auto j = nlohmann::json::parse(v.out);
    CHECK(j["failures"] == 0);
    CHECK(j["statistic_transport"] == true);
}

TEST_CASE("verify exit codes")
{
    const Run ok = run({"verify", "--suite", "fibonacci", "--n", "1..6"});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    const Run bad = run({"verify", "--suite", "R", "--n", "3"});
    CHECK(bad.code == kExitVerificationFailed);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(run({"verify", "--suite", "thm1.1", "--n", "1..5"}).code == kExitOk);
}

TEST_CASE("jobs flag and environment override give identical bytes")
{
    const std::vector<std::string> base = {"distribution", "--n", "6", "--avoid", "123", "--format", "json"};
    const Run one = run(base);
    auto with_jobs = base;
    with_jobs.insert(with_jobs.end(), {"--jobs", "4"});
    CHECK(run(with_jobs).out == one.out);
    ::setenv("STIRPERM_JOBS", "3", 1);
    CHECK(run(base).out == one.out);
    ::setenv("STIRPERM_JOBS", "zero", 1);
    CHECK(run(base).code == kExitUsage);
    ::unsetenv("STIRPERM_JOBS");
    CHECK(run(base).out == one.out);
}
