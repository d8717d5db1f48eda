#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "whitlat/cli.hpp"
#include "whitlat/render.hpp"

#include "json.hpp"

using namespace whitlat;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("whittaker subcommand") {
    const CliResult r =
        run({"whittaker", "--r", "3", "--lam", "2,1,2", "--w1", "s2", "--w2", "s2"});
    CHECK(r.code == 0);
    CHECK(r.out == "v*z1^2*z2*z3^2\n");
}

TEST_CASE("partition subcommand") {
    const CliResult r = run(
        {"partition", "--r", "3", "--lam", "5,2,0", "--w1", "1,2,3", "--w2", "1,2,3"});
    CHECK(r.code == 0);
    CHECK(r.out == "z1^7*z2^3\n");
}

TEST_CASE("json output and round trip") {
    const CliResult r = run({"whittaker", "--r", "2", "--lam", "1,0", "--w1", "s1",
                             "--format", "json"});
    REQUIRE(r.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["query"]["kind"] == "iwahori");
    CHECK(doc["meta"].contains("states"));
    CHECK(doc["meta"].contains("elapsed_ms"));
    const LaurentPoly parsed = poly_from_json(2, doc["result"]);
    const CliResult plain =
        run({"whittaker", "--r", "2", "--lam", "1,0", "--w1", "s1"});
    CHECK(to_string((parsed)) + "\n" == plain.out);
}

TEST_CASE("determinism across runs") {
    const std::vector<std::string> args{"macdonald", "--kind", "hall-littlewood",
                                        "--r",       "3",      "--lam",
                                        "3,1,0",     "--format", "json"};
    const CliResult a = run(args);
    const CliResult b = run(args);
    REQUIRE(a.code == 0);
    nlohmann::json da = nlohmann::json::parse(a.out);
    nlohmann::json db = nlohmann::json::parse(b.out);
    da["meta"]["elapsed_ms"] = 0;
    db["meta"]["elapsed_ms"] = 0;
    CHECK(da == db);
}

TEST_CASE("verify subcommands") {
    const CliResult ok = run({"verify", "ybe", "--mode", "monochrome", "--r", "5"});
    CHECK(ok.code == 0);
    CHECK(ok.out.substr(0, 4) == "PASS");

    const CliResult thm =
        run({"verify", "theorem", "tokuyama", "--r", "2", "--max-parts", "2"});
    CHECK(thm.code == 0);
}

TEST_CASE("macdonald subcommand") {
    const CliResult r =
        run({"macdonald", "--kind", "schur", "--r", "2", "--lam", "1,0"});
    CHECK(r.code == 0);
    CHECK(r.out == "z1 + z2\n");
}

TEST_CASE("bad input exits 1") {
    CHECK(run({"whittaker", "--r", "2", "--lam", "1,0,0"}).code == 1);
    CHECK(run({"whittaker", "--r", "2", "--lam", "1,0", "--w1", "2,2"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({"partition", "--r", "2", "--lam", "0,-1"}).code == 1);
    // non-almost-dominant boundaries are allowed and evaluate to zero
    const CliResult z = run({"partition", "--r", "2", "--lam", "0,1"});
    CHECK(z.code == 0);
    CHECK(z.out == "0\n");
}

TEST_CASE("parahoric through the cli") {
    const CliResult r = run({"whittaker", "--r", "3", "--lam", "0,0,0", "--J", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "-v*z1^-1*z2 + 1\n");
}

TEST_CASE("out files are byte-identical across runs") {
    const std::string path1 = "cli_golden_run1.json";
    const std::string path2 = "cli_golden_run2.json";
    for (const std::string& p : {path1, path2}) {
        const CliResult r = run({"partition", "--r", "3", "--lam", "2,1,2", "--w1",
                                 "s2", "--w2", "s2", "--out", p});
        REQUIRE(r.code == 0);
    }
    auto slurp = [](const std::string& p) {
        std::ifstream f(p);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    const std::string a = slurp(path1);
    const std::string b = slurp(path2);
    CHECK(!a.empty());
    CHECK(a == b);
    std::remove(path1.c_str());
    std::remove(path2.c_str());
}
