#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_raw(const std::string& cmdline) {
    std::string out_file = "cli_stdout.tmp";
    std::string cmd = cmdline + " > " + out_file + " 2> cli_stderr.tmp";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    int code = -1;
    if (rc != -1) code = WEXITSTATUS(rc);
    return {code, ss.str()};
}

RunResult run(const std::string& args) { return run_raw(std::string(DWPC_BIN) + " " + args); }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kCatalog = std::string(DWPC_CATALOG_DIR) + "/full.json";

}  // namespace

TEST_CASE("verify: full catalog config runs clean and writes a report") {
    RunResult r = run("verify --config " + kCatalog + " --samples 8 --seed 42 --out cli_report.json --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(slurp("cli_report.json"));
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("seed") == 42);
    CHECK(j.at("summary").at("fail") == 0);
    CHECK(j.at("results").size() > 100);
}

TEST_CASE("verify: missing config exits 2 with a diagnostic") {
    RunResult r = run("verify --config missing.json");
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify: bad tolerance syntax exits 2") {
    RunResult r = run("verify --samples 2 --tol nonsense");
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify: --only restricts the report to the requested keys") {
    RunResult r = run("verify --only lemma2 --samples 5 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    int lemma2_generic = 0;
    for (const auto& row : j.at("results")) {
        std::string key = row.at("identity").get<std::string>();
        CHECK(key.rfind("lemma2", 0) == 0);
        if (row.at("manifold") == "generic-pb") ++lemma2_generic;
    }
    CHECK(lemma2_generic == 6);
}

TEST_CASE("verify: an unachievable gate tolerance forces exit 1") {
    RunResult r = run("verify --samples 3 --tol oracle.curvature-relation=1e-30");
    CHECK(r.exit_code == 1);
}

TEST_CASE("verify: identical seeds give byte-identical reports") {
    RunResult a = run("verify --samples 6 --seed 7 --json");
    RunResult b = run("verify --samples 6 --seed 7 --json");
    CHECK(a.exit_code == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
    RunResult c = run("verify --samples 6 --seed 8 --json");
    CHECK(a.out != c.out);
}

TEST_CASE("verify: report bytes do not depend on the thread count") {
    RunResult one = run_raw("env DWP_THREADS=1 " DWPC_BIN " verify --samples 5 --seed 3 --json");
    RunResult four = run_raw("env DWP_THREADS=4 " DWPC_BIN " verify --samples 5 --seed 3 --json");
    CHECK(one.exit_code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("catalog: identity listing") {
    RunResult r = run("catalog --identities");
    CHECK(r.exit_code == 0);
    int keys = 0;
    std::istringstream ss(r.out);
    std::string line;
    while (std::getline(ss, line))
        if (line.find("lemma") != std::string::npos || line.find("prop-") != std::string::npos ||
            line.find("cor-") != std::string::npos)
            ++keys;
    CHECK(keys >= 40);

    RunResult f = run("catalog --identities --filter cor-ricci");
    std::istringstream fs(f.out);
    while (std::getline(fs, line)) {
        if (line.find("  ") != 0) continue;  // header lines
        CHECK(line.find("cor-ricci") != std::string::npos);
    }
}

TEST_CASE("catalog: manifold listing") {
    RunResult r = run("catalog --manifolds");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("hyperbolic-plane") != std::string::npos);
    CHECK(r.out.find("generic-pb") != std::string::npos);
    CHECK(r.out.find("round-sphere") != std::string::npos);
}

TEST_CASE("curvature: hyperbolic plane at the box center") {
    RunResult r = run("curvature --manifold hyperbolic-plane --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("scalar_lc").get<double>() == doctest::Approx(-2.0).epsilon(1e-8));
    CHECK(j.at("scalar_ssmc").get<double>() == doctest::Approx(-2.0).epsilon(1e-8));
    bool saw_lemma4 = false;
    for (const auto& f : j.at("closed_forms"))
        if (f.at("identity") == "lemma4.scalar") {
            saw_lemma4 = true;
            CHECK(f.at("closed").get<double>() == doctest::Approx(-2.0).epsilon(1e-8));
            CHECK(f.at("oracle").get<double>() == doctest::Approx(-2.0).epsilon(1e-8));
        }
    CHECK(saw_lemma4);
}

TEST_CASE("curvature: flat entry shows vanishing curvature blocks") {
    RunResult r = run("curvature --manifold trivial-product --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    for (const auto& v : j.at("riemann_lc")) CHECK(v.get<double>() == 0.0);
    CHECK(j.at("scalar_lc").get<double>() == 0.0);
}

TEST_CASE("curvature: out-of-domain point exits 2") {
    RunResult r = run("curvature --manifold hyperbolic-plane --point 5.0,0.0");
    CHECK(r.exit_code == 2);
    RunResult u = run("curvature --manifold no-such-entry");
    CHECK(u.exit_code == 2);
}

TEST_CASE("shipped catalog file matches the built-in registry") {
    auto j = nlohmann::json::parse(slurp(kCatalog));
    std::vector<std::string> ids;
    for (const auto& m : j.at("manifolds")) ids.push_back(m.at("id").get<std::string>());
    CHECK(ids == std::vector<std::string>{"trivial-product", "hyperbolic-plane", "generic-pb",
                                          "generic-pf", "interval-sphere", "interval-sphere-warped",
                                          "round-sphere"});
}
