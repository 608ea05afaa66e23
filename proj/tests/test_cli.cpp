#include "affine/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace affine;

namespace {

std::string run_to_string(const RunConfig& cfg, int* status = nullptr) {
    std::ostringstream os;
    const int s = run(cfg, os);
    if (status) *status = s;
    return os.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("identical config gives identical bytes") {
    RunConfig cfg;
    cfg.suite = "weyl";
    cfg.type = "A2";
    cfg.maxlen = 3;
    CHECK(run_to_string(cfg) == run_to_string(cfg));
    cfg.suite = "semiregular";
    CHECK(run_to_string(cfg) == run_to_string(cfg));
}

TEST_CASE("suites pass and report machine lines") {
    RunConfig cfg;
    cfg.suite = "bgg";
    cfg.type = "A1";
    cfg.lambda = "Λ0";
    cfg.N = 8;
    int status = -1;
    const std::string out = run_to_string(cfg, &status);
    CHECK(status == 0);
    CHECK(out.find("EULER bgg Λ0 8 PASS") != std::string::npos);
    cfg.suite = "clifford";
    cfg.n = 3;
    CHECK(run(cfg, std::cout) == 0);
    cfg.suite = "weyl";
    cfg.maxlen = 0;
    const std::string w = run_to_string(cfg);
    CHECK(w.find("COUNT 1\n") != std::string::npos);
    CHECK(w.find("ELT e 0 0\n") != std::string::npos);
}

TEST_CASE("invalid config is a usage error") {
    RunConfig cfg;
    cfg.suite = "nope";
    std::ostringstream os;
    CHECK_THROWS_AS(run(cfg, os), std::invalid_argument);
    cfg.suite = "bgg";
    cfg.N = -1;
    CHECK_THROWS_AS(run(cfg, os), std::invalid_argument);
}

TEST_CASE("a failing suite exits nonzero") {
    const std::string path = "affine_cli_bad_algebra.txt";
    {
        std::ofstream f(path);
        f << "deg 1 : -1\ndeg 2 : -1\nbracket 1 2 : (2, 1)\n";
    }
    RunConfig cfg;
    cfg.suite = "semiregular";
    cfg.algebraFile = path;
    int status = 0;
    const std::string out = run_to_string(cfg, &status);
    CHECK(status == 1);
    CHECK(out.find("CHECK algebra-valid FAIL") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("binary: --out and positional suite") {
    const std::string a = "affine_cli_out_a.txt", b = "affine_cli_out_b.txt";
    const std::string bin = AFFINE_CLI_PATH;
    CHECK(std::system((bin + " weyl --type A1 --maxlen 4 --out " + a).c_str()) == 0);
    CHECK(std::system((bin + " --suite weyl --type A1 --maxlen 4 --out " + b).c_str()) == 0);
    CHECK(!slurp(a).empty());
    CHECK(slurp(a) == slurp(b));
    CHECK(std::system((bin + " bogus > /dev/null 2>&1").c_str()) != 0);
    std::remove(a.c_str());
    std::remove(b.c_str());
}
