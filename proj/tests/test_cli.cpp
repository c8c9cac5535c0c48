#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kBin = DISCCALC_BIN;
const std::string kData = DISC_DATA_DIR;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string out_file = "/tmp/disc_cli_test_output.txt";
    const std::string cmd = kBin + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string bundle(const std::string& name) {
    return kData + "/" + name + ".bundle";
}

}  // namespace

TEST_CASE("normal form command") {
    // y*x picks up the deformation scalar i on the quantum plane at i.
    const auto r = run("nf " + bundle("quantum_plane_24") + " 'y*x'");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "zeta(4,1)*x*y"));

    const auto r2 = run("nf " + bundle("quantum_plane_22") + " 'y*x'");
    CHECK(r2.exit_code == 0);
    CHECK(contains(r2.output, "-x*y"));
}

TEST_CASE("confluence command") {
    const auto r = run("confluence --degree 6 " + bundle("cubic"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "0 unresolved"));
}

TEST_CASE("hilbert command") {
    const auto r = run("hilbert --degree 10 " + bundle("cubic"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "PASS"));
}

TEST_CASE("disc command") {
    const auto r = run("disc " + bundle("quantum_plane_22"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "X^2*Y^2"));

    // The fast path must not change the result.
    const auto slow = run("disc --no-fast-path " + bundle("quantum_plane_22"));
    CHECK(slow.exit_code == 0);
    CHECK(slow.output == r.output);
}

TEST_CASE("exit codes") {
    // 0: success (covered above).  1: unusable input.  2: failed checks.
    const auto missing = run("disc /nonexistent/path.bundle");
    CHECK(missing.exit_code == 1);

    const auto bad_expr = run("nf " + bundle("cubic") + " 'x +'");
    CHECK(bad_expr.exit_code == 1);

    const auto usage = run("frobnicate " + bundle("cubic"));
    CHECK(usage.exit_code != 0);

    // A bundle whose expected discriminant is wrong must fail with 2.
    const std::string bad_path = "/tmp/disc_cli_bad.bundle";
    {
        std::ofstream out(bad_path);
        out << "id: bad\n\n[algebra]\ngenerators: x y\ndegrees: 1 1\n"
               "relation: y*x -> -x*y\nhilbert: 1/((1-t)^2)\n\n"
               "[central]\nX: x^2\nY: y^2\n\n[basis]\nauto\n\n"
               "[expected]\ndisc: X^5*Y^5\n";
    }
    const auto wrong = run("disc " + bad_path);
    CHECK(wrong.exit_code == 2);
    CHECK(contains(wrong.output, "FAIL"));
    std::remove(bad_path.c_str());

    // A malformed bundle is rejected with 1.
    const std::string broken_path = "/tmp/disc_cli_broken.bundle";
    {
        std::ofstream out(broken_path);
        out << "id: broken\n\n[algebra]\ngenerators: x\nrelation: nonsense\n";
    }
    const auto broken = run("disc " + broken_path);
    CHECK(broken.exit_code == 1);
    std::remove(broken_path.c_str());
}

TEST_CASE("verify suites through the CLI") {
    CHECK(run("verify " + bundle("quantum_plane_22") + " main").exit_code == 0);
    CHECK(run("verify " + bundle("s2") + " reflection").exit_code == 0);
    CHECK(run("verify " + bundle("s2") + " smash").exit_code == 0);
}

TEST_CASE("json reports are byte-identical across runs") {
    const std::string j1 = "/tmp/disc_cli_a.json";
    const std::string j2 = "/tmp/disc_cli_b.json";
    const auto r1 = run("disc --out " + j1 + " " + bundle("quantum_plane_22"));
    const auto r2 = run("disc --out " + j2 + " " + bundle("quantum_plane_22"));
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    const std::string a = slurp(j1);
    const std::string b = slurp(j2);
    CHECK_FALSE(a.empty());
    CHECK(a == b);
    CHECK(contains(a, "\"schema\""));
    CHECK(contains(a, "disc-report/1"));
    std::remove(j1.c_str());
    std::remove(j2.c_str());
}
