#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "amcurve/curve.hpp"
#include "amcurve/serialize.hpp"

using json = nlohmann::json;
using namespace amc;

namespace {

std::string env_or_fail(const char* name) {
    const char* v = std::getenv(name);
    REQUIRE_MESSAGE(v != nullptr, "environment variable ", std::string(name), " must be set");
    return v;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE_MESSAGE(f.good(), "cannot read ", path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string out_path = "cli_test_out_" + std::to_string(counter++) + ".tmp";
    std::string cmd = env_or_fail("AMCURVE_CLI") + std::string(" ") + args + " > " + out_path +
                      " 2> " + out_path + ".err";
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(raw);
    r.out = slurp(out_path);
    std::remove(out_path.c_str());
    std::remove((out_path + ".err").c_str());
    return r;
}

std::string data(const std::string& name) {
    return env_or_fail("AMCURVE_DATA") + std::string("/curves/") + name;
}

} // namespace

TEST_CASE("genus report matches the committed golden file byte for byte") {
    RunResult r = run_cli("curve genus --curve data/curves/classical_am_p3.json --deterministic");
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp("tests/golden/classical_genus.json"));
}

TEST_CASE("aut claim golden file") {
    RunResult r = run_cli("aut claim --curve data/curves/classical_am_p3.json --deterministic");
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp("tests/golden/classical_aut_claim.json"));
}

TEST_CASE("deterministic runs are byte-identical; timestamps only without the flag") {
    std::string args = "curve validate --curve " + data("pair_q3.json") + " --deterministic";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    RunResult c = run_cli("curve validate --curve " + data("pair_q3.json"));
    CHECK(json::parse(c.out).contains("timestamp"));
    CHECK(!json::parse(a.out).contains("timestamp"));
}

TEST_CASE("CLI count equals the direct library call") {
    RunResult r = run_cli("curve count --k 2 --curve " + data("classical_am_p3.json") +
                          " --deterministic");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CurveFile cf = curve_from_json(slurp(data("classical_am_p3.json")));
    CHECK(doc["results"]["rational_places"]["value"].get<std::int64_t>() ==
          rational_places(*cf.am, 2));
}

TEST_CASE("zeta on a genus-64 curve is refused with exit code 3") {
    RunResult r = run_cli("curve zeta --curve " + data("pair_q9.json"));
    CHECK(r.exit_code == 3);
}

TEST_CASE("prank pipeline agrees with zeta") {
    RunResult r = run_cli("curve prank --curve " + data("classical_am_p3.json") +
                          " --deterministic");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["results"]["p_rank"]["value"] == 4);
    CHECK(doc["status"] == "pass");
}

TEST_CASE("usage and parse errors exit with code 2") {
    CHECK(run_cli("curve genus").exit_code == 2);              // no input at all
    CHECK(run_cli("curve genus --curve /nonexistent").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    // z curve with p = 3 cites the constraint
    CHECK(run_cli("quotient zcurve --curve " + data("y_q3_a1.json")).exit_code == 2);
}

TEST_CASE("validate reports failure with exit 1 on an invalid curve") {
    std::ofstream bad("cli_bad_curve.tmp");
    bad << R"({"format":"amcurve/1","kind":"am","tower":{"p":3,"n":1,"m":2},
      "L1":{"p":3,"n":1,"coeff_field":{"p":3,"d":1,"seed":0},"coeffs":[[1],[0],[1]]},
      "L2":{"p":3,"n":1,"coeff_field":{"p":3,"d":1,"seed":0},"coeffs":[[1],[0],[1]]}})";
    bad.close();
    RunResult r = run_cli("curve validate --curve cli_bad_curve.tmp --deterministic");
    std::remove("cli_bad_curve.tmp");
    CHECK(r.exit_code == 1);
    json doc = json::parse(r.out);
    CHECK(doc["status"] == "fail");
}

TEST_CASE("aut search over GF(3) on the classical curve") {
    RunResult r = run_cli("aut search --ambient 1 --curve " + data("classical_am_p3.json") +
                          " --deterministic");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["results"]["found"]["value"] == 36);
    CHECK(doc["results"]["swap_shape_present"] == true); // xi is among the 36
    // a too-small budget is refused with exit 3
    RunResult tiny = run_cli("aut search --ambient 1 --budget 5 --curve " +
                             data("classical_am_p3.json"));
    CHECK(tiny.exit_code == 3);
}

TEST_CASE("quotient diagonal emits a loadable Y-curve of genus 2") {
    RunResult r = run_cli("quotient diagonal --curve " + data("classical_am_p3.json") +
                          " --deterministic --out cli_diag_y.tmp");
    CHECK(r.exit_code == 0);
    CurveFile cf = curve_from_json(slurp("cli_diag_y.tmp"));
    std::remove("cli_diag_y.tmp");
    REQUIRE(cf.ycurve.has_value());
    CHECK(genus(*cf.ycurve) == 2);
}

TEST_CASE("quotient yaut with search prints the 4q line") {
    RunResult r = run_cli("quotient yaut --search --ambient 2 --curve " + data("y_q3_a1.json") +
                          " --deterministic");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["results"]["search"]["found"] == 12);
    CHECK(doc["results"]["search"]["expected_4q"] == 12);
}

TEST_CASE("inline construction: curve new is deterministic and validates") {
    RunResult a = run_cli("curve new --p 3 --n 1 --m 2 --seed 11 --deterministic");
    RunResult b = run_cli("curve new --p 3 --n 1 --m 2 --seed 11 --deterministic");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    json doc = json::parse(a.out);
    CHECK(doc["results"]["genus"]["value"] == 64);
}
