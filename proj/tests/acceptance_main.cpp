// Acceptance suite: one pass/fail line per criterion, every tolerance and
// threshold pinned in code. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "amcurve/autgroup.hpp"
#include "amcurve/curve.hpp"
#include "amcurve/quotient.hpp"
#include "amcurve/serialize.hpp"

using namespace amc;

namespace {

std::string g_cli;
std::string g_data;
int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int criterion, bool ok, const std::string& what, double elapsed, double limit) {
    bool in_time = limit <= 0.0 || elapsed < limit;
    bool pass = ok && in_time;
    std::printf("%s  criterion %d: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str(), elapsed,
                limit > 0.0 ? (" < " + std::to_string(static_cast<int>(limit)) + " s limit").c_str()
                            : "");
    if (!pass) ++g_failures;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("acceptance: cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

AMCurve load_am(const std::string& name) {
    return *curve_from_json(slurp(g_data + "/curves/" + name)).am;
}

// 1. Genus formula: 20 seeded random curves per tower, RH value (q-1)^2.
void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    struct Case {
        std::int64_t p;
        int n, m;
        std::int64_t expect;
    };
    const std::vector<Case> cases{{3, 1, 1, 4}, {3, 1, 2, 64}, {3, 2, 1, 64}, {5, 1, 1, 16}};
    bool ok = true;
    for (const Case& c : cases)
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            AMCurve curve = random_am_curve(c.p, c.n, c.m, seed);
            if (genus(curve) != c.expect) ok = false;
        }
    report(1, ok, "Riemann-Hurwitz engine returns (q-1)^2 = 4/64/64/16 on 80 seeded curves",
           seconds_since(t0), 1.0);
}

// 2. Ordinariness oracle: zeta pipeline over F_3 for the classical curve.
void criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    AMCurve c = load_am("classical_am_p3.json");
    ZetaData z = l_polynomial(c);
    std::int64_t ds = deuring_shafarevich(9, 0, {3, 3});
    bool ok = z.p_rank == 4 && ds == 4 && z.p_rank == ds && z.genus == 4;
    report(2, ok,
           "zeta oracle: deg(L mod 3) = 4 = Deuring-Shafarevich value (counts N_1..N_8 up to "
           "GF(3^8))",
           seconds_since(t0), 60.0);
}

// 3. Claimed automorphism group orders with full symbolic verification.
void criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    auto expect = [&](const char* file, std::uint64_t order) {
        try {
            AutGroup g = claimed_group(load_am(file));
            if (g.order() != order) {
                ok = false;
                std::printf("      %s: order %llu, expected %llu\n", file,
                            static_cast<unsigned long long>(g.order()),
                            static_cast<unsigned long long>(order));
            }
        } catch (const Error& e) {
            ok = false;
            std::printf("      %s: %s\n", file, e.what());
        }
    };
    expect("classical_am_p3.json", 36);
    expect("pair_q3.json", 18);
    expect("pair_q9.json", 162);
    expect("diag_q9.json", 1296);
    report(3, ok, "claimed group orders 36 / 18 / 162 / 1296, every element verified",
           seconds_since(t0), 10.0);
}

// 4. Full-group oracle at desk scale. The first half (classical curve over
// GF(3) and GF(27)) holds. The second half as specified - an L1 != L2
// instance returning exactly 18 with no swap-shape map - is unattainable:
// every q = qbar pair is scaling-equivalent to a diagonal pair and the
// twist lies in any field where the kernels split, so the search provably
// finds the order-36 twisted-diagonal group. The assertion is kept as
// stated and the discrepancy is reported rather than papered over.
void criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    AMCurve classical = load_am("classical_am_p3.json");
    AutGroup claimed = claimed_group(classical);
    bool a_ok = true;
    for (int d : {1, 3}) {
        LinearSearchResult r = linear_aut_search(classical, d);
        if (r.maps.size() != 36 || !same_maps(r, claimed)) a_ok = false;
    }
    double t_a = seconds_since(t0);
    report(4, a_ok, "search oracle, classical curve: exactly the 36 claimed maps over GF(3) and "
                    "GF(27) (criterion 4, first half)",
           t_a, 300.0);

    auto t1 = std::chrono::steady_clock::now();
    AMCurve pair = load_am("pair_q3.json");
    LinearSearchResult r = linear_aut_search(pair, 2);
    bool b_ok = r.maps.size() == 18 && !contains_swap_shape(r) && same_maps(r, claimed_group(pair));
    double t_b = seconds_since(t1);
    report(4, b_ok, "search oracle, L1 != L2 instance: exactly 18 maps, no swap shape "
                    "(criterion 4, second half)",
           t_b, 300.0);
    if (!b_ok) {
        int swaps = 0;
        for (const auto& m : r.maps)
            if (!m.b.is_zero() || !m.c.is_zero()) ++swaps;
        std::printf("      found %zu maps (%d swap-shaped) over GF(9): the pair (T^3-T, T^3+T) "
                    "is scaling-equivalent\n"
                    "      to a diagonal pair ((x,y) -> (iy, -ix) is a verified involution, "
                    "i^2 = -1), and the twist\n"
                    "      lies in every field where ker L2 splits, so 18-with-no-swap cannot "
                    "occur for any q = qbar\n"
                    "      instance. The 18 plain-shaped maps found are exactly the claimed "
                    "group.\n",
                    r.maps.size(), swaps);
    }
}

// 5. Orbit structure on every acceptance curve.
void criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const char* f :
         {"classical_am_p3.json", "pair_q3.json", "pair_q9.json", "diag_q9.json"}) {
        AMCurve c = load_am(f);
        try {
            OrbitData od = sigma_orbits(c); // throws on any structural violation
            if (od.orbits.size() != 2) ok = false;
            for (const auto& orb : od.orbits)
                if (orb.places.size() != c.q() || orb.stabilizer.size() != c.q()) ok = false;
        } catch (const Error& e) {
            ok = false;
            std::printf("      %s: %s\n", f, e.what());
        }
    }
    report(5, ok, "exactly two Sigma-orbits at infinity, each of length q, order-q stabilizers "
                  "with trivial intersection",
           seconds_since(t0), 0.0);
}

// 6. Quotient characterization: Y and Z invariants with search oracle.
void criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    YCurve y = *curve_from_json(slurp(g_data + "/curves/y_q3_a1.json")).ycurve;
    if (genus(y) != 2) ok = false;
    ZetaData zy = l_polynomial(y);
    if (static_cast<int>(zy.l_poly.size()) - 1 != 4) ok = false; // zeta degree 4 over F_3
    WeierstrassData w = weierstrass_places(y);
    if (!w.ok || w.places.size() != 6) ok = false;
    for (int d : {1, 2}) {
        YSearchResult r = y_aut_search(y, d);
        if (r.maps.size() != 12) ok = false;
    }

    ZCurve z = *curve_from_json(slurp(g_data + "/curves/z_q5_b0.json")).zcurve;
    if (genus(z) != 4) ok = false;
    ZetaData zz = l_polynomial(z); // counts N_1..N_8 up to GF(5^8)
    if (zz.p_rank != 0) ok = false;

    report(6, ok,
           "Y(T^3-T, 1): genus 2 (zeta degree 4), 6 = 2q fixed places of mu, search finds "
           "12 = 4q; Z(T^5-T, 0): genus 4, p-rank 0",
           seconds_since(t0), 300.0);
}

// 7. Nakajima consistency on every acceptance curve, tight at (3, 3).
void criterion7() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const char* f :
         {"classical_am_p3.json", "pair_q3.json", "pair_q9.json", "diag_q9.json"}) {
        NakajimaCheck n = nakajima_check(load_am(f));
        if (!n.ok) ok = false;
        if (std::string(f) == "classical_am_p3.json" && (!n.tight || n.lhs != 9 || n.rhs != 9))
            ok = false;
    }
    report(7, ok, "Nakajima bound q^2 (p-2) <= p (g-1) on all acceptance curves, tight 9 = 9 at "
                  "(p, q) = (3, 3)",
           seconds_since(t0), 0.0);
}

// 8. CLI determinism: byte-identical output across two invocations.
void criterion8() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::string> commands{
        "curve genus --curve " + g_data + "/curves/classical_am_p3.json --deterministic",
        "curve zeta --curve " + g_data + "/curves/classical_am_p3.json --deterministic",
        "curve validate --curve " + g_data + "/curves/diag_q9.json --deterministic",
        "aut claim --curve " + g_data + "/curves/pair_q9.json --deterministic",
        "aut orbits --curve " + g_data + "/curves/pair_q3.json --deterministic",
        "quotient ycurve --zeta --curve " + g_data + "/curves/y_q3_a1.json --deterministic",
    };
    bool ok = true;
    int id = 0;
    for (const std::string& cmd : commands) {
        std::string out1 = "accept_cli_" + std::to_string(id) + "_a.tmp";
        std::string out2 = "accept_cli_" + std::to_string(id) + "_b.tmp";
        ++id;
        std::string full1 = g_cli + " " + cmd + " > " + out1 + " 2>/dev/null";
        std::string full2 = g_cli + " " + cmd + " > " + out2 + " 2>/dev/null";
        int rc1 = std::system(full1.c_str());
        int rc2 = std::system(full2.c_str());
        if (WEXITSTATUS(rc1) != 0 || WEXITSTATUS(rc2) != 0) ok = false;
        if (slurp(out1) != slurp(out2) || slurp(out1).empty()) ok = false;
        std::remove(out1.c_str());
        std::remove(out2.c_str());
    }
    report(8, ok, "every --deterministic CLI run is byte-identical across two invocations",
           seconds_since(t0), 0.0);
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; i += 2) {
        if (std::strcmp(argv[i], "--cli") == 0) g_cli = argv[i + 1];
        if (std::strcmp(argv[i], "--data") == 0) g_data = argv[i + 1];
    }
    if (g_cli.empty() || g_data.empty()) {
        std::fprintf(stderr, "usage: acceptance --cli PATH --data DIR\n");
        return 2;
    }
    std::printf("acceptance suite (not reproduced at desk scale: full zeta for the genus-64 "
                "instances;\ncovered instead by criteria 1, 3, 5 per the guard in the zeta "
                "pipeline)\n\n");
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (g_failures) {
        std::printf("\n%d criterion check(s) failed\n", g_failures);
        return 1;
    }
    std::printf("\nall criteria passed\n");
    return 0;
}
