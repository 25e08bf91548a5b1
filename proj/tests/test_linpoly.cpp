#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "amcurve/gf.hpp"
#include "amcurve/linpoly.hpp"

using namespace amc;

namespace {

LinearizedPoly t3_minus_t(const FieldPtr& f3) {
    // T^3 - T over F_3 (qbar = 3): a_0 = -1, a_1 = 1
    return LinearizedPoly(3, 1, {f3->from_int(-1), f3->from_int(1)});
}

LinearizedPoly t3_plus_t(const FieldPtr& f3) {
    return LinearizedPoly(3, 1, {f3->from_int(1), f3->from_int(1)});
}

// Independent oracle: conventional dense polynomial composition over GF(p).
// Converts a linearized polynomial to its dense form, composes, compares.
std::vector<std::int64_t> dense_form(const LinearizedPoly& l) {
    // only for prime coefficient fields
    REQUIRE(l.coeff_field()->degree() == 1);
    std::uint64_t deg = l.degree();
    std::vector<std::int64_t> out(deg + 1, 0);
    std::uint64_t e = 1;
    for (int i = 0; i <= l.m(); ++i) {
        out[e] = l.coeffs()[static_cast<std::size_t>(i)].coeffs()[0];
        e *= l.qbar();
    }
    return out;
}

std::vector<std::int64_t> dense_compose(const std::vector<std::int64_t>& f,
                                        const std::vector<std::int64_t>& g, std::int64_t p) {
    std::vector<std::int64_t> acc{0};
    auto mul = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
        std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        return r;
    };
    std::vector<std::int64_t> gp{1}; // g^k
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k] != 0) {
            if (acc.size() < gp.size()) acc.resize(gp.size(), 0);
            for (std::size_t i = 0; i < gp.size(); ++i)
                acc[i] = ((acc[i] + f[k] * gp[i]) % p + p) % p;
        }
        if (k + 1 < f.size()) gp = mul(gp, g);
    }
    for (auto& c : acc) c = (c % p + p) % p;
    return acc;
}

} // namespace

TEST_CASE("eval: T^3 - T at points of GF(3) and GF(9)") {
    auto f3 = make_field(3, 1, 0);
    auto l = t3_minus_t(f3);
    CHECK(eval(l, f3->from_int(1)).is_zero());
    CHECK(eval(l, f3->from_int(0)).is_zero());

    auto f9 = make_field(3, 2, 0);
    FieldElement g = f9->generator();
    FieldElement direct = g.pow(3) - g;
    CHECK(eval(l, g) == direct);
    CHECK(!eval(l, g).is_zero()); // g is not in GF(3)
}

TEST_CASE("eval: vanishes at 0 for any linearized polynomial") {
    auto f3 = make_field(3, 1, 0);
    LinearizedPoly l(3, 1, {f3->from_int(1), f3->from_int(1), f3->from_int(1)}); // T^9+T^3+T
    CHECK(eval(l, f3->zero()).is_zero());
}

TEST_CASE("classify_linearity") {
    auto f3 = make_field(3, 1, 0);
    LinearizedPoly a(3, 1, {f3->from_int(1), f3->from_int(1), f3->from_int(1)}); // T^9+T^3+T
    CHECK(classify_linearity(a) == 1);
    LinearizedPoly b(3, 1, {f3->from_int(1), f3->zero(), f3->from_int(1)});      // T^9+T
    CHECK(classify_linearity(b) == 2);
    LinearizedPoly c(3, 1, {f3->from_int(1), f3->zero(), f3->from_int(1), f3->zero(),
                            f3->from_int(1)});                                   // T^81+T^9+T
    CHECK(classify_linearity(c) == 2);

    // F_9-semilinearity of the 9-linearized polynomial, by sampling
    auto k = kernel(b);
    auto f = k.ambient;
    auto f9_els = subfield_elements(f, 2);
    std::mt19937_64 rng(5);
    LinearizedPoly bl = lift(b, f);
    for (int i = 0; i < 100; ++i) {
        FieldElement x = f->element_at(rng() % f->order());
        for (const auto& s : f9_els) {
            CHECK(eval(bl, s * x) == s * eval(bl, x));
        }
    }
}

TEST_CASE("kernel: T^3 - T has kernel GF(3), found at ladder degree 1") {
    auto f3 = make_field(3, 1, 0);
    auto k = kernel(t3_minus_t(f3));
    CHECK(k.ambient->degree() == 1);
    REQUIRE(k.roots.size() == 3);
    CHECK(k.dimension == 1);
    std::set<std::uint64_t> got;
    for (const auto& r : k.roots) got.insert(k.ambient->index_of(r));
    CHECK(got == std::set<std::uint64_t>{0, 1, 2});
}

TEST_CASE("kernel: T^3 + T has kernel {0, i, -i} inside GF(9)") {
    auto f3 = make_field(3, 1, 0);
    auto k = kernel(t3_plus_t(f3));
    CHECK(k.ambient->degree() == 2);
    REQUIRE(k.roots.size() == 3);
    // oracle: solve x^2 = -1 in GF(9) by enumeration
    std::vector<FieldElement> sq_roots;
    for (const auto& x : enumerate(k.ambient))
        if ((x * x) == k.ambient->from_int(-1)) sq_roots.push_back(x);
    REQUIRE(sq_roots.size() == 2);
    std::set<std::uint64_t> expect{k.ambient->index_of(k.ambient->zero()),
                                   k.ambient->index_of(sq_roots[0]),
                                   k.ambient->index_of(sq_roots[1])};
    std::set<std::uint64_t> got;
    for (const auto& r : k.roots) got.insert(k.ambient->index_of(r));
    CHECK(got == expect);
}

TEST_CASE("kernel: T^9 - T over qbar=3 (m=2) is all of GF(9)") {
    auto f3 = make_field(3, 1, 0);
    LinearizedPoly l(3, 1, {f3->from_int(-1), f3->zero(), f3->from_int(1)});
    auto k = kernel(l);
    CHECK(k.roots.size() == 9);
    CHECK(k.ambient->degree() == 2);
    CHECK(k.dimension == 2);
}

TEST_CASE("kernel: inseparable input is rejected") {
    auto f3 = make_field(3, 1, 0);
    LinearizedPoly l(3, 1, {f3->zero(), f3->from_int(1)}); // T^3
    CHECK_THROWS_AS(kernel(l), ParameterError);
}

TEST_CASE("kernel: roots form an F_qbar-subspace (exhaustive closure)") {
    auto f3 = make_field(3, 1, 0);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        LinearizedPoly l = random_separable(3, 1, f3, 2, seed);
        auto k = kernel(l);
        CHECK(k.roots.size() == 9);
        std::set<std::uint64_t> idx;
        for (const auto& r : k.roots) idx.insert(k.ambient->index_of(r));
        auto qbar_els = subfield_elements(k.ambient, 1);
        for (const auto& r : k.roots) {
            for (const auto& s : k.roots)
                CHECK(idx.count(k.ambient->index_of(r + s)) == 1);
            for (const auto& c : qbar_els)
                CHECK(idx.count(k.ambient->index_of(c * r)) == 1);
        }
    }
}

TEST_CASE("compose: identity, frozen example, eval consistency") {
    auto f3 = make_field(3, 1, 0);
    auto l = t3_minus_t(f3);
    LinearizedPoly ident(3, 1, {f3->from_int(1)}); // T

    CHECK(compose(ident, l) == l);
    CHECK(compose(l, ident) == l);

    // (T^3-T) o (T^3-T) = T^9 + T^3 + T over GF(3): oracle by conventional
    // polynomial composition
    LinearizedPoly sq = compose(l, l);
    auto dense = dense_compose(dense_form(l), dense_form(l), 3);
    CHECK(dense == dense_form(sq));

    std::mt19937_64 rng(11);
    auto f9 = make_field(3, 2, 0);
    auto m = t3_plus_t(f3);
    LinearizedPoly lm = compose(l, m);
    for (int i = 0; i < 100; ++i) {
        FieldElement x = f9->element_at(rng() % 9);
        CHECK(eval(lm, x) == eval(l, eval(m, x)));
    }
}

TEST_CASE("random_separable: postconditions and determinism") {
    auto f3 = make_field(3, 1, 0);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        LinearizedPoly l = random_separable(3, 1, f3, 3, seed);
        CHECK(l.separable());
        CHECK(!l.coeffs().back().is_zero());
        CHECK(l.m() == 3);
    }
    LinearizedPoly a = random_separable(3, 1, f3, 1, 7);
    LinearizedPoly b = random_separable(3, 1, f3, 1, 7);
    CHECK(a == b);
    CHECK(kernel(a).roots.size() == 3);
}

TEST_CASE("additivity and F_qbar-linearity on random samples") {
    auto f9 = make_field(3, 2, 0);
    LinearizedPoly l = random_separable(3, 2, f9, 1, 3); // qbar = 9, coefficients in F_9
    auto k = kernel(l);
    auto amb = k.ambient;
    LinearizedPoly la = lift(l, amb);
    auto qbar_els = subfield_elements(amb, 2);
    std::mt19937_64 rng(17);
    auto draw = [&] {
        std::vector<std::int64_t> c(static_cast<std::size_t>(amb->degree()));
        for (auto& v : c) v = static_cast<std::int64_t>(rng() % 3);
        return amb->element(std::move(c));
    };
    for (int i = 0; i < 500; ++i) {
        FieldElement x = draw(), y = draw();
        CHECK(eval(la, x + y) == eval(la, x) + eval(la, y));
        const auto& c = qbar_els[rng() % qbar_els.size()];
        CHECK(eval(la, c * x) == c * eval(la, x));
    }
}

TEST_CASE("classify_linearity(compose(L,L)) >= classify_linearity(L)") {
    auto f3 = make_field(3, 1, 0);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        LinearizedPoly l = random_separable(3, 1, f3, 2, seed);
        CHECK(classify_linearity(compose(l, l)) >= classify_linearity(l));
    }
}

TEST_CASE("monic normalization") {
    auto f9 = make_field(3, 2, 0);
    LinearizedPoly l = random_separable(3, 1, f9, 2, 21);
    LinearizedPoly lm = monic(l);
    CHECK(lm.coeffs().back().is_one());
    // monic(l) = a_m^{-1} * l pointwise
    FieldElement s = l.coeffs().back().inverse();
    FieldElement x = f9->generator();
    CHECK(eval(lm, x) == s * eval(l, x));
}

TEST_CASE("solve_in: particular solutions and unsolvable right sides") {
    auto f3 = make_field(3, 1, 0);
    auto l = t3_minus_t(f3);
    // over GF(3), x^3 - x == 0, so 1 has no preimage
    CHECK(!solve_in(l, f3->from_int(1)).has_value());
    CHECK(solve_in(l, f3->zero()).has_value());
    // over GF(27), x^3 - x = 1 is solvable (trace of 1 vanishes)
    auto f27 = make_field(3, 3, 0);
    auto sol = solve_in(l, f27->from_int(1));
    REQUIRE(sol.has_value());
    CHECK(eval(lift(l, f27), *sol) == f27->from_int(1));
}

TEST_CASE("roots_in: kernel restricted to a given field") {
    auto f3 = make_field(3, 1, 0);
    auto l = t3_plus_t(f3); // kernel {0, +-i} in GF(9)
    CHECK(roots_in(l, f3).size() == 1);
    CHECK(roots_in(l, make_field(3, 2, 0)).size() == 3);
    CHECK(roots_in(l, make_field(3, 3, 0)).size() == 1); // GF(27) has no i
}
