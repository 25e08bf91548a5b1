#include <doctest.h>

#include <vector>

#include "amcurve/serialize.hpp"

using namespace amc;

namespace {

LinearizedPoly lp(const FieldPtr& f, std::int64_t p, int n, std::vector<std::int64_t> scalars) {
    std::vector<FieldElement> c;
    for (auto s : scalars) c.push_back(f->from_int(s));
    return LinearizedPoly(p, n, std::move(c));
}

} // namespace

TEST_CASE("field descriptors round trip; modulus is verified") {
    auto f = make_field(3, 2, 0);
    std::string text = to_json(*f);
    FieldPtr g = field_from_json(text);
    CHECK(same_field(f, g));
    CHECK(g->seed() == 0);

    // a modulus other than the deterministic regeneration is rejected
    // (the seed-0 modulus is T^2 + 1; T^2 + 2T + 2 is irreducible but different)
    CHECK_THROWS_AS(field_from_json("{\"p\":3,\"d\":2,\"seed\":0,\"modulus\":[2,2,1]}"),
                    ParseError);
    // modulus may be omitted: regenerated from the seed
    CHECK(same_field(field_from_json("{\"p\":3,\"d\":2,\"seed\":0}"), f));
    CHECK_THROWS_AS(field_from_json("{\"p\":4,\"d\":2,\"seed\":0}"), ParseError);
    CHECK_THROWS_AS(field_from_json("not json"), ParseError);
}

TEST_CASE("linearized polynomials round trip") {
    auto f9 = make_field(3, 2, 0);
    LinearizedPoly l = random_separable(3, 1, f9, 2, 5);
    LinearizedPoly back = linpoly_from_json(to_json(l));
    CHECK(back == l);
    CHECK_THROWS_AS(linpoly_from_json("{\"p\":3,\"n\":1,\"coeffs\":[]}"), ParseError);
}

TEST_CASE("AM curve files round trip through validation") {
    auto f3 = make_field(3, 1, 0);
    AMCurve c = new_am_curve(lp(f3, 3, 1, {-1, 1}), lp(f3, 3, 1, {1, 1}));
    std::string text = curve_file(c);
    CurveFile back = curve_from_json(text);
    REQUIRE(back.kind == "am");
    REQUIRE(back.am.has_value());
    CHECK(back.am->l1() == c.l1());
    CHECK(back.am->l2() == c.l2());
    CHECK(curve_file(*back.am) == text); // byte-stable reserialization
}

TEST_CASE("Y and Z curve files round trip") {
    auto f3 = make_field(3, 1, 0);
    YCurve y = y_curve(lp(f3, 3, 1, {-1, 1}), f3->one());
    CurveFile yback = curve_from_json(curve_file(y));
    REQUIRE(yback.ycurve.has_value());
    CHECK(yback.ycurve->l == y.l);
    CHECK(yback.ycurve->a == y.a);

    auto f5 = make_field(5, 1, 0);
    ZCurve z = z_curve(lp(f5, 5, 1, {-1, 1}), f5->from_int(2));
    CurveFile zback = curve_from_json(curve_file(z));
    REQUIRE(zback.zcurve.has_value());
    CHECK(zback.zcurve->b == z.b);
}

TEST_CASE("invalid curve files surface the violated clause") {
    // both factors 9-linearized: family membership violation, not a parse error
    std::string text = R"({
      "format": "amcurve/1", "kind": "am",
      "tower": {"p": 3, "n": 1, "m": 2},
      "L1": {"p": 3, "n": 1, "coeff_field": {"p": 3, "d": 1, "seed": 0},
             "coeffs": [[1],[0],[1]]},
      "L2": {"p": 3, "n": 1, "coeff_field": {"p": 3, "d": 1, "seed": 0},
             "coeffs": [[1],[0],[1]]}
    })";
    CHECK_THROWS_AS(curve_from_json(text), ValidationError);

    CHECK_THROWS_AS(curve_from_json("{\"format\":\"amcurve/2\",\"kind\":\"am\"}"), ParseError);
    CHECK_THROWS_AS(curve_from_json("{\"format\":\"amcurve/1\",\"kind\":\"mystery\"}"), ParseError);

    // z curve with p = 3 is a parameter error citing the constraint
    std::string zbad = R"({
      "format": "amcurve/1", "kind": "zcurve",
      "tower": {"p": 3, "n": 1, "m": 1},
      "L": {"p": 3, "n": 1, "coeff_field": {"p": 3, "d": 1, "seed": 0},
            "coeffs": [[2],[1]]},
      "b": [0]
    })";
    CHECK_THROWS_WITH_AS(curve_from_json(zbad), doctest::Contains("p != 3"), ParameterError);
}
