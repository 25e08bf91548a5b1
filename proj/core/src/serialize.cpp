#include "amcurve/serialize.hpp"

#include <json.hpp>

namespace amc {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kFormat = "amcurve/1";

json field_rec(const FiniteField& f) {
    return json{{"p", f.p()}, {"d", f.degree()}, {"seed", f.seed()}, {"modulus", f.modulus()}};
}

json elem_rec(const FieldElement& x) { return json(x.coeffs()); }

json linpoly_rec(const LinearizedPoly& l) {
    json coeffs = json::array();
    for (const auto& c : l.coeffs()) coeffs.push_back(elem_rec(c));
    return json{{"p", l.p()}, {"n", l.n()}, {"coeff_field", field_rec(*l.coeff_field())},
                {"coeffs", coeffs}};
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError("parse error at " + where + ": " + what);
}

json need(const json& j, const char* key, const char* where) {
    if (!j.contains(key)) fail(where, std::string("missing field '") + key + "'");
    return j.at(key);
}

FieldPtr parse_field(const json& j, const char* where) {
    if (!j.is_object()) fail(where, "field descriptor must be an object");
    std::int64_t p = need(j, "p", where).get<std::int64_t>();
    int d = need(j, "d", where).get<int>();
    std::uint64_t seed = need(j, "seed", where).get<std::uint64_t>();
    FieldPtr f;
    try {
        f = make_field(p, d, seed);
    } catch (const ParameterError& e) {
        fail(where, e.what());
    }
    if (j.contains("modulus")) {
        auto mod = j.at("modulus").get<std::vector<std::int64_t>>();
        if (mod != f->modulus())
            fail(where, "modulus does not match the deterministic (p, d, seed) regeneration");
    }
    return f;
}

FieldElement parse_elem(const json& j, const FieldPtr& f, const char* where) {
    if (!j.is_array()) fail(where, "element must be a coordinate array");
    auto v = j.get<std::vector<std::int64_t>>();
    if (v.size() != static_cast<std::size_t>(f->degree()))
        fail(where, "element coordinate vector has wrong length");
    for (std::int64_t c : v)
        if (c < 0 || c >= f->p()) fail(where, "element coordinate out of [0, p)");
    return f->element(std::move(v));
}

LinearizedPoly parse_linpoly(const json& j, const char* where) {
    if (!j.is_object()) fail(where, "linearized polynomial must be an object");
    std::int64_t p = need(j, "p", where).get<std::int64_t>();
    int n = need(j, "n", where).get<int>();
    FieldPtr cf = parse_field(need(j, "coeff_field", where), where);
    if (cf->p() != p) fail(where, "coefficient field has a different characteristic");
    json coeffs = need(j, "coeffs", where);
    if (!coeffs.is_array() || coeffs.empty()) fail(where, "coeffs must be a nonempty array");
    std::vector<FieldElement> c;
    for (const auto& e : coeffs) c.push_back(parse_elem(e, cf, where));
    try {
        return LinearizedPoly(p, n, std::move(c));
    } catch (const ParameterError& e) {
        fail(where, e.what());
    }
}

json tower_rec(const Tower& t) { return json{{"p", t.p}, {"n", t.n}, {"m", t.m}}; }

Tower parse_tower(const json& j, const char* where) {
    if (!j.is_object()) fail(where, "tower must be an object");
    Tower t{};
    t.p = need(j, "p", where).get<std::int64_t>();
    t.n = need(j, "n", where).get<int>();
    t.m = need(j, "m", where).get<int>();
    if (t.n < 1 || t.m < 1) fail(where, "tower exponents must be >= 1");
    return t;
}

void check_tower(const Tower& t, const LinearizedPoly& l, const char* where) {
    if (l.p() != t.p || l.n() != t.n || l.m() != t.m)
        fail(where, "polynomial does not match the declared tower (p, n, m)");
}

} // namespace

std::string to_json(const FiniteField& f) { return field_rec(f).dump(2); }

FieldPtr field_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail("field", e.what());
    }
    return parse_field(j, "field");
}

std::string to_json(const LinearizedPoly& l) { return linpoly_rec(l).dump(2); }

LinearizedPoly linpoly_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail("linpoly", e.what());
    }
    return parse_linpoly(j, "linpoly");
}

std::string curve_file(const AMCurve& c) {
    json j{{"format", kFormat},
           {"kind", "am"},
           {"tower", tower_rec(c.tower())},
           {"L1", linpoly_rec(c.l1())},
           {"L2", linpoly_rec(c.l2())}};
    return j.dump(2) + "\n";
}

std::string curve_file(const YCurve& y) {
    json j{{"format", kFormat},
           {"kind", "ycurve"},
           {"tower", tower_rec(y.tower)},
           {"L", linpoly_rec(y.l)},
           {"a", elem_rec(y.a)}};
    return j.dump(2) + "\n";
}

std::string curve_file(const ZCurve& z) {
    json j{{"format", kFormat},
           {"kind", "zcurve"},
           {"tower", tower_rec(z.tower)},
           {"L", linpoly_rec(z.l)},
           {"b", elem_rec(z.b)}};
    return j.dump(2) + "\n";
}

CurveFile curve_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail("curve file", e.what());
    }
    if (!j.is_object()) fail("curve file", "top level must be an object");
    std::string format = need(j, "format", "curve file").get<std::string>();
    if (format != kFormat)
        fail("curve file", "unsupported format '" + format + "' (expected " + kFormat + ")");
    std::string kind = need(j, "kind", "curve file").get<std::string>();
    Tower t = parse_tower(need(j, "tower", "curve file"), "tower");

    CurveFile out;
    out.kind = kind;
    if (kind == "am") {
        LinearizedPoly l1 = parse_linpoly(need(j, "L1", "curve file"), "L1");
        LinearizedPoly l2 = parse_linpoly(need(j, "L2", "curve file"), "L2");
        check_tower(t, l1, "L1");
        check_tower(t, l2, "L2");
        out.am = new_am_curve(std::move(l1), std::move(l2));
    } else if (kind == "ycurve" || kind == "zcurve") {
        LinearizedPoly l = parse_linpoly(need(j, "L", "curve file"), "L");
        check_tower(t, l, "L");
        const char* pname = kind == "ycurve" ? "a" : "b";
        FieldElement ab = parse_elem(need(j, pname, "curve file"), l.coeff_field(), pname);
        if (kind == "ycurve")
            out.ycurve = y_curve(std::move(l), std::move(ab));
        else
            out.zcurve = z_curve(std::move(l), std::move(ab));
    } else {
        fail("curve file", "unknown kind '" + kind + "'");
    }
    return out;
}

} // namespace amc
