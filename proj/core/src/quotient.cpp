#include "amcurve/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "bivar_internal.hpp"

namespace amc {

using detail::Bivar;
using detail::bv_add;
using detail::bv_linearized_affine;
using detail::bv_mul;
using detail::bv_scale;
using detail::bv_sub;
using detail::render_elem;

namespace {

/// Rewrite a qbar-linearized polynomial as a p-linearized one (exponents
/// qbar^i = p^(n*i), zero coefficients in between).
LinearizedPoly as_p_linearized(const LinearizedPoly& l) {
    if (l.n() == 1) return l;
    std::vector<FieldElement> c(static_cast<std::size_t>(l.n() * l.m()) + 1,
                                l.coeff_field()->zero());
    for (int i = 0; i <= l.m(); ++i)
        c[static_cast<std::size_t>(l.n() * i)] = l.coeffs()[static_cast<std::size_t>(i)];
    return LinearizedPoly(l.p(), 1, std::move(c));
}

struct KernelAmbient {
    FieldPtr ambient;
    std::vector<FieldElement> kernel;
};

KernelAmbient split_kernel(const LinearizedPoly& l) {
    KernelSpace k = kernel(l);
    return {k.ambient, k.roots};
}

} // namespace

YCurve y_curve(LinearizedPoly l, FieldElement a) {
    if (l.n() != 1) throw ParameterError("y_curve: L must be p-linearized");
    if (l.m() < 1) throw ParameterError("y_curve: deg L must be at least p");
    if (!l.separable()) throw ParameterError("y_curve: L must be separable");
    if (a.is_zero()) throw ParameterError("y_curve: a must be nonzero");
    if (!same_field(a.field(), l.coeff_field()))
        throw ParameterError("y_curve: a must live in the coefficient field");
    KernelAmbient ka = split_kernel(l);
    Tower t{l.p(), 1, l.m()};
    return YCurve{t, std::move(l), std::move(a), ka.ambient, std::move(ka.kernel)};
}

ZCurve z_curve(LinearizedPoly l, FieldElement b) {
    if (l.p() == 3)
        throw ParameterError("z_curve: p != 3 is required (x^3 + bx must be separable of "
                             "degree coprime to p)");
    if (l.n() != 1) throw ParameterError("z_curve: L must be p-linearized");
    if (l.m() < 1) throw ParameterError("z_curve: deg L must be at least p");
    if (!l.separable()) throw ParameterError("z_curve: L must be separable");
    if (!same_field(b.field(), l.coeff_field()))
        throw ParameterError("z_curve: b must live in the coefficient field");
    KernelAmbient ka = split_kernel(l);
    Tower t{l.p(), 1, l.m()};
    return ZCurve{t, std::move(l), std::move(b), ka.ambient, std::move(ka.kernel)};
}

std::int64_t genus(const YCurve& y) {
    const auto q = static_cast<std::int64_t>(y.q());
    // two totally ramified places, filtration orders q, q, 1 at each
    std::int64_t d = different_from_filtration({y.q(), y.q(), 1});
    std::int64_t g = riemann_hurwitz_genus(y.q(), 0, 2 * d);
    if (g != q - 1) throw InconsistencyError("y genus: Riemann-Hurwitz value differs from q-1");
    return g;
}

std::int64_t genus(const ZCurve& z) {
    const auto q = static_cast<std::int64_t>(z.q());
    // one wildly ramified place with jumps G^(0)=...=G^(3)=E_q, G^(4)=1
    std::int64_t d = different_from_filtration({z.q(), z.q(), z.q(), z.q(), 1});
    std::int64_t g = riemann_hurwitz_genus(z.q(), 0, d);
    if (g != q - 1) throw InconsistencyError("z genus: Riemann-Hurwitz value differs from q-1");
    return g;
}

namespace {

FieldPtr count_field(const Tower& t, const FieldPtr& coeff, int k) {
    if (k < 1) throw ParameterError("extension degree must be >= 1");
    FieldPtr f = make_field(t.p, coeff->degree() * k, coeff->seed());
    if (!f->order_fits_u64() || f->order() > (std::uint64_t{1} << 26))
        throw GuardError("desk-scale limit: counting over a field of order past 2^26 is refused");
    return f;
}

std::vector<std::uint32_t> l_value_table(const LinearizedPoly& l, const FieldPtr& target) {
    LinearizedPoly la = lift(l, target);
    const std::uint64_t n = target->order();
    std::vector<std::uint32_t> tab(n, 0);
    for (std::uint64_t i = 0; i < n; ++i)
        ++tab[target->index_of(eval(la, target->element_at(i)))];
    return tab;
}

} // namespace

std::int64_t rational_places(const YCurve& y, int k, const CountOptions& opt) {
    (void)opt;
    FieldPtr target = count_field(y.tower, y.coeff_field(), k);
    std::vector<std::uint32_t> tab = l_value_table(y.l, target);
    FieldElement a = lift_element(y.a, target);
    std::int64_t affine = 0;
    for (std::uint64_t i = 1; i < target->order(); ++i) {
        FieldElement x = target->element_at(i);
        FieldElement g = a * x + x.inverse();
        affine += tab[target->index_of(g)];
    }
    return affine + 2; // the places over x = 0 and x = infinity
}

std::int64_t rational_places(const ZCurve& z, int k, const CountOptions& opt) {
    (void)opt;
    FieldPtr target = count_field(z.tower, z.coeff_field(), k);
    std::vector<std::uint32_t> tab = l_value_table(z.l, target);
    FieldElement b = lift_element(z.b, target);
    std::int64_t affine = 0;
    for (std::uint64_t i = 0; i < target->order(); ++i) {
        FieldElement x = target->element_at(i);
        FieldElement g = x * x * x + b * x;
        affine += tab[target->index_of(g)];
    }
    return affine + 1; // the unique place over x = infinity
}

ZetaData l_polynomial(const YCurve& y, const CountOptions& opt) {
    std::int64_t g = genus(y);
    if (g > kZetaGenusGuard)
        throw GuardError("desk-scale limit: genus " + std::to_string(g) + " exceeds the guard");
    return l_polynomial_generic([&](int k) { return rational_places(y, k, opt); },
                                static_cast<std::int64_t>(y.coeff_field()->order()), y.tower.p,
                                static_cast<int>(g));
}

ZetaData l_polynomial(const ZCurve& z, const CountOptions& opt) {
    std::int64_t g = genus(z);
    if (g > kZetaGenusGuard)
        throw GuardError("desk-scale limit: genus " + std::to_string(g) + " exceeds the guard");
    return l_polynomial_generic([&](int k) { return rational_places(z, k, opt); },
                                static_cast<std::int64_t>(z.coeff_field()->order()), z.tower.p,
                                static_cast<int>(g));
}

bool operator==(const YAutMap& a, const YAutMap& b) {
    return a.mobius == b.mobius && a.e == b.e && a.alpha == b.alpha;
}

bool operator<(const YAutMap& a, const YAutMap& b) {
    for (int i = 0; i < 4; ++i) {
        if (a.mobius[static_cast<std::size_t>(i)] != b.mobius[static_cast<std::size_t>(i)])
            return a.mobius[static_cast<std::size_t>(i)] < b.mobius[static_cast<std::size_t>(i)];
    }
    if (a.e != b.e) return a.e < b.e;
    return a.alpha < b.alpha;
}

YAutMap canonical(YAutMap m) {
    for (const auto& c : m.mobius) {
        if (c.is_zero()) continue;
        FieldElement s = c.inverse();
        for (auto& x : m.mobius) x = x * s;
        return m;
    }
    throw ParameterError("YAutMap: zero Moebius matrix");
}

YAutMap y_identity(const FieldPtr& f) {
    return YAutMap{{f->one(), f->zero(), f->zero(), f->one()}, f->one(), f->zero()};
}

YAutMap y_translation(const FieldElement& alpha) {
    const FieldPtr& f = alpha.field();
    return YAutMap{{f->one(), f->zero(), f->zero(), f->one()}, f->one(), alpha};
}

YAutMap y_negation(const FieldPtr& f) {
    return canonical(
        YAutMap{{-(f->one()), f->zero(), f->zero(), f->one()}, -(f->one()), f->zero()});
}

YAutMap y_hyperelliptic(const FieldElement& a) {
    const FieldPtr& f = a.field();
    return canonical(YAutMap{{f->zero(), f->one(), a, f->zero()}, f->one(), f->zero()});
}

YAutMap compose(const YAutMap& outer, const YAutMap& inner) {
    const auto& A = outer.mobius;
    const auto& B = inner.mobius;
    YAutMap r{{A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3],
               A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3]},
              outer.e * inner.e, outer.e * inner.alpha + outer.alpha};
    return canonical(std::move(r));
}

YAutMap inverse(const YAutMap& m) {
    FieldElement ei = m.e.inverse();
    YAutMap r{{m.mobius[3], -m.mobius[1], -m.mobius[2], m.mobius[0]}, ei, -(ei * m.alpha)};
    return canonical(std::move(r));
}

std::uint64_t order_of(const YAutMap& m) {
    const YAutMap id = y_identity(m.e.field());
    YAutMap acc = canonical(m);
    std::uint64_t ord = 1;
    while (!(acc == id)) {
        acc = compose(m, acc);
        ++ord;
        if (ord > (std::uint64_t{1} << 20))
            throw InconsistencyError("order_of(YAutMap): did not terminate");
    }
    return ord;
}

namespace {

/// L(e y + alpha) - h(M(x)) == 0 in K(x)[y]/(L(y) - h(x)), where h is the
/// defining right-hand side as a rational function builder.
bool map_is_automorphism(const LinearizedPoly& l_coeff, const FieldPtr& verify_field,
                         const RatFun& h_of_x, const YAutMap& m,
                         const std::function<RatFun(const RatFun&)>& h_of) {
    if (m.e.is_zero()) return false;
    const auto& M = m.mobius;
    FieldElement det = M[0] * M[3] - M[1] * M[2];
    if (det.is_zero()) return false;

    LinearizedPoly l = lift(l_coeff, verify_field);
    ASFunctionField ring(verify_field, l, h_of_x);

    // T1 = sum a_i e^(p^i) y^(p^i) + L(alpha)
    ASFunctionField::Elem t1 = ring.from_rat(RatFun::constant(eval(l, m.alpha)));
    std::uint64_t pw = 1;
    FieldElement ep = m.e;
    for (int i = 0; i <= l.m(); ++i) {
        const FieldElement& a = l.coeffs()[static_cast<std::size_t>(i)];
        if (!a.is_zero()) t1 = ring.add(t1, ring.scale(a * ep, ring.y_pow(pw)));
        if (i < l.m()) {
            pw *= static_cast<std::uint64_t>(l.p());
            ep = ep.frobenius();
        }
    }

    // T2 = h(M(x))
    RatFun xp(UPoly(verify_field, {M[1], M[0]}), UPoly(verify_field, {M[3], M[2]}));
    RatFun t2 = h_of(xp);
    return ring.is_zero(ring.sub(t1, ring.from_rat(t2)));
}

RatFun y_rhs(const FieldPtr& f, const FieldElement& a_lift) {
    // a x + 1/x = (a x^2 + 1) / x
    UPoly num(f, {f->one(), f->zero(), a_lift});
    return RatFun(num, UPoly::variable(f));
}

RatFun z_rhs(const FieldPtr& f, const FieldElement& b_lift) {
    UPoly num(f, {f->zero(), b_lift, f->zero(), f->one()});
    return RatFun(num);
}

} // namespace

bool y_map_is_automorphism(const YCurve& y, const YAutMap& m) {
    const FieldPtr& vf = m.e.field();
    if (vf->degree() % y.coeff_field()->degree() != 0)
        throw ParameterError("y_map_is_automorphism: map field does not contain the coefficients");
    FieldElement a = lift_element(y.a, vf);
    return map_is_automorphism(y.l, vf, y_rhs(vf, a), m,
                               [&](const RatFun& xp) { return RatFun::constant(a) * xp + xp.inverse(); });
}

bool z_map_is_automorphism(const ZCurve& z, const YAutMap& m) {
    const FieldPtr& vf = m.e.field();
    if (vf->degree() % z.coeff_field()->degree() != 0)
        throw ParameterError("z_map_is_automorphism: map field does not contain the coefficients");
    FieldElement b = lift_element(z.b, vf);
    return map_is_automorphism(z.l, vf, z_rhs(vf, b), m, [&](const RatFun& xp) {
        return xp * xp * xp + RatFun::constant(b) * xp;
    });
}

namespace {

std::vector<YAutMap> y_closure(const std::vector<YAutMap>& gens, std::uint64_t cap) {
    std::set<YAutMap> seen(gens.begin(), gens.end());
    seen.insert(y_identity(gens.front().e.field()));
    std::vector<YAutMap> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<YAutMap> next;
        for (const YAutMap& g : frontier)
            for (const YAutMap& h : gens) {
                YAutMap gh = compose(g, h);
                if (seen.insert(gh).second) next.push_back(gh);
                if (seen.size() > cap)
                    throw InconsistencyError("y_closure: group grew past the expected order");
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

} // namespace

YAutGroupReport y_aut_group(const YCurve& y) {
    const FieldPtr& amb = y.ambient;
    const std::uint64_t q = y.q();
    FieldElement a = lift_element(y.a, amb);

    std::vector<YAutMap> gens;
    for (const auto& al : y.kernel) gens.push_back(y_translation(al));
    YAutMap nu = y_negation(amb);
    YAutMap mu = y_hyperelliptic(a);
    gens.push_back(nu);
    gens.push_back(mu);

    YAutGroupReport rep;
    rep.elements = y_closure(gens, 4 * q);
    auto rel = [&](std::string lhs, std::string rhs, bool ok) {
        rep.relations.push_back({std::move(lhs), std::move(rhs), ok});
    };
    rel("|<E_q, nu, mu>|", "4q = " + std::to_string(4 * q), rep.elements.size() == 4 * q);

    bool all_verified = true;
    for (const YAutMap& m : rep.elements)
        if (!y_map_is_automorphism(y, m)) all_verified = false;
    rel("every element", "verified symbolically on L(y) = a x + 1/x", all_verified);

    rel("nu^2", "id", order_of(nu) == 2);
    rel("mu^2", "id", order_of(mu) == 2);

    bool tau_conj = true;
    for (const auto& al : y.kernel) {
        YAutMap t = y_translation(al);
        if (!(compose(compose(nu, t), nu) == y_translation(-al))) tau_conj = false;
    }
    rel("nu tau_alpha nu", "tau_{-alpha}", tau_conj);

    bool central = true;
    for (const YAutMap& g : rep.elements)
        if (!(compose(mu, g) == compose(g, mu))) central = false;
    rel("mu g", "g mu for every g (mu central)", central);

    // direct product: Dih(E_q) x <mu>
    std::vector<YAutMap> dih_gens;
    for (const auto& al : y.kernel) dih_gens.push_back(y_translation(al));
    dih_gens.push_back(nu);
    std::vector<YAutMap> dih = y_closure(dih_gens, 2 * q);
    std::set<YAutMap> dih_set(dih.begin(), dih.end());
    bool direct = dih.size() == 2 * q && dih_set.count(mu) == 0;
    std::set<YAutMap> products;
    for (const YAutMap& d : dih) {
        products.insert(d);
        products.insert(compose(mu, d));
    }
    direct = direct && products.size() == 4 * q;
    rel("Dih(E_q) x <mu>", "direct product covering the group", direct);

    rep.ok = std::all_of(rep.relations.begin(), rep.relations.end(),
                         [](const RelationCheck& r) { return r.ok; });
    rep.tags = {"E_q:elementary-abelian:" + std::to_string(q),
                "Dih(E_q):generalized-dihedral:" + std::to_string(2 * q),
                "mu:central-hyperelliptic-involution",
                "direct-product:Dih(E_q)x<mu>:order:" + std::to_string(4 * q)};
    if (!rep.ok) rep.tags.push_back("FAILED-RELATIONS");
    return rep;
}

YAutGroupReport z_dihedral_report(const ZCurve& z) {
    const FieldPtr& amb = z.ambient;
    const std::uint64_t q = z.q();

    std::vector<YAutMap> gens;
    for (const auto& al : z.kernel) gens.push_back(y_translation(al));
    YAutMap nu = y_negation(amb);
    gens.push_back(nu);

    YAutGroupReport rep;
    rep.elements = y_closure(gens, 2 * q);
    auto rel = [&](std::string lhs, std::string rhs, bool ok) {
        rep.relations.push_back({std::move(lhs), std::move(rhs), ok});
    };
    rel("|Dih(E_q)|", "2q = " + std::to_string(2 * q), rep.elements.size() == 2 * q);

    bool all_verified = true;
    for (const YAutMap& m : rep.elements)
        if (!z_map_is_automorphism(z, m)) all_verified = false;
    rel("every element", "verified symbolically on L(y) = x^3 + b x", all_verified);
    rel("nu^2", "id", order_of(nu) == 2);
    bool tau_conj = true;
    for (const auto& al : z.kernel)
        if (!(compose(compose(nu, y_translation(al)), nu) == y_translation(-al)))
            tau_conj = false;
    rel("nu tau_alpha nu", "tau_{-alpha}", tau_conj);

    rep.ok = std::all_of(rep.relations.begin(), rep.relations.end(),
                         [](const RelationCheck& r) { return r.ok; });
    rep.tags = {"Dih(E_q):containment-certificate:order:" + std::to_string(2 * q)};
    if (!rep.ok) rep.tags.push_back("FAILED-RELATIONS");
    return rep;
}

WeierstrassData weierstrass_places(const YCurve& y) {
    const std::uint64_t q = y.q();
    WeierstrassData data;
    auto chk = [&](std::string lhs, std::string rhs, bool ok) {
        data.checks.push_back({std::move(lhs), std::move(rhs), ok});
    };

    // ladder until the fixed locus a x^2 = 1 and its fibers L(y) = 2 a r
    // materialize; the kernel must split as well to list whole fibers
    FieldPtr w;
    std::vector<FieldElement> fixed_roots;
    for (int t = 1; t <= 16 && !w; ++t) {
        FieldPtr cand = make_field(y.tower.p, y.ambient->degree() * t, y.coeff_field()->seed());
        if (!cand->order_fits_u64() || cand->order() > (std::uint64_t{1} << 22))
            throw GuardError("weierstrass_places: splitting ladder left desk scale");
        if (roots_in(y.l, cand).size() != q) continue;
        FieldElement a = lift_element(y.a, cand);
        std::vector<FieldElement> roots;
        for (std::uint64_t i = 0; i < cand->order() && roots.size() < 2; ++i) {
            FieldElement x = cand->element_at(i);
            if ((a * x * x) == cand->one()) roots.push_back(x);
        }
        if (roots.size() != 2) continue;
        bool fibers_ok = true;
        LinearizedPoly la = lift(y.l, cand);
        for (const auto& r : roots) {
            FieldElement c = a * r + r.inverse();
            if (!solve_in(la, c).has_value()) fibers_ok = false;
        }
        if (!fibers_ok) continue;
        w = cand;
        fixed_roots = std::move(roots);
    }
    if (!w) throw InconsistencyError("weierstrass_places: splitting ladder exhausted");

    data.ambient = w;
    FieldElement a = lift_element(y.a, w);
    LinearizedPoly la = lift(y.l, w);
    std::vector<FieldElement> ker = roots_in(y.l, w);
    for (const auto& r : fixed_roots) {
        FieldElement c = a * r + r.inverse();
        FieldElement y0 = *solve_in(la, c);
        for (const auto& k : ker) data.places.emplace_back(r, y0 + k);
    }

    std::set<std::pair<std::uint64_t, std::uint64_t>> distinct;
    for (const auto& [px, py] : data.places) distinct.insert({w->index_of(px), w->index_of(py)});
    chk("number of fixed places of mu", "2q = " + std::to_string(2 * q),
        distinct.size() == 2 * q && data.places.size() == 2 * q);

    bool on_curve = true;
    for (const auto& [px, py] : data.places)
        if (!(eval(la, py) == a * px + px.inverse())) on_curve = false;
    chk("place labels", "satisfy L(y) = a x + 1/x", on_curve);

    bool fixed = true;
    for (const auto& [px, py] : data.places) {
        FieldElement mx = (a * px).inverse(); // mu: x -> 1/(a x), y -> y
        if (!(mx == px)) fixed = false;
    }
    chk("mu(r, y)", "(r, y): x-part satisfies a x^2 = 1", fixed);

    // the zeros of a x^2 + 1 are swapped, not fixed (they exist in w or not)
    std::vector<FieldElement> swapped;
    for (std::uint64_t i = 0; i < w->order() && swapped.size() < 2; ++i) {
        FieldElement x = w->element_at(i);
        if ((a * x * x) == -(w->one())) swapped.push_back(x);
    }
    if (swapped.size() == 2) {
        bool swap_ok = true;
        for (const auto& s : swapped)
            if ((a * s).inverse() == s) swap_ok = false;
        chk("mu on the zeros of a x^2 + 1", "swaps them (they are not fixed)", swap_ok);
    }

    chk("mu", "involution", order_of(y_hyperelliptic(a)) == 2);
    chk("2q > 4", "fixed places are Weierstrass places (hyperelliptic criterion)", 2 * q > 4);

    data.ok = std::all_of(data.checks.begin(), data.checks.end(),
                          [](const RelationCheck& r) { return r.ok; });
    return data;
}

YSearchResult y_aut_search(const YCurve& y, int ambient_degree, const SearchOptions& opt) {
    if (ambient_degree < 1) throw ParameterError("y_aut_search: ambient degree must be >= 1");
    if (ambient_degree % y.coeff_field()->degree() != 0)
        throw ParameterError("y_aut_search: coefficients do not embed");
    FieldPtr fs = make_field(y.tower.p, ambient_degree, y.coeff_field()->seed());
    if (fs->order() > 4096)
        throw GuardError("desk-scale limit: y_aut_search over a field of order " +
                         std::to_string(fs->order()) + " is refused");
    if (roots_in(y.l, fs).size() != y.q())
        throw ParameterError("y_aut_search: GF(p^" + std::to_string(ambient_degree) +
                             ") does not contain ker L; it splits in GF(p^" +
                             std::to_string(y.ambient->degree()) + ")");

    FieldElement a = lift_element(y.a, fs);
    LinearizedPoly la = lift(y.l, fs);
    std::vector<FieldElement> els = enumerate(fs);

    // rational affine points (x != 0)
    std::vector<std::pair<FieldElement, FieldElement>> pts;
    for (const auto& x : els) {
        if (x.is_zero()) continue;
        FieldElement g = a * x + x.inverse();
        for (const auto& yv : els)
            if (eval(la, yv) == g) pts.emplace_back(x, yv);
    }
    const std::size_t npts =
        std::min<std::size_t>(pts.size(), static_cast<std::size_t>(opt.max_filter_points));

    YSearchResult res;
    res.search_field = fs;
    res.evaluated = 0;
    auto spend = [&](std::uint64_t n) {
        res.evaluated += n;
        if (res.evaluated > opt.budget)
            throw BudgetError("y_aut_search: candidate-evaluation budget exceeded");
    };

    const std::uint64_t s = fs->order();
    for (std::uint64_t si = 0; si < s; ++si)
        for (std::uint64_t ui = 0; ui < s; ++ui)
            for (std::uint64_t vi = 0; vi < s; ++vi)
                for (std::uint64_t wi = 0; wi < s; ++wi) {
                    // canonical scaling: first nonzero of (s,u,v,w) is 1
                    std::uint64_t first = si ? si : (ui ? ui : (vi ? vi : wi));
                    if (first != 1) continue;
                    const FieldElement S = els[si], U = els[ui], V = els[vi], W = els[wi];
                    if ((S * W - U * V).is_zero()) continue;
                    for (std::uint64_t ei = 1; ei < s; ++ei)
                        for (std::uint64_t ai = 0; ai < s; ++ai) {
                            spend(1);
                            const FieldElement E = els[ei], AL = els[ai];
                            bool alive = true;
                            for (std::size_t tI = 0; tI < npts && alive; ++tI) {
                                const auto& [px, py] = pts[tI];
                                FieldElement den = V * px + W;
                                if (den.is_zero()) {
                                    alive = false;
                                    break;
                                }
                                FieldElement xp = (S * px + U) * den.inverse();
                                if (xp.is_zero()) {
                                    alive = false;
                                    break;
                                }
                                FieldElement yp = E * py + AL;
                                if (!(eval(la, yp) == a * xp + xp.inverse())) alive = false;
                            }
                            if (!alive) continue;
                            YAutMap cand{{S, U, V, W}, E, AL};
                            if (y_map_is_automorphism(y, cand))
                                res.maps.push_back(canonical(cand));
                        }
                }
    std::sort(res.maps.begin(), res.maps.end());
    return res;
}

SigmaQuotient quotient_sigma(const AMCurve& c, char axis) {
    if (axis != 'x' && axis != 'y') throw ParameterError("quotient_sigma: axis must be 'x' or 'y'");
    const LinearizedPoly& a_poly = axis == 'x' ? c.l1() : c.l2(); // translated coordinate
    const LinearizedPoly& b_poly = axis == 'x' ? c.l2() : c.l1(); // untouched coordinate

    SigmaQuotient out;
    out.axis = axis;
    out.relation = axis == 'x' ? "eta = L1(x); quotient relation L2(y) = 1/eta (rational in y)"
                               : "eta = L2(y); quotient relation L1(x) = 1/eta (rational in x)";

    for (int k = 1; k <= 2; ++k) {
        FieldPtr f = make_field(c.tower().p, c.coeff_field()->degree() * k,
                                c.coeff_field()->seed());
        LinearizedPoly la = lift(a_poly, f), lb = lift(b_poly, f);
        std::vector<FieldElement> translations = roots_in(a_poly, f);
        std::vector<FieldElement> els = enumerate(f);

        // rational affine points as (translated coord, fixed coord) pairs,
        // via one value-bucket pass over the untouched coordinate
        std::vector<std::vector<std::uint64_t>> bucket(f->order());
        for (const auto& w : els) bucket[f->index_of(eval(lb, w))].push_back(f->index_of(w));
        std::set<std::pair<std::uint64_t, std::uint64_t>> points;
        for (const auto& u : els) {
            FieldElement va = eval(la, u);
            if (va.is_zero()) continue;
            for (std::uint64_t w : bucket[f->index_of(va.inverse())])
                points.insert({f->index_of(u), w});
        }

        // orbits of the explicit translation action u -> u + t
        std::int64_t affine_orbits = 0;
        std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
        for (const auto& pt : points) {
            if (seen.count(pt)) continue;
            ++affine_orbits;
            FieldElement u = f->element_at(pt.first);
            for (const auto& t : translations)
                seen.insert({f->index_of(u + t), pt.second});
        }

        // infinity labels: the translated coordinate's kernel labels form
        // one orbit; each untouched-coordinate label is fixed
        std::int64_t inf_orbits = 1 + static_cast<std::int64_t>(roots_in(b_poly, f).size());
        std::int64_t orbit_count = affine_orbits + inf_orbits;

        // places of the rational quotient, through the presentation:
        // one for each value of the free coordinate, plus its infinity
        std::int64_t quot_affine = 0, quot_eta_inf = 0;
        for (const auto& w : els) {
            if (eval(lb, w).is_zero())
                ++quot_eta_inf;
            else
                ++quot_affine;
        }
        std::int64_t quot_places = quot_affine + quot_eta_inf + 1;
        const std::int64_t expected = static_cast<std::int64_t>(f->order()) + 1;

        out.transcript.push_back(
            {"rationality over GF(" + std::to_string(f->order()) +
                 "): quotient place count " + std::to_string(quot_places),
             "Q0^k + 1 = " + std::to_string(expected), quot_places == expected});
        out.transcript.push_back(
            {"Sigma_" + std::string(1, axis) + "-orbits of rational places over GF(" +
                 std::to_string(f->order()) + "): " + std::to_string(orbit_count),
             "places of the rational quotient: " + std::to_string(quot_places),
             orbit_count == quot_places});
    }
    out.ok = std::all_of(out.transcript.begin(), out.transcript.end(),
                         [](const RelationCheck& r) { return r.ok; });
    return out;
}

DiagonalQuotient diagonal_quotient(const AMCurve& c) {
    if (!c.diagonal())
        throw ParameterError("diagonal_quotient: L1 != L2 (not even up to monic scaling)");
    if (!(c.l1() == c.l2()))
        throw ParameterError("diagonal_quotient: L1 and L2 agree only up to a scalar; "
                             "rescale the presentation to L1 = L2 first");

    LinearizedPoly lp = as_p_linearized(c.l1());
    DiagonalQuotient out{y_curve(lp, c.coeff_field()->one()), {}, {}, false};
    auto chk = [&](std::string lhs, std::string rhs, bool ok) {
        out.checks.push_back({std::move(lhs), std::move(rhs), ok});
    };

    // additivity, coefficientwise: L(X+Y) - L(X) - L(Y) == 0
    const FieldPtr& cf = c.coeff_field();
    Bivar both = bv_linearized_affine(c.l1(), cf->one(), cf->one(), cf->zero());
    Bivar xonly = bv_linearized_affine(c.l1(), cf->one(), cf->zero(), cf->zero());
    Bivar yonly = bv_linearized_affine(c.l1(), cf->zero(), cf->one(), cf->zero());
    Bivar diff = bv_sub(bv_sub(both, xonly), yonly);
    chk("L(X+Y) - L(X) - L(Y)", "0 coefficientwise", diff.empty());

    // on the curve: L(x) = 1/eta with eta = L(y), so L(t) = eta + 1/eta;
    // verified numerically on every affine rational point over GF(Q0^k)
    bool pointwise = true;
    for (int k = 1; k <= 2; ++k) {
        for (const auto& [px, py] : affine_points(c, k)) {
            LinearizedPoly la = lift(c.l1(), px.field());
            FieldElement eta = eval(la, py);
            FieldElement t = px + py;
            if (!(eval(la, t) == eta + eta.inverse())) pointwise = false;
        }
    }
    chk("L(x+y) on rational points", "L(y) + 1/L(y)", pointwise);

    // the antidiagonal subgroup fixes eta and t
    bool inv_ok = true;
    for (const auto& al : c.kernel1()) {
        bool neg_in_kernel =
            std::binary_search(c.kernel2().begin(), c.kernel2().end(), -al);
        if (!neg_in_kernel || !eval(c.l1_ambient(), al).is_zero()) inv_ok = false;
        out.invariance_subgroup.push_back(make_tau(al, -al));
    }
    chk("tau_{alpha,-alpha} for alpha in ker L",
        "fixes t = x+y (translates by alpha - alpha = 0) and eta = L(y) (L(-alpha) = 0)",
        inv_ok);
    chk("|H|", "q = " + std::to_string(c.q()),
        out.invariance_subgroup.size() == c.q());

    chk("genus of the quotient", "q - 1 = " + std::to_string(c.q() - 1),
        genus(out.curve) == static_cast<std::int64_t>(c.q()) - 1);

    out.ok = std::all_of(out.checks.begin(), out.checks.end(),
                         [](const RelationCheck& r) { return r.ok; });
    return out;
}

FineFormResult fine_form_member(const LinearizedPoly& l1, const LinearizedPoly& l,
                                const FieldElement& a) {
    if (l1.n() != 1 || l.n() != 1)
        throw ParameterError("fine_form_member: L1 and L must be p-linearized");
    if (l1.p() != l.p() || l1.p() != a.field()->p())
        throw ParameterError("fine_form_member: mixed characteristics");
    if (a.is_zero()) throw ParameterError("fine_form_member: a must be nonzero");

    // common coefficient field for l1, l, a
    int deg = std::lcm(std::lcm(l1.coeff_field()->degree(), l.coeff_field()->degree()),
                       a.field()->degree());
    FieldPtr f = deg == l1.coeff_field()->degree() ? l1.coeff_field()
                                                   : make_field(l1.p(), deg, l1.coeff_field()->seed());
    LinearizedPoly l1f = lift(l1, f), lf = lift(l, f);
    FieldElement af = lift_element(a, f);

    // L(Y) - L1(Z') = L2(Y - Z') forces L2 = L and L2 = L1
    if (!(l1f == lf))
        throw ParameterError(
            "fine_form_member: no separable linearized L2 satisfies L(Y) - L1(Z') = L2(Y - Z') "
            "(matching the pure monomials forces L2 = L and L2 = L1, so L must equal L1)");

    std::vector<RelationCheck> checks;
    auto chk = [&](std::string lhs, std::string rhs, bool ok) {
        checks.push_back({std::move(lhs), std::move(rhs), ok});
    };

    // splitting identity, expanded coefficientwise
    Bivar lhs;
    {
        Bivar ly = bv_linearized_affine(lf, f->zero(), f->one(), f->zero());
        Bivar l1z = bv_linearized_affine(l1f, f->one(), f->zero(), f->zero());
        lhs = bv_sub(ly, l1z);
    }
    Bivar rhs = bv_linearized_affine(lf, -(f->one()), f->one(), f->zero()); // L2(Y - Z')
    chk("L(Y) - L1(Z')", "L2(Y - Z') with L2 = L", lhs == rhs);

    // b with b^q = a: invert the q-power map on the multiplicative group
    const std::uint64_t n = f->order() - 1;
    const std::uint64_t q = lf.degree();
    std::uint64_t s = 1, qm = q % n;
    {
        // modular inverse of q mod n by extended Euclid on 64-bit values
        std::int64_t t0 = 0, t1 = 1, r0 = static_cast<std::int64_t>(n),
                     r1 = static_cast<std::int64_t>(qm == 0 ? n : qm);
        while (r1 != 0) {
            std::int64_t qq = r0 / r1;
            std::int64_t tmp = t0 - qq * t1;
            t0 = t1;
            t1 = tmp;
            tmp = r0 - qq * r1;
            r0 = r1;
            r1 = tmp;
        }
        if (r0 != 1)
            throw InconsistencyError("fine_form_member: q not invertible mod p^e - 1");
        s = static_cast<std::uint64_t>((t0 % static_cast<std::int64_t>(n) +
                                        static_cast<std::int64_t>(n)) %
                                       static_cast<std::int64_t>(n));
    }
    FieldElement b = af.pow(s);
    chk("b^q", "a", b.pow(q) == af);

    // member: L1~(X) = (1/a) L1(b X)
    FieldElement ai = af.inverse();
    std::vector<FieldElement> c1;
    FieldElement bp = b;
    for (int i = 0; i <= l1f.m(); ++i) {
        c1.push_back(l1f.coeffs()[static_cast<std::size_t>(i)] * bp * ai);
        if (i < l1f.m()) bp = bp.frobenius();
    }
    LinearizedPoly l1_tilde(l1f.p(), 1, std::move(c1));

    // substitution check: L1(bX) (L(Y + bX) - L1(bX)) == a * L1~(X) L2(Y)
    Bivar l1bx = bv_linearized_affine(l1f, b, f->zero(), f->zero());
    Bivar lybx = bv_linearized_affine(lf, b, f->one(), f->zero());
    Bivar lhs_fine = bv_mul(l1bx, bv_sub(lybx, l1bx));
    Bivar mem = bv_mul(bv_linearized_affine(l1_tilde, f->one(), f->zero(), f->zero()),
                       bv_linearized_affine(lf, f->zero(), f->one(), f->zero()));
    chk("L1(bX) (L(Y+bX) - L1(bX))", "a * L1~(X) L2(Y)", lhs_fine == bv_scale(mem, af));

    bool ok = std::all_of(checks.begin(), checks.end(),
                          [](const RelationCheck& r) { return r.ok; });
    return FineFormResult{lf, b, new_am_curve(l1_tilde, lf), std::move(checks), ok};
}

} // namespace amc
