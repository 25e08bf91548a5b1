#include "amcurve/autgroup.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "bivar_internal.hpp"

namespace amc {

using detail::Bivar;
using detail::BKey;
using detail::bv_add;
using detail::bv_mul;
using detail::bv_linearized_affine;
using detail::render_elem;

bool operator==(const AutMap& a, const AutMap& b) {
    return a.swap == b.swap && a.lambda == b.lambda && a.alpha == b.alpha && a.beta == b.beta;
}

bool operator<(const AutMap& a, const AutMap& b) {
    if (a.swap != b.swap) return a.swap < b.swap;
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.beta < b.beta;
}

AutMap aut_identity(const FieldPtr& ambient) {
    return AutMap{false, ambient->one(), ambient->zero(), ambient->zero()};
}

AutMap make_tau(const FieldElement& alpha, const FieldElement& beta) {
    return AutMap{false, alpha.field()->one(), alpha, beta};
}

AutMap make_theta(const FieldElement& lambda) {
    return AutMap{false, lambda, lambda.field()->zero(), lambda.field()->zero()};
}

AutMap make_xi(const FieldPtr& ambient) {
    return AutMap{true, ambient->one(), ambient->zero(), ambient->zero()};
}

AutMap compose(const AutMap& outer, const AutMap& inner) {
    if (!same_field(outer.lambda.field(), inner.lambda.field()))
        throw ParameterError("compose(AutMap): different ambient fields");
    AutMap r{false, outer.lambda, outer.alpha, outer.beta};
    FieldElement l2i = outer.lambda.inverse();
    if (!outer.swap) {
        r.swap = inner.swap;
        r.lambda = outer.lambda * inner.lambda;
        r.alpha = outer.lambda * inner.alpha + outer.alpha;
        r.beta = l2i * inner.beta + outer.beta;
    } else {
        r.swap = !inner.swap;
        r.lambda = outer.lambda * inner.lambda.inverse();
        r.alpha = outer.lambda * inner.beta + outer.alpha;
        r.beta = l2i * inner.alpha + outer.beta;
    }
    return r;
}

AutMap inverse(const AutMap& m) {
    FieldElement li = m.lambda.inverse();
    if (!m.swap) return AutMap{false, li, -(li * m.alpha), -(m.lambda * m.beta)};
    return AutMap{true, m.lambda, -(m.lambda * m.beta), -(li * m.alpha)};
}

std::uint64_t order_of(const AutMap& m) {
    AutMap id = aut_identity(m.lambda.field());
    AutMap acc = m;
    std::uint64_t ord = 1;
    while (!(acc == id)) {
        acc = compose(m, acc);
        ++ord;
        if (ord > (std::uint64_t{1} << 32))
            throw InconsistencyError("order_of: element order did not terminate");
    }
    return ord;
}

namespace {

AutCertificate compare_bivar(const Bivar& lhs, const Bivar& rhs) {
    AutCertificate cert;
    cert.ok = true;
    std::set<BKey> keys;
    for (const auto& [k, v] : lhs) keys.insert(k);
    for (const auto& [k, v] : rhs) keys.insert(k);
    for (const BKey& k : keys) {
        auto il = lhs.find(k);
        auto ir = rhs.find(k);
        MonomialCheck mc;
        mc.x_exp = k.first;
        mc.y_exp = k.second;
        mc.lhs = il == lhs.end() ? "0" : render_elem(il->second);
        mc.rhs = ir == rhs.end() ? "0" : render_elem(ir->second);
        bool same = (il == lhs.end() && ir == rhs.end()) ||
                    (il != lhs.end() && ir != rhs.end() && il->second == ir->second);
        mc.ok = same;
        if (!same && cert.ok) {
            cert.ok = false;
            std::ostringstream os;
            os << "X^" << k.first << " Y^" << k.second << ": " << mc.lhs << " != " << mc.rhs;
            cert.first_mismatch = os.str();
        }
        cert.transcript.push_back(std::move(mc));
    }
    return cert;
}

} // namespace

AutCertificate verify_automorphism(const AMCurve& c, const AutMap& phi) {
    const FieldPtr& amb = c.ambient();
    if (!same_field(phi.lambda.field(), amb) || !same_field(phi.alpha.field(), amb) ||
        !same_field(phi.beta.field(), amb))
        throw ParameterError("verify_automorphism: map does not live in the curve's ambient field");
    if (phi.lambda.is_zero()) throw ParameterError("verify_automorphism: lambda must be nonzero");

    const FieldElement zero = amb->zero();
    const FieldElement li = phi.lambda.inverse();
    // phi_x = lambda*U + alpha, phi_y = lambda^-1*V + beta,
    // (U, V) = (Y, X) when swapped
    Bivar g1 = bv_linearized_affine(c.l1_ambient(), phi.swap ? zero : phi.lambda,
                                    phi.swap ? phi.lambda : zero, phi.alpha);
    Bivar g2 = bv_linearized_affine(c.l2_ambient(), phi.swap ? li : zero,
                                    phi.swap ? zero : li, phi.beta);
    Bivar lhs = bv_mul(g1, g2);

    Bivar fx = bv_linearized_affine(c.l1_ambient(), amb->one(), zero, zero);
    Bivar fy = bv_linearized_affine(c.l2_ambient(), zero, amb->one(), zero);
    Bivar rhs = bv_mul(fx, fy);

    return compare_bivar(lhs, rhs);
}

bool AutGroup::contains(const AutMap& m) const {
    return std::binary_search(elements.begin(), elements.end(), m);
}

namespace {

std::vector<AutMap> closure(const std::vector<AutMap>& gens, std::uint64_t cap) {
    std::set<AutMap> seen(gens.begin(), gens.end());
    seen.insert(aut_identity(gens.front().lambda.field()));
    std::vector<AutMap> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<AutMap> next;
        for (const AutMap& g : frontier) {
            for (const AutMap& h : gens) {
                AutMap gh = compose(g, h);
                if (seen.insert(gh).second) next.push_back(gh);
                if (seen.size() > cap)
                    throw InconsistencyError("closure: group grew past the expected order");
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

} // namespace

AutGroup claimed_group(const AMCurve& c) {
    const std::uint64_t q = c.q();
    const std::uint64_t qbar = c.qbar();
    AutGroup g;
    for (const auto& a : c.kernel1())
        for (const auto& b : c.kernel2()) g.generators.push_back(make_tau(a, b));
    g.theta = make_theta(c.lambda());
    g.generators.push_back(*g.theta);
    if (c.diagonal()) {
        g.xi = make_xi(c.ambient());
        g.generators.push_back(*g.xi);
    }

    const std::uint64_t expected = (c.diagonal() ? 2 : 1) * (qbar - 1) * q * q;
    g.elements = closure(g.generators, expected);
    if (g.order() != expected)
        throw InconsistencyError("claimed_group: order " + std::to_string(g.order()) +
                                 " differs from the expected order " + std::to_string(expected));
    for (const AutMap& m : g.elements) {
        AutCertificate cert = verify_automorphism(c, m);
        if (!cert.ok)
            throw InconsistencyError("claimed_group: element failed symbolic verification: " +
                                     cert.first_mismatch);
    }
    g.structure_tags = {"sigma:elementary-abelian:" + std::to_string(q * q),
                        c.diagonal() ? "complement:dihedral:" + std::to_string(2 * (qbar - 1))
                                     : "complement:cyclic:" + std::to_string(qbar - 1),
                        "semidirect-product", "sigma:sylow-p"};
    return g;
}

StructureReport structure_report(const AMCurve& c, const AutGroup& g) {
    StructureReport rep;
    rep.order = g.order();
    const std::uint64_t q = c.q();
    const std::uint64_t qbar = c.qbar();
    const AutMap id = aut_identity(c.ambient());
    auto rel = [&](std::string lhs, std::string rhs, bool ok) {
        rep.relations.push_back({std::move(lhs), std::move(rhs), ok});
    };

    // Sigma: the translation part
    std::vector<AutMap> sigma;
    for (const AutMap& m : g.elements)
        if (!m.swap && m.lambda.is_one()) sigma.push_back(m);
    rel("|Sigma|", "q^2 = " + std::to_string(q * q), sigma.size() == q * q);

    bool exp_p = true;
    for (const AutMap& s : sigma)
        if (!(s == id) && order_of(s) != static_cast<std::uint64_t>(c.tower().p)) exp_p = false;
    rel("order(tau)", "p for every nonidentity tau", exp_p);

    bool abelian = true;
    for (const AutMap& s : sigma)
        for (const AutMap& t : sigma)
            if (!(compose(s, t) == compose(t, s))) abelian = false;
    rel("Sigma", "abelian", abelian);

    std::set<AutMap> sigma_set(sigma.begin(), sigma.end());
    bool normal = true;
    for (const AutMap& m : g.elements) {
        AutMap mi = inverse(m);
        for (const AutMap& s : sigma)
            if (sigma_set.count(compose(compose(m, s), mi)) == 0) normal = false;
    }
    rel("g Sigma g^-1", "Sigma for every g in G", normal);

    // complement
    bool have_theta = g.theta.has_value();
    rel("theta", "present", have_theta);
    std::vector<AutMap> comp_gens;
    if (have_theta) {
        comp_gens.push_back(*g.theta);
        rel("order(theta)", "qbar-1 = " + std::to_string(qbar - 1),
            order_of(*g.theta) == qbar - 1);
    }
    if (g.xi) {
        comp_gens.push_back(*g.xi);
        rel("xi^2", "id", compose(*g.xi, *g.xi) == id);
        rel("xi theta xi", "theta^-1",
            compose(compose(*g.xi, *g.theta), *g.xi) == inverse(*g.theta));
    }
    std::vector<AutMap> comp = comp_gens.empty() ? std::vector<AutMap>{id}
                                                 : closure(comp_gens, g.order());
    const std::uint64_t comp_expected = g.xi ? 2 * (qbar - 1) : (qbar - 1);
    rel("|complement|", std::to_string(comp_expected), comp.size() == comp_expected);

    std::set<AutMap> comp_set(comp.begin(), comp.end());
    bool trivial_meet = true;
    for (const AutMap& s : sigma)
        if (!(s == id) && comp_set.count(s)) trivial_meet = false;
    rel("Sigma meet complement", "{id}", trivial_meet);

    std::set<AutMap> products;
    for (const AutMap& s : sigma)
        for (const AutMap& d : comp) products.insert(compose(s, d));
    rel("Sigma * complement", "G, product map bijective",
        products.size() == g.order() && sigma.size() * comp.size() == g.order());

    // Sylow: [G : Sigma] coprime to p
    bool sylow = (g.order() % (q * q) == 0) &&
                 ((g.order() / (q * q)) % static_cast<std::uint64_t>(c.tower().p) != 0);
    rel("[G : Sigma]", "coprime to p (Sigma is a Sylow p-subgroup)", sylow);

    // semidirect action laws on the generators
    if (have_theta) {
        bool law = true;
        AutMap ti = inverse(*g.theta);
        for (const auto& a : c.kernel1())
            for (const auto& b : c.kernel2()) {
                AutMap lhs = compose(compose(*g.theta, make_tau(a, b)), ti);
                AutMap rhs = make_tau(c.lambda() * a, c.lambda().inverse() * b);
                if (!(lhs == rhs)) law = false;
            }
        rel("theta tau_{a,b} theta^-1", "tau_{lambda a, lambda^-1 b}", law);
    }
    if (g.xi) {
        bool law = true;
        for (const auto& a : c.kernel1())
            for (const auto& b : c.kernel2()) {
                AutMap lhs = compose(compose(*g.xi, make_tau(a, b)), *g.xi);
                if (!(lhs == make_tau(b, a))) law = false;
            }
        rel("xi tau_{a,b} xi", "tau_{b,a}", law);
    }

    rep.ok = std::all_of(rep.relations.begin(), rep.relations.end(),
                         [](const RelationCheck& r) { return r.ok; });
    rep.tags = g.structure_tags;
    if (!rep.ok) rep.tags.push_back("FAILED-RELATIONS");
    return rep;
}

bool operator==(const PlaceLabel& a, const PlaceLabel& b) {
    return a.axis == b.axis && a.root == b.root;
}

bool operator<(const PlaceLabel& a, const PlaceLabel& b) {
    if (a.axis != b.axis) return a.axis < b.axis;
    return a.root < b.root;
}

OrbitData sigma_orbits(const AMCurve& c) {
    const std::uint64_t q = c.q();
    std::vector<PlaceLabel> places;
    for (const auto& a : c.kernel1()) places.push_back({'x', a});
    for (const auto& b : c.kernel2()) places.push_back({'y', b});

    std::vector<AutMap> sigma;
    for (const auto& a : c.kernel1())
        for (const auto& b : c.kernel2()) sigma.push_back(make_tau(a, b));

    auto act = [](const AutMap& t, const PlaceLabel& pl) {
        return PlaceLabel{pl.axis, pl.axis == 'x' ? pl.root + t.alpha : pl.root + t.beta};
    };

    OrbitData data;
    std::set<PlaceLabel> done;
    for (const PlaceLabel& start : places) {
        if (done.count(start)) continue;
        SigmaOrbit orb;
        std::set<PlaceLabel> members;
        for (const AutMap& t : sigma) members.insert(act(t, start));
        orb.places.assign(members.begin(), members.end());
        for (const PlaceLabel& pl : orb.places) done.insert(pl);
        // stabilizer shared across the orbit
        for (const AutMap& t : sigma)
            if (act(t, start) == start) orb.stabilizer.push_back(t);
        for (const PlaceLabel& pl : orb.places) {
            std::vector<AutMap> st;
            for (const AutMap& t : sigma)
                if (act(t, pl) == pl) st.push_back(t);
            if (st != orb.stabilizer)
                throw InconsistencyError("sigma_orbits: places of one orbit with different stabilizers");
        }
        orb.note = start.axis == 'x'
                       ? "places P_{x=alpha} (poles of y); stabilizer fixes the x-part: tau_{0,beta}"
                       : "places P_{y=beta} (poles of x); stabilizer fixes the y-part: tau_{alpha,0}";
        data.orbits.push_back(std::move(orb));
    }

    if (data.orbits.size() != 2)
        throw InconsistencyError("sigma_orbits: expected exactly two short orbits, found " +
                                 std::to_string(data.orbits.size()));
    for (const SigmaOrbit& o : data.orbits) {
        if (o.places.size() != q || o.stabilizer.size() != q)
            throw InconsistencyError("sigma_orbits: orbit/stabilizer sizes differ from q");
        if (o.places.size() * o.stabilizer.size() != q * q)
            throw InconsistencyError("sigma_orbits: orbit-stabilizer product mismatch");
    }
    // distinct stabilizers with trivial intersection
    std::set<AutMap> m1(data.orbits[0].stabilizer.begin(), data.orbits[0].stabilizer.end());
    int common = 0;
    for (const AutMap& t : data.orbits[1].stabilizer)
        if (m1.count(t)) ++common;
    if (common != 1) // only the identity
        throw InconsistencyError("sigma_orbits: stabilizers do not intersect trivially");
    return data;
}

namespace {

struct SearchTables {
    FieldPtr fs;
    std::uint32_t s;
    std::vector<std::uint16_t> add, mul; // s*s
    std::vector<std::uint16_t> inv;      // inv[0] unused
    std::vector<std::uint16_t> l1v, l2v;
    std::vector<char> img2;
    std::vector<std::uint16_t> px, py; // affine points (all of them)
};

SearchTables build_tables(const AMCurve& c, const FieldPtr& fs) {
    SearchTables t;
    t.fs = fs;
    const std::uint64_t s = fs->order();
    if (s > 4096) throw GuardError("desk-scale limit: linear_aut_search over a field of order " +
                                   std::to_string(s) + " is refused");
    t.s = static_cast<std::uint32_t>(s);
    std::vector<FieldElement> els = enumerate(fs);
    t.add.resize(s * s);
    t.mul.resize(s * s);
    for (std::uint64_t i = 0; i < s; ++i)
        for (std::uint64_t j = 0; j < s; ++j) {
            t.add[i * s + j] = static_cast<std::uint16_t>(fs->index_of(els[i] + els[j]));
            t.mul[i * s + j] = static_cast<std::uint16_t>(fs->index_of(els[i] * els[j]));
        }
    t.inv.assign(s, 0);
    for (std::uint64_t i = 1; i < s; ++i)
        t.inv[i] = static_cast<std::uint16_t>(fs->index_of(els[i].inverse()));
    LinearizedPoly l1 = lift(c.l1(), fs), l2 = lift(c.l2(), fs);
    t.l1v.resize(s);
    t.l2v.resize(s);
    t.img2.assign(s, 0);
    for (std::uint64_t i = 0; i < s; ++i) {
        t.l1v[i] = static_cast<std::uint16_t>(fs->index_of(eval(l1, els[i])));
        t.l2v[i] = static_cast<std::uint16_t>(fs->index_of(eval(l2, els[i])));
        t.img2[t.l2v[i]] = 1;
    }
    for (std::uint64_t x = 0; x < s; ++x) {
        std::uint16_t v = t.l1v[x];
        if (v == 0) continue;
        std::uint16_t w = t.inv[v];
        for (std::uint64_t y = 0; y < s; ++y)
            if (t.l2v[y] == w) {
                t.px.push_back(static_cast<std::uint16_t>(x));
                t.py.push_back(static_cast<std::uint16_t>(y));
            }
    }
    return t;
}

/// Exact confirmation in field arithmetic: sigma(F) = gamma * F for some
/// nonzero constant gamma, where F = L1(X) L2(Y) - 1. Returns gamma, or
/// nullopt when the identity fails.
std::optional<FieldElement> confirm_candidate(const AMCurve& c, const FieldPtr& fs,
                                              const LinearizedPoly& l1, const LinearizedPoly& l2,
                                              const FieldElement& a, const FieldElement& b,
                                              const FieldElement& e, const FieldElement& cc,
                                              const FieldElement& d, const FieldElement& f) {
    (void)c;
    Bivar g1 = bv_linearized_affine(l1, a, b, e);
    Bivar g2 = bv_linearized_affine(l2, cc, d, f);
    Bivar prod = bv_mul(g1, g2); // sigma(F) + 1

    // gamma from the constant term: const(sigma(F)) = c1 c2 - 1 = -gamma
    FieldElement c1c2 = eval(l1, e) * eval(l2, f);
    FieldElement gamma = fs->one() - c1c2;
    if (gamma.is_zero()) return std::nullopt;

    Bivar fx = bv_linearized_affine(l1, fs->one(), fs->zero(), fs->zero());
    Bivar fy = bv_linearized_affine(l2, fs->zero(), fs->one(), fs->zero());
    Bivar target = bv_mul(fx, fy); // gamma * (F + 1) = gamma*F + gamma
    Bivar expect;
    for (const auto& [k, v] : target) bv_add(expect, k, gamma * v);
    // sigma(F) = gamma F  <=>  prod - 1 = gamma*target - gamma
    bv_add(prod, {0, 0}, -(fs->one()));
    bv_add(expect, {0, 0}, -gamma);
    return prod == expect ? std::optional<FieldElement>(gamma) : std::nullopt;
}

} // namespace

LinearSearchResult linear_aut_search(const AMCurve& c, int ambient_degree,
                                     const SearchOptions& opt) {
    const Tower& tw = c.tower();
    if (ambient_degree < 1) throw ParameterError("linear_aut_search: ambient degree must be >= 1");
    if (ambient_degree % c.coeff_field()->degree() != 0)
        throw ParameterError("linear_aut_search: coefficients do not embed into GF(p^" +
                             std::to_string(ambient_degree) + ")");
    if (ambient_degree % tw.n != 0)
        throw ParameterError("linear_aut_search: GF(p^" + std::to_string(ambient_degree) +
                             ") does not contain F_qbar");
    FieldPtr fs = make_field(tw.p, ambient_degree, c.coeff_field()->seed());
    if (roots_in(c.l1(), fs).size() != c.q() || roots_in(c.l2(), fs).size() != c.q())
        throw ParameterError("linear_aut_search: GF(p^" + std::to_string(ambient_degree) +
                             ") does not contain both kernels; they split in GF(p^" +
                             std::to_string(c.ambient()->degree()) + ")");

    SearchTables t = build_tables(c, fs);
    const std::uint32_t s = t.s;
    LinearizedPoly l1 = lift(c.l1(), fs), l2 = lift(c.l2(), fs);
    const std::size_t npts = std::min<std::size_t>(t.px.size(),
                                                   static_cast<std::size_t>(opt.max_filter_points));

    LinearSearchResult res;
    res.search_field = fs;
    res.evaluated = 0;
    auto spend = [&](std::uint64_t n) {
        res.evaluated += n;
        if (res.evaluated > opt.budget)
            throw BudgetError("linear_aut_search: candidate-evaluation budget " +
                              std::to_string(opt.budget) + " exceeded");
    };

    std::vector<std::uint16_t> wt(npts);
    std::vector<FieldElement> els = enumerate(fs);
    for (std::uint32_t a = 0; a < s; ++a) {
        for (std::uint32_t cc = 0; cc < s; ++cc) {
            // pure-X monomials of sigma(F) force a*c = 0
            if (a != 0 && cc != 0) continue;
            for (std::uint32_t b = 0; b < s; ++b) {
                // a != 0 forces c = 0 above; with b != 0 as well, b*d = 0
                // would leave det = 0, so skip the subtree early
                if (a != 0 && b != 0) continue;
                for (std::uint32_t d = 0; d < s; ++d) {
                    if (b != 0 && d != 0) continue; // pure-Y monomials force b*d = 0
                    // det = a d - b c != 0
                    std::uint16_t ad = t.mul[static_cast<std::size_t>(a) * s + d];
                    std::uint16_t bc = t.mul[static_cast<std::size_t>(b) * s + cc];
                    FieldElement det = els[ad] - els[bc];
                    if (det.is_zero()) continue;
                    for (std::uint32_t e = 0; e < s; ++e) {
                        spend(1);
                        bool alive = true;
                        for (std::size_t i = 0; i < npts && alive; ++i) {
                            std::uint16_t u = t.add[static_cast<std::size_t>(
                                                        t.mul[static_cast<std::size_t>(a) * s +
                                                              t.px[i]]) *
                                                        s +
                                                    t.mul[static_cast<std::size_t>(b) * s +
                                                          t.py[i]]];
                            u = t.add[static_cast<std::size_t>(u) * s + e];
                            std::uint16_t v = t.l1v[u];
                            if (v == 0 || !t.img2[t.inv[v]]) {
                                alive = false;
                            } else {
                                wt[i] = t.inv[v];
                            }
                        }
                        if (!alive) continue;
                        for (std::uint32_t f = 0; f < s; ++f) {
                            spend(1);
                            bool pass = true;
                            for (std::size_t i = 0; i < npts && pass; ++i) {
                                std::uint16_t z =
                                    t.add[static_cast<std::size_t>(
                                              t.mul[static_cast<std::size_t>(cc) * s + t.px[i]]) *
                                              s +
                                          t.mul[static_cast<std::size_t>(d) * s + t.py[i]]];
                                z = t.add[static_cast<std::size_t>(z) * s + f];
                                if (t.l2v[z] != wt[i]) pass = false;
                            }
                            if (!pass) continue;
                            auto gamma = confirm_candidate(c, fs, l1, l2, els[a], els[b], els[e],
                                                           els[cc], els[d], els[f]);
                            if (gamma)
                                res.maps.push_back({els[a], els[b], els[cc], els[d], els[e],
                                                    els[f], *gamma});
                        }
                    }
                }
            }
        }
    }
    return res;
}

std::vector<AutMap> as_aut_maps(const LinearSearchResult& r) {
    std::vector<AutMap> out;
    for (const LinearMapCandidate& m : r.maps) {
        if (!m.gamma.is_one())
            throw InconsistencyError("as_aut_maps: found map with gamma != 1, outside the structured shape");
        if (m.b.is_zero() && m.c.is_zero()) {
            if (!(m.d == m.a.inverse()))
                throw InconsistencyError("as_aut_maps: plain map with d != a^-1");
            out.push_back(AutMap{false, m.a, m.e, m.f});
        } else if (m.a.is_zero() && m.d.is_zero()) {
            if (!(m.c == m.b.inverse()))
                throw InconsistencyError("as_aut_maps: swap map with c != b^-1");
            out.push_back(AutMap{true, m.b, m.e, m.f});
        } else {
            throw InconsistencyError("as_aut_maps: mixed-shape map cannot be structured");
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool same_maps(const LinearSearchResult& r, const AutGroup& g) {
    const FieldPtr& fs = r.search_field;
    const FieldPtr& amb = g.elements.front().lambda.field();
    if (fs->degree() % amb->degree() != 0)
        throw ParameterError("same_maps: group ambient does not embed into the search field");
    Embedding em = embed(amb, fs);
    auto key = [&](const FieldElement& x) { return fs->index_of(x); };

    std::set<std::array<std::uint64_t, 6>> found, expected;
    for (const LinearMapCandidate& m : r.maps)
        found.insert({key(m.a), key(m.b), key(m.c), key(m.d), key(m.e), key(m.f)});
    for (const AutMap& m : g.elements) {
        FieldElement lam = em.apply(m.lambda);
        FieldElement li = lam.inverse();
        FieldElement al = em.apply(m.alpha), be = em.apply(m.beta);
        FieldElement zero = fs->zero();
        if (!m.swap)
            expected.insert({key(lam), key(zero), key(zero), key(li), key(al), key(be)});
        else
            expected.insert({key(zero), key(lam), key(li), key(zero), key(al), key(be)});
    }
    return found == expected;
}

bool contains_swap_shape(const LinearSearchResult& r) {
    for (const LinearMapCandidate& m : r.maps)
        if (!m.b.is_zero() || !m.c.is_zero()) return true;
    return false;
}

} // namespace amc
