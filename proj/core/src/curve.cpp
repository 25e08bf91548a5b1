#include "amcurve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <thread>

#include "gfp_internal.hpp"

namespace amc {

std::uint64_t Tower::qbar() const {
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i) v *= static_cast<std::uint64_t>(p);
    return v;
}

std::uint64_t Tower::q() const {
    std::uint64_t v = 1;
    for (int i = 0; i < m; ++i) v *= qbar();
    return v;
}

AMCurve new_am_curve(LinearizedPoly l1, LinearizedPoly l2) {
    if (l1.p() != l2.p() || l1.n() != l2.n())
        throw ValidationError("S_{q|qbar} membership: L1 and L2 have different base fields");
    if (l1.m() != l2.m())
        throw ValidationError("S_{q|qbar} membership: deg L1 = qbar^" + std::to_string(l1.m()) +
                              " differs from deg L2 = qbar^" + std::to_string(l2.m()));
    if (l1.m() < 1) throw ValidationError("S_{q|qbar} membership: degree must be at least qbar");
    if (!l1.separable() || !l2.separable())
        throw ValidationError("S_{q|qbar} membership: inseparable factor (a_0 = 0)");
    const int k1 = classify_linearity(l1);
    const int k2 = classify_linearity(l2);
    if (std::min(k1, k2) >= 2)
        throw ValidationError("S_{q|qbar} membership: both polynomials are qbar^" +
                              std::to_string(std::min(k1, k2)) + "-linearized");

    // common coefficient field
    if (!same_field(l1.coeff_field(), l2.coeff_field())) {
        const int e1 = l1.coeff_field()->degree();
        const int e2 = l2.coeff_field()->degree();
        FieldPtr common = (e2 % e1 == 0) ? l2.coeff_field()
                          : (e1 % e2 == 0)
                              ? l1.coeff_field()
                              : make_field(l1.p(), std::lcm(e1, e2), l1.coeff_field()->seed());
        l1 = lift(l1, common);
        l2 = lift(l2, common);
    }

    Tower tower{l1.p(), l1.n(), l1.m()};

    // shared ambient: ascend the ladder until both kernels split
    const int step = std::lcm(tower.n * tower.m, l1.coeff_field()->degree());
    FieldPtr ambient;
    std::vector<FieldElement> ker1, ker2;
    for (int t = 1; t <= 64 && !ambient; ++t) {
        FieldPtr amb = make_field(tower.p, t * step, l1.coeff_field()->seed());
        auto r1 = roots_in(l1, amb);
        auto r2 = roots_in(l2, amb);
        if (r1.size() > tower.q() || r2.size() > tower.q())
            throw InconsistencyError("new_am_curve: kernel larger than the degree allows");
        if (r1.size() == tower.q() && r2.size() == tower.q()) {
            ambient = amb;
            ker1 = std::move(r1);
            ker2 = std::move(r2);
        }
    }
    if (!ambient) throw InconsistencyError("new_am_curve: kernel splitting field not found");

    LinearizedPoly l1a = lift(l1, ambient);
    LinearizedPoly l2a = lift(l2, ambient);
    FieldElement lambda = primitive_root_of_unity(ambient, tower.qbar() - 1);
    bool diagonal = (monic(l1a) == monic(l2a));

    return AMCurve(tower, std::move(l1), std::move(l2), std::move(ambient), std::move(l1a),
                   std::move(l2a), std::move(ker1), std::move(ker2), std::move(lambda), diagonal);
}

AMCurve random_am_curve(std::int64_t p, int n, int m, std::uint64_t seed) {
    FieldPtr fq = make_field(p, n * m, 0); // coefficients in F_q
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        LinearizedPoly l1 = random_separable(p, n, fq, m, seed * 2 + 131 * attempt);
        LinearizedPoly l2 = random_separable(p, n, fq, m, seed * 2 + 131 * attempt + 1);
        try {
            return new_am_curve(std::move(l1), std::move(l2));
        } catch (const ValidationError&) {
            // both factors happened to be qbar^k-linearized; redraw
        }
    }
    throw InconsistencyError("random_am_curve: no valid pair within the retry budget");
}

std::int64_t different_from_filtration(const std::vector<std::uint64_t>& orders) {
    std::int64_t d = 0;
    for (std::uint64_t o : orders) d += static_cast<std::int64_t>(o) - 1;
    return d;
}

RamificationProfile am_ramification(const AMCurve& c) {
    const std::uint64_t q = c.q();
    RamificationProfile r;
    r.galois_degree = q;
    r.ramified_places = q;
    r.filtration_orders = {q, q, 1}; // G^(0) = G^(1) of order q, G^(2) trivial
    r.different_per_place = different_from_filtration(r.filtration_orders);
    if (r.different_per_place != 2 * (static_cast<std::int64_t>(q) - 1))
        throw InconsistencyError("ramification profile: different != 2(q-1)");
    return r;
}

std::int64_t RamificationProfile::different_sum() const {
    return static_cast<std::int64_t>(ramified_places) * different_per_place;
}

std::int64_t riemann_hurwitz_genus(std::uint64_t group_order, std::int64_t quotient_genus,
                                   std::int64_t different_sum) {
    const std::int64_t rhs =
        static_cast<std::int64_t>(group_order) * (2 * quotient_genus - 2) + different_sum;
    if ((rhs & 1) != 0)
        throw InconsistencyError("riemann_hurwitz: 2g-2 = " + std::to_string(rhs) + " is odd");
    return rhs / 2 + 1;
}

std::int64_t deuring_shafarevich(std::uint64_t group_order, std::int64_t quotient_prank,
                                 const std::vector<std::uint64_t>& short_orbit_lengths) {
    std::int64_t gamma =
        1 + static_cast<std::int64_t>(group_order) * (quotient_prank - 1);
    for (std::uint64_t len : short_orbit_lengths) {
        if (len == 0 || group_order % len != 0)
            throw ParameterError("deuring_shafarevich: short-orbit length " +
                                 std::to_string(len) + " does not divide |G|");
        gamma += static_cast<std::int64_t>(group_order - len);
    }
    return gamma;
}

std::int64_t genus(const AMCurve& c) {
    RamificationProfile prof = am_ramification(c);
    std::int64_t g = riemann_hurwitz_genus(prof.galois_degree, 0, prof.different_sum());
    const auto q = static_cast<std::int64_t>(c.q());
    if (g != (q - 1) * (q - 1))
        throw InconsistencyError("genus: Riemann-Hurwitz value " + std::to_string(g) +
                                 " differs from (q-1)^2");
    return g;
}

NakajimaCheck nakajima_check(const AMCurve& c) {
    const auto q = static_cast<std::int64_t>(c.q());
    const std::int64_t g = genus(c);
    NakajimaCheck r{};
    r.lhs = q * q * (c.tower().p - 2);
    r.rhs = c.tower().p * (g - 1);
    r.ok = r.lhs <= r.rhs;
    r.tight = r.lhs == r.rhs;
    return r;
}

namespace {

FieldPtr count_field(const AMCurve& c, int k) {
    if (k < 1) throw ParameterError("extension degree must be >= 1");
    return make_field(c.tower().p, c.coeff_field()->degree() * k, c.coeff_field()->seed());
}

/// Value table of x -> eval(l, x) over the whole target field, as counts
/// indexed by the canonical element index. Optionally multi-threaded over
/// disjoint index ranges.
std::vector<std::uint32_t> value_table(const LinearizedPoly& l, const FieldPtr& target,
                                       int threads) {
    const std::uint64_t n = target->order();
    std::vector<std::uint32_t> table(n, 0);
    LinearizedPoly la = lift(l, target);
    auto work = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint32_t>& local) {
        for (std::uint64_t i = lo; i < hi; ++i)
            ++local[target->index_of(eval(la, target->element_at(i)))];
    };
    if (threads <= 1 || n < 1024) {
        work(0, n, table);
        return table;
    }
    const int t = std::min<int>(threads, 16);
    std::vector<std::vector<std::uint32_t>> locals(static_cast<std::size_t>(t),
                                                   std::vector<std::uint32_t>(n, 0));
    std::vector<std::thread> pool;
    for (int w = 0; w < t; ++w) {
        std::uint64_t lo = n * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(t);
        std::uint64_t hi = n * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(t);
        pool.emplace_back(work, lo, hi, std::ref(locals[static_cast<std::size_t>(w)]));
    }
    for (auto& th : pool) th.join();
    for (const auto& local : locals)
        for (std::uint64_t i = 0; i < n; ++i) table[i] += local[i];
    return table;
}

} // namespace

std::int64_t rational_places(const AMCurve& c, int k, const CountOptions& opt) {
    FieldPtr target = count_field(c, k);
    const std::uint64_t n = target->order();
    std::vector<std::uint32_t> a = value_table(c.l1(), target, opt.threads);
    std::vector<std::uint32_t> b = value_table(c.l2(), target, opt.threads);

    std::int64_t affine = 0;
    for (std::uint64_t v = 1; v < n; ++v) {
        if (a[v] == 0) continue;
        FieldElement inv = target->element_at(v).inverse();
        affine += static_cast<std::int64_t>(a[v]) *
                  static_cast<std::int64_t>(b[target->index_of(inv)]);
    }
    // a[0], b[0] count the kernel labels rational over the target field:
    // the places P_{x=alpha} and P_{y=beta} of the nonsingular model.
    return affine + static_cast<std::int64_t>(a[0]) + static_cast<std::int64_t>(b[0]);
}

std::vector<std::pair<FieldElement, FieldElement>> affine_points(const AMCurve& c, int k) {
    FieldPtr target = count_field(c, k);
    LinearizedPoly l1 = lift(c.l1(), target);
    LinearizedPoly l2 = lift(c.l2(), target);
    const std::uint64_t n = target->order();
    if (n > (std::uint64_t{1} << 14))
        throw ParameterError("affine_points: field too large for point listing");
    std::vector<std::pair<FieldElement, FieldElement>> pts;
    std::vector<FieldElement> xs = enumerate(target);
    for (const auto& x : xs) {
        FieldElement vx = eval(l1, x);
        if (vx.is_zero()) continue;
        FieldElement want = vx.inverse();
        for (const auto& y : xs)
            if (eval(l2, y) == want) pts.emplace_back(x, y);
    }
    return pts;
}

namespace {

using Big = __int128;

int ipoly_deg(const std::vector<Big>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

Big big_gcd(Big a, Big b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        Big t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void ipoly_primitive(std::vector<Big>& f) {
    f.resize(static_cast<std::size_t>(ipoly_deg(f) + 1));
    Big c = 0;
    for (Big v : f) c = big_gcd(c, v);
    if (c > 1)
        for (Big& v : f) v /= c;
    if (!f.empty() && f.back() < 0)
        for (Big& v : f) v = -v;
}

/// Pseudo-remainder of a by b (b nonzero), primitive-normalized.
std::vector<Big> ipoly_prem(std::vector<Big> a, const std::vector<Big>& b) {
    const int db = ipoly_deg(b);
    const Big lb = b[static_cast<std::size_t>(db)];
    for (int da = ipoly_deg(a); da >= db; da = ipoly_deg(a)) {
        Big la = a[static_cast<std::size_t>(da)];
        for (Big& v : a) v *= lb;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= la * b[static_cast<std::size_t>(i)];
        ipoly_primitive(a); // keeps the coefficients small
        if (ipoly_deg(a) < 0) break;
    }
    return a;
}

std::vector<Big> ipoly_gcd(std::vector<Big> a, std::vector<Big> b) {
    ipoly_primitive(a);
    ipoly_primitive(b);
    if (ipoly_deg(a) < ipoly_deg(b)) std::swap(a, b);
    while (ipoly_deg(b) >= 0) {
        std::vector<Big> r = ipoly_prem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    ipoly_primitive(a);
    return a;
}

/// Exact quotient of primitive f by its primitive divisor g (Gauss's lemma
/// makes the quotient integral); remainder is asserted zero.
std::vector<Big> ipoly_exact_div(std::vector<Big> f, const std::vector<Big>& g) {
    const int df = ipoly_deg(f), dg = ipoly_deg(g);
    const Big lg = g[static_cast<std::size_t>(dg)];
    std::vector<Big> q(static_cast<std::size_t>(df - dg) + 1, 0);
    for (int d = df; d >= dg; --d) {
        Big c = f[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        if (c % lg != 0) throw InconsistencyError("l_polynomial: inexact squarefree division");
        c /= lg;
        q[static_cast<std::size_t>(d - dg)] = c;
        for (int i = 0; i <= dg; ++i)
            f[static_cast<std::size_t>(d - dg + i)] -= c * g[static_cast<std::size_t>(i)];
    }
    if (ipoly_deg(f) >= 0) throw InconsistencyError("l_polynomial: inexact squarefree division");
    return q;
}

/// Squarefree part f / gcd(f, f'), for the root-modulus check: the
/// distinct roots are preserved, multiplicities dropped.
std::vector<Big> squarefree_part(const std::vector<std::int64_t>& coeffs) {
    std::vector<Big> f(coeffs.begin(), coeffs.end());
    ipoly_primitive(f);
    std::vector<Big> fp;
    for (std::size_t i = 1; i < f.size(); ++i) fp.push_back(static_cast<Big>(i) * f[i]);
    std::vector<Big> g = ipoly_gcd(f, fp);
    if (ipoly_deg(g) <= 0) return f;
    return ipoly_exact_div(f, g);
}

void check_root_moduli(ZetaData& z) {
    // roots of L(t) have modulus 1/sqrt(q0); isolate by squarefree
    // deflation, then Durand-Kerner on the distinct roots
    std::vector<Big> sf = squarefree_part(z.l_poly);
    const int n = ipoly_deg(sf);
    if (n <= 0) {
        z.max_root_deviation = 0.0;
        return;
    }
    std::vector<std::complex<double>> cs(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        cs[static_cast<std::size_t>(i)] =
            std::complex<double>(static_cast<double>(sf[static_cast<std::size_t>(i)]), 0.0);
    auto eval_poly = [&](std::complex<double> t) {
        std::complex<double> acc = 0.0;
        for (int i = n; i >= 0; --i) acc = acc * t + cs[static_cast<std::size_t>(i)];
        return acc;
    };
    const double radius = 1.0 / std::sqrt(static_cast<double>(z.q0));
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        roots[static_cast<std::size_t>(i)] =
            std::polar(radius * (1.0 + 0.1 * i / n), 0.7 + 6.28318530717958647 * i / n);
    const std::complex<double> lead = cs[static_cast<std::size_t>(n)];
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom = lead;
            for (int j = 0; j < n; ++j)
                if (j != i)
                    denom *= roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)];
            std::complex<double> delta = eval_poly(roots[static_cast<std::size_t>(i)]) / denom;
            roots[static_cast<std::size_t>(i)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    double max_dev = 0.0;
    for (const auto& r : roots)
        max_dev = std::max(max_dev, std::abs(std::abs(1.0 / r) - std::sqrt(static_cast<double>(z.q0))));
    z.max_root_deviation = max_dev;
    if (max_dev > 1e-6)
        throw InconsistencyError("l_polynomial: reciprocal root off the sqrt(q0) circle by " +
                                 std::to_string(max_dev));
}

} // namespace

ZetaData l_polynomial_from_counts(std::int64_t q0, std::int64_t p, int genus,
                                  const std::vector<std::int64_t>& counts) {
    const int n = 2 * genus;
    if (static_cast<int>(counts.size()) != n)
        throw ParameterError("l_polynomial_from_counts: need exactly 2g counts");
    ZetaData z;
    z.q0 = q0;
    z.p = p;
    z.genus = genus;
    z.counts = counts;

    // power sums of the reciprocal roots: P_k = q0^k + 1 - N_k
    std::vector<std::int64_t> ps(static_cast<std::size_t>(n) + 1, 0);
    std::int64_t q0k = 1;
    for (int k = 1; k <= n; ++k) {
        q0k *= q0;
        ps[static_cast<std::size_t>(k)] = q0k + 1 - counts[static_cast<std::size_t>(k - 1)];
    }

    // Newton: k c_k = - sum_{i=1}^{k} P_i c_{k-i}
    z.l_poly.assign(static_cast<std::size_t>(n) + 1, 0);
    z.l_poly[0] = 1;
    for (int k = 1; k <= n; ++k) {
        __int128 acc = 0;
        for (int i = 1; i <= k; ++i)
            acc += static_cast<__int128>(ps[static_cast<std::size_t>(i)]) *
                   z.l_poly[static_cast<std::size_t>(k - i)];
        acc = -acc;
        if (acc % k != 0)
            throw InconsistencyError("l_polynomial: Newton identity divides unevenly at k = " +
                                     std::to_string(k));
        z.l_poly[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(acc / k);
    }

    // functional equation c_{2g-i} = q0^(g-i) c_i
    for (int i = 0; i <= genus; ++i) {
        std::int64_t scale = 1;
        for (int t = 0; t < genus - i; ++t) scale *= q0;
        if (z.l_poly[static_cast<std::size_t>(n - i)] != scale * z.l_poly[static_cast<std::size_t>(i)])
            throw InconsistencyError(
                "l_polynomial: functional equation fails at i = " + std::to_string(i) +
                " (signals a counting bug)");
    }

    z.p_rank = 0;
    for (int i = n; i >= 1; --i) {
        if (z.l_poly[static_cast<std::size_t>(i)] % p != 0) {
            z.p_rank = i;
            break;
        }
    }
    z.max_root_deviation = 0.0;
    check_root_moduli(z);
    return z;
}

ZetaData l_polynomial_generic(const std::function<std::int64_t(int)>& count_places,
                              std::int64_t q0, std::int64_t p, int genus) {
    if (genus > kZetaGenusGuard)
        throw GuardError("desk-scale limit: zeta pipeline refuses genus " +
                         std::to_string(genus) + " > " + std::to_string(kZetaGenusGuard));
    std::vector<std::int64_t> counts;
    counts.reserve(static_cast<std::size_t>(2 * genus));
    for (int k = 1; k <= 2 * genus; ++k) counts.push_back(count_places(k));
    return l_polynomial_from_counts(q0, p, genus, counts);
}

ZetaData l_polynomial(const AMCurve& c, const CountOptions& opt) {
    const std::int64_t g = genus(c);
    if (g > kZetaGenusGuard)
        throw GuardError("desk-scale limit: genus " + std::to_string(g) + " exceeds the guard " +
                         std::to_string(kZetaGenusGuard) + "; zeta counting is refused");
    return l_polynomial_generic([&](int k) { return rational_places(c, k, opt); },
                                static_cast<std::int64_t>(c.coeff_field()->order()), c.tower().p,
                                static_cast<int>(g));
}

std::int64_t predicted_count(const ZetaData& z, int k) {
    if (k < 1) throw ParameterError("predicted_count: k must be >= 1");
    const int n = 2 * z.genus;
    std::vector<std::int64_t> ps(static_cast<std::size_t>(std::max(k, n)) + 1, 0);
    for (int j = 1; j <= std::max(k, n); ++j) {
        __int128 acc = 0;
        const int top = std::min(j, n);
        for (int i = 1; i <= top; ++i)
            acc += static_cast<__int128>(z.l_poly[static_cast<std::size_t>(i)]) *
                   ps[static_cast<std::size_t>(j - i)];
        if (j <= n) acc += static_cast<__int128>(j) * z.l_poly[static_cast<std::size_t>(j)];
        ps[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(-acc);
    }
    std::int64_t q0k = 1;
    for (int i = 0; i < k; ++i) q0k *= z.q0;
    return q0k + 1 - ps[static_cast<std::size_t>(k)];
}

} // namespace amc
