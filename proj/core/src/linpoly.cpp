#include "amcurve/linpoly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "gfp_internal.hpp"

namespace amc {

using detail::i64;

LinearizedPoly::LinearizedPoly(std::int64_t p, int n, std::vector<FieldElement> coeffs)
    : p_(p), n_(n), coeffs_(std::move(coeffs)) {
    if (n < 1) throw ParameterError("LinearizedPoly: n must be >= 1");
    if (coeffs_.empty()) throw ParameterError("LinearizedPoly: no coefficients");
    if (coeffs_.back().is_zero())
        throw ParameterError("LinearizedPoly: leading coefficient a_m is zero");
    const FieldPtr& f = coeffs_.front().field();
    if (!f || f->p() != p) throw ParameterError("LinearizedPoly: coefficient field has wrong p");
    for (const auto& c : coeffs_)
        if (!same_field(c.field(), f))
            throw ParameterError("LinearizedPoly: coefficients in different fields");
}

std::uint64_t LinearizedPoly::qbar() const {
    std::uint64_t q = 1;
    for (int i = 0; i < n_; ++i) q *= static_cast<std::uint64_t>(p_);
    return q;
}

std::uint64_t LinearizedPoly::degree() const {
    std::uint64_t d = 1;
    for (int i = 0; i < m(); ++i) d *= qbar();
    return d;
}

bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
}

FieldElement eval(const LinearizedPoly& l, const FieldElement& x) {
    const FieldPtr& fx = x.field();
    if (!fx || fx->p() != l.p())
        throw ParameterError("eval: argument field has different characteristic");
    if (!same_field(fx, l.coeff_field())) {
        if (fx->degree() % l.coeff_field()->degree() != 0)
            throw ParameterError("eval: argument field does not contain the coefficient field");
        return eval(lift(l, fx), x);
    }
    FieldElement acc = fx->zero();
    FieldElement power = x; // x^(qbar^i), advanced by n Frobenius steps per term
    for (int i = 0; i <= l.m(); ++i) {
        const FieldElement& a = l.coeffs()[static_cast<std::size_t>(i)];
        if (!a.is_zero()) acc = acc + a * power;
        if (i < l.m()) power = power.frobenius(l.n());
    }
    return acc;
}

LinearizedPoly lift(const LinearizedPoly& l, const FieldPtr& target) {
    if (same_field(l.coeff_field(), target)) {
        std::vector<FieldElement> c;
        c.reserve(l.coeffs().size());
        for (const auto& a : l.coeffs()) c.push_back(target->element(a.coeffs()));
        return LinearizedPoly(l.p(), l.n(), std::move(c));
    }
    Embedding e = embed(l.coeff_field(), target);
    std::vector<FieldElement> c;
    c.reserve(l.coeffs().size());
    for (const auto& a : l.coeffs()) c.push_back(e.apply(a));
    return LinearizedPoly(l.p(), l.n(), std::move(c));
}

int classify_linearity(const LinearizedPoly& l) {
    int g = 0;
    for (int i = 0; i <= l.m(); ++i)
        if (!l.coeffs()[static_cast<std::size_t>(i)].is_zero()) g = std::gcd(g, i);
    // g = 0 only for l = a_0 T, which is qbar^k-linearized for every k
    return g == 0 ? 1 : g;
}

LinearizedPoly monic(const LinearizedPoly& l) {
    FieldElement s = l.coeffs().back().inverse();
    std::vector<FieldElement> c;
    c.reserve(l.coeffs().size());
    for (const auto& a : l.coeffs()) c.push_back(a * s);
    return LinearizedPoly(l.p(), l.n(), std::move(c));
}

LinearizedPoly compose(const LinearizedPoly& l, const LinearizedPoly& m) {
    if (l.p() != m.p() || l.n() != m.n())
        throw ParameterError("compose: incompatible base fields");
    // common coefficient field
    const int e1 = l.coeff_field()->degree();
    const int e2 = m.coeff_field()->degree();
    FieldPtr common;
    if (e2 % e1 == 0) {
        common = m.coeff_field();
    } else if (e1 % e2 == 0) {
        common = l.coeff_field();
    } else {
        common = make_field(l.p(), std::lcm(e1, e2), l.coeff_field()->seed());
    }
    LinearizedPoly a = lift(l, common), b = lift(m, common);

    std::vector<FieldElement> c(static_cast<std::size_t>(a.m() + b.m()) + 1, common->zero());
    for (int i = 0; i <= a.m(); ++i) {
        const FieldElement& ai = a.coeffs()[static_cast<std::size_t>(i)];
        if (ai.is_zero()) continue;
        for (int j = 0; j <= b.m(); ++j) {
            const FieldElement& bj = b.coeffs()[static_cast<std::size_t>(j)];
            if (bj.is_zero()) continue;
            c[static_cast<std::size_t>(i + j)] =
                c[static_cast<std::size_t>(i + j)] + ai * bj.frobenius(i * a.n());
        }
    }
    if (c.back().is_zero())
        throw InconsistencyError("compose: leading coefficient vanished");
    return LinearizedPoly(a.p(), a.n(), std::move(c));
}

namespace {

/// Matrix of x -> eval(l, x) on field as a GF(p)-vector space (column j =
/// image of the j-th basis vector).
std::vector<std::vector<i64>> linear_map_matrix(const LinearizedPoly& l, const FieldPtr& field) {
    const int d = field->degree();
    LinearizedPoly la = lift(l, field);
    std::vector<std::vector<i64>> m(static_cast<std::size_t>(d),
                                    std::vector<i64>(static_cast<std::size_t>(d), 0));
    for (int j = 0; j < d; ++j) {
        std::vector<std::int64_t> basis(static_cast<std::size_t>(d), 0);
        basis[static_cast<std::size_t>(j)] = 1;
        FieldElement img = eval(la, FieldElement(field, std::move(basis)));
        for (int i = 0; i < d; ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                img.coeffs()[static_cast<std::size_t>(i)];
    }
    return m;
}

std::vector<FieldElement> span_elements(const FieldPtr& field,
                                        const std::vector<std::vector<i64>>& basis) {
    const i64 p = field->p();
    const int d = field->degree();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) count *= static_cast<std::uint64_t>(p);
    std::vector<FieldElement> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(d), 0);
        std::uint64_t t = idx;
        for (const auto& bvec : basis) {
            i64 digit = static_cast<i64>(t % static_cast<std::uint64_t>(p));
            t /= static_cast<std::uint64_t>(p);
            if (digit == 0) continue;
            for (int i = 0; i < d; ++i)
                c[static_cast<std::size_t>(i)] = detail::mod_p(
                    c[static_cast<std::size_t>(i)] + digit * bvec[static_cast<std::size_t>(i)], p);
        }
        out.emplace_back(field, std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<FieldElement> roots_in(const LinearizedPoly& l, const FieldPtr& field) {
    return span_elements(field, detail::null_space(linear_map_matrix(l, field), field->p()));
}

std::optional<FieldElement> solve_in(const LinearizedPoly& l, const FieldElement& c) {
    const FieldPtr& field = c.field();
    auto sol = detail::solve_linear(linear_map_matrix(l, field), c.coeffs(), field->p());
    if (!sol) return std::nullopt;
    return FieldElement(field, std::move(*sol));
}

KernelSpace kernel(const LinearizedPoly& l) {
    if (!l.separable()) throw ParameterError("kernel: polynomial is inseparable (a_0 = 0)");
    if (l.m() < 1) {
        // a_0 T: kernel is {0} in the coefficient field itself
        return KernelSpace{l, l.coeff_field(), {l.coeff_field()->zero()}, 0};
    }
    const int step = std::lcm(l.n() * l.m(), l.coeff_field()->degree());
    const int full = l.n() * l.m(); // GF(p)-dimension of the kernel when split
    for (int t = 1; t <= 64; ++t) {
        FieldPtr amb = make_field(l.p(), t * step, l.coeff_field()->seed());
        auto basis = detail::null_space(linear_map_matrix(l, amb), amb->p());
        if (static_cast<int>(basis.size()) > full)
            throw InconsistencyError("kernel: null space larger than the degree allows");
        if (static_cast<int>(basis.size()) == full)
            return KernelSpace{l, amb, span_elements(amb, basis), l.m()};
    }
    throw InconsistencyError("kernel: splitting field not found within the ladder");
}

LinearizedPoly random_separable(std::int64_t p, int n, const FieldPtr& coeff_field, int m,
                                std::uint64_t seed) {
    if (m < 1) throw ParameterError("random_separable: m must be >= 1");
    if (coeff_field->p() != p)
        throw ParameterError("random_separable: coefficient field has wrong characteristic");
    std::mt19937_64 rng(detail::mix_seed(static_cast<std::uint64_t>(p),
                                         static_cast<std::uint64_t>(n) << 32 |
                                             static_cast<std::uint64_t>(m),
                                         seed ^ 0xa5a5a5a5a5a5a5a5ULL));
    const std::uint64_t size = coeff_field->order();
    auto draw = [&] { return coeff_field->element_at(detail::uniform_below(rng, size)); };
    auto draw_nonzero = [&] {
        FieldElement x = draw();
        while (x.is_zero()) x = draw();
        return x;
    };
    std::vector<FieldElement> c;
    c.reserve(static_cast<std::size_t>(m) + 1);
    c.push_back(draw_nonzero());
    for (int i = 1; i < m; ++i) c.push_back(draw());
    c.push_back(draw_nonzero());
    return LinearizedPoly(p, n, std::move(c));
}

} // namespace amc
