#include "amcurve/gf.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "gfp_internal.hpp"

namespace amc {

using detail::i64;
using detail::IPoly;
using detail::mod_p;

namespace {

// Fields larger than this are never enumerated or searched for primitive
// elements; exact arithmetic still works at any degree.
constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 22;

void require(bool cond, const std::string& msg) {
    if (!cond) throw ParameterError(msg);
}

bool order_fits(std::int64_t p, int d) {
    unsigned __int128 o = 1;
    for (int i = 0; i < d; ++i) {
        o *= static_cast<unsigned __int128>(p);
        if (o > ~std::uint64_t{0}) return false;
    }
    return true;
}

std::uint64_t pow_u64(std::int64_t p, int d) {
    std::uint64_t o = 1;
    for (int i = 0; i < d; ++i) o *= static_cast<std::uint64_t>(p);
    return o;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

FieldPtr make_field(std::int64_t p, int d, std::uint64_t seed) {
    require(p > 2, "make_field: p must be an odd prime, got " + std::to_string(p));
    require(detail::is_prime_i64(p), "make_field: p = " + std::to_string(p) + " is not prime");
    require(d >= 1, "make_field: degree must be >= 1");

    auto f = std::shared_ptr<FiniteField>(new FiniteField());
    f->p_ = p;
    f->d_ = d;
    f->seed_ = seed;

    if (d == 1) {
        f->modulus_ = {0, 1}; // canonical T
    } else {
        std::mt19937_64 rng(detail::mix_seed(static_cast<std::uint64_t>(p),
                                             static_cast<std::uint64_t>(d), seed));
        IPoly cand(static_cast<std::size_t>(d) + 1, 0);
        cand[static_cast<std::size_t>(d)] = 1;
        for (;;) {
            for (int i = 0; i < d; ++i)
                cand[static_cast<std::size_t>(i)] =
                    static_cast<i64>(detail::uniform_below(rng, static_cast<std::uint64_t>(p)));
            if (cand[0] == 0) continue; // divisible by T
            if (detail::poly_irreducible(cand, p)) break;
        }
        f->modulus_ = cand;
    }

    // Frobenius matrix: column j holds (T^j)^p = (T^p)^j mod modulus.
    IPoly xp = detail::poly_powmod({0, 1}, static_cast<std::uint64_t>(p), f->modulus_, p);
    f->frob_.assign(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0);
    IPoly col{1};
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i)
            f->frob_[static_cast<std::size_t>(j) * d + i] =
                (static_cast<std::size_t>(i) < col.size()) ? col[static_cast<std::size_t>(i)] : 0;
        if (j + 1 < d) col = detail::poly_mod(detail::poly_mul(col, xp, p), f->modulus_, p);
    }
    return f;
}

bool same_field(const FiniteField& a, const FiniteField& b) {
    return a.p() == b.p() && a.degree() == b.degree() && a.modulus() == b.modulus();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return same_field(*a, *b);
}

std::uint64_t FiniteField::order() const {
    if (!order_fits_u64()) throw ParameterError("field order exceeds 64 bits");
    return pow_u64(p_, d_);
}

bool FiniteField::order_fits_u64() const { return order_fits(p_, d_); }

FieldElement FiniteField::zero() const {
    return FieldElement(shared_from_this(), std::vector<std::int64_t>(static_cast<std::size_t>(d_), 0));
}

FieldElement FiniteField::one() const { return from_int(1); }

FieldElement FiniteField::from_int(std::int64_t v) const {
    std::vector<std::int64_t> c(static_cast<std::size_t>(d_), 0);
    c[0] = mod_p(v, p_);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FiniteField::element(std::vector<std::int64_t> coeffs) const {
    require(coeffs.size() == static_cast<std::size_t>(d_),
            "element: coordinate vector has wrong length");
    for (auto& c : coeffs) c = mod_p(c, p_);
    return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement FiniteField::generator() const {
    std::vector<std::int64_t> c(static_cast<std::size_t>(d_), 0);
    if (d_ == 1) {
        c[0] = 0; // T == 0 in GF(p)
    } else {
        c[1] = 1;
    }
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FiniteField::element_at(std::uint64_t idx) const {
    std::vector<std::int64_t> c(static_cast<std::size_t>(d_), 0);
    for (int i = 0; i < d_; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(p_));
        idx /= static_cast<std::uint64_t>(p_);
    }
    require(idx == 0, "element_at: index out of range");
    return FieldElement(shared_from_this(), std::move(c));
}

std::uint64_t FiniteField::index_of(const FieldElement& x) const {
    std::uint64_t idx = 0;
    for (int i = d_ - 1; i >= 0; --i)
        idx = idx * static_cast<std::uint64_t>(p_) +
              static_cast<std::uint64_t>(x.coeffs()[static_cast<std::size_t>(i)]);
    return idx;
}

FieldElement::FieldElement(FieldPtr field, std::vector<std::int64_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

bool FieldElement::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

namespace {
void check_compatible(const FieldElement& a, const FieldElement& b) {
    if (!same_field(a.field(), b.field()))
        throw ParameterError("field elements belong to different fields");
}
} // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_compatible(a, b);
    const i64 p = a.field()->p();
    std::vector<std::int64_t> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_p(a.coeffs()[i] + b.coeffs()[i], p);
    return FieldElement(a.field(), std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_compatible(a, b);
    const i64 p = a.field()->p();
    std::vector<std::int64_t> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_p(a.coeffs()[i] - b.coeffs()[i], p);
    return FieldElement(a.field(), std::move(c));
}

FieldElement FieldElement::operator-() const {
    const i64 p = field_->p();
    std::vector<std::int64_t> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_p(-coeffs_[i], p);
    return FieldElement(field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_compatible(a, b);
    const i64 p = a.field()->p();
    IPoly prod = detail::poly_mul(a.coeffs(), b.coeffs(), p);
    IPoly red = detail::poly_mod(std::move(prod), a.field()->modulus(), p);
    red.resize(a.coeffs().size(), 0);
    return FieldElement(a.field(), std::move(red));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw ParameterError("inverse of zero");
    const i64 p = field_->p();
    // extended Euclid on representatives in GF(p)[T]
    IPoly r0 = field_->modulus(), r1 = coeffs_;
    detail::poly_trim(r1);
    IPoly t0{}, t1{1};
    while (detail::poly_deg(r1) > 0) {
        // one division step
        IPoly q;
        {
            IPoly a = r0;
            int df = detail::poly_deg(r1);
            i64 lead_inv = detail::inv_mod_p(r1[static_cast<std::size_t>(df)], p);
            q.assign(static_cast<std::size_t>(std::max(detail::poly_deg(a) - df + 1, 1)), 0);
            for (int d = detail::poly_deg(a); d >= df; d = detail::poly_deg(a)) {
                i64 c = mod_p(a[static_cast<std::size_t>(d)] * lead_inv, p);
                q[static_cast<std::size_t>(d - df)] = c;
                for (int i = 0; i <= df; ++i) {
                    auto k = static_cast<std::size_t>(d - df + i);
                    a[k] = mod_p(a[k] - c * r1[static_cast<std::size_t>(i)], p);
                }
            }
            detail::poly_trim(a);
            r0.swap(r1);
            r1 = std::move(a);
        }
        IPoly nt = detail::poly_sub(t0, detail::poly_mul(q, t1, p), p);
        t0.swap(t1);
        t1 = std::move(nt);
    }
    // r1 is a nonzero constant: gcd(modulus, this) = 1
    i64 s = detail::inv_mod_p(r1.empty() ? 0 : r1[0], p);
    IPoly inv = t1;
    for (auto& c : inv) c = mod_p(c * s, p);
    inv.resize(coeffs_.size(), 0);
    return FieldElement(field_, std::move(inv));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement r = field_->one();
    FieldElement b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::frobenius() const {
    const int d = field_->degree();
    const i64 p = field_->p();
    const auto& m = field_->frobenius_matrix();
    std::vector<std::int64_t> c(static_cast<std::size_t>(d), 0);
    for (int j = 0; j < d; ++j) {
        i64 a = coeffs_[static_cast<std::size_t>(j)];
        if (a == 0) continue;
        for (int i = 0; i < d; ++i)
            c[static_cast<std::size_t>(i)] = mod_p(
                c[static_cast<std::size_t>(i)] + a * m[static_cast<std::size_t>(j) * d + i], p);
    }
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::frobenius(int k) const {
    FieldElement r = *this;
    const int d = field_->degree();
    k %= d;
    if (k < 0) k += d;
    for (int i = 0; i < k; ++i) r = r.frobenius();
    return r;
}

std::uint64_t FieldElement::mult_order() const {
    if (is_zero()) throw ParameterError("multiplicative order of zero");
    std::uint64_t n = field_->order() - 1;
    std::uint64_t ord = n;
    for (std::uint64_t f : prime_factors(n)) {
        while (ord % f == 0 && pow(ord / f).is_one()) ord /= f;
    }
    return ord;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return same_field(a.field(), b.field()) && a.coeffs() == b.coeffs();
}

bool operator<(const FieldElement& a, const FieldElement& b) {
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    }
    return false;
}

Embedding::Embedding(FieldPtr sub, FieldPtr sup, FieldElement generator_image)
    : sub_(std::move(sub)), sup_(std::move(sup)), gen_img_(std::move(generator_image)) {
    gen_powers_.reserve(static_cast<std::size_t>(sub_->degree()));
    FieldElement pw = sup_->one();
    for (int i = 0; i < sub_->degree(); ++i) {
        gen_powers_.push_back(pw);
        if (i + 1 < sub_->degree()) pw = pw * gen_img_;
    }
}

FieldElement Embedding::apply(const FieldElement& x) const {
    if (!same_field(x.field(), sub_))
        throw ParameterError("embedding applied to element of the wrong field");
    FieldElement r = sup_->zero();
    for (std::size_t i = 0; i < gen_powers_.size(); ++i) {
        std::int64_t c = x.coeffs()[i];
        if (c == 0) continue;
        r = r + gen_powers_[i] * sup_->from_int(c);
    }
    return r;
}

std::vector<FieldElement> subfield_elements(const FieldPtr& field, int j) {
    const int d = field->degree();
    const i64 p = field->p();
    require(j >= 1 && d % j == 0, "subfield_elements: degree does not divide");
    // fixed points of Frobenius^j: null space of (M^j - I) over GF(p)
    std::vector<std::vector<i64>> m(static_cast<std::size_t>(d), std::vector<i64>(static_cast<std::size_t>(d), 0));
    for (int c = 0; c < d; ++c) {
        std::vector<std::int64_t> col(static_cast<std::size_t>(d), 0);
        col[static_cast<std::size_t>(c)] = 1;
        FieldElement e = FieldElement(field, col).frobenius(j);
        for (int r = 0; r < d; ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = e.coeffs()[static_cast<std::size_t>(r)];
        m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)] =
            mod_p(m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)] - 1, p);
    }
    auto basis = detail::null_space(std::move(m), p);
    // enumerate GF(p)-combinations of the basis in canonical index order
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        count *= static_cast<std::uint64_t>(p);
        require(count <= kEnumerationCap, "subfield_elements: subfield too large to enumerate");
    }
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
                c[static_cast<std::size_t>(i)] =
                    mod_p(c[static_cast<std::size_t>(i)] + digit * bvec[static_cast<std::size_t>(i)], p);
        }
        out.emplace_back(field, std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Embedding embed(const FieldPtr& sub, const FieldPtr& sup) {
    require(sub->p() == sup->p(), "embed: different characteristics");
    require(sup->degree() % sub->degree() == 0,
            "embed: " + std::to_string(sub->degree()) + " does not divide " +
                std::to_string(sup->degree()));
    const int d1 = sub->degree();
    // the roots of sub's modulus lie in the degree-d1 subfield of sup
    auto sf = subfield_elements(sup, d1);
    std::vector<FieldElement> roots;
    for (const auto& s : sf) {
        // Horner with prime-field coefficients
        FieldElement v = sup->zero();
        for (std::size_t i = sub->modulus().size(); i-- > 0;)
            v = v * s + sup->from_int(sub->modulus()[i]);
        if (v.is_zero()) roots.push_back(s);
    }
    if (d1 == 1) {
        // modulus is T; its root is 0 and the map is the prime-field embedding
        return Embedding(sub, sup, sup->zero());
    }
    if (roots.size() != static_cast<std::size_t>(d1))
        throw InconsistencyError("embed: modulus does not split in the target subfield");
    return Embedding(sub, sup, *std::min_element(roots.begin(), roots.end()));
}

FieldElement lift_element(const FieldElement& x, const FieldPtr& target) {
    if (same_field(x.field(), target)) return target->element(x.coeffs());
    return embed(x.field(), target).apply(x);
}

FieldElement primitive_root_of_unity(const FieldPtr& field, std::uint64_t r) {
    if (r == 0) throw ParameterError("primitive_root_of_unity: r must be positive");
    if (r == 1) return field->one();
    // r | p^d - 1 iff ord_r(p) divides d; checked mod r so huge orders are fine
    const int d = field->degree();
    int j = 0;
    std::uint64_t pw = 1;
    const auto p = static_cast<std::uint64_t>(field->p());
    for (int i = 1; i <= d; ++i) {
        pw = (pw * (p % r)) % r;
        if (pw == 1) {
            j = i;
            break;
        }
    }
    if (j == 0 || d % j != 0)
        throw ParameterError("primitive_root_of_unity: r does not divide p^d - 1");

    if (field->order_fits_u64() && field->order() <= kEnumerationCap) {
        // g^((p^d-1)/r) for the canonically least primitive element g
        std::uint64_t n = field->order() - 1;
        auto factors = prime_factors(n);
        for (std::uint64_t idx = 1; idx < field->order(); ++idx) {
            FieldElement g = field->element_at(idx);
            bool primitive = true;
            for (std::uint64_t f : factors) {
                if (g.pow(n / f).is_one()) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) return g.pow(n / r);
        }
        throw InconsistencyError("primitive_root_of_unity: no primitive element found");
    }

    // Large field: all r-th roots of unity lie in the subfield GF(p^j);
    // use the canonically least generator of that subfield's group.
    std::uint64_t nsub = pow_u64(field->p(), j) - 1;
    require(nsub + 1 <= kEnumerationCap,
            "primitive_root_of_unity: subfield containing the roots is too large");
    auto factors = prime_factors(nsub);
    for (const auto& g : subfield_elements(field, j)) {
        if (g.is_zero()) continue;
        bool primitive = true;
        for (std::uint64_t f : factors) {
            if (g.pow(nsub / f).is_one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g.pow(nsub / r);
    }
    throw InconsistencyError("primitive_root_of_unity: no generator found in the subfield");
}

std::vector<FieldElement> enumerate(const FieldPtr& field) {
    require(field->order_fits_u64() && field->order() <= kEnumerationCap,
            "enumerate: field too large");
    std::uint64_t n = field->order();
    std::vector<FieldElement> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(field->element_at(i));
    return out;
}

} // namespace amc
