#include "amcurve/function_field.hpp"

#include <algorithm>
#include <utility>

namespace amc {

UPoly::UPoly(FieldPtr field) : field_(std::move(field)) {}

UPoly::UPoly(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    strip();
}

void UPoly::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const FieldElement& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::variable(const FieldPtr& field) {
    return UPoly(field, {field->zero(), field->one()});
}

const FieldElement& UPoly::lead() const {
    if (c_.empty()) throw ParameterError("UPoly::lead on zero polynomial");
    return c_.back();
}

UPoly UPoly::operator-() const {
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(-x);
    return UPoly(field_, std::move(r));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<FieldElement> r;
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    r.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < a.c_.size() && i < b.c_.size())
            r.push_back(a.c_[i] + b.c_[i]);
        else
            r.push_back(i < a.c_.size() ? a.c_[i] : b.c_[i]);
    }
    return UPoly(a.field_, std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
    std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, a.field_->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(a.field_, std::move(r));
}

bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& num, const UPoly& den) {
    if (den.is_zero()) throw ParameterError("UPoly::divmod by zero");
    UPoly r = num;
    if (num.degree() < den.degree()) return {UPoly(num.field_), r};
    std::vector<FieldElement> q(static_cast<std::size_t>(num.degree() - den.degree()) + 1,
                                num.field_->zero());
    FieldElement lead_inv = den.lead().inverse();
    while (!r.is_zero() && r.degree() >= den.degree()) {
        int shift = r.degree() - den.degree();
        FieldElement c = r.lead() * lead_inv;
        q[static_cast<std::size_t>(shift)] = c;
        std::vector<FieldElement> sub(static_cast<std::size_t>(shift), num.field_->zero());
        for (const auto& dc : den.c_) sub.push_back(dc * c);
        r = r - UPoly(num.field_, std::move(sub));
    }
    return {UPoly(num.field_, std::move(q)), r};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly rem = divmod(a, b).second;
        a = std::move(b);
        b = std::move(rem);
    }
    if (!a.is_zero()) {
        FieldElement s = a.lead().inverse();
        std::vector<FieldElement> c;
        c.reserve(a.c_.size());
        for (const auto& x : a.c_) c.push_back(x * s);
        a = UPoly(a.field_, std::move(c));
    }
    return a;
}

FieldElement UPoly::eval(const FieldElement& x) const {
    FieldElement acc = field_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RatFun::RatFun(UPoly num) : num_(std::move(num)), den_(UPoly::constant(num_.field()->one())) {}

RatFun::RatFun(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ParameterError("RatFun: zero denominator");
    normalize();
}

RatFun RatFun::constant(const FieldElement& c) { return RatFun(UPoly::constant(c)); }

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = UPoly::constant(num_.field()->one());
        return;
    }
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = UPoly::divmod(num_, g).first;
        den_ = UPoly::divmod(den_, g).first;
    }
    FieldElement s = den_.lead().inverse();
    auto scale = [&](const UPoly& p) {
        std::vector<FieldElement> c;
        c.reserve(p.coeffs().size());
        for (const auto& x : p.coeffs()) c.push_back(x * s);
        return UPoly(p.field(), std::move(c));
    };
    num_ = scale(num_);
    den_ = scale(den_);
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw ParameterError("RatFun: inverse of zero");
    return RatFun(den_, num_);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

ASFunctionField::ASFunctionField(FieldPtr constants, LinearizedPoly l, RatFun g)
    : field_(std::move(constants)), l_(std::move(l)), g_(std::move(g)), q_(l_.degree()) {
    if (!same_field(l_.coeff_field(), field_))
        throw ParameterError("ASFunctionField: polynomial not lifted into the constant field");
    if (!l_.separable()) throw ParameterError("ASFunctionField: relation must be separable");
    if (l_.n() != 1) throw ParameterError("ASFunctionField: relation must be p-linearized");
    if (q_ > 256) throw ParameterError("ASFunctionField: degree past desk scale");
}

ASFunctionField::Elem ASFunctionField::zero() const {
    return Elem(static_cast<std::size_t>(q_), RatFun(UPoly(field_)));
}

ASFunctionField::Elem ASFunctionField::from_rat(const RatFun& r) const {
    Elem e = zero();
    e[0] = r;
    return e;
}

ASFunctionField::Elem ASFunctionField::y_pow(std::uint64_t e) const {
    if (e > q_) throw ParameterError("ASFunctionField: y-power beyond the relation degree");
    Elem out = zero();
    if (e < q_) {
        out[static_cast<std::size_t>(e)] = RatFun::constant(field_->one());
        return out;
    }
    // y^q = (g - sum_{i<m} a_i y^(p^i)) / a_m
    FieldElement inv_am = l_.coeffs().back().inverse();
    out[0] = g_ * RatFun::constant(inv_am);
    std::uint64_t pw = 1;
    for (int i = 0; i < l_.m(); ++i) {
        const FieldElement& a = l_.coeffs()[static_cast<std::size_t>(i)];
        if (!a.is_zero())
            out[static_cast<std::size_t>(pw)] =
                out[static_cast<std::size_t>(pw)] - RatFun::constant(a * inv_am);
        pw *= static_cast<std::uint64_t>(l_.p());
    }
    return out;
}

ASFunctionField::Elem ASFunctionField::add(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

ASFunctionField::Elem ASFunctionField::sub(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

ASFunctionField::Elem ASFunctionField::scale(const FieldElement& c, const Elem& a) const {
    Elem r = a;
    for (auto& x : r) x = x * RatFun::constant(c);
    return r;
}

bool ASFunctionField::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](const RatFun& r) { return r.is_zero(); });
}

} // namespace amc
