#ifndef AMCURVE_FUNCTION_FIELD_HPP
#define AMCURVE_FUNCTION_FIELD_HPP

#include <cstdint>
#include <vector>

#include "amcurve/gf.hpp"
#include "amcurve/linpoly.hpp"

namespace amc {

/// Dense univariate polynomial over a finite field, trailing zeros
/// stripped. Small degrees only; everything is exact.
class UPoly {
public:
    explicit UPoly(FieldPtr field);                           // zero
    UPoly(FieldPtr field, std::vector<FieldElement> coeffs);  // coeffs[i] * x^i

    static UPoly constant(const FieldElement& c);
    static UPoly variable(const FieldPtr& field); // x

    const FieldPtr& field() const { return field_; }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const FieldElement& lead() const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly&, const UPoly&);
    friend UPoly operator-(const UPoly&, const UPoly&);
    friend UPoly operator*(const UPoly&, const UPoly&);
    friend bool operator==(const UPoly&, const UPoly&);
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<UPoly, UPoly> divmod(const UPoly& num, const UPoly& den);
    static UPoly gcd(UPoly a, UPoly b); // monic

    FieldElement eval(const FieldElement& x) const;

private:
    void strip();
    FieldPtr field_;
    std::vector<FieldElement> c_;
};

/// Rational function num/den in one variable, kept normalized:
/// gcd(num, den) = 1 and den monic.
class RatFun {
public:
    explicit RatFun(UPoly num);          // polynomial
    RatFun(UPoly num, UPoly den);        // den != 0
    static RatFun constant(const FieldElement& c);

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    const FieldPtr& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }

    RatFun inverse() const; // throws ParameterError on 0
    RatFun operator-() const;
    friend RatFun operator+(const RatFun&, const RatFun&);
    friend RatFun operator-(const RatFun&, const RatFun&);
    friend RatFun operator*(const RatFun&, const RatFun&);
    friend RatFun operator/(const RatFun&, const RatFun&);
    friend bool operator==(const RatFun&, const RatFun&);
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

private:
    void normalize();
    UPoly num_, den_;
};

/// The function field K(x)[y] / (L(y) - g(x)) of a generalized
/// Artin-Schreier cover: elements are represented on the basis
/// 1, y, ..., y^(q-1) with coefficients in K(x), q the plain degree of
/// the separable p-linearized L. Supports exactly what the symbolic
/// automorphism checks need: y-powers up to q, linear combinations, and
/// zero tests.
class ASFunctionField {
public:
    using Elem = std::vector<RatFun>; // length q

    /// l must be lifted into `constants`; g is the right-hand side in x.
    ASFunctionField(FieldPtr constants, LinearizedPoly l, RatFun g);

    const FieldPtr& constants() const { return field_; }
    std::uint64_t q() const { return q_; }

    Elem zero() const;
    Elem from_rat(const RatFun& r) const;

    /// y^e reduced modulo the relation; e <= q.
    Elem y_pow(std::uint64_t e) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem scale(const FieldElement& c, const Elem& a) const;
    bool is_zero(const Elem& a) const;

private:
    FieldPtr field_;
    LinearizedPoly l_;
    RatFun g_;
    std::uint64_t q_;
};

} // namespace amc

#endif
