#ifndef AMCURVE_LINPOLY_HPP
#define AMCURVE_LINPOLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "amcurve/gf.hpp"

namespace amc {

/// A qbar-linearized polynomial L(T) = sum a_i T^(qbar^i) with qbar = p^n.
/// Coefficients live in an explicit finite coefficient field; evaluation is
/// defined in any extension of it. deg L = qbar^m where m is the index of
/// the last nonzero coefficient.
class LinearizedPoly {
public:
    /// coeffs[i] is the coefficient of T^(qbar^i); the top one must be
    /// nonzero. All coefficients must share one field.
    LinearizedPoly(std::int64_t p, int n, std::vector<FieldElement> coeffs);

    std::int64_t p() const { return p_; }
    int n() const { return n_; }                       // qbar = p^n
    std::uint64_t qbar() const;
    int m() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::uint64_t degree() const;                      // qbar^m

    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    const FieldPtr& coeff_field() const { return coeffs_.front().field(); }

    bool separable() const { return !coeffs_.front().is_zero(); }

    friend bool operator==(const LinearizedPoly&, const LinearizedPoly&);
    friend bool operator!=(const LinearizedPoly& a, const LinearizedPoly& b) { return !(a == b); }

private:
    std::int64_t p_;
    int n_;
    std::vector<FieldElement> coeffs_;
};

/// sum a_i x^(qbar^i), by iterated Frobenius on the running power. x must
/// live in the coefficient field or an extension of it (the coefficients
/// are embedded on the fly; use lift() once outside hot loops).
FieldElement eval(const LinearizedPoly& l, const FieldElement& x);

/// Copy of l with coefficients embedded into target.
LinearizedPoly lift(const LinearizedPoly& l, const FieldPtr& target);

/// Largest k >= 1 such that l is qbar^k-linearized, i.e. a_i = 0 for every
/// index i not divisible by k. Equals the gcd of the nonzero-coefficient
/// indices (requires m >= 1).
int classify_linearity(const LinearizedPoly& l);

/// Divide all coefficients by the leading one.
LinearizedPoly monic(const LinearizedPoly& l);

/// L composed with M: (L o M)(x) = L(M(x)); coefficient c_k =
/// sum_{i+j=k} a_i * b_j^(qbar^i). Both polynomials are first lifted to a
/// common coefficient field.
LinearizedPoly compose(const LinearizedPoly& l, const LinearizedPoly& m);

/// All qbar^m roots of a separable l, materialized in an ambient field
/// GF(p^D) found by ascending the ladder D = lcm(n*m, e), 2*lcm(n*m, e), ...
/// (e the coefficient-field degree), together with the subspace structure.
struct KernelSpace {
    LinearizedPoly poly;
    FieldPtr ambient;
    std::vector<FieldElement> roots; // sorted canonically, contains 0
    int dimension;                   // m, as an F_qbar-vector space
};

KernelSpace kernel(const LinearizedPoly& l);

/// Roots of l that lie in the given field (coefficients are lifted into
/// it; the field need not split l).
std::vector<FieldElement> roots_in(const LinearizedPoly& l, const FieldPtr& field);

/// One solution y of l(y) = c with y in c's field, if any.
std::optional<FieldElement> solve_in(const LinearizedPoly& l, const FieldElement& c);

/// Deterministic seeded draw of a separable degree-qbar^m linearized
/// polynomial with coefficients in coeff_field (a_0 != 0, a_m != 0;
/// violating draws are rejected and redrawn).
LinearizedPoly random_separable(std::int64_t p, int n, const FieldPtr& coeff_field, int m,
                                std::uint64_t seed);

} // namespace amc

#endif
