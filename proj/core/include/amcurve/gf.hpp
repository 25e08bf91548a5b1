#ifndef AMCURVE_GF_HPP
#define AMCURVE_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "amcurve/errors.hpp"

namespace amc {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// Element of GF(p^d) in the polynomial basis: coeffs()[i] is the
/// coefficient of T^i modulo the parent's modulus, reduced into [0, p).
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<std::int64_t> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement inverse() const;            // throws ParameterError on 0
    FieldElement pow(std::uint64_t e) const;
    FieldElement frobenius() const;          // x -> x^p
    FieldElement frobenius(int k) const;     // x -> x^(p^k)

    /// Multiplicative order; requires the group order to fit in 64 bits.
    std::uint64_t mult_order() const;

    friend FieldElement operator+(const FieldElement&, const FieldElement&);
    friend FieldElement operator-(const FieldElement&, const FieldElement&);
    friend FieldElement operator*(const FieldElement&, const FieldElement&);

    friend bool operator==(const FieldElement&, const FieldElement&);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Canonical total order: numeric value of the coordinate vector read
    /// with coeffs()[0] least significant (the enumeration order).
    friend bool operator<(const FieldElement&, const FieldElement&);

private:
    FieldPtr field_;
    std::vector<std::int64_t> coeffs_;
};

/// GF(p^d) = GF(p)[T]/(modulus). Immutable after construction and safe to
/// share across threads. The modulus is found by a deterministic seeded
/// search, so (p, d, seed) pins the representation.
class FiniteField : public std::enable_shared_from_this<FiniteField> {
public:
    std::int64_t p() const { return p_; }
    int degree() const { return d_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    /// p^d; throws ParameterError if it does not fit in 64 bits.
    std::uint64_t order() const;
    bool order_fits_u64() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(std::int64_t v) const;          // image of the prime subfield
    FieldElement element(std::vector<std::int64_t> coeffs) const;
    FieldElement generator() const;                        // residue class of T

    /// Element with index idx in the canonical enumeration: base-p digits
    /// of idx, least significant digit = coefficient of T^0.
    FieldElement element_at(std::uint64_t idx) const;
    std::uint64_t index_of(const FieldElement& x) const;

    /// Matrix of x -> x^p over GF(p), column-major d x d.
    const std::vector<std::int64_t>& frobenius_matrix() const { return frob_; }

    friend FieldPtr make_field(std::int64_t p, int d, std::uint64_t seed);

private:
    FiniteField() = default;

    std::int64_t p_ = 0;
    int d_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<std::int64_t> modulus_;
    std::vector<std::int64_t> frob_;
};

/// Deterministic construction of GF(p^d); same (p, d, seed) yields the
/// same modulus. p must be an odd prime, d >= 1. Degree 1 always uses the
/// canonical modulus T.
FieldPtr make_field(std::int64_t p, int d, std::uint64_t seed);

/// Structural identity: same p, degree and modulus (seed is provenance).
bool same_field(const FiniteField& a, const FiniteField& b);
bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Ring embedding of GF(p^d1) into GF(p^d2), d1 | d2, sending the
/// generator of sub to the canonically least root of sub's modulus.
class Embedding {
public:
    Embedding(FieldPtr sub, FieldPtr sup, FieldElement generator_image);

    const FieldPtr& sub() const { return sub_; }
    const FieldPtr& sup() const { return sup_; }
    const FieldElement& generator_image() const { return gen_img_; }

    FieldElement apply(const FieldElement& x) const;

private:
    FieldPtr sub_, sup_;
    FieldElement gen_img_;
    std::vector<FieldElement> gen_powers_;
};

Embedding embed(const FieldPtr& sub, const FieldPtr& sup);

/// Convenience: embed a single element into target (constructs the
/// embedding; prefer an Embedding object in loops).
FieldElement lift_element(const FieldElement& x, const FieldPtr& target);

/// lambda with multiplicative order exactly r, r | p^d - 1, computed as
/// g^((p^d-1)/r) for the canonically least primitive element g.
FieldElement primitive_root_of_unity(const FieldPtr& field, std::uint64_t r);

/// All p^d elements in canonical order. Guarded against huge fields.
std::vector<FieldElement> enumerate(const FieldPtr& field);

/// The elements of the degree-j subfield GF(p^j) inside field (j | d),
/// i.e. the fixed points of Frobenius^j, in canonical order.
std::vector<FieldElement> subfield_elements(const FieldPtr& field, int j);

} // namespace amc

#endif
