#ifndef AMCURVE_CURVE_HPP
#define AMCURVE_CURVE_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "amcurve/gf.hpp"
#include "amcurve/linpoly.hpp"

namespace amc {

/// The tower p | qbar = p^n | q = qbar^m.
struct Tower {
    std::int64_t p;
    int n;
    int m;

    std::uint64_t qbar() const;
    std::uint64_t q() const;
};

/// Validated member of the family S_{q|qbar}: the nonsingular model of
/// L1(X) * L2(Y) = 1 with L1, L2 separable qbar-linearized of degree q,
/// not both qbar^k-linearized for any k >= 2. Immutable.
class AMCurve {
public:
    const Tower& tower() const { return tower_; }
    std::uint64_t q() const { return tower_.q(); }
    std::uint64_t qbar() const { return tower_.qbar(); }

    const LinearizedPoly& l1() const { return l1_; }
    const LinearizedPoly& l2() const { return l2_; }
    const FieldPtr& coeff_field() const { return l1_.coeff_field(); }

    /// Shared ambient field containing both kernels, F_qbar and the
    /// coefficients; the lifted polynomials and kernels live here.
    const FieldPtr& ambient() const { return ambient_; }
    const LinearizedPoly& l1_ambient() const { return l1_amb_; }
    const LinearizedPoly& l2_ambient() const { return l2_amb_; }
    const std::vector<FieldElement>& kernel1() const { return kernel1_; }
    const std::vector<FieldElement>& kernel2() const { return kernel2_; }

    /// Canonical primitive (qbar-1)-th root of unity in the ambient field
    /// (automatically lies in the embedded F_qbar).
    const FieldElement& lambda() const { return lambda_; }

    /// True when monic(L1) == monic(L2): the curve carries the extra
    /// involution xi and its group is Sigma x| Delta.
    bool diagonal() const { return diagonal_; }

    friend AMCurve new_am_curve(LinearizedPoly l1, LinearizedPoly l2);

private:
    AMCurve(Tower tower, LinearizedPoly l1, LinearizedPoly l2, FieldPtr ambient,
            LinearizedPoly l1_amb, LinearizedPoly l2_amb, std::vector<FieldElement> kernel1,
            std::vector<FieldElement> kernel2, FieldElement lambda, bool diagonal)
        : tower_(tower), l1_(std::move(l1)), l2_(std::move(l2)), l1_amb_(std::move(l1_amb)),
          l2_amb_(std::move(l2_amb)), ambient_(std::move(ambient)),
          kernel1_(std::move(kernel1)), kernel2_(std::move(kernel2)), lambda_(std::move(lambda)),
          diagonal_(diagonal) {}

    Tower tower_;
    LinearizedPoly l1_, l2_;
    LinearizedPoly l1_amb_, l2_amb_;
    FieldPtr ambient_;
    std::vector<FieldElement> kernel1_, kernel2_;
    FieldElement lambda_;
    bool diagonal_;
};

/// Validates family membership (separability, equal degree, the
/// qbar^k clause) and precomputes kernels in a shared ambient field.
/// Throws ValidationError naming the violated clause.
AMCurve new_am_curve(LinearizedPoly l1, LinearizedPoly l2);

/// Deterministic draw of a valid curve with coefficients in F_q,
/// retrying seeded draws until the pair passes validation.
AMCurve random_am_curve(std::int64_t p, int n, int m, std::uint64_t seed);

/// Ramification data of the degree-q Artin-Schreier cover K(x,y)/K(x):
/// q totally ramified places, filtration orders q, q, 1 (G^(0) = G^(1),
/// trivial second ramification group), different 2(q-1) at each.
struct RamificationProfile {
    std::uint64_t galois_degree;        // |G| = q
    std::uint64_t ramified_places;      // q
    std::vector<std::uint64_t> filtration_orders; // |G_P^(0)|, |G_P^(1)|, ... down to 1
    std::int64_t different_per_place;   // sum (|G_P^(i)| - 1)
    std::int64_t different_sum() const;
};

RamificationProfile am_ramification(const AMCurve& c);

/// d_P = sum_i (|G_P^(i)| - 1) over a filtration given by its orders
/// (the trailing trivial groups may be omitted).
std::int64_t different_from_filtration(const std::vector<std::uint64_t>& orders);

/// 2g - 2 = |G|(2 gbar - 2) + different_sum, solved for g; throws
/// InconsistencyError if the right side is odd.
std::int64_t riemann_hurwitz_genus(std::uint64_t group_order, std::int64_t quotient_genus,
                                   std::int64_t different_sum);

/// gamma = 1 + |G|(gammabar - 1) + sum (|G| - l_i); each l_i must divide
/// |G|.
std::int64_t deuring_shafarevich(std::uint64_t group_order, std::int64_t quotient_prank,
                                 const std::vector<std::uint64_t>& short_orbit_lengths);

/// Genus computed through the Riemann-Hurwitz engine from the curve's
/// ramification profile, then cross-asserted against (q-1)^2.
std::int64_t genus(const AMCurve& c);

/// Nakajima's Sylow bound q^2 <= p/(p-2) * (g-1), checked in integers.
struct NakajimaCheck {
    bool ok;
    bool tight;
    std::int64_t lhs; // q^2 (p-2)
    std::int64_t rhs; // p (g-1)
};
NakajimaCheck nakajima_check(const AMCurve& c);

struct CountOptions {
    int threads = 1;
};

/// Number of rational places of the nonsingular model over GF(Q0^k),
/// Q0 the coefficient-field order: affine solutions of L1(x)L2(y) = 1
/// plus the kernel labels of both polynomials that lie in GF(Q0^k).
std::int64_t rational_places(const AMCurve& c, int k, const CountOptions& opt = {});

/// The affine rational points over GF(Q0^k) (small fields only).
std::vector<std::pair<FieldElement, FieldElement>> affine_points(const AMCurve& c, int k);

/// Point counts and L-polynomial of a curve over GF(q0).
struct ZetaData {
    std::int64_t q0;
    std::int64_t p;
    int genus;
    std::vector<std::int64_t> counts; // N_1 .. N_2g
    std::vector<std::int64_t> l_poly; // c_0 = 1 .. c_2g, integer coefficients
    int p_rank;                       // deg(l_poly mod p)
    double max_root_deviation;        // max | |1/root| - sqrt(q0) |
};

/// Newton-identity recovery of the L-polynomial from N_1..N_2g, with the
/// functional equation and reciprocal-root checks. Throws
/// InconsistencyError when the counts cannot come from a genus-g curve.
ZetaData l_polynomial_from_counts(std::int64_t q0, std::int64_t p, int genus,
                                  const std::vector<std::int64_t>& counts);

/// Full pipeline for an AM curve; refuses genus > 4 with GuardError
/// ("desk-scale limit").
ZetaData l_polynomial(const AMCurve& c, const CountOptions& opt = {});

/// Generic pipeline over any place counter (used by the quotient curves).
ZetaData l_polynomial_generic(const std::function<std::int64_t(int)>& count_places,
                              std::int64_t q0, std::int64_t p, int genus);

/// N_k predicted by an already-computed L-polynomial, any k >= 1.
std::int64_t predicted_count(const ZetaData& z, int k);

/// The maximal genus the zeta pipeline will attempt.
inline constexpr int kZetaGenusGuard = 4;

} // namespace amc

#endif
