#ifndef AMCURVE_QUOTIENT_HPP
#define AMCURVE_QUOTIENT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "amcurve/autgroup.hpp"
#include "amcurve/curve.hpp"
#include "amcurve/function_field.hpp"
#include "amcurve/gf.hpp"
#include "amcurve/linpoly.hpp"

namespace amc {

/// Curve L(y) = a x + 1/x with L separable p-linearized of degree q and
/// a != 0: hyperelliptic of genus q - 1, ordinary.
struct YCurve {
    Tower tower;             // (p, 1, h)
    LinearizedPoly l;        // coefficients in coeff field
    FieldElement a;          // in the coefficient field
    FieldPtr ambient;        // contains ker L and the coefficients
    std::vector<FieldElement> kernel;

    std::uint64_t q() const { return tower.q(); }
    const FieldPtr& coeff_field() const { return l.coeff_field(); }
};

/// Curve Ltilde(y) = x^3 + b x with p != 3: genus q - 1, p-rank zero.
struct ZCurve {
    Tower tower;
    LinearizedPoly l;
    FieldElement b;
    FieldPtr ambient;
    std::vector<FieldElement> kernel;

    std::uint64_t q() const { return tower.q(); }
    const FieldPtr& coeff_field() const { return l.coeff_field(); }
};

YCurve y_curve(LinearizedPoly l, FieldElement a);
ZCurve z_curve(LinearizedPoly l, FieldElement b); // throws ParameterError when p == 3

/// Genus through the Riemann-Hurwitz engine (two totally ramified places
/// with different 2(q-1) for Y; one place with filtration orders
/// q,q,q,q,1 for Z), asserted equal to q - 1.
std::int64_t genus(const YCurve& y);
std::int64_t genus(const ZCurve& z);

/// Rational places over GF(Q0^k): affine solutions plus 2 (Y) or 1 (Z)
/// totally ramified places at infinity.
std::int64_t rational_places(const YCurve& y, int k, const CountOptions& opt = {});
std::int64_t rational_places(const ZCurve& z, int k, const CountOptions& opt = {});

ZetaData l_polynomial(const YCurve& y, const CountOptions& opt = {});
ZetaData l_polynomial(const ZCurve& z, const CountOptions& opt = {});

/// Automorphism of a Y or Z curve: x goes through a Moebius map, y is
/// affine: (x, y) -> ((s x + u)/(v x + w), e y + alpha). The matrix is
/// kept in a canonical scaling (first nonzero entry of (s,u,v,w) is 1).
struct YAutMap {
    std::array<FieldElement, 4> mobius; // s, u, v, w
    FieldElement e;
    FieldElement alpha;

    friend bool operator==(const YAutMap&, const YAutMap&);
    friend bool operator!=(const YAutMap& a, const YAutMap& b) { return !(a == b); }
    friend bool operator<(const YAutMap&, const YAutMap&);
};

YAutMap y_identity(const FieldPtr& ambient);
YAutMap y_translation(const FieldElement& alpha);            // (x, y + alpha)
YAutMap y_negation(const FieldPtr& ambient);                 // nu: (-x, -y)
YAutMap y_hyperelliptic(const FieldElement& a);              // mu: (1/(a x), y)
YAutMap compose(const YAutMap& outer, const YAutMap& inner);
YAutMap inverse(const YAutMap& m);
std::uint64_t order_of(const YAutMap& m);
YAutMap canonical(YAutMap m);

/// Symbolic check in the function field K(x)[y]/(L(y) - h(x)): the map is
/// an automorphism iff L(e y + alpha) - h(M(x)) vanishes identically.
bool y_map_is_automorphism(const YCurve& y, const YAutMap& m);
bool z_map_is_automorphism(const ZCurve& z, const YAutMap& m);

struct YAutGroupReport {
    std::vector<YAutMap> elements; // sorted, canonical
    std::vector<std::string> tags;
    std::vector<RelationCheck> relations;
    bool ok;
};

/// Constructs E_q, nu, mu, closes them, certifies order 4q and the
/// direct-product structure Dih(E_q) x <mu>; every element is verified
/// symbolically.
YAutGroupReport y_aut_group(const YCurve& y);

/// Dih(E_q) = E_q x| <nu> containment certificate for a Z curve (the
/// full group is not determined here).
YAutGroupReport z_dihedral_report(const ZCurve& z);

/// The 2q fixed places of the hyperelliptic involution mu, labeled
/// (r, y) with a r^2 = 1 and L(y) = a r + 1/r, materialized in a large
/// enough extension. mu swaps the zeros of a x^2 + 1, so the fixed locus
/// is the zeros of a x^2 - 1; fixedness is verified by substitution.
struct WeierstrassData {
    FieldPtr ambient;
    std::vector<std::pair<FieldElement, FieldElement>> places;
    std::vector<RelationCheck> checks;
    bool ok;
};

WeierstrassData weierstrass_places(const YCurve& y);

struct YSearchResult {
    FieldPtr search_field;
    std::vector<YAutMap> maps;
    std::uint64_t evaluated;
};

/// Exhaustive search over maps ((s x + u)/(v x + w), e y + alpha) with
/// coefficients in GF(p^D): rational-point filter, then symbolic
/// confirmation in the function field.
YSearchResult y_aut_search(const YCurve& y, int ambient_degree, const SearchOptions& opt = {});

/// Quotient of an AM curve by Sigma_x (axis 'x') or Sigma_y (axis 'y'):
/// the rational presentation eta = L1(x), L2(y) = 1/eta, with a counting
/// transcript comparing Sigma-orbit counts of rational places against
/// the Q0^k + 1 places of the rational quotient for k = 1, 2.
struct SigmaQuotient {
    char axis;
    std::string relation;
    std::vector<RelationCheck> transcript;
    bool ok;
};

SigmaQuotient quotient_sigma(const AMCurve& c, char axis);
inline SigmaQuotient quotient_sigma_x(const AMCurve& c) { return quotient_sigma(c, 'x'); }

/// Quotient of X_{(L,L)} by the antidiagonal H = {tau_{alpha,-alpha}}:
/// coordinates (eta, t) = (L(y), x + y) satisfy L(t) = eta + 1/eta, i.e.
/// the curve Y_{L,1}. (The diagonal tau_{alpha,alpha} moves x + y by
/// 2 alpha, so the antidiagonal is the subgroup that fixes both
/// coordinates.) Requires L1 = L2 coefficientwise.
struct DiagonalQuotient {
    YCurve curve;
    std::vector<AutMap> invariance_subgroup; // the antidiagonal, order q
    std::vector<RelationCheck> checks;
    bool ok;
};

DiagonalQuotient diagonal_quotient(const AMCurve& c);

/// Rewriting utility for the normal form L1(z') L(y) - L1(z')^2 = a:
/// checks that L(Y) - L1(Z') splits as L2(Y - Z') for a linearized L2
/// (which forces L2 = L = L1; errors otherwise), and produces the family
/// member L1~(X) * L2(Y) = 1 with L1~ = (1/a) L1(b X), b^q = a.
struct FineFormResult {
    LinearizedPoly l2;
    FieldElement b;
    AMCurve member;
    std::vector<RelationCheck> checks;
    bool ok;
};

FineFormResult fine_form_member(const LinearizedPoly& l1, const LinearizedPoly& l,
                                const FieldElement& a);

} // namespace amc

#endif
