#ifndef AMCURVE_AUTGROUP_HPP
#define AMCURVE_AUTGROUP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amcurve/curve.hpp"
#include "amcurve/gf.hpp"

namespace amc {

/// Structured automorphism (x, y) -> (lambda*u + alpha, lambda^-1*v + beta)
/// with (u, v) = (y, x) when swap is set, (x, y) otherwise. Closed under
/// composition and inversion. All field elements share one ambient field.
struct AutMap {
    bool swap;
    FieldElement lambda;
    FieldElement alpha;
    FieldElement beta;

    friend bool operator==(const AutMap&, const AutMap&);
    friend bool operator!=(const AutMap& a, const AutMap& b) { return !(a == b); }
    friend bool operator<(const AutMap&, const AutMap&);
};

AutMap aut_identity(const FieldPtr& ambient);
AutMap compose(const AutMap& outer, const AutMap& inner); // apply inner first
AutMap inverse(const AutMap& m);
std::uint64_t order_of(const AutMap& m);

/// Translation tau_{alpha,beta}, scaling theta_lambda, and the swap xi.
AutMap make_tau(const FieldElement& alpha, const FieldElement& beta);
AutMap make_theta(const FieldElement& lambda);
AutMap make_xi(const FieldPtr& ambient);

/// One monomial comparison in the symbolic identity check.
struct MonomialCheck {
    long long x_exp;
    long long y_exp;
    std::string lhs;
    std::string rhs;
    bool ok;
};

struct AutCertificate {
    bool ok;
    std::vector<MonomialCheck> transcript;
    std::string first_mismatch; // empty when ok
};

/// Symbolic check that L1(phi_x(X,Y)) * L2(phi_y(X,Y)) equals
/// L1(X) * L2(Y) coefficientwise, expanded through the linearized
/// structure L(cu X + cv Y + cc) = sum a_i (cu^(qbar^i) X^(qbar^i) + ...)
/// + L(cc). Returns the full reduction transcript.
AutCertificate verify_automorphism(const AMCurve& c, const AutMap& phi);

struct AutGroup {
    std::vector<AutMap> elements; // closed, sorted canonically
    std::vector<AutMap> generators;
    std::optional<AutMap> theta;
    std::optional<AutMap> xi; // present only for L1 = L2 (up to monic scaling)
    std::vector<std::string> structure_tags;

    std::uint64_t order() const { return elements.size(); }
    bool contains(const AutMap& m) const;
};

/// The claimed full group: Sigma x| Delta (L1 = L2 up to monic scaling,
/// order 2(qbar-1)q^2) or Sigma x| Gamma (otherwise, order (qbar-1)q^2),
/// generated by all tau_{alpha,beta}, theta and (when applicable) xi.
/// Every element is run through verify_automorphism.
AutGroup claimed_group(const AMCurve& c);

struct RelationCheck {
    std::string lhs;
    std::string rhs;
    bool ok;
};

/// Structural certificate: Sigma elementary abelian of order q^2 and
/// normal, complement cyclic/dihedral with the defining relations,
/// trivial intersection, bijective product, Sigma a Sylow p-subgroup.
struct StructureReport {
    std::uint64_t order;
    std::vector<std::string> tags;
    std::vector<RelationCheck> relations;
    bool ok;
};

StructureReport structure_report(const AMCurve& c, const AutGroup& g);

/// Label of a place at infinity of the nonsingular model: the fiber
/// coordinate that is pinned ('x' for P_{x=root}, 'y' for P_{y=root})
/// and the kernel root.
struct PlaceLabel {
    char axis;
    FieldElement root;

    friend bool operator==(const PlaceLabel&, const PlaceLabel&);
    friend bool operator<(const PlaceLabel&, const PlaceLabel&);
};

struct SigmaOrbit {
    std::vector<PlaceLabel> places;
    std::vector<AutMap> stabilizer; // shared by every place of the orbit
    std::string note;
};

struct OrbitData {
    std::vector<SigmaOrbit> orbits;
};

/// Action of Sigma on the 2q infinity places: tau_{alpha,beta} sends
/// P_{x=a} to P_{x=a+alpha} and P_{y=b} to P_{y=b+beta}. Asserts the
/// short-orbit structure (exactly two orbits of length q, distinct
/// order-q stabilizers with trivial intersection) and throws
/// InconsistencyError otherwise.
OrbitData sigma_orbits(const AMCurve& c);

struct SearchOptions {
    std::uint64_t budget = 100'000'000; // candidate evaluations
    int max_filter_points = 16;
};

/// One affine-linear map found by the exhaustive search, with the
/// constant gamma of sigma(F) = gamma * F (gamma = 1 for the claimed
/// shapes).
struct LinearMapCandidate {
    FieldElement a, b, c, d, e, f; // (x,y) -> (a x + b y + e, c x + d y + f)
    FieldElement gamma;
};

struct LinearSearchResult {
    FieldPtr search_field;
    std::vector<LinearMapCandidate> maps;
    std::uint64_t evaluated;
};

/// Exhaustive search over all invertible affine-linear maps with
/// coefficients in GF(p^D) that transform the curve polynomial into a
/// scalar multiple of itself: point-filter first, exact symbolic
/// confirmation after. Throws ParameterError if GF(p^D) does not contain
/// both kernels and F_qbar, BudgetError past the evaluation budget.
LinearSearchResult linear_aut_search(const AMCurve& c, int ambient_degree,
                                     const SearchOptions& opt = {});

/// Interpret the found maps as structured AutMaps (throws
/// InconsistencyError if one does not fit the structured shape) sorted
/// canonically.
std::vector<AutMap> as_aut_maps(const LinearSearchResult& r);

/// Set equality between a search result and a claimed group, compared in
/// the search field (group elements are embedded into it).
bool same_maps(const LinearSearchResult& r, const AutGroup& g);

/// True if some candidate uses the swapped shape (b, c nonzero).
bool contains_swap_shape(const LinearSearchResult& r);

} // namespace amc

#endif
