#ifndef AMCURVE_BIVAR_INTERNAL_HPP
#define AMCURVE_BIVAR_INTERNAL_HPP

// Internal sparse bivariate expansions used by the symbolic automorphism
// and quotient checks. Keys are plain (x-exponent, y-exponent) pairs.

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "amcurve/gf.hpp"
#include "amcurve/linpoly.hpp"

namespace amc::detail {

using BKey = std::pair<long long, long long>;
using Bivar = std::map<BKey, FieldElement>;

inline std::string render_elem(const FieldElement& x) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (i) os << ',';
        os << x.coeffs()[i];
    }
    os << ']';
    return os.str();
}

inline void bv_add(Bivar& m, BKey k, const FieldElement& v) {
    if (v.is_zero()) return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, v);
        return;
    }
    it->second = it->second + v;
    if (it->second.is_zero()) m.erase(it);
}

inline Bivar bv_mul(const Bivar& a, const Bivar& b) {
    Bivar r;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b)
            bv_add(r, {ka.first + kb.first, ka.second + kb.second}, va * vb);
    return r;
}

inline Bivar bv_scale(const Bivar& a, const FieldElement& s) {
    Bivar r;
    for (const auto& [k, v] : a) bv_add(r, k, v * s);
    return r;
}

inline Bivar bv_sub(const Bivar& a, const Bivar& b) {
    Bivar r = a;
    for (const auto& [k, v] : b) bv_add(r, k, -v);
    return r;
}

/// Terms of L(cx*X + cy*Y + cc), via (u+v+w)^(p^k) = u^(p^k) + v^(p^k)
/// + w^(p^k) in characteristic p: the coefficient of X^(qbar^i) is
/// a_i cx^(qbar^i), of Y^(qbar^i) is a_i cy^(qbar^i), constant L(cc).
inline Bivar bv_linearized_affine(const LinearizedPoly& l, const FieldElement& cx,
                                  const FieldElement& cy, const FieldElement& cc) {
    Bivar r;
    long long e = 1;
    FieldElement cxp = cx, cyp = cy;
    for (int i = 0; i <= l.m(); ++i) {
        const FieldElement& a = l.coeffs()[static_cast<std::size_t>(i)];
        if (!a.is_zero()) {
            bv_add(r, {e, 0}, a * cxp);
            bv_add(r, {0, e}, a * cyp);
        }
        if (i < l.m()) {
            e *= static_cast<long long>(l.qbar());
            cxp = cxp.frobenius(l.n());
            cyp = cyp.frobenius(l.n());
        }
    }
    bv_add(r, {0, 0}, eval(l, cc));
    return r;
}

} // namespace amc::detail

#endif
