#ifndef AMCURVE_GFP_INTERNAL_HPP
#define AMCURVE_GFP_INTERNAL_HPP

// Internal helpers shared by the core sources: dense polynomials over the
// prime field GF(p) (little-endian coefficient vectors) and Gaussian
// elimination over GF(p). Not installed, not part of the public surface.

#include <cstdint>
#include <optional>
#include <vector>

namespace amc::detail {

using i64 = std::int64_t;
using IPoly = std::vector<i64>; // coeffs[i] * T^i, reduced mod p

inline i64 mod_p(i64 v, i64 p) {
    v %= p;
    return v < 0 ? v + p : v;
}

i64 inv_mod_p(i64 a, i64 p);

int poly_deg(const IPoly& f);
void poly_trim(IPoly& f);
IPoly poly_add(const IPoly& a, const IPoly& b, i64 p);
IPoly poly_sub(const IPoly& a, const IPoly& b, i64 p);
IPoly poly_mul(const IPoly& a, const IPoly& b, i64 p);
IPoly poly_mod(IPoly a, const IPoly& f, i64 p);
IPoly poly_gcd(IPoly a, IPoly b, i64 p); // monic gcd
IPoly poly_powmod(const IPoly& base, std::uint64_t e, const IPoly& f, i64 p);

/// Deterministic irreducibility test: gcd(T^(p^k) - T, f) = 1 for
/// 1 <= k <= deg/2 and T^(p^deg) == T (mod f).
bool poly_irreducible(const IPoly& f, i64 p);

/// Row-reduce an r x c matrix over GF(p) in place; returns pivot columns.
std::vector<int> gauss_rref(std::vector<std::vector<i64>>& m, i64 p);

/// Basis of the null space of the r x c matrix (vectors of length c).
std::vector<std::vector<i64>> null_space(std::vector<std::vector<i64>> m, i64 p);

/// One solution of A x = b (A given as r x c), if any.
std::optional<std::vector<i64>> solve_linear(std::vector<std::vector<i64>> a,
                                             std::vector<i64> b, i64 p);

bool is_prime_i64(i64 n);

/// Deterministic well-mixed PRNG seed from construction parameters.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// Uniform integer in [0, n) from a raw 64-bit generator, by rejection.
template <typename Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

} // namespace amc::detail

#endif
