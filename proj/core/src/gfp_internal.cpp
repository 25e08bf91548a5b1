#include "gfp_internal.hpp"

#include <algorithm>

namespace amc::detail {

i64 inv_mod_p(i64 a, i64 p) {
    a = mod_p(a, p);
    i64 t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        i64 q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    return mod_p(t, p);
}

int poly_deg(const IPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

void poly_trim(IPoly& f) {
    f.resize(static_cast<std::size_t>(poly_deg(f) + 1));
}

IPoly poly_add(const IPoly& a, const IPoly& b, i64 p) {
    IPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        i64 v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = mod_p(v, p);
    }
    poly_trim(r);
    return r;
}

IPoly poly_sub(const IPoly& a, const IPoly& b, i64 p) {
    IPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        i64 v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        r[i] = mod_p(v, p);
    }
    poly_trim(r);
    return r;
}

IPoly poly_mul(const IPoly& a, const IPoly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    IPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod_p(r[i + j] + a[i] * b[j], p);
    }
    poly_trim(r);
    return r;
}

IPoly poly_mod(IPoly a, const IPoly& f, i64 p) {
    int df = poly_deg(f);
    i64 lead_inv = inv_mod_p(f[static_cast<std::size_t>(df)], p);
    for (int d = poly_deg(a); d >= df; d = poly_deg(a)) {
        i64 c = mod_p(a[static_cast<std::size_t>(d)] * lead_inv, p);
        for (int i = 0; i <= df; ++i) {
            auto k = static_cast<std::size_t>(d - df + i);
            a[k] = mod_p(a[k] - c * f[static_cast<std::size_t>(i)], p);
        }
    }
    poly_trim(a);
    return a;
}

IPoly poly_gcd(IPoly a, IPoly b, i64 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        a = poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        i64 s = inv_mod_p(a.back(), p);
        for (auto& c : a) c = mod_p(c * s, p);
    }
    return a;
}

IPoly poly_powmod(const IPoly& base, std::uint64_t e, const IPoly& f, i64 p) {
    IPoly r{1};
    IPoly b = poly_mod(base, f, p);
    while (e > 0) {
        if (e & 1) r = poly_mod(poly_mul(r, b, p), f, p);
        b = poly_mod(poly_mul(b, b, p), f, p);
        e >>= 1;
    }
    return r;
}

bool poly_irreducible(const IPoly& f, i64 p) {
    int d = poly_deg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    const IPoly x{0, 1};
    IPoly r = x; // T^(p^k) mod f, k running
    for (int k = 1; k <= d; ++k) {
        r = poly_powmod(r, static_cast<std::uint64_t>(p), f, p);
        if (k <= d / 2) {
            IPoly g = poly_gcd(poly_sub(r, x, p), f, p);
            if (poly_deg(g) != 0) return false;
        }
    }
    return poly_deg(poly_sub(r, x, p)) < 0;
}

std::vector<int> gauss_rref(std::vector<std::vector<i64>>& m, i64 p) {
    std::vector<int> pivots;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        i64 inv = inv_mod_p(m[row][col], p);
        for (std::size_t j = col; j < cols; ++j) m[row][j] = mod_p(m[row][j] * inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            i64 c = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = mod_p(m[i][j] - c * m[row][j], p);
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

std::vector<std::vector<i64>> null_space(std::vector<std::vector<i64>> m, i64 p) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    std::vector<int> pivots = gauss_rref(m, p);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<i64>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<i64> v(cols, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            auto pc = static_cast<std::size_t>(pivots[r]);
            v[pc] = mod_p(-m[r][free_col], p);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<i64>> solve_linear(std::vector<std::vector<i64>> a,
                                             std::vector<i64> b, i64 p) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(mod_p(b[i], p));
    std::vector<int> pivots = gauss_rref(a, p);
    // pivot in the augmented column means no solution
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    std::vector<i64> x(cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<std::size_t>(pivots[r])] = a[r][cols];
    return x;
}

bool is_prime_i64(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t v : {a, b, c}) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
    }
    return h;
}

} // namespace amc::detail
