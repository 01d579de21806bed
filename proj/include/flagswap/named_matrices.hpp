#ifndef FLAGSWAP_NAMED_MATRICES_HPP
#define FLAGSWAP_NAMED_MATRICES_HPP

#include <flagswap/error.hpp>
#include <flagswap/f2tri.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace flagswap {

// Dual-space matrices (T^n)^* share the F2Tri representation; the pairing
// identifies them with T^n.

/// Phi: (T^n)^* -> T^{n-1}, N_ij = M_ij + M_{i+1,j} + M_{i,j+1} + M_{i+1,j+1}.
inline F2Tri phi(const F2Tri& m)
{
    const std::size_t n = m.n();
    if (n < 2) {
        throw Error(ErrorKind::DimensionMismatch, "phi needs n >= 2");
    }
    auto at = [&](std::size_t i, std::size_t j) { return i <= j && m.get(i, j); };
    F2Tri out(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            out.set(i, j, at(i, j) ^ at(i + 1, j) ^ at(i, j + 1) ^ at(i + 1, j + 1));
        }
    }
    return out;
}

/// Phi^*: (T^{n-1})^* -> T^n, E_ij -> E_ij + E_{i,j+1} + E_{i+1,j} + E_{i+1,j+1}
/// (terms below the diagonal dropped).
inline F2Tri phi_star(const F2Tri& dual)
{
    const std::size_t n = dual.n() + 1;
    F2Tri out(n);
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (!dual.get(i, j)) {
                continue;
            }
            out.flip(i, j);
            out.flip(i, j + 1);
            if (i + 1 <= j) {
                out.flip(i + 1, j);
            }
            out.flip(i + 1, j + 1);
        }
    }
    return out;
}

namespace detail {

inline void require_even(std::size_t n, std::string_view what)
{
    if (n < 2 || n % 2 != 0) {
        throw Error(ErrorKind::InvalidParity, std::string(what) + " needs an even n >= 2, got " + std::to_string(n));
    }
}

inline void require_odd(std::size_t n, std::string_view what)
{
    if (n % 2 != 1) {
        throw Error(ErrorKind::InvalidParity, std::string(what) + " needs an odd n, got " + std::to_string(n));
    }
}

} // namespace detail

/// M^-_n: ones exactly on the upper-right 2x2 corner (even n).
inline F2Tri corner_minus(std::size_t n)
{
    detail::require_even(n, "M^-");
    F2Tri m(n);
    m.set(1, n - 1, true);
    m.set(1, n, true);
    if (n > 2) {
        m.set(2, n - 1, true);
    }
    m.set(2, n, true);
    return m;
}

inline F2Tri corner_plus(std::size_t n) { return iota_f2(corner_minus(n)); }

/// N^-_m in (T^m)^*: a single one in the upper-right corner (m = n-1 odd).
inline F2Tri corner_dual_minus(std::size_t m)
{
    detail::require_odd(m, "N^-");
    F2Tri out(m);
    out.set(1, m, true);
    return out;
}

/// P_m: ones at (i, j), i <= j, both odd.
inline F2Tri odd_pattern(std::size_t m)
{
    F2Tri out(m);
    for (std::size_t i = 1; i <= m; i += 2) {
        for (std::size_t j = i; j <= m; j += 2) {
            out.set(i, j, true);
        }
    }
    return out;
}

inline F2Tri corner_dual_plus(std::size_t m)
{
    return corner_dual_minus(m) ^ odd_pattern(m);
}

/// h-bar_n: 1,0,1,0,... over the first (n-1)/2 entries, zero after (n = 3 mod 4).
/// For n = 1 mod 4 the middle entry rules out any special slice.
inline HeightVector special_height(std::size_t n)
{
    if (n % 4 != 3) {
        throw Error(ErrorKind::InvalidParity, "special height needs n = 3 mod 4, got " + std::to_string(n));
    }
    std::uint64_t bits = 0;
    for (std::size_t k = 1; k <= (n - 1) / 2; k += 2) {
        bits |= std::uint64_t{1} << (k - 1);
    }
    return HeightVector(n, bits);
}

/// M-bar^-_n: diagonal matrix whose diagonal is h-bar_n.
inline F2Tri special_diagonal_minus(std::size_t n)
{
    const HeightVector h = special_height(n);
    F2Tri m(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m.set(k, k, h[k]);
    }
    return m;
}

inline F2Tri special_diagonal_plus(std::size_t n) { return iota_f2(special_diagonal_minus(n)); }

/// f: T^n -> T^{n+1}, appends the column (1,...,1,0,...,0)^T with (n+1)/2 ones.
inline F2Tri append_column(const F2Tri& m)
{
    const std::size_t n = m.n();
    detail::require_odd(n, "append_column");
    F2Tri out(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            out.set(i, j, m.get(i, j));
        }
    }
    for (std::size_t i = 1; i <= (n + 1) / 2; ++i) {
        out.set(i, n + 1, true);
    }
    return out;
}

/// N-bar^-_n: ones at i <= j with i odd and i <= (n+1)/2.
inline F2Tri special_dual_minus(std::size_t n)
{
    detail::require_odd(n, "N-bar^-");
    F2Tri out(n);
    for (std::size_t i = 1; i <= (n + 1) / 2; i += 2) {
        for (std::size_t j = i; j <= n; ++j) {
            out.set(i, j, true);
        }
    }
    return out;
}

/// N-bar^+_n: ones at i <= j with i, j odd and i <= (n+1)/2, or i odd, j even and i >= (n+1)/2.
inline F2Tri special_dual_plus(std::size_t n)
{
    detail::require_odd(n, "N-bar^+");
    const std::size_t half = (n + 1) / 2;
    F2Tri out(n);
    for (std::size_t i = 1; i <= n; i += 2) {
        for (std::size_t j = i; j <= n; ++j) {
            const bool j_odd = j % 2 == 1;
            if ((j_odd && i <= half) || (!j_odd && i >= half)) {
                out.set(i, j, true);
            }
        }
    }
    return out;
}

/*
 * Lookup by name, for reports and tests:
 *   E<k>, R<k>, M-, M+, N-, N+, P, Mbar-, Mbar+, Nbar-, Nbar+
 * `n` is the size of the returned matrix.
 */
inline F2Tri named_matrix(std::size_t n, std::string_view name)
{
    if (!name.empty() && (name.front() == 'E' || name.front() == 'R') && name.size() > 1) {
        const std::size_t k = std::stoul(std::string(name.substr(1)));
        if (k < 1 || k > n) {
            throw Error(ErrorKind::IndexOutOfRange, "index of " + std::string(name) + " outside 1.." + std::to_string(n));
        }
        return name.front() == 'E' ? diagonal_band(n, k) : height_functional(n, k);
    }
    if (name == "M-") return corner_minus(n);
    if (name == "M+") return corner_plus(n);
    if (name == "N-") return corner_dual_minus(n);
    if (name == "N+") return corner_dual_plus(n);
    if (name == "P") return odd_pattern(n);
    if (name == "Mbar-") return special_diagonal_minus(n);
    if (name == "Mbar+") return special_diagonal_plus(n);
    if (name == "Nbar-") return special_dual_minus(n);
    if (name == "Nbar+") return special_dual_plus(n);
    throw Error(ErrorKind::Parse, "unknown named matrix '" + std::string(name) + "'");
}

} // namespace flagswap

#endif // FLAGSWAP_NAMED_MATRICES_HPP
