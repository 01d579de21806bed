#ifndef FLAGSWAP_TESTS_ORACLES_HPP
#define FLAGSWAP_TESTS_ORACLES_HPP

// Slow, independent reference computations. Nothing here calls the
// elimination, factorization or orbit code under test.

#include <flagswap/f2tri.hpp>
#include <flagswap/factorization.hpp>
#include <flagswap/rat_matrix.hpp>

#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using flagswap::F2Tri;
using flagswap::Rational;
using flagswap::RatMatrix;

using Rows = std::vector<std::vector<Rational>>;

inline Rows rows_of(const RatMatrix& m)
{
    Rows r(m.dim(), std::vector<Rational>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            r[i][j] = m(i, j);
        }
    }
    return r;
}

/// Laplace expansion along the first row.
inline Rational cofactor_det(const Rows& a)
{
    const std::size_t n = a.size();
    if (n == 0) {
        return Rational(1);
    }
    if (n == 1) {
        return a[0][0];
    }
    Rational total(0);
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c].is_zero()) {
            continue;
        }
        Rows minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rational> row;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != c) {
                    row.push_back(a[i][j]);
                }
            }
            minor.push_back(std::move(row));
        }
        const Rational term = a[0][c] * cofactor_det(minor);
        total = (c % 2 == 0) ? total + term : total - term;
    }
    return total;
}

inline Rational cofactor_det(const RatMatrix& m) { return cofactor_det(rows_of(m)); }

/// Textbook Gaussian elimination over Q with first-nonzero pivoting.
inline std::size_t gauss_rank(Rows a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c].is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c].is_zero()) {
                continue;
            }
            const Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) {
                a[r][k] = a[r][k] - f * a[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

/// The d x d matrix [first k columns of f | first d-k columns of g].
inline Rows juxtapose(const RatMatrix& f, const RatMatrix& g, std::size_t k)
{
    const std::size_t d = f.dim();
    Rows a(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            a[i][j] = j < k ? f(i, j) : g(i, j - k);
        }
    }
    return a;
}

/// Basis of sigma_+ : columns e_d, e_{d-1}, ..., e_1.
inline RatMatrix reversed_identity(std::size_t d)
{
    RatMatrix w(d);
    for (std::size_t j = 0; j < d; ++j) {
        w(d - 1 - j, j) = Rational(1);
    }
    return w;
}

inline RatMatrix naive_product(const RatMatrix& a, const RatMatrix& b)
{
    const std::size_t d = a.dim();
    RatMatrix c(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Rational s(0);
            for (std::size_t k = 0; k < d; ++k) {
                s = s + a(i, k) * b(k, j);
            }
            c(i, j) = s;
        }
    }
    return c;
}

/*
 * Multiplies out the reduced word (s1..sn)(s1..s_{n-1})...(s1) factor by
 * factor. The parameter of each s_i is found by counting its occurrences
 * from the right end of the word.
 */
inline RatMatrix word_product(const flagswap::FactorParams& p)
{
    const std::size_t n = p.n();
    const std::size_t d = n + 1;
    std::vector<std::size_t> word;
    for (std::size_t len = n; len >= 1; --len) {
        for (std::size_t i = 1; i <= len; ++i) {
            word.push_back(i);
        }
    }
    std::vector<std::size_t> occurrence(word.size());
    std::vector<std::size_t> seen(n + 1, 0);
    for (std::size_t pos = word.size(); pos-- > 0;) {
        occurrence[pos] = ++seen[word[pos]];
    }
    RatMatrix u(d);
    for (std::size_t i = 0; i < d; ++i) {
        u(i, i) = Rational(1);
    }
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
        RatMatrix e(d);
        for (std::size_t i = 0; i < d; ++i) {
            e(i, i) = Rational(1);
        }
        const std::size_t i = word[pos];
        e(i - 1, i) = p.t(i, occurrence[pos]);
        u = naive_product(u, e);
    }
    return u;
}

// ---------------------------------------------------------------------------
// F2 side: plain 2D arrays with 1-based (i, j), i <= j.
// ---------------------------------------------------------------------------

using Grid = std::vector<std::vector<int>>;

inline Grid grid_of(const F2Tri& m)
{
    const std::size_t n = m.n();
    Grid g(n + 2, std::vector<int>(n + 2, 0));
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            g[i][j] = m.get(i, j) ? 1 : 0;
        }
    }
    return g;
}

inline F2Tri from_grid(const Grid& g, std::size_t n)
{
    F2Tri m(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            m.set(i, j, g[i][j] & 1);
        }
    }
    return m;
}

inline std::vector<int> heights(const F2Tri& m)
{
    const std::size_t n = m.n();
    const Grid g = grid_of(m);
    std::vector<int> h(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t r = 1; r <= k; ++r) {
            for (std::size_t s = k; s <= n; ++s) {
                h[k] ^= g[r][s];
            }
        }
    }
    return h;
}

inline F2Tri iota(const F2Tri& m)
{
    const std::size_t n = m.n();
    const Grid g = grid_of(m);
    Grid out(n + 2, std::vector<int>(n + 2, 0));
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            out[i][j] = g[n + 1 - j][n + 1 - i] ^ 1;
        }
    }
    return from_grid(out, n);
}

/// Generator g_ij from the definition: add the 2x2 trace to each upper-triangular block entry.
inline F2Tri generator(const F2Tri& m, std::size_t i, std::size_t j)
{
    const std::size_t n = m.n();
    Grid g = grid_of(m);
    const int trace = g[i][j] ^ g[i + 1][j + 1];
    const std::pair<std::size_t, std::size_t> cells[] = {{i, j}, {i, j + 1}, {i + 1, j}, {i + 1, j + 1}};
    for (const auto& [r, c] : cells) {
        if (r <= c) {
            g[r][c] ^= trace;
        }
    }
    return from_grid(g, n);
}

inline std::set<F2Tri> orbit(const F2Tri& start)
{
    const std::size_t n = start.n();
    std::set<F2Tri> seen{start};
    std::deque<F2Tri> queue{start};
    while (!queue.empty()) {
        const F2Tri m = queue.front();
        queue.pop_front();
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                F2Tri next = generator(m, i, j);
                if (seen.insert(next).second) {
                    queue.push_back(std::move(next));
                }
            }
        }
    }
    return seen;
}

inline std::vector<F2Tri> whole_space(std::size_t n)
{
    const std::size_t bits = n * (n + 1) / 2;
    std::vector<F2Tri> all;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << bits); ++c) {
        F2Tri m(n);
        std::size_t b = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = i; j <= n; ++j, ++b) {
                m.set(i, j, (c >> b) & 1U);
            }
        }
        all.push_back(std::move(m));
    }
    return all;
}

/// Partition of T^n into orbits by repeated naive BFS.
inline std::set<std::set<F2Tri>> orbit_partition(std::size_t n)
{
    std::set<std::set<F2Tri>> parts;
    std::set<F2Tri> covered;
    for (const auto& m : whole_space(n)) {
        if (covered.count(m) != 0) {
            continue;
        }
        auto o = orbit(m);
        covered.insert(o.begin(), o.end());
        parts.insert(std::move(o));
    }
    return parts;
}

inline F2Tri random_f2(std::size_t n, std::mt19937_64& rng)
{
    F2Tri m(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            m.set(i, j, rng() & 1U);
        }
    }
    return m;
}

inline RatMatrix random_unitriangular(std::size_t d, std::mt19937_64& rng, long lo = -5, long hi = 5)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    RatMatrix u(d);
    for (std::size_t i = 0; i < d; ++i) {
        u(i, i) = Rational(1);
        for (std::size_t j = i + 1; j < d; ++j) {
            u(i, j) = Rational(dist(rng));
        }
    }
    return u;
}

inline RatMatrix random_matrix(std::size_t d, std::mt19937_64& rng, long lo = -3, long hi = 3)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    RatMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            m(i, j) = Rational(dist(rng));
        }
    }
    return m;
}

} // namespace oracle

#endif // FLAGSWAP_TESTS_ORACLES_HPP
