#ifndef FLAGSWAP_FACTORIZATION_HPP
#define FLAGSWAP_FACTORIZATION_HPP

#include <flagswap/error.hpp>
#include <flagswap/f2tri.hpp>
#include <flagswap/rat_matrix.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace flagswap {

/*
 * Parameters t_{ij} of the factorization of a generic u in U_{n+1} along the
 * reduced word
 *
 *     w0 = (s_1 s_2 ... s_n)(s_1 ... s_{n-1}) ... (s_1 s_2)(s_1).
 *
 * t_{ij} is the coefficient of E_{s_i} at its j-th occurrence counted from
 * the right, so 1 <= i <= n and 1 <= j <= n+1-i. Index <-> factor table:
 *
 *     block r (1-based, left to right) = s_1 ... s_{n+1-r}
 *     factor s_i in block r carries t_{i, n+2-i-r}
 *
 * e.g. n = 2:  u = (I + t12 E_s1)(I + t21 E_s2)(I + t11 E_s1).
 */
class FactorParams {
public:
    /// All parameters initialised to 1.
    explicit FactorParams(std::size_t n)
        : n_(n), rows_(n)
    {
        if (n == 0) {
            throw Error(ErrorKind::DimensionMismatch, "factor parameters need n >= 1");
        }
        for (std::size_t i = 1; i <= n; ++i) {
            rows_[i - 1].assign(n + 1 - i, Rational(1));
        }
    }

    std::size_t n() const { return n_; }
    std::size_t d() const { return n_ + 1; }
    std::size_t count() const { return n_ * (n_ + 1) / 2; }

    const Rational& t(std::size_t i, std::size_t j) const
    {
        check(i, j);
        return rows_[i - 1][j - 1];
    }

    void set(std::size_t i, std::size_t j, Rational value)
    {
        check(i, j);
        if (value.is_zero()) {
            throw Error(ErrorKind::NonGeneric,
                        "factor parameter t_" + std::to_string(i) + "," + std::to_string(j) + " must be nonzero");
        }
        rows_[i - 1][j - 1] = std::move(value);
    }

    friend bool operator==(const FactorParams&, const FactorParams&) = default;

private:
    void check(std::size_t i, std::size_t j) const
    {
        if (i < 1 || i > n_ || j < 1 || j > n_ + 1 - i) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "factor parameter index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
        }
    }

    std::size_t n_;
    std::vector<std::vector<Rational>> rows_;
};

/// Occurrence index j of s_i inside block r (all 1-based).
constexpr std::size_t occurrence_index(std::size_t n, std::size_t i, std::size_t block)
{
    return n + 2 - i - block;
}

inline RatMatrix compose(const FactorParams& params)
{
    const std::size_t n = params.n();
    const std::size_t d = n + 1;
    RatMatrix u = RatMatrix::identity(d);
    for (std::size_t block = 1; block <= n; ++block) {
        for (std::size_t i = 1; i <= n + 1 - block; ++i) {
            // Right multiplication by I + t E_{i,i+1} adds t * column i to column i+1.
            const Rational& t = params.t(i, occurrence_index(n, i, block));
            for (std::size_t r = 0; r < d; ++r) {
                if (!u(r, i - 1).is_zero()) {
                    u(r, i) += t * u(r, i - 1);
                }
            }
        }
    }
    return u;
}

/*
 * Inverse of compose by recursive column peeling.
 *
 * Every block after the first fixes e_d, so the last column of u equals the
 * last column of the first block, whose entries are suffix products of that
 * block's parameters: v_{i,m} = a_i * a_{i+1} * ... * a_{m-1}. The parameters
 * are therefore the successive ratios v_{i,m} / v_{i+1,m}; the block is then
 * stripped by left multiplication with its inverse and the recursion
 * continues on the leading block. Returns nullopt when some peeled entry
 * vanishes.
 */
inline std::optional<FactorParams> factorize(const RatMatrix& u)
{
    require_unitriangular(u);
    const std::size_t d = u.dim();
    if (d < 2) {
        throw Error(ErrorKind::DimensionMismatch, "factorization needs d >= 2");
    }
    const std::size_t n = d - 1;
    FactorParams params(n);
    RatMatrix v = u;
    for (std::size_t m = d; m >= 2; --m) {
        const std::size_t block = d - m + 1;
        const std::size_t col = m - 1; // 0-based
        for (std::size_t i = 0; i + 1 < m; ++i) {
            if (v(i, col).is_zero()) {
                return std::nullopt;
            }
        }
        std::vector<Rational> a(m - 1);
        for (std::size_t i = 1; i < m; ++i) {
            a[i - 1] = v(i - 1, col) / v(i, col);
            params.set(i, occurrence_index(n, i, block), a[i - 1]);
        }
        // v <- (I - a_{m-1} E_{m-1}) ... (I - a_1 E_1) v; each factor subtracts
        // a_i * row i+1 from row i, applied for i = 1 first.
        for (std::size_t i = 1; i < m; ++i) {
            for (std::size_t c = 0; c < d; ++c) {
                if (!v(i, c).is_zero()) {
                    v(i - 1, c) -= a[i - 1] * v(i, c);
                }
            }
        }
    }
    return params;
}

/// Parameters of u^{-1}: the occurrence order of each s_i reverses and every sign flips.
inline FactorParams invert_params(const FactorParams& params)
{
    const std::size_t n = params.n();
    FactorParams out(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n + 1 - i; ++j) {
            out.set(i, j, -params.t(i, n + 2 - i - j));
        }
    }
    return out;
}

/// M_u: entry (r, c) records the sign of t_{c-r+1, r} (1 for negative).
inline F2Tri sign_matrix(const FactorParams& params)
{
    const std::size_t n = params.n();
    F2Tri m(n);
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t c = r; c <= n; ++c) {
            if (params.t(c - r + 1, r).sign() < 0) {
                m.set(r, c, true);
            }
        }
    }
    return m;
}

} // namespace flagswap

#endif // FLAGSWAP_FACTORIZATION_HPP
