#ifndef FLAGSWAP_RAT_MATRIX_HPP
#define FLAGSWAP_RAT_MATRIX_HPP

#include <flagswap/error.hpp>
#include <flagswap/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace flagswap {

/// Square matrix over Q with 0-based storage; entry(i, j) is row i, column j.
class RatMatrix {
public:
    explicit RatMatrix(std::size_t dim)
        : dim_(dim), entries_(dim * dim)
    {
        if (dim == 0) {
            throw Error(ErrorKind::DimensionMismatch, "matrix dimension must be positive");
        }
    }

    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
        : RatMatrix(rows.size())
    {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != dim_) {
                throw Error(ErrorKind::DimensionMismatch, "matrix rows must have equal length");
            }
            std::size_t j = 0;
            for (const auto& v : row) {
                (*this)(i, j++) = v;
            }
            ++i;
        }
    }

    static RatMatrix identity(std::size_t dim)
    {
        RatMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    std::size_t dim() const { return dim_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    std::vector<Rational> column(std::size_t j) const
    {
        std::vector<Rational> c(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            c[i] = (*this)(i, j);
        }
        return c;
    }

    void set_column(std::size_t j, std::span<const Rational> values)
    {
        for (std::size_t i = 0; i < dim_; ++i) {
            (*this)(i, j) = values[i];
        }
    }

    bool is_unitriangular() const
    {
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                if ((*this)(i, j) != Rational(i == j ? 1 : 0)) {
                    return false;
                }
            }
        }
        return true;
    }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
    {
        if (a.dim_ != b.dim_) {
            throw Error(ErrorKind::DimensionMismatch, "matrix product of different dimensions");
        }
        RatMatrix c(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i) {
            for (std::size_t k = 0; k < a.dim_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) {
                    continue;
                }
                for (std::size_t j = 0; j < a.dim_; ++j) {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

private:
    std::size_t dim_;
    std::vector<Rational> entries_;
};

namespace detail {

using RatRows = std::vector<std::vector<Rational>>;

/*
 * Fraction-free (Bareiss) determinant of a square integer matrix given as
 * rows. Pivoting swaps rows and tracks the sign; every division in the
 * elimination step is exact.
 */
inline Integer bareiss_det(std::vector<std::vector<Integer>> a)
{
    const std::size_t n = a.size();
    if (n == 0) {
        return 1;
    }
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Determinant of a square rational matrix given as rows.
inline Rational det_rows(const RatRows& rows)
{
    const std::size_t n = rows.size();
    // Clear denominators row by row: det(A) = det(D A) / prod(D).
    std::vector<std::vector<Integer>> ints(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square block");
        }
        Integer l = 1;
        for (const auto& v : rows[i]) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            ints[i][j] = rows[i][j].numerator() * (l / rows[i][j].denominator());
        }
        scale *= l;
    }
    return Rational(bareiss_det(std::move(ints)), scale);
}

/// Reduced row echelon form in place; returns the rank.
inline std::size_t rref(RatRows& rows)
{
    if (rows.empty()) {
        return 0;
    }
    const std::size_t ncols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        const Rational inv = Rational(1) / rows[r][c];
        for (auto& v : rows[r]) {
            v *= inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) {
                continue;
            }
            const Rational f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) {
                rows[i][j] -= f * rows[r][j];
            }
        }
        ++r;
    }
    return r;
}

inline RatRows to_rows(const RatMatrix& m)
{
    RatRows rows(m.dim(), std::vector<Rational>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            rows[i][j] = m(i, j);
        }
    }
    return rows;
}

} // namespace detail

inline Rational det(const RatMatrix& m)
{
    return detail::det_rows(detail::to_rows(m));
}

inline std::size_t rank(const RatMatrix& m)
{
    auto rows = detail::to_rows(m);
    return detail::rref(rows);
}

inline void require_unitriangular(const RatMatrix& u)
{
    if (!u.is_unitriangular()) {
        throw Error(ErrorKind::NotUnitriangular,
                    "matrix is not upper unitriangular (diagonal must be 1, below-diagonal 0)");
    }
}

/// Exact inverse of an upper unitriangular matrix by back substitution.
inline RatMatrix inverse_unitriangular(const RatMatrix& u)
{
    require_unitriangular(u);
    const std::size_t d = u.dim();
    RatMatrix inv = RatMatrix::identity(d);
    // Column j of the inverse solves u x = e_j; rows above j are filled bottom-up.
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = j; i-- > 0;) {
            Rational s;
            for (std::size_t k = i + 1; k <= j; ++k) {
                s += u(i, k) * inv(k, j);
            }
            inv(i, j) = -s;
        }
    }
    return inv;
}

/// Sub-matrix on the given (0-based) row and column index sets.
inline detail::RatRows submatrix(const RatMatrix& m, std::span<const std::size_t> rows,
                                 std::span<const std::size_t> cols)
{
    detail::RatRows out(rows.size(), std::vector<Rational>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out[i][j] = m(rows[i], cols[j]);
        }
    }
    return out;
}

/// p_k(u) for k = 1..d-1: determinant of the upper-right k x k block.
inline std::vector<Rational> corner_minors(const RatMatrix& u)
{
    require_unitriangular(u);
    const std::size_t d = u.dim();
    if (d < 2) {
        throw Error(ErrorKind::DimensionMismatch, "corner minors need dimension >= 2");
    }
    std::vector<Rational> p;
    p.reserve(d - 1);
    for (std::size_t k = 1; k < d; ++k) {
        std::vector<std::size_t> rows(k), cols(k);
        for (std::size_t i = 0; i < k; ++i) {
            rows[i] = i;
            cols[i] = d - k + i;
        }
        p.push_back(detail::det_rows(submatrix(u, rows, cols)));
    }
    return p;
}

/// Elementary unipotent I + t * E_{i,i+1} (i is 1-based, as for the simple reflection s_i).
inline RatMatrix elementary(std::size_t dim, std::size_t i, const Rational& t)
{
    RatMatrix m = RatMatrix::identity(dim);
    m(i - 1, i) = t;
    return m;
}

} // namespace flagswap

#endif // FLAGSWAP_RAT_MATRIX_HPP
