#ifndef FLAGSWAP_FLAG_HPP
#define FLAGSWAP_FLAG_HPP

#include <flagswap/error.hpp>
#include <flagswap/rat_matrix.hpp>

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace flagswap {

/*
 * Complete flag in Q^d. Level k is the span of the first k columns of the
 * (invertible) basis matrix.
 */
class Flag {
public:
    explicit Flag(RatMatrix basis)
        : basis_(std::move(basis))
    {
        if (det(basis_).is_zero()) {
            throw Error(ErrorKind::SingularMatrix, "flag basis is not invertible");
        }
    }

    std::size_t dim() const { return basis_.dim(); }
    const RatMatrix& basis() const { return basis_; }

    /// Reduced row echelon form of the first k basis columns (as rows);
    /// two flags agree at level k iff these coincide.
    detail::RatRows level_canonical(std::size_t k) const
    {
        detail::RatRows rows;
        rows.reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
            rows.push_back(basis_.column(j));
        }
        detail::rref(rows);
        return rows;
    }

    friend bool operator==(const Flag& a, const Flag& b)
    {
        if (a.dim() != b.dim()) {
            return false;
        }
        for (std::size_t k = 1; k < a.dim(); ++k) {
            if (a.level_canonical(k) != b.level_canonical(k)) {
                return false;
            }
        }
        return true;
    }

private:
    RatMatrix basis_;
};

struct StandardFlags {
    Flag descending; // sigma_-: level k = span{e_1, ..., e_k}
    Flag ascending;  // sigma_+: level k = span{e_d, ..., e_{d-k+1}}
};

inline StandardFlags standard_flags(std::size_t d)
{
    if (d < 2) {
        throw Error(ErrorKind::DimensionMismatch, "standard flags need d >= 2");
    }
    RatMatrix reversed(d);
    for (std::size_t j = 0; j < d; ++j) {
        reversed(d - 1 - j, j) = 1;
    }
    return {Flag(RatMatrix::identity(d)), Flag(std::move(reversed))};
}

/// Rank of [first k columns of f | first d-k columns of g] is d for one level k.
inline bool levels_transverse(const Flag& f, const Flag& g, std::size_t k)
{
    const std::size_t d = f.dim();
    RatMatrix m(d);
    for (std::size_t j = 0; j < k; ++j) {
        m.set_column(j, f.basis().column(j));
    }
    for (std::size_t j = 0; j < d - k; ++j) {
        m.set_column(k + j, g.basis().column(j));
    }
    return !det(m).is_zero();
}

inline bool is_antipodal(const Flag& f, const Flag& g)
{
    if (f.dim() != g.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "flags of different dimensions");
    }
    for (std::size_t k = 1; k < f.dim(); ++k) {
        if (!levels_transverse(f, g, k)) {
            return false;
        }
    }
    return true;
}

inline Flag act(const RatMatrix& g, const Flag& f)
{
    if (g.dim() != f.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "group element and flag of different dimensions");
    }
    if (det(g).is_zero()) {
        throw Error(ErrorKind::SingularMatrix, "acting matrix is singular");
    }
    return Flag(g * f.basis());
}

/*
 * The unique unitriangular u with u . sigma_+ = f.
 *
 * Column d-k+1 of u is the vector of level k of f whose coordinate d-k+1 is 1
 * and whose lower coordinates vanish; it exists iff the bottom k x k block of
 * the first k basis columns is invertible, i.e. iff level k of f is
 * transverse to span{e_1, ..., e_{d-k}}.
 */
inline RatMatrix big_cell_coordinates(const Flag& f)
{
    const std::size_t d = f.dim();
    RatMatrix u = RatMatrix::identity(d);
    for (std::size_t k = 1; k <= d; ++k) {
        const std::size_t col = d - k; // 0-based column of u being solved
        // Augmented system: rows col..d-1 of the first k basis vectors, rhs e_1.
        detail::RatRows sys(k, std::vector<Rational>(k + 1));
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) {
                sys[r][c] = f.basis()(col + r, c);
            }
            sys[r][k] = r == 0 ? 1 : 0;
        }
        if (detail::rref(sys) < k || sys[k - 1][k - 1] != Rational(1)) {
            throw Error(ErrorKind::NotInBigCell,
                        "flag is not antipodal to sigma_- (level " + std::to_string(k) +
                            " fails invertibility)");
        }
        for (std::size_t i = 0; i < d; ++i) {
            Rational v;
            for (std::size_t c = 0; c < k; ++c) {
                v += sys[c][k] * f.basis()(i, c);
            }
            u(i, col) = v;
        }
    }
    return u;
}

/// Levels k with p_k(u_F) = 0, i.e. where F fails to be transverse to sigma_+.
inline std::set<std::size_t> non_transverse_indices(const Flag& f)
{
    const RatMatrix u = big_cell_coordinates(f);
    const auto p = corner_minors(u);
    std::set<std::size_t> out;
    for (std::size_t k = 1; k <= p.size(); ++k) {
        if (p[k - 1].is_zero()) {
            out.insert(k);
        }
    }
    return out;
}

} // namespace flagswap

#endif // FLAGSWAP_FLAG_HPP
