#ifndef FLAGSWAP_F2TRI_HPP
#define FLAGSWAP_F2TRI_HPP

#include <flagswap/error.hpp>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace flagswap {

/*
 * Upper-triangular n x n matrix over F_2, bit packed.
 *
 * Entries are numbered row-major over the upper triangle:
 *     (1,1), (1,2), ..., (1,n), (2,2), ..., (2,n), ..., (n,n)
 * position(i, j) = (i-1)n - (i-1)(i-2)/2 + (j-i). Position p lives in word
 * p / 64, bit p % 64. The total order used for canonical representatives is
 * lexicographic over positions (position 0 most significant), which agrees
 * with numeric order of code() for n <= 10.
 *
 * Text form: rows separated by '/', row i holding its n-i+1 entries, e.g.
 * "000/00/0" for the n = 3 zero matrix.
 */
class F2Tri {
public:
    F2Tri() = default;

    explicit F2Tri(std::size_t n)
        : n_(n), words_((entry_count(n) + 63) / 64)
    {}

    static constexpr std::size_t entry_count(std::size_t n) { return n * (n + 1) / 2; }

    static constexpr std::size_t position(std::size_t n, std::size_t i, std::size_t j)
    {
        return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i);
    }

    static F2Tri ones(std::size_t n)
    {
        F2Tri m(n);
        for (std::size_t p = 0; p < m.size(); ++p) {
            m.set_position(p, true);
        }
        return m;
    }

    static F2Tri parse(std::string_view text)
    {
        std::vector<std::string_view> rows;
        std::size_t start = 0;
        while (true) {
            const auto slash = text.find('/', start);
            rows.push_back(text.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start));
            if (slash == std::string_view::npos) {
                break;
            }
            start = slash + 1;
        }
        const std::size_t n = rows.size();
        F2Tri m(n);
        for (std::size_t i = 1; i <= n; ++i) {
            const auto row = rows[i - 1];
            if (row.size() != n - i + 1) {
                throw Error(ErrorKind::Parse, "F2 matrix row " + std::to_string(i) + " of '" + std::string(text) +
                                                  "' must have " + std::to_string(n - i + 1) + " entries");
            }
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (row[k] != '0' && row[k] != '1') {
                    throw Error(ErrorKind::Parse, "F2 matrix entries must be 0 or 1 in '" + std::string(text) + "'");
                }
                m.set(i, i + k, row[k] == '1');
            }
        }
        return m;
    }

    /// Packs into an integer with position 0 as the most significant bit (n <= 10).
    std::uint64_t code() const
    {
        require_code_width(n_);
        const std::size_t total = size();
        std::uint64_t c = 0;
        for (std::size_t p = 0; p < total; ++p) {
            if (get_position(p)) {
                c |= std::uint64_t{1} << (total - 1 - p);
            }
        }
        return c;
    }

    static F2Tri from_code(std::size_t n, std::uint64_t c)
    {
        require_code_width(n);
        F2Tri m(n);
        const std::size_t total = m.size();
        for (std::size_t p = 0; p < total; ++p) {
            if ((c >> (total - 1 - p)) & 1U) {
                m.set_position(p, true);
            }
        }
        return m;
    }

    static void require_code_width(std::size_t n)
    {
        if (entry_count(n) > 64) {
            throw Error(ErrorKind::ResourceBound, "packed code supports n <= 10 only");
        }
    }

    std::size_t n() const { return n_; }
    std::size_t size() const { return entry_count(n_); }

    bool get(std::size_t i, std::size_t j) const
    {
        check(i, j);
        return get_position(position(n_, i, j));
    }

    void set(std::size_t i, std::size_t j, bool value)
    {
        check(i, j);
        set_position(position(n_, i, j), value);
    }

    void flip(std::size_t i, std::size_t j)
    {
        check(i, j);
        const std::size_t p = position(n_, i, j);
        words_[p / 64] ^= std::uint64_t{1} << (p % 64);
    }

    bool get_position(std::size_t p) const { return (words_[p / 64] >> (p % 64)) & 1U; }

    void set_position(std::size_t p, bool value)
    {
        const std::uint64_t bit = std::uint64_t{1} << (p % 64);
        if (value) {
            words_[p / 64] |= bit;
        } else {
            words_[p / 64] &= ~bit;
        }
    }

    std::size_t popcount() const
    {
        std::size_t c = 0;
        for (auto w : words_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    bool is_zero() const { return popcount() == 0; }

    F2Tri& operator^=(const F2Tri& o)
    {
        require_same(o);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] ^= o.words_[w];
        }
        return *this;
    }

    friend F2Tri operator^(F2Tri a, const F2Tri& b) { return a ^= b; }
    friend F2Tri operator+(F2Tri a, const F2Tri& b) { return a ^= b; }

    /// Standard pairing sum_{i<=j} a_ij b_ij over F_2.
    friend bool pairing(const F2Tri& a, const F2Tri& b)
    {
        a.require_same(b);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < a.words_.size(); ++w) {
            acc ^= a.words_[w] & b.words_[w];
        }
        return std::popcount(acc) & 1;
    }

    friend bool operator==(const F2Tri&, const F2Tri&) = default;

    /// Lexicographic over positions; the first differing position decides, 0 < 1.
    friend bool operator<(const F2Tri& a, const F2Tri& b)
    {
        if (a.n_ != b.n_) {
            return a.n_ < b.n_;
        }
        for (std::size_t p = 0; p < a.size(); ++p) {
            const bool x = a.get_position(p);
            const bool y = b.get_position(p);
            if (x != y) {
                return !x;
            }
        }
        return false;
    }

    friend std::ostream& operator<<(std::ostream& os, const F2Tri& m) { return os << m.str(); }

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 1; i <= n_; ++i) {
            if (i > 1) {
                s += '/';
            }
            for (std::size_t j = i; j <= n_; ++j) {
                s += get(i, j) ? '1' : '0';
            }
        }
        return s;
    }

private:
    void check(std::size_t i, std::size_t j) const
    {
        if (i < 1 || i > j || j > n_) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside the upper triangle");
        }
    }

    void require_same(const F2Tri& o) const
    {
        if (n_ != o.n_) {
            throw Error(ErrorKind::DimensionMismatch, "F2 matrices of different sizes");
        }
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Height (h_1, ..., h_n) of the slice through a matrix; bit k-1 holds h_k.
class HeightVector {
public:
    HeightVector() = default;
    HeightVector(std::size_t n, std::uint64_t bits)
        : n_(n), bits_(bits)
    {
        if (n > 64) {
            throw Error(ErrorKind::ResourceBound, "height vectors support n <= 64");
        }
        if (n < 64) {
            bits_ &= (std::uint64_t{1} << n) - 1;
        }
    }

    static HeightVector parse(std::string_view text)
    {
        std::uint64_t b = 0;
        for (std::size_t k = 0; k < text.size(); ++k) {
            if (text[k] != '0' && text[k] != '1') {
                throw Error(ErrorKind::Parse, "height vector must be a 0/1 string");
            }
            if (text[k] == '1') {
                b |= std::uint64_t{1} << k;
            }
        }
        return HeightVector(text.size(), b);
    }

    std::size_t n() const { return n_; }
    std::uint64_t bits() const { return bits_; }

    /// 1-based h_k.
    bool operator[](std::size_t k) const { return (bits_ >> (k - 1)) & 1U; }

    bool is_symmetric() const
    {
        for (std::size_t k = 1; k <= n_; ++k) {
            if ((*this)[k] != (*this)[n_ + 1 - k]) {
                return false;
            }
        }
        return true;
    }

    /// h_k = h_{n+1-k} for even k and h_k = h_{n+1-k} + 1 for odd k.
    bool is_special() const
    {
        for (std::size_t k = 1; k <= n_; ++k) {
            const bool want = (*this)[n_ + 1 - k] ^ (k % 2 == 1);
            if ((*this)[k] != want) {
                return false;
            }
        }
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, const HeightVector& h) { return os << h.str(); }

    std::string str() const
    {
        std::string s;
        for (std::size_t k = 1; k <= n_; ++k) {
            s += (*this)[k] ? '1' : '0';
        }
        return s;
    }

    friend bool operator==(const HeightVector&, const HeightVector&) = default;

private:
    std::size_t n_ = 0;
    std::uint64_t bits_ = 0;
};

/// E_k: ones on the (k-1)-th superdiagonal.
inline F2Tri diagonal_band(std::size_t n, std::size_t k)
{
    F2Tri m(n);
    for (std::size_t r = 1; r + k - 1 <= n; ++r) {
        m.set(r, r + k - 1, true);
    }
    return m;
}

/// R_k: ones at (r, s) with r <= k <= s.
inline F2Tri height_functional(std::size_t n, std::size_t k)
{
    F2Tri m(n);
    for (std::size_t r = 1; r <= k; ++r) {
        for (std::size_t s = k; s <= n; ++s) {
            m.set(r, s, true);
        }
    }
    return m;
}

inline HeightVector height(const F2Tri& m)
{
    const std::size_t n = m.n();
    std::uint64_t bits = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        bool h = false;
        for (std::size_t r = 1; r <= k; ++r) {
            for (std::size_t s = k; s <= n; ++s) {
                h ^= m.get(r, s);
            }
        }
        if (h) {
            bits |= std::uint64_t{1} << (k - 1);
        }
    }
    return HeightVector(n, bits);
}

/// Cells touched by generator g_ij: the 2x2 block at rows i,i+1 and columns j,j+1 (upper part).
inline F2Tri generator_mask(std::size_t n, std::size_t i, std::size_t j)
{
    if (i < 1 || i > j || j + 1 > n) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "generator g_" + std::to_string(i) + "," + std::to_string(j) + " needs 1 <= i <= j <= n-1");
    }
    F2Tri mask(n);
    mask.set(i, j, true);
    mask.set(i, j + 1, true);
    if (i < j) {
        mask.set(i + 1, j, true);
    }
    mask.set(i + 1, j + 1, true);
    return mask;
}

/// g_ij: add the trace M_ij + M_{i+1,j+1} to every entry of the block.
inline F2Tri apply_generator(const F2Tri& m, std::size_t i, std::size_t j)
{
    F2Tri mask = generator_mask(m.n(), i, j);
    if (m.get(i, j) != m.get(i + 1, j + 1)) {
        return m ^ mask;
    }
    return m;
}

/// iota(M)_ij = M_{n+1-j, n+1-i} + 1.
inline F2Tri iota_f2(const F2Tri& m)
{
    const std::size_t n = m.n();
    F2Tri out(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            out.set(i, j, !m.get(n + 1 - j, n + 1 - i));
        }
    }
    return out;
}

/// Fixed by every generator iff constant along each diagonal.
inline bool is_singleton(const F2Tri& m)
{
    const std::size_t n = m.n();
    for (std::size_t i = 1; i + 1 <= n; ++i) {
        for (std::size_t j = i; j + 1 <= n; ++j) {
            if (m.get(i, j) != m.get(i + 1, j + 1)) {
                return false;
            }
        }
    }
    return true;
}

/// Membership in I_n = span{E_1, ..., E_n}; the same diagonal-constancy test.
inline bool in_translation_span(const F2Tri& m) { return is_singleton(m); }

inline F2Tri translate(const F2Tri& m, const F2Tri& shift)
{
    if (!in_translation_span(shift)) {
        throw Error(ErrorKind::NotInIn, "translation " + shift.str() + " is not in span{E_1..E_n}");
    }
    return m ^ shift;
}

} // namespace flagswap

#endif // FLAGSWAP_F2TRI_HPP
