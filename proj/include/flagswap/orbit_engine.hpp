#ifndef FLAGSWAP_ORBIT_ENGINE_HPP
#define FLAGSWAP_ORBIT_ENGINE_HPP

#include <flagswap/error.hpp>
#include <flagswap/f2tri.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace flagswap {

struct OrbitReport {
    F2Tri representative;        // minimal member under the F2Tri order
    std::uint64_t size = 0;
    HeightVector height;
    F2Tri iota_representative;   // minimal member of iota(orbit)
    bool invariant_under_iota = false;

    bool singleton() const { return size == 1; }
};

struct EngineConfig {
    /// Largest state space (slice size, or 2^{n(n+1)/2} for whole-space runs) we agree to allocate.
    std::uint64_t max_states = std::uint64_t{1} << 30;
    unsigned threads = 1;
};

namespace detail {

/*
 * A slice M0 + D_n^perp of T^n, presented in affine coordinates.
 *
 * Matrices are handled as packed codes (see F2Tri::code); "code bit" b is
 * position N-1-b. The height functionals R_1..R_n are row reduced; their
 * non-pivot code bits become the coordinates of the slice, so a member is
 * determined by its entries at the free bits and the canonical member M0 is
 * zero there. Generators act on coordinates as
 *     c -> c ^ ((offset ^ parity(c & probe)) ? flip : 0),
 * since each generator mask lies in D_n^perp.
 */
class SliceSpace {
public:
    struct Generator {
        std::uint64_t probe = 0;
        bool offset = false;
        std::uint64_t flip = 0;
    };

    static constexpr std::size_t max_dim = 40;

    SliceSpace(std::size_t n, const HeightVector& h)
        : n_(n), total_(F2Tri::entry_count(n)), height_(h)
    {
        F2Tri::require_code_width(n);
        if (h.n() != n) {
            throw Error(ErrorKind::DimensionMismatch, "height vector length differs from n");
        }
        for (std::size_t k = 1; k <= n; ++k) {
            functionals_.push_back(height_functional(n, k).code());
        }
        reduce();
        build_tables();
        build_generators();
    }

    std::size_t n() const { return n_; }
    std::size_t dim() const { return free_bits_.size(); }
    std::uint64_t states() const { return std::uint64_t{1} << dim(); }
    const HeightVector& height() const { return height_; }
    const std::vector<Generator>& generators() const { return generators_; }

    std::uint64_t to_code(std::uint64_t c) const { return base_ ^ lookup(code_tables_, c); }
    std::uint64_t to_iota_code(std::uint64_t c) const { return iota_base_ ^ lookup(iota_tables_, c); }

    bool contains(std::uint64_t code) const { return height_bits(code) == height_.bits(); }

    std::uint64_t coordinate(std::uint64_t code) const
    {
        if (!contains(code)) {
            throw Error(ErrorKind::DimensionMismatch, "matrix is not in this slice");
        }
        std::uint64_t c = 0;
        for (std::size_t t = 0; t < free_bits_.size(); ++t) {
            c |= ((code >> free_bits_[t]) & 1U) << t;
        }
        return c;
    }

    std::uint64_t height_bits(std::uint64_t code) const
    {
        std::uint64_t h = 0;
        for (std::size_t k = 0; k < n_; ++k) {
            h |= static_cast<std::uint64_t>(std::popcount(code & functionals_[k]) & 1) << k;
        }
        return h;
    }

    std::uint64_t apply(std::uint64_t c, const Generator& g) const
    {
        const bool hit = g.offset ^ static_cast<bool>(std::popcount(c & g.probe) & 1);
        return hit ? c ^ g.flip : c;
    }

private:
    using Tables = std::vector<std::array<std::uint64_t, 256>>;

    static std::uint64_t lookup(const Tables& tables, std::uint64_t c)
    {
        std::uint64_t out = 0;
        for (std::size_t b = 0; b < tables.size(); ++b) {
            out ^= tables[b][(c >> (8 * b)) & 0xFF];
        }
        return out;
    }

    void reduce()
    {
        std::vector<std::uint64_t> rows = functionals_;
        std::vector<char> rhs(n_);
        for (std::size_t k = 0; k < n_; ++k) {
            rhs[k] = height_[k + 1];
        }
        std::vector<int> pivot_of_row;
        std::uint64_t pivot_mask = 0;
        std::size_t rank = 0;
        for (std::size_t b = total_; b-- > 0;) {
            std::size_t p = rank;
            while (p < rows.size() && !((rows[p] >> b) & 1U)) {
                ++p;
            }
            if (p == rows.size()) {
                continue;
            }
            std::swap(rows[rank], rows[p]);
            std::swap(rhs[rank], rhs[p]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r != rank && ((rows[r] >> b) & 1U)) {
                    rows[r] ^= rows[rank];
                    rhs[r] ^= rhs[rank];
                }
            }
            pivot_of_row.push_back(static_cast<int>(b));
            pivot_mask |= std::uint64_t{1} << b;
            ++rank;
        }
        if (rank != n_) {
            throw Error(ErrorKind::DimensionMismatch, "height functionals are not independent");
        }
        for (std::size_t b = 0; b < total_; ++b) {
            if (!((pivot_mask >> b) & 1U)) {
                free_bits_.push_back(static_cast<unsigned>(b));
            }
        }
        if (free_bits_.size() > max_dim) {
            throw Error(ErrorKind::ResourceBound, "slice dimension exceeds engine limit");
        }
        base_ = 0;
        for (std::size_t r = 0; r < rank; ++r) {
            if (rhs[r]) {
                base_ |= std::uint64_t{1} << pivot_of_row[r];
            }
        }
        basis_.clear();
        for (unsigned f : free_bits_) {
            std::uint64_t v = std::uint64_t{1} << f;
            for (std::size_t r = 0; r < rank; ++r) {
                if ((rows[r] >> f) & 1U) {
                    v |= std::uint64_t{1} << pivot_of_row[r];
                }
            }
            basis_.push_back(v);
        }
    }

    std::uint64_t reflect(std::uint64_t code) const
    {
        std::uint64_t out = 0;
        for (std::size_t i = 1; i <= n_; ++i) {
            for (std::size_t j = i; j <= n_; ++j) {
                if ((code >> bit_of(i, j)) & 1U) {
                    out |= std::uint64_t{1} << bit_of(n_ + 1 - j, n_ + 1 - i);
                }
            }
        }
        return out;
    }

    unsigned bit_of(std::size_t i, std::size_t j) const
    {
        return static_cast<unsigned>(total_ - 1 - F2Tri::position(n_, i, j));
    }

    void build_tables()
    {
        const std::uint64_t all = total_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << total_) - 1;
        iota_base_ = reflect(base_) ^ all;
        const std::size_t nbytes = (dim() + 7) / 8;
        code_tables_.assign(nbytes, {});
        iota_tables_.assign(nbytes, {});
        for (std::size_t b = 0; b < nbytes; ++b) {
            for (unsigned v = 0; v < 256; ++v) {
                std::uint64_t acc = 0;
                for (unsigned t = 0; t < 8; ++t) {
                    const std::size_t idx = 8 * b + t;
                    if (((v >> t) & 1U) && idx < dim()) {
                        acc ^= basis_[idx];
                    }
                }
                code_tables_[b][v] = acc;
                iota_tables_[b][v] = reflect(acc);
            }
        }
    }

    void build_generators()
    {
        for (std::size_t i = 1; i + 1 <= n_; ++i) {
            for (std::size_t j = i; j + 1 <= n_; ++j) {
                const unsigned a = bit_of(i, j);
                const unsigned b = bit_of(i + 1, j + 1);
                std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b) |
                                     (std::uint64_t{1} << bit_of(i, j + 1));
                if (i < j) {
                    mask |= std::uint64_t{1} << bit_of(i + 1, j);
                }
                Generator g;
                g.offset = (((base_ >> a) ^ (base_ >> b)) & 1U) != 0;
                for (std::size_t t = 0; t < dim(); ++t) {
                    if (((basis_[t] >> a) ^ (basis_[t] >> b)) & 1U) {
                        g.probe |= std::uint64_t{1} << t;
                    }
                    if ((mask >> free_bits_[t]) & 1U) {
                        g.flip |= std::uint64_t{1} << t;
                    }
                }
                if (lookup(code_tables_, g.flip) != mask) {
                    throw Error(ErrorKind::DimensionMismatch, "generator mask escapes the slice");
                }
                generators_.push_back(g);
            }
        }
    }

    std::size_t n_;
    std::size_t total_;
    HeightVector height_;
    std::vector<std::uint64_t> functionals_;
    std::vector<unsigned> free_bits_;
    std::vector<std::uint64_t> basis_;
    std::uint64_t base_ = 0;
    std::uint64_t iota_base_ = 0;
    Tables code_tables_;
    Tables iota_tables_;
    std::vector<Generator> generators_;
};

/// Plain bitmap over 2^dim coordinates.
class Bitmap {
public:
    explicit Bitmap(std::uint64_t bits)
        : bits_(bits), words_(std::max<std::uint64_t>(1, (bits + 63) / 64))
    {}

    bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::uint64_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::uint64_t bits() const { return bits_; }
    std::size_t word_count() const { return words_.size(); }
    std::uint64_t& word(std::size_t w) { return words_[w]; }
    std::uint64_t word(std::size_t w) const { return words_[w]; }

    std::uint64_t valid_mask(std::size_t w) const
    {
        const std::uint64_t lo = static_cast<std::uint64_t>(w) * 64;
        if (lo + 64 <= bits_) {
            return ~std::uint64_t{0};
        }
        return (std::uint64_t{1} << (bits_ - lo)) - 1;
    }

private:
    std::uint64_t bits_;
    std::vector<std::uint64_t> words_;
};

inline void require_states(std::uint64_t states, const EngineConfig& cfg, const std::string& what)
{
    if (states > cfg.max_states) {
        throw Error(ErrorKind::ResourceBound,
                    what + " needs " + std::to_string(states) + " states, bound is " + std::to_string(cfg.max_states));
    }
}

struct ClosureStats {
    std::uint64_t size = 0;
    std::uint64_t min_code = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t min_iota_code = std::numeric_limits<std::uint64_t>::max();
    bool stopped = false;
};

/*
 * Closure of `seed` under all generators inside one slice.
 *
 * Newly reached coordinates are marked in `visited` and queued in `open`
 * (a second bitmap rather than a queue, so memory stays at two bits per
 * state however wide the frontier gets). Open bits are drained in index
 * order; bits set behind the cursor trigger another pass starting at the
 * lowest such word. `stop(c)` may end the search early.
 */
template <class StopFn>
ClosureStats closure(const SliceSpace& space, Bitmap& visited, Bitmap& open, std::uint64_t seed, StopFn&& stop)
{
    ClosureStats st;
    const auto& gens = space.generators();
    auto visit = [&](std::uint64_t c) {
        ++st.size;
        st.min_code = std::min(st.min_code, space.to_code(c));
        st.min_iota_code = std::min(st.min_iota_code, space.to_iota_code(c));
        return stop(c);
    };

    visited.set(seed);
    open.set(seed);
    if (visit(seed)) {
        open.reset(seed);
        st.stopped = true;
        return st;
    }
    std::uint64_t pending = 1;
    std::size_t cursor = static_cast<std::size_t>(seed >> 6);
    while (pending > 0) {
        std::size_t next_pass = open.word_count();
        for (std::size_t w = cursor; w < open.word_count() && pending > 0; ++w) {
            while (open.word(w) != 0) {
                const unsigned b = static_cast<unsigned>(std::countr_zero(open.word(w)));
                open.word(w) &= ~(std::uint64_t{1} << b);
                --pending;
                const std::uint64_t c = (static_cast<std::uint64_t>(w) << 6) | b;
                for (const auto& g : gens) {
                    const std::uint64_t nc = space.apply(c, g);
                    if (visited.test(nc)) {
                        continue;
                    }
                    visited.set(nc);
                    if (visit(nc)) {
                        st.stopped = true;
                        // Leave `open` clean for the caller.
                        for (std::size_t x = 0; x < open.word_count(); ++x) {
                            open.word(x) = 0;
                        }
                        return st;
                    }
                    open.set(nc);
                    ++pending;
                    const std::size_t nw = static_cast<std::size_t>(nc >> 6);
                    if (nw < w) {
                        next_pass = std::min(next_pass, nw);
                    }
                }
            }
        }
        cursor = next_pass;
    }
    return st;
}

inline OrbitReport make_report(const SliceSpace& space, const ClosureStats& st)
{
    OrbitReport r;
    r.representative = F2Tri::from_code(space.n(), st.min_code);
    r.iota_representative = F2Tri::from_code(space.n(), st.min_iota_code);
    r.size = st.size;
    r.height = space.height();
    r.invariant_under_iota = st.min_code == st.min_iota_code;
    return r;
}

inline void sort_reports(std::vector<OrbitReport>& reports)
{
    std::sort(reports.begin(), reports.end(),
              [](const OrbitReport& a, const OrbitReport& b) { return a.representative < b.representative; });
}

} // namespace detail

/// All orbits inside the slice at height h, sorted by representative.
inline std::vector<OrbitReport> orbits_in_slice(const HeightVector& h, const EngineConfig& cfg = {})
{
    const detail::SliceSpace space(h.n(), h);
    detail::require_states(space.states(), cfg, "slice " + h.str());
    detail::Bitmap visited(space.states());
    detail::Bitmap open(space.states());
    std::vector<OrbitReport> out;
    for (std::size_t w = 0; w < visited.word_count(); ++w) {
        std::uint64_t free = ~visited.word(w) & visited.valid_mask(w);
        while (free != 0) {
            const std::uint64_t seed = (static_cast<std::uint64_t>(w) << 6) |
                                       static_cast<unsigned>(std::countr_zero(free));
            const auto st = detail::closure(space, visited, open, seed, [](std::uint64_t) { return false; });
            out.push_back(detail::make_report(space, st));
            free = ~visited.word(w) & visited.valid_mask(w);
        }
    }
    detail::sort_reports(out);
    return out;
}

/// Orbit of a single matrix, explored inside its own slice.
inline OrbitReport orbit_of(const F2Tri& m, const EngineConfig& cfg = {})
{
    const HeightVector h = height(m);
    const detail::SliceSpace space(m.n(), h);
    detail::require_states(space.states(), cfg, "orbit of " + m.str());
    detail::Bitmap visited(space.states());
    detail::Bitmap open(space.states());
    const auto st = detail::closure(space, visited, open, space.coordinate(m.code()),
                                    [](std::uint64_t) { return false; });
    return detail::make_report(space, st);
}

/// Members of the orbit of `m`, sorted; for small orbits (tables, tests).
inline std::vector<F2Tri> orbit_members(const F2Tri& m, const EngineConfig& cfg = {})
{
    const HeightVector h = height(m);
    const detail::SliceSpace space(m.n(), h);
    detail::require_states(space.states(), cfg, "orbit of " + m.str());
    detail::Bitmap visited(space.states());
    detail::Bitmap open(space.states());
    detail::closure(space, visited, open, space.coordinate(m.code()), [](std::uint64_t) { return false; });
    std::vector<F2Tri> out;
    for (std::uint64_t c = 0; c < space.states(); ++c) {
        if (visited.test(c)) {
            out.push_back(F2Tri::from_code(m.n(), space.to_code(c)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Whether `target` lies in the orbit of `source` (early exit once reached).
inline bool same_orbit(const F2Tri& source, const F2Tri& target, const EngineConfig& cfg = {})
{
    if (source.n() != target.n()) {
        throw Error(ErrorKind::DimensionMismatch, "F2 matrices of different sizes");
    }
    const HeightVector h = height(source);
    if (height(target) != h) {
        return false;
    }
    const detail::SliceSpace space(source.n(), h);
    detail::require_states(space.states(), cfg, "orbit of " + source.str());
    detail::Bitmap visited(space.states());
    detail::Bitmap open(space.states());
    const std::uint64_t goal = space.coordinate(target.code());
    const auto st = detail::closure(space, visited, open, space.coordinate(source.code()),
                                    [goal](std::uint64_t c) { return c == goal; });
    return st.stopped;
}

/// Run `slice_fn(h)` for every height in `heights`, sharded over cfg.threads workers.
template <class Result, class SliceFn>
std::vector<Result> for_each_slice(const std::vector<HeightVector>& heights, const EngineConfig& cfg, SliceFn&& slice_fn)
{
    std::vector<Result> results(heights.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(heights.size());
    auto worker = [&] {
        for (std::size_t idx = next++; idx < heights.size(); idx = next++) {
            try {
                results[idx] = slice_fn(heights[idx]);
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
    };
    const unsigned nthreads = std::max(1U, std::min<unsigned>(cfg.threads, static_cast<unsigned>(heights.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return results;
}

/// Every orbit of T^n, via the 2^n slices; deterministic order by representative.
inline std::vector<OrbitReport> all_orbits(std::size_t n, const EngineConfig& cfg = {})
{
    F2Tri::require_code_width(n);
    const std::size_t total = F2Tri::entry_count(n);
    if (total >= 63 || (std::uint64_t{1} << total) > cfg.max_states) {
        throw Error(ErrorKind::ResourceBound,
                    "whole-space enumeration of T^" + std::to_string(n) + " exceeds the state bound");
    }
    std::vector<HeightVector> heights;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        heights.emplace_back(n, b);
    }
    auto per_slice = for_each_slice<std::vector<OrbitReport>>(
        heights, cfg, [&](const HeightVector& h) { return orbits_in_slice(h, cfg); });
    std::vector<OrbitReport> out;
    for (auto& v : per_slice) {
        out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    }
    detail::sort_reports(out);
    return out;
}

} // namespace flagswap

#endif // FLAGSWAP_ORBIT_ENGINE_HPP
