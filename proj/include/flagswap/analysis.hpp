#ifndef FLAGSWAP_ANALYSIS_HPP
#define FLAGSWAP_ANALYSIS_HPP

#include <flagswap/error.hpp>
#include <flagswap/f2tri.hpp>
#include <flagswap/factorization.hpp>
#include <flagswap/flag.hpp>
#include <flagswap/named_matrices.hpp>
#include <flagswap/orbit_engine.hpp>
#include <flagswap/rat_matrix.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace flagswap {

// ---------------------------------------------------------------------------
// Pairing of orbits under iota
// ---------------------------------------------------------------------------

struct PairingRow {
    OrbitReport orbit;
    OrbitReport partner;
    bool invariant = false;
};

struct PairingTable {
    std::size_t n = 0;
    std::vector<PairingRow> rows;
    std::size_t total = 0;
    std::size_t invariant_count = 0;
    std::size_t singleton_count = 0;
};

inline PairingTable pairing_table(std::size_t n, const EngineConfig& cfg = {})
{
    auto orbits = all_orbits(n, cfg);
    std::map<F2Tri, std::size_t> index;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        index.emplace(orbits[i].representative, i);
    }
    PairingTable table;
    table.n = n;
    table.total = orbits.size();
    for (const auto& o : orbits) {
        const auto it = index.find(o.iota_representative);
        if (it == index.end()) {
            throw Error(ErrorKind::DimensionMismatch, "iota image of " + o.representative.str() + " is not an orbit");
        }
        PairingRow row{o, orbits[it->second], o.invariant_under_iota};
        table.invariant_count += row.invariant;
        table.singleton_count += o.singleton();
        table.rows.push_back(std::move(row));
    }
    return table;
}

// ---------------------------------------------------------------------------
// Swap verdicts
// ---------------------------------------------------------------------------

enum class SwapStatus { AllSwapped, InvariantOrbits, Undecided };
enum class VerdictMethod { Enumeration, SliceRestricted, None };

inline std::string to_string(SwapStatus s)
{
    switch (s) {
    case SwapStatus::AllSwapped: return "all_swapped";
    case SwapStatus::InvariantOrbits: return "invariant_orbits";
    case SwapStatus::Undecided: return "undecided";
    }
    return "unknown";
}

inline std::string to_string(VerdictMethod m)
{
    switch (m) {
    case VerdictMethod::Enumeration: return "enumeration";
    case VerdictMethod::SliceRestricted: return "slice_restricted";
    case VerdictMethod::None: return "none";
    }
    return "unknown";
}

struct SliceCertificate {
    HeightVector height;
    std::vector<OrbitReport> orbits;
};

struct SwapVerdict {
    std::size_t d = 0;
    SwapStatus status = SwapStatus::Undecided;
    VerdictMethod method = VerdictMethod::None;
    std::vector<OrbitReport> invariant_orbits;
    std::size_t orbits_examined = 0;
    std::vector<SliceCertificate> slices; // filled for slice-restricted runs
    std::string reason;

    std::size_t count() const { return invariant_orbits.size(); }
};

/// d = 5 and the classes 2..6 mod 8; d = 5 is covered by direct computation.
inline bool swap_expected(std::size_t d)
{
    const std::size_t r = d % 8;
    return r >= 2 && r <= 6;
}

/// Height of iota(S) for the slice S at height h, computed on a member of S.
inline HeightVector iota_height(const HeightVector& h)
{
    const detail::SliceSpace space(h.n(), h);
    return height(iota_f2(F2Tri::from_code(h.n(), space.to_code(0))));
}

/// Heights whose slice is mapped to itself by iota.
inline std::vector<HeightVector> iota_invariant_heights(std::size_t n)
{
    std::vector<HeightVector> out;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        const HeightVector h(n, b);
        if (iota_height(h) == h) {
            out.push_back(h);
        }
    }
    return out;
}

/*
 * Slice-restricted decision: iota can only preserve orbits lying in slices
 * it maps to themselves, so it suffices to enumerate those slices and test
 * each orbit found there.
 */
inline SwapVerdict verify_by_slices(std::size_t d, const EngineConfig& cfg)
{
    const std::size_t n = d - 1;
    SwapVerdict v;
    v.d = d;
    v.method = VerdictMethod::SliceRestricted;
    const auto heights = iota_invariant_heights(n);
    auto per_slice = for_each_slice<std::vector<OrbitReport>>(
        heights, cfg, [&](const HeightVector& h) { return orbits_in_slice(h, cfg); });
    for (std::size_t s = 0; s < heights.size(); ++s) {
        for (const auto& o : per_slice[s]) {
            ++v.orbits_examined;
            if (o.invariant_under_iota) {
                v.invariant_orbits.push_back(o);
            }
        }
        v.slices.push_back({heights[s], std::move(per_slice[s])});
    }
    v.status = v.invariant_orbits.empty() ? SwapStatus::AllSwapped : SwapStatus::InvariantOrbits;
    return v;
}

/// The d = 8 case: the 16 special slices of T^7.
inline SwapVerdict decide_d8(const EngineConfig& cfg = {})
{
    return verify_by_slices(8, cfg);
}

inline SwapVerdict verify_swaps(std::size_t d, const EngineConfig& cfg = {})
{
    if (d < 2) {
        throw Error(ErrorKind::DimensionMismatch, "verify_swaps needs d >= 2");
    }
    SwapVerdict v;
    v.d = d;
    try {
        if (d <= 7) {
            v.method = VerdictMethod::Enumeration;
            const auto orbits = all_orbits(d - 1, cfg);
            v.orbits_examined = orbits.size();
            for (const auto& o : orbits) {
                if (o.invariant_under_iota) {
                    v.invariant_orbits.push_back(o);
                }
            }
            v.status = v.invariant_orbits.empty() ? SwapStatus::AllSwapped : SwapStatus::InvariantOrbits;
            return v;
        }
        if (d == 8) {
            return decide_d8(cfg);
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ResourceBound) {
            throw;
        }
        v.status = SwapStatus::Undecided;
        v.reason = e.what();
        return v;
    }
    v.status = SwapStatus::Undecided;
    v.method = VerdictMethod::None;
    v.reason = "d = " + std::to_string(d) + " is beyond exhaustive reach (only d <= 8 is decided)";
    return v;
}

// ---------------------------------------------------------------------------
// Component classification
// ---------------------------------------------------------------------------

struct Classification {
    FactorParams params;
    F2Tri sign;
    OrbitReport orbit;
};

inline Classification classify_detailed(const RatMatrix& u, const EngineConfig& cfg = {})
{
    auto params = factorize(u);
    if (!params) {
        throw Error(ErrorKind::NonGeneric, "matrix is outside the factorizable locus (a peeled column entry vanishes)");
    }
    for (const auto& p : corner_minors(u)) {
        if (p.is_zero()) {
            throw Error(ErrorKind::NonGeneric, "matrix lies on a wall p_k = 0");
        }
    }
    F2Tri sign = sign_matrix(*params);
    OrbitReport orbit = orbit_of(sign, cfg);
    return {std::move(*params), std::move(sign), std::move(orbit)};
}

inline OrbitReport classify_component(const RatMatrix& u, const EngineConfig& cfg = {})
{
    return classify_detailed(u, cfg).orbit;
}

inline OrbitReport classify_component(const Flag& f, const EngineConfig& cfg = {})
{
    return classify_component(big_cell_coordinates(f), cfg);
}

// ---------------------------------------------------------------------------
// d = 3 census
// ---------------------------------------------------------------------------

enum class RegionD3 { Omega1, OmegaHat1, Omega2, OmegaHat2, Omega3, OmegaHat3 };

inline constexpr std::array<RegionD3, 6> all_regions_d3{RegionD3::Omega1, RegionD3::OmegaHat1, RegionD3::Omega2,
                                                         RegionD3::OmegaHat2, RegionD3::Omega3, RegionD3::OmegaHat3};

inline std::string to_string(RegionD3 r)
{
    switch (r) {
    case RegionD3::Omega1: return "Omega1";
    case RegionD3::OmegaHat1: return "OmegaHat1";
    case RegionD3::Omega2: return "Omega2";
    case RegionD3::OmegaHat2: return "OmegaHat2";
    case RegionD3::Omega3: return "Omega3";
    case RegionD3::OmegaHat3: return "OmegaHat3";
    }
    return "unknown";
}

inline RegionD3 hat(RegionD3 r)
{
    switch (r) {
    case RegionD3::Omega1: return RegionD3::OmegaHat1;
    case RegionD3::OmegaHat1: return RegionD3::Omega1;
    case RegionD3::Omega2: return RegionD3::OmegaHat2;
    case RegionD3::OmegaHat2: return RegionD3::Omega2;
    case RegionD3::Omega3: return RegionD3::OmegaHat3;
    case RegionD3::OmegaHat3: return RegionD3::Omega3;
    }
    return r;
}

/// Sign-inequality region of u = [[1,x,y],[0,1,z],[0,0,1]]; nullopt on the walls.
inline std::optional<RegionD3> region_d3(const Rational& x, const Rational& y, const Rational& z)
{
    const int sy = y.sign();
    const int sp = (x * z - y).sign();
    if (sy == 0 || sp == 0) {
        return std::nullopt;
    }
    if (sy > 0 && sp > 0) {
        return x.sign() > 0 ? RegionD3::Omega1 : RegionD3::OmegaHat1;
    }
    if (sy < 0 && sp < 0) {
        return x.sign() < 0 ? RegionD3::Omega2 : RegionD3::OmegaHat2;
    }
    return sy > 0 ? RegionD3::Omega3 : RegionD3::OmegaHat3;
}

inline RatMatrix unipotent_d3(const Rational& x, const Rational& y, const Rational& z)
{
    return RatMatrix{{1, x, y}, {0, 1, z}, {0, 0, 1}};
}

struct D3Census {
    std::vector<std::pair<RegionD3, F2Tri>> bijection; // region -> orbit representative
    std::size_t samples = 0;
    std::size_t skipped = 0;
    std::size_t disagreements = 0;
    bool is_bijection = false;
    bool iota_pairs_match = false; // orbit(hat region) = iota(orbit(region))
};

inline std::array<std::array<long, 3>, 6> d3_interior_points()
{
    // One fixed interior sample per region, in all_regions_d3 order.
    return {{{4, 2, 2}, {-1, 1, -2}, {-2, -1, 1}, {2, -1, -1}, {1, 1, -1}, {1, -1, 1}}};
}

inline D3Census d3_census(long grid = 3)
{
    D3Census c;
    std::map<RegionD3, OrbitReport> label;
    const auto points = d3_interior_points();
    for (std::size_t r = 0; r < all_regions_d3.size(); ++r) {
        const auto& p = points[r];
        const auto region = region_d3(p[0], p[1], p[2]);
        if (!region || *region != all_regions_d3[r]) {
            throw Error(ErrorKind::DimensionMismatch, "interior sample is not inside its region");
        }
        label.emplace(*region, classify_component(unipotent_d3(p[0], p[1], p[2])));
        c.bijection.emplace_back(*region, label.at(*region).representative);
    }
    std::map<F2Tri, int> seen;
    for (const auto& [region, rep] : c.bijection) {
        ++seen[rep];
    }
    c.is_bijection = seen.size() == 6 && all_orbits(2).size() == 6;
    c.iota_pairs_match = true;
    for (const auto& [region, report] : label) {
        if (label.at(hat(region)).representative != report.iota_representative) {
            c.iota_pairs_match = false;
        }
    }
    for (long x = -grid; x <= grid; ++x) {
        for (long y = -grid; y <= grid; ++y) {
            for (long z = -grid; z <= grid; ++z) {
                const auto region = region_d3(x, y, z);
                const auto params = factorize(unipotent_d3(x, y, z));
                if (!region || !params) {
                    ++c.skipped;
                    continue;
                }
                ++c.samples;
                const auto orbit = orbit_of(sign_matrix(*params));
                if (orbit.representative != label.at(*region).representative) {
                    ++c.disagreements;
                }
            }
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Claim 2 (orbits of M^-_n and M^+_n in the zero-height slice)
// ---------------------------------------------------------------------------

enum class Claim2Result { Disjoint, Equal };

inline std::string to_string(Claim2Result r) { return r == Claim2Result::Disjoint ? "disjoint" : "equal"; }

/// Disjoint exactly when n = 2 or 4 mod 8.
inline Claim2Result claim2_expected(std::size_t n)
{
    const std::size_t r = n % 8;
    return (r == 2 || r == 4) ? Claim2Result::Disjoint : Claim2Result::Equal;
}

inline Claim2Result claim2_check(std::size_t n, const EngineConfig& cfg = {})
{
    if (n < 4 || n % 2 != 0) {
        throw Error(ErrorKind::InvalidParity, "claim2 needs an even n >= 4, got " + std::to_string(n));
    }
    return same_orbit(corner_minus(n), corner_plus(n), cfg) ? Claim2Result::Equal : Claim2Result::Disjoint;
}

// ---------------------------------------------------------------------------
// Seeded sampling and the geometric consistency suite
// ---------------------------------------------------------------------------

/// Deterministic sampler of nonzero integers in [-9, 9].
class ParamSampler {
public:
    explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

    long next()
    {
        const auto v = static_cast<long>(rng_() % 18);
        return v < 9 ? v - 9 : v - 8;
    }

    FactorParams params(std::size_t n)
    {
        FactorParams p(n);
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= n + 1 - i; ++j) {
                p.set(i, j, next());
            }
        }
        return p;
    }

private:
    std::mt19937_64 rng_;
};

struct CheckFailure {
    std::string check;
    std::size_t sample = 0;
    std::string witness;
};

struct ConsistencyReport {
    std::size_t d = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::map<std::string, std::size_t> checks_run;
    std::vector<CheckFailure> failures;

    bool ok() const { return failures.empty(); }
};

inline std::string params_witness(const FactorParams& p)
{
    std::string s;
    for (std::size_t i = 1; i <= p.n(); ++i) {
        for (std::size_t j = 1; j <= p.n() + 1 - i; ++j) {
            if (!s.empty()) {
                s += ' ';
            }
            s += "t" + std::to_string(i) + std::to_string(j) + "=" + p.t(i, j).str();
        }
    }
    return s;
}

inline ConsistencyReport geometric_consistency_suite(std::size_t d, std::size_t samples, std::uint64_t seed)
{
    if (d < 2 || d > 8) {
        throw Error(ErrorKind::IndexOutOfRange, "consistency suite covers 2 <= d <= 8");
    }
    ConsistencyReport rep;
    rep.d = d;
    rep.samples = samples;
    rep.seed = seed;
    ParamSampler sampler(seed);
    const std::size_t n = d - 1;
    auto fail = [&](const std::string& check, std::size_t s, const FactorParams& t) {
        rep.failures.push_back({check, s, params_witness(t)});
    };
    for (std::size_t s = 0; s < samples; ++s) {
        const FactorParams t = sampler.params(n);
        const RatMatrix u = compose(t);
        const RatMatrix u_inv = inverse_unitriangular(u);
        const auto p = corner_minors(u);
        const auto q = corner_minors(u_inv);

        ++rep.checks_run["jacobi"];
        for (std::size_t k = 1; k < d; ++k) {
            const Rational expected = ((k * (d + 1)) % 2 == 0) ? p[d - k - 1] : -p[d - k - 1];
            if (q[k - 1] != expected) {
                fail("jacobi", s, t);
                break;
            }
        }

        ++rep.checks_run["round_trip"];
        const auto back = factorize(u);
        if (!back || *back != t) {
            fail("round_trip", s, t);
        }

        const FactorParams t_inv = invert_params(t);
        ++rep.checks_run["inversion_formula"];
        if (sign_matrix(t_inv) != iota_f2(sign_matrix(t))) {
            fail("inversion_formula", s, t);
        }

        ++rep.checks_run["inverse_compose"];
        if (compose(t_inv) != u_inv || compose(t_inv) * u != RatMatrix::identity(d)) {
            fail("inverse_compose", s, t);
        }

        if (d % 4 == 2) {
            ++rep.checks_run["middle_minor_flip"];
            const std::size_t mid = d / 2;
            if (q[mid - 1].sign() != -p[mid - 1].sign()) {
                fail("middle_minor_flip", s, t);
            }
        }
    }
    return rep;
}

/// classify(u) and classify(u^{-1}) land in distinct orbits, on seeded samples.
inline ConsistencyReport orbit_separation_suite(std::size_t d, std::size_t samples, std::uint64_t seed,
                                                const EngineConfig& cfg = {})
{
    ConsistencyReport rep;
    rep.d = d;
    rep.samples = samples;
    rep.seed = seed;
    ParamSampler sampler(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const FactorParams t = sampler.params(d - 1);
        const RatMatrix u = compose(t);
        const OrbitReport a = classify_component(u, cfg);
        const OrbitReport b = classify_component(inverse_unitriangular(u), cfg);
        ++rep.checks_run["orbit_separation"];
        if (a.representative == b.representative) {
            rep.failures.push_back({"orbit_separation", s, params_witness(t) + " orbit=" + a.representative.str()});
        }
        ++rep.checks_run["iota_partner"];
        if (b.representative != a.iota_representative) {
            rep.failures.push_back({"iota_partner", s, params_witness(t)});
        }
    }
    return rep;
}

} // namespace flagswap

#endif // FLAGSWAP_ANALYSIS_HPP
