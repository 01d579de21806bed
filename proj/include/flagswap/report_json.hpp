#ifndef FLAGSWAP_REPORT_JSON_HPP
#define FLAGSWAP_REPORT_JSON_HPP

#include <flagswap/analysis.hpp>
#include <flagswap/factorization.hpp>
#include <flagswap/flag.hpp>
#include <flagswap/orbit_engine.hpp>

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

namespace flagswap::json {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// Adds the schema field last so the leading fields stay as documented.
inline Json finish(Json j)
{
    j["schema"] = schema_version;
    return j;
}

inline Json orbit(const OrbitReport& o)
{
    return {
        {"n", o.representative.n()},
        {"rep", o.representative.str()},
        {"size", o.size},
        {"height", o.height.str()},
        {"iota_rep", o.iota_representative.str()},
        {"invariant", o.invariant_under_iota},
        {"singleton", o.singleton()},
    };
}

inline Json orbit_list(const std::vector<OrbitReport>& orbits)
{
    Json arr = Json::array();
    for (const auto& o : orbits) {
        arr.push_back(orbit(o));
    }
    return arr;
}

inline Json matrix(const RatMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row.push_back(m(i, j).str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json params(const FactorParams& p)
{
    Json arr = Json::array();
    for (std::size_t i = 1; i <= p.n(); ++i) {
        for (std::size_t j = 1; j <= p.n() + 1 - i; ++j) {
            arr.push_back({{"i", i}, {"j", j}, {"value", p.t(i, j).str()}});
        }
    }
    return arr;
}

inline Json orbits_report(std::size_t n, const std::vector<OrbitReport>& orbits)
{
    std::size_t singletons = 0;
    for (const auto& o : orbits) {
        singletons += o.singleton();
    }
    return finish({{"command", "orbits"},
                   {"n", n},
                   {"total", orbits.size()},
                   {"singletons", singletons},
                   {"orbits", orbit_list(orbits)}});
}

inline Json pairing_report(const PairingTable& t)
{
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        rows.push_back({{"orbit", r.orbit.representative.str()},
                        {"partner", r.partner.representative.str()},
                        {"size", r.orbit.size},
                        {"invariant", r.invariant}});
    }
    return finish({{"command", "pairing"},
                   {"n", t.n},
                   {"total", t.total},
                   {"invariant", t.invariant_count},
                   {"singletons", t.singleton_count},
                   {"rows", std::move(rows)}});
}

inline Json verdict_report(const SwapVerdict& v, bool expected_swap)
{
    Json j = {
        {"status", to_string(v.status)},
        {"count", v.count()},
        {"command", "verify"},
        {"d", v.d},
        {"method", to_string(v.method)},
        {"orbits_examined", v.orbits_examined},
        {"expected_all_swapped", expected_swap},
        {"invariant_orbits", orbit_list(v.invariant_orbits)},
    };
    if (!v.slices.empty()) {
        Json slices = Json::array();
        for (const auto& s : v.slices) {
            slices.push_back({{"height", s.height.str()}, {"orbits", orbit_list(s.orbits)}});
        }
        j["slices"] = std::move(slices);
    }
    if (!v.reason.empty()) {
        j["reason"] = v.reason;
    }
    return finish(std::move(j));
}

inline Json classification_report(const Classification& c)
{
    return finish({{"command", "classify"},
                   {"d", c.params.d()},
                   {"params", params(c.params)},
                   {"sign_matrix", c.sign.str()},
                   {"orbit", orbit(c.orbit)}});
}

inline Json factorize_report(const RatMatrix& u, const FactorParams& p)
{
    return finish({{"command", "factorize"},
                   {"d", u.dim()},
                   {"matrix", matrix(u)},
                   {"params", params(p)},
                   {"sign_matrix", sign_matrix(p).str()}});
}

inline Json antipodal_report(std::size_t d, bool antipodal, const std::set<std::size_t>& bad)
{
    Json levels = Json::array();
    for (const auto k : bad) {
        levels.push_back(k);
    }
    return finish(
        {{"command", "antipodal"}, {"d", d}, {"antipodal", antipodal}, {"non_transverse_levels", std::move(levels)}});
}

inline Json census_report(const D3Census& c)
{
    Json bij = Json::array();
    for (const auto& [region, rep] : c.bijection) {
        bij.push_back({{"region", to_string(region)}, {"orbit", rep.str()}});
    }
    return finish({{"command", "census-d3"},
                   {"bijection", std::move(bij)},
                   {"is_bijection", c.is_bijection},
                   {"iota_pairs_match", c.iota_pairs_match},
                   {"samples", c.samples},
                   {"skipped", c.skipped},
                   {"disagreements", c.disagreements}});
}

inline Json claim2_report(std::size_t n, Claim2Result got, Claim2Result expected)
{
    return finish({{"command", "claim2"},
                   {"n", n},
                   {"result", to_string(got)},
                   {"expected", to_string(expected)},
                   {"agrees", got == expected}});
}

inline Json consistency_report(const ConsistencyReport& r)
{
    Json checks = Json::object();
    for (const auto& [name, count] : r.checks_run) {
        checks[name] = count;
    }
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"check", f.check}, {"sample", f.sample}, {"witness", f.witness}});
    }
    return finish({{"command", "consistency"},
                   {"d", r.d},
                   {"samples", r.samples},
                   {"seed", r.seed},
                   {"ok", r.ok()},
                   {"checks", std::move(checks)},
                   {"failures", std::move(failures)}});
}

inline Json error_report(const std::string& kind, const std::string& message)
{
    return finish({{"error", kind}, {"message", message}});
}

} // namespace flagswap::json

#endif // FLAGSWAP_REPORT_JSON_HPP
