#ifndef FLAGSWAP_CLI_HPP
#define FLAGSWAP_CLI_HPP

#include <flagswap/analysis.hpp>
#include <flagswap/matrix_io.hpp>
#include <flagswap/report_json.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace flagswap::cli {

enum ExitCode : int { exit_ok = 0, exit_verdict = 1, exit_usage = 2, exit_resource = 3 };

inline constexpr const char* max_states_env = "FLAGSWAP_MAX_STATES";

struct RunConfig {
    std::string subcommand;
    std::optional<std::size_t> n;
    std::optional<std::size_t> d;
    std::string matrix_path;
    std::string params_path;
    std::string flag_path;
    std::string flag_a;
    std::string flag_b;
    std::string format = "text";
    unsigned threads = 1;
    std::uint64_t seed = 1;
    std::size_t samples = 100;
    std::optional<std::uint64_t> max_states;
};

/// Thrown for inconsistent flags that CLI11 itself cannot see.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t resolve_max_states(const RunConfig& rc)
{
    if (rc.max_states) {
        return *rc.max_states;
    }
    if (const char* env = std::getenv(max_states_env); env != nullptr && *env != '\0') {
        try {
            std::size_t pos = 0;
            const auto v = std::stoull(env, &pos);
            if (pos == std::string(env).size() && v > 0) {
                return v;
            }
        } catch (const std::exception&) {
        }
        throw UsageError(std::string(max_states_env) + ": expected a positive integer, got '" + env + "'");
    }
    return EngineConfig{}.max_states;
}

inline EngineConfig engine_config(const RunConfig& rc)
{
    EngineConfig cfg;
    cfg.max_states = resolve_max_states(rc);
    cfg.threads = rc.threads;
    return cfg;
}

/// n from --n or --d (d = n + 1), checking they agree when both are given.
inline std::size_t resolve_n(const RunConfig& rc)
{
    if (rc.n && rc.d && *rc.d != *rc.n + 1) {
        throw UsageError("--n " + std::to_string(*rc.n) + " and --d " + std::to_string(*rc.d) +
                         " disagree (d must equal n + 1)");
    }
    if (rc.n) {
        return *rc.n;
    }
    if (rc.d) {
        if (*rc.d < 2) {
            throw UsageError("--d must be at least 2");
        }
        return *rc.d - 1;
    }
    throw UsageError(rc.subcommand + ": one of --n or --d is required");
}

inline std::size_t resolve_d(const RunConfig& rc) { return resolve_n(rc) + 1; }

inline int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NonGeneric:
    case ErrorKind::NotInBigCell: return exit_verdict;
    case ErrorKind::ResourceBound: return exit_resource;
    default: return exit_usage;
    }
}

namespace detail {

class Emitter {
public:
    Emitter(const RunConfig& rc, std::ostream& out) : json_(rc.format == "json"), out_(out) {}

    bool json() const { return json_; }

    void emit(const json::Json& j, const std::string& text)
    {
        if (json_) {
            out_ << j.dump() << '\n';
        } else {
            out_ << text;
        }
    }

private:
    bool json_;
    std::ostream& out_;
};

inline std::string orbit_line(const OrbitReport& o)
{
    std::ostringstream s;
    s << o.representative.str() << "  size " << o.size << "  height " << o.height.str() << "  iota "
      << o.iota_representative.str() << (o.invariant_under_iota ? "  invariant" : "")
      << (o.singleton() ? "  singleton" : "") << '\n';
    return s.str();
}

inline std::string text_orbits(std::size_t n, const std::vector<OrbitReport>& orbits)
{
    std::ostringstream s;
    std::size_t singletons = 0;
    for (const auto& o : orbits) {
        s << orbit_line(o);
        singletons += o.singleton();
    }
    s << "n " << n << "  orbits " << orbits.size() << "  singletons " << singletons << '\n';
    return s.str();
}

inline std::string text_pairing(const PairingTable& t)
{
    std::ostringstream s;
    for (const auto& r : t.rows) {
        s << r.orbit.representative.str() << " <-> " << r.partner.representative.str() << "  size " << r.orbit.size
          << (r.invariant ? "  invariant" : "") << '\n';
    }
    s << "n " << t.n << "  orbits " << t.total << "  invariant " << t.invariant_count << "  singletons "
      << t.singleton_count << '\n';
    return s.str();
}

inline std::string text_verdict(const SwapVerdict& v)
{
    std::ostringstream s;
    s << "d " << v.d << "  status " << to_string(v.status) << "  count " << v.count() << "  method "
      << to_string(v.method) << "  orbits examined " << v.orbits_examined << '\n';
    for (const auto& sl : v.slices) {
        s << "slice " << sl.height.str() << '\n';
        for (const auto& o : sl.orbits) {
            s << "  " << orbit_line(o);
        }
    }
    if (v.slices.empty()) {
        for (const auto& o : v.invariant_orbits) {
            s << "invariant " << orbit_line(o);
        }
    }
    if (!v.reason.empty()) {
        s << "reason: " << v.reason << '\n';
    }
    return s.str();
}

inline std::string text_params(const FactorParams& p)
{
    std::ostringstream s;
    for (std::size_t i = 1; i <= p.n(); ++i) {
        s << " ";
        for (std::size_t j = 1; j <= p.n() + 1 - i; ++j) {
            s << " t" << i << j << "=" << p.t(i, j).str();
        }
        s << '\n';
    }
    return s.str();
}

inline std::string text_consistency(const ConsistencyReport& r)
{
    std::ostringstream s;
    s << "d " << r.d << "  samples " << r.samples << "  seed " << r.seed << '\n';
    for (const auto& [name, count] : r.checks_run) {
        s << "  " << name << ": " << count << " run\n";
    }
    for (const auto& f : r.failures) {
        s << "FAIL " << f.check << " sample " << f.sample << ": " << f.witness << '\n';
    }
    s << (r.ok() ? "ok" : "failures " + std::to_string(r.failures.size())) << '\n';
    return s.str();
}

inline RatMatrix input_unipotent(const RunConfig& rc)
{
    if (!rc.matrix_path.empty()) {
        return read_matrix_file(rc.matrix_path);
    }
    if (!rc.flag_path.empty()) {
        return big_cell_coordinates(Flag(read_matrix_file(rc.flag_path)));
    }
    return compose(read_params_file(rc.params_path));
}

} // namespace detail

inline int run_command(const RunConfig& rc, std::ostream& out)
{
    detail::Emitter em(rc, out);
    const EngineConfig cfg = engine_config(rc);
    const std::string& cmd = rc.subcommand;

    if (cmd == "orbits") {
        const std::size_t n = resolve_n(rc);
        const auto orbits = all_orbits(n, cfg);
        em.emit(json::orbits_report(n, orbits), detail::text_orbits(n, orbits));
        return exit_ok;
    }
    if (cmd == "pairing") {
        const auto table = pairing_table(resolve_n(rc), cfg);
        em.emit(json::pairing_report(table), detail::text_pairing(table));
        return exit_ok;
    }
    if (cmd == "verify" || cmd == "decide-d8") {
        const std::size_t d = cmd == "verify" ? resolve_d(rc) : 8;
        const SwapVerdict v = cmd == "verify" ? verify_swaps(d, cfg) : decide_d8(cfg);
        auto j = json::verdict_report(v, swap_expected(d));
        j["command"] = cmd;
        em.emit(j, detail::text_verdict(v));
        if (v.status == SwapStatus::Undecided) {
            return exit_resource;
        }
        return swap_expected(d) && v.status != SwapStatus::AllSwapped ? exit_verdict : exit_ok;
    }
    if (cmd == "classify") {
        const auto c = classify_detailed(detail::input_unipotent(rc), cfg);
        std::ostringstream s;
        s << "d " << c.params.d() << "\nparams\n" << detail::text_params(c.params) << "sign matrix " << c.sign.str()
          << "\norbit " << detail::orbit_line(c.orbit);
        em.emit(json::classification_report(c), s.str());
        return exit_ok;
    }
    if (cmd == "factorize") {
        const RatMatrix u = read_matrix_file(rc.matrix_path);
        require_unitriangular(u);
        const auto p = factorize(u);
        if (!p) {
            throw Error(ErrorKind::NonGeneric, "matrix is outside the factorizable locus (a peeled column entry vanishes)");
        }
        em.emit(json::factorize_report(u, *p),
                "d " + std::to_string(u.dim()) + "\n" + detail::text_params(*p) + "sign matrix " +
                    sign_matrix(*p).str() + "\n");
        return exit_ok;
    }
    if (cmd == "antipodal") {
        const Flag a(read_matrix_file(rc.flag_a));
        const Flag b(read_matrix_file(rc.flag_b));
        const bool anti = is_antipodal(a, b);
        std::set<std::size_t> bad;
        for (std::size_t k = 1; k < a.dim(); ++k) {
            if (!levels_transverse(a, b, k)) {
                bad.insert(k);
            }
        }
        std::string text = std::string("antipodal ") + (anti ? "yes" : "no") + "\n";
        if (!bad.empty()) {
            text += "non-transverse levels:";
            for (const auto k : bad) {
                text += " " + std::to_string(k);
            }
            text += "\n";
        }
        em.emit(json::antipodal_report(a.dim(), anti, bad), text);
        return exit_ok;
    }
    if (cmd == "census-d3") {
        const auto c = d3_census();
        std::ostringstream s;
        for (const auto& [region, rep] : c.bijection) {
            s << to_string(region) << " -> " << rep.str() << '\n';
        }
        s << "bijection " << (c.is_bijection ? "yes" : "no") << "  iota pairs " << (c.iota_pairs_match ? "yes" : "no")
          << "  samples " << c.samples << "  skipped " << c.skipped << "  disagreements " << c.disagreements << '\n';
        em.emit(json::census_report(c), s.str());
        return c.is_bijection && c.iota_pairs_match && c.disagreements == 0 ? exit_ok : exit_verdict;
    }
    if (cmd == "claim2") {
        const std::size_t n = resolve_n(rc);
        const auto got = claim2_check(n, cfg);
        const auto expected = claim2_expected(n);
        em.emit(json::claim2_report(n, got, expected),
                "n " + std::to_string(n) + "  " + to_string(got) + "  expected " + to_string(expected) + "\n");
        return got == expected ? exit_ok : exit_verdict;
    }
    if (cmd == "consistency") {
        const auto r = geometric_consistency_suite(resolve_d(rc), rc.samples, rc.seed);
        em.emit(json::consistency_report(r), detail::text_consistency(r));
        return r.ok() ? exit_ok : exit_verdict;
    }
    if (cmd == "orbit-table") {
        const auto table = pairing_table(3, cfg);
        json::Json rows = json::Json::array();
        std::ostringstream s;
        s << "pair  side   size  members\n";
        std::size_t pair = 0;
        for (const auto& r : table.rows) {
            if (r.partner.representative < r.orbit.representative) {
                continue;
            }
            ++pair;
            for (const auto& [side, o] : {std::pair{"left", r.orbit}, std::pair{"right", r.partner}}) {
                json::Json members = json::Json::array();
                s << pair << (pair < 10 ? "     " : "    ") << side << (side[0] == 'l' ? "   " : "  ") << o.size
                  << "     ";
                for (const auto& m : orbit_members(o.representative, cfg)) {
                    members.push_back(m.str());
                    s << ' ' << m.str();
                }
                s << '\n';
                rows.push_back({{"pair", pair}, {"side", side}, {"size", o.size}, {"members", std::move(members)}});
            }
        }
        s << "orbits " << table.total << "  pairs " << pair << "  singletons " << table.singleton_count << '\n';
        em.emit(json::finish({{"command", "orbit-table"},
                              {"n", 3},
                              {"total", table.total},
                              {"singletons", table.singleton_count},
                              {"rows", std::move(rows)}}),
                s.str());
        return exit_ok;
    }
    throw UsageError("unknown subcommand '" + cmd + "'");
}

/// Parses `args` (without the program name), runs the subcommand and returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig rc;
    CLI::App app{"Components of opposite big Schubert cells: orbit censuses, pairings and verdicts", "flagswap"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", rc.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", rc.threads, "Worker threads for slice enumeration")->check(CLI::Range(1U, 1024U));
    app.add_option("--max-states", rc.max_states,
                   std::string("Largest state space to enumerate (default 2^30; env ") + max_states_env + ")")
        ->check(CLI::PositiveNumber);

    auto with_nd = [&](CLI::App* sub) {
        sub->add_option("--n", rc.n, "Size of the F2 triangular matrices (n = d - 1)");
        sub->add_option("--d", rc.d, "Dimension d (d = n + 1)");
    };
    with_nd(app.add_subcommand("orbits", "List every orbit of T^n"));
    with_nd(app.add_subcommand("pairing", "Pair the orbits of T^n under iota"));
    with_nd(app.add_subcommand("verify", "Decide whether iota swaps every component for dimension d"));
    app.add_subcommand("decide-d8", "Slice-restricted decision for d = 8");
    auto* classify = app.add_subcommand("classify", "Component of a generic unipotent matrix");
    auto* in_matrix = classify->add_option("--matrix", rc.matrix_path, "Unipotent matrix file")->check(CLI::ExistingFile);
    auto* in_flag = classify->add_option("--flag", rc.flag_path, "Flag basis file (columns)")->check(CLI::ExistingFile);
    auto* in_params = classify->add_option("--params", rc.params_path, "Parameter file")->check(CLI::ExistingFile);
    in_matrix->excludes(in_flag)->excludes(in_params);
    in_flag->excludes(in_params);
    classify->require_option(1);
    app.add_subcommand("factorize", "Factorization parameters of a unipotent matrix")
        ->add_option("--matrix", rc.matrix_path, "Unipotent matrix file")
        ->required()
        ->check(CLI::ExistingFile);
    auto* anti = app.add_subcommand("antipodal", "Antipodality of two flags");
    anti->add_option("--flag-a", rc.flag_a, "First flag basis file")->required()->check(CLI::ExistingFile);
    anti->add_option("--flag-b", rc.flag_b, "Second flag basis file")->required()->check(CLI::ExistingFile);
    app.add_subcommand("census-d3", "Region/orbit dictionary for d = 3");
    with_nd(app.add_subcommand("claim2", "Whether M-_n and M+_n share an orbit"));
    auto* cons = app.add_subcommand("consistency", "Seeded exact identity checks");
    with_nd(cons);
    cons->add_option("--samples", rc.samples, "Number of random parameter sets");
    cons->add_option("--seed", rc.seed, "Seed for the parameter generator");
    app.add_subcommand("orbit-table", "The orbits of T^3 paired by iota");

    for (std::size_t i = 0; i < args.size(); ++i) {
        const auto& a = args[i];
        if (a == "--format" || a == "--threads" || a == "--max-states") {
            ++i;
            continue;
        }
        if (a.empty() || a.front() == '-') {
            continue;
        }
        if (app.get_subcommand_no_throw(a) == nullptr) {
            err << "usage error: unknown subcommand '" << a << "'\nRun with --help for more information.\n";
            return exit_usage;
        }
        break;
    }
    std::vector<std::string> argv_storage{"flagswap"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    rc.subcommand = app.get_subcommands().front()->get_name();

    try {
        return run_command(rc, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        const std::string kind(to_string(e.kind()));
        err << kind << ": " << e.what() << '\n';
        if (rc.format == "json") {
            out << json::error_report(kind, e.what()).dump() << '\n';
        }
        return exit_code_for(e.kind());
    } catch (const std::bad_alloc&) {
        err << "resource_bound: out of memory\n";
        return exit_resource;
    }
}

} // namespace flagswap::cli

#endif // FLAGSWAP_CLI_HPP
