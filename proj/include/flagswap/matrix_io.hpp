#ifndef FLAGSWAP_MATRIX_IO_HPP
#define FLAGSWAP_MATRIX_IO_HPP

#include <flagswap/error.hpp>
#include <flagswap/factorization.hpp>
#include <flagswap/rat_matrix.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flagswap {

namespace detail {

/// Splits text into (line number, tokens) for non-blank lines; '#' starts a comment.
inline std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenize_lines(std::string_view text)
{
    std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string tok; ls >> tok;) {
            tokens.push_back(tok);
        }
        if (!tokens.empty()) {
            out.emplace_back(lineno, std::move(tokens));
        }
    }
    return out;
}

inline std::string location(std::string_view source, std::size_t line)
{
    return std::string(source) + ":" + std::to_string(line) + ": ";
}

inline Rational parse_entry(const std::string& tok, std::string_view source, std::size_t line)
{
    try {
        return Rational::parse(tok);
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, location(source, line) + e.what());
    }
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Parse, path + ": cannot open file");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace detail

/*
 * Matrix text format: one row per line, whitespace-separated entries, each an
 * optionally signed integer or p/q. Blank lines and '#' comments are ignored.
 */
inline RatMatrix parse_matrix(std::string_view text, std::string_view source = "<input>")
{
    const auto lines = detail::tokenize_lines(text);
    if (lines.empty()) {
        throw Error(ErrorKind::Parse, std::string(source) + ": no matrix rows");
    }
    const std::size_t d = lines.size();
    RatMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto& [lineno, tokens] = lines[i];
        if (tokens.size() != d) {
            throw Error(ErrorKind::Parse, detail::location(source, lineno) + "expected " + std::to_string(d) +
                                              " entries, found " + std::to_string(tokens.size()));
        }
        for (std::size_t j = 0; j < d; ++j) {
            m(i, j) = detail::parse_entry(tokens[j], source, lineno);
        }
    }
    return m;
}

inline RatMatrix read_matrix_file(const std::string& path)
{
    return parse_matrix(detail::read_file(path), path);
}

inline std::string format_matrix(const RatMatrix& m)
{
    std::string s;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j > 0) {
                s += ' ';
            }
            s += m(i, j).str();
        }
        s += '\n';
    }
    return s;
}

/*
 * Parameter file: one `i j value` line per t_ij. n is the largest i; the index
 * set must be complete and every value nonzero.
 */
inline FactorParams parse_params(std::string_view text, std::string_view source = "<input>")
{
    const auto lines = detail::tokenize_lines(text);
    struct Entry {
        std::size_t line, i, j;
        Rational value;
    };
    std::vector<Entry> entries;
    std::size_t n = 0;
    for (const auto& [lineno, tokens] : lines) {
        if (tokens.size() != 3) {
            throw Error(ErrorKind::Parse, detail::location(source, lineno) + "expected 'i j value'");
        }
        std::size_t i = 0, j = 0;
        try {
            std::size_t pos_i = 0, pos_j = 0;
            i = std::stoul(tokens[0], &pos_i);
            j = std::stoul(tokens[1], &pos_j);
            if (pos_i != tokens[0].size() || pos_j != tokens[1].size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, detail::location(source, lineno) + "indices must be positive integers");
        }
        if (i == 0 || j == 0) {
            throw Error(ErrorKind::Parse, detail::location(source, lineno) + "indices are 1-based");
        }
        entries.push_back({lineno, i, j, detail::parse_entry(tokens[2], source, lineno)});
        n = std::max(n, i);
    }
    if (n == 0) {
        throw Error(ErrorKind::Parse, std::string(source) + ": no parameters");
    }
    FactorParams params(n);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : entries) {
        if (e.j > n + 1 - e.i) {
            throw Error(ErrorKind::Parse, detail::location(source, e.line) + "index (" + std::to_string(e.i) + "," +
                                              std::to_string(e.j) + ") out of range for n = " + std::to_string(n));
        }
        if (!seen.emplace(e.i, e.j).second) {
            throw Error(ErrorKind::Parse, detail::location(source, e.line) + "duplicate parameter");
        }
        if (e.value.is_zero()) {
            throw Error(ErrorKind::Parse, detail::location(source, e.line) + "parameter must be nonzero");
        }
        params.set(e.i, e.j, e.value);
    }
    if (seen.size() != params.count()) {
        throw Error(ErrorKind::Parse, std::string(source) + ": expected " + std::to_string(params.count()) +
                                          " parameters for n = " + std::to_string(n) + ", found " +
                                          std::to_string(seen.size()));
    }
    return params;
}

inline FactorParams read_params_file(const std::string& path)
{
    return parse_params(detail::read_file(path), path);
}

inline std::string format_params(const FactorParams& p)
{
    std::string s;
    for (std::size_t i = 1; i <= p.n(); ++i) {
        for (std::size_t j = 1; j <= p.n() + 1 - i; ++j) {
            s += std::to_string(i) + " " + std::to_string(j) + " " + p.t(i, j).str() + "\n";
        }
    }
    return s;
}

} // namespace flagswap

#endif // FLAGSWAP_MATRIX_IO_HPP
