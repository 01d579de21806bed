#ifndef FLAGSWAP_RATIONAL_HPP
#define FLAGSWAP_RATIONAL_HPP

#include <flagswap/error.hpp>

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace flagswap {

using Integer = mpz_class;

/*
 * Exact rational number backed by GMP.
 *
 * Every value is kept in lowest terms with a positive denominator; all
 * constructors canonicalize and every arithmetic result is produced by GMP
 * in canonical form, so equality is plain field-wise equality.
 */
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(const Integer& value) : q_(value) {}

    Rational(const Integer& num, const Integer& den)
    {
        if (den == 0) {
            throw Error(ErrorKind::Parse, "rational with zero denominator");
        }
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    /// Accepts `[+-]digits` or `[+-]digits/digits`.
    static Rational parse(std::string_view text)
    {
        auto valid_int = [](std::string_view s, bool allow_sign) {
            if (allow_sign && !s.empty() && (s.front() == '+' || s.front() == '-')) {
                s.remove_prefix(1);
            }
            if (s.empty()) {
                return false;
            }
            for (char c : s) {
                if (c < '0' || c > '9') {
                    return false;
                }
            }
            return true;
        };
        auto to_integer = [](std::string_view s) {
            if (!s.empty() && s.front() == '+') {
                s.remove_prefix(1);
            }
            return Integer(std::string(s), 10);
        };

        const auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            if (!valid_int(text, true)) {
                throw Error(ErrorKind::Parse, "invalid rational '" + std::string(text) + "'");
            }
            return Rational(to_integer(text));
        }
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!valid_int(num, true) || !valid_int(den, false)) {
            throw Error(ErrorKind::Parse, "invalid rational '" + std::string(text) + "'");
        }
        return Rational(to_integer(num), to_integer(den));
    }

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    std::string str() const { return q_.get_str(10); }

    Rational operator-() const { return from_mpq(-q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) {
            throw Error(ErrorKind::SingularMatrix, "division by zero");
        }
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    const mpq_class& raw() const { return q_; }

private:
    static Rational from_mpq(const mpq_class& q)
    {
        Rational r;
        r.q_ = q;
        return r;
    }

    mpq_class q_;
};

} // namespace flagswap

#endif // FLAGSWAP_RATIONAL_HPP
