#ifndef CYV_RATIONAL_HPP
#define CYV_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "cyv/error.hpp"

namespace cyv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading sign, no decimals, q > 0).
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] { fail(ErrorCode::BadRational, "'" + std::string(text) + "' is not a rational"); };
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string_view body = text.substr(b, e - b);
    if (body.empty()) bad();

    auto valid_int = [](std::string_view s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };

    auto slash = body.find('/');
    std::string num(body.substr(0, slash));
    std::string den = slash == std::string_view::npos ? "1" : std::string(body.substr(slash + 1));
    if (!valid_int(num, true) || !valid_int(den, false)) bad();
    if (!num.empty() && num[0] == '+') num.erase(0, 1);

    Rational r;
    r.get_num() = Integer(num, 10);
    r.get_den() = Integer(den, 10);
    if (r.get_den() == 0) bad();
    r.canonicalize();
    return r;
}

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline std::string to_string(const Integer& z) { return z.get_str(10); }

/// p/q in lowest terms. (mpq_class(p, q) alone does not canonicalize.)
inline Rational ratio(long p, long q) {
    if (q == 0) fail(ErrorCode::BadRational, "zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

/// Binomial coefficient extended as a polynomial in the upper argument:
/// binom(x, k) = x(x-1)...(x-k+1)/k! for any integer x.
inline Rational binomial_poly(long x, long k) {
    if (k < 0) return 0;
    Rational out = 1;
    for (long i = 0; i < k; ++i) out *= Rational(x - i);
    for (long i = 2; i <= k; ++i) out /= Rational(i);
    return out;
}

}  // namespace cyv

#endif  // CYV_RATIONAL_HPP
