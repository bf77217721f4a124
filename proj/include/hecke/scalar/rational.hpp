#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "hecke/errors.hpp"

namespace hecke {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// `a/b` with gcd(a, b) = 1 and b > 0; integers print without a denominator.
inline std::string to_string(const Rational& x)
{
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (sgn(den) == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (is_zero(base)) throw DivisionByZero("negative power of zero");
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

inline Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Parses `[-]digits[/digits]`; anything else throws ParseError at column 1.
inline Rational parse_rational(std::string_view text)
{
    auto fail = [&] { return ParseError("not a rational literal: '" + std::string(text) + "'", 1, 1); };
    if (text.empty()) throw fail();
    const auto slash = text.find('/');
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw fail();
    std::string num_s(num);
    if (num_s.front() == '+') num_s.erase(0, 1);
    return make_rational(Integer(num_s), Integer(std::string(den)));
}

}  // namespace hecke
