#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "hecke/errors.hpp"
#include "hecke/scalar/laurent.hpp"
#include "hecke/scalar/rational.hpp"

namespace hecke {

/// Element of Q(q) kept in canonical form num/den.
///
/// Canonical form: num and den coprime; den is an integer polynomial with
/// content 1, nonzero constant term (lowest exponent 0) and positive leading
/// coefficient. Every power of q and every rational scale lives in num, so
/// structural equality is field equality.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(long c) : num_(Rational(c)), den_(1) {}   // NOLINT(google-explicit-constructor)
    RationalFunction(LaurentPolynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)

    RationalFunction(LaurentPolynomial num, LaurentPolynomial den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        canonicalize();
    }

    static RationalFunction q() { return RationalFunction(LaurentPolynomial::q()); }
    static RationalFunction q_power(int k) { return RationalFunction(LaurentPolynomial::monomial(Rational(1), k)); }

    const LaurentPolynomial& numerator() const noexcept { return num_; }
    const LaurentPolynomial& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_laurent() const noexcept { return den_.is_constant(); }

    /// Term count of numerator plus denominator; used to rank pivots.
    std::size_t complexity() const { return num_.term_count() + den_.term_count(); }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.is_laurent() && b.is_laurent()) return from_laurent(a.num_ + b.num_);
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        if (b.is_laurent()) return RationalFunction(a.num_ + b.num_ * a.den_, a.den_);
        if (a.is_laurent()) return RationalFunction(a.num_ * b.den_ + b.num_, b.den_);
        // a/b + c/d = (a*(d/g) + c*(b/g)) / (b*d/g), g = gcd(b, d)
        auto fb = detail::integer_form(a.den_);
        auto fd = detail::integer_form(b.den_);
        detail::IntPoly g = detail::gcd(fb.poly, fd.poly);
        LaurentPolynomial d_over_g = detail::to_laurent(detail::divexact(fd.poly, g), 0, Rational(1));
        LaurentPolynomial b_over_g = detail::to_laurent(detail::divexact(fb.poly, g), 0, Rational(1));
        LaurentPolynomial num = a.num_ * d_over_g + b.num_ * b_over_g;
        return RationalFunction(std::move(num), a.den_ * d_over_g);
    }

    friend RationalFunction operator-(const RationalFunction& a) { return raw(-a.num_, a.den_); }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        if (a.is_laurent() && b.is_laurent()) return from_laurent(a.num_ * b.num_);
        if (a.num_.is_monomial() && b.is_laurent() && b.num_.is_monomial())
            return raw(a.num_ * b.num_, a.den_);
        if (b.num_.is_monomial() && a.is_laurent() && a.num_.is_monomial())
            return raw(a.num_ * b.num_, b.den_);
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        return a * b.inverse();
    }

    RationalFunction inverse() const
    {
        if (is_zero()) throw DivisionByZero("inverse of zero rational function");
        if (num_.is_monomial()) {
            // den/(c q^k): den stays primitive only after moving c q^k over.
            const Rational c = num_.trailing_coefficient();
            LaurentPolynomial n = den_.shifted(-num_.low_exponent());
            n *= Rational(1) / c;
            return RationalFunction(std::move(n));
        }
        return RationalFunction(den_, num_);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    Rational evaluate(const Rational& q) const
    {
        const Rational d = den_.evaluate(q);
        if (hecke::is_zero(d)) throw DivisionByZero("rational function has a pole at q = " + hecke::to_string(q));
        return num_.evaluate(q) / d;
    }

    std::string to_string() const
    {
        if (is_laurent()) return num_.to_string();
        auto wrap = [](const LaurentPolynomial& p) {
            return p.term_count() > 1 ? "(" + p.to_string() + ")" : p.to_string();
        };
        return wrap(num_) + "/" + wrap(den_);
    }

    /// Brings arbitrary num/den into canonical form; idempotent.
    void canonicalize()
    {
        if (num_.is_zero()) {
            den_ = LaurentPolynomial(1);
            return;
        }
        auto fd = detail::integer_form(den_);
        if (fd.poly.size() == 1) {
            num_ = num_.shifted(-fd.low) * (Rational(1) / fd.scale);
            den_ = LaurentPolynomial(1);
            return;
        }
        auto fn = detail::integer_form(num_);
        detail::IntPoly g = detail::gcd(fn.poly, fd.poly);
        if (g.size() > 1) {
            fn.poly = detail::divexact(std::move(fn.poly), g);
            fd.poly = detail::divexact(std::move(fd.poly), g);
        }
        num_ = detail::to_laurent(fn.poly, fn.low - fd.low, fn.scale / fd.scale);
        den_ = detail::to_laurent(fd.poly, 0, Rational(1));
        if (den_.is_constant()) {
            num_ *= Rational(1) / den_.trailing_coefficient();
            den_ = LaurentPolynomial(1);
        }
    }

private:
    static RationalFunction from_laurent(LaurentPolynomial p) { return RationalFunction(std::move(p)); }

    // Skips canonicalization; callers guarantee the result is canonical.
    static RationalFunction raw(LaurentPolynomial num, LaurentPolynomial den)
    {
        RationalFunction r;
        r.num_ = std::move(num);
        if (!r.num_.is_zero()) r.den_ = std::move(den);
        return r;
    }

    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

inline bool is_zero(const RationalFunction& x) { return x.is_zero(); }
inline std::string to_string(const RationalFunction& x) { return x.to_string(); }

}  // namespace hecke
