#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/scalar/rational.hpp"

namespace hecke {

/// Finite Laurent series in q with rational coefficients.
///
/// Stored densely from the lowest to the highest exponent. Both end coefficients
/// are nonzero, so the empty vector is the only representation of zero.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;

    LaurentPolynomial(const Rational& c)  // NOLINT(google-explicit-constructor)
    {
        if (!hecke::is_zero(c)) coeffs_.push_back(c);
    }
    LaurentPolynomial(long c) : LaurentPolynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static LaurentPolynomial monomial(const Rational& c, int exponent)
    {
        LaurentPolynomial p(c);
        p.low_ = p.coeffs_.empty() ? 0 : exponent;
        return p;
    }

    static LaurentPolynomial q() { return monomial(Rational(1), 1); }

    static LaurentPolynomial from_terms(const std::map<int, Rational>& terms)
    {
        LaurentPolynomial p;
        if (terms.empty()) return p;
        p.low_ = terms.begin()->first;
        p.coeffs_.assign(static_cast<std::size_t>(terms.rbegin()->first - p.low_ + 1), Rational(0));
        for (const auto& [e, c] : terms) p.coeffs_[static_cast<std::size_t>(e - p.low_)] += c;
        p.trim();
        return p;
    }

    /// Takes ownership of a dense coefficient block starting at exponent `low`.
    static LaurentPolynomial from_dense(int low, std::vector<Rational> coeffs)
    {
        LaurentPolynomial p;
        p.low_ = low;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.empty() || (coeffs_.size() == 1 && low_ == 0); }
    bool is_monomial() const noexcept { return coeffs_.size() == 1; }

    int low_exponent() const noexcept { return low_; }
    int high_exponent() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& dense() const noexcept { return coeffs_; }

    std::size_t term_count() const
    {
        return static_cast<std::size_t>(
            std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; }));
    }

    Rational coefficient(int exponent) const
    {
        if (coeffs_.empty() || exponent < low_ || exponent > high_exponent()) return Rational(0);
        return coeffs_[static_cast<std::size_t>(exponent - low_)];
    }

    const Rational& leading_coefficient() const { return coeffs_.back(); }
    const Rational& trailing_coefficient() const { return coeffs_.front(); }

    std::map<int, Rational> terms() const
    {
        std::map<int, Rational> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (sgn(coeffs_[i]) != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
        return out;
    }

    /// Multiplication by q^k.
    LaurentPolynomial shifted(int k) const
    {
        LaurentPolynomial p = *this;
        if (!p.coeffs_.empty()) p.low_ += k;
        return p;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return add_scaled(o, 1); }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return add_scaled(o, -1); }

    LaurentPolynomial& operator*=(const Rational& c)
    {
        if (hecke::is_zero(c)) {
            coeffs_.clear();
            low_ = 0;
            return *this;
        }
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a)
    {
        for (auto& x : a.coeffs_) x = -x;
        return a;
    }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
    friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) { return a *= c; }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
    {
        LaurentPolynomial p;
        if (a.is_zero() || b.is_zero()) return p;
        p.low_ = a.low_ + b.low_;
        p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        Rational t;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (sgn(b.coeffs_[j]) == 0) continue;
                mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
                p.coeffs_[i + j] += t;
            }
        }
        p.trim();
        return p;
    }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b)
    {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

    /// Value at a nonzero rational q.
    Rational evaluate(const Rational& q) const
    {
        if (coeffs_.empty()) return Rational(0);
        if (hecke::is_zero(q) && low_ < 0) throw DivisionByZero("Laurent polynomial evaluated at q = 0");
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
        return acc * hecke::pow(q, low_);
    }

    /// Highest exponent first, e.g. `q^2 - (1/2)*q + 3 + q^-1`.
    std::string to_string() const
    {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
            const Rational& c = coeffs_[idx];
            if (sgn(c) == 0) continue;
            const int e = low_ + static_cast<int>(idx);
            const bool negative = sgn(c) < 0;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            const Rational a = negative ? Rational(-c) : c;
            std::string coeff = a.get_den() == 1 ? a.get_num().get_str() : "(" + hecke::to_string(a) + ")";
            if (e == 0) {
                out += coeff;
                continue;
            }
            if (a != 1) out += coeff + "*";
            out += "q";
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    LaurentPolynomial& add_scaled(const LaurentPolynomial& o, int sign)
    {
        if (o.coeffs_.empty()) return *this;
        if (coeffs_.empty()) {
            *this = o;
            if (sign < 0)
                for (auto& x : coeffs_) x = -x;
            return *this;
        }
        const int lo = std::min(low_, o.low_);
        const int hi = std::max(high_exponent(), o.high_exponent());
        if (lo < low_) {
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
            low_ = lo;
        }
        if (static_cast<int>(coeffs_.size()) < hi - lo + 1) coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
        const std::size_t off = static_cast<std::size_t>(o.low_ - low_);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            if (sign > 0)
                coeffs_[off + i] += o.coeffs_[i];
            else
                coeffs_[off + i] -= o.coeffs_[i];
        }
        trim();
        return *this;
    }

    void trim()
    {
        std::size_t back = coeffs_.size();
        while (back > 0 && sgn(coeffs_[back - 1]) == 0) --back;
        coeffs_.resize(back);
        std::size_t front = 0;
        while (front < coeffs_.size() && sgn(coeffs_[front]) == 0) ++front;
        if (front > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(front));
            low_ += static_cast<int>(front);
        }
        if (coeffs_.empty()) low_ = 0;
    }

    int low_ = 0;
    std::vector<Rational> coeffs_;
};

namespace detail {

// Dense integer polynomial, index = degree, no trailing zeros.
using IntPoly = std::vector<Integer>;

inline void trim(IntPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

inline Integer content(const IntPoly& p)
{
    Integer g(0);
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline IntPoly primitive_part(IntPoly p)
{
    if (p.empty()) return p;
    Integer g = content(p);
    if (sgn(p.back()) < 0) g = -g;
    if (g != 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b)
{
    const int db = degree(b);
    const Integer& lb = b.back();
    int steps = degree(a) - db + 1;
    while (!a.empty() && degree(a) >= db) {
        const Integer lead = a.back();
        const int shift = degree(a) - db;
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= lead * b[static_cast<std::size_t>(i)];
        trim(a);
        --steps;
    }
    if (steps > 0) {
        Integer f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
        for (auto& c : a) c *= f;
    }
    return a;
}

/// Primitive gcd over Z[x] with positive leading coefficient (subresultant PRS).
inline IntPoly gcd(IntPoly a, IntPoly b)
{
    if (a.empty()) return primitive_part(std::move(b));
    if (b.empty()) return primitive_part(std::move(a));
    if (degree(a) < degree(b)) std::swap(a, b);
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (degree(b) == 0) return IntPoly{Integer(1)};
    Integer g(1), h(1);
    while (true) {
        const int delta = degree(a) - degree(b);
        IntPoly r = pseudo_remainder(a, b);
        if (r.empty()) break;
        if (degree(r) == 0) return IntPoly{Integer(1)};
        Integer hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        const Integer divisor = g * hd;
        for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        a = std::move(b);
        b = std::move(r);
        g = a.back();
        // h <- g^delta / h^(delta - 1)
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            Integer gd, hd1;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
        }
    }
    return primitive_part(std::move(b));
}

/// a / b over Z[x] when b divides a exactly (b primitive suffices by Gauss's lemma).
inline IntPoly divexact(IntPoly a, const IntPoly& b)
{
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    if (a.empty()) return a;
    const int db = degree(b);
    IntPoly quot(static_cast<std::size_t>(std::max(degree(a) - db + 1, 0)));
    const Integer& lb = b.back();
    while (!a.empty() && degree(a) >= db) {
        const int shift = degree(a) - db;
        Integer c;
        if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t()))
            throw Error("internal: inexact polynomial division");
        mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
        for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= c * b[static_cast<std::size_t>(i)];
        quot[static_cast<std::size_t>(shift)] = c;
        trim(a);
    }
    if (!a.empty()) throw Error("internal: inexact polynomial division");
    trim(quot);
    return quot;
}

inline IntPoly multiply(const IntPoly& a, const IntPoly& b)
{
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

/// Writes p = scale * q^low * P with P a primitive integer polynomial, P(0) != 0, lc(P) > 0.
struct IntegerForm {
    Rational scale;
    int low = 0;
    IntPoly poly;
};

inline IntegerForm integer_form(const LaurentPolynomial& p)
{
    IntegerForm f;
    if (p.is_zero()) {
        f.scale = 0;
        return f;
    }
    const auto& c = p.dense();
    Integer den(1);
    for (const auto& x : c)
        if (sgn(x) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    f.poly.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (sgn(c[i]) == 0) continue;
        Integer t;
        mpz_divexact(t.get_mpz_t(), den.get_mpz_t(), c[i].get_den_mpz_t());
        f.poly[i] = c[i].get_num() * t;
    }
    Integer g = content(f.poly);
    if (sgn(f.poly.back()) < 0) g = -g;
    for (auto& x : f.poly) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    f.scale = Rational(g, den);
    f.scale.canonicalize();
    f.low = p.low_exponent();
    return f;
}

inline LaurentPolynomial to_laurent(const IntPoly& p, int low, const Rational& scale)
{
    std::vector<Rational> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (sgn(p[i]) == 0) continue;
        c[i] = scale * Rational(p[i]);
    }
    return LaurentPolynomial::from_dense(low, std::move(c));
}

}  // namespace detail
}  // namespace hecke
