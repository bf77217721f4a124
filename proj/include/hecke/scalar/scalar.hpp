#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "hecke/errors.hpp"
#include "hecke/scalar/backend.hpp"
#include "hecke/scalar/rational.hpp"
#include "hecke/scalar/rational_function.hpp"

namespace hecke {

/// A ground-field element tagged with the backend it was computed on.
///
/// This is the value type that crosses module boundaries (reports, files, the
/// CLI). The heavy lifting happens on the untagged backend value types; mixing
/// a formal and a numeric Scalar, or numeric Scalars at different q, throws
/// BackendMismatch.
class Scalar {
public:
    struct Numeric {
        Rational value;
        Rational q;
        friend bool operator==(const Numeric&, const Numeric&) = default;
    };

    Scalar() : v_(RationalFunction()) {}

    static Scalar formal(RationalFunction x) { return Scalar(std::move(x)); }
    static Scalar numeric(Rational value, Rational q) { return Scalar(Numeric{std::move(value), std::move(q)}); }

    template <Backend B>
    static Scalar from(const value_t<B>& x, const B& b)
    {
        if constexpr (B::is_formal)
            return formal(x);
        else
            return numeric(x, b.q_value());
    }

    bool is_formal() const noexcept { return std::holds_alternative<RationalFunction>(v_); }
    const RationalFunction& as_formal() const { return std::get<RationalFunction>(v_); }
    const Rational& as_numeric() const { return std::get<Numeric>(v_).value; }
    const Rational& numeric_q() const { return std::get<Numeric>(v_).q; }

    bool is_zero() const
    {
        return is_formal() ? as_formal().is_zero() : hecke::is_zero(as_numeric());
    }

    /// Specializes a formal value at q; numeric values must already sit at q.
    Scalar evaluate_at(const Rational& q) const
    {
        if (is_formal()) return numeric(as_formal().evaluate(q), q);
        if (numeric_q() != q) throw BackendMismatch("value lives at q = " + hecke::to_string(numeric_q()));
        return *this;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b)
    {
        return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b)
    {
        return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b)
    {
        return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    friend Scalar operator-(const Scalar& a)
    {
        if (a.is_formal()) return formal(-a.as_formal());
        return numeric(-a.as_numeric(), a.numeric_q());
    }

    Scalar inverse() const
    {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        if (is_formal()) return formal(as_formal().inverse());
        return numeric(1 / as_numeric(), numeric_q());
    }

    /// Field equality; throws BackendMismatch across backends.
    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        check_same(a, b);
        return a.v_ == b.v_;
    }

    std::string to_string() const
    {
        return is_formal() ? as_formal().to_string() : hecke::to_string(as_numeric());
    }

private:
    explicit Scalar(RationalFunction x) : v_(std::move(x)) {}
    explicit Scalar(Numeric x) : v_(std::move(x)) {}

    static void check_same(const Scalar& a, const Scalar& b)
    {
        if (a.is_formal() != b.is_formal()) throw BackendMismatch("formal and numeric scalars mixed");
        if (!a.is_formal() && a.numeric_q() != b.numeric_q())
            throw BackendMismatch("numeric scalars at q = " + hecke::to_string(a.numeric_q()) + " and q = " +
                                  hecke::to_string(b.numeric_q()));
    }

    template <class Op>
    static Scalar combine(const Scalar& a, const Scalar& b, Op op)
    {
        check_same(a, b);
        if (a.is_formal()) return formal(op(a.as_formal(), b.as_formal()));
        return numeric(op(a.as_numeric(), b.as_numeric()), a.numeric_q());
    }

    std::variant<RationalFunction, Numeric> v_;
};

namespace detail {

// expr    := term (('+'|'-') term)*
// term    := unary (('*'|'/') unary)*
// unary   := ('+'|'-') unary | power
// power   := primary ('^' ['+'|'-'] digits)?
// primary := digits | 'q' | '(' expr ')'
class LiteralParser {
public:
    explicit LiteralParser(std::string_view text) : s_(text) {}

    RationalFunction parse()
    {
        RationalFunction r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr()
    {
        RationalFunction acc = term();
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    RationalFunction term()
    {
        RationalFunction acc = unary();
        while (true) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                RationalFunction d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction unary()
    {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RationalFunction power()
    {
        RationalFunction base = primary();
        if (!accept('^')) return base;
        skip_ws();
        bool negative = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            negative = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer exponent after '^'");
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ - start > 6) fail("exponent too large");
        const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
        if (negative && base.is_zero()) fail("negative power of zero");
        RationalFunction b = negative ? base.inverse() : base;
        RationalFunction r(1);
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    }

    RationalFunction primary()
    {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of literal");
        const char c = s_[pos_];
        if (c == 'q') {
            ++pos_;
            return RationalFunction::q();
        }
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RationalFunction(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a scalar literal such as `q^-1 + (3/2)*q` into Q(q).
inline RationalFunction parse_scalar_literal(std::string_view text) { return detail::LiteralParser(text).parse(); }

}  // namespace hecke
