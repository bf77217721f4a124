#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "hecke/errors.hpp"
#include "hecke/scalar/rational.hpp"
#include "hecke/scalar/rational_function.hpp"

namespace hecke {

/// q kept as an indeterminate: values live in Q(q).
struct FormalBackend {
    using value_type = RationalFunction;
    static constexpr bool is_formal = true;

    value_type q() const { return RationalFunction::q(); }
    value_type q_power(int k) const { return RationalFunction::q_power(k); }
    value_type constant(const Rational& c) const { return RationalFunction(c); }
    /// Brings a formal value into this backend (identity here).
    value_type from_formal(const RationalFunction& x) const { return x; }
    std::string name() const { return "formal"; }

    friend bool operator==(const FormalBackend&, const FormalBackend&) { return true; }
};

/// q specialized to a fixed nonzero rational: values live in Q.
class NumericBackend {
public:
    using value_type = Rational;
    static constexpr bool is_formal = false;

    explicit NumericBackend(Rational q) : q_(std::move(q))
    {
        if (is_zero(q_)) throw NonGenericQ("q = 0 is not allowed");
    }

    const Rational& q_value() const noexcept { return q_; }
    value_type q() const { return q_; }
    value_type q_power(int k) const { return hecke::pow(q_, k); }
    value_type constant(const Rational& c) const { return c; }
    value_type from_formal(const RationalFunction& x) const { return x.evaluate(q_); }
    std::string name() const { return hecke::to_string(q_); }

    friend bool operator==(const NumericBackend& a, const NumericBackend& b) { return a.q_ == b.q_; }

private:
    Rational q_;
};

template <class B>
concept Backend = requires(const B& b, const RationalFunction& f, const Rational& r, int k) {
    typename B::value_type;
    { B::is_formal } -> std::convertible_to<bool>;
    { b.q() } -> std::same_as<typename B::value_type>;
    { b.q_power(k) } -> std::same_as<typename B::value_type>;
    { b.constant(r) } -> std::same_as<typename B::value_type>;
    { b.from_formal(f) } -> std::same_as<typename B::value_type>;
    { b.name() } -> std::convertible_to<std::string>;
};

template <Backend B>
using value_t = typename B::value_type;

struct GenericityReport {
    bool generic = true;
    int bound = 0;
    std::optional<int> failing_j;  // first j with q^j = 1 or j_q = 0
    std::string reason;
};

/// Formal q always passes. A rational q fails at the first j <= bound with q^j = 1.
/// For rational q that only happens at q = 1 (j = 1) and q = -1 (j = 2); j_q = 0 is
/// then implied, so the two conditions coincide.
inline GenericityReport genericity_check(const FormalBackend&, int bound)
{
    GenericityReport r;
    r.bound = bound;
    return r;
}

inline GenericityReport genericity_check(const NumericBackend& b, int bound)
{
    GenericityReport r;
    r.bound = bound;
    Rational power(1);
    for (int j = 1; j <= bound; ++j) {
        power *= b.q_value();
        if (power == 1) {
            r.generic = false;
            r.failing_j = j;
            r.reason = "q^" + std::to_string(j) + " = 1 (q = " + b.name() + " is a root of unity)";
            return r;
        }
    }
    return r;
}

namespace detail {
inline LaurentPolynomial q_number_poly(int k)
{
    // k_q = q^(k-1) + q^(k-3) + ... + q^(1-k)
    std::map<int, Rational> terms;
    for (int j = 0; j < k; ++j) terms[k - 1 - 2 * j] = 1;
    return LaurentPolynomial::from_terms(terms);
}

template <Backend B>
void require_generic(const B& b, int bound)
{
    if constexpr (!B::is_formal) {
        auto rep = genericity_check(b, bound);
        if (!rep.generic) throw NonGenericQ(rep.reason);
    }
}
}  // namespace detail

/// (q^k - q^-k) / (q - q^-1).
template <Backend B>
value_t<B> q_number(int k, const B& b)
{
    if (k < 0) throw OutOfRange("q_number needs k >= 0, got " + std::to_string(k));
    detail::require_generic(b, k);
    return b.from_formal(RationalFunction(detail::q_number_poly(k)));
}

/// 1_q 2_q ... k_q.
template <Backend B>
value_t<B> q_factorial(int k, const B& b)
{
    value_t<B> acc = b.constant(1);
    for (int j = 2; j <= k; ++j) acc *= q_number(j, b);
    return acc;
}

/// Gaussian binomial p_q! / (k_q! (p-k)_q!).
template <Backend B>
value_t<B> q_binomial(int p, int k, const B& b)
{
    if (k < 0 || p < 0 || k > p)
        throw OutOfRange("q_binomial needs 0 <= k <= p, got p=" + std::to_string(p) + " k=" + std::to_string(k));
    detail::require_generic(b, p);
    // prod_{j=1..k} [p-k+j]_q / [j]_q, assembled as one formal quotient
    LaurentPolynomial num(1), den(1);
    for (int j = 1; j <= k; ++j) {
        num *= detail::q_number_poly(p - k + j);
        den *= detail::q_number_poly(j);
    }
    return b.from_formal(RationalFunction(num, den));
}

}  // namespace hecke
