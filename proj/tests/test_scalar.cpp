#include <catch_amalgamated.hpp>

#include <functional>
#include <random>
#include <vector>

#include "hecke/scalar/backend.hpp"
#include "hecke/scalar/laurent.hpp"
#include "hecke/scalar/rational_function.hpp"
#include "hecke/scalar/scalar.hpp"

using namespace hecke;

namespace {

RationalFunction q() { return RationalFunction::q(); }
RationalFunction qp(int k) { return RationalFunction::q_power(k); }
Rational rat(long a, long b = 1) { return make_rational(Integer(a), Integer(b)); }

// Coefficient of t^k in prod_{j=1..p} (1 + q^(2j-p-1) t): the symmetric Gaussian binomial.
LaurentPolynomial binomial_by_expansion(int p, int k)
{
    std::vector<LaurentPolynomial> c(static_cast<std::size_t>(p) + 1);
    c[0] = 1;
    for (int j = 1; j <= p; ++j) {
        const auto w = LaurentPolynomial::monomial(1, 2 * j - p - 1);
        for (int t = j; t >= 1; --t) c[t] += w * c[t - 1];
    }
    return c[static_cast<std::size_t>(k)];
}

}  // namespace

TEST_CASE("laurent: zero coefficients are never stored", "[scalar]")
{
    auto a = LaurentPolynomial::q() + LaurentPolynomial(1);
    auto b = a - LaurentPolynomial::q();
    CHECK(b.is_constant());
    CHECK(b.term_count() == 1);
    CHECK((a - a).is_zero());
    CHECK((a - a).term_count() == 0);
}

TEST_CASE("laurent: multiplication and evaluation agree", "[scalar]")
{
    auto a = LaurentPolynomial::from_terms({{-2, rat(3)}, {1, rat(-1, 2)}});
    auto b = LaurentPolynomial::from_terms({{0, rat(1)}, {3, rat(5)}});
    const Rational x = rat(7, 3);
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
}

TEST_CASE("arith: worked examples", "[scalar]")
{
    CHECK((q() - q()).is_zero());
    const auto inv = q().inverse();
    CHECK(inv.is_laurent());
    CHECK(inv.numerator() == LaurentPolynomial::monomial(1, -1));
    CHECK((q() + q().inverse()).evaluate(rat(3, 2)) == rat(13, 6));
    CHECK_THROWS_AS(RationalFunction().inverse(), DivisionByZero);
}

TEST_CASE("arith: canonical form of a quotient", "[scalar]")
{
    // (q^2 - 1) / (2q - 2) = (q + 1) / 2
    const auto x = (q() * q() - 1) / (2 * q() - 2);
    CHECK(x.is_laurent());
    CHECK(x == (q() + 1) / RationalFunction(2));
    // denominator has lowest exponent 0 and positive leading coefficient
    const auto y = RationalFunction(1) / (rat(-3) * qp(2) + qp(4) * rat(6));
    CHECK(y.denominator().low_exponent() == 0);
    CHECK(sgn(y.denominator().leading_coefficient()) > 0);
    auto z = y;
    z.canonicalize();
    CHECK(z == y);
    CHECK(z.numerator() == y.numerator());
    CHECK(z.denominator() == y.denominator());
}

TEST_CASE("arith: field axioms on a sample", "[scalar]")
{
    const std::vector<RationalFunction> xs = {
        q(), q() + 1, (q() - 1) / (q() + 2), qp(-3) * rat(5, 7), (q() * q() + q() + 1) / (q() * q() - q() + 1)};
    for (const auto& a : xs)
        for (const auto& b : xs) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a - b) + b == a);
            CHECK((a / b) * b == a);
            for (const auto& c : xs) CHECK(a * (b + c) == a * b + a * c);
        }
}

TEST_CASE("scalar: tagged values refuse to mix", "[scalar]")
{
    const auto f = Scalar::formal(q());
    const auto n1 = Scalar::numeric(rat(1), rat(3, 2));
    const auto n2 = Scalar::numeric(rat(1), rat(2));
    CHECK_THROWS_AS(f + n1, BackendMismatch);
    CHECK_THROWS_AS(n1 * n2, BackendMismatch);
    CHECK_THROWS_AS(f == n1, BackendMismatch);
    CHECK((n1 + n1).as_numeric() == 2);
    CHECK(f.evaluate_at(rat(3, 2)) == Scalar::numeric(rat(3, 2), rat(3, 2)));
    CHECK_THROWS_AS(Scalar::numeric(0, rat(2)).inverse(), DivisionByZero);
}

TEST_CASE("q_number: worked examples", "[scalar]")
{
    const FormalBackend fb;
    CHECK(q_number(0, fb).is_zero());
    CHECK(q_number(1, fb) == RationalFunction(1));
    CHECK(q_number(2, fb) == q() + q().inverse());
    CHECK(q_number(3, NumericBackend(rat(2))) == rat(21, 4));
    CHECK_THROWS_AS(q_number(-1, fb), OutOfRange);
    for (int k = 1; k <= 12; ++k) {
        CHECK(!q_number(k, fb).is_zero());
        // (q^k - q^-k) / (q - q^-1)
        CHECK(q_number(k, fb) == (qp(k) - qp(-k)) / (q() - qp(-1)));
    }
}

TEST_CASE("q_number: non-generic q is rejected", "[scalar]")
{
    CHECK_THROWS_AS(q_number(2, NumericBackend(rat(-1))), NonGenericQ);
    CHECK_THROWS_AS(q_number(1, NumericBackend(rat(1))), NonGenericQ);
    CHECK_THROWS_AS(NumericBackend(rat(0)), NonGenericQ);
}

TEST_CASE("q_binomial: examples and symmetry", "[scalar]")
{
    const FormalBackend fb;
    CHECK(q_binomial(2, 1, fb) == q() + qp(-1));
    for (int p = 0; p <= 8; ++p) CHECK(q_binomial(p, p, fb) == RationalFunction(1));
    CHECK(q_binomial(4, 2, fb) == q_number(4, fb) * q_number(3, fb) / q_number(2, fb));
    for (int p = 0; p <= 8; ++p)
        for (int k = 0; k <= p; ++k) {
            CHECK(q_binomial(p, k, fb) == q_binomial(p, p - k, fb));
            CHECK(q_binomial(p, k, fb) == RationalFunction(binomial_by_expansion(p, k)));
        }
    CHECK_THROWS_AS(q_binomial(2, 3, fb), OutOfRange);
    CHECK_THROWS_AS(q_binomial(2, -1, fb), OutOfRange);
}

TEST_CASE("genericity_check", "[scalar]")
{
    CHECK(genericity_check(FormalBackend{}, 10).generic);
    CHECK(genericity_check(NumericBackend(rat(3, 2)), 10).generic);
    const auto one = genericity_check(NumericBackend(rat(1)), 2);
    CHECK(!one.generic);
    CHECK(one.failing_j == 1);
    const auto minus_one = genericity_check(NumericBackend(rat(-1)), 10);
    CHECK(!minus_one.generic);
    CHECK(minus_one.failing_j == 2);
}

TEST_CASE("formal results specialize to numeric results", "[scalar]")
{
    std::mt19937 gen(20240611);
    std::uniform_int_distribution<int> pick(0, 5), small(-4, 4);
    const Rational at = rat(3, 2);
    const NumericBackend nb(at);
    for (int trial = 0; trial < 200; ++trial) {
        RationalFunction f = q();
        Rational v = at;
        for (int step = 0; step < 6; ++step) {
            const int c = small(gen);
            switch (pick(gen)) {
            case 0: f += c; v += c; break;
            case 1: f *= q(); v *= at; break;
            case 2: f = f * f; v = v * v; break;
            case 3:
                if (!f.is_zero() && !is_zero(v)) {
                    f = f.inverse();
                    v = 1 / v;
                }
                break;
            case 4: f -= q_number(3, FormalBackend{}); v -= q_number(3, nb); break;
            default: f *= Rational(c); v *= c; break;
            }
        }
        CHECK(f.evaluate(at) == v);
    }
}

TEST_CASE("literal parser", "[scalar]")
{
    CHECK(parse_scalar_literal("q^-1 + (3/2)*q") == qp(-1) + rat(3, 2) * q());
    CHECK(parse_scalar_literal(" - 2 ") == RationalFunction(-2));
    CHECK(parse_scalar_literal("(q-q^-1)") == q() - qp(-1));
    CHECK(parse_scalar_literal("1/(q+1)") == RationalFunction(1) / (q() + 1));
    CHECK_THROWS_AS(parse_scalar_literal("q^"), ParseError);
    CHECK_THROWS_AS(parse_scalar_literal("q +"), ParseError);
    CHECK_THROWS_AS(parse_scalar_literal("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar_literal("x"), ParseError);
    try {
        parse_scalar_literal("q + *");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
    }
}

TEST_CASE("to_string round-trips through the parser", "[scalar]")
{
    const std::vector<RationalFunction> xs = {RationalFunction(), q() - qp(-1), rat(-3, 4) * qp(5) + 2,
                                              (q() - 1) / (q() * q() + rat(1, 2)), qp(-2) / (q() + 1)};
    for (const auto& x : xs) {
        CAPTURE(x.to_string());
        CHECK(parse_scalar_literal(x.to_string()) == x);
    }
}
