#include <catch_amalgamated.hpp>

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "hecke/scalar/backend.hpp"
#include "hecke/symfunc/partition.hpp"
#include "hecke/symfunc/schur.hpp"

using namespace hecke;
using RF = RationalFunction;

namespace {

using Monomials = std::map<std::vector<int>, long long>;

// Every semistandard filling of lambda with entries 1..n, reported by content vector.
void for_each_ssyt(const Partition& lambda, int n, const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < lambda.height(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) cells.emplace_back(i, j);
    std::map<std::pair<int, int>, int> fill;
    std::vector<int> content(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            visit(content);
            return;
        }
        const auto [i, j] = cells[idx];
        int lo = 1;
        if (j > 0) lo = std::max(lo, fill[{i, j - 1}]);
        if (i > 0) lo = std::max(lo, fill[{i - 1, j}] + 1);
        for (int v = lo; v <= n; ++v) {
            fill[{i, j}] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            rec(idx + 1);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(0);
}

Monomials schur_monomials(const Partition& lambda, int n)
{
    Monomials m;
    for_each_ssyt(lambda, n, [&](const std::vector<int>& c) { ++m[c]; });
    return m;
}

Monomials times(const Monomials& a, const Monomials& b)
{
    Monomials r;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) {
            auto z = x;
            for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
            r[z] += cx * cy;
        }
    return r;
}

// Expands s_lambda s_mu in Schur functions by peeling off lex-leading monomials.
std::map<Partition, long long> lr_by_monomials(const Partition& lambda, const Partition& mu)
{
    const int total = lambda.weight() + mu.weight();
    const int n = std::max(total, 1);
    auto poly = times(schur_monomials(lambda, n), schur_monomials(mu, n));
    std::map<Partition, long long> out;
    for (const auto& nu : partitions(total)) {
        std::vector<int> key(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < nu.height(); ++i) key[static_cast<std::size_t>(i)] = nu.part(i);
        const long long c = poly.count(key) ? poly[key] : 0;
        if (c == 0) continue;
        out[nu] = c;
        for (const auto& [mono, k] : schur_monomials(nu, n)) poly[mono] -= c * k;
    }
    return out;
}

RF schur_by_ssyt(const Partition& lambda, int p)
{
    RF acc(0);
    for_each_ssyt(lambda, p, [&](const std::vector<int>& c) {
        int e = 0;
        for (int v = 1; v <= p; ++v) e += c[static_cast<std::size_t>(v - 1)] * (p + 1 - 2 * v);
        acc += RF::q_power(e);
    });
    return acc;
}

long ssyt_count(const Partition& lambda, int p)
{
    long n = 0;
    for_each_ssyt(lambda, p, [&](const std::vector<int>&) { ++n; });
    return n;
}

std::vector<Partition> all_partitions_upto(int m)
{
    std::vector<Partition> out;
    for (int k = 0; k <= m; ++k)
        for (const auto& p : partitions(k)) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("partitions: order and counts", "[symfunc]")
{
    CHECK(partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(6).size() == 11);
    CHECK_THROWS_AS(Partition({1, 2}), OutOfRange);
    CHECK(Partition::parse("(2,1^2)") == Partition{2, 1, 1});
    CHECK(Partition::parse("3 1") == Partition{3, 1});
    CHECK(Partition::parse("()").empty());
    CHECK_THROWS_AS(Partition::parse("2,x"), ParseError);
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{2}.plus_column(2) == Partition{3, 1});
}

TEST_CASE("standard_tableaux: counts and ordering", "[symfunc]")
{
    CHECK(standard_tableaux(Partition{4}).size() == 1);
    CHECK(standard_tableaux(Partition{2, 1}).size() == 2);
    CHECK(standard_tableaux(Partition{2, 2}).size() == 2);
    for (int m = 0; m <= 6; ++m) {
        long long sum = 0, fact = 1;
        for (int k = 2; k <= m; ++k) fact *= k;
        for (const auto& lambda : partitions(m)) {
            const auto ts = standard_tableaux(lambda);
            CHECK(static_cast<long long>(ts.size()) == count_standard_tableaux(lambda));
            sum += static_cast<long long>(ts.size() * ts.size());
            REQUIRE(!ts.empty());
            CHECK(ts.front() == StandardTableau::column_major(lambda));
            for (std::size_t i = 2; i < ts.size(); ++i) CHECK(ts[i - 1].reading_word() < ts[i].reading_word());
        }
        CHECK(sum == fact);
    }
    const auto t = standard_tableaux(Partition{2, 1});
    CHECK(t[0].to_string() == "1,3/2");
    CHECK(t[1].to_string() == "1,2/3");
    CHECK(t[0].content(2) == -1);
    CHECK(t[1].content(2) == 1);
    CHECK(t[0].shape_upto(2) == Partition{1, 1});
    CHECK_THROWS_AS(StandardTableau({{2, 1}}), OutOfRange);
}

TEST_CASE("lr_expand: examples", "[symfunc]")
{
    CHECK(lr_expand({1}, {1}) == std::map<Partition, long long>{{{2}, 1}, {{1, 1}, 1}});
    CHECK(lr_expand({1}, {2, 1}) == std::map<Partition, long long>{{{3, 1}, 1}, {{2, 2}, 1}, {{2, 1, 1}, 1}});
    CHECK(lr_expand({}, {3, 1}) == std::map<Partition, long long>{{{3, 1}, 1}});
    CHECK(lr_expand({2, 1}, {2, 1}).at(Partition{3, 2, 1}) == 2);
}

TEST_CASE("lr_expand: agrees with the monomial-expansion oracle", "[symfunc]")
{
    const auto ps = all_partitions_upto(4);
    for (const auto& a : ps)
        for (const auto& b : ps) {
            if (a.weight() + b.weight() > 6) continue;
            CAPTURE(a.to_string(), b.to_string());
            const auto lr = lr_expand(a, b);
            CHECK(lr == lr_by_monomials(a, b));
            CHECK(lr == lr_expand(b, a));
            for (const auto& [nu, c] : lr) {
                CHECK(nu.contains(a));
                CHECK(nu.contains(b));
                CHECK(c > 0);
            }
        }
}

TEST_CASE("schur_principal: examples and oracle", "[symfunc]")
{
    const FormalBackend fb;
    for (int p = 1; p <= 4; ++p) {
        CHECK(schur_principal({1}, p, fb) == q_number(p, fb));
        std::vector<int> col(static_cast<std::size_t>(p), 1);
        CHECK(schur_principal(Partition(col), p, fb) == RF(1));
    }
    CHECK(schur_principal({2}, 2, fb) == q_number(3, fb));
    CHECK(schur_principal({1, 1, 1}, 2, fb).is_zero());
    for (int p = 1; p <= 3; ++p)
        for (const auto& lambda : all_partitions_upto(4)) {
            CAPTURE(p, lambda.to_string());
            const auto s = schur_principal(lambda, p, fb);
            CHECK(s == schur_by_ssyt(lambda, p));
            CHECK(s.is_laurent());
            // palindromic: invariant under q -> q^-1
            const auto& num = s.numerator();
            for (int e = num.low_exponent(); e <= num.high_exponent(); ++e) CHECK(num.coefficient(e) == num.coefficient(-e));
            // adding a full column of height p changes nothing
            CHECK(schur_principal(lambda.plus_column(p), p, fb) == s);
        }
    CHECK(schur_principal({2, 1}, 3, NumericBackend(Rational(3, 2))) ==
          schur_principal({2, 1}, 3, fb).evaluate(Rational(3, 2)));
    CHECK_THROWS_AS(schur_principal({2}, 2, NumericBackend(Rational(-1))), NonGenericQ);
}

TEST_CASE("am_evaluate: q-binomial functional is the principal specialization", "[symfunc]")
{
    const FormalBackend fb;
    for (int p = 1; p <= 4; ++p) {
        const auto f = AMFunctional<RF>::q_binomials(p, fb);
        for (const auto& lambda : all_partitions_upto(4)) {
            CAPTURE(p, lambda.to_string());
            CHECK(am_evaluate(f, lambda) == schur_principal(lambda, p, fb));
        }
    }
}

TEST_CASE("am_evaluate: classical binomials count tableaux", "[symfunc]")
{
    for (int p = 1; p <= 4; ++p) {
        const auto f = AMFunctional<Rational>::classical(p);
        for (const auto& lambda : all_partitions_upto(5)) CHECK(am_evaluate(f, lambda) == ssyt_count(lambda, p));
    }
    const auto one = AMFunctional<Rational>::classical(1);
    for (const auto& lambda : all_partitions_upto(5))
        CHECK(am_evaluate(one, lambda) == (lambda.height() <= 1 ? 1 : 0));
    CHECK_THROWS_AS(AMFunctional<Rational>(2, {1, 3, 2}), OutOfRange);
}

TEST_CASE("am_multiplicativity_check", "[symfunc]")
{
    const FormalBackend fb;
    const auto fq = AMFunctional<RF>::q_binomials(3, fb);
    const auto r1 = am_multiplicativity_check(fq, {1}, {1});
    CHECK(r1.ok);
    CHECK(r1.lhs == am_evaluate(fq, {2}) + am_evaluate(fq, {1, 1}));
    CHECK(am_multiplicativity_check(fq, {1}, {2, 1}).ok);

    std::mt19937 gen(99);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 5; ++trial) {
        const AMFunctional<Rational> f(3, {1, make_rational(d(gen), 7), make_rational(d(gen), 5), 1});
        for (const auto& a : all_partitions_upto(3))
            for (const auto& b : all_partitions_upto(3)) {
                if (a.weight() + b.weight() > 5) continue;
                CHECK(am_multiplicativity_check(f, a, b).ok);
            }
    }
}
