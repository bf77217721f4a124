#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "oracles.hpp"

#include "hecke/qtrace/io.hpp"
#include "hecke/qtrace/qtrace.hpp"

using namespace hecke;
using RF = RationalFunction;
using Op = TensorOperator<RF>;
using Rep = HeckeRepresentation<FormalBackend>;
using Ctx = TraceContext<FormalBackend>;

namespace {

RF q() { return RF::q(); }
RF qp(int k) { return RF::q_power(k); }
RF qn(int k) { return q_number(k, FormalBackend{}); }

Rep uq(int n)
{
    auto h = build_uq_sln(n, FormalBackend{});
    REQUIRE(validate(h).ok());
    return Rep(std::move(h));
}

std::vector<Partition> upto(int m)
{
    std::vector<Partition> out;
    for (int k = 0; k <= m; ++k)
        for (const auto& p : partitions(k)) out.push_back(p);
    return out;
}

Op random_rf(std::mt19937& gen)
{
    return oracle::random_operator(2, 3, gen).map([](const Rational& x) { return RF(x); });
}

}  // namespace

TEST_CASE("c_lambda: examples", "[qtrace]")
{
    const Rep rep = uq(2);
    const auto ctx = make_trace_context(rep, 2);
    const auto& c = ctx.c().entries;
    CHECK(c_lambda(ctx, StandardTableau::column_major({1})) == c);
    CHECK(c_lambda(ctx, StandardTableau::column_major({1, 1})) ==
          multiply(rep.antisymmetrizer(2), tensor_product(c, c)));

    const Rep r3 = uq(3);
    const auto ctx3 = make_trace_context(r3, 2);
    const auto c21 = c_lambda(ctx3, StandardTableau::column_major({2, 1}));
    CHECK(c21.dim() == 27);
    CHECK(ctx3.backend().q_power(9) * trace(c21) == qn(2) * qn(4));
}

TEST_CASE("quantum_trace: examples and precondition", "[qtrace]")
{
    const Rep rep = uq(2);
    const auto ctx = make_trace_context(rep, 2);
    const auto t1 = StandardTableau::column_major({1});
    const auto t11 = StandardTableau::column_major({1, 1});
    CHECK(quantum_trace(ctx, t1, Op::identity(2, 1)) == q() + qp(-1));
    CHECK(quantum_trace(ctx, t11, rep.antisymmetrizer(2)) == RF(1));
    CHECK_THROWS_AS(quantum_trace(ctx, t11, Op::identity(2, 2)), NotEndomorphism);
    CHECK_THROWS_AS(quantum_trace(ctx, t11, rep.symmetrizer(2)), NotEndomorphism);
}

TEST_CASE("quantum_trace: linear and invariant under Jucys-Murphy conjugation", "[qtrace]")
{
    const Rep rep = uq(2);
    const auto ctx = make_trace_context(rep, 2);
    std::mt19937 gen(11);
    const auto t = standard_tableaux({2, 1})[1];
    const auto& y = rep.primitive_idempotent(t).op;
    auto sandwich = [&](const Op& g) { return multiply(multiply(y, g), y); };
    const auto f = sandwich(random_rf(gen));
    const auto g = sandwich(random_rf(gen));
    const RF a = RF(Rational(3)) * q(), b = RF(make_rational(-2, 5));
    CHECK(quantum_trace(ctx, t, f * a + g * b) == quantum_trace(ctx, t, f) * a + quantum_trace(ctx, t, g) * b);

    // J_k are invertible words commuting with every Y_T
    for (int k = 2; k <= 3; ++k) {
        const auto& j = rep.jucys_murphy(3, k);
        const auto jinv = invert(j);
        CHECK(multiply(j, y) == multiply(y, j));
        CHECK(quantum_trace(ctx, t, multiply(multiply(j, f), jinv)) == quantum_trace(ctx, t, f));
    }
    // any braid word commutes with C (x) C (x) C, so the plain normalized trace is conjugation invariant
    const auto w = rep.rho_word({{1, 1}, {2, -1}, {1, 1}}, 3);
    const auto winv = rep.rho_word({{1, -1}, {2, 1}, {1, -1}}, 3);
    REQUIRE(multiply(w, winv) == Op::identity(2, 3));
    const auto c3 = multiply_sitewise(Op::identity(2, 3), ctx.c().entries);
    CHECK(trace_of_product(multiply(multiply(w, f), winv), c3) == trace_of_product(f, c3));
}

TEST_CASE("qdim: examples", "[qtrace]")
{
    const Rep r2 = uq(2);
    const auto c2 = make_trace_context(r2, 2);
    CHECK(qdim(c2, {1}) == qn(2));
    CHECK(qdim(c2, {1, 1}) == RF(1));
    CHECK(qdim(c2, {}) == RF(1));
    CHECK(qdim(c2, {3}) == qn(4));
    CHECK(qdim(c2, {1, 1, 1}).is_zero());

    const Rep r3 = uq(3);
    const auto c3 = make_trace_context(r3, 2);
    CHECK(qdim(c3, {1, 1, 1}) == RF(1));
    CHECK(qdim(c3, {2, 1}) == qn(2) * qn(4));
    const auto e = qdim_entry(c3, {2, 1});
    CHECK(e.agree);
    CHECK(e.classical == 8);
}

TEST_CASE("dimension_table: trace and hook-content agree for |lambda| <= 4", "[qtrace]")
{
    for (int n = 2; n <= 3; ++n) {
        const Rep rep = uq(n);
        const auto ctx = make_trace_context(rep, 2);
        const auto table = dimension_table(ctx, 4);
        CHECK(table.size() == 1 + 2 + 3 + 5);
        for (const auto& e : table) {
            CAPTURE(n, e.lambda.to_string());
            CHECK(e.agree);
            CHECK(e.classical == schur_principal(e.lambda, n, FormalBackend{}).evaluate(Rational(1)));
        }
    }
}

TEST_CASE("qdim: additivity over the tableau decomposition of V^m", "[qtrace]")
{
    for (int n = 2; n <= 3; ++n) {
        const Rep rep = uq(n);
        const auto ctx = make_trace_context(rep, 2);
        for (int m = 1; m <= 3; ++m) {
            RF sum(0), power(1);
            for (int k = 0; k < m; ++k) power *= qn(n);
            for (const auto& lambda : partitions(m))
                for (const auto& t : standard_tableaux(lambda))
                    sum += quantum_trace(ctx, t, rep.primitive_idempotent(t).op);
            const auto whole = ctx.backend().q_power(n * m) * trace(multiply_sitewise(Op::identity(n, m), ctx.c().entries));
            CHECK(sum == power);
            CHECK(whole == power);
        }
    }
}

TEST_CASE("lemma_omega_table: examples", "[qtrace]")
{
    const Rep r2 = uq(2);
    const auto l2 = lemma_omega_table(make_trace_context(r2, 2));
    REQUIRE(l2.rows.size() == 2);
    CHECK(l2.ok());
    CHECK(l2.rows[0].lhs == qp(-2) * qn(2));
    CHECK(l2.rows[1].lhs == qp(-4));
    CHECK(l2.generating == std::vector<RF>{RF(1), qn(2), RF(1)});

    const Rep r3 = uq(3);
    const auto l3 = lemma_omega_table(make_trace_context(r3, 2));
    REQUIRE(l3.rows.size() == 3);
    CHECK(l3.ok());
    CHECK(l3.rows[1].lhs == qp(-6) * qn(3));
}

TEST_CASE("reduction_check: examples", "[qtrace]")
{
    const Rep r2 = uq(2);
    const auto ctx = make_trace_context(r2, 2);
    const auto e = reduction_check(ctx, {});
    CHECK(e.ok);
    CHECK(e.lambda == Partition{1, 1});
    CHECK(e.qdim_lambda == RF(1));
    CHECK(reduction_check(ctx, {1}).qdim_lambda == qn(2));
    CHECK(reduction_check(ctx, {2}).qdim_lambda == qn(3));
    CHECK_THROWS_AS(reduction_check(ctx, {1, 1, 1}), OutOfRange);
    for (const auto& mu : upto(2))
        if (mu.height() <= 2) CHECK(reduction_check(ctx, mu).ok);
}

TEST_CASE("tableau_independence_check: examples", "[qtrace]")
{
    const Rep r2 = uq(2);
    const auto t2 = tableau_independence_check(make_trace_context(r2, 2), {2, 1});
    CHECK(t2.ok);
    REQUIRE(t2.values.size() == 2);
    CHECK(t2.values[0].second == qn(2));

    const Rep r3 = uq(3);
    const auto c3 = make_trace_context(r3, 2);
    const auto t3 = tableau_independence_check(c3, {2, 1});
    CHECK(t3.ok);
    CHECK(t3.values[1].second == qn(2) * qn(4));
    CHECK(tableau_independence_check(c3, {2, 2}).ok);
    CHECK_THROWS_AS(tableau_independence_check(c3, {3}), OutOfRange);
}

TEST_CASE("qdim_multiplicativity for |lambda| + |mu| <= 4", "[qtrace]")
{
    for (int n = 2; n <= 3; ++n) {
        const Rep rep = uq(n);
        const auto ctx = make_trace_context(rep, 2);
        for (const auto& a : upto(4))
            for (const auto& b : upto(4)) {
                if (a.weight() + b.weight() > 4) continue;
                CAPTURE(n, a.to_string(), b.to_string());
                CHECK(qdim_multiplicativity(ctx, a, b).ok);
            }
    }
}

TEST_CASE("trace context rejects an inconsistent frame", "[qtrace]")
{
    const Rep rep = uq(2);
    auto frame = naturality_report(rep, 2);
    frame.p = 3;
    CHECK_THROWS_AS(Ctx(rep, frame), CrossCheckFailed);
}

TEST_CASE("numeric backend matches the formal dimension table", "[qtrace]")
{
    const Rational at(3, 2);
    auto hn = build_uq_sln(3, NumericBackend(at));
    REQUIRE(validate(hn).ok());
    const HeckeRepresentation<NumericBackend> rn(std::move(hn));
    const auto cn = make_trace_context(rn, 2);
    const Rep rf = uq(3);
    const auto cf = make_trace_context(rf, 2);
    const auto tn = dimension_table(cn, 3);
    const auto tf = dimension_table(cf, 3);
    REQUIRE(tn.size() == tf.size());
    for (std::size_t i = 0; i < tn.size(); ++i) {
        CHECK(tn[i].agree);
        CHECK(tn[i].trace_value == tf[i].trace_value.evaluate(at));
        CHECK(tn[i].classical == tf[i].classical);
    }
}

TEST_CASE("dimension table serialization", "[qtrace]")
{
    const Rep rep = uq(2);
    const auto ctx = make_trace_context(rep, 2);
    const auto table = dimension_table(ctx, 2);
    const auto j = to_json(table);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["lambda"] == "(1)");
    CHECK(j[0]["agree"] == true);
    CHECK(j[0]["classical"] == "2");
    CHECK(j[2]["lambda"] == "(1,1)");
    CHECK(j[2]["trace"] == "1");
    const auto text = to_text(table);
    CHECK(text.rfind("lambda", 0) == 0);
    CHECK(text.find("(1,1)") != std::string::npos);
    const auto lj = to_json(lemma_omega_table(ctx));
    CHECK(lj["ok"] == true);
    CHECK(lj["rows"].size() == 2);
}
