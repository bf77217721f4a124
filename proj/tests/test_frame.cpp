#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "hecke/frame/frame.hpp"
#include "hecke/frame/io.hpp"
#include "hecke/heckealg/representation.hpp"
#include "hecke/symmetry/hecke_symmetry.hpp"

using namespace hecke;
using RF = RationalFunction;
using Op = TensorOperator<RF>;
using Rep = HeckeRepresentation<FormalBackend>;

namespace {

RF q() { return RF::q(); }
RF qp(int k) { return RF::q_power(k); }

template <Backend B>
HeckeSymmetry<B> validated(HeckeSymmetry<B> h)
{
    REQUIRE(validate(h).ok());
    return h;
}

Rep uq(int n) { return Rep(validated(build_uq_sln(n, FormalBackend{}))); }

Rep scalar_r(int n, const RF& c) { return Rep(validated(HeckeSymmetry<FormalBackend>(FormalBackend{}, Op::scalar(n, 2, c)))); }

template <class V>
std::vector<V> act(const TensorOperator<V>& a, const std::vector<V>& x)
{
    std::vector<V> y(a.dim(), V(0));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!is_zero(a(i, j)) && !is_zero(x[j])) y[i] += a(i, j) * x[j];
    return y;
}

long binomial(int n, int k)
{
    long c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

}  // namespace

TEST_CASE("detect_rank: U_q(sl(n)) and degenerate symmetries", "[frame]")
{
    CHECK(detect_rank(uq(1)) == 1);
    CHECK(detect_rank(uq(2)) == 2);
    CHECK(detect_rank(uq(3)) == 3);
    CHECK(idempotent_rank(uq(3).antisymmetrizer(2)) == 3);

    // scalar R = q: A^(2) = 0 while rank A^(1) = n > 1
    CHECK_THROWS_AS(detect_rank(scalar_r(2, q())), NotEven);
    // scalar R = -1/q: every A^(k) is the identity, so no rank ever drops to one
    CHECK_THROWS_AS(detect_rank(scalar_r(2, -qp(-1))), NotEven);
    // n = 1 with R = -1/q: rank one forever, the next rank never vanishes
    CHECK_THROWS_AS(detect_rank(scalar_r(1, -qp(-1))), NotEven);
    CHECK_THROWS_AS(detect_rank(uq(2), 1), OutOfRange);
    CHECK_THROWS_AS(detect_rank(uq(3), 2), NotEven);
}

TEST_CASE("idempotent_rank agrees with elimination", "[frame]")
{
    const Rep rep = uq(2);
    for (int k = 1; k <= 4; ++k) {
        CHECK(idempotent_rank(rep.antisymmetrizer(k)) == rank(rep.antisymmetrizer(k)));
        CHECK(idempotent_rank(rep.symmetrizer(k)) == rank(rep.symmetrizer(k)));
    }
    // not an idempotent: the trace 2q is no integer, so elimination decides
    CHECK(idempotent_rank(Op::scalar(2, 1, q())) == 2);
}

TEST_CASE("poincare_series: binomial minus series and the Koszul relation", "[frame]")
{
    for (int n = 1; n <= 3; ++n) {
        const Rep rep = uq(n);
        const auto s = poincare_series(rep, n, n == 3 ? 4 : 5);
        std::vector<long> minus, plus;
        for (int k = 0; k <= n; ++k) minus.push_back(binomial(n, k));
        for (int l = 0; l <= (n == 3 ? 4 : 5); ++l) plus.push_back(binomial(n + l - 1, l));
        CAPTURE(n);
        CHECK(s.minus_coeffs == minus);
        CHECK(s.plus_coeffs == plus);
        CHECK(s.minus_coeffs.front() == 1);
        CHECK(s.minus_coeffs.back() == 1);
    }
    // a wrong rank breaks the relation at t^2: 3 - 2*2 + 0 != 0
    CHECK_THROWS_AS(poincare_series(uq(2), 1, 5), RelationViolated);
    CHECK_THROWS_AS(poincare_series(uq(2), 0, 5), OutOfRange);
}

TEST_CASE("extract_uv: examples", "[frame]")
{
    const Rep rep = uq(2);
    const auto f = extract_uv(rep, 2);
    const RF two = q_number(2, FormalBackend{});
    CHECK(f.v == std::vector<RF>{RF(0), RF(1), -qp(-1), RF(0)});
    CHECK(f.u == std::vector<RF>{RF(0), q() / two, RF(-1) / two, RF(0)});

    const auto one = extract_uv(uq(1), 1);
    CHECK(one.u == std::vector<RF>{RF(1)});
    CHECK(one.v == std::vector<RF>{RF(1)});

    for (int n = 2; n <= 3; ++n) {
        const Rep r = uq(n);
        const auto& a = r.antisymmetrizer(n);
        const auto uv = extract_uv(r, n);
        RF dot(0);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            dot += uv.u[i] * uv.v[i];
            for (std::size_t j = 0; j < a.dim(); ++j) CHECK(uv.v[i] * uv.u[j] == a(i, j));
        }
        CHECK(dot == RF(1));
    }
    CHECK_THROWS_AS(extract_uv(rep, 1), RankNotOne);
    CHECK_THROWS_AS(extract_uv(rep, 3), RankNotOne);
}

TEST_CASE("frame_matrices: U_q(sl(n)) and the M N identity", "[frame]")
{
    for (int n = 1; n <= 3; ++n) {
        const Rep rep = uq(n);
        const auto nm = frame_matrices(rep, n, extract_uv(rep, n));
        CAPTURE(n);
        CHECK(nm.n_matrix == Op::scalar(n, 1, q()));
        CHECK(nm.m_matrix == Op::scalar(n, 1, q()));
        CHECK(multiply(nm.m_matrix, nm.n_matrix) == Op::scalar(n, 1, qp(2)));
    }

    const Rep rep = uq(2);
    auto bad = extract_uv(rep, 2);
    bad.u[1] += RF(1);
    CHECK_THROWS_AS(frame_matrices(rep, 2, bad), IdentityViolated);
    auto short_uv = extract_uv(rep, 2);
    short_uv.u.pop_back();
    CHECK_THROWS_AS(frame_matrices(rep, 2, short_uv), ShapeMismatch);
}

TEST_CASE("frame_matrices: gauge invariance", "[frame]")
{
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> d(1, 9);
    for (int n = 2; n <= 3; ++n) {
        const Rep rep = uq(n);
        const auto uv = extract_uv(rep, n);
        const auto base = frame_matrices(rep, n, uv);
        for (int trial = 0; trial < 4; ++trial) {
            const RF c = RF(make_rational(d(gen) * (trial % 2 ? -1 : 1), d(gen))) * qp(trial - 2);
            auto scaled = uv;
            for (auto& x : scaled.v) x *= c;
            for (auto& x : scaled.u) x /= c;
            const auto nm = frame_matrices(rep, n, scaled);
            CHECK(nm.n_matrix == base.n_matrix);
            CHECK(nm.m_matrix == base.m_matrix);
        }
    }
}

TEST_CASE("frame: transport of v through the braiding", "[frame]")
{
    // R_1 ... R_p (v (x) e_x) = sum_i (e_i (x) v) N^i_x and
    // R_p ... R_1 (e_x (x) v) = sum_i (v (x) e_i) M^i_x on V^(p+1)
    for (int n = 2; n <= 3; ++n) {
        const Rep rep = uq(n);
        const int p = n;
        const auto uv = extract_uv(rep, p);
        const auto nm = frame_matrices(rep, p, uv);
        Op forward = Op::identity(n, p + 1), backward = Op::identity(n, p + 1);
        for (int i = 1; i <= p; ++i) {
            forward = multiply(forward, rep.generator(i, p + 1));
            backward = multiply(backward, rep.generator(p + 1 - i, p + 1));
        }
        const std::size_t vd = uv.v.size();
        const auto un = static_cast<std::size_t>(n);
        for (std::size_t x = 0; x < un; ++x) {
            std::vector<RF> vx(vd * un, RF(0)), xv(vd * un, RF(0));
            for (std::size_t a = 0; a < vd; ++a) {
                vx[a * un + x] = uv.v[a];
                xv[x * vd + a] = uv.v[a];
            }
            std::vector<RF> want_n(vd * un, RF(0)), want_m(vd * un, RF(0));
            for (std::size_t i = 0; i < un; ++i)
                for (std::size_t a = 0; a < vd; ++a) {
                    want_n[i * vd + a] += uv.v[a] * nm.n_matrix(i, x);
                    want_m[a * un + i] += uv.v[a] * nm.m_matrix(i, x);
                }
            CAPTURE(n, x);
            CHECK(act(forward, vx) == want_n);
            CHECK(act(backward, xv) == want_m);
        }
    }
}

TEST_CASE("naturality_report: U_q(sl(2)) and U_q(sl(3))", "[frame]")
{
    const auto f2 = naturality_report(uq(2));
    CHECK(f2.p == 2);
    CHECK(f2.natural);
    CHECK(f2.classification == FrameClass::scalar_equal);
    REQUIRE(f2.epsilon.has_value());
    CHECK(*f2.epsilon == 1);
    REQUIRE(f2.renorm.has_value());
    CHECK(f2.renorm->to_string() == "(q)^(-1/2)");
    CHECK(f2.detq_central);
    CHECK(f2.poincare.plus_coeffs == std::vector<long>{1, 2, 3, 4, 5, 6});

    const auto f3 = naturality_report(uq(3), 3);
    CHECK(f3.p == 3);
    CHECK(f3.natural);
    REQUIRE(f3.epsilon.has_value());
    CHECK(f3.n_matrix == Op::scalar(3, 1, q() * RF(static_cast<long>(*f3.epsilon))));
    CHECK(f3.m_matrix == f3.n_matrix);

    CHECK_THROWS_AS(naturality_report(scalar_r(2, q())), NotEven);
}

TEST_CASE("naturality_report: numeric backend matches the formal one", "[frame]")
{
    const Rational at(3, 2);
    const HeckeRepresentation<NumericBackend> rn(validated(build_uq_sln(3, NumericBackend(at))));
    const auto fn = naturality_report(rn, 3);
    const auto ff = naturality_report(uq(3), 3);
    CHECK(fn.p == ff.p);
    CHECK(fn.poincare.minus_coeffs == ff.poincare.minus_coeffs);
    CHECK(fn.poincare.plus_coeffs == ff.poincare.plus_coeffs);
    CHECK(fn.n_matrix == ff.n_matrix.map([&](const RF& x) { return x.evaluate(at); }));
    for (std::size_t i = 0; i < fn.u.size(); ++i) {
        CHECK(fn.u[i] == ff.u[i].evaluate(at));
        CHECK(fn.v[i] == ff.v[i].evaluate(at));
    }
    CHECK(fn.epsilon == ff.epsilon);
}

TEST_CASE("frame report serialization", "[frame]")
{
    const auto f = naturality_report(uq(2), 3);
    const auto j = to_json(f);
    CHECK(j["p"] == 2);
    CHECK(j["poincare"]["minus"] == nlohmann::json::array({1, 2, 1}));
    CHECK(j["poincare"]["plus"] == nlohmann::json::array({1, 2, 3, 4}));
    CHECK(j["natural"] == true);
    CHECK(j["epsilon"] == 1);
    CHECK(j["N"][0][0] == "q");
    CHECK(j["N"][0][1] == "0");
    CHECK(j["renormalization"]["sign"] == 1);
    CHECK(j["renormalization"]["exponent"] == "-1/2");
    const auto text = to_text(f);
    CHECK(text.find("rank p = 2") != std::string::npos);
    CHECK(text.find("natural: yes (epsilon = +1)") != std::string::npos);
    CHECK(text.find("P_-(t) coefficients: 1, 2, 1") != std::string::npos);
}
