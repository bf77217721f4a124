#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/heckealg/representation.hpp"
#include "hecke/scalar/backend.hpp"
#include "hecke/tensor/linalg.hpp"
#include "hecke/tensor/tensor_operator.hpp"

namespace hecke {

/// Smallest p with rank A^(p) = 1 and rank A^(p+1) = 0; every earlier rank
/// exceeds 1. max_k <= 0 selects n + 2.
template <Backend B>
int detect_rank(const HeckeRepresentation<B>& rep, int max_k = 0)
{
    if (max_k <= 0) max_k = rep.n() + 2;
    if (max_k < 2) throw OutOfRange("detect_rank needs max_k >= 2");
    for (int k = 1; k <= max_k; ++k) {
        const std::size_t r = idempotent_rank(rep.antisymmetrizer(k));
        if (r == 0)
            throw NotEven("rank A^(" + std::to_string(k) + ") = 0 before any rank-one antisymmetrizer");
        if (r > 1) continue;
        const std::size_t next = idempotent_rank(rep.antisymmetrizer(k + 1));
        if (next != 0)
            throw NotEven("rank A^(" + std::to_string(k) + ") = 1 but rank A^(" + std::to_string(k + 1) + ") = " +
                          std::to_string(next));
        return k;
    }
    throw NotEven("no rank-one antisymmetrizer up to degree " + std::to_string(max_k));
}

/// Coefficients of P_-(t) = sum rank A^(l) t^l and P_+(t) = sum rank S^(l) t^l.
struct PoincareSeries {
    std::vector<long> minus_coeffs;  // l = 0 .. p
    std::vector<long> plus_coeffs;   // l = 0 .. plus_degree
};

/// Builds both series and checks P_+(t) P_-(-t) = 1 through t^plus_degree.
template <Backend B>
PoincareSeries poincare_series(const HeckeRepresentation<B>& rep, int p, int plus_degree = 5)
{
    if (p < 1 || plus_degree < 0) throw OutOfRange("poincare_series needs p >= 1 and plus_degree >= 0");
    PoincareSeries s;
    s.minus_coeffs.push_back(1);
    for (int l = 1; l <= p; ++l) s.minus_coeffs.push_back(static_cast<long>(idempotent_rank(rep.antisymmetrizer(l))));
    s.plus_coeffs.push_back(1);
    for (int l = 1; l <= plus_degree; ++l) s.plus_coeffs.push_back(static_cast<long>(idempotent_rank(rep.symmetrizer(l))));
    for (int d = 0; d <= plus_degree; ++d) {
        long c = 0;
        for (int l = 0; l <= std::min(d, p); ++l)
            c += (l % 2 == 0 ? 1 : -1) * s.minus_coeffs[static_cast<std::size_t>(l)] *
                 s.plus_coeffs[static_cast<std::size_t>(d - l)];
        if (c != (d == 0 ? 1 : 0))
            throw RelationViolated("P_+(t) P_-(-t) has coefficient " + std::to_string(c) + " at t^" + std::to_string(d));
    }
    return s;
}

/// A^(p) = v u with v a column and u a row of length n^p.
template <class V>
struct FrameVectors {
    std::vector<V> u;
    std::vector<V> v;
};

/// Rank-one factorization of A^(p); the first nonzero entry of v is 1.
template <Backend B>
FrameVectors<value_t<B>> extract_uv(const HeckeRepresentation<B>& rep, int p)
{
    using V = value_t<B>;
    const auto& a = rep.antisymmetrizer(p);
    const std::size_t d = a.dim();
    std::size_t row = d, col = d;
    for (std::size_t i = 0; i < d && row == d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!is_zero(a(i, j))) {
                row = i;
                col = j;
                break;
            }
    if (row == d) throw RankNotOne("A^(" + std::to_string(p) + ") vanishes");
    FrameVectors<V> f;
    const V scale = V(1) / a(row, col);
    f.u.resize(d);
    f.v.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        f.v[i] = a(i, col) * scale;
        f.u[i] = a(row, i);
    }
    V dot(0);
    for (std::size_t i = 0; i < d; ++i) {
        if (!is_zero(f.u[i]) && !is_zero(f.v[i])) dot += f.u[i] * f.v[i];
        for (std::size_t j = 0; j < d; ++j)
            if (!(f.v[i] * f.u[j] == a(i, j)))
                throw RankNotOne("A^(" + std::to_string(p) + ") is not the outer product of one column and one row");
    }
    if (!(dot == V(1))) throw RankNotOne("A^(" + std::to_string(p) + ") is rank one but u.v = " + to_string(dot));
    return f;
}

/// The n x n matrices N and M (one-site operators).
template <class V>
struct FrameMatrices {
    TensorOperator<V> n_matrix;
    TensorOperator<V> m_matrix;
};

/// N^i_j = (-1)^(p-1) q p_q sum_a u_(a, j) v^(i, a) and
/// M^i_j = (-1)^(p-1) q p_q sum_a u_(j, a) v^(a, i), a running over V^(p-1).
/// Throws IdentityViolated unless M N = q^2 id.
template <Backend B>
FrameMatrices<value_t<B>> frame_matrices(const HeckeRepresentation<B>& rep, int p, const FrameVectors<value_t<B>>& f)
{
    using V = value_t<B>;
    const int n = rep.n();
    const auto& b = rep.backend();
    std::size_t tail = 1;
    for (int k = 1; k < p; ++k) tail *= static_cast<std::size_t>(n);
    if (f.u.size() != tail * static_cast<std::size_t>(n) || f.v.size() != f.u.size())
        throw ShapeMismatch("u and v must have length n^p");
    V pref = b.q() * q_number(p, b);
    if ((p - 1) % 2 == 1) pref = -pref;
    const auto un = static_cast<std::size_t>(n);
    FrameMatrices<V> out{TensorOperator<V>(n, 1), TensorOperator<V>(n, 1)};
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = 0; j < un; ++j) {
            V sn(0), sm(0);
            for (std::size_t a = 0; a < tail; ++a) {
                const V& u_aj = f.u[a * un + j];
                const V& v_ia = f.v[i * tail + a];
                if (!is_zero(u_aj) && !is_zero(v_ia)) sn += u_aj * v_ia;
                const V& u_ja = f.u[j * tail + a];
                const V& v_ai = f.v[a * un + i];
                if (!is_zero(u_ja) && !is_zero(v_ai)) sm += u_ja * v_ai;
            }
            out.n_matrix(i, j) = pref * sn;
            out.m_matrix(i, j) = pref * sm;
        }
    const auto q2 = TensorOperator<V>::scalar(n, 1, b.q_power(2));
    if (!(multiply(out.m_matrix, out.n_matrix) == q2)) throw IdentityViolated("M N differs from q^2 id");
    return out;
}

/// How N and M relate: both scalar and equal, both scalar but unequal, or not both scalar.
enum class FrameClass { scalar_equal, scalar_unequal, non_scalar };

inline std::string to_string(FrameClass c)
{
    switch (c) {
        case FrameClass::scalar_equal: return "scalar-equal";
        case FrameClass::scalar_unequal: return "scalar-unequal";
        case FrameClass::non_scalar: return "non-scalar";
    }
    return "?";
}

/// R-bar = (eps q)^(-1/p) R, kept symbolic.
struct RenormExponent {
    int sign = 1;         // eps
    int denominator = 1;  // p; the exponent is -1/p
    std::string to_string() const
    {
        return "(" + std::string(sign < 0 ? "-q" : "q") + ")^(-1/" + std::to_string(denominator) + ")";
    }
};

template <class V>
struct RankFrame {
    int p = 0;
    PoincareSeries poincare;
    std::vector<V> u;
    std::vector<V> v;
    TensorOperator<V> n_matrix;
    TensorOperator<V> m_matrix;
    FrameClass classification = FrameClass::non_scalar;
    bool natural = false;
    std::optional<int> epsilon;
    std::optional<RenormExponent> renorm;
    // det_q is central in the RTT algebra exactly when N is scalar; reported, not computed
    bool detq_central = false;
};

namespace detail {
template <class V>
std::optional<V> scalar_value(const TensorOperator<V>& m)
{
    const V d = m(0, 0);
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (!(m(i, j) == (i == j ? d : V(0)))) return std::nullopt;
    return d;
}
}  // namespace detail

/// detect_rank, poincare_series, extract_uv and frame_matrices in sequence.
template <Backend B>
RankFrame<value_t<B>> naturality_report(const HeckeRepresentation<B>& rep, int plus_degree = 5, int max_k = 0)
{
    using V = value_t<B>;
    RankFrame<V> rf;
    rf.p = detect_rank(rep, max_k);
    rf.poincare = poincare_series(rep, rf.p, plus_degree);
    auto uv = extract_uv(rep, rf.p);
    auto nm = frame_matrices(rep, rf.p, uv);
    rf.u = std::move(uv.u);
    rf.v = std::move(uv.v);
    rf.n_matrix = std::move(nm.n_matrix);
    rf.m_matrix = std::move(nm.m_matrix);

    const auto sn = detail::scalar_value(rf.n_matrix);
    const auto sm = detail::scalar_value(rf.m_matrix);
    rf.detq_central = sn.has_value();
    if (!sn || !sm)
        rf.classification = FrameClass::non_scalar;
    else
        rf.classification = *sn == *sm ? FrameClass::scalar_equal : FrameClass::scalar_unequal;
    rf.natural = rf.classification == FrameClass::scalar_equal;
    if (rf.natural) {
        const V q = rep.backend().q();
        // M N = q^2 id forces the common scalar to be +-q
        if (*sn == q)
            rf.epsilon = 1;
        else if (*sn == -q)
            rf.epsilon = -1;
        else
            throw IdentityViolated("scalar N = " + to_string(*sn) + " is not +-q");
        rf.renorm = RenormExponent{*rf.epsilon, rf.p};
    }
    return rf;
}

}  // namespace hecke
