#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/frame/frame.hpp"
#include "hecke/heckealg/representation.hpp"
#include "hecke/scalar/backend.hpp"
#include "hecke/symfunc/partition.hpp"
#include "hecke/symfunc/schur.hpp"
#include "hecke/symmetry/hecke_symmetry.hpp"
#include "hecke/tensor/tensor_operator.hpp"

namespace hecke {

/// A representation together with its rank frame and C matrix. The
/// representation is held by reference and must outlive the context.
template <Backend B>
class TraceContext {
public:
    using V = value_t<B>;

    /// Throws CrossCheckFailed when C misses one of its defining identities.
    TraceContext(const HeckeRepresentation<B>& rep, RankFrame<V> frame)
        : rep_(&rep), frame_(std::move(frame)), c_(c_matrix(rep.symmetry()))
    {
        const auto props = check_c_properties(rep.symmetry(), c_, frame_.p);
        if (!props.ok())
            throw CrossCheckFailed(std::string("C matrix fails") + (props.rcc_ok ? "" : " R C1 C2 = C1 C2 R") +
                                   (props.trace_ok ? "" : " Tr C = p_q / q^p") +
                                   (props.partial_ok ? "" : " Tr_2(R C_2) = id"));
    }

    const HeckeRepresentation<B>& rep() const noexcept { return *rep_; }
    const B& backend() const noexcept { return rep_->backend(); }
    const RankFrame<V>& frame() const noexcept { return frame_; }
    const CMatrix<V>& c() const noexcept { return c_; }
    int p() const noexcept { return frame_.p; }

private:
    const HeckeRepresentation<B>* rep_;
    RankFrame<V> frame_;
    CMatrix<V> c_;
};

template <Backend B>
TraceContext<B> make_trace_context(const HeckeRepresentation<B>& rep, int plus_degree = 5)
{
    return TraceContext<B>(rep, naturality_report(rep, plus_degree));
}

/// C_lambda = Y_T C_1 C_2 ... C_m.
template <Backend B>
TensorOperator<value_t<B>> c_lambda(const TraceContext<B>& ctx, const StandardTableau& t)
{
    return multiply_sitewise(ctx.rep().primitive_idempotent(t).op, ctx.c().entries);
}

namespace detail {
template <Backend B>
value_t<B> normalized_trace(const TraceContext<B>& ctx, const TensorOperator<value_t<B>>& f, const TensorOperator<value_t<B>>& c_lam)
{
    return ctx.backend().q_power(ctx.p() * f.sites()) * trace_of_product(f, c_lam);
}
}  // namespace detail

/// q^(pm) Tr(F C_lambda) for F with Y_T F Y_T = F; throws NotEndomorphism otherwise.
template <Backend B>
value_t<B> quantum_trace(const TraceContext<B>& ctx, const StandardTableau& t, const TensorOperator<value_t<B>>& f)
{
    const auto& y = ctx.rep().primitive_idempotent(t).op;
    if (!(multiply(multiply(y, f), y) == f))
        throw NotEndomorphism("F is not an endomorphism of the image of Y_" + t.to_string());
    return detail::normalized_trace(ctx, f, c_lambda(ctx, t));
}

/// One row of the dimension table.
template <class V>
struct QdimEntry {
    Partition lambda;
    V trace_value;     // q^(pm) Tr(Y C^m) through the column-major tableau
    V schur_value;     // hook-content at q^(p-1), ..., q^(1-p)
    bool agree = false;
    Rational classical;  // value at q = 1: the formal trace route, else the formal Schur route
};

template <Backend B>
QdimEntry<value_t<B>> qdim_entry(const TraceContext<B>& ctx, const Partition& lambda)
{
    using V = value_t<B>;
    QdimEntry<V> e;
    e.lambda = lambda;
    const auto& b = ctx.backend();
    if (lambda.empty()) {
        e.trace_value = b.constant(1);
    } else {
        const auto t = StandardTableau::column_major(lambda);
        e.trace_value = quantum_trace(ctx, t, ctx.rep().primitive_idempotent(t).op);
    }
    e.schur_value = schur_principal(lambda, ctx.p(), b);
    e.agree = e.trace_value == e.schur_value;
    if constexpr (B::is_formal)
        e.classical = e.trace_value.evaluate(Rational(1));
    else
        e.classical = schur_principal(lambda, ctx.p(), FormalBackend{}).evaluate(Rational(1));
    return e;
}

/// dim_q V_lambda, computed by the trace and by hook-content; throws CrossCheckFailed on disagreement.
template <Backend B>
value_t<B> qdim(const TraceContext<B>& ctx, const Partition& lambda)
{
    auto e = qdim_entry(ctx, lambda);
    if (!e.agree)
        throw CrossCheckFailed("qdim" + lambda.to_string() + ": trace gives " + to_string(e.trace_value) +
                               ", hook-content gives " + to_string(e.schur_value));
    return e.trace_value;
}

/// Rows for every partition of 1 .. upto, each weight in reverse-lexicographic order.
template <Backend B>
std::vector<QdimEntry<value_t<B>>> dimension_table(const TraceContext<B>& ctx, int upto)
{
    std::vector<QdimEntry<value_t<B>>> rows;
    for (int m = 1; m <= upto; ++m)
        for (const auto& lambda : partitions(m)) rows.push_back(qdim_entry(ctx, lambda));
    return rows;
}

template <class V>
struct LemmaOmegaRow {
    int k = 0;
    V lhs;  // Tr(A^(k) C_1 ... C_k)
    V rhs;  // q^(-pk) [p, k]_q
    bool ok = false;
};

template <class V>
struct LemmaOmegaReport {
    int p = 0;
    std::vector<LemmaOmegaRow<V>> rows;
    std::vector<V> generating;  // e_k(q^(1-p), q^(3-p), ..., q^(p-1)) from the product, k = 0 .. p
    bool generating_ok = false;
    bool ok() const
    {
        for (const auto& r : rows)
            if (!r.ok) return false;
        return generating_ok;
    }
};

/// Tr(A^(k) C^k) against q^(-pk) [p, k]_q for k = 1 .. p, and the expansion of
/// prod_{j=0}^{p-1} (q^(2j+1-p) + t) against the q-binomials.
template <Backend B>
LemmaOmegaReport<value_t<B>> lemma_omega_table(const TraceContext<B>& ctx)
{
    using V = value_t<B>;
    const auto& b = ctx.backend();
    const int p = ctx.p();
    LemmaOmegaReport<V> rep;
    rep.p = p;
    for (int k = 1; k <= p; ++k) {
        LemmaOmegaRow<V> row;
        row.k = k;
        row.lhs = trace(multiply_sitewise(ctx.rep().antisymmetrizer(k), ctx.c().entries));
        row.rhs = b.q_power(-p * k) * q_binomial(p, k, b);
        row.ok = row.lhs == row.rhs;
        rep.rows.push_back(std::move(row));
    }
    // poly[d] is the coefficient of t^d; e_k sits at t^(p-k)
    std::vector<V> poly{b.constant(1)};
    for (int j = 0; j < p; ++j) {
        const V x = b.q_power(2 * j + 1 - p);
        std::vector<V> next(poly.size() + 1, b.constant(0));
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d] += x * poly[d];
            next[d + 1] += poly[d];
        }
        poly = std::move(next);
    }
    rep.generating_ok = true;
    for (int k = 0; k <= p; ++k) {
        rep.generating.push_back(poly[static_cast<std::size_t>(p - k)]);
        if (!(rep.generating.back() == q_binomial(p, k, b))) rep.generating_ok = false;
    }
    return rep;
}

template <class V>
struct ReductionReport {
    Partition mu;
    Partition lambda;  // mu + (1^p)
    V qdim_mu;
    V qdim_lambda;
    bool ok = false;
};

/// qdim(mu + (1^p)) against qdim(mu); needs height(mu) <= p.
template <Backend B>
ReductionReport<value_t<B>> reduction_check(const TraceContext<B>& ctx, const Partition& mu)
{
    if (mu.height() > ctx.p()) throw OutOfRange("reduction_check needs height(mu) <= p");
    ReductionReport<value_t<B>> r;
    r.mu = mu;
    r.lambda = mu.plus_column(ctx.p());
    r.qdim_mu = qdim(ctx, mu);
    r.qdim_lambda = qdim(ctx, r.lambda);
    r.ok = r.qdim_mu == r.qdim_lambda;
    return r;
}

template <class V>
struct TableauIndependenceReport {
    Partition lambda;
    std::vector<std::pair<StandardTableau, V>> values;
    bool ok = false;
};

/// The quantum trace of Y_T for every standard tableau T of lambda; needs at least two tableaux.
template <Backend B>
TableauIndependenceReport<value_t<B>> tableau_independence_check(const TraceContext<B>& ctx, const Partition& lambda)
{
    const auto ts = standard_tableaux(lambda);
    if (ts.size() < 2) throw OutOfRange("tableau_independence_check needs a shape with two or more tableaux");
    TableauIndependenceReport<value_t<B>> r;
    r.lambda = lambda;
    r.ok = true;
    for (const auto& t : ts) {
        r.values.emplace_back(t, quantum_trace(ctx, t, ctx.rep().primitive_idempotent(t).op));
        if (!(r.values.back().second == r.values.front().second)) r.ok = false;
    }
    return r;
}

template <class V>
struct QdimProductReport {
    Partition lambda, mu;
    V lhs;  // qdim(lambda) qdim(mu)
    V rhs;  // sum_nu c^nu qdim(nu)
    std::map<Partition, long long> expansion;
    bool ok = false;
};

/// qdim(lambda) qdim(mu) = sum_nu c^nu_{lambda mu} qdim(nu), every qdim by the trace route.
template <Backend B>
QdimProductReport<value_t<B>> qdim_multiplicativity(const TraceContext<B>& ctx, const Partition& lambda,
                                                    const Partition& mu)
{
    using V = value_t<B>;
    QdimProductReport<V> r;
    r.lambda = lambda;
    r.mu = mu;
    r.lhs = qdim(ctx, lambda) * qdim(ctx, mu);
    r.expansion = lr_expand(lambda, mu);
    r.rhs = ctx.backend().constant(0);
    for (const auto& [nu, c] : r.expansion) r.rhs += V(static_cast<long>(c)) * qdim(ctx, nu);
    r.ok = r.lhs == r.rhs;
    return r;
}

}  // namespace hecke
