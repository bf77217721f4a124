#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/scalar/backend.hpp"
#include "hecke/scalar/scalar.hpp"
#include "hecke/tensor/linalg.hpp"
#include "hecke/tensor/multi_index.hpp"
#include "hecke/tensor/tensor_operator.hpp"

namespace hecke {

/// An R-matrix on V (x) V together with its q context.
///
/// The yb/hecke/generic flags start false and are only set by validate();
/// everything downstream of this module calls require_validated().
template <Backend B>
class HeckeSymmetry {
public:
    using backend_type = B;
    using value_type = value_t<B>;
    using Operator = TensorOperator<value_type>;

    HeckeSymmetry(B backend, Operator r) : backend_(std::move(backend)), r_(std::move(r))
    {
        if (r_.sites() != 2) throw ShapeMismatch("an R-matrix acts on two sites");
    }

    int n() const noexcept { return r_.site_dim(); }
    const B& backend() const noexcept { return backend_; }
    const Operator& r() const noexcept { return r_; }
    value_type q() const { return backend_.q(); }

    bool yb_ok() const noexcept { return yb_ok_; }
    bool hecke_ok() const noexcept { return hecke_ok_; }
    bool generic_ok() const noexcept { return generic_ok_; }
    bool validated() const noexcept { return yb_ok_ && hecke_ok_ && generic_ok_; }

    void require_validated() const
    {
        if (!validated()) throw NotValidated("the symmetry must pass validate() before use");
    }

    template <Backend B2>
    friend struct ValidationAccess;

private:
    B backend_;
    Operator r_;
    bool yb_ok_ = false;
    bool hecke_ok_ = false;
    bool generic_ok_ = false;
};

template <Backend B>
struct ValidationAccess {
    static void set(HeckeSymmetry<B>& h, bool yb, bool hecke, bool generic)
    {
        h.yb_ok_ = yb;
        h.hecke_ok_ = hecke;
        h.generic_ok_ = generic;
    }
};

using AnySymmetry = std::variant<HeckeSymmetry<FormalBackend>, HeckeSymmetry<NumericBackend>>;

/// Drinfeld-Jimbo braiding of U_q(sl(n)) on the vector representation:
///   e_i (x) e_i -> q e_i (x) e_i,
///   e_i (x) e_j -> e_j (x) e_i                              (i < j),
///   e_i (x) e_j -> e_j (x) e_i + (q - q^-1) e_i (x) e_j     (i > j).
template <Backend B>
HeckeSymmetry<B> build_uq_sln(int n, const B& backend)
{
    if (n < 1) throw ShapeMismatch("U_q(sl(n)) needs n >= 1");
    using V = value_t<B>;
    TensorOperator<V> r(n, 2);
    const V q = backend.q();
    const V gap = q - backend.q_power(-1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::size_t in = detail::pair_code(n, i, j);
            if (i == j) {
                r(in, in) = q;
                continue;
            }
            r(detail::pair_code(n, j, i), in) = V(1);
            if (i > j) r(in, in) = gap;
        }
    return HeckeSymmetry<B>(backend, std::move(r));
}

/// Formal symmetry with every entry evaluated at a rational q; flags reset.
inline HeckeSymmetry<NumericBackend> specialize(const HeckeSymmetry<FormalBackend>& h, const Rational& q)
{
    NumericBackend nb(q);
    return HeckeSymmetry<NumericBackend>(nb, h.r().map([&](const RationalFunction& x) { return x.evaluate(q); }));
}

/// One nonzero entry of a residual that should vanish.
struct ResidualEntry {
    std::string out;  // 1-based multi-index label
    std::string in;
    std::string value;
};

struct ValidationReport {
    bool yb_ok = false;
    bool hecke_ok = false;
    bool generic_ok = false;
    GenericityReport genericity;
    std::size_t yb_nonzeros = 0;
    std::size_t hecke_nonzeros = 0;
    std::vector<ResidualEntry> yb_residual;     // first few nonzero entries
    std::vector<ResidualEntry> hecke_residual;

    bool ok() const { return yb_ok && hecke_ok && generic_ok; }
};

namespace detail {
template <class V>
std::vector<ResidualEntry> residual_sample(const TensorOperator<V>& r, std::size_t limit, std::size_t& count)
{
    std::vector<ResidualEntry> out;
    count = 0;
    for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = 0; j < r.dim(); ++j) {
            if (is_zero(r(i, j))) continue;
            ++count;
            if (out.size() < limit)
                out.push_back({MultiIndex::decode(i, r.site_dim(), r.sites()).label(),
                               MultiIndex::decode(j, r.site_dim(), r.sites()).label(), to_string(r(i, j))});
        }
    return out;
}
}  // namespace detail

/// Checks the braid relation on V^3, the Hecke relation on V^2 (both exactly)
/// and genericity of q up to `generic_bound`; sets the symmetry's flags.
template <Backend B>
ValidationReport validate(HeckeSymmetry<B>& h, int generic_bound = 12)
{
    using V = value_t<B>;
    const int n = h.n();
    const auto& r = h.r();
    ValidationReport rep;

    const auto r12 = embed_at(r, 1, 3);
    const auto r23 = embed_at(r, 2, 3);
    const auto yb = multiply(multiply(r12, r23), r12) - multiply(multiply(r23, r12), r23);
    rep.yb_residual = detail::residual_sample(yb, 8, rep.yb_nonzeros);
    rep.yb_ok = rep.yb_nonzeros == 0;

    const V q = h.backend().q();
    const V qinv = h.backend().q_power(-1);
    const auto left = TensorOperator<V>::scalar(n, 2, q) - r;
    const auto right = TensorOperator<V>::scalar(n, 2, qinv) + r;
    const auto hecke_res = multiply(left, right);
    rep.hecke_residual = detail::residual_sample(hecke_res, 8, rep.hecke_nonzeros);
    rep.hecke_ok = rep.hecke_nonzeros == 0;

    rep.genericity = genericity_check(h.backend(), generic_bound);
    rep.generic_ok = rep.genericity.generic;

    ValidationAccess<B>::set(h, rep.yb_ok, rep.hecke_ok, rep.generic_ok);
    return rep;
}

/// n x n matrix C with C^i_j = sum_a Q^{ia}_{ja}, Q the column inverse of R.
template <class V>
struct CMatrix {
    TensorOperator<V> entries;  // one site

    V trace() const { return hecke::trace(entries); }
};

template <Backend B>
CMatrix<value_t<B>> c_matrix(const HeckeSymmetry<B>& h)
{
    h.require_validated();
    return CMatrix<value_t<B>>{partial_trace(column_inverse(h.r()), 2)};
}

struct CPropertiesReport {
    bool rcc_ok = false;       // R C1 C2 = C1 C2 R
    bool trace_ok = false;     // Tr C = p_q / q^p
    bool partial_ok = false;   // Tr_2 (R C_2) = id
    Scalar trace;
    Scalar expected_trace;

    bool ok() const { return rcc_ok && trace_ok && partial_ok; }
};

template <Backend B>
CPropertiesReport check_c_properties(const HeckeSymmetry<B>& h, const CMatrix<value_t<B>>& c, int p)
{
    using V = value_t<B>;
    h.require_validated();
    const int n = h.n();
    CPropertiesReport rep;
    const auto cc = tensor_product(c.entries, c.entries);
    rep.rcc_ok = multiply(h.r(), cc) == multiply(cc, h.r());

    const V tr = c.trace();
    const V expected = q_number(p, h.backend()) * h.backend().q_power(-p);
    rep.trace = Scalar::from(tr, h.backend());
    rep.expected_trace = Scalar::from(expected, h.backend());
    rep.trace_ok = tr == expected;

    const auto rc2 = multiply(h.r(), embed_site(c.entries, 2, 2));
    rep.partial_ok = partial_trace(rc2, 2) == TensorOperator<V>::identity(n, 1);
    return rep;
}

template <Backend B>
CPropertiesReport check_c_properties(const HeckeSymmetry<B>& h, int p)
{
    return check_c_properties(h, c_matrix(h), p);
}

}  // namespace hecke
