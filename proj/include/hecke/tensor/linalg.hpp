#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/scalar/rational.hpp"
#include "hecke/scalar/rational_function.hpp"
#include "hecke/tensor/tensor_operator.hpp"

namespace hecke {

namespace detail {

inline std::size_t pivot_cost(const Rational& x)
{
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}
inline std::size_t pivot_cost(const Integer& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }
inline std::size_t pivot_cost(const RationalFunction& x) { return x.complexity(); }

// Gaussian elimination over the field, cheapest pivot first; rows without an
// entry in the pivot column are never touched.
template <class V>
std::size_t field_rank(std::vector<std::vector<V>> m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<char> row_done(rows, 0), col_done(cols, 0);
    std::size_t rank = 0;
    while (true) {
        std::size_t pr = rows, pc = cols, best = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < rows; ++i) {
            if (row_done[i]) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (col_done[j] || is_zero(m[i][j])) continue;
                const std::size_t cost = pivot_cost(m[i][j]);
                if (cost < best) {
                    best = cost;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr == rows) break;
        ++rank;
        row_done[pr] = 1;
        col_done[pc] = 1;
        const V inv_pivot = V(1) / m[pr][pc];
        for (std::size_t i = 0; i < rows; ++i) {
            if (row_done[i] || is_zero(m[i][pc])) continue;
            const V f = m[i][pc] * inv_pivot;
            for (std::size_t j = 0; j < cols; ++j) {
                if (col_done[j] || is_zero(m[pr][j])) continue;
                m[i][j] -= f * m[pr][j];
            }
            m[i][pc] = V(0);
        }
    }
    return rank;
}

// Fraction-free (Bareiss) elimination over Z with full pivoting. Every
// intermediate entry is a minor of the input, so each division is exact.
inline std::size_t bareiss_rank(std::vector<std::vector<Integer>> m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<char> row_done(rows, 0), col_done(cols, 0);
    Integer prev(1);
    std::size_t rank = 0;
    Integer t;
    while (true) {
        std::size_t pr = rows, pc = cols, best = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < rows; ++i) {
            if (row_done[i]) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (col_done[j] || sgn(m[i][j]) == 0) continue;
                const std::size_t cost = pivot_cost(m[i][j]);
                if (cost < best) {
                    best = cost;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr == rows) break;
        ++rank;
        row_done[pr] = 1;
        col_done[pc] = 1;
        const Integer p = m[pr][pc];
        for (std::size_t i = 0; i < rows; ++i) {
            if (row_done[i]) continue;
            const Integer f = m[i][pc];
            for (std::size_t j = 0; j < cols; ++j) {
                if (col_done[j]) continue;
                Integer& x = m[i][j];
                if (sgn(f) == 0) {
                    if (sgn(x) == 0) continue;
                    x *= p;
                } else {
                    x *= p;
                    mpz_submul(x.get_mpz_t(), f.get_mpz_t(), m[pr][j].get_mpz_t());
                    if (sgn(x) == 0) continue;
                }
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][pc] = 0;
        }
        prev = p;
    }
    return rank;
}

template <class V>
std::vector<std::vector<V>> to_rows(const TensorOperator<V>& a)
{
    std::vector<std::vector<V>> m(a.dim(), std::vector<V>(a.dim()));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) m[i][j] = a(i, j);
    return m;
}

}  // namespace detail

/// Exact rank over the rational-function field.
inline std::size_t rank(const TensorOperator<RationalFunction>& a) { return detail::field_rank(detail::to_rows(a)); }

/// Exact rank over Q: rows are scaled to integers, then Bareiss.
inline std::size_t rank(const TensorOperator<Rational>& a)
{
    std::vector<std::vector<Integer>> m(a.dim(), std::vector<Integer>(a.dim()));
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Integer den(1);
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (sgn(a(i, j)) != 0) den = lcm(den, a(i, j).get_den());
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (sgn(a(i, j)) == 0) continue;
            Integer t;
            mpz_divexact(t.get_mpz_t(), den.get_mpz_t(), a(i, j).get_den_mpz_t());
            m[i][j] = a(i, j).get_num() * t;
        }
    }
    return detail::bareiss_rank(std::move(m));
}

namespace detail {
inline std::optional<Rational> as_constant(const Rational& x) { return x; }
inline std::optional<Rational> as_constant(const RationalFunction& x)
{
    if (!x.is_laurent() || !x.numerator().is_constant()) return std::nullopt;
    return x.numerator().coefficient(0);
}
}  // namespace detail

/// Rank of an idempotent, read off its trace. Falls back to elimination when
/// the trace is not a nonnegative integer (the operator is then no idempotent).
template <class V>
std::size_t idempotent_rank(const TensorOperator<V>& e)
{
    const auto t = detail::as_constant(trace(e));
    if (t && t->get_den() == 1 && sgn(*t) >= 0 && t->get_num() <= static_cast<long>(e.dim()))
        return static_cast<std::size_t>(t->get_num().get_ui());
    return rank(e);
}

/// Gauss-Jordan inverse; throws Singular.
template <class V>
TensorOperator<V> invert(const TensorOperator<V>& a)
{
    const std::size_t d = a.dim();
    auto m = detail::to_rows(a);
    TensorOperator<V> inv = TensorOperator<V>::identity(a.site_dim(), a.sites());
    auto w = detail::to_rows(inv);
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t pr = d, best = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = c; i < d; ++i) {
            if (is_zero(m[i][c])) continue;
            const std::size_t cost = detail::pivot_cost(m[i][c]);
            if (cost < best) {
                best = cost;
                pr = i;
            }
        }
        if (pr == d) throw Singular("operator on " + a.shape_string() + " is singular");
        std::swap(m[pr], m[c]);
        std::swap(w[pr], w[c]);
        const V ip = V(1) / m[c][c];
        for (std::size_t j = 0; j < d; ++j) {
            if (!is_zero(m[c][j])) m[c][j] *= ip;
            if (!is_zero(w[c][j])) w[c][j] *= ip;
        }
        for (std::size_t i = 0; i < d; ++i) {
            if (i == c || is_zero(m[i][c])) continue;
            const V f = m[i][c];
            for (std::size_t j = 0; j < d; ++j) {
                if (!is_zero(m[c][j])) m[i][j] -= f * m[c][j];
                if (!is_zero(w[c][j])) w[i][j] -= f * w[c][j];
            }
        }
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) inv(i, j) = w[i][j];
    return inv;
}

namespace detail {
// (i, a) -> composite index on V (x) V.
inline std::size_t pair_code(int n, int x, int y)
{
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y);
}

// sum_{a,b} X^{ia}_{jb} Y^{bk}_{al} == delta^i_l delta^k_j for all i, j, k, l.
template <class V>
bool column_inverse_holds(const TensorOperator<V>& r, const TensorOperator<V>& q, bool q_first)
{
    const int n = r.site_dim();
    const auto& x = q_first ? q : r;
    const auto& y = q_first ? r : q;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    DotAccumulator<V> acc;
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b) {
                            const V& u = x(pair_code(n, i, a), pair_code(n, j, b));
                            if (is_zero(u)) continue;
                            const V& v = y(pair_code(n, b, k), pair_code(n, a, l));
                            if (!is_zero(v)) acc.add_product(u, v);
                        }
                    const V s = acc.finish();
                    const bool expect_one = (i == l && k == j);
                    if (expect_one ? !(s == V(1)) : !is_zero(s)) return false;
                }
    return true;
}
}  // namespace detail

/// Column inverse Q of a two-site R:
///   sum_{a,b} R^{ia}_{jb} Q^{bk}_{al} = delta^i_l delta^k_j = sum_{a,b} Q^{ia}_{jb} R^{bk}_{al},
/// with X^{ia}_{jb} = X[(i,a)][(j,b)]. Both identities are checked before returning.
template <class V>
TensorOperator<V> column_inverse(const TensorOperator<V>& r)
{
    if (r.sites() != 2) throw ShapeMismatch("column_inverse expects a two-site operator");
    const int n = r.site_dim();
    using detail::pair_code;
    // F[(i,j),(b,a)] = R^{ia}_{jb}
    TensorOperator<V> f(n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) f(pair_code(n, i, j), pair_code(n, b, a)) = r(pair_code(n, i, a), pair_code(n, j, b));
    TensorOperator<V> g;
    try {
        g = invert(f);
    } catch (const Singular&) {
        throw NotColumnInvertible("the reshuffled matrix of R is singular");
    }
    // Q^{bk}_{al} = G[(b,a),(l,k)]
    TensorOperator<V> q(n, 2);
    for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k)
            for (int a = 0; a < n; ++a)
                for (int l = 0; l < n; ++l) q(pair_code(n, b, k), pair_code(n, a, l)) = g(pair_code(n, b, a), pair_code(n, l, k));
    if (!detail::column_inverse_holds(r, q, false) || !detail::column_inverse_holds(r, q, true))
        throw NotColumnInvertible("R has a one-sided column inverse only");
    return q;
}

}  // namespace hecke
