#pragma once

#include <atomic>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/scalar/rational.hpp"
#include "hecke/scalar/rational_function.hpp"
#include "hecke/tensor/multi_index.hpp"

namespace hecke {

namespace detail {
inline std::atomic<std::size_t>& dimension_limit()
{
    static std::atomic<std::size_t> limit{512};
    return limit;
}
}  // namespace detail

/// Largest n^k a TensorOperator may have (default 512).
inline std::size_t max_dimension() { return detail::dimension_limit().load(); }
inline void set_max_dimension(std::size_t d) { detail::dimension_limit().store(d); }

/// Raises (or lowers) the dimension limit for the lifetime of the guard.
class ScopedDimensionLimit {
public:
    explicit ScopedDimensionLimit(std::size_t d) : saved_(max_dimension()) { set_max_dimension(d); }
    ~ScopedDimensionLimit() { set_max_dimension(saved_); }
    ScopedDimensionLimit(const ScopedDimensionLimit&) = delete;
    ScopedDimensionLimit& operator=(const ScopedDimensionLimit&) = delete;

private:
    std::size_t saved_;
};

/// Dense operator on V^{(x)k}, dim V = n, stored row-major as entry[out][in].
///
/// Operators act on column vectors, so multiply(A, B) applies B first.
template <class V>
class TensorOperator {
public:
    using value_type = V;

    TensorOperator() = default;

    TensorOperator(int n, int k) : n_(n), k_(k)
    {
        if (n < 1) throw ShapeMismatch("site dimension must be >= 1");
        if (k < 0) throw ShapeMismatch("number of sites must be >= 0");
        dim_ = ipow(static_cast<std::size_t>(n), k);
        if (dim_ > max_dimension())
            throw DimensionLimit(std::to_string(n) + "^" + std::to_string(k) + " = " + std::to_string(dim_) +
                                 " exceeds the limit " + std::to_string(max_dimension()));
        entries_.assign(dim_ * dim_, V(0));
    }

    static TensorOperator identity(int n, int k)
    {
        TensorOperator op(n, k);
        for (std::size_t i = 0; i < op.dim_; ++i) op(i, i) = V(1);
        return op;
    }

    static TensorOperator scalar(int n, int k, const V& c)
    {
        TensorOperator op(n, k);
        if (!hecke::is_zero(c))
            for (std::size_t i = 0; i < op.dim_; ++i) op(i, i) = c;
        return op;
    }

    int site_dim() const noexcept { return n_; }
    int sites() const noexcept { return k_; }
    std::size_t dim() const noexcept { return dim_; }

    V& operator()(std::size_t out, std::size_t in) { return entries_[out * dim_ + in]; }
    const V& operator()(std::size_t out, std::size_t in) const { return entries_[out * dim_ + in]; }
    const V& at(const MultiIndex& out, const MultiIndex& in) const { return (*this)(out.code(), in.code()); }

    const std::vector<V>& entries() const noexcept { return entries_; }

    bool is_zero() const
    {
        for (const auto& x : entries_)
            if (!hecke::is_zero(x)) return false;
        return true;
    }

    std::size_t nonzeros() const
    {
        std::size_t c = 0;
        for (const auto& x : entries_) c += hecke::is_zero(x) ? 0 : 1;
        return c;
    }

    /// Applies f to every entry, e.g. to specialize q.
    template <class F>
    auto map(F f) const -> TensorOperator<decltype(f(std::declval<const V&>()))>
    {
        using W = decltype(f(std::declval<const V&>()));
        TensorOperator<W> out(n_, k_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if (!hecke::is_zero((*this)(i, j))) out(i, j) = f((*this)(i, j));
        return out;
    }

    TensorOperator& operator+=(const TensorOperator& o)
    {
        check_same_shape(o);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (!hecke::is_zero(o.entries_[i])) entries_[i] += o.entries_[i];
        return *this;
    }

    TensorOperator& operator-=(const TensorOperator& o)
    {
        check_same_shape(o);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (!hecke::is_zero(o.entries_[i])) entries_[i] -= o.entries_[i];
        return *this;
    }

    TensorOperator& operator*=(const V& c)
    {
        if (hecke::is_zero(c)) {
            for (auto& x : entries_) x = V(0);
            return *this;
        }
        for (auto& x : entries_)
            if (!hecke::is_zero(x)) x *= c;
        return *this;
    }

    friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
    friend TensorOperator operator-(TensorOperator a, const TensorOperator& b) { return a -= b; }
    friend TensorOperator operator*(TensorOperator a, const V& c) { return a *= c; }
    friend TensorOperator operator*(const V& c, TensorOperator a) { return a *= c; }
    friend TensorOperator operator-(TensorOperator a) { return a *= V(-1); }

    friend bool operator==(const TensorOperator& a, const TensorOperator& b)
    {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.entries_ == b.entries_;
    }

    void check_same_shape(const TensorOperator& o) const
    {
        if (n_ != o.n_ || k_ != o.k_)
            throw ShapeMismatch("operators on " + shape_string() + " and " + o.shape_string());
    }

    std::string shape_string() const { return "V^" + std::to_string(k_) + " (n=" + std::to_string(n_) + ")"; }

private:
    int n_ = 1;
    int k_ = 0;
    std::size_t dim_ = 1;
    std::vector<V> entries_{V(1)};
};

namespace detail {

// Sums products a*b for one output entry.
template <class V>
class DotAccumulator {
public:
    void add_product(const V& a, const V& b) { acc_ += a * b; }
    V finish() { return std::move(acc_); }

private:
    V acc_{0};
};

// Groups products by their (unreduced) denominator so each group is summed
// with plain polynomial arithmetic and reduced once.
template <>
class DotAccumulator<RationalFunction> {
public:
    void add_product(const RationalFunction& a, const RationalFunction& b)
    {
        const auto& da = a.denominator();
        const auto& db = b.denominator();
        for (auto& g : groups_) {
            if (g.da == da && g.db == db) {
                g.num += a.numerator() * b.numerator();
                return;
            }
        }
        groups_.push_back(Group{da, db, a.numerator() * b.numerator()});
    }

    RationalFunction finish()
    {
        RationalFunction total;
        for (auto& g : groups_) {
            if (g.num.is_zero()) continue;
            total += RationalFunction(std::move(g.num), g.da * g.db);
        }
        groups_.clear();
        return total;
    }

private:
    struct Group {
        LaurentPolynomial da, db, num;
    };
    std::vector<Group> groups_;
};

// Nonzero pattern of each row: (column, pointer to entry).
template <class V>
std::vector<std::vector<std::pair<std::size_t, const V*>>> row_support(const TensorOperator<V>& a)
{
    std::vector<std::vector<std::pair<std::size_t, const V*>>> rows(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!is_zero(a(i, j))) rows[i].emplace_back(j, &a(i, j));
    return rows;
}

}  // namespace detail

/// A * B: B acts first. Zero entries of either factor are skipped.
template <class V>
TensorOperator<V> multiply(const TensorOperator<V>& a, const TensorOperator<V>& b)
{
    a.check_same_shape(b);
    const std::size_t d = a.dim();
    TensorOperator<V> c(a.site_dim(), a.sites());
    const auto b_rows = detail::row_support(b);
    std::vector<detail::DotAccumulator<V>> acc(d);
    std::vector<char> touched(d, 0);
    std::vector<std::size_t> touched_list;
    for (std::size_t i = 0; i < d; ++i) {
        touched_list.clear();
        for (std::size_t l = 0; l < d; ++l) {
            const V& x = a(i, l);
            if (is_zero(x)) continue;
            for (const auto& [j, y] : b_rows[l]) {
                acc[j].add_product(x, *y);
                if (!touched[j]) {
                    touched[j] = 1;
                    touched_list.push_back(j);
                }
            }
        }
        for (std::size_t j : touched_list) {
            c(i, j) = acc[j].finish();
            touched[j] = 0;
        }
    }
    return c;
}

/// A (x) B with A on the leading sites.
template <class V>
TensorOperator<V> tensor_product(const TensorOperator<V>& a, const TensorOperator<V>& b)
{
    if (a.site_dim() != b.site_dim()) throw ShapeMismatch("tensor product of different site dimensions");
    TensorOperator<V> c(a.site_dim(), a.sites() + b.sites());
    const std::size_t db = b.dim();
    const auto b_rows = detail::row_support(b);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const V& x = a(i, j);
            if (is_zero(x)) continue;
            for (std::size_t r = 0; r < db; ++r)
                for (const auto& [s, y] : b_rows[r]) c(i * db + r, j * db + s) = x * *y;
        }
    return c;
}

/// id^(i-1) (x) op2 (x) id^(k-i-1): op2 acting on sites (i, i+1), 1-based.
template <class V>
TensorOperator<V> embed_at(const TensorOperator<V>& op2, int i, int k)
{
    if (op2.sites() != 2) throw ShapeMismatch("embed_at expects a two-site operator");
    if (i < 1 || i > k - 1)
        throw PositionOutOfRange("position " + std::to_string(i) + " not in 1.." + std::to_string(k - 1));
    const int n = op2.site_dim();
    const std::size_t left = ipow(static_cast<std::size_t>(n), i - 1);
    const std::size_t right = ipow(static_cast<std::size_t>(n), k - i - 1);
    const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    TensorOperator<V> c(n, k);
    const auto rows = detail::row_support(op2);
    for (std::size_t a = 0; a < left; ++a)
        for (std::size_t r = 0; r < nn; ++r)
            for (const auto& [s, y] : rows[r])
                for (std::size_t b = 0; b < right; ++b)
                    c((a * nn + r) * right + b, (a * nn + s) * right + b) = *y;
    return c;
}

/// id^(s-1) (x) op1 (x) id^(k-s): a single-site operator on site s, 1-based.
template <class V>
TensorOperator<V> embed_site(const TensorOperator<V>& op1, int s, int k)
{
    if (op1.sites() != 1) throw ShapeMismatch("embed_site expects a one-site operator");
    if (s < 1 || s > k) throw PositionOutOfRange("site " + std::to_string(s) + " not in 1.." + std::to_string(k));
    const int n = op1.site_dim();
    const std::size_t left = ipow(static_cast<std::size_t>(n), s - 1);
    const std::size_t right = ipow(static_cast<std::size_t>(n), k - s);
    const std::size_t nd = static_cast<std::size_t>(n);
    TensorOperator<V> c(n, k);
    for (std::size_t a = 0; a < left; ++a)
        for (std::size_t r = 0; r < nd; ++r)
            for (std::size_t t = 0; t < nd; ++t) {
                const V& y = op1(r, t);
                if (is_zero(y)) continue;
                for (std::size_t b = 0; b < right; ++b) c((a * nd + r) * right + b, (a * nd + t) * right + b) = y;
            }
    return c;
}

/// Trace over site s (1-based): result[I][J] = sum_a A[I+a][J+a].
template <class V>
TensorOperator<V> partial_trace(const TensorOperator<V>& a, int site)
{
    const int k = a.sites();
    if (site < 1 || site > k)
        throw PositionOutOfRange("site " + std::to_string(site) + " not in 1.." + std::to_string(k));
    const int n = a.site_dim();
    const std::size_t nd = static_cast<std::size_t>(n);
    const std::size_t right = ipow(nd, k - site);
    TensorOperator<V> c(n, k - 1);
    auto expand = [&](std::size_t idx, std::size_t x) {
        const std::size_t hi = idx / right;
        const std::size_t lo = idx % right;
        return (hi * nd + x) * right + lo;
    };
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (std::size_t j = 0; j < c.dim(); ++j) {
            V s(0);
            for (std::size_t x = 0; x < nd; ++x) {
                const V& y = a(expand(i, x), expand(j, x));
                if (!is_zero(y)) s += y;
            }
            c(i, j) = std::move(s);
        }
    return c;
}

template <class V>
V trace(const TensorOperator<V>& a)
{
    V s(0);
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!is_zero(a(i, i))) s += a(i, i);
    return s;
}

/// Tr(A * B) without forming the product.
template <class V>
V trace_of_product(const TensorOperator<V>& a, const TensorOperator<V>& b)
{
    a.check_same_shape(b);
    detail::DotAccumulator<V> acc;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const V& x = a(i, j);
            if (is_zero(x)) continue;
            const V& y = b(j, i);
            if (!is_zero(y)) acc.add_product(x, y);
        }
    return acc.finish();
}

/// X * (C (x) C (x) ... (x) C) for a single-site C, one site at a time.
template <class V>
TensorOperator<V> multiply_sitewise(const TensorOperator<V>& x, const TensorOperator<V>& c)
{
    TensorOperator<V> acc = x;
    for (int s = 1; s <= x.sites(); ++s) acc = multiply(acc, embed_site(c, s, x.sites()));
    return acc;
}

}  // namespace hecke
