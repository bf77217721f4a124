#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/scalar/backend.hpp"
#include "hecke/scalar/scalar.hpp"
#include "hecke/symfunc/partition.hpp"

namespace hecke {

namespace detail {

// Semistandard fillings of nu / lambda with content mu whose reverse reading
// word (rows top to bottom, each right to left) is a lattice word.
inline long long count_lr_tableaux(const Partition& nu, const Partition& lambda, const Partition& mu)
{
    std::vector<std::pair<int, int>> cells;  // row-reading order, left to right
    for (int i = 0; i < nu.height(); ++i)
        for (int j = lambda.part(i); j < nu.part(i); ++j) cells.emplace_back(i, j);
    if (static_cast<int>(cells.size()) != mu.weight()) return 0;

    std::vector<std::vector<int>> fill(static_cast<std::size_t>(nu.height()));
    for (int i = 0; i < nu.height(); ++i) fill[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(nu.part(i)), 0);
    std::vector<int> used(static_cast<std::size_t>(mu.height()) + 1, 0);
    long long count = 0;

    // lattice condition on the finished row i, read right to left
    auto row_is_lattice = [&](int i, std::vector<int>& seen) {
        for (int j = nu.part(i) - 1; j >= lambda.part(i); --j) {
            const int v = fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            ++seen[static_cast<std::size_t>(v)];
            if (v > 1 && seen[static_cast<std::size_t>(v)] > seen[static_cast<std::size_t>(v - 1)]) return false;
        }
        return true;
    };

    std::function<void(std::size_t, std::vector<int>)> rec = [&](std::size_t idx, std::vector<int> seen) {
        if (idx > 0) {
            const int prev_row = cells[idx - 1].first;
            const bool row_done = idx == cells.size() || cells[idx].first != prev_row;
            if (row_done && !row_is_lattice(prev_row, seen)) return;
        }
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto [i, j] = cells[idx];
        const int left = j > lambda.part(i) ? fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] : 1;
        for (int v = std::max(left, 1); v <= mu.height(); ++v) {
            if (used[static_cast<std::size_t>(v)] == mu.part(v - 1)) continue;
            // strictly below the cell above, if that cell belongs to the skew shape
            if (i > 0 && j >= lambda.part(i - 1) && fill[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] >= v)
                continue;
            // a lattice word places entry v no higher than row v - 1
            if (v - 1 > i) break;
            fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            ++used[static_cast<std::size_t>(v)];
            rec(idx + 1, seen);
            --used[static_cast<std::size_t>(v)];
        }
        fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
    };
    rec(0, std::vector<int>(static_cast<std::size_t>(mu.height()) + 1, 0));
    return count;
}

}  // namespace detail

/// Littlewood-Richardson coefficients c^nu_{lambda mu}; only nonzero ones are listed.
inline std::map<Partition, long long> lr_expand(const Partition& lambda, const Partition& mu)
{
    std::map<Partition, long long> out;
    for (const auto& nu : partitions(lambda.weight() + mu.weight())) {
        if (!nu.contains(lambda) || !nu.contains(mu)) continue;
        const long long c = detail::count_lr_tableaux(nu, lambda, mu);
        if (c != 0) out[nu] = c;
    }
    return out;
}

/// s_lambda(q^(p-1), q^(p-3), ..., q^(1-p)) by the hook-content formula.
template <Backend B>
value_t<B> schur_principal(const Partition& lambda, int p, const B& b)
{
    if (p < 1) throw OutOfRange("schur_principal needs p >= 1");
    if (lambda.height() > p) return b.constant(0);
    // the formal quotient is a Laurent polynomial; build it once, then specialize
    RationalFunction acc(1);
    const FormalBackend fb;
    for (int i = 0; i < lambda.height(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) acc = acc * q_number(p + j - i, fb) / q_number(lambda.hook(i, j), fb);
    detail::require_generic(b, p + lambda.first());
    return b.from_formal(acc);
}

/// An additive-multiplicative functional on a rank-p frame, recorded through
/// the coefficients e_k of phi(t) = sum_k e_k t^k (e_0 = e_p = 1, e_k = 0 past p).
template <class V>
class AMFunctional {
public:
    AMFunctional(int p, std::vector<V> e) : p_(p), e_(std::move(e))
    {
        if (p < 1) throw OutOfRange("a functional needs p >= 1");
        if (static_cast<int>(e_.size()) != p + 1) throw OutOfRange("expected e_0 .. e_p");
        if (!(e_.front() == V(1)) || !(e_.back() == V(1))) throw OutOfRange("e_0 and e_p must equal 1");
    }

    /// e_k = [p, k]_q.
    template <Backend B>
    static AMFunctional q_binomials(int p, const B& b)
    {
        std::vector<V> e;
        for (int k = 0; k <= p; ++k) e.push_back(q_binomial(p, k, b));
        return AMFunctional(p, std::move(e));
    }

    /// e_k = C(p, k).
    static AMFunctional classical(int p)
    {
        std::vector<V> e;
        V c(1);
        for (int k = 0; k <= p; ++k) {
            e.push_back(c);
            c = c * V(p - k) / V(k + 1);
        }
        return AMFunctional(p, std::move(e));
    }

    int p() const noexcept { return p_; }
    const std::vector<V>& e_values() const noexcept { return e_; }
    V e(int k) const { return (k < 0 || k > p_) ? V(0) : e_[static_cast<std::size_t>(k)]; }

private:
    int p_;
    std::vector<V> e_;
};

namespace detail {
template <class V>
V determinant(std::vector<std::vector<V>> m)
{
    const std::size_t d = m.size();
    V det(1);
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t pr = c;
        while (pr < d && is_zero(m[pr][c])) ++pr;
        if (pr == d) return V(0);
        if (pr != c) {
            std::swap(m[pr], m[c]);
            det = -det;
        }
        det *= m[c][c];
        const V inv = V(1) / m[c][c];
        for (std::size_t i = c + 1; i < d; ++i) {
            if (is_zero(m[i][c])) continue;
            const V f = m[i][c] * inv;
            for (std::size_t j = c; j < d; ++j)
                if (!is_zero(m[c][j])) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}
}  // namespace detail

/// s_lambda evaluated at the (never computed) roots of phi: det(e_{lambda'_i - i + j}).
template <class V>
V am_evaluate(const AMFunctional<V>& f, const Partition& lambda)
{
    const Partition conj = lambda.conjugate();
    const int d = lambda.first();
    std::vector<std::vector<V>> m(static_cast<std::size_t>(d), std::vector<V>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f.e(conj.part(i) - i + j);
    return detail::determinant(std::move(m));
}

template <class V>
struct MultiplicativityReport {
    Partition lambda, mu;
    V lhs;  // f(lambda) f(mu)
    V rhs;  // sum_nu c^nu f(nu)
    std::map<Partition, long long> expansion;
    bool ok = false;
};

template <class V>
MultiplicativityReport<V> am_multiplicativity_check(const AMFunctional<V>& f, const Partition& lambda,
                                                    const Partition& mu)
{
    MultiplicativityReport<V> r;
    r.lambda = lambda;
    r.mu = mu;
    r.lhs = am_evaluate(f, lambda) * am_evaluate(f, mu);
    r.expansion = lr_expand(lambda, mu);
    r.rhs = V(0);
    for (const auto& [nu, c] : r.expansion) r.rhs += V(static_cast<long>(c)) * am_evaluate(f, nu);
    r.ok = r.lhs == r.rhs;
    return r;
}

}  // namespace hecke
