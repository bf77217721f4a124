#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/scalar/backend.hpp"
#include "hecke/symfunc/partition.hpp"
#include "hecke/symmetry/hecke_symmetry.hpp"
#include "hecke/tensor/linalg.hpp"
#include "hecke/tensor/tensor_operator.hpp"

namespace hecke {

/// A primitive idempotent of H_m acting on V^m, labelled by its tableau.
template <class V>
struct IdempotentHandle {
    Partition shape;
    StandardTableau tableau;
    TensorOperator<V> op;
};

/// One generator R_i^(+-1) in a braid word; positions are 1-based.
struct Letter {
    int position = 1;
    int exponent = 1;
};

/// The local representation of the Hecke algebras H_m on V^m defined by a
/// validated symmetry. Operators are cached per (kind, m, ...) and the cache is
/// guarded, so one instance may be shared across threads.
template <Backend B>
class HeckeRepresentation {
public:
    using V = value_t<B>;
    using Operator = TensorOperator<V>;

    explicit HeckeRepresentation(HeckeSymmetry<B> h) : h_(std::move(h)) { h_.require_validated(); }

    const HeckeSymmetry<B>& symmetry() const noexcept { return h_; }
    const B& backend() const noexcept { return h_.backend(); }
    int n() const noexcept { return h_.n(); }

    /// R_i on V^m.
    const Operator& generator(int i, int m) const
    {
        return cached({Kind::generator, m, i, 0}, [&] { return embed_at(h_.r(), i, m); });
    }

    /// R_i^-1 = R_i - (q - q^-1) id, from the Hecke relation.
    const Operator& generator_inverse(int i, int m) const
    {
        return cached({Kind::generator_inverse, m, i, 0}, [&] {
            return generator(i, m) - Operator::scalar(n(), m, backend().q() - backend().q_power(-1));
        });
    }

    /// Product of the letters in word order (the first letter is leftmost).
    Operator rho_word(const std::vector<Letter>& word, int m) const
    {
        Operator acc = Operator::identity(n(), m);
        for (const auto& l : word) {
            if (l.position < 1 || l.position > m - 1)
                throw PositionOutOfRange("generator " + std::to_string(l.position) + " not in 1.." + std::to_string(m - 1));
            if (l.exponent != 1 && l.exponent != -1) throw OutOfRange("letters carry exponent +1 or -1");
            acc = multiply(acc, l.exponent == 1 ? generator(l.position, m) : generator_inverse(l.position, m));
        }
        return acc;
    }

    /// A^(1) = id; A^(k) = ((-1)^(k-1) / k_q) (A^(k-1) (x) id) R'_{k-1}(k-1) ... R'_1(1),
    /// R'_i(j) = R_i - q^j / j_q.
    const Operator& antisymmetrizer(int k) const
    {
        return cached({Kind::antisymmetrizer, k, 0, 0}, [&] { return projector_recursion(k, false); });
    }

    /// The antisymmetrizer of the companion symmetry (-R, q^-1).
    const Operator& symmetrizer(int k) const
    {
        return cached({Kind::symmetrizer, k, 0, 0}, [&] { return projector_recursion(k, true); });
    }

    /// J_1 = id, J_{k+1} = R_k J_k R_k on V^m.
    const Operator& jucys_murphy(int m, int k) const
    {
        if (k < 1 || k > m) throw PositionOutOfRange("Jucys-Murphy index " + std::to_string(k) + " not in 1.." + std::to_string(m));
        return cached({Kind::jucys_murphy, m, k, 0}, [&] {
            if (k == 1) return Operator::identity(n(), m);
            const auto& r = generator(k - 1, m);
            return multiply(multiply(r, jucys_murphy(m, k - 1)), r);
        });
    }

    /// Y_T as a product of spectral projectors of the Jucys-Murphy elements.
    IdempotentHandle<V> primitive_idempotent(const StandardTableau& t) const
    {
        const int m = t.size();
        std::vector<int> id = t.shape().parts();
        id.push_back(0);
        for (int v : t.reading_word()) id.push_back(v);
        const auto& op = cached({Kind::primitive, m, 0, 0, std::move(id)}, [&] {
            Operator y = Operator::identity(n(), m);
            for (int k = 2; k <= m; ++k) {
                const int ck = t.content(k);
                const V target = backend().q_power(2 * ck);
                for (int c : t.shape_upto(k - 1).addable_contents()) {
                    if (c == ck) continue;
                    const V other = backend().q_power(2 * c);
                    const V gap = target - other;
                    if (is_zero(gap))
                        throw NonGenericQ("eigenvalues q^" + std::to_string(2 * ck) + " and q^" + std::to_string(2 * c) +
                                          " of J_" + std::to_string(k) + " coincide");
                    Operator factor = jucys_murphy(m, k) - Operator::scalar(n(), m, other);
                    factor *= V(1) / gap;
                    y = multiply(y, factor);
                }
            }
            return y;
        });
        return {t.shape(), t, op};
    }

    /// Sum of Y_T over the standard tableaux of lambda.
    const Operator& central_idempotent(const Partition& lambda) const
    {
        return cached({Kind::central, lambda.weight(), 0, 0, lambda.parts()}, [&] {
            Operator acc(n(), lambda.weight());
            for (const auto& t : standard_tableaux(lambda)) acc += primitive_idempotent(t).op;
            return acc;
        });
    }

    /// R_{V^a, V^b} on V^(a+b). Both orderings of the double product are built
    /// and compared; a difference means the symmetry is not a braiding.
    Operator braiding_chain(int a, int b) const
    {
        if (a < 1 || b < 1) throw OutOfRange("braiding_chain needs a, b >= 1");
        const int m = a + b;
        Operator first = Operator::identity(n(), m);
        for (int t = b; t >= 1; --t) first = multiply(first, chain(t, t + a - 1, m));
        Operator second = Operator::identity(n(), m);
        for (int s = 1; s <= a; ++s) second = multiply(second, chain(b + s - 1, s, m));
        if (!(first == second))
            throw ChainMismatch("the two orderings of R_{V^" + std::to_string(a) + ", V^" + std::to_string(b) + "} differ");
        return first;
    }

    /// R_{lambda mu} = (Y^mu (x) Y^lambda) R_{V^a, V^b} with central idempotents Y.
    Operator braiding_object(const Partition& lambda, const Partition& mu) const
    {
        const int a = lambda.weight();
        const int b = mu.weight();
        if (a == 0 || b == 0) throw OutOfRange("braiding_object needs nonempty partitions");
        return multiply(tensor_product(central_idempotent(mu), central_idempotent(lambda)), braiding_chain(a, b));
    }

    /// dim V_lambda: rank of the first primitive idempotent of lambda.
    std::size_t object_dim(const Partition& lambda) const
    {
        return rank(primitive_idempotent(StandardTableau::column_major(lambda)).op);
    }

private:
    enum class Kind { generator, generator_inverse, antisymmetrizer, symmetrizer, jucys_murphy, primitive, central };

    struct Key {
        Kind kind;
        int m, i, j;
        std::vector<int> extra{};
        friend bool operator<(const Key& a, const Key& b)
        {
            return std::tie(a.kind, a.m, a.i, a.j, a.extra) < std::tie(b.kind, b.m, b.i, b.j, b.extra);
        }
    };

    template <class F>
    const Operator& cached(const Key& key, F&& build) const
    {
        std::lock_guard<std::recursive_mutex> lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        Operator value = build();
        return cache_.emplace(key, std::move(value)).first->second;
    }

    // R_{i->j}: R_i R_{i+1} ... R_j when i <= j, R_i R_{i-1} ... R_j otherwise.
    Operator chain(int i, int j, int m) const
    {
        Operator acc = generator(i, m);
        const int step = i <= j ? 1 : -1;
        for (int t = i + step; t != j + step; t += step) acc = multiply(acc, generator(t, m));
        return acc;
    }

    Operator projector_recursion(int k, bool companion) const
    {
        if (k < 1) throw OutOfRange("projector degree must be >= 1");
        if (k == 1) return Operator::identity(n(), 1);
        const auto& b = backend();
        const auto& lower = companion ? symmetrizer(k - 1) : antisymmetrizer(k - 1);
        Operator acc = tensor_product(lower, Operator::identity(n(), 1));
        const int qs = companion ? -1 : 1;
        const auto r = companion ? -h_.r() : h_.r();
        for (int i = k - 1; i >= 1; --i) {
            // R'_i(i) = r_i - q'^i / i_q'; the q-number is symmetric under q -> q^-1
            Operator local = r - Operator::scalar(n(), 2, b.q_power(qs * i) / q_number(i, b));
            acc = multiply(acc, embed_at(local, i, k));
        }
        V scale = V(1) / q_number(k, b);
        if ((k - 1) % 2 == 1) scale = -scale;
        acc *= scale;
        return acc;
    }

    HeckeSymmetry<B> h_;
    mutable std::recursive_mutex mutex_;
    mutable std::map<Key, Operator> cache_;
};

}  // namespace hecke
