#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

/// Basis label (i_1, ..., i_k) of V^{(x)k}; the first factor is most significant.
struct MultiIndex {
    std::vector<int> digits;
    int n = 0;

    std::size_t code() const
    {
        std::size_t c = 0;
        for (int d : digits) {
            if (d < 0 || d >= n) throw PositionOutOfRange("digit " + std::to_string(d) + " outside 0.." + std::to_string(n - 1));
            c = c * static_cast<std::size_t>(n) + static_cast<std::size_t>(d);
        }
        return c;
    }

    static MultiIndex decode(std::size_t code, int n, int k)
    {
        MultiIndex m{std::vector<int>(static_cast<std::size_t>(k)), n};
        for (int t = k - 1; t >= 0; --t) {
            m.digits[static_cast<std::size_t>(t)] = static_cast<int>(code % static_cast<std::size_t>(n));
            code /= static_cast<std::size_t>(n);
        }
        return m;
    }

    /// 1-based digit string, e.g. "12" for (0, 1); matches the usual e_1 (x) e_2 labels.
    std::string label() const
    {
        std::string s;
        for (std::size_t t = 0; t < digits.size(); ++t) {
            if (t > 0 && n > 9) s += ',';
            s += std::to_string(digits[t] + 1);
        }
        return s;
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

inline std::size_t ipow(std::size_t base, int exp)
{
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace hecke
