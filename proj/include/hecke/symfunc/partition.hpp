#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

/// Weakly decreasing positive parts; the empty partition is the partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw OutOfRange("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw OutOfRange("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// "(2,1,1)", "2,1,1", "2 1 1" or "()"; also "1^3" style exponents such as "2,1^2".
    static Partition parse(std::string_view text)
    {
        std::vector<int> parts;
        std::string token;
        auto flush = [&] {
            if (token.empty()) return;
            const auto caret = token.find('^');
            try {
                if (caret == std::string::npos) {
                    parts.push_back(std::stoi(token));
                } else {
                    const int v = std::stoi(token.substr(0, caret));
                    const int times = std::stoi(token.substr(caret + 1));
                    for (int i = 0; i < times; ++i) parts.push_back(v);
                }
            } catch (const std::logic_error&) {
                throw ParseError("bad partition part '" + token + "'", 1, 1);
            }
            token.clear();
        };
        for (char c : text) {
            if (c == '(' || c == ')' || c == '[' || c == ']') continue;
            if (c == ',' || c == ' ') {
                flush();
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(c)) && c != '^')
                throw ParseError(std::string("unexpected '") + c + "' in partition", 1, 1);
            token += c;
        }
        flush();
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int height() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// lambda_i for 0-based i; 0 past the end.
    int part(int i) const { return i < height() ? parts_[static_cast<std::size_t>(i)] : 0; }
    int first() const { return part(0); }

    Partition conjugate() const
    {
        std::vector<int> c(static_cast<std::size_t>(first()), 0);
        for (int row : parts_)
            for (int j = 0; j < row; ++j) ++c[static_cast<std::size_t>(j)];
        return Partition(std::move(c));
    }

    bool contains(const Partition& o) const
    {
        if (o.height() > height()) return false;
        for (int i = 0; i < o.height(); ++i)
            if (o.part(i) > part(i)) return false;
        return true;
    }

    /// Rows (0-based) where a box can be added keeping a partition.
    std::vector<int> addable_rows() const
    {
        std::vector<int> rows;
        for (int i = 0; i <= height(); ++i)
            if (i == 0 || part(i) < part(i - 1)) rows.push_back(i);
        return rows;
    }

    /// Contents (column - row) of the addable cells.
    std::vector<int> addable_contents() const
    {
        std::vector<int> c;
        for (int r : addable_rows()) c.push_back(part(r) - r);
        return c;
    }

    Partition with_box(int row) const
    {
        std::vector<int> p = parts_;
        if (row == height())
            p.push_back(1);
        else
            ++p[static_cast<std::size_t>(row)];
        return Partition(std::move(p));
    }

    /// lambda + (1^k): one extra column of height k on the left.
    Partition plus_column(int k) const
    {
        std::vector<int> p(static_cast<std::size_t>(std::max(k, height())), 0);
        for (int i = 0; i < static_cast<int>(p.size()); ++i) p[static_cast<std::size_t>(i)] = part(i) + (i < k ? 1 : 0);
        return Partition(std::move(p));
    }

    /// Hook length of the 0-based cell (i, j).
    int hook(int i, int j) const { return part(i) - j + conjugate().part(j) - i - 1; }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

/// All partitions of m, reverse-lexicographic: (m) first, (1^m) last.
inline std::vector<Partition> partitions(int m)
{
    if (m < 0) throw OutOfRange("partitions of a negative number");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int v = std::min(left, max_part); v >= 1; --v) {
            cur.push_back(v);
            rec(left - v, v);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

/// Number of standard tableaux of shape lambda (hook length formula); m <= 20.
inline long long count_standard_tableaux(const Partition& lambda)
{
    long long num = 1;
    for (int k = 2; k <= lambda.weight(); ++k) num *= k;
    for (int i = 0; i < lambda.height(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) num /= lambda.hook(i, j);
    return num;
}

struct Cell {
    int row = 0;
    int col = 0;
    int content() const { return col - row; }
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Bijective filling of a shape by 1..m, increasing along rows and down columns.
class StandardTableau {
public:
    StandardTableau() = default;

    explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows))
    {
        std::vector<int> shape;
        for (const auto& r : rows_) shape.push_back(static_cast<int>(r.size()));
        shape_ = Partition(shape);
        const int m = shape_.weight();
        cells_.assign(static_cast<std::size_t>(m), Cell{-1, -1});
        for (int i = 0; i < static_cast<int>(rows_.size()); ++i)
            for (int j = 0; j < static_cast<int>(rows_[static_cast<std::size_t>(i)].size()); ++j) {
                const int v = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (v < 1 || v > m || cells_[static_cast<std::size_t>(v - 1)].row >= 0)
                    throw OutOfRange("tableau must use each of 1.." + std::to_string(m) + " once");
                cells_[static_cast<std::size_t>(v - 1)] = Cell{i, j};
                if (j > 0 && rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] > v)
                    throw OutOfRange("tableau rows must increase");
                if (i > 0 && rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] > v)
                    throw OutOfRange("tableau columns must increase");
            }
    }

    /// 1, 2, ... filled down the first column, then the second, and so on.
    static StandardTableau column_major(const Partition& lambda)
    {
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.height()));
        for (int i = 0; i < lambda.height(); ++i) rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(lambda.part(i)));
        const Partition conj = lambda.conjugate();
        int v = 0;
        for (int j = 0; j < conj.height(); ++j)
            for (int i = 0; i < conj.part(j); ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ++v;
        return StandardTableau(std::move(rows));
    }

    const Partition& shape() const noexcept { return shape_; }
    int size() const noexcept { return static_cast<int>(cells_.size()); }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

    /// Cell holding k (1-based).
    const Cell& cell(int k) const
    {
        if (k < 1 || k > size()) throw PositionOutOfRange("tableau entry " + std::to_string(k) + " out of range");
        return cells_[static_cast<std::size_t>(k - 1)];
    }
    int content(int k) const { return cell(k).content(); }

    /// Shape of the subtableau holding 1..k.
    Partition shape_upto(int k) const
    {
        std::vector<int> p(static_cast<std::size_t>(shape_.height()), 0);
        for (int v = 1; v <= k; ++v) ++p[static_cast<std::size_t>(cell(v).row)];
        return Partition(std::move(p));
    }

    /// Entries row by row, top row first.
    std::vector<int> reading_word() const
    {
        std::vector<int> w;
        for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
        return w;
    }

    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += '/';
            for (std::size_t j = 0; j < rows_[i].size(); ++j) s += (j ? "," : "") + std::to_string(rows_[i][j]);
        }
        return s;
    }

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }

private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
    std::vector<Cell> cells_;
};

/// All standard tableaux of lambda: the column-major one first, the rest by
/// lexicographic order of reading words.
inline std::vector<StandardTableau> standard_tableaux(const Partition& lambda)
{
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.height()));
    std::vector<StandardTableau> out;
    const int m = lambda.weight();
    std::function<void(int)> place = [&](int v) {
        if (v > m) {
            out.emplace_back(rows);
            return;
        }
        for (int i = 0; i < lambda.height(); ++i) {
            auto& row = rows[static_cast<std::size_t>(i)];
            const int j = static_cast<int>(row.size());
            if (j == lambda.part(i)) continue;
            if (i > 0 && static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) <= j) continue;
            row.push_back(v);
            place(v + 1);
            row.pop_back();
        }
    };
    place(1);
    std::sort(out.begin(), out.end(),
              [](const StandardTableau& a, const StandardTableau& b) { return a.reading_word() < b.reading_word(); });
    const auto first = StandardTableau::column_major(lambda);
    auto it = std::find(out.begin(), out.end(), first);
    std::rotate(out.begin(), it, std::next(it));
    return out;
}

}  // namespace hecke
