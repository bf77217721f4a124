#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hecke/qtrace/qtrace.hpp"

namespace hecke {

template <class V>
nlohmann::json to_json(const std::vector<QdimEntry<V>>& table)
{
    auto rows = nlohmann::json::array();
    for (const auto& e : table)
        rows.push_back({{"lambda", e.lambda.to_string()},
                        {"trace", to_string(e.trace_value)},
                        {"schur", to_string(e.schur_value)},
                        {"agree", e.agree},
                        {"classical", to_string(e.classical)}});
    return rows;
}

/// Aligned columns: lambda, trace value, Schur value, agreement, q -> 1 value.
template <class V>
std::string to_text(const std::vector<QdimEntry<V>>& table)
{
    std::vector<std::vector<std::string>> cells{{"lambda", "trace", "schur", "agree", "q->1"}};
    for (const auto& e : table)
        cells.push_back({e.lambda.to_string(), to_string(e.trace_value), to_string(e.schur_value),
                         e.agree ? "yes" : "NO", to_string(e.classical)});
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << row[c];
            if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << "\n";
    }
    return os.str();
}

template <class V>
nlohmann::json to_json(const LemmaOmegaReport<V>& r)
{
    auto rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"k", row.k}, {"lhs", to_string(row.lhs)}, {"rhs", to_string(row.rhs)}, {"ok", row.ok}});
    auto gen = nlohmann::json::array();
    for (const auto& g : r.generating) gen.push_back(to_string(g));
    return {{"p", r.p}, {"rows", rows}, {"generating", gen}, {"generating_ok", r.generating_ok}, {"ok", r.ok()}};
}

template <class V>
std::string to_text(const LemmaOmegaReport<V>& r)
{
    std::ostringstream os;
    os << "Tr(A^(k) C_1...C_k) against q^(-pk) [p,k]_q, p = " << r.p << "\n";
    for (const auto& row : r.rows)
        os << "  k = " << row.k << ": " << to_string(row.lhs) << (row.ok ? " = " : " != ") << to_string(row.rhs) << "\n";
    os << "generating product: " << (r.generating_ok ? "matches" : "MISMATCH") << "\n";
    return os.str();
}

}  // namespace hecke
