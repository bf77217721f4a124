#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hecke/errors.hpp"
#include "hecke/scalar/backend.hpp"
#include "hecke/scalar/rational.hpp"
#include "hecke/scalar/scalar.hpp"
#include "hecke/symmetry/hecke_symmetry.hpp"

namespace hecke {

namespace detail {

struct TextPosition {
    std::size_t line = 1;
    std::size_t column = 1;
};

inline TextPosition position_of(std::string_view text, std::size_t offset)
{
    TextPosition p;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.column = 1;
        } else {
            ++p.column;
        }
    }
    return p;
}

// Offsets of the values following each `"key":` in document order; string
// contents are skipped so a key name inside a value never matches.
inline std::vector<std::size_t> key_value_offsets(std::string_view text, std::string_view key)
{
    std::vector<std::size_t> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '"') {
            ++i;
            continue;
        }
        const std::size_t start = ++i;
        while (i < text.size() && text[i] != '"') i += text[i] == '\\' ? 2 : 1;
        const std::string_view token = text.substr(start, std::min(i, text.size()) - start);
        ++i;
        std::size_t j = i;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (token == key && j < text.size() && text[j] == ':') {
            ++j;
            while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back(j);
        }
    }
    return out;
}

class FileLocator {
public:
    explicit FileLocator(std::string_view text) : text_(text) {}

    [[noreturn]] void fail_at_key(const std::string& what, std::string_view key, std::size_t occurrence,
                                  std::size_t inner_column = 0) const
    {
        const auto offsets = key_value_offsets(text_, key);
        if (occurrence < offsets.size()) {
            auto p = position_of(text_, offsets[occurrence]);
            throw ParseError(what, p.line, p.column + inner_column);
        }
        throw ParseError(what, 1, 1);
    }

private:
    std::string_view text_;
};

inline std::array<int, 2> read_pair(const nlohmann::json& v, int n, const FileLocator& loc, std::string_view key,
                                    std::size_t idx)
{
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
        loc.fail_at_key("\"" + std::string(key) + "\" must be a pair of integers", key, idx);
    std::array<int, 2> p{v[0].get<int>(), v[1].get<int>()};
    for (int d : p)
        if (d < 0 || d >= n)
            throw DimensionMismatch("entry " + std::to_string(idx) + ": index " + std::to_string(d) + " outside 0.." +
                                    std::to_string(n - 1));
    return p;
}

template <Backend B>
AnySymmetry build_from_entries(const B& backend, int n,
                               const std::vector<std::pair<std::array<std::size_t, 2>, RationalFunction>>& entries)
{
    TensorOperator<value_t<B>> r(n, 2);
    for (const auto& [at, value] : entries) r(at[0], at[1]) = backend.from_formal(value);
    return HeckeSymmetry<B>(backend, std::move(r));
}

}  // namespace detail

/// Parses an R-matrix document. The result is unvalidated.
inline AnySymmetry parse_symmetry(std::string_view text)
{
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto p = detail::position_of(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("malformed JSON", p.line, p.column);
    }
    const detail::FileLocator loc(text);
    if (!doc.is_object()) throw ParseError("top level must be an object", 1, 1);
    if (!doc.contains("n") || !doc["n"].is_number_integer()) loc.fail_at_key("\"n\" must be an integer", "n", 0);
    const int n = doc["n"].get<int>();
    if (n < 1) throw DimensionMismatch("n must be at least 1");
    if (!doc.contains("q") || !doc["q"].is_string()) loc.fail_at_key("\"q\" must be a string", "q", 0);
    const std::string q_text = doc["q"].get<std::string>();
    if (!doc.contains("entries") || !doc["entries"].is_array())
        loc.fail_at_key("\"entries\" must be an array", "entries", 0);

    std::vector<std::pair<std::array<std::size_t, 2>, RationalFunction>> entries;
    std::map<std::array<std::size_t, 2>, std::size_t> seen;
    const auto& list = doc["entries"];
    for (std::size_t idx = 0; idx < list.size(); ++idx) {
        const auto& e = list[idx];
        if (!e.is_object() || !e.contains("out") || !e.contains("in") || !e.contains("value"))
            throw ParseError("entry " + std::to_string(idx) + " needs \"out\", \"in\" and \"value\"", 1, 1);
        const auto out = detail::read_pair(e["out"], n, loc, "out", idx);
        const auto in = detail::read_pair(e["in"], n, loc, "in", idx);
        if (!e["value"].is_string()) loc.fail_at_key("\"value\" must be a string", "value", idx);
        RationalFunction value;
        try {
            value = parse_scalar_literal(e["value"].get<std::string>());
        } catch (const ParseError& pe) {
            // literal column c sits c characters after the opening quote
            loc.fail_at_key(pe.message(), "value", idx, pe.column());
        }
        const std::array<std::size_t, 2> at{detail::pair_code(n, out[0], out[1]), detail::pair_code(n, in[0], in[1])};
        if (auto [it, fresh] = seen.emplace(at, idx); !fresh)
            throw DuplicateEntry("entries " + std::to_string(it->second) + " and " + std::to_string(idx) +
                                 " share (out, in)");
        entries.emplace_back(at, std::move(value));
    }

    if (q_text == "formal") return detail::build_from_entries(FormalBackend{}, n, entries);
    Rational q;
    try {
        q = parse_rational(q_text);
    } catch (const Error&) {
        loc.fail_at_key("\"q\" must be \"formal\" or a rational", "q", 0);
    }
    try {
        return detail::build_from_entries(NumericBackend(q), n, entries);
    } catch (const DivisionByZero& e) {
        throw ParseError(std::string("entry value has a pole at q: ") + e.what(), 1, 1);
    }
}

inline AnySymmetry load_symmetry(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_symmetry(ss.str());
}

/// One entry per line in lexicographic (out, in) order, so output is canonical.
template <Backend B>
std::string serialize(const HeckeSymmetry<B>& h)
{
    const int n = h.n();
    const auto& r = h.r();
    std::ostringstream os;
    os << "{\n  \"n\": " << n << ",\n  \"q\": " << nlohmann::json(h.backend().name()).dump() << ",\n  \"entries\": [";
    bool first = true;
    for (std::size_t o = 0; o < r.dim(); ++o)
        for (std::size_t i = 0; i < r.dim(); ++i) {
            if (is_zero(r(o, i))) continue;
            const auto mo = MultiIndex::decode(o, n, 2);
            const auto mi = MultiIndex::decode(i, n, 2);
            os << (first ? "\n" : ",\n") << "    {\"out\": [" << mo.digits[0] << ", " << mo.digits[1] << "], \"in\": ["
               << mi.digits[0] << ", " << mi.digits[1] << "], \"value\": " << nlohmann::json(to_string(r(o, i))).dump()
               << "}";
            first = false;
        }
    os << (first ? "]\n}\n" : "\n  ]\n}\n");
    return os.str();
}

inline std::string serialize(const AnySymmetry& h)
{
    return std::visit([](const auto& s) { return serialize(s); }, h);
}

}  // namespace hecke
