#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hecke/frame/frame.hpp"

namespace hecke {

namespace detail {
template <class V>
nlohmann::json matrix_json(const TensorOperator<V>& m)
{
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class V>
nlohmann::json vector_json(const std::vector<V>& xs)
{
    auto out = nlohmann::json::array();
    for (const auto& x : xs) out.push_back(to_string(x));
    return out;
}

inline std::string join(const std::vector<long>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
    return s;
}
}  // namespace detail

template <class V>
nlohmann::json to_json(const RankFrame<V>& f)
{
    nlohmann::json j;
    j["p"] = f.p;
    j["poincare"] = {{"minus", f.poincare.minus_coeffs}, {"plus", f.poincare.plus_coeffs}};
    j["u"] = detail::vector_json(f.u);
    j["v"] = detail::vector_json(f.v);
    j["N"] = detail::matrix_json(f.n_matrix);
    j["M"] = detail::matrix_json(f.m_matrix);
    j["classification"] = to_string(f.classification);
    j["natural"] = f.natural;
    j["epsilon"] = f.epsilon ? nlohmann::json(*f.epsilon) : nlohmann::json(nullptr);
    if (f.renorm)
        j["renormalization"] = {{"sign", f.renorm->sign}, {"exponent", "-1/" + std::to_string(f.renorm->denominator)}};
    else
        j["renormalization"] = nullptr;
    j["detq_central"] = f.detq_central;
    return j;
}

template <class V>
std::string to_text(const RankFrame<V>& f)
{
    std::ostringstream os;
    os << "rank p = " << f.p << "\n";
    os << "P_-(t) coefficients: " << detail::join(f.poincare.minus_coeffs) << "\n";
    os << "P_+(t) coefficients: " << detail::join(f.poincare.plus_coeffs) << "\n";
    auto matrix = [&](const char* name, const TensorOperator<V>& m) {
        os << name << ":\n";
        for (std::size_t i = 0; i < m.dim(); ++i) {
            os << "  [";
            for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
            os << "]\n";
        }
    };
    matrix("N", f.n_matrix);
    matrix("M", f.m_matrix);
    os << "N, M: " << to_string(f.classification) << "\n";
    os << "natural: " << (f.natural ? "yes" : "no");
    if (f.epsilon) os << " (epsilon = " << (*f.epsilon > 0 ? "+1" : "-1") << ")";
    os << "\n";
    if (f.renorm) os << "renormalization factor: " << f.renorm->to_string() << "\n";
    os << "det_q central: " << (f.detq_central ? "yes" : "no") << " (holds iff N is scalar)\n";
    return os.str();
}

}  // namespace hecke
