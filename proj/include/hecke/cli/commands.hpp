#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke/errors.hpp"
#include "hecke/frame/frame.hpp"
#include "hecke/frame/io.hpp"
#include "hecke/heckealg/representation.hpp"
#include "hecke/qtrace/io.hpp"
#include "hecke/qtrace/qtrace.hpp"
#include "hecke/scalar/backend.hpp"
#include "hecke/symfunc/partition.hpp"
#include "hecke/symfunc/schur.hpp"
#include "hecke/symmetry/hecke_symmetry.hpp"
#include "hecke/symmetry/io.hpp"
#include "hecke/tensor/tensor_operator.hpp"

namespace hecke::cli {

/// Bad flags, unreadable input or an unusable backend; maps to exit status 2.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error("UsageError: " + what) {}
};

enum class Format { text, json };

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

/// Largest operator the CLI will raise the dimension limit to.
inline constexpr std::size_t cli_dimension_cap = 1024;

struct RunConfig {
    std::string command;              // validate | frame | qdim | report
    std::optional<std::string> input;  // path to a JSON R-matrix
    std::optional<std::string> builtin;  // "uqsln:n"
    std::optional<std::string> backend;  // "formal", "numeric" (q = 3/2) or a rational literal
    std::optional<int> upto;
    std::vector<std::string> partitions;
    int plus_degree = 5;
    bool lemma_omega = false;
    bool am_check = false;
    Format format = Format::text;
    std::optional<std::string> out;
};

/// Rendered output of one command.
struct Outcome {
    int exit_code = exit_ok;
    std::string text;
    nlohmann::json json = nlohmann::json::object();

    std::string render(Format f) const { return f == Format::json ? json.dump(2) + "\n" : text; }
};

namespace detail {

inline std::string error_name(const std::exception& e)
{
    const std::string w = e.what();
    const auto end = w.find_first_of(": ");
    return end == std::string::npos ? std::string("Error") : w.substr(0, end);
}

inline nlohmann::json error_json(const std::exception& e) { return {{"error", error_name(e)}, {"message", e.what()}}; }

struct Loaded {
    AnySymmetry symmetry;
    std::string source;
};

inline Rational default_numeric_q() { return make_rational(3, 2); }

inline Loaded load(const RunConfig& cfg)
{
    if (cfg.input.has_value() == cfg.builtin.has_value()) throw UsageError("give exactly one of --input and --builtin");
    std::optional<Rational> numeric_q;
    bool force_formal = false;
    if (cfg.backend) {
        if (*cfg.backend == "formal")
            force_formal = true;
        else if (*cfg.backend == "numeric")
            numeric_q = default_numeric_q();
        else {
            try {
                numeric_q = parse_rational(*cfg.backend);
            } catch (const ParseError&) {
                throw UsageError("--backend must be formal, numeric or a rational q, got '" + *cfg.backend + "'");
            }
        }
    }
    if (numeric_q && is_zero(*numeric_q)) throw UsageError("q = 0 is not allowed");

    if (cfg.builtin) {
        const std::string& b = *cfg.builtin;
        const std::string prefix = "uqsln:";
        int n = 0;
        try {
            if (b.rfind(prefix, 0) != 0) throw std::invalid_argument(b);
            std::size_t used = 0;
            n = std::stoi(b.substr(prefix.size()), &used);
            if (used != b.size() - prefix.size()) throw std::invalid_argument(b);
        } catch (const std::logic_error&) {
            throw UsageError("unknown builtin '" + b + "'; expected uqsln:n");
        }
        if (n < 1) throw UsageError("uqsln:n needs n >= 1");
        // rational-function growth on V^4 for n = 4 makes q = 3/2 the default there
        if (!force_formal && !numeric_q && n >= 4) numeric_q = default_numeric_q();
        const std::string name = "U_q(sl(" + std::to_string(n) + ")) builtin";
        if (numeric_q) return {build_uq_sln(n, NumericBackend(*numeric_q)), name};
        return {build_uq_sln(n, FormalBackend{}), name};
    }

    AnySymmetry s = load_symmetry(*cfg.input);
    if (auto* formal = std::get_if<HeckeSymmetry<FormalBackend>>(&s)) {
        if (numeric_q) s = specialize(*formal, *numeric_q);
    } else {
        const auto& num = std::get<HeckeSymmetry<NumericBackend>>(s);
        if (force_formal) throw UsageError("the input fixes q = " + num.backend().name() + "; it has no formal form");
        if (numeric_q && *numeric_q != num.backend().q_value())
            throw UsageError("the input fixes q = " + num.backend().name() + ", not " + to_string(*numeric_q));
    }
    return {std::move(s), *cfg.input};
}

inline std::vector<Partition> requested_partitions(const RunConfig& cfg)
{
    std::vector<Partition> out;
    for (const auto& text : cfg.partitions) {
        try {
            out.push_back(Partition::parse(text));
        } catch (const Error& e) {
            throw UsageError("bad --partition '" + text + "': " + e.what());
        }
    }
    // weight first, then the reverse-lexicographic order of partitions(m)
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a > b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline int working_degree(const RunConfig& cfg, int n)
{
    int d = std::max({cfg.plus_degree, cfg.upto.value_or(3), n + 1});
    for (const auto& p : requested_partitions(cfg)) d = std::max(d, p.weight());
    return d;
}

inline std::size_t power(std::size_t base, int exp)
{
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > cli_dimension_cap) return cli_dimension_cap + 1;
    }
    return r;
}

/// Runs the requested sections for one backend, appending to the outcome.
template <Backend B>
class Pipeline {
public:
    using V = value_t<B>;

    Pipeline(HeckeSymmetry<B> h, const RunConfig& cfg, Outcome& out) : h_(std::move(h)), cfg_(cfg), out_(out) {}

    void run(const std::string& source)
    {
        const int n = h_.n();
        std::ostringstream head;
        head << "symmetry: " << source << ", n = " << n << ", q = " << h_.backend().name() << "\n";
        out_.text += head.str();
        out_.json["symmetry"] = {{"source", source}, {"n", n}, {"q", h_.backend().name()}};

        if (!validate_section()) return;
        if (cfg_.command == "validate") return;
        rep_ = std::make_unique<HeckeRepresentation<B>>(h_);
        if (!frame_section()) return;
        if (cfg_.command == "frame") return;
        if (cfg_.command == "report") c_section();
        qdim_section();
    }

private:
    void fail() { out_.exit_code = std::max(out_.exit_code, exit_check_failed); }

    static std::string verdict(bool ok) { return ok ? "pass" : "FAIL"; }

    static nlohmann::json residual_json(const std::vector<ResidualEntry>& r)
    {
        auto a = nlohmann::json::array();
        for (const auto& e : r) a.push_back({{"out", e.out}, {"in", e.in}, {"value", e.value}});
        return a;
    }

    bool validate_section()
    {
        const int bound = std::max(12, 2 * (working_degree(cfg_, h_.n()) + h_.n()));
        const auto rep = validate(h_, bound);
        std::ostringstream os;
        auto residual = [&](const char* name, bool ok, std::size_t count, const std::vector<ResidualEntry>& r) {
            os << name << ": " << verdict(ok);
            if (!ok) {
                os << " (" << count << " nonzero residual entries)\n";
                for (const auto& e : r) os << "  out " << e.out << ", in " << e.in << ": " << e.value << "\n";
            } else {
                os << "\n";
            }
        };
        residual("yang-baxter", rep.yb_ok, rep.yb_nonzeros, rep.yb_residual);
        residual("hecke", rep.hecke_ok, rep.hecke_nonzeros, rep.hecke_residual);
        os << "generic q (bound " << rep.genericity.bound << "): " << verdict(rep.generic_ok);
        if (!rep.generic_ok) os << " (" << rep.genericity.reason << ")";
        os << "\n";
        out_.text += os.str();
        out_.json["validate"] = {
            {"yang_baxter", {{"ok", rep.yb_ok}, {"nonzeros", rep.yb_nonzeros}, {"residual", residual_json(rep.yb_residual)}}},
            {"hecke", {{"ok", rep.hecke_ok}, {"nonzeros", rep.hecke_nonzeros}, {"residual", residual_json(rep.hecke_residual)}}},
            {"generic", {{"ok", rep.generic_ok}, {"bound", rep.genericity.bound}, {"reason", rep.genericity.reason}}},
            {"ok", rep.ok()}};
        if (!rep.ok()) fail();
        return rep.ok();
    }

    bool frame_section()
    {
        try {
            frame_ = naturality_report(*rep_, cfg_.plus_degree);
        } catch (const NotEven& e) {
            return frame_failure(e);
        } catch (const RelationViolated& e) {
            return frame_failure(e);
        } catch (const RankNotOne& e) {
            return frame_failure(e);
        } catch (const IdentityViolated& e) {
            return frame_failure(e);
        }
        out_.text += to_text(*frame_);
        out_.text += "M N = q^2 id: confirmed\n";
        out_.json["frame"] = to_json(*frame_);
        out_.json["frame"]["mn_identity"] = true;
        return true;
    }

    bool frame_failure(const std::exception& e)
    {
        out_.text += std::string("frame: ") + e.what() + "\n";
        out_.json["frame"] = error_json(e);
        fail();
        return false;
    }

    void c_section()
    {
        try {
            const auto r = check_c_properties(h_, frame_->p);
            out_.text += "C matrix: R C1 C2 = C1 C2 R " + verdict(r.rcc_ok) + "; Tr C = " + r.trace.to_string() + " " +
                         verdict(r.trace_ok) + "; Tr_2(R C_2) = id " + verdict(r.partial_ok) + "\n";
            out_.json["c_matrix"] = {{"rcc", r.rcc_ok},
                                     {"trace", r.trace.to_string()},
                                     {"expected_trace", r.expected_trace.to_string()},
                                     {"trace_ok", r.trace_ok},
                                     {"partial_trace", r.partial_ok},
                                     {"ok", r.ok()}};
            if (!r.ok()) fail();
        } catch (const NotColumnInvertible& e) {
            out_.text += std::string("C matrix: ") + e.what() + "\n";
            out_.json["c_matrix"] = error_json(e);
            fail();
        }
    }

    void qdim_section()
    {
        std::optional<TraceContext<B>> ctx;
        try {
            ctx.emplace(*rep_, *frame_);
        } catch (const Error& e) {
            out_.text += std::string("trace context: ") + e.what() + "\n";
            out_.json["qdim"] = error_json(e);
            fail();
            return;
        }
        std::vector<QdimEntry<V>> table;
        const auto requested = requested_partitions(cfg_);
        if (requested.empty() || cfg_.command == "report") {
            table = dimension_table(*ctx, cfg_.upto.value_or(3));
        } else {
            for (const auto& lambda : requested) table.push_back(qdim_entry(*ctx, lambda));
        }
        bool agree = true;
        for (const auto& e : table) agree = agree && e.agree;
        out_.text += "dimension table, p = " + std::to_string(ctx->p()) + "\n" + to_text(table);
        out_.json["qdim"] = {{"p", ctx->p()}, {"rows", to_json(table)}, {"ok", agree}};
        if (!agree) {
            out_.text += "CrossCheckFailed: trace and hook-content values differ\n";
            fail();
        }

        if (cfg_.lemma_omega || cfg_.command == "report") {
            const auto lo = lemma_omega_table(*ctx);
            out_.text += to_text(lo);
            out_.json["lemma_omega"] = to_json(lo);
            if (!lo.ok()) fail();
        }
        if (cfg_.am_check || cfg_.command == "report") am_section(*ctx);
    }

    void am_section(const TraceContext<B>& ctx)
    {
        const int limit = std::max(2, cfg_.upto.value_or(3));
        std::vector<Partition> small;
        for (int k = 0; k <= limit; ++k)
            for (const auto& p : partitions(k)) small.push_back(p);
        const auto f = AMFunctional<V>::q_binomials(ctx.p(), ctx.backend());
        auto rows = nlohmann::json::array();
        std::size_t checked = 0, failed = 0;
        for (const auto& a : small)
            for (const auto& b : small) {
                if (a.weight() + b.weight() > limit || a.empty() || b.empty()) continue;
                const auto traced = qdim_multiplicativity(ctx, a, b);
                const auto functional = am_multiplicativity_check(f, a, b);
                const bool ok = traced.ok && functional.ok && traced.lhs == functional.lhs;
                ++checked;
                if (!ok) ++failed;
                rows.push_back({{"lambda", a.to_string()},
                                {"mu", b.to_string()},
                                {"product", to_string(traced.lhs)},
                                {"lr_sum", to_string(traced.rhs)},
                                {"functional_ok", functional.ok},
                                {"ok", ok}});
            }
        out_.text += "multiplicativity through LR, |lambda| + |mu| <= " + std::to_string(limit) + ": " +
                     std::to_string(checked - failed) + "/" + std::to_string(checked) + " pass\n";
        out_.json["am_check"] = {{"bound", limit}, {"rows", rows}, {"ok", failed == 0}};
        if (failed != 0) fail();
    }

    HeckeSymmetry<B> h_;
    const RunConfig& cfg_;
    Outcome& out_;
    std::unique_ptr<HeckeRepresentation<B>> rep_;
    std::optional<RankFrame<V>> frame_;
};

}  // namespace detail

/// Executes one command. Usage and input errors give exit status 2 with the
/// message in the text and under "error" in the JSON.
inline Outcome run(const RunConfig& cfg)
{
    Outcome out;
    out.json["command"] = cfg.command;
    try {
        if (cfg.command != "validate" && cfg.command != "frame" && cfg.command != "qdim" && cfg.command != "report")
            throw UsageError("unknown command '" + cfg.command + "'");
        if (cfg.plus_degree < 0) throw UsageError("--plus-degree must be >= 0");
        if (cfg.upto && *cfg.upto < 1) throw UsageError("--upto must be >= 1");
        auto loaded = detail::load(cfg);
        const int n = std::visit([](const auto& h) { return h.n(); }, loaded.symmetry);
        const std::size_t needed = detail::power(static_cast<std::size_t>(n), detail::working_degree(cfg, n));
        ScopedDimensionLimit limit(std::max(max_dimension(), std::min(needed, cli_dimension_cap)));
        std::visit(
            [&](auto& h) {
                using H = std::decay_t<decltype(h)>;
                detail::Pipeline<typename H::backend_type>(std::move(h), cfg, out).run(loaded.source);
            },
            loaded.symmetry);
    } catch (const Error& e) {
        out.exit_code = exit_usage;
        out.text += std::string(e.what()) + "\n";
        out.json["error"] = detail::error_json(e);
    }
    out.json["exit_code"] = out.exit_code;
    return out;
}

/// Full command line: parses flags with CLI11, runs, writes to --out or `out`.
inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hecke symmetry toolkit: validation, rank frames and quantum dimensions"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "text";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "JSON file with the R-matrix entries");
        sub->add_option("--builtin", cfg.builtin, "builtin symmetry, uqsln:n");
        sub->add_option("--backend", cfg.backend, "formal, numeric (q = 3/2) or a rational q such as 3/2");
        sub->add_option("--plus-degree", cfg.plus_degree, "degree through which P_+(t) is computed")->capture_default_str();
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", cfg.out, "write the report to this path");
    };
    auto add_tables = [&](CLI::App* sub) {
        sub->add_option("--upto", cfg.upto, "all partitions of weight 1..m (default 3)");
        sub->add_option("--partition", cfg.partitions, "a partition such as 2,1 (repeatable)");
        sub->add_flag("--lemma-omega", cfg.lemma_omega, "add the Tr(A^(k) C^k) table");
        sub->add_flag("--am-check", cfg.am_check, "add the multiplicativity check through LR coefficients");
    };
    auto* validate_cmd = app.add_subcommand("validate", "braid relation, Hecke relation and genericity");
    auto* frame_cmd = app.add_subcommand("frame", "rank, Poincare series, u, v, N, M and naturality");
    auto* qdim_cmd = app.add_subcommand("qdim", "quantum dimensions by trace and by hook-content");
    auto* report_cmd = app.add_subcommand("report", "every check and table");
    for (auto* sub : {validate_cmd, frame_cmd, qdim_cmd, report_cmd}) add_common(sub);
    add_tables(qdim_cmd);
    add_tables(report_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    for (auto* sub : {validate_cmd, frame_cmd, qdim_cmd, report_cmd})
        if (sub->parsed()) cfg.command = sub->get_name();
    cfg.format = format == "json" ? Format::json : Format::text;

    const Outcome result = run(cfg);
    if (result.exit_code == exit_usage && cfg.format == Format::text) {
        err << result.text;
        return exit_usage;
    }
    const std::string rendered = result.render(cfg.format);
    if (cfg.out) {
        std::ofstream file(*cfg.out, std::ios::binary);
        if (!file) {
            err << "UsageError: cannot write " << *cfg.out << "\n";
            return exit_usage;
        }
        file << rendered;
    } else {
        out << rendered;
    }
    return result.exit_code;
}

}  // namespace hecke::cli
