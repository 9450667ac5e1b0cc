#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "loopalg/parse.hpp"
#include "loopalg/serialize.hpp"
#include "loopalg/verify.hpp"

using namespace loopalg;

namespace {

long degree_limit() {
    if (const char* env = std::getenv("LOOPALG_MAX_DEGREE")) return std::atol(env);
    return 64;
}

std::pair<long, long> parse_window(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--window", "expected LO:HI");
    long lo = std::stol(s.substr(0, colon));
    long hi = std::stol(s.substr(colon + 1));
    long cap = degree_limit();
    if (lo > hi || lo < -cap || hi > cap)
        throw CLI::ValidationError(
            "--window", "window must lie within [-" + std::to_string(cap) + ", " +
                            std::to_string(cap) + "] (override with LOOPALG_MAX_DEGREE)");
    return {lo, hi};
}

void print_presentation(const PresentedAlgebra& A, const char* label) {
    const GradedAlgebra& G = A.algebra();
    std::cout << label << " (" << to_string(G.ring()) << "):\n  generators:";
    for (const auto& g : G.generators())
        std::cout << " " << g.name << "[" << g.degree
                  << (g.kind == GenKind::Exterior ? ",ext" : "") << "]";
    std::cout << "\n";
    for (const auto& r : A.rewrites())
        std::cout << "  rule: " << display(G, r.lhs) << " -> " << display(G, r.rhs) << "\n";
    for (const auto& t : A.torsions())
        std::cout << "  torsion: " << t.modulus << " * (monomials containing "
                  << G.gen(t.pattern).name << ") = 0\n";
}

void cmd_show(const LoopModel& M, bool as_json) {
    if (as_json) {
        std::cout << model_to_json(M).dump(2) << "\n";
        return;
    }
    const GradedAlgebra& GO = M.omega->algebra();
    std::cout << "model " << M.name << " (dim G = " << M.dim_group << ")\n";
    print_presentation(*M.omega, "loop side");
    print_presentation(*M.base, "base side");
    std::cout << "primitives:";
    for (const auto& p : M.primitives->items) {
        std::cout << " " << p.name << "[" << p.degree << "]";
        if (p.torsion) std::cout << "(torsion " << *p.torsion << ")";
    }
    std::cout << "\n";
    for (std::size_t i = 0; i < GO.size(); ++i) {
        std::cout << "D(" << GO.gen(i).name
                  << ") = " << display(GO, M.hopf.coproduct_on_generators[i])
                  << ", eps = " << M.hopf.counit_on_generators[i].str() << ", sigma = "
                  << display(*M.primitives, M.suspension.values_on_generators[i]) << "\n";
    }
    const GradedAlgebra& GB = M.base->algebra();
    for (std::size_t p = 0; p < M.primitive_actions.size(); ++p) {
        std::cout << "action " << M.primitives->items[p].name << ":";
        for (std::size_t i = 0; i < GB.size(); ++i)
            std::cout << " " << GB.gen(i).name << " -> "
                      << display(GB, M.primitive_actions[p].values_on_generators[i]) << ";";
        std::cout << "\n";
    }
}

int cmd_delta(const LoopModel& M, const std::string& expr, const std::string& path,
              bool as_json) {
    LoopElement e = parse_loop_element(M, expr);
    LoopElement d1, d2;
    bool have1 = false, have2 = false;
    if (path == "eq1" || path == "both") {
        d1 = bv_delta(M, e);
        have1 = true;
    }
    if (path == "deriv" || path == "both") {
        d2 = bv_delta_derivation_form(M, e);
        have2 = true;
    }
    if (have1 && have2 && !loop_sub(M, d1, d2).is_zero()) {
        std::cerr << "paths disagree:\n  coproduct path:  " << display(M, d1)
                  << "\n  derivation path: " << display(M, d2) << "\n";
        return 1;
    }
    const LoopElement& d = have1 ? d1 : d2;
    if (as_json)
        std::cout << loop_element_to_json(M, d).dump(2) << "\n";
    else
        std::cout << display(M, d) << "\n";
    return 0;
}

int cmd_verify(const LoopModel& M, const std::pair<long, long>& window, std::uint32_t wl,
               std::uint64_t seed) {
    VerifyOptions opt;
    opt.degree_lo = window.first;
    opt.degree_hi = window.second;
    opt.word_length = wl;
    opt.seed = seed;
    auto results = run_verification(M, opt);
    json out = json::array();
    for (const auto& r : results)
        out.push_back(json{{"check", r.check},
                           {"model", M.name},
                           {"window", {window.first, window.second}},
                           {"failures", r.failures},
                           {"elapsed_ms", r.elapsed_ms}});
    std::cout << out.dump(2) << "\n";
    return all_ok(results) ? 0 : 1;
}

int cmd_hilbert(const LoopModel& M, const std::string& side, const std::pair<long, long>& window,
                bool oracle, bool as_json) {
    json rows = json::array();
    for (long d = window.first; d <= window.second; ++d) {
        json row{{"degree", d}};
        if (side == "loop") {
            row["dim"] = loop_dimension(M, d);
        } else {
            const PresentedAlgebra& A = side == "omega" ? *M.omega : *M.base;
            row["dim"] = hilbert_dimension(A, d);
            if (oracle) row["oracle"] = oracle_dimension(A, d);
        }
        rows.push_back(row);
    }
    if (as_json) {
        std::cout << rows.dump(2) << "\n";
    } else {
        for (const auto& row : rows) {
            std::cout << row["degree"].get<long>() << "\t" << row["dim"].get<std::size_t>();
            if (row.contains("oracle")) std::cout << "\t" << row["oracle"].get<std::size_t>();
            std::cout << "\n";
        }
    }
    if (oracle)
        for (const auto& row : rows)
            if (row.contains("oracle") && row["dim"] != row["oracle"]) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact string-topology BV algebra engine for compact Lie group models"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of plain text");

    std::string model_name, expr, expr2, path = "eq1", side = "omega", window_s = "-24:24",
                               out_file;
    std::uint32_t word_length = 3;
    std::uint64_t seed = 0;
    bool oracle = false;

    auto* show = app.add_subcommand("show", "print a model's presentation and structure maps");
    show->add_option("model", model_name)->required();

    auto* delta = app.add_subcommand("delta", "apply the BV operator to an expression");
    delta->add_option("model", model_name)->required();
    delta->add_option("expr", expr)->required();
    delta->add_option("--path", path, "eq1 | deriv | both")
        ->check(CLI::IsMember({"eq1", "deriv", "both"}));

    auto* mul_cmd = app.add_subcommand("mul", "loop product of two expressions");
    mul_cmd->add_option("model", model_name)->required();
    mul_cmd->add_option("lhs", expr)->required();
    mul_cmd->add_option("rhs", expr2)->required();

    auto* verify = app.add_subcommand("verify", "run the full invariant suite");
    verify->add_option("model", model_name)->required();
    verify->add_option("--window", window_s, "degree window LO:HI");
    verify->add_option("--word-length", word_length);
    verify->add_option("--seed", seed);

    auto* hilbert = app.add_subcommand("hilbert", "per-degree dimensions");
    hilbert->add_option("model", model_name)->required();
    hilbert->add_option("--side", side)->check(CLI::IsMember({"omega", "base", "loop"}));
    hilbert->add_option("--window", window_s, "degree window LO:HI");
    hilbert->add_flag("--oracle", oracle, "cross-check against exact row reduction");

    auto* export_cmd = app.add_subcommand("export", "dump the model as JSON");
    export_cmd->add_option("model", model_name)->required();
    export_cmd->add_option("--out", out_file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        LoopModel M = build(parse_model_id(model_name));
        if (show->parsed()) {
            cmd_show(M, as_json);
            return 0;
        }
        if (delta->parsed()) return cmd_delta(M, expr, path, as_json);
        if (mul_cmd->parsed()) {
            LoopElement p =
                loop_product(M, parse_loop_element(M, expr), parse_loop_element(M, expr2));
            if (as_json)
                std::cout << loop_element_to_json(M, p).dump(2) << "\n";
            else
                std::cout << display(M, p) << "\n";
            return 0;
        }
        if (verify->parsed()) return cmd_verify(M, parse_window(window_s), word_length, seed);
        if (hilbert->parsed())
            return cmd_hilbert(M, side, parse_window(window_s), oracle, as_json);
        if (export_cmd->parsed()) {
            std::ofstream f(out_file);
            if (!f) {
                std::cerr << "cannot open " << out_file << "\n";
                return 1;
            }
            f << model_to_json(M).dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
