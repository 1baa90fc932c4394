// Command-line front end: solve, mason, lemmas, fuzz, parse.

#include "jesma/commands.hpp"
#include "jesma/error.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace jesma;

void emit(const cli::CommandResult& r, const std::string& format) {
    if (format == "json")
        std::cout << r.report.dump(2) << "\n";
    else if (r.report.contains("canonical"))
        std::cout << r.report["canonical"].get<std::string>() << "\n";
    else
        std::cout << report::render_text(r.report);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver and verifier for (wA)^x + (wB)^y = (wC)^z over polynomial "
                 "Pythagorean triples"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto add_window = [](CLI::App* sub, SearchWindow& win) {
        sub->add_option("--window-x", win.x_limit, "Largest x searched")->capture_default_str();
        sub->add_option("--window-y", win.y_limit, "Largest y searched")->capture_default_str();
    };

    cli::SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Enumerate all solutions and compare with the prediction");
    solve->add_option("--f", solve_args.f, "Polynomial f")->required();
    solve->add_option("--g", solve_args.g, "Polynomial g")->required();
    solve->add_option("--w", solve_args.w, "Scale polynomial w")->capture_default_str();
    solve->add_flag("--strict", solve_args.strict, "Reject constant f or g");
    add_window(solve, solve_args.window);

    cli::MasonArgs mason_args;
    auto* mason = app.add_subcommand("mason", "Check max degree <= eta(abc) - 1 for a + b = c");
    mason->add_option("--a", mason_args.a, "Polynomial a")->required();
    mason->add_option("--b", mason_args.b, "Polynomial b")->required();
    mason->add_option("--c", mason_args.c, "Polynomial c")->required();

    cli::LemmaArgs lemma_args;
    auto* lemmas = app.add_subcommand("lemmas", "Run every statement verifier on one instance");
    lemmas->add_option("--f", lemma_args.f, "Polynomial f")->required();
    lemmas->add_option("--g", lemma_args.g, "Polynomial g")->required();
    lemmas->add_option("--w", lemma_args.w, "Scale polynomial w")->capture_default_str();
    lemmas->add_flag("--strict", lemma_args.strict, "Reject constant f or g");
    lemmas->add_option("--r-max", lemma_args.limits.r_max)->capture_default_str();
    lemmas->add_option("--m-max", lemma_args.limits.m_max)->capture_default_str();
    lemmas->add_option("--n-max", lemma_args.limits.n_max)->capture_default_str();
    add_window(lemmas, lemma_args.window);

    CampaignConfig cfg;
    std::string deg_f = "1:3", deg_g = "1:3", deg_w = "1:3", w_mode = "mixed";
    bool real_only = false;
    auto* fuzz = app.add_subcommand("fuzz", "Seeded campaign over random instances");
    fuzz->add_option("--trials", cfg.trials)->capture_default_str();
    fuzz->add_option("--seed", cfg.seed)->capture_default_str();
    fuzz->add_option("--deg-f", deg_f, "Degree of f, N or LO:HI")->capture_default_str();
    fuzz->add_option("--deg-g", deg_g, "Degree of g, N or LO:HI")->capture_default_str();
    fuzz->add_option("--deg-w", deg_w, "Degree of nonconstant w")->capture_default_str();
    fuzz->add_option("--coeff-bound", cfg.coeff_bound)->capture_default_str();
    fuzz->add_option("--w-mode", w_mode)
        ->check(CLI::IsMember({"constant", "nonconstant", "mixed"}))
        ->capture_default_str();
    fuzz->add_flag("--real", real_only, "Integer instead of Gaussian integer coefficients");
    fuzz->add_option("--r-max", cfg.limits.r_max)->capture_default_str();
    fuzz->add_option("--m-max", cfg.limits.m_max)->capture_default_str();
    fuzz->add_option("--n-max", cfg.limits.n_max)->capture_default_str();
    add_window(fuzz, cfg.window);

    std::string expr;
    auto* parse = app.add_subcommand("parse", "Echo the canonical form of a polynomial");
    parse->add_option("expr", expr, "Polynomial expression")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kExitOk : cli::kExitInputError;
    }

    try {
        cli::CommandResult result;
        if (*solve) {
            result = cli::cmd_solve(solve_args);
        } else if (*mason) {
            result = cli::cmd_mason(mason_args);
        } else if (*lemmas) {
            result = cli::cmd_lemmas(lemma_args);
        } else if (*fuzz) {
            cfg.deg_f = cli::parse_range(deg_f);
            cfg.deg_g = cli::parse_range(deg_g);
            cfg.deg_w = cli::parse_range(deg_w);
            cfg.w_mode = cli::parse_w_mode(w_mode);
            cfg.gaussian = !real_only;
            result = cli::cmd_fuzz(cfg);
        } else {
            result = cli::cmd_parse(expr);
        }
        emit(result, format);
        return result.exit_code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitInputError;
    }
}
