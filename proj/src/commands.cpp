#include "jesma/commands.hpp"

#include "jesma/error.hpp"
#include "jesma/parse.hpp"

#include <chrono>

namespace jesma::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Admission admission(bool strict) { return strict ? Admission::Strict : Admission::Relaxed; }

} // namespace

CommandResult cmd_solve(const SolveArgs& args) {
    const auto start = Clock::now();
    const Polynomial f = parse_poly(args.f);
    const Polynomial g = parse_poly(args.g);
    const Polynomial w = parse_poly(args.w);
    const PythagoreanTriple tr = make_triple(f, g, w, admission(args.strict));
    const SolutionSet sol = solve(tr, args.window);

    CommandResult out{report::skeleton("solve"), kExitOk};
    auto& j = out.report;
    j["inputs"] = {{"f", print_poly(f)},
                   {"g", print_poly(g)},
                   {"w", print_poly(w)},
                   {"window", {args.window.x_limit, args.window.y_limit}}};
    j["triple"] = report::to_json(tr);
    j["solutions"] = report::to_json(sol.solutions);
    j["predicted"] = report::to_json(sol.predicted);
    j["agrees"] = sol.agrees;
    // A^2 + B^2 = C^2 is always a coprime instance, whatever w is.
    j["mason"] = report::to_json(mason_check(tr.A * tr.A, tr.B * tr.B, tr.C * tr.C));
    j["elapsed_ms"] = ms_since(start);
    out.exit_code = sol.agrees ? kExitOk : kExitCheckFailed;
    return out;
}

CommandResult cmd_mason(const MasonArgs& args) {
    const auto start = Clock::now();
    const Polynomial a = parse_poly(args.a);
    const Polynomial b = parse_poly(args.b);
    const Polynomial c = parse_poly(args.c);

    CommandResult out{report::skeleton("mason"), kExitOk};
    auto& j = out.report;
    j["inputs"] = {{"a", print_poly(a)}, {"b", print_poly(b)}, {"c", print_poly(c)}};
    try {
        j["mason"] = report::to_json(mason_check(a, b, c));
    } catch (const Error& e) {
        if (e.code() != Errc::TheoremViolated)
            throw;
        j["mason"] = {{"holds", false}, {"error", e.what()}};
        out.exit_code = kExitCheckFailed;
    }
    j["elapsed_ms"] = ms_since(start);
    return out;
}

CommandResult cmd_lemmas(const LemmaArgs& args) {
    const auto start = Clock::now();
    const Polynomial f = parse_poly(args.f);
    const Polynomial g = parse_poly(args.g);
    const Polynomial w = parse_poly(args.w);
    const PythagoreanTriple tr = make_triple(f, g, w, admission(args.strict));

    CampaignConfig cfg;
    cfg.window = args.window;
    cfg.limits = args.limits;
    validate(cfg);
    const InstanceOutcome outcome = run_instance(tr, cfg);

    CommandResult out{report::skeleton("lemmas"), kExitOk};
    auto& j = out.report;
    j["inputs"] = {{"f", print_poly(f)},
                   {"g", print_poly(g)},
                   {"w", print_poly(w)},
                   {"window", {args.window.x_limit, args.window.y_limit}},
                   {"r_max", args.limits.r_max},
                   {"m_max", args.limits.m_max},
                   {"n_max", args.limits.n_max}};
    j["triple"] = report::to_json(tr);
    j["lemmas"] = report::to_json(outcome);
    j["elapsed_ms"] = ms_since(start);
    for (Verdict v : outcome.verdicts)
        if (v == Verdict::Fail)
            out.exit_code = kExitCheckFailed;
    return out;
}

CommandResult cmd_fuzz(const CampaignConfig& cfg) {
    const CampaignReport r = run_campaign(cfg);
    CommandResult out{report::skeleton("fuzz"), kExitOk};
    auto& j = out.report;
    j["inputs"] = report::to_json(cfg);
    j["campaign"] = report::to_json(r);
    j["agrees"] = r.tally(Statement::Solve).fail == 0;
    j["seed"] = cfg.seed;
    j["elapsed_ms"] = r.elapsed_ms;
    out.exit_code = r.counterexamples.empty() ? kExitOk : kExitCheckFailed;
    return out;
}

CommandResult cmd_parse(const std::string& expr) {
    const Polynomial p = parse_poly(expr);
    CommandResult out{report::skeleton("parse"), kExitOk};
    out.report["inputs"] = {{"expr", expr}};
    out.report["canonical"] = print_poly(p);
    out.report["degree"] = p.degree().to_string();
    return out;
}

IntRange parse_range(const std::string& text) {
    try {
        const auto colon = text.find(':');
        std::size_t used = 0;
        IntRange r;
        if (colon == std::string::npos) {
            r.lo = r.hi = std::stoi(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
        } else {
            const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
            r.lo = std::stoi(lo, &used);
            if (used != lo.size())
                throw std::invalid_argument(text);
            r.hi = std::stoi(hi, &used);
            if (used != hi.size())
                throw std::invalid_argument(text);
        }
        return r;
    } catch (const std::logic_error&) {
        throw Error(Errc::InvalidArgument, "bad degree range '" + text + "' (use N or LO:HI)");
    }
}

WMode parse_w_mode(const std::string& text) {
    if (text == "constant")
        return WMode::Constant;
    if (text == "nonconstant")
        return WMode::Nonconstant;
    if (text == "mixed")
        return WMode::Mixed;
    throw Error(Errc::InvalidArgument, "w mode must be constant, nonconstant or mixed");
}

} // namespace jesma::cli
