#include "jesma/report.hpp"

#include "jesma/parse.hpp"

#include <sstream>

namespace jesma::report {

json skeleton(const std::string& command) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    for (const char* key : {"inputs", "triple", "solutions", "predicted", "agrees", "mason",
                            "lemmas", "campaign", "seed", "elapsed_ms"})
        j[key] = nullptr;
    return j;
}

json to_json(const ExponentSet& s) {
    json arr = json::array();
    for (const auto& e : s)
        arr.push_back({e.x, e.y, e.z});
    return arr;
}

namespace {

json degree_json(Degree d) {
    if (d.is_neg_infinity())
        return "-inf";
    return d.value();
}

} // namespace

json to_json(const PythagoreanTriple& tr) {
    const DegreeProfile prof = degree_profile(tr);
    json j;
    j["f"] = print_poly(tr.f);
    j["g"] = print_poly(tr.g);
    j["w"] = print_poly(tr.w);
    j["A"] = print_poly(tr.A);
    j["B"] = print_poly(tr.B);
    j["C"] = print_poly(tr.C);
    j["degrees"] = {{"f", degree_json(tr.f.degree())},
                    {"g", degree_json(tr.g.degree())},
                    {"w", degree_json(tr.w.degree())},
                    {"A", degree_json(prof.a)},
                    {"B", degree_json(prof.b)},
                    {"C", degree_json(prof.c)}};
    j["case_tag"] = std::string(to_string(tr.case_tag));
    j["w_constant"] = tr.w_constant;
    j["swapped"] = tr.swapped;
    j["hypotheses_met"] = !tr.g_constant;
    j["special_case_211"] = special_case_211(tr);
    return j;
}

json to_json(const MasonReport& r) {
    return {{"max_degree", degree_json(r.max_degree)},
            {"radical_degree", r.radical_degree},
            {"holds", r.holds},
            {"slack", r.slack}};
}

json to_json(const InstanceOutcome& o) {
    json j = json::object();
    for (Statement s : all_statements()) {
        const auto k = static_cast<std::size_t>(s);
        json entry{{"verdict", std::string(to_string(o.verdicts[k]))}};
        if (!o.details[k].empty())
            entry["detail"] = o.details[k];
        j[std::string(to_string(s))] = entry;
    }
    return j;
}

json to_json(const Instance& inst) {
    return {{"trial", inst.trial},
            {"trial_seed", inst.trial_seed},
            {"injected_special", inst.injected_special},
            {"f", print_poly(inst.f)},
            {"g", print_poly(inst.g)},
            {"w", print_poly(inst.w)}};
}

json to_json(const CampaignConfig& cfg) {
    return {{"trials", cfg.trials},
            {"seed", cfg.seed},
            {"deg_f", {cfg.deg_f.lo, cfg.deg_f.hi}},
            {"deg_g", {cfg.deg_g.lo, cfg.deg_g.hi}},
            {"deg_w", {cfg.deg_w.lo, cfg.deg_w.hi}},
            {"coeff_bound", cfg.coeff_bound},
            {"gaussian", cfg.gaussian},
            {"w_mode", std::string(to_string(cfg.w_mode))},
            {"window", {cfg.window.x_limit, cfg.window.y_limit}},
            {"r_max", cfg.limits.r_max},
            {"m_max", cfg.limits.m_max},
            {"n_max", cfg.limits.n_max}};
}

json to_json(const CampaignReport& r) {
    json stmts = json::object();
    for (Statement s : all_statements()) {
        const Tally& t = r.tally(s);
        stmts[std::string(to_string(s))] = {
            {"pass", t.pass}, {"fail", t.fail}, {"not_applicable", t.not_applicable}};
    }
    json cex = json::array();
    for (const auto& c : r.counterexamples)
        cex.push_back({{"statement", std::string(to_string(c.statement))},
                       {"detail", c.detail},
                       {"instance", to_json(c.instance)}});
    return {{"config", to_json(r.config)},
            {"statements", stmts},
            {"cases",
             {{"Case1", r.case_counts[0]}, {"Case2", r.case_counts[1]}, {"Case3", r.case_counts[2]}}},
            {"w_constant", r.w_constant_count},
            {"w_nonconstant", r.w_nonconstant_count},
            {"injected_special", r.injected_special_count},
            {"failures", r.failures()},
            {"counterexamples", cex}};
}

json without_timing(json report) {
    report.erase("elapsed_ms");
    return report;
}

namespace {

void render(std::ostringstream& os, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (v.is_null())
            continue;
        if (v.is_object()) {
            os << pad << it.key() << ":\n";
            render(os, v, indent + 1);
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            os << pad << it.key() << ":\n";
            for (const auto& item : v) {
                os << pad << "  -\n";
                render(os, item, indent + 2);
            }
        } else if (v.is_string()) {
            os << pad << it.key() << ": " << v.get<std::string>() << "\n";
        } else {
            os << pad << it.key() << ": " << v.dump() << "\n";
        }
    }
}

} // namespace

std::string render_text(const json& report) {
    std::ostringstream os;
    render(os, report, 0);
    return os.str();
}

} // namespace jesma::report
