#include "jesma/lemmas.hpp"

#include "jesma/error.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

namespace jesma {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

Verdict combine(Verdict a, Verdict b) noexcept {
    if (a == Verdict::Fail || b == Verdict::Fail)
        return Verdict::Fail;
    if (a == Verdict::Pass || b == Verdict::Pass)
        return Verdict::Pass;
    return Verdict::NotApplicable;
}

namespace {

struct Finding {
    Verdict verdict = Verdict::NotApplicable;
    std::string detail;

    void merge(Verdict v, const std::string& why = {}) {
        if (v == Verdict::Fail && verdict != Verdict::Fail)
            detail = why;
        verdict = combine(verdict, v);
    }
};

Finding two_are_two(TriplePowers& p, const SearchWindow& win) {
    const int n = std::max(win.x_limit, win.y_limit);
    Finding out;
    auto scan = [&](auto make, const char* pattern) {
        std::vector<int> hits;
        for (int k = 1; k <= n; ++k)
            if (check_solution(p, make(k)))
                hits.push_back(k);
        if (hits == std::vector<int>{2}) {
            out.merge(Verdict::Pass);
            return;
        }
        std::string why = std::string("pattern ") + pattern + " solved by free exponent(s)";
        for (int k : hits)
            why += " " + std::to_string(k);
        if (hits.empty())
            why += " none";
        out.merge(Verdict::Fail, why);
    };
    scan([](int k) { return ExponentTriple{2, 2, k}; }, "(2,2,*)");
    scan([](int k) { return ExponentTriple{2, k, 2}; }, "(2,*,2)");
    scan([](int k) { return ExponentTriple{k, 2, 2}; }, "(*,2,2)");
    return out;
}

Finding two_are_one(const PythagoreanTriple& tr, TriplePowers& p, int r_max) {
    Finding out;
    auto expect_none = [&](const ExponentTriple& e) {
        if (check_solution(p, e))
            out.merge(Verdict::Fail, e.to_string() + " is a solution");
        else
            out.merge(Verdict::Pass);
    };
    for (int r = 1; r <= r_max; ++r)
        expect_none({1, r, 1});
    for (int r = 3; r <= r_max; ++r)
        expect_none({r, 1, 1});
    for (int r = 1; r <= r_max; ++r)
        expect_none({1, 1, r});
    const bool solves = check_solution(p, {2, 1, 1});
    const bool special = special_case_211(tr);
    if (solves == special)
        out.merge(Verdict::Pass);
    else
        out.merge(Verdict::Fail, std::string("(2,1,1) ") + (solves ? "solves" : "does not solve") +
                                     " but w(f+g)^2 " + (special ? "=" : "!=") + " 1");
    return out;
}

// Degree of a nonzero polynomial as an int.
int deg(const Polynomial& p) { return p.degree().value(); }

Finding lemma_123(const PythagoreanTriple& tr, TriplePowers& p) {
    Finding out;
    const bool c_applies = !tr.C.is_constant() && deg(tr.C) % 2 == 0;
    for (int orient = 0; orient < 2; ++orient) {
        const Polynomial& P = orient == 0 ? tr.A : tr.B;
        auto wp = [&](int k) -> const Polynomial& { return orient == 0 ? p.wa(k) : p.wb(k); };
        auto wq = [&](int k) -> const Polynomial& { return orient == 0 ? p.wb(k) : p.wa(k); };
        const char* label = orient == 0 ? "(A,B)" : "(B,A)";
        if (!P.is_constant() && deg(P) % 2 == 0) {
            if (wp(1) + wq(2) == p.wc(3))
                out.merge(Verdict::Fail, std::string(label) + ": wP + (wQ)^2 = (wC)^3");
            else
                out.merge(Verdict::Pass);
        }
        if (c_applies) {
            if (wp(2) + wq(3) == p.wc(1))
                out.merge(Verdict::Fail, std::string(label) + ": (wP)^2 + (wQ)^3 = wC");
            else
                out.merge(Verdict::Pass);
        }
    }
    return out;
}

Finding lemma_312(const PythagoreanTriple& tr, TriplePowers& p) {
    Finding out;
    // Needs nonconstant w and a primitive triple with f, g both nonconstant.
    if (tr.w_constant || tr.g_constant)
        return out;
    for (int orient = 0; orient < 2; ++orient) {
        const Polynomial& P = orient == 0 ? tr.A : tr.B;
        const Polynomial& Q = orient == 0 ? tr.B : tr.A;
        if (!(deg(P) <= deg(Q) && deg(Q) == deg(tr.C)))
            continue;
        const Polynomial& wp3 = orient == 0 ? p.wa(3) : p.wb(3);
        const Polynomial& wq = orient == 0 ? p.wb(1) : p.wa(1);
        if (wp3 + wq == p.wc(2))
            out.merge(Verdict::Fail, std::string(orient == 0 ? "(A,B)" : "(B,A)") +
                                         ": (wP)^3 + wQ = (wC)^2");
        else
            out.merge(Verdict::Pass);
    }
    return out;
}

Finding m_le_2(TriplePowers& p, int m_max, int n_max) {
    Finding out;
    for (int m = 3; m <= m_max; ++m) {
        const Polynomial rhs = p.wc(m) - p.wb(m);
        for (int n = m; n <= n_max; ++n) {
            // Unequal degrees settle it without touching (wA)^n.
            if (deg(p.wa(1)) * n != deg(rhs)) {
                out.merge(Verdict::Pass);
                continue;
            }
            if (p.wa(n) == rhs)
                out.merge(Verdict::Fail, "(wA)^" + std::to_string(n) + " = (wC)^" +
                                             std::to_string(m) + " - (wB)^" + std::to_string(m));
            else
                out.merge(Verdict::Pass);
        }
    }
    return out;
}

Finding equal_exponents(const PythagoreanTriple& tr, const ExponentSet& solutions) {
    Finding out;
    if (tr.w_constant)
        return out;
    for (const auto& e : solutions) {
        if (e.x == e.y && e.y == e.z)
            out.merge(Verdict::Pass);
        else
            out.merge(Verdict::Fail, "solution " + e.to_string() + " has unequal exponents");
    }
    return out;
}

} // namespace

Verdict verify_two_are_two(TriplePowers& powers, const SearchWindow& win) {
    return two_are_two(powers, win).verdict;
}

Verdict verify_two_are_two(const PythagoreanTriple& tr, const SearchWindow& win) {
    TriplePowers powers(tr);
    return verify_two_are_two(powers, win);
}

Verdict verify_two_are_one(const PythagoreanTriple& tr, TriplePowers& powers, int r_max) {
    return two_are_one(tr, powers, r_max).verdict;
}

Verdict verify_two_are_one(const PythagoreanTriple& tr, int r_max) {
    TriplePowers powers(tr);
    return verify_two_are_one(tr, powers, r_max);
}

Verdict verify_lemma_123(const PythagoreanTriple& tr, TriplePowers& powers) {
    return lemma_123(tr, powers).verdict;
}

Verdict verify_lemma_123(const PythagoreanTriple& tr) {
    TriplePowers powers(tr);
    return verify_lemma_123(tr, powers);
}

Verdict verify_lemma_312(const PythagoreanTriple& tr, TriplePowers& powers) {
    return lemma_312(tr, powers).verdict;
}

Verdict verify_lemma_312(const PythagoreanTriple& tr) {
    TriplePowers powers(tr);
    return verify_lemma_312(tr, powers);
}

Verdict verify_m_le_2(TriplePowers& powers, int m_max, int n_max) {
    return m_le_2(powers, m_max, n_max).verdict;
}

Verdict verify_m_le_2(const PythagoreanTriple& tr, int m_max, int n_max) {
    TriplePowers powers(tr);
    return verify_m_le_2(powers, m_max, n_max);
}

Verdict verify_equal_exponents_nonconstant_w(const PythagoreanTriple& tr, const SearchWindow& win) {
    if (tr.w_constant)
        return Verdict::NotApplicable;
    return equal_exponents(tr, enumerate_solutions(tr, win)).verdict;
}

// ---------------------------------------------------------------------------

std::string_view to_string(WMode m) noexcept {
    switch (m) {
    case WMode::Constant: return "constant";
    case WMode::Nonconstant: return "nonconstant";
    case WMode::Mixed: return "mixed";
    }
    return "unknown";
}

std::string_view to_string(Statement s) noexcept {
    switch (s) {
    case Statement::PythagoreanIdentity: return "pythagorean_identity";
    case Statement::Mason: return "mason";
    case Statement::Solve: return "solve";
    case Statement::TwoAreTwo: return "two_are_two";
    case Statement::TwoAreOne: return "two_are_one";
    case Statement::Lemma123: return "lemma_123";
    case Statement::Lemma312: return "lemma_312";
    case Statement::MLeTwo: return "m_le_2";
    case Statement::EqualExponents: return "equal_exponents_nonconstant_w";
    }
    return "unknown";
}

const std::array<Statement, kStatementCount>& all_statements() noexcept {
    static constexpr std::array<Statement, kStatementCount> all{
        Statement::PythagoreanIdentity, Statement::Mason,    Statement::Solve,
        Statement::TwoAreTwo,           Statement::TwoAreOne, Statement::Lemma123,
        Statement::Lemma312,            Statement::MLeTwo,   Statement::EqualExponents,
    };
    return all;
}

void Tally::add(Verdict v) {
    switch (v) {
    case Verdict::Pass: ++pass; break;
    case Verdict::Fail: ++fail; break;
    case Verdict::NotApplicable: ++not_applicable; break;
    }
}

int CampaignReport::failures() const {
    int n = 0;
    for (const auto& t : tallies)
        n += t.fail;
    return n;
}

void validate(const CampaignConfig& cfg) {
    auto check_range = [](const IntRange& r, const char* name) {
        if (r.lo < 1 || r.hi < r.lo)
            throw Error(Errc::InvalidArgument,
                        std::string(name) + " range must satisfy 1 <= lo <= hi");
    };
    if (cfg.trials < 0)
        throw Error(Errc::InvalidArgument, "trials must be nonnegative");
    check_range(cfg.deg_f, "deg_f");
    check_range(cfg.deg_g, "deg_g");
    check_range(cfg.deg_w, "deg_w");
    if (cfg.coeff_bound < 1)
        throw Error(Errc::InvalidArgument, "coeff_bound must be at least 1");
    if (cfg.window.x_limit < 2 || cfg.window.y_limit < 2)
        throw Error(Errc::InvalidArgument, "window limits must be at least 2");
    if (cfg.limits.r_max < 1 || cfg.limits.m_max < 1 || cfg.limits.n_max < 1)
        throw Error(Errc::InvalidArgument, "lemma limits must be positive");
}

bool is_injected_trial(int trial) noexcept { return trial % 10 == 9; }

std::uint64_t trial_seed(std::uint64_t seed, int trial) noexcept {
    // splitmix64 finalizer over (seed, trial)
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(trial) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

int draw(std::mt19937_64& rng, const IntRange& r) {
    return std::uniform_int_distribution<int>(r.lo, r.hi)(rng);
}

} // namespace

Instance generate_instance(const CampaignConfig& cfg, int trial) {
    Instance inst;
    inst.trial = trial;
    inst.trial_seed = trial_seed(cfg.seed, trial);
    std::mt19937_64 rng(inst.trial_seed);
    const CoeffOptions opts{cfg.coeff_bound, cfg.gaussian};

    if (is_injected_trial(trial)) {
        // f = u - g, w = 1/u^2, so w(f+g)^2 = 1; gcd(f, g) = gcd(u, g) = 1.
        inst.injected_special = true;
        const GaussianRational u = random_coefficient(rng, opts, true);
        inst.g = random_polynomial(rng, draw(rng, cfg.deg_f), opts);
        inst.f = Polynomial(u) - inst.g;
        const GaussianRational inv = u.inverse();
        inst.w = Polynomial(inv * inv);
        return inst;
    }

    int df = draw(rng, cfg.deg_f);
    int dg = draw(rng, cfg.deg_g);
    if (dg > df)
        std::swap(df, dg);
    LeadingRelation rel = LeadingRelation::Free;
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 2: rel = LeadingRelation::Equal; break;
    case 3: rel = cfg.gaussian ? LeadingRelation::Negated : LeadingRelation::Free; break;
    default: break;
    }
    try {
        std::tie(inst.f, inst.g) = random_coprime_pair(rng, df, dg, opts, rel);
    } catch (const Error& e) {
        throw Error(Errc::GenerationFailure,
                    "trial " + std::to_string(trial) + ": " + std::string(e.what()));
    }

    bool constant_w = cfg.w_mode == WMode::Constant;
    if (cfg.w_mode == WMode::Mixed)
        constant_w = std::bernoulli_distribution(0.5)(rng);
    inst.w = constant_w ? Polynomial(random_coefficient(rng, opts, true))
                        : random_polynomial(rng, draw(rng, cfg.deg_w), opts);
    return inst;
}

InstanceOutcome run_instance(const PythagoreanTriple& tr, const CampaignConfig& cfg) {
    InstanceOutcome out;
    out.case_tag = tr.case_tag;
    out.w_constant = tr.w_constant;
    TriplePowers p(tr);
    auto record = [&out](Statement s, const Finding& f) {
        out.verdicts[static_cast<std::size_t>(s)] = f.verdict;
        out.details[static_cast<std::size_t>(s)] = f.detail;
    };

    Finding identity;
    if (p.wa(2) + p.wb(2) == p.wc(2))
        identity.merge(Verdict::Pass);
    else
        identity.merge(Verdict::Fail, "(wA)^2 + (wB)^2 != (wC)^2");
    record(Statement::PythagoreanIdentity, identity);

    Finding mason;
    try {
        const MasonReport r = mason_check(tr.A * tr.A, tr.B * tr.B, tr.C * tr.C);
        mason.merge(r.holds ? Verdict::Pass : Verdict::Fail);
    } catch (const Error& e) {
        mason.merge(Verdict::Fail, e.what());
    }
    record(Statement::Mason, mason);

    const SolutionSet sol = solve(tr, p, cfg.window);
    Finding agreement;
    if (sol.agrees) {
        agreement.merge(Verdict::Pass);
    } else {
        std::string why = "enumerated";
        for (const auto& e : sol.solutions)
            why += " " + e.to_string();
        why += " vs predicted";
        for (const auto& e : sol.predicted)
            why += " " + e.to_string();
        agreement.merge(Verdict::Fail, why);
    }
    record(Statement::Solve, agreement);

    record(Statement::TwoAreTwo, two_are_two(p, cfg.window));
    record(Statement::TwoAreOne, two_are_one(tr, p, cfg.limits.r_max));
    record(Statement::Lemma123, lemma_123(tr, p));
    record(Statement::Lemma312, lemma_312(tr, p));
    record(Statement::MLeTwo, m_le_2(p, cfg.limits.m_max, cfg.limits.n_max));
    record(Statement::EqualExponents, equal_exponents(tr, sol.solutions));
    return out;
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    report.config = cfg;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Instance inst = generate_instance(cfg, trial);
        const PythagoreanTriple tr = make_triple(inst.f, inst.g, inst.w);
        const InstanceOutcome outcome = run_instance(tr, cfg);

        ++report.case_counts[static_cast<std::size_t>(outcome.case_tag)];
        ++(outcome.w_constant ? report.w_constant_count : report.w_nonconstant_count);
        if (inst.injected_special)
            ++report.injected_special_count;
        for (std::size_t s = 0; s < kStatementCount; ++s) {
            report.tallies[s].add(outcome.verdicts[s]);
            if (outcome.verdicts[s] == Verdict::Fail)
                report.counterexamples.push_back({inst, all_statements()[s], outcome.details[s]});
        }
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

} // namespace jesma
