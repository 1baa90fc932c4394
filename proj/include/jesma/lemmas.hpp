#ifndef JESMA_LEMMAS_HPP
#define JESMA_LEMMAS_HPP

#include "jesma/mason.hpp"
#include "jesma/polynomial.hpp"
#include "jesma/solver.hpp"
#include "jesma/triple.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jesma {

/// A verifier either confirms its statement on the instance, finds a
/// counterexample, or reports that the statement's hypothesis does not hold.
enum class Verdict { Pass, Fail, NotApplicable };

std::string_view to_string(Verdict v) noexcept;

/// Combine sub-checks: any Fail wins, then any Pass, else NotApplicable.
Verdict combine(Verdict a, Verdict b) noexcept;

struct LemmaLimits {
    int r_max = 6;
    int m_max = 5;
    int n_max = 8;
};

/// With two exponents pinned at 2, scanning the third over
/// 1..max(x_limit, y_limit) finds exactly the value 2.
Verdict verify_two_are_two(const PythagoreanTriple& tr, const SearchWindow& win = {});
Verdict verify_two_are_two(TriplePowers& powers, const SearchWindow& win = {});

/// No (1,r,1) for r in [1, r_max]; no (r,1,1) for r in [3, r_max];
/// (2,1,1) solves iff w(f+g)^2 = 1; no (1,1,r) for r in [1, r_max].
Verdict verify_two_are_one(const PythagoreanTriple& tr, int r_max = 6);
Verdict verify_two_are_one(const PythagoreanTriple& tr, TriplePowers& powers, int r_max = 6);

/// For both assignments (P, Q) = (A, B) and (B, A):
/// wP + (wQ)^2 != (wC)^3 when P is nonconstant of even degree, and
/// (wP)^2 + (wQ)^3 != wC when C is nonconstant of even degree.
Verdict verify_lemma_123(const PythagoreanTriple& tr);
Verdict verify_lemma_123(const PythagoreanTriple& tr, TriplePowers& powers);

/// For w nonconstant, f and g nonconstant, and both assignments with
/// deg P <= deg Q = deg C: (wP)^3 + wQ != (wC)^2.
Verdict verify_lemma_312(const PythagoreanTriple& tr);
Verdict verify_lemma_312(const PythagoreanTriple& tr, TriplePowers& powers);

/// (wA)^n != (wC)^m - (wB)^m for all m in [3, m_max], n in [m, n_max].
Verdict verify_m_le_2(const PythagoreanTriple& tr, int m_max = 5, int n_max = 8);
Verdict verify_m_le_2(TriplePowers& powers, int m_max = 5, int n_max = 8);

/// For nonconstant w, every solution in the window has x = y = z.
Verdict verify_equal_exponents_nonconstant_w(const PythagoreanTriple& tr,
                                             const SearchWindow& win = {});

// ---------------------------------------------------------------------------
// Campaigns

enum class WMode { Constant, Nonconstant, Mixed };

std::string_view to_string(WMode m) noexcept;

struct IntRange {
    int lo = 1;
    int hi = 1;
};

struct CampaignConfig {
    int trials = 10;
    std::uint64_t seed = 1;
    IntRange deg_f{1, 3};
    IntRange deg_g{1, 3};
    IntRange deg_w{1, 3}; ///< used for nonconstant w
    int coeff_bound = 10;
    bool gaussian = true;
    WMode w_mode = WMode::Mixed;
    SearchWindow window{};
    LemmaLimits limits{};
};

/// Throws InvalidArgument for empty ranges, degrees < 1, or a bad window.
void validate(const CampaignConfig& cfg);

enum class Statement {
    PythagoreanIdentity,
    Mason,
    Solve,
    TwoAreTwo,
    TwoAreOne,
    Lemma123,
    Lemma312,
    MLeTwo,
    EqualExponents,
};
inline constexpr std::size_t kStatementCount = 9;

std::string_view to_string(Statement s) noexcept;
const std::array<Statement, kStatementCount>& all_statements() noexcept;

struct Tally {
    int pass = 0;
    int fail = 0;
    int not_applicable = 0;
    void add(Verdict v);
    friend bool operator==(const Tally&, const Tally&) = default;
};

/// One generated campaign instance; replayable from (cfg, trial).
struct Instance {
    int trial = 0;
    std::uint64_t trial_seed = 0;
    bool injected_special = false; ///< constructed so that w(f+g)^2 = 1
    Polynomial f, g, w;
};

struct Counterexample {
    Instance instance;
    Statement statement;
    std::string detail;
};

struct CampaignReport {
    CampaignConfig config;
    std::array<Tally, kStatementCount> tallies{};
    std::array<int, 3> case_counts{}; ///< indexed by CaseTag
    int w_constant_count = 0;
    int w_nonconstant_count = 0;
    int injected_special_count = 0;
    std::vector<Counterexample> counterexamples;
    double elapsed_ms = 0;

    const Tally& tally(Statement s) const { return tallies[static_cast<std::size_t>(s)]; }
    int failures() const;
};

/// Trials whose index is 9 mod 10 carry a constructed exceptional instance.
bool is_injected_trial(int trial) noexcept;

std::uint64_t trial_seed(std::uint64_t seed, int trial) noexcept;

/// Throws GenerationFailure when coprime sampling exhausts its retries.
Instance generate_instance(const CampaignConfig& cfg, int trial);

/// Per-instance outcome of every statement (index = Statement).
struct InstanceOutcome {
    std::array<Verdict, kStatementCount> verdicts{};
    std::array<std::string, kStatementCount> details{};
    CaseTag case_tag = CaseTag::Case1;
    bool w_constant = true;
};

InstanceOutcome run_instance(const PythagoreanTriple& tr, const CampaignConfig& cfg);

CampaignReport run_campaign(const CampaignConfig& cfg);

} // namespace jesma

#endif
