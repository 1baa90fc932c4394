#ifndef JESMA_COMMANDS_HPP
#define JESMA_COMMANDS_HPP

#include "jesma/lemmas.hpp"
#include "jesma/report.hpp"

#include <string>

namespace jesma::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1; ///< disagreement, violated bound, counterexample
inline constexpr int kExitInputError = 2;  ///< parse or validation error

struct CommandResult {
    report::json report;
    int exit_code = kExitOk;
};

struct SolveArgs {
    std::string f, g, w = "1";
    SearchWindow window{};
    bool strict = false;
};

struct MasonArgs {
    std::string a, b, c;
};

struct LemmaArgs {
    std::string f, g, w = "1";
    SearchWindow window{};
    LemmaLimits limits{};
    bool strict = false;
};

// Each command throws jesma::Error on malformed or invalid input; the
// front end maps that to kExitInputError.
CommandResult cmd_solve(const SolveArgs& args);
CommandResult cmd_mason(const MasonArgs& args);
CommandResult cmd_lemmas(const LemmaArgs& args);
CommandResult cmd_fuzz(const CampaignConfig& cfg);
CommandResult cmd_parse(const std::string& expr);

/// "3" or "1:4" (inclusive).
IntRange parse_range(const std::string& text);
WMode parse_w_mode(const std::string& text);

} // namespace jesma::cli

#endif
