#ifndef JESMA_SOLVER_HPP
#define JESMA_SOLVER_HPP

#include "jesma/polynomial.hpp"
#include "jesma/triple.hpp"

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace jesma {

/// Positive exponents (x, y, z) of (wA)^x + (wB)^y = (wC)^z.
struct ExponentTriple {
    int x = 1;
    int y = 1;
    int z = 1;
    friend auto operator<=>(const ExponentTriple&, const ExponentTriple&) = default;
    std::string to_string() const;
};

using ExponentSet = std::set<ExponentTriple>;

struct SearchWindow {
    int x_limit = 6;
    int y_limit = 6;
};

/// Memoized powers base^0, base^1, ... built incrementally.
class PowerTable {
public:
    explicit PowerTable(Polynomial base) : powers_{Polynomial(1), std::move(base)} {}
    const Polynomial& operator[](int k);
    const Polynomial& base() const noexcept { return powers_[1]; }

private:
    std::vector<Polynomial> powers_;
};

/// Powers of wA, wB, wC for one triple. Not thread-safe; one per worker.
class TriplePowers {
public:
    explicit TriplePowers(const PythagoreanTriple& tr)
        : wa_(tr.wA()), wb_(tr.wB()), wc_(tr.wC()) {}
    const Polynomial& wa(int k) { return wa_[k]; }
    const Polynomial& wb(int k) { return wb_[k]; }
    const Polynomial& wc(int k) { return wc_[k]; }

private:
    PowerTable wa_, wb_, wc_;
};

enum class CheckMode {
    Prefiltered, ///< reject early when the top degrees cannot cancel and miss z*deg(wC)
    FullExpansion,
};

bool check_solution(const PythagoreanTriple& tr, const ExponentTriple& e,
                    CheckMode mode = CheckMode::Prefiltered);
bool check_solution(TriplePowers& powers, const ExponentTriple& e,
                    CheckMode mode = CheckMode::Prefiltered);

/// The only z that can match (x, y): deg((wA)^x + (wB)^y) / deg(wC) when that
/// division is exact and positive. Throws UnexpectedZeroSum if the sum vanishes.
std::optional<int> forced_z(const PythagoreanTriple& tr, int x, int y);
std::optional<int> forced_z(TriplePowers& powers, int x, int y);

/// True iff w * (f + g)^2 == 1, the square-root-free form of
/// "w constant and f + g = +-1/sqrt(w)".
bool special_case_211(const PythagoreanTriple& tr);

/// Every solution with x <= x_limit and y <= y_limit; z is degree-forced so
/// the result is complete for the window.
ExponentSet enumerate_solutions(const PythagoreanTriple& tr, const SearchWindow& win = {});
ExponentSet enumerate_solutions(TriplePowers& powers, const SearchWindow& win = {});

/// {(2,2,2)} plus (2,1,1) exactly when special_case_211 holds.
ExponentSet predicted_solutions(const PythagoreanTriple& tr);

struct SolutionSet {
    ExponentSet solutions;
    SearchWindow window;
    ExponentSet predicted;
    /// solutions equal the predicted triples that fit inside the window
    bool agrees = false;
};

SolutionSet solve(const PythagoreanTriple& tr, const SearchWindow& win = {});
SolutionSet solve(const PythagoreanTriple& tr, TriplePowers& powers, const SearchWindow& win = {});

} // namespace jesma

#endif
