#include "jesma/solver.hpp"

#include "jesma/error.hpp"

#include <algorithm>

namespace jesma {

std::string ExponentTriple::to_string() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

const Polynomial& PowerTable::operator[](int k) {
    if (k < 0)
        throw Error(Errc::InvalidArgument, "negative exponent");
    while (powers_.size() <= static_cast<std::size_t>(k))
        powers_.push_back(powers_.back() * powers_[1]);
    return powers_[static_cast<std::size_t>(k)];
}

namespace {

struct ForcedSum {
    Polynomial sum;
    std::optional<int> z;
};

ForcedSum forced_sum(TriplePowers& powers, int x, int y) {
    ForcedSum out{powers.wa(x) + powers.wb(y), std::nullopt};
    if (out.sum.is_zero())
        throw Error(Errc::UnexpectedZeroSum,
                    "(wA)^" + std::to_string(x) + " + (wB)^" + std::to_string(y) + " vanished");
    const int ds = out.sum.degree().value();
    const int dc = powers.wc(1).degree().value();
    if (dc > 0 && ds % dc == 0 && ds / dc >= 1)
        out.z = ds / dc;
    return out;
}

} // namespace

bool check_solution(TriplePowers& powers, const ExponentTriple& e, CheckMode mode) {
    if (mode == CheckMode::Prefiltered) {
        const Degree dl = powers.wa(1).degree().value() * e.x;
        const Degree dr = powers.wb(1).degree().value() * e.y;
        const Degree target = powers.wc(1).degree().value() * e.z;
        if (dl != dr && std::max(dl, dr) != target)
            return false;
    }
    return powers.wa(e.x) + powers.wb(e.y) == powers.wc(e.z);
}

bool check_solution(const PythagoreanTriple& tr, const ExponentTriple& e, CheckMode mode) {
    TriplePowers powers(tr);
    return check_solution(powers, e, mode);
}

std::optional<int> forced_z(TriplePowers& powers, int x, int y) {
    return forced_sum(powers, x, y).z;
}

std::optional<int> forced_z(const PythagoreanTriple& tr, int x, int y) {
    TriplePowers powers(tr);
    return forced_z(powers, x, y);
}

bool special_case_211(const PythagoreanTriple& tr) {
    const Polynomial s = tr.f + tr.g;
    return (tr.w * s * s).is_one();
}

ExponentSet enumerate_solutions(const PythagoreanTriple& tr, const SearchWindow& win) {
    TriplePowers powers(tr);
    return enumerate_solutions(powers, win);
}

ExponentSet enumerate_solutions(TriplePowers& powers, const SearchWindow& win) {
    if (win.x_limit < 2 || win.y_limit < 2)
        throw Error(Errc::InvalidArgument, "search window limits must be at least 2");
    ExponentSet out;
    for (int x = 1; x <= win.x_limit; ++x) {
        for (int y = 1; y <= win.y_limit; ++y) {
            ForcedSum fs = forced_sum(powers, x, y);
            if (fs.z && fs.sum == powers.wc(*fs.z))
                out.insert({x, y, *fs.z});
        }
    }
    return out;
}

ExponentSet predicted_solutions(const PythagoreanTriple& tr) {
    ExponentSet out{{2, 2, 2}};
    if (special_case_211(tr))
        out.insert({2, 1, 1});
    return out;
}

SolutionSet solve(const PythagoreanTriple& tr, const SearchWindow& win) {
    TriplePowers powers(tr);
    return solve(tr, powers, win);
}

SolutionSet solve(const PythagoreanTriple& tr, TriplePowers& powers, const SearchWindow& win) {
    SolutionSet s;
    s.window = win;
    s.solutions = enumerate_solutions(powers, win);
    s.predicted = predicted_solutions(tr);
    ExponentSet representable;
    std::copy_if(s.predicted.begin(), s.predicted.end(),
                 std::inserter(representable, representable.end()),
                 [&](const ExponentTriple& e) { return e.x <= win.x_limit && e.y <= win.y_limit; });
    s.agrees = s.solutions == representable;
    return s;
}

} // namespace jesma
