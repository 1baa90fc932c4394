#ifndef JESMA_MASON_HPP
#define JESMA_MASON_HPP

#include "jesma/polynomial.hpp"
#include "jesma/triple.hpp"

namespace jesma {

/// Outcome of checking max(deg a, deg b, deg c) <= eta(abc) - 1.
struct MasonReport {
    Degree max_degree = Degree::neg_infinity();
    int radical_degree = 0; ///< eta(abc)
    bool holds = false;     ///< slack >= 0
    int slack = 0;          ///< eta(abc) - 1 - max_degree
};

/// Validates a + b = c, none zero, not all constant, and coprimality (two gcd
/// tests; the third pair follows from the sum), then evaluates the inequality.
/// A violated inequality on valid input throws TheoremViolated.
MasonReport mason_check(const Polynomial& a, const Polynomial& b, const Polynomial& c);

/// Largest exponents compatible with x*dA <= dA + dB + dC - 1 (and likewise
/// for y, z), i.e. floor((dA + dB + dC - 1) / d*).
struct ExponentBounds {
    int x_max = 0;
    int y_max = 0;
    int z_max = 0;
    friend bool operator==(const ExponentBounds&, const ExponentBounds&) = default;
};

/// Requires constant w (throws NonconstantScale otherwise).
ExponentBounds exponent_bounds(const PythagoreanTriple& tr);

/// The pair of bounds the leading-term case pins to 2: Case1 (x, z),
/// Case2 (y, z), Case3 (x, y).
bool case_pair_within_two(CaseTag tag, const ExponentBounds& bounds);

} // namespace jesma

#endif
