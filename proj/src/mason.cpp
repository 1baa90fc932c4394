#include "jesma/mason.hpp"

#include "jesma/error.hpp"

#include <algorithm>

namespace jesma {

MasonReport mason_check(const Polynomial& a, const Polynomial& b, const Polynomial& c) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw Error(Errc::ZeroInput, "a, b and c must be nonzero");
    if (a + b != c)
        throw Error(Errc::SumMismatch, "a + b != c");
    if (a.is_constant() && b.is_constant() && c.is_constant())
        throw Error(Errc::AllConstant, "a, b and c are all constant");
    if (!coprime(a, b) || !coprime(a, c))
        throw Error(Errc::NotCoprime, "a, b and c must be relatively prime");

    MasonReport r;
    r.max_degree = std::max({a.degree(), b.degree(), c.degree()});
    r.radical_degree = eta(a * b * c);
    r.slack = r.radical_degree - 1 - r.max_degree.value();
    r.holds = r.slack >= 0;
    if (!r.holds)
        throw Error(Errc::TheoremViolated,
                    "max degree " + r.max_degree.to_string() + " exceeds eta(abc) - 1 = " +
                        std::to_string(r.radical_degree - 1));
    return r;
}

ExponentBounds exponent_bounds(const PythagoreanTriple& tr) {
    if (!tr.w_constant)
        throw Error(Errc::NonconstantScale, "exponent bounds need a constant w");
    const int da = tr.A.degree().value();
    const int db = tr.B.degree().value();
    const int dc = tr.C.degree().value();
    const int rhs = da + db + dc - 1;
    // A, B and C are nonconstant whenever f is, so every divisor is positive.
    return {rhs / da, rhs / db, rhs / dc};
}

bool case_pair_within_two(CaseTag tag, const ExponentBounds& b) {
    switch (tag) {
    case CaseTag::Case1: return b.x_max <= 2 && b.z_max <= 2;
    case CaseTag::Case2: return b.y_max <= 2 && b.z_max <= 2;
    case CaseTag::Case3: return b.x_max <= 2 && b.y_max <= 2;
    }
    return false;
}

} // namespace jesma
