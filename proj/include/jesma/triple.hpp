#ifndef JESMA_TRIPLE_HPP
#define JESMA_TRIPLE_HPP

#include "jesma/polynomial.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>

namespace jesma {

/// Relation between the leading terms of f^2 and g^2.
enum class CaseTag {
    Case1, ///< LT(f^2) != +-LT(g^2)
    Case2, ///< LT(f^2) == LT(g^2)
    Case3, ///< LT(f^2) == -LT(g^2)
};

std::string_view to_string(CaseTag c) noexcept;

/// How strictly make_triple enforces the "f and g nonconstant" hypothesis.
/// Relaxed admits a nonzero constant cofactor (after normalization, g), which
/// covers classic instances such as f = t, g = 1. Coprimality and w != 0 are
/// always enforced.
enum class Admission { Strict, Relaxed };

/// A validated primitive polynomial Pythagorean triple scaled by w:
/// (wA)^2 + (wB)^2 = (wC)^2 with A = f^2 - g^2, B = 2fg, C = f^2 + g^2.
/// Stored with degree(f) >= degree(g); `swapped` records when the inputs were
/// exchanged to get there (which negates A).
struct PythagoreanTriple {
    Polynomial f, g, w;
    Polynomial A, B, C;
    CaseTag case_tag = CaseTag::Case1;
    bool w_constant = true;
    bool swapped = false;
    bool g_constant = false; ///< only possible under Admission::Relaxed

    Polynomial wA() const { return w * A; }
    Polynomial wB() const { return w * B; }
    Polynomial wC() const { return w * C; }
};

PythagoreanTriple make_triple(const Polynomial& f, const Polynomial& g, const Polynomial& w,
                              Admission admission = Admission::Strict);

/// Requires degree(f) >= degree(g); Case2/Case3 need equal degrees.
/// Throws ConstantInput if f (or, under Strict, g) is constant.
CaseTag classify_case(const Polynomial& f, const Polynomial& g,
                      Admission admission = Admission::Strict);

struct DegreeProfile {
    Degree a, b, c;
    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/// Degrees of A, B, C.
DegreeProfile degree_profile(const PythagoreanTriple& tr);

/// Whether the profile satisfies the relation its case tag demands:
/// Case1: dA = dC = 2df >= dB; Case2: dB = dC = 2df > dA; Case3: dA = dB = 2df > dC.
bool profile_matches_case(const PythagoreanTriple& tr);

/// Target leading-coefficient relation for generated pairs. Anything other
/// than Free forces degree(g) = degree(f).
enum class LeadingRelation { Free, Equal, Negated };

struct CoeffOptions {
    int bound = 10;
    bool gaussian = true;
};

inline constexpr int kCoprimeRetryCap = 64;

/// Uniform Gaussian integer with |re|, |im| <= bound (imaginary part zero when
/// !gaussian). Draws until nonzero if `nonzero`.
GaussianRational random_coefficient(std::mt19937_64& rng, const CoeffOptions& opts, bool nonzero);

/// Polynomial of exact degree `deg` with random bounded coefficients.
Polynomial random_polynomial(std::mt19937_64& rng, int deg, const CoeffOptions& opts);

/// Random coprime (f, g) with exact degrees deg_f >= deg_g >= 1 and Gaussian
/// integer coefficients bounded by coeff_bound, by rejection sampling.
/// Deterministic per seed; throws ExhaustedRetries after kCoprimeRetryCap tries.
std::pair<Polynomial, Polynomial> random_coprime_pair(int deg_f, int deg_g, int coeff_bound,
                                                      std::uint64_t seed);

/// Same, drawing from an existing engine and optionally steering the leading
/// coefficients so that the pair lands in Case2 (Equal: lc(g) = +-lc(f)) or
/// Case3 (Negated: lc(g) = +-i*lc(f)).
std::pair<Polynomial, Polynomial> random_coprime_pair(std::mt19937_64& rng, int deg_f, int deg_g,
                                                      const CoeffOptions& opts,
                                                      LeadingRelation rel = LeadingRelation::Free,
                                                      int retry_cap = kCoprimeRetryCap);

} // namespace jesma

#endif
