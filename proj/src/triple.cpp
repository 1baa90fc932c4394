#include "jesma/triple.hpp"

#include "jesma/error.hpp"

namespace jesma {

std::string_view to_string(CaseTag c) noexcept {
    switch (c) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2: return "Case2";
    case CaseTag::Case3: return "Case3";
    }
    return "Unknown";
}

namespace {

void check_nonconstant(const Polynomial& f, const Polynomial& g, Admission admission) {
    if (f.is_constant() && g.is_constant())
        throw Error(Errc::ConstantInput, "f and g are both constant");
    if (admission == Admission::Strict && (f.is_constant() || g.is_constant()))
        throw Error(Errc::ConstantInput, "f and g must both be nonconstant");
    if (f.is_zero() || g.is_zero())
        throw Error(Errc::ConstantInput, "f and g must be nonzero");
}

CaseTag classify_unchecked(const Polynomial& f, const Polynomial& g) {
    if (f.degree() != g.degree())
        return CaseTag::Case1;
    const GaussianRational lf2 = f.leading_coeff() * f.leading_coeff();
    const GaussianRational lg2 = g.leading_coeff() * g.leading_coeff();
    if (lf2 == lg2)
        return CaseTag::Case2;
    if (lf2 == -lg2)
        return CaseTag::Case3;
    return CaseTag::Case1;
}

} // namespace

CaseTag classify_case(const Polynomial& f, const Polynomial& g, Admission admission) {
    check_nonconstant(f, g, admission);
    if (f.degree() < g.degree())
        throw Error(Errc::InvalidArgument, "classify_case expects degree(f) >= degree(g)");
    return classify_unchecked(f, g);
}

PythagoreanTriple make_triple(const Polynomial& f, const Polynomial& g, const Polynomial& w,
                              Admission admission) {
    if (w.is_zero())
        throw Error(Errc::ZeroScale, "w must be a nonzero polynomial");
    check_nonconstant(f, g, admission);
    if (!coprime(f, g))
        throw Error(Errc::NotCoprime, "gcd(f, g) = " + gcd(f, g).to_string());

    PythagoreanTriple tr;
    tr.swapped = f.degree() < g.degree();
    tr.f = tr.swapped ? g : f;
    tr.g = tr.swapped ? f : g;
    tr.w = w;
    const Polynomial f2 = tr.f * tr.f;
    const Polynomial g2 = tr.g * tr.g;
    tr.A = f2 - g2;
    tr.B = Polynomial(2) * tr.f * tr.g;
    tr.C = f2 + g2;
    tr.case_tag = classify_unchecked(tr.f, tr.g);
    tr.w_constant = w.is_constant();
    tr.g_constant = tr.g.is_constant();
    return tr;
}

DegreeProfile degree_profile(const PythagoreanTriple& tr) {
    return {tr.A.degree(), tr.B.degree(), tr.C.degree()};
}

bool profile_matches_case(const PythagoreanTriple& tr) {
    const auto [da, db, dc] = degree_profile(tr);
    const Degree two_df = Degree(2 * tr.f.degree().value());
    switch (tr.case_tag) {
    case CaseTag::Case1: return da == two_df && dc == two_df && db <= two_df;
    case CaseTag::Case2: return db == two_df && dc == two_df && da < two_df;
    case CaseTag::Case3: return da == two_df && db == two_df && dc < two_df;
    }
    return false;
}

GaussianRational random_coefficient(std::mt19937_64& rng, const CoeffOptions& opts, bool nonzero) {
    std::uniform_int_distribution<long> part(-opts.bound, opts.bound);
    for (;;) {
        const long re = part(rng);
        const long im = opts.gaussian ? part(rng) : 0;
        GaussianRational c{mpq_class(re), mpq_class(im)};
        if (!nonzero || !c.is_zero())
            return c;
    }
}

Polynomial random_polynomial(std::mt19937_64& rng, int deg, const CoeffOptions& opts) {
    std::vector<GaussianRational> coeffs(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k < deg; ++k)
        coeffs[static_cast<std::size_t>(k)] = random_coefficient(rng, opts, false);
    coeffs.back() = random_coefficient(rng, opts, true);
    return Polynomial(std::move(coeffs));
}

std::pair<Polynomial, Polynomial> random_coprime_pair(std::mt19937_64& rng, int deg_f, int deg_g,
                                                      const CoeffOptions& opts,
                                                      LeadingRelation rel, int retry_cap) {
    if (deg_g < 1 || deg_f < deg_g || opts.bound < 1)
        throw Error(Errc::InvalidArgument, "need deg_f >= deg_g >= 1 and coeff_bound >= 1");
    if (rel != LeadingRelation::Free)
        deg_g = deg_f;

    std::bernoulli_distribution flip(0.5);
    for (int attempt = 0; attempt < retry_cap; ++attempt) {
        Polynomial f = random_polynomial(rng, deg_f, opts);
        Polynomial g = random_polynomial(rng, deg_g, opts);
        if (rel != LeadingRelation::Free) {
            GaussianRational lc = f.leading_coeff();
            if (rel == LeadingRelation::Negated)
                lc *= GaussianRational::i();
            if (flip(rng))
                lc = -lc;
            g = g - Polynomial::monomial(g.leading_coeff(), deg_g) + Polynomial::monomial(lc, deg_g);
        }
        if (coprime(f, g))
            return {std::move(f), std::move(g)};
    }
    throw Error(Errc::ExhaustedRetries,
                "no coprime pair after " + std::to_string(retry_cap) + " attempts");
}

std::pair<Polynomial, Polynomial> random_coprime_pair(int deg_f, int deg_g, int coeff_bound,
                                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_coprime_pair(rng, deg_f, deg_g, CoeffOptions{coeff_bound, true});
}

} // namespace jesma
