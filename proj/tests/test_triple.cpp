#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jesma/error.hpp"
#include "jesma/parse.hpp"
#include "jesma/triple.hpp"
#include "oracle.hpp"

using namespace jesma;

namespace {

Polynomial P(const char* s) { return parse_poly(s); }

Errc code_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::InvalidArgument;
}

} // namespace

TEST_CASE("make_triple rejects invalid inputs") {
    CHECK(code_of([] { make_triple(P("t"), P("1"), P("1")); }) == Errc::ConstantInput);
    CHECK(code_of([] { make_triple(P("t^2"), P("t"), P("1")); }) == Errc::NotCoprime);
    CHECK(code_of([] { make_triple(P("t"), P("t+1"), P("0")); }) == Errc::ZeroScale);
    CHECK(code_of([] { make_triple(P("3"), P("2"), P("1"), Admission::Relaxed); }) ==
          Errc::ConstantInput);
    CHECK(code_of([] { make_triple(P("t"), P("0"), P("1"), Admission::Relaxed); }) ==
          Errc::ConstantInput);
    CHECK(code_of([] { make_triple(P("t"), P("t"), P("1"), Admission::Relaxed); }) ==
          Errc::NotCoprime);
}

TEST_CASE("make_triple derives A, B, C") {
    const auto tr = make_triple(P("t"), P("t+1"), P("1"));
    CHECK(tr.A == P("-2*t - 1"));
    CHECK(tr.B == P("2*t^2 + 2*t"));
    CHECK(tr.C == P("2*t^2 + 2*t + 1"));
    CHECK(tr.case_tag == CaseTag::Case2);
    CHECK(tr.w_constant);
    CHECK_FALSE(tr.swapped);

    // pointwise expansion oracle
    auto f = [](const GaussianRational& t) { return t; };
    auto g = [](const GaussianRational& t) { return t + GaussianRational(1); };
    CHECK(oracle::identical([&](auto& t) { return oracle::eval(tr.A, t); },
                            [&](auto& t) { return f(t) * f(t) - g(t) * g(t); }, 2));
    CHECK(oracle::identical([&](auto& t) { return oracle::eval(tr.B, t); },
                            [&](auto& t) { return GaussianRational(2) * f(t) * g(t); }, 2));
    CHECK(oracle::identical([&](auto& t) { return oracle::eval(tr.C, t); },
                            [&](auto& t) { return f(t) * f(t) + g(t) * g(t); }, 2));
}

TEST_CASE("make_triple swaps so that deg f >= deg g") {
    const auto tr = make_triple(P("t"), P("t^2 + 1"), P("t"));
    CHECK(tr.swapped);
    CHECK(tr.f == P("t^2 + 1"));
    CHECK(tr.g == P("t"));
    CHECK(tr.A == P("t^4 + t^2 + 1"));
    CHECK_FALSE(tr.w_constant);
}

TEST_CASE("relaxed admission allows a constant cofactor") {
    const auto tr = make_triple(P("1"), P("t"), P("1"), Admission::Relaxed);
    CHECK(tr.swapped);
    CHECK(tr.g_constant);
    CHECK(tr.A == P("t^2 - 1"));
    CHECK(tr.case_tag == CaseTag::Case1);
}

TEST_CASE("classify_case") {
    CHECK(classify_case(P("t^2"), P("t")) == CaseTag::Case1);
    CHECK(classify_case(P("t"), P("t+1")) == CaseTag::Case2);
    CHECK(classify_case(P("t"), P("i*t+1")) == CaseTag::Case3);
    CHECK(classify_case(P("2*t"), P("t")) == CaseTag::Case1);
    CHECK(classify_case(P("t"), P("-t + 3")) == CaseTag::Case2);
    CHECK(code_of([] { classify_case(P("t"), P("5")); }) == Errc::ConstantInput);
    CHECK(classify_case(P("t"), P("5"), Admission::Relaxed) == CaseTag::Case1);
}

TEST_CASE("degree_profile") {
    const auto c1 = make_triple(P("t^2"), P("1"), P("1"), Admission::Relaxed);
    CHECK(degree_profile(c1) == DegreeProfile{4, 2, 4});
    const auto c2 = make_triple(P("t"), P("t+1"), P("1"));
    CHECK(degree_profile(c2) == DegreeProfile{1, 2, 2});
    const auto c3 = make_triple(P("t"), P("i*t+1"), P("1"));
    CHECK(degree_profile(c3) == DegreeProfile{2, 2, 1});
    // independent degree check: A(t)=t^2-(it+1)^2 = 2t^2 - 2it - 1
    CHECK(c3.A == P("2*t^2 - 2*i*t - 1"));
    CHECK(c3.C == P("2*i*t + 1"));
    for (const auto* tr : {&c1, &c2, &c3})
        CHECK(profile_matches_case(*tr));
}

TEST_CASE("random_coprime_pair postconditions and determinism") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto [f, g] = random_coprime_pair(2, 1, 5, seed);
        CHECK(f.degree() == Degree(2));
        CHECK(g.degree() == Degree(1));
        CHECK(coprime(f, g));
        for (const auto& p : {f, g})
            for (const auto& c : p.coeffs()) {
                CHECK(c.re().get_den() == 1);
                CHECK(abs(c.re()) <= 5);
                CHECK(abs(c.im()) <= 5);
            }
    }
    auto [f1, g1] = random_coprime_pair(1, 1, 1, 3);
    for (const auto& c : f1.coeffs())
        CHECK(abs(c.re()) <= 1);
    CHECK(random_coprime_pair(3, 3, 10, 42) == random_coprime_pair(3, 3, 10, 42));
    CHECK(code_of([] { random_coprime_pair(1, 2, 5, 0); }) == Errc::InvalidArgument);
    CHECK(code_of([] { random_coprime_pair(2, 0, 5, 0); }) == Errc::InvalidArgument);
}

TEST_CASE("random_coprime_pair gives up after the retry cap") {
    std::mt19937_64 rng(1);
    CHECK(code_of([&] {
              random_coprime_pair(rng, 2, 1, CoeffOptions{}, LeadingRelation::Free, 0);
          }) == Errc::ExhaustedRetries);
    // bound 1, real, equal leading coefficients: still reachable within the cap
    auto [f, g] = random_coprime_pair(rng, 1, 1, CoeffOptions{1, false}, LeadingRelation::Equal);
    CHECK(coprime(f, g));
    CHECK(classify_case(f, g) == CaseTag::Case2);
}

TEST_CASE("steered leading coefficients hit the requested case") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 30; ++k) {
        auto [f2, g2] = random_coprime_pair(rng, 3, 1, CoeffOptions{}, LeadingRelation::Equal);
        CHECK(classify_case(f2, g2) == CaseTag::Case2);
        auto [f3, g3] = random_coprime_pair(rng, 2, 2, CoeffOptions{}, LeadingRelation::Negated);
        CHECK(classify_case(f3, g3) == CaseTag::Case3);
    }
}

TEST_CASE("property: generated triples are Pythagorean and primitive") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> deg(1, 4), wdeg(0, 3);
    int counts[3] = {0, 0, 0};
    for (int trial = 0; trial < 100; ++trial) {
        const int df = deg(rng);
        const int dg = std::uniform_int_distribution<int>(1, df)(rng);
        const auto rel = static_cast<LeadingRelation>(trial % 3);
        auto [f, g] = random_coprime_pair(rng, df, dg, CoeffOptions{}, rel);
        const Polynomial w = random_polynomial(rng, wdeg(rng), CoeffOptions{});
        const auto tr = make_triple(f, g, w);
        ++counts[static_cast<int>(tr.case_tag)];
        CHECK((pow(tr.wA(), 2) + pow(tr.wB(), 2) - pow(tr.wC(), 2)).is_zero());
        CHECK(gcd(tr.A, tr.B).is_constant());
        CHECK(gcd(tr.B, tr.C).is_constant());
        CHECK(gcd(tr.A, tr.C).is_constant());
        CHECK_FALSE(tr.C.is_constant());
        CHECK(profile_matches_case(tr));
        CHECK(tr.f.degree() >= tr.g.degree());
    }
    CHECK(counts[0] > 0);
    CHECK(counts[1] > 0);
    CHECK(counts[2] > 0);
}
