#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jesma/error.hpp"
#include "jesma/polynomial.hpp"
#include "oracle.hpp"

#include <random>

using namespace jesma;

namespace {

// Coefficients in ascending powers of t.
Polynomial poly(std::initializer_list<GaussianRational> c) {
    return Polynomial(std::vector<GaussianRational>(c));
}

const GaussianRational I = GaussianRational::i();
const Polynomial T = Polynomial::t();

GaussianRational q(long num, long den) { return GaussianRational(mpq_class(num, den)); }

Errc code_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::InvalidArgument;
}

Polynomial random_poly(std::mt19937_64& rng, int max_deg, int bound = 5) {
    std::uniform_int_distribution<long> c(-bound, bound);
    std::uniform_int_distribution<int> d(-1, max_deg);
    const int deg = d(rng);
    std::vector<GaussianRational> v;
    for (int k = 0; k <= deg; ++k)
        v.emplace_back(mpq_class(c(rng)), mpq_class(c(rng)));
    return Polynomial(std::move(v));
}

bool canonical(const Polynomial& p) { return p.is_zero() || !p.coeffs().back().is_zero(); }

} // namespace

TEST_CASE("gaussian rationals are exact and normalized") {
    const GaussianRational a(mpq_class(2, 4), mpq_class(-6, 8));
    CHECK(a.re() == mpq_class(1, 2));
    CHECK(a.re().get_den() == 2);
    CHECK(a.im().get_den() == 4);
    CHECK((a * a.inverse()).is_one());
    CHECK(I * I == GaussianRational(-1));
    CHECK((q(1, 3) + q(2, 3)).is_one());
    CHECK((a - a).is_zero());
    CHECK(code_of([] { GaussianRational().inverse(); }) == Errc::DivisionByZeroPolynomial);
    CHECK(GaussianRational(mpq_class(1, 2), mpq_class(-3)).to_string() == "1/2 - 3*i");
    CHECK((-I).to_string() == "-i");
}

TEST_CASE("degree sentinel") {
    const Degree ninf = Degree::neg_infinity();
    CHECK(ninf < Degree(0));
    CHECK(ninf + Degree(5) == ninf);
    CHECK(Degree(2) + Degree(3) == Degree(5));
    CHECK(Polynomial().degree() == ninf);
    CHECK(Polynomial(7).degree() == Degree(0));
}

TEST_CASE("add") {
    CHECK(poly({1, 0, 1}) + poly({0, 0, -1}) == Polynomial(1));
    const Polynomial p = poly({3, I, 2});
    CHECK(p + Polynomial() == p);
    CHECK(poly({-1, 1}) + poly({1, 1}) == poly({0, 2}));
    CHECK((p - p).is_zero());
}

TEST_CASE("mul") {
    CHECK(poly({-1, 1}) * poly({1, 1}) == poly({-1, 0, 1}));
    CHECK((poly({3, 1}) * Polynomial()).is_zero());
    CHECK(poly({I, 1}) * poly({-I, 1}) == poly({1, 0, 1}));
}

TEST_CASE("pow") {
    CHECK(pow(poly({1, 1}), 2) == poly({1, 2, 1}));
    const Polynomial p = poly({q(1, 2), I, 3});
    CHECK(pow(p, 1) == p);
    CHECK(pow(poly({0, 2}), 3) == poly({0, 0, 0, 8}));
    CHECK(pow(Polynomial(), 0) == Polynomial(1));
    CHECK(pow(Polynomial(), 3).is_zero());
}

TEST_CASE("divrem") {
    auto [q1, r1] = divrem(poly({-1, 0, 1}), poly({-1, 1}));
    CHECK(q1 == poly({1, 1}));
    CHECK(r1.is_zero());
    auto [q2, r2] = divrem(T, poly({0, 0, 1}));
    CHECK(q2.is_zero());
    CHECK(r2 == T);
    auto [q3, r3] = divrem(poly({1, 0, 1}), T);
    CHECK(q3 == T);
    CHECK(r3 == Polynomial(1));
    CHECK(code_of([] { divrem(T, Polynomial()); }) == Errc::DivisionByZeroPolynomial);
}

TEST_CASE("gcd") {
    CHECK(gcd(poly({-1, 0, 1}), poly({1, 2, 1})) == poly({1, 1}));
    CHECK(gcd(T, poly({1, I})) == Polynomial(1));
    CHECK(gcd(poly({0, 0, 6}), poly({0, 4})) == T);
    CHECK(gcd(poly({2, 4}), Polynomial()) == poly({q(1, 2), 1}));
    CHECK(code_of([] { gcd(Polynomial(), Polynomial()); }) == Errc::BothZero);
}

TEST_CASE("derivative") {
    CHECK(derivative(poly({0, -2, 0, 1})) == poly({-2, 0, 3}));
    CHECK(derivative(Polynomial(9)).is_zero());
    CHECK(derivative(pow(poly({1, 0, 1}), 2)) == poly({0, 4, 0, 4}));
}

TEST_CASE("radical") {
    // (t-1)^2 (t+2) -> (t-1)(t+2)
    CHECK(radical(oracle::from_roots({{1, 2}, {-2, 1}})) == oracle::from_roots({{1, 1}, {-2, 1}}));
    CHECK(radical(poly({5, 1})) == poly({5, 1}));
    CHECK(radical(pow(poly({1, 0, 1}), 3)) == poly({1, 0, 1}));
    CHECK(radical(poly({0, 3})) == T);
    CHECK(code_of([] { radical(Polynomial()); }) == Errc::ZeroPolynomial);
}

TEST_CASE("eta") {
    // (t^2 - 1) * 2t * (t^2 + 1): roots +-1, 0, +-i
    const Polynomial p = oracle::from_roots({{1, 1}, {-1, 1}, {0, 1}, {I, 1}, {-I, 1}}, 2);
    CHECK(p == poly({-1, 0, 1}) * poly({0, 2}) * poly({1, 0, 1}));
    CHECK(eta(p) == 5);
    CHECK(eta(pow(poly({-1, 1}), 4)) == 1);
    CHECK(eta(Polynomial(-3)) == 0);
    CHECK(code_of([] { eta(Polynomial()); }) == Errc::ZeroPolynomial);
}

TEST_CASE("leading_term") {
    CHECK(leading_term(poly({0, -1, 3})) == LeadingTerm{3, 2});
    CHECK(leading_term(Polynomial::monomial(I, 5)) == LeadingTerm{I, 5});
    CHECK(leading_term(Polynomial(-7)) == LeadingTerm{-7, 0});
    CHECK(code_of([] { leading_term(Polynomial()); }) == Errc::ZeroPolynomial);
}

TEST_CASE("property: ring axioms and canonical form") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial a = random_poly(rng, 5), b = random_poly(rng, 5), c = random_poly(rng, 5);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(canonical(a + b));
        CHECK(canonical(a - a));
        CHECK(canonical(a * b));
        CHECK((a * b).degree() == a.degree() + b.degree());
        // product agrees with pointwise evaluation
        for (const auto& t : oracle::sample_points(3))
            CHECK(oracle::eval(a * b, t) == oracle::eval(a, t) * oracle::eval(b, t));
    }
}

TEST_CASE("property: gcd divides, is monic") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        const Polynomial common = random_poly(rng, 2);
        const Polynomial a = random_poly(rng, 4) * common, b = random_poly(rng, 4) * common;
        if (a.is_zero() && b.is_zero())
            continue;
        const Polynomial d = gcd(a, b);
        CHECK(d.leading_coeff().is_one());
        CHECK(divrem(a, d).rem.is_zero());
        CHECK(divrem(b, d).rem.is_zero());
        if (!common.is_zero())
            CHECK(divrem(d, monic(common)).rem.is_zero());
        auto [qa, ra] = divrem(a, b.is_zero() ? Polynomial(1) : b);
        CHECK(ra.degree() < (b.is_zero() ? Degree(0) : b.degree()));
        CHECK(qa * (b.is_zero() ? Polynomial(1) : b) + ra == a);
    }
}

TEST_CASE("property: radical and eta against explicit root lists") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> part(-3, 3);
    std::uniform_int_distribution<int> mult(1, 3), count(0, 5);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<std::pair<GaussianRational, int>> roots;
        const int n = count(rng);
        for (int k = 0; k < n; ++k)
            roots.emplace_back(GaussianRational(mpq_class(part(rng)), mpq_class(part(rng))), mult(rng));
        const Polynomial p = oracle::from_roots(roots, GaussianRational(mpq_class(2), mpq_class(1)));
        const Polynomial r = radical(p);
        CHECK(eta(p) == oracle::distinct_roots(roots));
        CHECK(divrem(p, r).rem.is_zero());
        CHECK(gcd(r, derivative(r)).is_constant());
        for (unsigned k = 1; k <= 3; ++k)
            CHECK(eta(pow(p, k)) == eta(p));
    }
}

TEST_CASE("property: eta is additive on coprime factors") {
    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 100) {
        const Polynomial a = random_poly(rng, 4), b = random_poly(rng, 4);
        if (a.is_zero() || b.is_zero() || !coprime(a, b))
            continue;
        CHECK(eta(a * b) == eta(a) + eta(b));
        ++checked;
    }
}
