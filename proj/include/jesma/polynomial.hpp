#ifndef JESMA_POLYNOMIAL_HPP
#define JESMA_POLYNOMIAL_HPP

#include "jesma/gaussian_rational.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace jesma {

/// Degree of a polynomial. The zero polynomial has degree NegInfinity, which
/// compares below every integer degree and absorbs addition.
class Degree {
public:
    constexpr Degree(int value) : value_(value) {} // NOLINT: implicit by design of the arithmetic
    static constexpr Degree neg_infinity() { return Degree(); }

    constexpr bool is_neg_infinity() const noexcept { return value_ == kNegInf; }
    /// Integer value; only meaningful when !is_neg_infinity().
    constexpr int value() const noexcept { return value_; }

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (a.is_neg_infinity() || b.is_neg_infinity())
            return neg_infinity();
        return Degree(a.value_ + b.value_);
    }
    friend constexpr bool operator==(Degree a, Degree b) = default;
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
        return a.value_ <=> b.value_;
    }

    std::string to_string() const;

private:
    static constexpr int kNegInf = -2147483647 - 1;
    constexpr Degree() : value_(kNegInf) {}
    int value_;
};

/// Dense univariate polynomial in t over Q(i). coeffs()[k] is the coefficient
/// of t^k; the highest stored coefficient is never zero, so structural
/// equality is mathematical equality.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long c) : Polynomial(GaussianRational(c)) {} // NOLINT
    Polynomial(const GaussianRational& c);                  // NOLINT
    explicit Polynomial(std::vector<GaussianRational> coeffs);

    /// c * t^k.
    static Polynomial monomial(const GaussianRational& c, int k);
    static Polynomial t() { return monomial(1, 1); }

    std::span<const GaussianRational> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of t^k, zero past the degree.
    GaussianRational coeff(int k) const;

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Zero and nonzero scalars are both constant.
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    Degree degree() const noexcept {
        return is_zero() ? Degree::neg_infinity() : Degree(static_cast<int>(coeffs_.size()) - 1);
    }
    /// Throws ZeroPolynomial for the zero polynomial.
    const GaussianRational& leading_coeff() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const GaussianRational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
    friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    GaussianRational evaluate(const GaussianRational& at) const;

    /// Debug rendering; the canonical surface syntax lives in parse.hpp.
    std::string to_string() const;

private:
    void trim();
    std::vector<GaussianRational> coeffs_;
};

/// p^k by repeated squaring. p^0 is 1 for every p, including p = 0.
Polynomial pow(const Polynomial& p, unsigned k);

struct DivRem {
    Polynomial quot;
    Polynomial rem;
};

/// p = q*quot + rem with degree(rem) < degree(q). Throws DivisionByZeroPolynomial.
DivRem divrem(const Polynomial& p, const Polynomial& q);

/// Scales p so that its leading coefficient is 1; zero stays zero.
Polynomial monic(const Polynomial& p);

/// Monic greatest common divisor. Throws BothZero when p = q = 0.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// True when gcd(p, q) is 1.
bool coprime(const Polynomial& p, const Polynomial& q);

Polynomial derivative(const Polynomial& p);

/// Monic squarefree part p / gcd(p, p'). Throws ZeroPolynomial.
Polynomial radical(const Polynomial& p);

/// Number of distinct roots of p over the algebraic closure, i.e.
/// degree(radical(p)). Throws ZeroPolynomial.
int eta(const Polynomial& p);

struct LeadingTerm {
    GaussianRational coeff;
    Degree degree;
    friend bool operator==(const LeadingTerm&, const LeadingTerm&) = default;
};

/// Throws ZeroPolynomial.
LeadingTerm leading_term(const Polynomial& p);

} // namespace jesma

#endif
