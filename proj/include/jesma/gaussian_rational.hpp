#ifndef JESMA_GAUSSIAN_RATIONAL_HPP
#define JESMA_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace jesma {

/// Element re + im*i of Q(i). Both parts are GMP rationals kept in lowest
/// terms with positive denominator; every operation is exact.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {} // NOLINT: implicit from integers is intended
    GaussianRational(mpq_class re, mpq_class im = 0);

    static GaussianRational i() { return GaussianRational(0, 1); }

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return im_ == 0 && re_ == 1; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// re^2 + im^2.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    /// Multiplicative inverse; throws Error(DivisionByZeroPolynomial) on zero.
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Canonical text: "3", "-1/2", "i", "-2*i", "1/2 + 3*i".
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

} // namespace jesma

#endif
