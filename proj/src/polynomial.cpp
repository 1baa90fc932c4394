#include "jesma/polynomial.hpp"

#include "jesma/error.hpp"

#include <algorithm>
#include <utility>

namespace jesma {

std::string Degree::to_string() const {
    return is_neg_infinity() ? std::string("-inf") : std::to_string(value_);
}

Polynomial::Polynomial(const GaussianRational& c) {
    if (!c.is_zero())
        coeffs_.push_back(c);
}

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::monomial(const GaussianRational& c, int k) {
    if (c.is_zero())
        return {};
    if (k < 0)
        throw Error(Errc::NonPolynomial, "negative exponent in monomial");
    std::vector<GaussianRational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

GaussianRational Polynomial::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size())
        return {};
    return coeffs_[static_cast<std::size_t>(k)];
}

const GaussianRational& Polynomial::leading_coeff() const {
    if (is_zero())
        throw Error(Errc::ZeroPolynomial, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_)
        a *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    // Leading product of nonzero field elements is nonzero; trim is a no-op.
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& a : r.coeffs_)
        a = -a;
    return r;
}

GaussianRational Polynomial::evaluate(const GaussianRational& at) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        out += "(" + coeffs_[k].to_string() + ")";
        if (k > 0)
            out += "*t^" + std::to_string(k);
    }
    return out;
}

Polynomial pow(const Polynomial& p, unsigned k) {
    Polynomial result(1);
    Polynomial base = p;
    while (k > 0) {
        if (k & 1u)
            result *= base;
        k >>= 1;
        if (k > 0)
            base *= base;
    }
    return result;
}

DivRem divrem(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero())
        throw Error(Errc::DivisionByZeroPolynomial, "division by the zero polynomial");
    const int dq = q.degree().value();
    if (p.degree() < q.degree())
        return {Polynomial(), p};

    const GaussianRational inv_lc = q.leading_coeff().inverse();
    std::vector<GaussianRational> rem(p.coeffs().begin(), p.coeffs().end());
    std::vector<GaussianRational> quot(rem.size() - static_cast<std::size_t>(dq));
    for (std::size_t k = rem.size(); k-- > static_cast<std::size_t>(dq);) {
        if (rem[k].is_zero())
            continue;
        GaussianRational factor = rem[k] * inv_lc;
        const std::size_t shift = k - static_cast<std::size_t>(dq);
        for (std::size_t j = 0; j <= static_cast<std::size_t>(dq); ++j)
            rem[shift + j] -= factor * q.coeffs()[j];
        quot[shift] = std::move(factor);
    }
    rem.resize(static_cast<std::size_t>(dq));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero() || p.leading_coeff().is_one())
        return p;
    return p * p.leading_coeff().inverse();
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero())
        throw Error(Errc::BothZero, "gcd(0, 0) is undefined");
    Polynomial a = monic(p);
    Polynomial b = monic(q);
    if (a.degree() < b.degree())
        std::swap(a, b);
    // Monic remainders keep the rational coefficients from growing needlessly.
    while (!b.is_zero()) {
        Polynomial r = monic(divrem(a, b).rem);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool coprime(const Polynomial& p, const Polynomial& q) {
    return gcd(p, q).is_one();
}

Polynomial derivative(const Polynomial& p) {
    if (p.is_constant())
        return {};
    std::vector<GaussianRational> out(p.coeffs().size() - 1);
    for (std::size_t k = 1; k < p.coeffs().size(); ++k)
        out[k - 1] = p.coeffs()[k] * GaussianRational(static_cast<long>(k));
    return Polynomial(std::move(out));
}

Polynomial radical(const Polynomial& p) {
    if (p.is_zero())
        throw Error(Errc::ZeroPolynomial, "radical of the zero polynomial");
    if (p.is_constant())
        return Polynomial(1);
    return monic(divrem(p, gcd(p, derivative(p))).quot);
}

int eta(const Polynomial& p) {
    if (p.is_zero())
        throw Error(Errc::ZeroPolynomial, "root count of the zero polynomial");
    return radical(p).degree().value();
}

LeadingTerm leading_term(const Polynomial& p) {
    return {p.leading_coeff(), p.degree()};
}

} // namespace jesma
