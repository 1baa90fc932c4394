#include "jesma/gaussian_rational.hpp"

#include "jesma/error.hpp"

#include <ostream>
#include <utility>

namespace jesma {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::ConstantInput: return "ConstantInput";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::ExhaustedRetries: return "ExhaustedRetries";
    case Errc::SumMismatch: return "SumMismatch";
    case Errc::AllConstant: return "AllConstant";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::TheoremViolated: return "TheoremViolated";
    case Errc::NonconstantScale: return "NonconstantScale";
    case Errc::UnexpectedZeroSum: return "UnexpectedZeroSum";
    case Errc::HypothesisNotMet: return "HypothesisNotMet";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::NonPolynomial: return "NonPolynomial";
    case Errc::GenerationFailure: return "GenerationFailure";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero())
        throw Error(Errc::DivisionByZeroPolynomial, "inverse of zero coefficient");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

namespace {

// "i", "-i", "3*i", "-1/2*i"
std::string imag_text(const mpq_class& b) {
    if (b == 1)
        return "i";
    if (b == -1)
        return "-i";
    return b.get_str() + "*i";
}

} // namespace

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0)
        return re_.get_str();
    if (sgn(re_) == 0)
        return imag_text(im_);
    std::string out = re_.get_str();
    out += sgn(im_) < 0 ? " - " : " + ";
    out += imag_text(abs(im_));
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
}

} // namespace jesma
