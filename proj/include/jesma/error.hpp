#ifndef JESMA_ERROR_HPP
#define JESMA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jesma {

enum class Errc {
    DivisionByZeroPolynomial,
    BothZero,
    ZeroPolynomial,
    NotCoprime,
    ConstantInput,
    ZeroScale,
    ExhaustedRetries,
    SumMismatch,
    AllConstant,
    ZeroInput,
    TheoremViolated,
    NonconstantScale,
    UnexpectedZeroSum,
    HypothesisNotMet,
    SyntaxError,
    NonPolynomial,
    GenerationFailure,
    InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure in the library is reported as an Error carrying a code,
/// so callers (and the CLI) can branch on the kind without parsing text.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Parse failures additionally carry the 0-based byte offset of the problem.
class ParseError : public Error {
public:
    ParseError(Errc code, std::size_t position, const std::string& message)
        : Error(code, "at position " + std::to_string(position) + ": " + message),
          position_(position), message_(message) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t position_;
    std::string message_;
};

} // namespace jesma

#endif
