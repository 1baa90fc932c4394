#include "jesma/parse.hpp"

#include "jesma/error.hpp"

#include <cctype>

namespace jesma {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Polynomial parse() {
        skip_ws();
        if (at_end())
            fail("expected an expression, found end of input");
        Polynomial p = expr();
        skip_ws();
        if (!at_end())
            fail(std::string("expected operator or end of input, found '") + peek() + "'");
        return p;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(Errc::SyntaxError, pos_, msg);
    }

    std::string found() const {
        return at_end() ? std::string("end of input") : "'" + std::string(1, peek()) + "'";
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (accept('*'))
            acc *= unary();
        return acc;
    }

    Polynomial unary() {
        if (accept('-'))
            return -unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (!accept('^'))
            return base;
        skip_ws();
        if (peek() == '-')
            throw ParseError(Errc::NonPolynomial, pos_, "negative exponent is not a polynomial");
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a nonnegative integer exponent, found " + found());
        const std::size_t at = pos_;
        const mpz_class e = integer();
        if (e > kMaxExponent)
            throw ParseError(Errc::SyntaxError, at,
                             "exponent exceeds " + std::to_string(kMaxExponent));
        return pow(base, static_cast<unsigned>(e.get_ui()));
    }

    Polynomial atom() {
        skip_ws();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = integer();
            if (!accept('/'))
                return Polynomial(GaussianRational(mpq_class(num)));
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected an integer denominator, found " + found());
            const std::size_t at = pos_;
            mpz_class den = integer();
            if (den == 0)
                throw ParseError(Errc::SyntaxError, at, "zero denominator");
            return Polynomial(GaussianRational(mpq_class(num, den)));
        }
        if (c == 't') {
            ++pos_;
            return Polynomial::t();
        }
        if (c == 'i') {
            ++pos_;
            return Polynomial(GaussianRational::i());
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')'))
                fail("expected ')', found " + found());
            return inner;
        }
        fail("expected a number, 't', 'i' or '(', found " + found());
    }

    mpz_class integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        return mpz_class(std::string(src_.substr(start, pos_ - start)));
    }
};

std::string monomial_text(std::size_t k) {
    if (k == 1)
        return "t";
    return "t^" + std::to_string(k);
}

} // namespace

Polynomial parse_poly(std::string_view src) {
    return Parser(src).parse();
}

std::string print_poly(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    const auto coeffs = p.coeffs();
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const GaussianRational& c = coeffs[k];
        if (c.is_zero())
            continue;
        bool negative = false;
        std::string body;
        if (c.is_real() || sgn(c.re()) == 0) {
            const bool real = c.is_real();
            const mpq_class& part = real ? c.re() : c.im();
            negative = sgn(part) < 0;
            const mpq_class mag = abs(part);
            if (real)
                body = (mag == 1 && k > 0) ? std::string() : mag.get_str();
            else
                body = mag == 1 ? std::string("i") : mag.get_str() + "*i";
        } else {
            body = "(" + c.to_string() + ")";
        }
        if (k > 0)
            body += (body.empty() ? "" : "*") + monomial_text(k);

        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

} // namespace jesma
