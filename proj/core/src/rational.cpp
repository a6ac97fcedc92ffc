#include "blocksing/rational.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace blocksing {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational::Rational(long numerator, long denominator) : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (sgn(denominator) == 0) {
        throw DivisionByZero();
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (sgn(value_.get_den()) == 0) {
        throw DivisionByZero();
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (!all_digits(digits) || (slash != std::string_view::npos && !all_digits(den))) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    if (num.front() == '+') {
        num.remove_prefix(1);
    }
    mpz_class p(std::string(num), 10);
    mpz_class q = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (sgn(q) == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(p, q);
}

std::size_t Rational::bit_length() const {
    const auto bits = [](const mpz_class& z) -> std::size_t {
        return sgn(z) == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
    };
    return std::max(bits(numerator()), bits(denominator()));
}

std::string Rational::to_string() const {
    if (denominator() == 1) {
        return numerator().get_str();
    }
    return numerator().get_str() + "/" + denominator().get_str();
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw DivisionByZero();
    }
    Rational r;
    mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw DivisionByZero();
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

}  // namespace blocksing
