#include "cyclic_spectra/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace cyclic_spectra {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    const auto slash = s.find('/');
    const auto dot = s.find('.');
    try {
        if (slash != std::string::npos) {
            return {BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10)};
        }
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            if (digits.empty() || digits == "-" || digits == "+") {
                throw std::invalid_argument("bad decimal literal '" + s + "'");
            }
            if (digits.front() == '+') digits.erase(digits.begin());
            BigInt den = 1;
            for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
            return {BigInt(digits, 10), den};
        }
        if (s.front() == '+') s.erase(s.begin());
        return {BigInt(s, 10), BigInt(1)};
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal '" + s + "'");
    }
}

long double Rational::to_long_double() const {
    // mpq -> long double via mpf keeps more bits than get_d for huge operands.
    mpf_class f(v_, 128);
    long exp = 0;
    const double mant = mpf_get_d_2exp(&exp, f.get_mpf_t());
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= b;
        b *= b;
        exponent >>= 1U;
    }
    return result;
}

Rational from_double(double value) {
    if (!std::isfinite(value)) throw std::domain_error("non-finite double");
    mpq_class q(value);
    return Rational(q);
}

}  // namespace cyclic_spectra
