#include "cyclic_spectra/rational_function.hpp"

#include <stdexcept>
#include <vector>

namespace cyclic_spectra {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Polynomial::constant(Rational(1));
        return;
    }
    if (den.degree() > 0 && num.degree() >= 0) {
        const Polynomial g = gcd(num, den);
        if (g.degree() > 0) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
    }
    const Rational lead = den.leading();
    num_ = num.scaled(Rational(1) / lead);
    den_ = den.scaled(Rational(1) / lead);
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of the zero function");
    return {den_, num_};
}

RationalFunction RationalFunction::derivative() const {
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RationalFunction RationalFunction::log_derivative() const {
    if (is_zero()) throw std::domain_error("logarithmic derivative of the zero function");
    // (n/d)'/(n/d) = n'/n - d'/d
    return {num_.derivative() * den_ - num_ * den_.derivative(), num_ * den_};
}

RationalFunction RationalFunction::compose(const RationalFunction& inner) const {
    const int m = std::max(num_.degree(), den_.degree());
    const std::size_t len = static_cast<std::size_t>(m) + 1;
    std::vector<Polynomial> a_pow(len), b_pow(len);
    a_pow[0] = b_pow[0] = Polynomial::constant(Rational(1));
    for (std::size_t i = 1; i < len; ++i) {
        a_pow[i] = a_pow[i - 1] * inner.num_;
        b_pow[i] = b_pow[i - 1] * inner.den_;
    }
    auto homogenize = [&](const Polynomial& p) {
        Polynomial acc;
        for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
            const Rational& c = p.coefficients()[i];
            if (c.is_zero()) continue;
            acc += (a_pow[i] * b_pow[len - 1 - i]).scaled(c);
        }
        return acc;
    };
    Polynomial den = homogenize(den_);
    if (den.is_zero()) throw std::domain_error("pole at composition point");
    return {homogenize(num_), std::move(den)};
}

RationalFunction RationalFunction::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    return {Canonical{}, num_.scaled(c), den_};
}

Rational RationalFunction::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("evaluation at a pole");
    return num_.eval(x) / d;
}

long double RationalFunction::eval(long double x) const { return num_.eval(x) / den_.eval(x); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) return *this = RationalFunction(num_ + o.num_, den_);
    return *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    if (den_ == o.den_) return *this = RationalFunction(num_ - o.num_, den_);
    return *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    return *this = RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("division by the zero function");
    return *this = RationalFunction(num_ * o.den_, den_ * o.num_);
}

std::string RationalFunction::to_string(char var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace cyclic_spectra
