#pragma once

// Quotients of rational polynomials kept in a unique canonical form:
// numerator and denominator coprime, denominator monic.  Equality of
// canonical forms is equality of functions.

#include <ostream>
#include <string>

#include "cyclic_spectra/polynomial.hpp"

namespace cyclic_spectra {

class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(Rational(1))) {}
    RationalFunction(Polynomial num, Polynomial den);
    RationalFunction(const Polynomial& p)  // NOLINT(google-explicit-constructor)
        : RationalFunction(p, Polynomial::constant(Rational(1))) {}

    static RationalFunction z() { return RationalFunction(Polynomial::x()); }
    static RationalFunction constant(const Rational& c) { return RationalFunction(Polynomial::constant(c)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// deg(num) <= deg(den)
    bool is_proper() const { return num_.degree() <= den_.degree(); }

    RationalFunction reciprocal() const;
    RationalFunction derivative() const;
    /// f'/f; throws for the zero function.
    RationalFunction log_derivative() const;
    /// this(inner(z)); throws "pole at composition point" when undefined.
    RationalFunction compose(const RationalFunction& inner) const;
    RationalFunction scaled(const Rational& c) const;

    Rational eval(const Rational& x) const;
    long double eval(long double x) const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const { return scaled(Rational(-1)); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(char var = 'z') const;
    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
        return os << f.to_string();
    }

private:
    struct Canonical {};
    RationalFunction(Canonical, Polynomial num, Polynomial den)
        : num_(std::move(num)), den_(std::move(den)) {}
    Polynomial num_;
    Polynomial den_;
};

}  // namespace cyclic_spectra
