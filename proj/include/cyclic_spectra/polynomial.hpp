#pragma once

// Dense univariate polynomials over the rationals.

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cyclic_spectra/rational.hpp"

namespace cyclic_spectra {

/// Coefficient vector indexed by degree. The highest stored coefficient is
/// nonzero; the zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t degree);
    static Polynomial x() { return monomial(Rational(1), 1); }
    static Polynomial from_integers(const std::vector<BigInt>& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }
    bool has_integer_coefficients() const;

    /// Coefficient of x^i, zero beyond the degree.
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
    const std::vector<Rational>& coefficients() const { return c_; }
    const Rational& leading() const;

    Polynomial monic() const;
    Polynomial derivative() const;
    Polynomial compose(const Polynomial& inner) const;
    Polynomial scaled(const Rational& factor) const;
    /// p(x) -> x^deg p(1/x) padded to the given length.
    Polynomial reversed(std::size_t length) const;

    Rational eval(const Rational& x) const;
    long double eval(long double x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string to_string(char var = 'x') const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.to_string();
    }

private:
    void trim();
    std::vector<Rational> c_;
};

/// Euclidean division; throws std::domain_error when the divisor is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor. Throws "gcd undefined" for two zeros.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& p, unsigned exponent);

/// p / gcd(p, p'), made monic.
Polynomial square_free_part(const Polynomial& p);

/// Primitive integer multiple of p with positive leading coefficient.
std::vector<BigInt> primitive_part(const Polynomial& p);

}  // namespace cyclic_spectra
