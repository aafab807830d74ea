#pragma once

// Exact rational arithmetic on top of GMP.
//
// Values are always stored in lowest terms with a positive denominator;
// zero is 0/1. All arithmetic results are canonical.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cyclic_spectra {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : v_(static_cast<long>(value)) {}  // NOLINT
    Rational(const BigInt& value) : v_(value) {}  // NOLINT
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& value) : v_(value) { v_.canonicalize(); }

    /// Parses "p", "p/q" or a finite decimal such as "-0.125" exactly.
    static Rational parse(std::string_view text);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }
    long double to_long_double() const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class v_{0};
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

/// Exact dyadic/decimal-free conversion of a finite double.
Rational from_double(double value);

}  // namespace cyclic_spectra
