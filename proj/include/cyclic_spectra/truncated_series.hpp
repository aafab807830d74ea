#pragma once

// Formal power series sum_{n<K} c_n t^n with exact coefficients.

#include <cstddef>
#include <ostream>
#include <vector>

#include "cyclic_spectra/rational.hpp"

namespace cyclic_spectra {

inline constexpr std::size_t kDefaultSeriesOrder = 32;

class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order = kDefaultSeriesOrder);
    /// Coefficients beyond `order` are dropped, missing ones are zero.
    TruncatedSeries(std::vector<Rational> coeffs, std::size_t order);

    std::size_t order() const { return c_.size(); }
    const Rational& operator[](std::size_t n) const { return c_.at(n); }
    Rational& operator[](std::size_t n) { return c_.at(n); }
    const std::vector<Rational>& coefficients() const { return c_; }

    TruncatedSeries truncated(std::size_t order) const;
    TruncatedSeries scaled(const Rational& c) const;
    /// t * d/dt
    TruncatedSeries derivative_times_z() const;
    /// d/dt (loses the top coefficient's successor, order is preserved with a zero).
    TruncatedSeries derivative() const;
    /// this(inner(t)); inner must have zero constant term.
    TruncatedSeries compose(const TruncatedSeries& inner) const;
    /// 1 / (1 + this); throws when the constant term is -1.
    TruncatedSeries reciprocal_of_one_plus() const;
    /// 1 / this; throws when the constant term is 0.
    TruncatedSeries reciprocal() const;
    /// multiply by t^k (shift up), keeping the order.
    TruncatedSeries shifted(std::size_t k) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const { return scaled(Rational(-1)); }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }
    friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

private:
    std::vector<Rational> c_;
};

}  // namespace cyclic_spectra
