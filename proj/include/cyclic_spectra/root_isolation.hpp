#pragma once

// Real roots of exact polynomials: Sturm isolation on dyadic intervals,
// sign bisection, then a multiprecision Newton polish.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "cyclic_spectra/polynomial.hpp"

namespace cyclic_spectra {

struct RealRoot {
    double value = 0;
    mpf_class precise;               // polished to the working precision
    std::optional<Rational> exact;   // set when the root is rational
    Rational lo, hi;                 // isolating interval, lo < root <= hi
};

/// Distinct real roots of p (any multiplicities), increasing.
/// `precision_bits` is the mpf precision used for polishing (0 = automatic).
std::vector<RealRoot> real_roots(const Polynomial& p, unsigned long precision_bits = 0);

/// Number of distinct real roots in (a, b].
std::size_t count_real_roots(const Polynomial& p, const Rational& a, const Rational& b);

/// A working mpf precision adequate for evaluating p and its relatives near its roots.
unsigned long suggested_precision(const Polynomial& p);

/// p(x) evaluated in multiprecision.
mpf_class eval_mpf(const Polynomial& p, const mpf_class& x);

}  // namespace cyclic_spectra
