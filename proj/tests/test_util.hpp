#pragma once

#include <random>

#include "cyclic_spectra/polynomial.hpp"
#include "cyclic_spectra/rational_function.hpp"

namespace cs_test {

using namespace cyclic_spectra;

inline Polynomial random_poly(std::mt19937_64& rng, int max_degree, long bound = 5) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coef(-bound, bound);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = Rational(coef(rng));
    if (c.back().is_zero()) c.back() = Rational(1);
    return Polynomial(c);
}

inline Polynomial P(std::initializer_list<long> low_to_high) {
    std::vector<Rational> c;
    for (long v : low_to_high) c.emplace_back(v);
    return Polynomial(c);
}

}  // namespace cs_test
