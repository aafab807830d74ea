#pragma once

// Exact characteristic polynomials det(xI - A) of integer matrices.

#include "cyclic_spectra/graph.hpp"
#include "cyclic_spectra/polynomial.hpp"

namespace cyclic_spectra {

inline constexpr std::size_t kMaxExactDimension = 512;

/// Faddeev-LeVerrier over the integers. O(n^4) big-integer operations; reference path.
Polynomial charpoly_faddeev_leverrier(const IntMatrix& a);

/// Hessenberg reduction modulo word-size primes, recombined by CRT against the
/// bound |c_k| <= C(n,k) rho^k <= (1 + rho)^n with rho the maximal absolute row sum.
Polynomial charpoly_modular(const IntMatrix& a);

/// Default route (modular); throws std::invalid_argument above kMaxExactDimension.
Polynomial charpoly(const IntMatrix& a);

}  // namespace cyclic_spectra
