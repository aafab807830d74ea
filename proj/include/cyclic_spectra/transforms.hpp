#pragma once

// Spectral transforms of rooted graphs as exact rational functions:
//   G = phi_{minus root} / phi       (Green function at the root)
//   F = 1 / G
//   Cauchy = phi' / phi,  renormalized = Cauchy - d / z
//   H = renormalized + 1/z + G'/G

#include <optional>
#include <string>
#include <vector>

#include "cyclic_spectra/graph.hpp"
#include "cyclic_spectra/rational_function.hpp"
#include "cyclic_spectra/truncated_series.hpp"

namespace cyclic_spectra {

struct RootedSpectralData {
    Polynomial phi;
    Polynomial phi_minus_root;
    std::size_t dim = 0;

    friend bool operator==(const RootedSpectralData&, const RootedSpectralData&) = default;
};

struct SpectrumEntry {
    double value = 0;
    std::size_t multiplicity = 0;
    std::optional<Rational> exact;
};

struct SpectrumReport {
    std::vector<SpectrumEntry> entries;  // strictly increasing eigenvalues
    std::size_t dim = 0;
};

struct GreenPole {
    double value = 0;
    double weight = 0;
    std::optional<Rational> exact_value;
    std::optional<Rational> exact_weight;
};

struct GreenFactorization {
    std::vector<GreenPole> poles;
    std::vector<double> zeros;
};

RootedSpectralData spectral_data(const RootedGraph& g);
/// Transform data for an arbitrary Green/Cauchy pair given by polynomials.
RootedSpectralData make_spectral_data(Polynomial phi, Polynomial phi_minus_root);

RationalFunction green(const RootedSpectralData& sd);
RationalFunction f_transform(const RootedSpectralData& sd);
RationalFunction cauchy(const RootedSpectralData& sd);
RationalFunction renormalized_cauchy(const RootedSpectralData& sd);
RationalFunction h_transform(const RootedSpectralData& sd);
/// H from a (renormalized Cauchy, Green) pair.
RationalFunction h_from(const RationalFunction& rc, const RationalFunction& g);

/// Expansion in w = 1/z: entry n is the coefficient of z^{-n}, n = 0..order.
/// Throws "not proper at infinity" when deg num > deg den.
TruncatedSeries laurent_at_infinity(const RationalFunction& f, std::size_t order = kDefaultSeriesOrder);

/// Eigenvalues with multiplicities from a renormalized Cauchy transform.
SpectrumReport extract_spectrum(const RationalFunction& rc, std::size_t dim);

GreenFactorization factorize_green(const RationalFunction& g);

/// {"num": [...], "den": [...]} with exact coefficient strings, low degree first.
std::string ratfun_to_json(const RationalFunction& f);
RationalFunction ratfun_from_json(const std::string& text);

}  // namespace cyclic_spectra
