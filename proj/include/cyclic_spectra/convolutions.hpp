#pragma once

// Boolean / cyclic-Boolean / monotone / cyclic-monotone convolution formulas and
// the Schwenk characteristic-polynomial identities for star and comb products.

#include <string>
#include <vector>

#include "cyclic_spectra/transforms.hpp"

namespace cyclic_spectra {

/// F1 + F2 - z
RationalFunction boolean_f_sum(const RationalFunction& f1, const RationalFunction& f2);

/// (renormalized Cauchy, Green) pair of a self-adjoint element.
struct TransformPair {
    RationalFunction rc;
    RationalFunction g;
};

TransformPair transform_pair(const RootedSpectralData& sd);

/// Sum of cyclic-Boolean independent elements.
TransformPair cyclic_boolean_sum(const TransformPair& a, const TransformPair& b);
/// n-fold i.i.d. sum via H_n = n H and F_n = n F - (n - 1) z.
TransformPair cyclic_boolean_power(const TransformPair& a, std::size_t n);

RootedSpectralData star_char_poly(const RootedSpectralData& sd1, const RootedSpectralData& sd2);
RootedSpectralData comb_char_poly(const RootedSpectralData& sdG, const RootedSpectralData& sdH);

/// F1(F2(z))
RationalFunction monotone_f_compose(const RationalFunction& f1, const RationalFunction& f2);

/// rc_b + F_b' * rc_a(F_b)
RationalFunction cyclic_monotone_sum(const RationalFunction& rc_a, const RationalFunction& rc_b,
                                     const RationalFunction& f_b);

/// Renormalized Cauchy transform of G ▷ H: d * rc_H + F_H' * rc_G(F_H), d = dim G.
RationalFunction comb_renormalized_cauchy(const RootedSpectralData& sdG, const RootedSpectralData& sdH);
/// The variant d * rc_G + F_H' * rc_G(F_H), kept to document that it disagrees with the graphs.
RationalFunction comb_renormalized_cauchy_misprint(const RootedSpectralData& sdG, const RootedSpectralData& sdH);

/// K(z) = -sum_n omega(a^n) / (n z^n) as a series in w = 1/z (entry n <-> z^{-n}).
TruncatedSeries k_transform(const RationalFunction& rc, std::size_t order = kDefaultSeriesOrder);
/// K_b + K_a o F_b, composing in w with the expansion of 1/F_b = G_b.
TruncatedSeries k_transform_sum(const TruncatedSeries& k_a, const TruncatedSeries& k_b, const RationalFunction& f_b);
/// rc = dK/dz = -w^2 dK/dw, as a w-series (entry n <-> z^{-n}).
TruncatedSeries rc_series_from_k(const TruncatedSeries& k);

struct IdentityMismatch {
    std::string identity;
    std::string detail;  // first differing coefficient or the two sides
};

struct IdentityCheck {
    bool ok = true;
    std::vector<IdentityMismatch> mismatches;
};

/// Logarithmic-derivative form of the star-product identity
///   Cauchy_{1*2} + G'/G = Cauchy_1 + Cauchy_2 + G_1'/G_1 + G_2'/G_2
/// where the left side comes from sd_product (the data of the actual product graph).
IdentityCheck star_cauchy_identity_check(const RootedSpectralData& sd1, const RootedSpectralData& sd2,
                                         const RootedSpectralData& sd_product);

/// Describes the first coefficient where two polynomials differ.
std::string polynomial_diff(const Polynomial& lhs, const Polynomial& rhs);
std::string ratfun_diff(const RationalFunction& lhs, const RationalFunction& rhs);

}  // namespace cyclic_spectra
