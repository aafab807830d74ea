#include "cyclic_spectra/convolutions.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclic_spectra {

namespace {

// sum_i c_i A^i B^{m-i}
Polynomial homogeneous_eval(const Polynomial& c, const Polynomial& a, const Polynomial& b, std::size_t m) {
    std::vector<Polynomial> apow{Polynomial::constant(Rational(1))}, bpow{Polynomial::constant(Rational(1))};
    for (std::size_t i = 1; i <= m; ++i) {
        apow.push_back(apow.back() * a);
        bpow.push_back(bpow.back() * b);
    }
    Polynomial acc;
    for (std::size_t i = 0; i < c.coefficients().size(); ++i) {
        if (c.coefficients()[i].is_zero()) continue;
        acc += (apow[i] * bpow[m - i]).scaled(c.coefficients()[i]);
    }
    return acc;
}

RationalFunction constant_over_z(long c) {
    return {Polynomial::constant(Rational(c)), Polynomial::x()};
}

}  // namespace

RationalFunction boolean_f_sum(const RationalFunction& f1, const RationalFunction& f2) {
    return f1 + f2 - RationalFunction::z();
}

TransformPair transform_pair(const RootedSpectralData& sd) { return {renormalized_cauchy(sd), green(sd)}; }

TransformPair cyclic_boolean_sum(const TransformPair& a, const TransformPair& b) {
    const RationalFunction gs = boolean_f_sum(a.g.reciprocal(), b.g.reciprocal()).reciprocal();
    const RationalFunction rc = a.rc + b.rc + a.g.log_derivative() + b.g.log_derivative() -
                                gs.log_derivative() + constant_over_z(1);
    return {rc, gs};
}

TransformPair cyclic_boolean_power(const TransformPair& a, std::size_t n) {
    if (n == 0) throw std::invalid_argument("need at least one summand");
    const Rational nn(static_cast<long>(n));
    const RationalFunction h = h_from(a.rc, a.g).scaled(nn);
    const RationalFunction fn = a.g.reciprocal().scaled(nn) - RationalFunction::z().scaled(nn - Rational(1));
    const RationalFunction gn = fn.reciprocal();
    // H = rc + 1/z + G'/G
    return {h - constant_over_z(1) - gn.log_derivative(), gn};
}

RootedSpectralData star_char_poly(const RootedSpectralData& sd1, const RootedSpectralData& sd2) {
    const Polynomial phi = sd1.phi * sd2.phi_minus_root + sd1.phi_minus_root * sd2.phi -
                           Polynomial::x() * sd1.phi_minus_root * sd2.phi_minus_root;
    return {phi, sd1.phi_minus_root * sd2.phi_minus_root, sd1.dim + sd2.dim - 1};
}

RootedSpectralData comb_char_poly(const RootedSpectralData& sdG, const RootedSpectralData& sdH) {
    const std::size_t d = sdG.dim;
    const Polynomial phi = homogeneous_eval(sdG.phi, sdH.phi, sdH.phi_minus_root, d);
    const Polynomial rest = homogeneous_eval(sdG.phi_minus_root, sdH.phi, sdH.phi_minus_root, d - 1);
    return {phi, rest * sdH.phi_minus_root, d * sdH.dim};
}

RationalFunction monotone_f_compose(const RationalFunction& f1, const RationalFunction& f2) {
    return f1.compose(f2);
}

RationalFunction cyclic_monotone_sum(const RationalFunction& rc_a, const RationalFunction& rc_b,
                                     const RationalFunction& f_b) {
    if (f_b.num().degree() <= 0 && f_b.den().degree() <= 0)
        throw std::invalid_argument("F_b must be non-constant");
    return rc_b + f_b.derivative() * rc_a.compose(f_b);
}

RationalFunction comb_renormalized_cauchy(const RootedSpectralData& sdG, const RootedSpectralData& sdH) {
    const RationalFunction fh = f_transform(sdH);
    return renormalized_cauchy(sdH).scaled(Rational(static_cast<long>(sdG.dim))) +
           fh.derivative() * renormalized_cauchy(sdG).compose(fh);
}

RationalFunction comb_renormalized_cauchy_misprint(const RootedSpectralData& sdG, const RootedSpectralData& sdH) {
    const RationalFunction fh = f_transform(sdH);
    const RationalFunction rg = renormalized_cauchy(sdG);
    return rg.scaled(Rational(static_cast<long>(sdG.dim))) + fh.derivative() * rg.compose(fh);
}

TruncatedSeries k_transform(const RationalFunction& rc, std::size_t order) {
    const TruncatedSeries r = laurent_at_infinity(rc, order + 1);
    TruncatedSeries k(order + 1);
    for (std::size_t n = 1; n <= order; ++n) k[n] = -r[n + 1] / Rational(static_cast<long>(n));
    return k;
}

TruncatedSeries k_transform_sum(const TruncatedSeries& k_a, const TruncatedSeries& k_b,
                                const RationalFunction& f_b) {
    if (!k_a[0].is_zero() || !k_b[0].is_zero()) throw std::invalid_argument("K-transforms have no constant term");
    const std::size_t order = std::min(k_a.order(), k_b.order());
    const TruncatedSeries g_b = laurent_at_infinity(f_b.reciprocal(), order - 1);
    return k_b.truncated(order) + k_a.truncated(order).compose(g_b);
}

TruncatedSeries rc_series_from_k(const TruncatedSeries& k) {
    TruncatedSeries r(k.order());
    for (std::size_t n = 1; n + 1 < k.order(); ++n) r[n + 1] = -Rational(static_cast<long>(n)) * k[n];
    return r;
}

std::string polynomial_diff(const Polynomial& lhs, const Polynomial& rhs) {
    const std::size_t n = std::max(lhs.coefficients().size(), rhs.coefficients().size());
    for (std::size_t i = 0; i < n; ++i) {
        if (lhs.coeff(i) != rhs.coeff(i)) {
            std::ostringstream os;
            os << "coefficient of x^" << i << ": " << lhs.coeff(i) << " vs " << rhs.coeff(i);
            return os.str();
        }
    }
    return "";
}

std::string ratfun_diff(const RationalFunction& lhs, const RationalFunction& rhs) {
    if (lhs == rhs) return "";
    if (lhs.den() != rhs.den()) return "denominator " + polynomial_diff(lhs.den(), rhs.den());
    return "numerator " + polynomial_diff(lhs.num(), rhs.num());
}

IdentityCheck star_cauchy_identity_check(const RootedSpectralData& sd1, const RootedSpectralData& sd2,
                                         const RootedSpectralData& sd_product) {
    IdentityCheck out;
    if (sd_product.dim != sd1.dim + sd2.dim - 1) {
        out.ok = false;
        out.mismatches.push_back({"star-cauchy", "dimension of the product is not d1 + d2 - 1"});
        return out;
    }
    try {
        const RationalFunction lhs = cauchy(sd_product) + green(sd_product).log_derivative();
        const RationalFunction rhs = cauchy(sd1) + cauchy(sd2) + green(sd1).log_derivative() +
                                     green(sd2).log_derivative();
        if (lhs != rhs) {
            out.ok = false;
            out.mismatches.push_back({"star-cauchy", ratfun_diff(lhs, rhs)});
        }
    } catch (const std::exception& e) {
        out.ok = false;
        out.mismatches.push_back({"star-cauchy", e.what()});
    }
    return out;
}

}  // namespace cyclic_spectra
