#include "cyclic_spectra/limits_id.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cyclic_spectra {

namespace {

std::size_t root_degree(const RootedGraph& g) {
    const std::size_t deg = g.graph.degrees()[g.root];
    if (deg == 0) throw std::invalid_argument("root must have degree >= 1");
    return deg;
}

Rational pow_rational(const Rational& x, unsigned e) {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= x;
    return r;
}

void check_factor(unsigned d, unsigned k, const FactorMoments& m) {
    if (d < 2) throw std::invalid_argument("factor dimension must be >= 2");
    if (k == 0) throw std::invalid_argument("moment order must be >= 1");
    if (m.phi.size() <= k || m.omega.size() <= k) throw std::invalid_argument("moment tables too short");
}

// Coefficients of the w-series K_a = -sum omega_n w^n / n and the powers G_a^j,
// with G_a = w + sum psi_n w^{n+1}.
struct CombSeries {
    std::vector<Rational> ka;
    std::vector<std::vector<Rational>> gpow;  // gpow[j][n], 1 <= j <= n <= k

    CombSeries(unsigned k, const FactorMoments& m) : ka(k + 1), gpow(k + 1, std::vector<Rational>(k + 1)) {
        for (unsigned n = 1; n <= k; ++n) ka[n] = -m.omega[n] / Rational(static_cast<long>(n));
        std::vector<Rational> g(k + 1);
        g[1] = Rational(1);
        for (unsigned n = 1; n + 1 <= k; ++n) g[n + 1] = m.phi[n];
        gpow[1] = g;
        for (unsigned j = 2; j <= k; ++j)
            for (unsigned a = j - 1; a <= k; ++a) {
                if (gpow[j - 1][a].is_zero()) continue;
                for (unsigned b = 1; a + b <= k; ++b)
                    if (!g[b].is_zero()) gpow[j][a + b] += gpow[j - 1][a] * g[b];
            }
    }

    // (L o G_a)[n], using L[j] for j < limit only
    Rational composed(const std::vector<Rational>& l, unsigned n, unsigned limit) const {
        Rational s;
        for (unsigned j = 1; j <= n && j < limit; ++j)
            if (!l[j].is_zero()) s += l[j] * gpow[j][n];
        return s;
    }
};

}  // namespace

CLTLimits cb_clt_limits(unsigned k, const Rational& alpha) {
    if (k == 0) throw std::invalid_argument("k must be >= 1");
    CLTLimits r;
    if (k % 2 == 1) {
        r.phi_limit = 0;
        r.omega_limit = Rational(0);
        r.symbolic = "0";
    } else if (k == 2) {
        r.phi_limit = 1;
        r.omega_limit = alpha;
        r.symbolic = "alpha";
    } else {
        r.phi_limit = 1;
        r.omega_limit = Rational(2);
        r.symbolic = "2";
    }
    return r;
}

std::vector<Rational> star_power_trace_moments(const RootedGraph& g, std::size_t N, unsigned k_max) {
    if (N == 0) throw std::invalid_argument("N must be >= 1");
    const TransformPair p = cyclic_boolean_power(transform_pair(spectral_data(g)), N);
    const TruncatedSeries s = laurent_at_infinity(p.rc, k_max + 1);
    std::vector<Rational> out(k_max + 1);
    for (unsigned j = 1; j <= k_max; ++j) out[j] = s[j + 1];
    return out;
}

CLTLimitReport clt_report(const RootedGraph& g, unsigned k, const std::vector<std::size_t>& Ns) {
    const double deg = static_cast<double>(root_degree(g));
    const Rational alpha = star_power_trace_moments(g, 1, 2)[2] / Rational(static_cast<long>(deg));
    const CLTLimits lim = cb_clt_limits(k, alpha);
    CLTLimitReport r;
    r.k = k;
    r.phi_limit = lim.phi_limit;
    r.omega_limit = lim.omega_limit.to_double();
    for (std::size_t N : Ns) {
        const Rational tr = star_power_trace_moments(g, N, k)[k];
        const double scale = std::pow(deg * static_cast<double>(N), -0.5 * k);
        r.finite_N_values.emplace_back(N, tr.to_double() * scale);
    }
    return r;
}

std::vector<SpectralGapRow> spectral_gap_report(const RootedGraph& g, const std::vector<std::size_t>& Ns) {
    const double deg = static_cast<double>(root_degree(g));
    const TransformPair base = transform_pair(spectral_data(g));
    const std::size_t n = g.graph.n();
    std::vector<SpectralGapRow> rows;
    for (std::size_t N : Ns) {
        if (N == 0) throw std::invalid_argument("N must be >= 1");
        const TransformPair p = cyclic_boolean_power(base, N);
        const SpectrumReport s = extract_spectrum(p.rc, N * (n - 1) + 1);
        const double scale = 1.0 / std::sqrt(deg * static_cast<double>(N));
        SpectralGapRow row;
        row.N = N;
        row.lambda = s.entries.back().value * scale;
        row.lambda_multiplicity = s.entries.back().multiplicity;
        row.mu = s.entries.front().value * scale;
        row.mu_multiplicity = s.entries.front().multiplicity;
        for (std::size_t i = 1; i + 1 < s.entries.size(); ++i)
            row.bulk_max = std::max(row.bulk_max, std::abs(s.entries[i].value) * scale);
        rows.push_back(row);
    }
    return rows;
}

std::vector<SpectralGapRow> spectral_gap_report(const RootedGraph& g, std::size_t N_max) {
    std::vector<std::size_t> Ns(N_max);
    for (std::size_t i = 0; i < N_max; ++i) Ns[i] = i + 1;
    return spectral_gap_report(g, Ns);
}

BigInt alpha_k(unsigned d, unsigned N, unsigned k) {
    if (d < 2) throw std::invalid_argument("d must be >= 2");
    if (k == 0) throw std::invalid_argument("k must be >= 1");
    // a[j][M] = alpha_j(d, M) with alpha_0(d, M) = d^M
    std::vector<BigInt> prev(N + 1), cur(N + 1);
    BigInt p = 1;
    for (unsigned M = 0; M <= N; ++M, p *= d) prev[M] = p;
    for (unsigned j = 1; j <= k; ++j) {
        cur[0] = 0;
        for (unsigned M = 1; M <= N; ++M) cur[M] = cur[M - 1] + prev[M - 1];
        prev.swap(cur);
    }
    return prev[N];
}

FactorMoments factor_moments(const RatMatrix& a, unsigned max_power) {
    FactorMoments m;
    m.phi.assign(max_power + 1, Rational(0));
    m.omega.assign(max_power + 1, Rational(0));
    RatMatrix p = RatMatrix::identity(a.n());
    m.phi[0] = Rational(1);
    m.omega[0] = Rational(static_cast<long>(a.n()));
    for (unsigned j = 1; j <= max_power; ++j) {
        p = p * a;
        m.phi[j] = p(0, 0);
        m.omega[j] = p.trace();
    }
    return m;
}

Rational omega_of_ordered_partition(const OrderedSetPartition& pi, const FactorMoments& m) {
    std::vector<int> alive(static_cast<std::size_t>(pi.n()));
    for (int i = 0; i < pi.n(); ++i) alive[static_cast<std::size_t>(i)] = i + 1;
    Rational value(1);
    const auto& blocks = pi.blocks();
    for (std::size_t b = blocks.size(); b-- > 0;) {
        const Block& block = blocks[b];
        if (block.size() == alive.size()) return value * m.omega.at(block.size());
        Block positions;
        for (int v : block)
            positions.push_back(
                static_cast<int>(std::lower_bound(alive.begin(), alive.end(), v) - alive.begin()) + 1);
        for (const auto& arc : maximal_arcs(positions, static_cast<int>(alive.size())))
            value *= m.phi.at(arc.size());
        std::vector<int> rest;
        std::set_difference(alive.begin(), alive.end(), block.begin(), block.end(), std::back_inserter(rest));
        alive.swap(rest);
    }
    throw std::logic_error("ordered partition has no blocks");
}

Rational finite_N_comb_moment(unsigned d, unsigned N, unsigned k, const FactorMoments& m) {
    check_factor(d, k, m);
    if (k > kMaxCombMomentK) throw std::invalid_argument("k too large");
    if (N == 0) return Rational(0);
    const CombSeries cs(k, m);
    std::vector<Rational> kn = cs.ka;
    Rational dp(1);
    for (unsigned i = 2; i <= N; ++i) {
        dp *= Rational(static_cast<long>(d));
        std::vector<Rational> next(k + 1);
        for (unsigned n = 1; n <= k; ++n) next[n] = dp * cs.ka[n] + cs.composed(kn, n, n + 1);
        kn.swap(next);
    }
    return -Rational(static_cast<long>(k)) * kn[k];
}

Rational finite_N_comb_moment_by_partitions(unsigned d, unsigned N, unsigned k, const FactorMoments& m) {
    check_factor(d, k, m);
    if (k > kMaxCombPartitionK) throw std::invalid_argument("k too large for partition enumeration");
    std::vector<Rational> alpha(k + 1);
    for (unsigned p = 1; p <= k; ++p) alpha[p] = Rational(alpha_k(d, N, p));
    Rational s;
    for (const auto& pi : enumerate_ordered_partitions(static_cast<int>(k))) {
        const Rational& a = alpha[pi.blocks().size()];
        if (!a.is_zero()) s += a * omega_of_ordered_partition(pi, m);
    }
    return s;
}

Rational comb_limit_moment(unsigned d, unsigned k, const FactorMoments& m) {
    check_factor(d, k, m);
    if (k > kMaxCombMomentK) throw std::invalid_argument("k too large");
    const CombSeries cs(k, m);
    // L = (K_a + L o G_a) / d, solved degree by degree
    std::vector<Rational> l(k + 1);
    const Rational dm1(static_cast<long>(d) - 1);
    for (unsigned n = 1; n <= k; ++n) l[n] = (cs.ka[n] + cs.composed(l, n, n)) / dm1;
    return -Rational(static_cast<long>(k)) * l[k];
}

Rational comb_limit_moment_by_partitions(unsigned d, unsigned k, const FactorMoments& m) {
    check_factor(d, k, m);
    if (k > kMaxCombPartitionK) throw std::invalid_argument("k too large for partition enumeration");
    const Rational inv(Rational(1) / Rational(static_cast<long>(d) - 1));
    std::vector<Rational> w(k + 1);
    for (unsigned p = 1; p <= k; ++p) w[p] = pow_rational(inv, p);
    Rational s;
    for (const auto& pi : enumerate_ordered_partitions(static_cast<int>(k)))
        s += w[pi.blocks().size()] * omega_of_ordered_partition(pi, m);
    return s;
}

BigInt delta_nm(unsigned n, unsigned m) {
    if (m < 1 || m > n) throw std::invalid_argument("delta needs 1 <= m <= n");
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n - m, m);
    c *= 2 * n;
    BigInt q, r;
    const BigInt den = 2 * n - m;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("delta is not an integer");
    return q;
}

BetaTable beta_table(unsigned n_max) {
    if (n_max > kMaxBetaN) throw std::invalid_argument("n_max too large");
    BetaTable t;
    std::vector<std::vector<BigInt>> delta(n_max + 1);
    for (unsigned n = 1; n <= n_max; ++n) {
        delta[n].resize(n + 1);
        for (unsigned m = 1; m <= n; ++m) delta[n][m] = delta_nm(n, m);
    }
    t.beta.assign(n_max + 1, BigInt(0));
    t.beta[0] = 1;
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned l = 0; l < n; ++l) t.beta[n] += delta[n][n - l] * t.beta[l];

    t.gamma.assign(n_max + 1, {});
    for (unsigned n = 1; n <= n_max; ++n) {
        t.gamma[n].assign(n + 1, BigInt(0));
        t.gamma[n][1] = 2;
        for (unsigned k = 2; k <= n; ++k)
            for (unsigned l = k - 1; l < n; ++l) t.gamma[n][k] += delta[n][n - l] * t.gamma[l][k - 1];
        BigInt sum = 0;
        for (unsigned k = 1; k <= n; ++k) sum += t.gamma[n][k];
        if (sum != t.beta[n]) t.routes_agree = false;
    }
    return t;
}

CarlemanReport carleman_check(unsigned n_max) {
    const BetaTable t = beta_table(n_max);
    CarlemanReport r;
    double partial = 0;
    for (unsigned n = 1; n <= n_max; ++n) {
        BigInt bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), 11UL * n, 2UL * n);
        if (t.beta[n] > bound && r.ok) {
            r.ok = false;
            r.first_violation = n;
        }
        long exp = 0;
        const double mant = mpz_get_d_2exp(&exp, t.beta[n].get_mpz_t());
        const double log_beta = std::log(mant) + static_cast<double>(exp) * std::log(2.0);
        partial += std::exp(-log_beta / (2.0 * n));
        r.partial_sums.push_back(partial);
    }
    return r;
}

std::string to_string(IDCase c) {
    switch (c) {
        case IDCase::zero: return "zero";
        case IDCase::one_nonzero: return "one_nonzero";
        case IDCase::two_nonzero: return "two_nonzero";
        case IDCase::none: return "none";
    }
    return "none";
}

IDVerdict cb_id_classify(const SpectrumReport& spectrum, const std::vector<double>& weights) {
    constexpr double kTol = 1e-9;
    if (weights.size() != spectrum.entries.size()) throw std::invalid_argument("inconsistent weights");
    double total = 0;
    for (double w : weights) {
        if (!(w >= -kTol)) throw std::invalid_argument("inconsistent weights");
        total += w;
    }
    if (std::abs(total - 1) > kTol) throw std::invalid_argument("inconsistent weights");

    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < spectrum.entries.size(); ++i) {
        const auto& e = spectrum.entries[i];
        const bool zero = e.exact ? e.exact->is_zero() : std::abs(e.value) <= kTol;
        if (!zero) nonzero.push_back(i);
    }

    IDVerdict v;
    if (nonzero.empty()) {
        v.divisible = true;
        v.id_case = IDCase::zero;
        v.reason = "only zero eigenvalues";
        return v;
    }
    if (nonzero.size() == 1) {
        const auto& e = spectrum.entries[nonzero[0]];
        v.alpha = e.value;
        if (e.multiplicity == 1) {
            v.divisible = true;
            v.id_case = IDCase::one_nonzero;
            v.reason = "a single simple non-zero eigenvalue";
        } else {
            v.reason = "the non-zero eigenvalue has multiplicity " + std::to_string(e.multiplicity);
        }
        return v;
    }
    if (nonzero.size() > 2) {
        v.reason = std::to_string(nonzero.size()) + " distinct non-zero eigenvalues";
        return v;
    }
    const auto& ea = spectrum.entries[nonzero[0]];
    const auto& eb = spectrum.entries[nonzero[1]];
    const double a = ea.value, b = eb.value;
    v.alpha = a;
    v.beta = b;
    if (ea.multiplicity != 1 || eb.multiplicity != 1) {
        v.reason = "non-zero eigenvalues must be simple";
        return v;
    }
    if (!(a * b < 0)) {
        v.reason = "non-zero eigenvalues have the same sign";
        return v;
    }
    const double wa = -a / (b - a), wb = b / (b - a);
    if (std::abs(weights[nonzero[0]] - wa) > kTol || std::abs(weights[nonzero[1]] - wb) > kTol) {
        v.reason = "state distribution is not " + std::to_string(wa) + " d_alpha + " + std::to_string(wb) +
                   " d_beta";
        return v;
    }
    v.divisible = true;
    v.id_case = IDCase::two_nonzero;
    v.reason = "two simple non-zero eigenvalues of opposite sign with the matching state";
    return v;
}

NthRoot cb_id_nth_root(const Rational& alpha, const Rational& beta, unsigned n) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    if (!(alpha * beta < Rational(0))) throw std::invalid_argument("alpha * beta must be negative");
    const Rational nn(static_cast<long>(n));
    NthRoot r;
    r.quadratic = Polynomial({alpha * beta / nn, -(alpha + beta) / nn, Rational(1)});
    const double p = ((alpha + beta) / nn).to_double();
    const double q = (alpha * beta / nn).to_double();
    const double s = std::sqrt(p * p - 4 * q);
    r.alpha_n = (p - s) / 2;
    r.beta_n = (p + s) / 2;
    r.weight_alpha = -r.alpha_n / (r.beta_n - r.alpha_n);
    r.weight_beta = r.beta_n / (r.beta_n - r.alpha_n);
    const RationalFunction z = RationalFunction::z();
    r.transforms.g = z / RationalFunction(r.quadratic);
    r.transforms.rc = RationalFunction(r.quadratic.derivative(), r.quadratic) - RationalFunction::constant(Rational(2)) / z;
    return r;
}

}  // namespace cyclic_spectra
