#pragma once

// Limit theorems for iterated star and comb products and the cyclic-Boolean
// infinite-divisibility classifier.

#include <optional>
#include <string>
#include <vector>

#include "cyclic_spectra/convolutions.hpp"
#include "cyclic_spectra/graph.hpp"
#include "cyclic_spectra/models_oracle.hpp"
#include "cyclic_spectra/partitions.hpp"

namespace cyclic_spectra {

// ---- cyclic-Boolean CLT ----------------------------------------------------

struct CLTLimits {
    int phi_limit = 0;
    /// 0 for odd k, alpha for k = 2, 2 for even k >= 4.
    Rational omega_limit;
    std::string symbolic;  // "0", "alpha" or "2"
};

/// alpha = omega(a^2) of the normalized summand.
CLTLimits cb_clt_limits(unsigned k, const Rational& alpha = Rational(2));

struct CLTLimitReport {
    unsigned k = 0;
    int phi_limit = 0;
    double omega_limit = 0;
    std::vector<std::pair<std::size_t, double>> finite_N_values;  // (N, omega(s_N^k))
};

/// Tr(A_N^j) for 1 <= j <= k_max, where A_N is the N-fold star power of g.
std::vector<Rational> star_power_trace_moments(const RootedGraph& g, std::size_t N, unsigned k_max);
/// s_N = A_N / sqrt(deg(root) N).
CLTLimitReport clt_report(const RootedGraph& g, unsigned k, const std::vector<std::size_t>& Ns);

struct SpectralGapRow {
    std::size_t N = 0;
    double lambda = 0;  // largest eigenvalue of (deg N)^{-1/2} A_N
    double mu = 0;      // smallest
    std::size_t lambda_multiplicity = 0;
    std::size_t mu_multiplicity = 0;
    double bulk_max = 0;  // max |eigenvalue| over the rest
};

std::vector<SpectralGapRow> spectral_gap_report(const RootedGraph& g, const std::vector<std::size_t>& Ns);
std::vector<SpectralGapRow> spectral_gap_report(const RootedGraph& g, std::size_t N_max);

// ---- cyclic-monotone limits (iterated comb products) ------------------------

/// alpha_k(d, N) = sum over j_1 < ... < j_k in [N] of d^{j_1 - 1}.
BigInt alpha_k(unsigned d, unsigned N, unsigned k);

/// psi / Tr moments of a single factor: phi[j] = psi(a^j), omega[j] = Tr(a^j).
using FactorMoments = MomentTable;
FactorMoments factor_moments(const RatMatrix& a, unsigned max_power);

/// omega(pi): peel the last block, multiply psi over its maximal arcs, recurse.
Rational omega_of_ordered_partition(const OrderedSetPartition& pi, const FactorMoments& m);

inline constexpr unsigned kMaxCombMomentK = 40;
inline constexpr unsigned kMaxCombPartitionK = 8;

/// omega(b_N^k) for the N-fold cyclic-monotone i.i.d. sum, by the K-transform recursion
/// K_N = d^{N-1} K_a + K_{N-1} o G_a.
Rational finite_N_comb_moment(unsigned d, unsigned N, unsigned k, const FactorMoments& m);
/// Same value as a sum over ordered set partitions weighted by alpha_{|pi|}(d, N).
Rational finite_N_comb_moment_by_partitions(unsigned d, unsigned N, unsigned k, const FactorMoments& m);
/// lim d^{-N} omega(b_N^k), from the fixed point of the recursion above.
Rational comb_limit_moment(unsigned d, unsigned k, const FactorMoments& m);
/// sum over OP(k) of omega(pi) / (d - 1)^{|pi|}.
Rational comb_limit_moment_by_partitions(unsigned d, unsigned k, const FactorMoments& m);

struct BetaTable {
    std::vector<BigInt> beta;                // beta[0..n]
    std::vector<std::vector<BigInt>> gamma;  // gamma[n][k], 1 <= k <= n
    bool routes_agree = true;
};

inline constexpr unsigned kMaxBetaN = 200;

/// delta_{n,m} = C(2n - m, m) 2n / (2n - m)
BigInt delta_nm(unsigned n, unsigned m);
BetaTable beta_table(unsigned n_max);

struct CarlemanReport {
    bool ok = true;
    std::optional<unsigned> first_violation;
    std::vector<double> partial_sums;  // sum_{j<=n} beta_j^{-1/(2j)}
};

CarlemanReport carleman_check(unsigned n_max);

// ---- cyclic-Boolean infinite divisibility -----------------------------------

enum class IDCase { zero, one_nonzero, two_nonzero, none };

struct IDVerdict {
    bool divisible = false;
    IDCase id_case = IDCase::none;
    std::optional<double> alpha, beta;
    std::string reason;
};

std::string to_string(IDCase c);

/// weights[i] is the state mass at spectrum.entries[i].
IDVerdict cb_id_classify(const SpectrumReport& spectrum, const std::vector<double>& weights);

struct NthRoot {
    Polynomial quadratic;  // x^2 - (alpha + beta)/n x + alpha beta / n
    double alpha_n = 0, beta_n = 0;
    double weight_alpha = 0, weight_beta = 0;
    TransformPair transforms;  // G = z/q, rc = q'/q - 2/z
};

NthRoot cb_id_nth_root(const Rational& alpha, const Rational& beta, unsigned n);

}  // namespace cyclic_spectra
