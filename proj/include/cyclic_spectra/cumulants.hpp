#pragma once

// Univariate and multivariate cyclic-Boolean cumulants.
//   M(z) = sum phi(a^n) z^n,  M^(z) = sum omega(a^n) z^n
//   B = M / (1 + M),  C = M^ - z M B'

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cyclic_spectra/models_oracle.hpp"
#include "cyclic_spectra/partitions.hpp"
#include "cyclic_spectra/truncated_series.hpp"

namespace cyclic_spectra {

/// phi[n] = phi(a^n), omega[n] = omega(a^n) for 1 <= n <= order (index 0 ignored).
struct MomentData {
    std::vector<Rational> phi;
    std::vector<Rational> omega;
    std::size_t order = 0;

    static MomentData from_sequences(const std::vector<Rational>& phi_1_to_k,
                                     const std::vector<Rational>& omega_1_to_k);
    /// phi = <A^n e_root, e_root>, omega = Tr A^n.
    static MomentData from_matrix(const RatMatrix& a, std::size_t root, std::size_t order);
};

/// Entry n holds the n-th cumulant (entry 0 is zero).
std::vector<Rational> boolean_cumulants(const MomentData& m);
std::vector<Rational> cyclic_boolean_cumulants(const MomentData& m);
/// H = sum h_n z^{-n-1}; generated by M^(w) - w M'(w) / (1 + M(w)).
std::vector<Rational> h_coefficients(const MomentData& m);

/// Mixed moments of a_{e_1}^{(i_1)} ... a_{e_n}^{(i_n)}: element ids e_j name elements
/// of one algebra, i_j say which independent copy each letter lives in.
struct MultiMomentOracle {
    std::function<Rational(const std::vector<int>& elements, const std::vector<int>& copies, Functional f)> eval;
};

/// Product functionals on the free product built from phi and omega of single-algebra words.
MultiMomentOracle product_functional_oracle(std::function<Rational(const std::vector<int>&)> base_phi,
                                            std::function<Rational(const std::vector<int>&)> base_omega);
/// Tensor model: copy k acts on factor k via the Boolean embedding; phi is the vacuum
/// state and omega the trace of the full space.
MultiMomentOracle tensor_model_oracle(std::vector<RatMatrix> elements);

Rational partitioned_moment(const MultiMomentOracle& o, const SetPartition& pi, const std::vector<int>& word,
                            Functional f = Functional::omega);

/// Partitions rho <= pi.
std::vector<SetPartition> refinements(const SetPartition& pi);

inline constexpr int kMaxCumulantN = 8;

/// Mobius sum over rho <= pi of omega_rho (or phi_rho for Boolean cumulants).
Rational partition_cumulant(const MultiMomentOracle& o, const SetPartition& pi, const std::vector<int>& word);
Rational boolean_partition_cumulant(const MultiMomentOracle& o, const SetPartition& pi, const std::vector<int>& word);
/// Case analysis: zero off CI(n), Boolean cumulants of the rotated word on CI(n) minus 1-hat,
/// and the moment-cumulant recursion at 1-hat.
Rational case_split_cumulant(const MultiMomentOracle& o, const SetPartition& pi, const std::vector<int>& word);

struct CumulantCheck {
    bool ok = true;
    std::vector<std::string> mismatches;
};

/// omega(a^k) = c_k + sum_{pi in CI(k), pi < 1} b_pi for k <= n, with c supplied separately.
CumulantCheck moment_cumulant_check(const MomentData& m, const std::vector<Rational>& c, std::size_t n);
/// Vanishing off CI(n), CI-restricted moment-cumulant formula, and agreement of the
/// Mobius cumulants with the case analysis, for one word of length n.
CumulantCheck moment_cumulant_check(const MultiMomentOracle& o, const std::vector<int>& word);

/// CSV with columns n,c_n,h_n,b_n.
std::string cumulant_table_csv(const MomentData& m);

}  // namespace cyclic_spectra
