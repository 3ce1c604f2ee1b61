/**
 * @file performance.hpp
 * @brief Closed-form SINR / SE for conjugate beamforming with fractional-exponent
 *        normalization, and the per-AP transmit-power audit.
 *
 * The precoder w = conj(g_hat) / ||g_hat||^(alpha+1) admits closed-form first
 * and second moments in terms of Gamma-function ratios. Everything here is a
 * deterministic function of (beta, gamma, pilot structure, clusters, eta); no
 * small-scale randomness enters this module.
 *
 * Coefficients, stored for serving pairs m in M_j only:
 *   a_mkj = Gamma(N-(alpha-1)/2)/Gamma(N) * gamma_mk^(1/2)/gamma_mj^(alpha/2) * copilot(k,j)
 *   b_mkj = Gamma(N-alpha)/Gamma(N) * (N-alpha-1) * gamma_mk/gamma_mj^alpha * copilot(k,j)
 *           - a_mkj^2 + Gamma(N-alpha)/Gamma(N) * beta_mk/gamma_mj^alpha
 * Requires alpha < N-1 so the (N-alpha-1) factor is nonnegative and every
 * b_mkj stays positive.
 */
#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cellfree/clustering.hpp"
#include "cellfree/training.hpp"

namespace cellfree {

enum class Strategy { MR, MRUniform, MMF, MMFUniform, Custom };

std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

/// Gamma(N - delta) / Gamma(N) via log-Gamma differencing (stable for large N).
/// Throws std::domain_error when N - delta <= 0.
double gamma_ratio(int num_antennas, double delta);

/**
 * Coherent (a) and incoherent (b) SINR coefficients. a[j] and b[j] are
 * |M_j| x K matrices: row i corresponds to AP serving_aps[j][i], column k to
 * the victim UE.
 */
struct SinrTerms {
    std::vector<Eigen::MatrixXd> a;
    std::vector<Eigen::MatrixXd> b;
};

/**
 * Power-control coefficients eta_mk >= 0, stored densely (M x K, zero outside
 * the cluster map). Feasible allocations satisfy, for every AP m,
 *   Gamma(N-alpha)/Gamma(N) * sum_{k in K_m} eta_mk / gamma_mk^alpha <= 1.
 */
struct PowerAllocation {
    Eigen::MatrixXd eta;
    Strategy strategy = Strategy::Custom;
};

/// Throws std::domain_error unless alpha < N - 1.
SinrTerms compute_sinr_terms(const TrainingStats& stats, const Eigen::MatrixXd& beta,
                             const PilotBook& pilots, const ClusterMap& clusters,
                             int num_antennas, double alpha);

/// Effective SINR of every UE:
///   (sum_{m in M_k} sqrt(rho_mk) a_mkk)^2 /
///   (sum_j sum_{m in M_j} rho_mj b_mkj + sum_{j != k} (sum_{m in M_j} sqrt(rho_mj) a_mkj)^2 + 1)
/// with rho_mk = rho_d * eta_mk.
Eigen::VectorXd closed_form_sinr_all(const SinrTerms& terms, const PowerAllocation& alloc,
                                     double rho_d, const ClusterMap& clusters);

double closed_form_sinr(int ue, const SinrTerms& terms, const PowerAllocation& alloc,
                        double rho_d, const ClusterMap& clusters);

/// SE = xi * (1 - tau_p/tau_c) * log2(1 + sinr), bits/s/Hz.
double spectral_efficiency(double sinr, double dl_fraction, int tau_p, int tau_c);

/// E[||x_m||^2] / rho_d for AP m; in [0, 1] for feasible allocations, 0 for
/// APs with nothing to send.
double normalized_transmit_power(int ap, const PowerAllocation& alloc,
                                 const TrainingStats& stats, const ClusterMap& clusters,
                                 int num_antennas, double alpha);

Eigen::VectorXd normalized_transmit_power_all(const PowerAllocation& alloc,
                                              const TrainingStats& stats,
                                              const ClusterMap& clusters, int num_antennas,
                                              double alpha);

}  // namespace cellfree
