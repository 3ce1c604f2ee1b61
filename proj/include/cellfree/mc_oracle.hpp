/**
 * @file mc_oracle.hpp
 * @brief Monte-Carlo validation of every closed-form moment by direct channel
 *        sampling.
 *
 * This module re-implements the estimator and the precoder from their
 * definitions (explicit pilot vectors, explicit observation matrix) and shares
 * no formula code with the closed-form path, so agreement between the two is
 * meaningful. It is intended for desk-scale instances; cost grows as
 * O(draws * M * K^2 * N).
 */
#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cellfree/clustering.hpp"
#include "cellfree/performance.hpp"
#include "cellfree/training.hpp"

namespace cellfree {

/// One realization of channels, estimates and estimation errors.
/// g[m*K + k] etc. are N-vectors.
struct ChannelDraw {
    int num_aps = 0;
    int num_ues = 0;
    std::vector<Eigen::VectorXcd> g;
    std::vector<Eigen::VectorXcd> g_hat;
    std::vector<Eigen::VectorXcd> g_tilde;

    const Eigen::VectorXcd& channel(int m, int k) const { return g[m * num_ues + k]; }
    const Eigen::VectorXcd& estimate(int m, int k) const { return g_hat[m * num_ues + k]; }
    const Eigen::VectorXcd& error(int m, int k) const { return g_tilde[m * num_ues + k]; }
};

struct MomentEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

struct MomentCheck {
    std::string name;
    double closed_form = 0.0;
    double mc_estimate = 0.0;
    double mc_std_error = 0.0;
    long n_draws = 0;
    bool pass = false;  ///< |closed - mc| <= 4 std errors
};

struct MomentCheckReport {
    std::vector<MomentCheck> checks;
    bool all_pass() const;
};

MomentCheck make_moment_check(const std::string& name, double closed_form,
                              const MomentEstimate& est, long n_draws);

/// Full uplink training chain for one coherence block: draw channels, form the
/// pilot observation with fresh noise, run the linear-MMSE estimator. The
/// estimator scaling is recomputed here from explicit orthonormal pilot
/// vectors.
ChannelDraw sample_training(const Eigen::MatrixXd& beta, const PilotBook& pilots, int tau_p,
                            double rho_p, int num_antennas, RandomStream& stream);

/// E[ ||g_hat||^(-2 alpha) ] for g_hat ~ CN(0, gamma I_N), by sampling.
/// Closed form: Gamma(N - alpha) / (gamma^alpha Gamma(N)). Requires alpha < N.
MomentEstimate mc_inverse_norm_moment(int num_antennas, double gamma, double alpha,
                                      long n_draws, std::uint64_t seed, int threads = 0);

/// Empirical desired-signal / beamforming-uncertainty / inter-user
/// interference moments for a full (small) instance under allocation alloc.
struct DsBuUiEstimates {
    Eigen::VectorXd ds;              ///< per UE k, E[sum_m sqrt(rho) g'w] (real part)
    Eigen::VectorXd ds_stderr;
    Eigen::VectorXd bu;              ///< per UE k, Var(sum_m sqrt(rho) g'w)
    Eigen::VectorXd bu_stderr;
    Eigen::MatrixXd ui;              ///< (k, j), E|UI_kj|^2, diagonal unused
    Eigen::MatrixXd ui_stderr;
    long n_draws = 0;
};

DsBuUiEstimates mc_ds_bu_ui(const Eigen::MatrixXd& beta, const PilotBook& pilots,
                            const ClusterMap& clusters, const PowerAllocation& alloc,
                            double rho_d, int tau_p, double rho_p, int num_antennas,
                            double alpha, long n_draws, std::uint64_t seed, int threads = 0);

/// Hardening-bound SINR assembled from the empirical moments:
/// ds_k^2 / (bu_k + sum_{j != k} ui_kj + 1).
Eigen::VectorXd mc_hardening_sinr(const DsBuUiEstimates& est);

/// Closed-form counterparts on the same index layout, for report building.
struct DsBuUiClosedForm {
    Eigen::VectorXd ds;
    Eigen::VectorXd bu;
    Eigen::MatrixXd ui;
};

DsBuUiClosedForm closed_form_ds_bu_ui(const SinrTerms& terms, const PowerAllocation& alloc,
                                      double rho_d, const ClusterMap& clusters);

}  // namespace cellfree
