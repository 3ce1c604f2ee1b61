/**
 * @file training.hpp
 * @brief Pilot assignment and linear-MMSE channel estimation statistics.
 *
 * Pilots are drawn from an orthonormal book of size tau_p, so the inner
 * product between two UEs' pilots is exactly 0 or 1. The per-link statistics
 *   c[m][k]     = sqrt(tau_p rho_p) beta_mk / (tau_p rho_p sum_j beta_mj + 1)
 *   gamma[m][k] = sqrt(tau_p rho_p) c[m][k] beta_mk
 * (the contamination sum runs over the UEs sharing k's pilot, including k)
 * fully determine the downlink performance expressions; the estimate vectors
 * themselves are only ever materialized by the Monte-Carlo oracle.
 */
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cellfree/config.hpp"
#include "cellfree/random.hpp"

namespace cellfree {

struct PilotBook {
    std::vector<int> assignment;                ///< size K, pilot index in [0, tau_p)
    std::vector<std::vector<int>> copilot_sets; ///< per pilot index, UEs using it
    int tau_p = 0;

    bool same_pilot(int k, int j) const;
};

struct TrainingStats {
    Eigen::MatrixXd c;     ///< M x K, MMSE scaling (dimensionless)
    Eigen::MatrixXd gamma; ///< M x K, per-antenna estimate variance, 0 < gamma <= beta
};

/// Round-robin assigns pilot k mod tau_p; Random draws uniformly. With
/// K <= tau_p both policies give every UE a private pilot.
PilotBook assign_pilots(int num_ues, int tau_p, PilotPolicy policy,
                        RandomStream* stream = nullptr);

/// 1 if UEs k and j share a pilot (k == j included), else 0.
/// Throws std::out_of_range for invalid indices.
int copilot_indicator(const PilotBook& pilots, int k, int j);

TrainingStats estimation_stats(const Eigen::MatrixXd& beta, const PilotBook& pilots,
                               int tau_p, double rho_p);

}  // namespace cellfree
