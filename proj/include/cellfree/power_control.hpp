/**
 * @file power_control.hpp
 * @brief Downlink power-control strategies.
 *
 * Closed-form rules:
 *   MR    eta_mk = Gamma(N)/Gamma(N-alpha) * gamma_mk^(alpha+1) / sum_{j in K_m} gamma_mj
 *   MR-U  eta_mk = eta_m = Gamma(N)/Gamma(N-alpha) / sum_{j in K_m} gamma_mj^(-alpha)
 * Both saturate every active AP's power constraint exactly.
 *
 * Max-min fairness (MMF) maximizes min_k SINR_k by bisection on the target nu;
 * each probe is a second-order cone feasibility problem in the amplitude
 * variables u_mk = sqrt(rho_d eta_mk) (plus epigraph slacks for the nested
 * interference norms). MMF-U ties eta_mk = eta_m per AP, shrinking the
 * variable count to the number of active APs; its per-AP constraint becomes
 * the scalar cap eta_m <= Gamma(N)/Gamma(N-alpha) / sum_{j in K_m} gamma_mj^(-alpha).
 */
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cellfree/performance.hpp"
#include "cellfree/socp.hpp"

namespace cellfree {

/// Per-instance data for the MMF cone programs, precomputed once per snapshot.
struct MmfProblemData {
    const ClusterMap* clusters = nullptr;
    std::vector<Eigen::MatrixXd> a;       ///< a[j]: |M_j| x K coherent coefficients
    std::vector<Eigen::MatrixXd> b_sqrt;  ///< sqrt of b[j], same layout
    std::vector<Eigen::VectorXd> gamma_hat; ///< per AP m: gamma_mk^(-alpha/2), k in K_m
    Eigen::VectorXd uniform_cap;          ///< per AP m: bound on eta_m (MMF-U)
    double cone_budget = 0.0;             ///< sqrt(rho_d * Gamma(N)/Gamma(N-alpha))
    double rho_d = 0.0;
    /// SinrTerms retained so feasible points can be audited through the
    /// closed-form SINR path.
    SinrTerms terms;
};

MmfProblemData make_mmf_data(const TrainingStats& stats, const SinrTerms& terms,
                             const ClusterMap& clusters, int num_antennas, double alpha,
                             double rho_d);

struct BisectionSettings {
    double nu_low = 0.0;
    double nu_high = 0.0;        ///< <= 0 means derive the bracket from the data
    double tol_rel = 1e-3;       ///< relative bracket width at termination
    int max_iters = 64;
    double feasibility_tol = 1e-6; ///< slack allowed in the feasibility audit
};

enum class MmfStatus { Converged, MaxItersReached, Indeterminate };
enum class Feasibility { Feasible, Infeasible, Indeterminate };

struct FeasibilityResult {
    Feasibility status = Feasibility::Indeterminate;
    /// Amplitudes sqrt(rho_d eta_mk), concatenated per UE in cluster order;
    /// valid when status == Feasible.
    Eigen::VectorXd u;
    double margin = 0.0;  ///< optimized cone margin (scaled units)
};

struct MmfResult {
    PowerAllocation alloc;
    double nu = 0.0;       ///< last SINR target proven feasible
    MmfStatus status = MmfStatus::Indeterminate;
    int bisection_iters = 0;
};

PowerAllocation mr_allocation(const TrainingStats& stats, const ClusterMap& clusters,
                              int num_antennas, double alpha);

PowerAllocation mr_uniform_allocation(const TrainingStats& stats, const ClusterMap& clusters,
                                      int num_antennas, double alpha);

/**
 * Decide whether SINR target nu is attainable. Internally solves a max-margin
 * cone program; a candidate point is accepted only after it passes the
 * independent closed-form audit: every UE reaches nu * (1 - feasibility_tol)
 * after projection onto the power budget.
 */
FeasibilityResult mmf_feasibility(double nu, const MmfProblemData& data,
                                  const BisectionSettings& settings, ConeSolver& solver,
                                  bool uniform = false);

MmfResult mmf_allocation(const MmfProblemData& data, const BisectionSettings& settings,
                         ConeSolver& solver);

MmfResult mmf_uniform_allocation(const MmfProblemData& data, const BisectionSettings& settings,
                                 ConeSolver& solver);

/// Upper bracket for the bisection: best single-UE SINR with every serving AP
/// spending its full budget on that UE alone.
double single_ue_full_power_bound(const MmfProblemData& data);

/// eta matrix from stacked amplitudes (inverse of the u_mk definition).
Eigen::MatrixXd eta_from_amplitudes(const Eigen::VectorXd& u, const ClusterMap& clusters,
                                    double rho_d);

}  // namespace cellfree
