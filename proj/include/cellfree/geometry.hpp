/**
 * @file geometry.hpp
 * @brief Network snapshots: AP/UE placement and large-scale channel gains.
 *
 * A snapshot fixes everything that changes on the large-scale fading time
 * scale: node positions, pathloss and shadowing, combined into the M x K gain
 * matrix beta (linear power ratios). Distances use a wrap-around (torus)
 * metric to avoid boundary artifacts in percentile statistics.
 */
#pragma once

#include <Eigen/Dense>

#include "cellfree/config.hpp"
#include "cellfree/random.hpp"

namespace cellfree {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct Snapshot {
    std::vector<Point2> ap_positions;  ///< size M
    std::vector<Point2> ue_positions;  ///< size K
    Eigen::MatrixXd beta;              ///< M x K, linear gains, all > 0
};

/// Wrap-around distance on the D x D torus.
double torus_distance(const Point2& a, const Point2& b, double side);

/// 3GPP urban-microcell style log-distance pathloss:
/// PL(dB) = -30.5 - 36.7 log10(max(d, 10 m)). The 10 m floor keeps the model
/// finite for co-located nodes.
double pathloss_db(double distance_m);

/// beta = 10^((PL_dB + sigma_sh * q) / 10) with q a standard normal draw.
double large_scale_gain(double pl_db, double q, double sigma_sh_db);

/// Gain matrix for given positions and shadowing draws q (M x K). Separated
/// from generate_snapshot so tests can control geometry and shadowing.
Eigen::MatrixXd compute_beta(const std::vector<Point2>& ap_positions,
                             const std::vector<Point2>& ue_positions,
                             const Eigen::MatrixXd& shadow_q, double sigma_sh_db,
                             double area_side_m);

/// Uniform i.i.d. placement over the square plus i.i.d. shadowing.
/// Deterministic given (config, stream state).
Snapshot generate_snapshot(const SystemConfig& config, RandomStream& stream);

}  // namespace cellfree
