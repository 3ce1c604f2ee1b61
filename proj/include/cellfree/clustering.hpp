/**
 * @file clustering.hpp
 * @brief User-centric AP-UE association: each UE is served by its L strongest APs.
 */
#pragma once

#include <Eigen/Dense>
#include <vector>

namespace cellfree {

struct ClusterMap {
    /// serving_aps[k] lists the L APs serving UE k, strongest beta first
    /// (ties broken by lowest AP index).
    std::vector<std::vector<int>> serving_aps;
    /// served_ues[m] lists the UEs served by AP m, ascending (may be empty).
    std::vector<std::vector<int>> served_ues;

    int num_aps() const { return static_cast<int>(served_ues.size()); }
    int num_ues() const { return static_cast<int>(serving_aps.size()); }

    /// Position of AP m inside serving_aps[k], or -1 if m does not serve k.
    int slot_of(int m, int k) const;
};

/// Top-L selection per beta column. Throws std::invalid_argument unless
/// 1 <= L <= M.
ClusterMap build_clusters(const Eigen::MatrixXd& beta, int cluster_size);

}  // namespace cellfree
