/**
 * @file config.hpp
 * @brief System parameters, config-file loading and presets.
 */
#pragma once

#include <cstdint>
#include <string>

namespace cellfree {

enum class PilotPolicy { RoundRobin, Random };

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

/**
 * All scalar parameters of a simulation. Powers are stored in linear units;
 * dB enters only through the config file / CLI (keys with a _db suffix) and
 * leaves only in reports.
 */
struct SystemConfig {
    int num_aps = 50;           ///< M
    int antennas_per_ap = 8;    ///< N
    int num_ues = 10;           ///< K
    double area_side_m = 500.0; ///< D, square side
    double alpha = 0.0;         ///< channel inversion rate
    int pilot_len = 5;          ///< tau_p, samples
    int coherence_len = 200;    ///< tau_c, samples
    double dl_fraction = 0.5;   ///< xi, share of data samples used for downlink
    double rho_d = 3.16227766016838e11; ///< max downlink SNR, linear (115 dB)
    double rho_p = 1.58489319246111e11; ///< pilot SNR, linear (112 dB)
    double shadow_std_db = 4.0; ///< sigma_sh
    int cluster_size = 5;       ///< L = |M_k|
    std::uint64_t seed = 1;
    long mc_draws = 1000000;    ///< sample count for the validation oracle
    PilotPolicy pilot_policy = PilotPolicy::RoundRobin;

    /// Throws std::invalid_argument with a description of the first violated
    /// constraint. alpha must stay below N-1 so all interference coefficients
    /// are nonnegative.
    void validate() const;

    /// FNV-1a hash of the canonical key=value serialization; recorded in CSV
    /// output so results can be traced back to their exact configuration.
    std::uint64_t hash() const;

    std::string serialize() const;
};

/// Named parameter sets. "desk" is the default; "paper-fig1"/"paper-fig2"
/// match the large-network setups used for the reference experiments.
SystemConfig preset_config(const std::string& name);

/// Parse a key=value config file ('#' starts a comment). Unknown keys are an
/// error. Keys: num_aps, antennas_per_ap, num_ues, area_side_m, alpha,
/// pilot_len, coherence_len, dl_fraction, rho_d_db (or rho_d), rho_p_db (or
/// rho_p), shadow_std_db, cluster_size, seed, mc_draws, pilot_policy.
SystemConfig load_config_file(const std::string& path, SystemConfig base = {});

}  // namespace cellfree
