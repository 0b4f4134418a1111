#pragma once

// Truncated photonic Fock space: all occupation vectors with
// sum_k n_k omega_k < E_cut, downward closed, deterministically ordered.

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace jjline {

struct BasisOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PhotonConfigSet {
    Eigen::VectorXd frequencies;
    double energy_cutoff = 0.0;
    Eigen::ArrayXXi occupations;   // n_configs x n_modes
    Eigen::VectorXd energies;      // sum_k n_k omega_k per config
    std::vector<int> mode_max;     // max occupation per mode over the set

    int size() const { return static_cast<int>(occupations.rows()); }
    int modes() const { return static_cast<int>(occupations.cols()); }
};

PhotonConfigSet build_photon_configs(const Eigen::VectorXd& frequencies,
                                     double e_cut, int max_configs = 2'000'000);

}  // namespace jjline
