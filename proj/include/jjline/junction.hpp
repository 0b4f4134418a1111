#pragma once

// Isolated-junction solvers: transmon spectrum in the charge basis at fixed
// quasicharge, and the fluxonium-like spectrum (quadratic + charging +
// cosine) in the oscillator basis of the quadratic part.

#include <Eigen/Dense>
#include <stdexcept>

namespace jjline {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct CutoffSaturation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TransmonEigs {
    double quasicharge = 0.0;
    int charge_cutoff = 0;     // N_max actually used
    VectorXd energies;         // ascending, lowest n_levels
    MatrixXd vectors;          // amplitudes over N in [-N_max, N_max]
};

struct FluxoniumEigs {
    double e_l = 0.0;
    double flux_bias = 0.0;
    int oscillator_cutoff = 0;  // basis size actually used
    VectorXd energies;
    MatrixXd vectors;           // amplitudes over oscillator basis
};

/// Lowest n_levels of 4 E_C (N - nu)^2 - (E_J/2) hopping, charge basis.
/// The cutoff grows automatically until boundary amplitudes < 1e-10.
TransmonEigs transmon_eigs(double e_c, double e_j, double nu, int n_max,
                           int n_levels, int n_max_limit = 4096);

/// Lowest n_levels of (E_L/2) phi^2 + 4 E_C N^2 - E_J cos(phi + 2 pi phi_bias)
/// in the harmonic-oscillator basis; cutoff doubled until the energies move
/// by less than `rel_tol` relative, starting from `cutoff`.
FluxoniumEigs fluxonium_eigs(double e_l, double e_c, double e_j, double phi_bias,
                             int cutoff, int n_levels, double rel_tol = 1e-9,
                             int cutoff_limit = 4096);

/// Matrix of cos(phi + 2 pi phi_bias) in the oscillator basis with zero-point
/// spread phi_zpf (real symmetric).
MatrixXd oscillator_cosine(int dim, double phi_zpf, double phi_bias);

/// Matrix of phi in the same basis.
MatrixXd oscillator_phase(int dim, double phi_zpf);

enum class PhaseSlipMethod { HalfBandwidth, CosineFit };

/// Phase-slip amplitude U_0 of the one-band approximation: half the lowest
/// transmon band width (default), or a cos(2 pi nu) fit over the full zone.
double extract_phase_slip_amplitude(double e_c, double e_j,
                                    PhaseSlipMethod method = PhaseSlipMethod::HalfBandwidth);

}  // namespace jjline
