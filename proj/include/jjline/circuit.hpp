#pragma once

// Circuit construction for a Josephson junction coupled to a finite LC
// transmission line: capacitance/inductance matrices, normal modes of the
// bare line for both terminations, and the Bogoliubov rotation producing
// the charge-gauge bath of the open-ended circuit.
//
// Units throughout: hbar = 1, E_C = 1 (the junction charging energy),
// charge in units of 2e. The only impedance that enters is the
// dimensionless ratio z = Z/R_q.

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace jjline {

using Eigen::MatrixXd;
using Eigen::VectorXd;

enum class Boundary { OpenEnd, ShortEnd };

inline const char* to_string(Boundary b) {
    return b == Boundary::OpenEnd ? "open" : "short";
}

/// Full physical description of one circuit instance.
struct CircuitSpec {
    double e_j = 1.0;        // Josephson energy, units of E_C
    double e_c = 1.0;        // charging energy; the global unit (must be 1)
    double z_ratio = 1.0;    // Z / R_q
    double omega_c = 4.0;    // line cutoff 2/sqrt(LC), units E_C/hbar
    int n_modes = 8;         // number of LC unit cells
    Boundary boundary = Boundary::OpenEnd;
    double bias = 0.0;       // gate charge nu (open) or external flux phi (short)

    /// Low-energy mode spacing pi*omega_c/(2*n_modes); always derived.
    double spacing() const { return M_PI * omega_c / (2.0 * n_modes); }

    /// Inductive scale Phi0^2/L = hbar*R_q*omega_c/(4*pi*Z), reduced flux
    /// quantum Phi0 = hbar/2e.
    double inductive_energy() const { return omega_c / (4.0 * M_PI * z_ratio); }

    void validate() const;
};

/// Given a target mode spacing, the nearest integer cell count. Reports the
/// relative rounding mismatch through `rel_err` if non-null.
int n_modes_from_spacing(double omega_c, double spacing, double* rel_err = nullptr);

/// Normal modes of the bare line: frequencies Omega_i (ascending) and
/// couplings f_i with the sign convention P_{1i} >= 0.
struct BathModes {
    VectorXd frequencies;    // Omega_i, units E_C/hbar
    VectorXd couplings;      // f_i, units E_C
    Boundary boundary = Boundary::OpenEnd;
    double inductive_scale = 0.0;   // Phi0^2/(2L)

    /// sum_i f_i^2 / Omega_i; equals inductive_scale for OpenEnd (sum rule).
    double coupling_weight() const {
        return (couplings.array().square() / frequencies.array()).sum();
    }
};

/// Bogoliubov-rotated bath of the open-ended circuit (main-text charge gauge).
struct ChargeGaugeBath {
    VectorXd frequencies;    // omega_k, ascending
    VectorXd couplings;      // g_k >= 0
    double e_c_tilde = 1.0;              // renormalized charging energy
    double josephson_suppression = 1.0;  // exp(-1/2 sum g^2/omega^2)
};

struct EigensolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The (N_m+1)x(N_m+1) capacitance and inductance matrices of the circuit
/// Lagrangian. Row/column 0 is the junction node. Entries carry the common
/// prefactor 2 E_C/e^2 stripped off: C = diag(1, C/C_J, ...) and
/// Gamma = (C/C_J) / (LC) * tridiag(1,2,...,2,B; -1), so that the
/// generalized eigenproblem Gamma v = omega^2 C v has physical frequencies.
struct CircuitMatrices {
    MatrixXd capacitance;
    MatrixXd inductance;   // "Gamma"
};

CircuitMatrices build_matrices(const CircuitSpec& spec);

/// Solve the line-only generalized eigenproblem (junction node excluded),
/// normalized P^T C P = I, and form the flux-gauge couplings.
BathModes line_normal_modes(const CircuitSpec& spec);

/// Bogoliubov rotation of the photonic quadratic form of the charge-gauge
/// Hamiltonian (OpenEnd only): diagonalizes
///   sum_i Omega_i a_i^dag a_i + 4 E_C (sum_i (f_i/Omega_i) i(a_i^dag - a_i))^2
/// via the quadrature Hessian A^{1/2} B A^{1/2}. `ec_scale` rescales the
/// diamagnetic strength (1 = physical); used by limit tests.
ChargeGaugeBath charge_gauge_bath(const BathModes& modes, const CircuitSpec& spec,
                                  double ec_scale = 1.0);

/// One-band elastic renormalization diagnostic.
/// OpenEnd: E~_J / E~_C.  ShortEnd: U~_0 / E~_L with
/// E~_L = E_L - 2 sum f^2/Omega and U~_0 = U_0 exp(-2 pi^2 sum f^2/Omega^2).
/// `flagged` is set when E~_L <= 0 (cutoff/rounding pathology at large z).
struct OneBandRatio {
    double value = 0.0;
    bool flagged = false;
};

OneBandRatio one_band_renormalization(const CircuitSpec& spec);

}  // namespace jjline
