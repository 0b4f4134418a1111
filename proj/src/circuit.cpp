#include "jjline/circuit.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace jjline {

void CircuitSpec::validate() const {
    std::ostringstream err;
    if (!(e_j >= 0.0)) err << "e_j must be >= 0 (got " << e_j << "); ";
    if (!(e_c > 0.0)) err << "e_c must be > 0 (got " << e_c << "); ";
    if (std::abs(e_c - 1.0) > 1e-12)
        err << "e_c is the unit of energy and must equal 1; ";
    if (!(z_ratio > 0.0)) err << "z_ratio must be > 0 (got " << z_ratio << "); ";
    if (!(omega_c > 0.0)) err << "omega_c must be > 0 (got " << omega_c << "); ";
    if (n_modes < 1) err << "n_modes must be >= 1 (got " << n_modes << "); ";
    if (!(bias >= -0.5 && bias <= 0.5))
        err << "bias must lie in [-1/2, 1/2] (got " << bias << "); ";
    const std::string msg = err.str();
    if (!msg.empty()) throw std::invalid_argument("invalid CircuitSpec: " + msg);
}

int n_modes_from_spacing(double omega_c, double spacing, double* rel_err) {
    if (!(spacing > 0.0)) throw std::invalid_argument("spacing must be > 0");
    const double exact = M_PI * omega_c / (2.0 * spacing);
    int n = static_cast<int>(std::lround(exact));
    if (n < 1) n = 1;
    if (rel_err) *rel_err = std::abs(exact - n) / exact;
    return n;
}

namespace {

// Plain tridiagonal pattern of the line block: diag (2,...,2,B), offdiag -1.
MatrixXd line_tridiag(int n, Boundary b) {
    MatrixXd t = MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        t(i, i) = 2.0;
        if (i + 1 < n) t(i, i + 1) = t(i + 1, i) = -1.0;
    }
    t(n - 1, n - 1) = (b == Boundary::OpenEnd) ? 1.0 : 2.0;
    return t;
}

}  // namespace

CircuitMatrices build_matrices(const CircuitSpec& spec) {
    spec.validate();
    const int n = spec.n_modes + 1;
    // C/C_J = 8/(pi omega_c z) in hbar = E_C = 1 units.
    const double cap_ratio = 8.0 / (M_PI * spec.omega_c * spec.z_ratio);
    const double inv_lc = spec.omega_c * spec.omega_c / 4.0;

    CircuitMatrices m;
    m.capacitance = MatrixXd::Zero(n, n);
    m.capacitance(0, 0) = 1.0;
    for (int i = 1; i < n; ++i) m.capacitance(i, i) = cap_ratio;

    m.inductance = MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        m.inductance(i, i) = 2.0;
        if (i + 1 < n) m.inductance(i, i + 1) = m.inductance(i + 1, i) = -1.0;
    }
    m.inductance(0, 0) = 1.0;
    m.inductance(n - 1, n - 1) = (spec.boundary == Boundary::OpenEnd) ? 1.0 : 2.0;
    m.inductance *= cap_ratio * inv_lc;
    return m;
}

BathModes line_normal_modes(const CircuitSpec& spec) {
    spec.validate();
    const int n = spec.n_modes;
    const MatrixXd t = line_tridiag(n, spec.boundary);

    Eigen::SelfAdjointEigenSolver<MatrixXd> es(t);
    if (es.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "line normal-mode eigensolver failed to converge (n_modes=" << n
            << ", boundary=" << to_string(spec.boundary)
            << "); tridiagonal norm " << t.norm();
        throw EigensolverError(msg.str());
    }

    VectorXd lambda = es.eigenvalues();
    MatrixXd u = es.eigenvectors();
    // Fix the coupling-sign gauge: amplitude at the node adjacent to the
    // junction is non-negative.
    for (int i = 0; i < n; ++i)
        if (u(0, i) < 0.0) u.col(i) *= -1.0;

    BathModes out;
    out.boundary = spec.boundary;
    const double el = spec.inductive_energy();    // Phi0^2/L
    out.inductive_scale = 0.5 * el;
    out.frequencies.resize(n);
    out.couplings.resize(n);
    for (int i = 0; i < n; ++i) {
        out.frequencies[i] = 0.5 * spec.omega_c * std::sqrt(lambda[i]);
        // f_i = (Phi0^2/L) sqrt(4 E_C / Omega_i) P_{1i}; in reduced form
        // f_i^2 = (Phi0^2/2L) * u_{1i}^2 * Omega_i / lambda_i.
        out.couplings[i] =
            std::sqrt(0.5 * el * out.frequencies[i] / lambda[i]) * u(0, i);
    }
    return out;
}

ChargeGaugeBath charge_gauge_bath(const BathModes& modes, const CircuitSpec& spec,
                                  double ec_scale) {
    spec.validate();
    if (spec.boundary != Boundary::OpenEnd || modes.boundary != Boundary::OpenEnd)
        throw std::invalid_argument(
            "charge_gauge_bath requires the open-ended circuit (the sum rule "
            "must cancel the inductive term)");

    const int n = static_cast<int>(modes.frequencies.size());
    const VectorXd& om = modes.frequencies;
    const VectorXd c = modes.couplings.array() / om.array();

    // Quadrature Hessian of the photon sector: H = 1/2 x^T A x + 1/2 p^T B p,
    // A = diag(Omega), B = A + 16 E_C c c^T. Williamson frequencies are the
    // square roots of eig(A^{1/2} B A^{1/2}).
    const VectorXd sq = om.array().sqrt();
    MatrixXd b = MatrixXd(om.asDiagonal());
    b.noalias() += 16.0 * ec_scale * c * c.transpose();
    const MatrixXd m = sq.asDiagonal() * b * sq.asDiagonal();

    Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
    if (es.info() != Eigen::Success)
        throw EigensolverError("Bogoliubov quadrature Hessian failed to diagonalize");

    ChargeGaugeBath out;
    out.frequencies.resize(n);
    out.couplings.resize(n);
    for (int k = 0; k < n; ++k) {
        const double w2 = es.eigenvalues()[k];
        if (!(w2 > 0.0)) {
            std::ostringstream msg;
            msg << "non-positive Bogoliubov normal frequency (omega_k^2 = "
                << w2 << "): unphysical spec or numerical breakdown";
            throw EigensolverError(msg.str());
        }
        out.frequencies[k] = std::sqrt(w2);
    }
    // Coupling operator N w^T p with w = 8 sqrt(2) E_C c transforms to
    // g_k = (1/sqrt(2)) omega_k^{-1/2} sum_i V_ik sqrt(Omega_i) w_i.
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += es.eigenvectors()(i, k) * sq[i] * c[i];
        double g = 8.0 * ec_scale * acc / std::sqrt(out.frequencies[k]);
        out.couplings[k] = std::abs(g);
    }
    double sum_gw = 0.0, sum_gw2 = 0.0;
    for (int k = 0; k < n; ++k) {
        const double g = out.couplings[k], w = out.frequencies[k];
        sum_gw += g * g / w;
        sum_gw2 += g * g / (w * w);
    }
    out.e_c_tilde = 1.0 - 0.25 * sum_gw;
    out.josephson_suppression = std::exp(-0.5 * sum_gw2);
    return out;
}

}  // namespace jjline
