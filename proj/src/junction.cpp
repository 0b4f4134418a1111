#include "jjline/junction.hpp"

#include "jjline/circuit.hpp"
#include "jjline/displaced.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>

namespace jjline {

namespace {

// Deterministic eigenvector phase: largest-magnitude component positive.
void fix_column_signs(MatrixXd& v) {
    for (int j = 0; j < v.cols(); ++j) {
        int imax = 0;
        v.col(j).cwiseAbs().maxCoeff(&imax);
        if (v(imax, j) < 0.0) v.col(j) *= -1.0;
    }
}

}  // namespace

TransmonEigs transmon_eigs(double e_c, double e_j, double nu, int n_max,
                           int n_levels, int n_max_limit) {
    if (e_c <= 0.0 || e_j < 0.0) throw std::invalid_argument("bad transmon energies");
    if (n_levels < 1) throw std::invalid_argument("n_levels must be >= 1");
    constexpr double kBoundaryTol = 1e-10;

    for (;;) {
        const int dim = 2 * n_max + 1;
        if (dim < n_levels) { n_max = (n_levels + 2) / 2 + 1; continue; }
        MatrixXd h = MatrixXd::Zero(dim, dim);
        for (int i = 0; i < dim; ++i) {
            const double n = i - n_max;
            h(i, i) = 4.0 * e_c * (n - nu) * (n - nu);
            if (i + 1 < dim) h(i, i + 1) = h(i + 1, i) = -0.5 * e_j;
        }
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(h);

        double edge = 0.0;
        for (int s = 0; s < n_levels; ++s)
            edge = std::max(edge, std::max(std::abs(es.eigenvectors()(0, s)),
                                           std::abs(es.eigenvectors()(dim - 1, s))));
        if (edge < kBoundaryTol) {
            TransmonEigs out;
            out.quasicharge = nu;
            out.charge_cutoff = n_max;
            out.energies = es.eigenvalues().head(n_levels);
            out.vectors = es.eigenvectors().leftCols(n_levels);
            fix_column_signs(out.vectors);
            return out;
        }
        if (2 * n_max > n_max_limit)
            throw CutoffSaturation("transmon charge cutoff saturated at N_max = " +
                                   std::to_string(n_max));
        n_max *= 2;
    }
}

MatrixXd oscillator_phase(int dim, double phi_zpf) {
    MatrixXd phi = MatrixXd::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; ++n)
        phi(n, n + 1) = phi(n + 1, n) = phi_zpf * std::sqrt(n + 1.0);
    return phi;
}

MatrixXd oscillator_cosine(int dim, double phi_zpf, double phi_bias) {
    // cos(phi + 2 pi phib) = Re[e^{2 pi i phib} D(i phi_zpf)] in this basis.
    MatrixXd out(dim, dim);
    const std::complex<double> ph =
        std::exp(std::complex<double>(0.0, 2.0 * M_PI * phi_bias));
    for (int m = 0; m < dim; ++m)
        for (int n = 0; n <= m; ++n) {
            const double mag = displaced_overlap_imag(m, n, phi_zpf);
            // phase i^{m-n} in both triangle halves
            const int d = m - n;
            std::complex<double> ip(0, 1);
            std::complex<double> val = std::pow(ip, d) * mag;
            out(m, n) = out(n, m) = (ph * val).real();
        }
    return out;
}

FluxoniumEigs fluxonium_eigs(double e_l, double e_c, double e_j, double phi_bias,
                             int cutoff, int n_levels, double rel_tol,
                             int cutoff_limit) {
    if (e_l <= 0.0) throw std::invalid_argument("fluxonium requires e_l > 0");
    if (cutoff < n_levels + 2) cutoff = n_levels + 2;
    const double phi_zpf = std::pow(2.0 * e_c / e_l, 0.25);
    const double w0 = std::sqrt(8.0 * e_l * e_c);

    VectorXd prev;
    for (;;) {
        const int dim = cutoff;
        MatrixXd h = MatrixXd::Zero(dim, dim);
        for (int n = 0; n < dim; ++n) h(n, n) = w0 * (n + 0.5);
        if (e_j != 0.0) h.noalias() -= e_j * oscillator_cosine(dim, phi_zpf, phi_bias);

        Eigen::SelfAdjointEigenSolver<MatrixXd> es(h);
        VectorXd lo = es.eigenvalues().head(n_levels);
        if (prev.size() == lo.size()) {
            double rel = 0.0;
            for (int s = 0; s < n_levels; ++s)
                rel = std::max(rel, std::abs(lo[s] - prev[s]) /
                                        std::max(1.0, std::abs(lo[s])));
            if (rel < rel_tol) {
                FluxoniumEigs out;
                out.e_l = e_l;
                out.flux_bias = phi_bias;
                out.oscillator_cutoff = dim;
                out.energies = lo;
                out.vectors = es.eigenvectors().leftCols(n_levels);
                fix_column_signs(out.vectors);
                return out;
            }
        }
        prev = lo;
        if (2 * cutoff > cutoff_limit)
            throw CutoffSaturation("fluxonium oscillator cutoff saturated at " +
                                   std::to_string(cutoff));
        cutoff *= 2;
    }
}

double extract_phase_slip_amplitude(double e_c, double e_j, PhaseSlipMethod method) {
    const int nlev = 1;
    if (method == PhaseSlipMethod::HalfBandwidth) {
        const double e_half = transmon_eigs(e_c, e_j, 0.5, 8, nlev).energies[0];
        const double e_zero = transmon_eigs(e_c, e_j, 0.0, 8, nlev).energies[0];
        return 0.5 * (e_half - e_zero);
    }
    // Least-squares amplitude of U0 cos(2 pi nu) against the nu-resolved band;
    // the constant offset is profiled out.
    const int npts = 101;
    double su = 0.0, scc = 0.0, sc = 0.0, se = 0.0;
    for (int i = 0; i < npts; ++i) {
        const double nu = -0.5 + i / double(npts - 1);
        const double e = transmon_eigs(e_c, e_j, nu, 8, nlev).energies[0];
        const double c = std::cos(2.0 * M_PI * nu);
        su += e * c;
        scc += c * c;
        sc += c;
        se += e;
    }
    // fit e ~ a + u c; with sum(c) ~ 0 on the symmetric grid this reduces to
    // u = <e c>/<c^2>, up to the exact normal equations solved here.
    const double denom = scc - sc * sc / npts;
    const double u = (su - sc * se / npts) / denom;
    return u;
}

OneBandRatio one_band_renormalization(const CircuitSpec& spec) {
    spec.validate();
    const BathModes modes = line_normal_modes(spec);
    OneBandRatio out;
    if (spec.boundary == Boundary::OpenEnd) {
        const ChargeGaugeBath bath = charge_gauge_bath(modes, spec);
        const double ej_t = spec.e_j * bath.josephson_suppression;
        out.value = ej_t / bath.e_c_tilde;
        return out;
    }
    const double u0 = extract_phase_slip_amplitude(spec.e_c, spec.e_j);
    double s1 = 0.0, s2 = 0.0;
    for (int k = 0; k < modes.frequencies.size(); ++k) {
        const double f = modes.couplings[k], w = modes.frequencies[k];
        s1 += f * f / w;
        s2 += f * f / (w * w);
    }
    const double el_t = spec.inductive_energy() - 2.0 * s1;
    const double u0_t = u0 * std::exp(-2.0 * M_PI * M_PI * s2);
    out.value = u0_t / el_t;
    out.flagged = !(el_t > 0.0);
    return out;
}

}  // namespace jjline
