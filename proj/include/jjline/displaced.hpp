#pragma once

// Overlaps of displaced Fock states via the closed associated-Laguerre form
//   <m|D(d)|n> = e^{-|d|^2/2} sqrt(n!/m!) d^{m-n} L_n^{(m-n)}(|d|^2),  m >= n,
// evaluated in the log domain so that n, m up to a few hundred are safe.

#include <cmath>
#include <complex>

namespace jjline {

/// Associated Laguerre polynomial L_n^{(a)}(x) by the three-term recurrence.
template <typename Scalar>
Scalar laguerre(int n, int a, Scalar x) {
    if (n == 0) return Scalar(1);
    Scalar lkm1 = Scalar(1);
    Scalar lk = Scalar(1 + a) - x;
    for (int k = 1; k < n; ++k) {
        Scalar lkp1 = ((Scalar(2 * k + 1 + a) - x) * lk - Scalar(k + a) * lkm1) /
                      Scalar(k + 1);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

/// Magnitude factor common to all displacement directions:
/// e^{-x/2} sqrt(lo!/hi!) x^{d/2} L_lo^{(d)}(x) with x = |d|^2, d = |m-n|.
inline double displaced_overlap_core(int m, int n, double x) {
    const int lo = std::min(m, n), hi = std::max(m, n);
    const int d = hi - lo;
    if (x == 0.0) return d == 0 ? 1.0 : 0.0;
    const double logpre =
        0.5 * (std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0)) - 0.5 * x +
        0.5 * d * std::log(x);
    return std::exp(logpre) * laguerre(lo, d, x);
}

/// <m|D(delta)|n> for real delta.
inline double displaced_overlap_real(int m, int n, double delta) {
    const double core = displaced_overlap_core(m, n, delta * delta);
    if (m >= n) return (delta < 0.0 && ((m - n) & 1)) ? -core : core;
    return (delta > 0.0 && ((n - m) & 1)) ? -core : core;
}

/// |<m|D(i c)|n>| signed by the Laguerre factor only, c real: the full element
/// is i^{|m-n|} (sign c)^{|m-n|} times this.
inline double displaced_overlap_imag(int m, int n, double c) {
    return displaced_overlap_core(m, n, c * c);
}

/// <m|D^dag(beta) D(alpha)|n> for general complex displacements, including
/// the symplectic phase e^{(alpha beta^* - alpha^* beta)/2}.
inline std::complex<double> displaced_overlap(int m, int n,
                                              std::complex<double> alpha,
                                              std::complex<double> beta) {
    const std::complex<double> delta = alpha - beta;
    const std::complex<double> phase =
        std::exp(0.5 * (alpha * std::conj(beta) - std::conj(alpha) * beta));
    const double x = std::norm(delta);
    const double core = displaced_overlap_core(m, n, x);
    if (x == 0.0) return phase * core;
    const int d = std::abs(m - n);
    const std::complex<double> dir = (m >= n ? delta : -std::conj(delta)) /
                                     std::sqrt(x);
    return phase * std::pow(dir, d) * core;
}

}  // namespace jjline
