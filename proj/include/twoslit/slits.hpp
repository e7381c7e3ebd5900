#pragma once

#include <cmath>
#include <complex>

#include "twoslit/packets.hpp"
#include "twoslit/params.hpp"

namespace twoslit {

enum class Slit { A, B };  ///< A is the slit centered at +x_0, B at -x_0.

/// Closed-form coefficient bundle of the post-slit one-particle amplitude
/// under the Gaussian slit approximation, in reduced units:
///   mu    = 2 (1 + sigma^4 tau_s^2)
///   D     = 1/(2 b_s^2) + sigma^2 / mu
///   F     = -sigma^4 tau_s / mu - 1/(2 tau_f)
///   G     = x_0 / b_s^2,  H = 1 / tau_f
///   alpha = D H^2 / (4 (D^2+F^2)),   beta  = F H^2 / (4 (D^2+F^2))
///   gamma = D G H / (2 (D^2+F^2)),   delta = G H F / (2 (D^2+F^2))
///   C     = pi^{-1/4} (1/sigma + i sigma tau_s)^{-1/2}
///           (1 / (2 i tau_f (D + iF)))^{1/2}
///           exp(-x_0^2 / 2 b_s^2) exp(G^2 (D - iF) / 4 (D^2+F^2))
/// The two square roots use the principal branch and are evaluated as
/// separate factors, which fixes the (unobservable) overall phase.
struct SlitCoefficients {
    std::complex<double> C;
    double alpha, beta;    // quadratic envelope/chirp, um^-2
    double gamma, delta;   // linear phase/shift, um^-1
    double D, F;           // um^-2
    double G, H;           // um^-1
    double mu;             // dimensionless
    double tau_f;          // um^2, kept for the quadratic free phase
};

inline SlitCoefficients slit_coefficients(const PacketSpec& spec, const SlitGeometry& geom,
                                          bool mu_uses_total_time = false) {
    const double s = spec.width;
    const double tau_s = spec.times.tau_s;
    const double tau_f = spec.times.tau_f;
    const double bs2 = geom.half_width * geom.half_width;
    const double s4 = s * s * s * s;

    const double t_mu = mu_uses_total_time ? tau_s + tau_f : tau_s;
    const double mu = 2.0 * (1.0 + s4 * t_mu * t_mu);
    const double D = 1.0 / (2.0 * bs2) + s * s / mu;
    const double F = -s4 * tau_s / mu - 1.0 / (2.0 * tau_f);
    const double G = geom.center_offset / bs2;
    const double H = 1.0 / tau_f;
    const double den = D * D + F * F;

    SlitCoefficients c;
    c.alpha = D * H * H / (4.0 * den);
    c.beta = F * H * H / (4.0 * den);
    c.gamma = D * G * H / (2.0 * den);
    c.delta = G * H * F / (2.0 * den);
    c.D = D;
    c.F = F;
    c.G = G;
    c.H = H;
    c.mu = mu;
    c.tau_f = tau_f;

    const std::complex<double> spread{1.0 / s, s * tau_s};
    const std::complex<double> df{D, F};
    const std::complex<double> i2tf = std::complex<double>{0.0, 2.0 * tau_f} * df;
    c.C = std::pow(kPi, -0.25) / std::sqrt(spread) * std::sqrt(1.0 / i2tf) *
          std::exp(-geom.center_offset * geom.center_offset / (2.0 * bs2)) *
          std::exp(G * G * std::conj(df) / (4.0 * den));
    return c;
}

/// One-slit amplitude: C exp(i x^2 / 2 tau_f) exp(-(alpha - i beta) x^2)
/// exp(s (delta + i gamma) x), s = -1 for slit A and +1 for slit B, so
/// psi_A(x) = psi_B(-x).
inline std::complex<double> slit_amplitude(const SlitCoefficients& c, Slit slit, double x) {
    const double sign = (slit == Slit::A) ? -1.0 : 1.0;
    const std::complex<double> quad{-c.alpha * x * x, (c.beta + 0.5 / c.tau_f) * x * x};
    const std::complex<double> lin{sign * c.delta * x, sign * c.gamma * x};
    return c.C * std::exp(quad + lin);
}

/// Coherent sum over both slits; |result| is even in x.
inline std::complex<double> two_slit_amplitude(const SlitCoefficients& c, double x) {
    return slit_amplitude(c, Slit::A, x) + slit_amplitude(c, Slit::B, x);
}

/// Value-type view of one post-slit mode, for callers that want a callable.
struct SlitAmplitude {
    SlitCoefficients coeffs;
    double phase_curvature;  ///< 1 / (2 tau_f), um^-2
    int slit_sign;           ///< -1 for A, +1 for B

    std::complex<double> operator()(double x) const {
        return slit_amplitude(coeffs, slit_sign < 0 ? Slit::A : Slit::B, x);
    }
};

inline SlitAmplitude make_slit_amplitude(const SlitCoefficients& c, Slit slit) {
    return {c, 0.5 / c.tau_f, slit == Slit::A ? -1 : 1};
}

}  // namespace twoslit
