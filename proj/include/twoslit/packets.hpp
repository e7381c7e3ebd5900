#pragma once

#include <cmath>
#include <complex>

#include "twoslit/params.hpp"

namespace twoslit {

inline constexpr double kPi = 3.14159265358979323846;

/// Momentum-space mode distribution f(k) = (4 pi)^{1/4} sigma^{-1/2}
/// exp(-k^2 / 2 sigma^2). Together with the (2 pi)^{-1} Fourier convention
/// this gives a unit-norm position wave function.
inline double mode_distribution(double width, double k) {
    return std::pow(4.0 * kPi, 0.25) / std::sqrt(width) * std::exp(-k * k / (2.0 * width * width));
}

/// t = 0 position wave function, (sigma^{1/2} / pi^{1/4}) exp(-sigma^2 x^2 / 2).
inline double initial_position_amplitude(const PacketSpec& spec, double x) {
    const double s = spec.width;
    return std::sqrt(s) / std::pow(kPi, 0.25) * std::exp(-s * s * x * x / 2.0);
}

/// Free Gaussian evolution over reduced time tau:
///   (sigma^{1/2} / pi^{1/4}) (1 + i sigma^2 tau)^{-1/2}
///     exp(-sigma^2 x^2 / (2 (1 + i sigma^2 tau)))
/// Principal branch of the square root; the radicand stays in the right
/// half plane for tau >= 0. Reduces to the t = 0 form at tau = 0.
inline std::complex<double> free_propagated_amplitude(const PacketSpec& spec, double x, double tau) {
    const double s = spec.width;
    const std::complex<double> z{1.0, s * s * tau};
    return std::sqrt(s) / std::pow(kPi, 0.25) / std::sqrt(z) * std::exp(-s * s * x * x / (2.0 * z));
}

/// Position-space standard deviation after free evolution (closed form for
/// the Gaussian packet), sqrt((1 + sigma^4 tau^2) / (2 sigma^2)).
inline double packet_position_sigma(const PacketSpec& spec, double tau) {
    const double s = spec.width;
    return std::sqrt((1.0 + std::pow(s * s * tau, 2)) / (2.0 * s * s));
}

}  // namespace twoslit
