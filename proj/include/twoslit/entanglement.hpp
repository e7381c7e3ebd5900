#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twoslit/packets.hpp"
#include "twoslit/params.hpp"
#include "twoslit/quadrature.hpp"

namespace twoslit {

/// t = 0 overlap of two Gaussian modes, (2 sigma sigma_bar /
/// (sigma^2 + sigma_bar^2))^{1/2}. Symmetric; equals 1 iff the widths match.
inline double overlap_theta(double sigma, double sigma_bar) {
    if (!(sigma > 0.0) || !(sigma_bar > 0.0))
        throw std::invalid_argument("entanglement: widths must be positive");
    return std::sqrt(2.0 * sigma * sigma_bar / (sigma * sigma + sigma_bar * sigma_bar));
}

/// Source normalization N = (1 + 2 theta^2 Re(a* b))^{-1/2}, with both
/// one-particle scalar products equal to theta at t = 0. The paper's
/// 4 sigma sigma_bar / (sigma^2 + sigma_bar^2) prefactor is 2 theta^2.
inline double source_normalization(const SuperpositionCoeffs& coeffs, double theta) {
    const double radicand = 1.0 + 2.0 * theta * theta * std::real(std::conj(coeffs.a) * coeffs.b);
    if (radicand <= 0.0) throw std::runtime_error("entanglement: degenerate normalization");
    return 1.0 / std::sqrt(radicand);
}

/// N for an arbitrary configuration, where the two scalar products may
/// differ (theta_x from sigma/sigma_bar, theta_y from xi/xi_bar).
inline double source_normalization_general(const ArrangementConfig& cfg) {
    const double tx = overlap_theta(cfg.psi.width, cfg.varphi.width);
    const double ty = overlap_theta(cfg.phi.width, cfg.chi.width);
    const double radicand = 1.0 + 2.0 * tx * ty * std::real(std::conj(cfg.coeffs.a) * cfg.coeffs.b);
    if (radicand <= 0.0) throw std::runtime_error("entanglement: degenerate normalization");
    return 1.0 / std::sqrt(radicand);
}

/// Schmidt number of the initial state for real coefficients:
///   S = (1 + 2 a b theta^2)^2
///       / (a^4 + b^4 + 4 a b theta^2 + 2 a^2 b^2 theta^2 (2 + theta^2))
inline double schmidt_closed_form(double a, double b, double theta) {
    if (std::abs(a * a + b * b - 1.0) > 1e-9)
        throw std::invalid_argument("entanglement: coefficients must satisfy a^2 + b^2 = 1");
    const double t2 = theta * theta;
    const double num = 1.0 + 2.0 * a * b * t2;
    const double den =
        a * a * a * a + b * b * b * b + 4.0 * a * b * t2 + 2.0 * a * a * b * b * t2 * (2.0 + t2);
    return num * num / den;
}

/// t = 0 state of the arrangement as a sum of two Gaussian product terms,
/// suitable for the 4D purity integral.
inline SeparableState initial_separable_state(const ArrangementConfig& cfg) {
    auto gauss = [](double width) {
        return [width](double t) {
            return std::complex<double>(
                std::sqrt(width) / std::pow(kPi, 0.25) * std::exp(-width * width * t * t / 2.0), 0.0);
        };
    };
    SeparableState st;
    st.terms.push_back({cfg.coeffs.a, gauss(cfg.psi.width), gauss(cfg.phi.width)});
    st.terms.push_back({cfg.coeffs.b, gauss(cfg.varphi.width), gauss(cfg.chi.width)});
    return st;
}

/// Schmidt number by quadrature of the purity integral over the t = 0
/// state; the independent oracle for schmidt_closed_form. Accepts complex
/// coefficients (the integral does not require reality).
inline double schmidt_integral(const ArrangementConfig& cfg, const GridSpec& grid = {-10.0, 10.0, 2001},
                               Mode4D mode = Mode4D::factorized) {
    return 1.0 / integrate_4d_separable(initial_separable_state(cfg), grid, mode);
}

namespace detail {

/// S^-1 for the two-Gaussian-term state with per-axis overlaps tx, ty and
/// real coefficients: tr((R O)^2) with R_ij = N^2 c_i c_j O^y_ij. Collapses
/// to the rational closed form when tx = ty.
inline double schmidt_inverse_two_term(double a, double b, double tx, double ty) {
    const double n2 = 1.0 / (1.0 + 2.0 * a * b * tx * ty);
    const double d11 = a * a + a * b * tx * ty;
    const double d22 = b * b + a * b * tx * ty;
    const double off = 2.0 * (a * a * tx + a * b * ty) * (a * b * ty + b * b * tx);
    return n2 * n2 * (d11 * d11 + d22 * d22 + off);
}

}  // namespace detail

enum class SweepAxis { a, theta };

/// Samples S along one axis of Eq.-style (a, theta) space, the other value
/// held fixed; b = +sqrt(1 - a^2). Both axes live in [0, 1].
inline std::vector<std::pair<double, double>> schmidt_sweep(SweepAxis axis, double fixed,
                                                            const GridSpec& grid) {
    grid.check();
    if (grid.lo < 0.0 || grid.hi > 1.0)
        throw std::invalid_argument("entanglement: sweep axis range must lie in [0, 1]");
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(grid.n));
    for (int i = 0; i < grid.n; ++i) {
        const double t = grid.point(i);
        const double a = (axis == SweepAxis::a) ? t : fixed;
        const double theta = (axis == SweepAxis::a) ? fixed : t;
        out.emplace_back(t, schmidt_closed_form(a, std::sqrt(1.0 - a * a), theta));
    }
    return out;
}

struct EntanglementReport {
    double theta;        ///< one-particle overlap (x side)
    double source_norm;  ///< N
    double schmidt;      ///< S, closed form
    double purity;       ///< Tr(rho^2)
};

inline EntanglementReport analyze(const ArrangementConfig& cfg) {
    const double tx = overlap_theta(cfg.psi.width, cfg.varphi.width);
    const double ty = overlap_theta(cfg.phi.width, cfg.chi.width);
    const double a2 = std::norm(cfg.coeffs.a);
    const double b2 = std::norm(cfg.coeffs.b);
    EntanglementReport r;
    r.theta = tx;
    r.source_norm = source_normalization_general(cfg);
    r.schmidt = 1.0 / detail::schmidt_inverse_two_term(std::sqrt(a2), std::sqrt(b2), tx, ty);
    r.purity = a2 * a2 + b2 * b2 + 2.0 * a2 * b2 * tx * tx * ty * ty;
    return r;
}

}  // namespace twoslit
