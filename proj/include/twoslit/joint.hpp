#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "twoslit/entanglement.hpp"
#include "twoslit/params.hpp"
#include "twoslit/quadrature.hpp"
#include "twoslit/slits.hpp"

namespace twoslit {

enum class StateKind { superposition, mixture, product_a, product_b };

enum class Component { a, b };

/// Slit coefficient bundles for the four one-particle modes. Computed once
/// per configuration; every amplitude evaluation reuses them.
struct SlitBundles {
    SlitCoefficients psi, varphi, phi, chi;
};

inline SlitBundles make_bundles(const ArrangementConfig& cfg) {
    return {slit_coefficients(cfg.psi, cfg.geometry, cfg.mu_uses_total_time),
            slit_coefficients(cfg.varphi, cfg.geometry, cfg.mu_uses_total_time),
            slit_coefficients(cfg.phi, cfg.geometry, cfg.mu_uses_total_time),
            slit_coefficients(cfg.chi, cfg.geometry, cfg.mu_uses_total_time)};
}

/// Phi_a(x,y) = (psi_A+psi_B)(x) (phi_A+phi_B)(y); Phi_b likewise from the
/// sigma_bar / xi_bar modes.
inline std::complex<double> component_amplitude(const SlitBundles& b, Component which, double x,
                                                double y) {
    if (which == Component::a)
        return two_slit_amplitude(b.psi, x) * two_slit_amplitude(b.phi, y);
    return two_slit_amplitude(b.varphi, x) * two_slit_amplitude(b.chi, y);
}

inline std::complex<double> component_amplitude(const ArrangementConfig& cfg, Component which,
                                                double x, double y) {
    return component_amplitude(make_bundles(cfg), which, x, y);
}

struct NormalizationOptions {
    /// Per-axis grid of the post-slit normalization integrals. The envelope
    /// decay is alpha ~ 0.1-0.12 um^-2 at the reference parameters, so the
    /// domain must reach |x| ~ 12 um before the boundary density drops
    /// below 1e-10 of the peak.
    GridSpec grid{-12.0, 12.0, 6001};
    double boundary_tol = 1e-10;
};

/// Two-particle post-slit state with its renormalization constants.
///
/// The slit passage is non-unitary, so the transmitted wave function is
/// renormalized numerically: norm_sup = 1 / ||a Phi_a + b Phi_b||, and
/// norm_a, norm_b are the (a,b) = (1,0) and (0,1) special cases. The
/// 2D integrals factor exactly into 1D Simpson integrals because the state
/// is a sum of product terms; the tensor-product quadrature value is
/// identical (see tests).
class JointState {
  public:
    static JointState normalize(const ArrangementConfig& cfg,
                                StateKind kind = StateKind::superposition,
                                const NormalizationOptions& opts = {}) {
        cfg.validate();
        JointState st;
        st.kind_ = kind;
        st.config_ = cfg;
        st.bundles_ = make_bundles(cfg);
        st.grid_ = opts.grid;

        const auto& g = opts.grid;
        g.check();
        auto u_a = [&](double x) { return two_slit_amplitude(st.bundles_.psi, x); };
        auto u_b = [&](double x) { return two_slit_amplitude(st.bundles_.varphi, x); };
        auto v_a = [&](double y) { return two_slit_amplitude(st.bundles_.phi, y); };
        auto v_b = [&](double y) { return two_slit_amplitude(st.bundles_.chi, y); };

        // Boundary-mass guard: the density on the domain edge must be
        // negligible against the per-factor peak, otherwise the truncated
        // integrals silently bias every norm.
        for (auto f : {+0, +1, +2, +3}) {
            auto eval = [&](double t) {
                switch (f) {
                    case 0: return std::norm(u_a(t));
                    case 1: return std::norm(u_b(t));
                    case 2: return std::norm(v_a(t));
                    default: return std::norm(v_b(t));
                }
            };
            double peak = 0.0;
            for (int i = 0; i < g.n; i += 8) peak = std::max(peak, eval(g.point(i)));
            const double edge = std::max(eval(g.lo), eval(g.hi));
            if (edge > opts.boundary_tol * peak)
                throw std::runtime_error("quadrature: domain truncation above tolerance");
        }

        const double nua = integrate_1d([&](double x) { return std::norm(u_a(x)); }, g);
        const double nub = integrate_1d([&](double x) { return std::norm(u_b(x)); }, g);
        const double nva = integrate_1d([&](double y) { return std::norm(v_a(y)); }, g);
        const double nvb = integrate_1d([&](double y) { return std::norm(v_b(y)); }, g);
        const std::complex<double> cu =
            integrate_1d([&](double x) { return std::conj(u_a(x)) * u_b(x); }, g);
        const std::complex<double> cv =
            integrate_1d([&](double y) { return std::conj(v_a(y)) * v_b(y); }, g);

        const auto a = cfg.coeffs.a;
        const auto b = cfg.coeffs.b;
        const double nsq = std::norm(a) * nua * nva + std::norm(b) * nub * nvb +
                           2.0 * std::real(std::conj(a) * b * cu * cv);
        st.norm_sup_ = 1.0 / std::sqrt(nsq);
        st.norm_a_ = 1.0 / std::sqrt(nua * nva);
        st.norm_b_ = 1.0 / std::sqrt(nub * nvb);
        st.source_norm_ = source_normalization_general(cfg);
        return st;
    }

    /// Same constants, different dispatch kind.
    JointState as(StateKind kind) const {
        JointState st = *this;
        st.kind_ = kind;
        return st;
    }

    double probability_density(double x, double y) const {
        const auto a = config_.coeffs.a;
        const auto b = config_.coeffs.b;
        switch (kind_) {
            case StateKind::superposition: {
                const auto amp = a * component_amplitude(bundles_, Component::a, x, y) +
                                 b * component_amplitude(bundles_, Component::b, x, y);
                return norm_sup_ * norm_sup_ * std::norm(amp);
            }
            case StateKind::mixture:
                return std::norm(a) * norm_a_ * norm_a_ *
                           std::norm(component_amplitude(bundles_, Component::a, x, y)) +
                       std::norm(b) * norm_b_ * norm_b_ *
                           std::norm(component_amplitude(bundles_, Component::b, x, y));
            case StateKind::product_a:
                return norm_a_ * norm_a_ *
                       std::norm(component_amplitude(bundles_, Component::a, x, y));
            case StateKind::product_b:
            default:
                return norm_b_ * norm_b_ *
                       std::norm(component_amplitude(bundles_, Component::b, x, y));
        }
    }

    /// 2 N^2 Re(a* b Phi_a* Phi_b); P decomposes exactly as
    /// N^2 (|a|^2 |Phi_a|^2 + |b|^2 |Phi_b|^2) + interference_term.
    double interference_term(double x, double y) const {
        const auto a = config_.coeffs.a;
        const auto b = config_.coeffs.b;
        const auto pa = component_amplitude(bundles_, Component::a, x, y);
        const auto pb = component_amplitude(bundles_, Component::b, x, y);
        return 2.0 * norm_sup_ * norm_sup_ * std::real(std::conj(a) * b * std::conj(pa) * pb);
    }

    StateKind kind() const { return kind_; }
    const ArrangementConfig& config() const { return config_; }
    const SlitBundles& bundles() const { return bundles_; }
    const GridSpec& normalization_grid() const { return grid_; }
    double norm_sup() const { return norm_sup_; }
    double norm_a() const { return norm_a_; }
    double norm_b() const { return norm_b_; }
    double source_norm() const { return source_norm_; }

  private:
    JointState() = default;
    StateKind kind_ = StateKind::superposition;
    ArrangementConfig config_;
    SlitBundles bundles_;
    GridSpec grid_;
    double norm_sup_ = 0.0, norm_a_ = 0.0, norm_b_ = 0.0, source_norm_ = 0.0;
};

/// Tr(rho^2) of the initial two-particle state for real coefficients:
/// |a|^4 + |b|^4 + 2 |a|^2 |b|^2 theta_x^2 theta_y^2, with the overlaps
/// taken at t = 0 (both equal theta when xi = sigma, xi_bar = sigma_bar).
inline double purity(const ArrangementConfig& cfg) {
    const double a2 = std::norm(cfg.coeffs.a);
    const double b2 = std::norm(cfg.coeffs.b);
    const double tx = overlap_theta(cfg.psi.width, cfg.varphi.width);
    const double ty = overlap_theta(cfg.phi.width, cfg.chi.width);
    return a2 * a2 + b2 * b2 + 2.0 * a2 * b2 * tx * tx * ty * ty;
}

}  // namespace twoslit
