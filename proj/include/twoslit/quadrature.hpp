#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace twoslit {

/// Uniform grid for composite Simpson integration. n must be odd so the
/// interval splits into an even number of panels.
struct GridSpec {
    double lo = -4.0;
    double hi = 4.0;
    int n = 1601;

    double step() const { return (hi - lo) / (n - 1); }
    double point(int i) const { return lo + i * step(); }

    void check() const {
        if (n < 3 || n % 2 == 0) throw std::invalid_argument("quadrature: n must be odd and >= 3");
        if (!(hi > lo)) throw std::invalid_argument("quadrature: hi must exceed lo");
    }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

inline std::vector<double> grid_points(const GridSpec& g) {
    g.check();
    std::vector<double> xs(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) xs[static_cast<std::size_t>(i)] = g.point(i);
    return xs;
}

/// Simpson weight of node i (times h/3).
inline double simpson_weight(const GridSpec& g, int i) {
    const double h3 = g.step() / 3.0;
    if (i == 0 || i == g.n - 1) return h3;
    return (i % 2 == 1) ? 4.0 * h3 : 2.0 * h3;
}

/// Composite Simpson on a fixed grid. Works for real- and complex-valued
/// integrands; error O(h^4) for smooth f. Summation order is fixed, so
/// results are bit-reproducible.
template <class F>
auto integrate_1d(F&& f, const GridSpec& g) -> decltype(f(0.0)) {
    g.check();
    using R = decltype(f(0.0));
    const double h = g.step();
    R ends = f(g.lo) + f(g.hi);
    R odd{}, even{};
    for (int i = 1; i < g.n - 1; i += 2) odd += f(g.point(i));
    for (int i = 2; i < g.n - 1; i += 2) even += f(g.point(i));
    return (ends + 4.0 * odd + 2.0 * even) * (h / 3.0);
}

/// Tensor-product Simpson. Row-major accumulation, fixed order.
template <class F>
double integrate_2d(F&& f, const GridSpec& gx, const GridSpec& gy) {
    gx.check();
    gy.check();
    double total = 0.0;
    for (int j = 0; j < gy.n; ++j) {
        const double y = gy.point(j);
        total += simpson_weight(gy, j) * integrate_1d([&](double x) { return f(x, y); }, gx);
    }
    return total;
}

/// One product term c * fx(x) * fy(y) of a two-particle state.
struct ProductTerm {
    std::complex<double> coeff;
    std::function<std::complex<double>(double)> fx;
    std::function<std::complex<double>(double)> fy;
};

/// A state expressible as a finite sum of product terms.
struct SeparableState {
    std::vector<ProductTerm> terms;
};

enum class Mode4D { factorized, direct };

namespace detail {

/// Per-axis overlap matrices O_ij = <f_i|f_j> by 1D Simpson.
struct OverlapMatrices {
    std::vector<std::vector<std::complex<double>>> x, y;
};

inline OverlapMatrices overlaps(const SeparableState& state, const GridSpec& g) {
    const std::size_t m = state.terms.size();
    OverlapMatrices o;
    o.x.assign(m, std::vector<std::complex<double>>(m));
    o.y.assign(m, std::vector<std::complex<double>>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            o.x[i][j] = integrate_1d(
                [&](double t) { return std::conj(state.terms[i].fx(t)) * state.terms[j].fx(t); }, g);
            o.y[i][j] = integrate_1d(
                [&](double t) { return std::conj(state.terms[i].fy(t)) * state.terms[j].fy(t); }, g);
        }
    return o;
}

}  // namespace detail

/// Purity integral S^-1 = int Psi*(x,y) Psi(X,y) Psi*(X,Y) Psi(x,Y) of the
/// reduced state, for Psi given as a sum of product terms.
///
/// The factorized mode reduces the 4D integral exactly to products of 1D
/// overlap integrals (valid for any sum of separable terms); the direct
/// mode runs the full tensor-product Simpson sum as an independent
/// cross-check and is budgeted to n <= 61 per axis. Both modes divide by
/// the squared numeric norm, so the input need not be pre-normalized.
inline double integrate_4d_separable(const SeparableState& state, const GridSpec& g,
                                     Mode4D mode = Mode4D::factorized) {
    g.check();
    const std::size_t m = state.terms.size();
    if (m == 0) throw std::invalid_argument("quadrature: empty separable state");

    if (mode == Mode4D::direct) {
        if (g.n > 61) throw std::invalid_argument("quadrature: 4D direct mode over budget");
        const std::size_t n = static_cast<std::size_t>(g.n);
        std::vector<std::complex<double>> psi(n * n);
        std::vector<double> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = simpson_weight(g, static_cast<int>(i));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::complex<double> v{};
                for (const auto& t : state.terms)
                    v += t.coeff * t.fx(g.point(static_cast<int>(i))) * t.fy(g.point(static_cast<int>(j)));
                psi[i * n + j] = v;
            }
        double norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) norm2 += w[i] * w[j] * std::norm(psi[i * n + j]);
        // B[x,X] = sum_y w_y Psi*(x,y) Psi(X,y)
        std::vector<std::complex<double>> B(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                std::complex<double> s{};
                for (std::size_t j = 0; j < n; ++j)
                    s += w[j] * std::conj(psi[i * n + j]) * psi[k * n + j];
                B[i * n + k] = s;
            }
        std::complex<double> q{};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) q += w[i] * w[k] * B[i * n + k] * B[k * n + i];
        return q.real() / (norm2 * norm2);
    }

    const auto o = detail::overlaps(state, g);
    const auto& c = state.terms;
    std::complex<double> norm2{};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            norm2 += std::conj(c[i].coeff) * c[j].coeff * o.x[i][j] * o.y[i][j];

    // S^-1 = sum_{ijkl} ci* cj ck* cl <fx_i|fx_l> <fy_i|fy_j> <fx_k|fx_j> <fy_k|fy_l>
    std::complex<double> q{};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    q += std::conj(c[i].coeff) * c[j].coeff * std::conj(c[k].coeff) * c[l].coeff *
                         o.x[i][l] * o.y[i][j] * o.x[k][j] * o.y[k][l];
    const double n2 = norm2.real();
    return q.real() / (n2 * n2);
}

}  // namespace twoslit
