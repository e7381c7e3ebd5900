#pragma once

#include <cmath>
#include <complex>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace twoslit {

/// Reduced flight times of one particle, hbar*t/m in um^2. The evolution
/// formulas only ever use these combinations, never t, m, hbar separately.
struct ParticleTimes {
    double tau_s = 0.0;  ///< source -> slit plane
    double tau_f = 0.0;  ///< slit plane -> detection line

    friend bool operator==(const ParticleTimes&, const ParticleTimes&) = default;
};

/// One single-particle Gaussian mode: momentum-space width (um^-1) plus the
/// reduced times of the particle it belongs to.
struct PacketSpec {
    double width = 1.0;
    ParticleTimes times;

    friend bool operator==(const PacketSpec&, const PacketSpec&) = default;
};

struct SlitGeometry {
    double half_width = 0.1;     ///< b_s, um
    double center_offset = 0.4;  ///< x_0, um; slits centered at +-x_0

    friend bool operator==(const SlitGeometry&, const SlitGeometry&) = default;
};

struct SuperpositionCoeffs {
    std::complex<double> a{1.0, 0.0};
    std::complex<double> b{0.0, 0.0};

    friend bool operator==(const SuperpositionCoeffs&, const SuperpositionCoeffs&) = default;
};

/// Full physical parameter set of the arrangement.
///
/// psi/varphi are the two modes of the particle detected at x (they share
/// times); phi/chi the two modes of the particle detected at y.
struct ArrangementConfig {
    SlitGeometry geometry;
    PacketSpec psi;     ///< width sigma, term a, particle x
    PacketSpec varphi;  ///< width sigma_bar, term b, particle x
    PacketSpec phi;     ///< width xi, term a, particle y
    PacketSpec chi;     ///< width xi_bar, term b, particle y
    SuperpositionCoeffs coeffs;
    /// Evaluate the envelope spreading factor mu with the total flight time
    /// instead of the time of flight to the slit (paper-literal reading;
    /// the numeric propagation oracle singles out the tau_s form).
    bool mu_uses_total_time = false;

    friend bool operator==(const ArrangementConfig&, const ArrangementConfig&) = default;

    void validate() const;
};

inline void ArrangementConfig::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("config: invariant ") + what);
    };
    for (const PacketSpec* p : {&psi, &varphi, &phi, &chi}) {
        require(p->width > 0.0, "packet width positive");
        require(p->times.tau_s > 0.0 && p->times.tau_f > 0.0, "reduced times positive");
    }
    require(psi.times == varphi.times, "particle-x times equal");
    require(phi.times == chi.times, "particle-y times equal");
    require(geometry.half_width > 0.0, "slit half width positive");
    require(geometry.center_offset > geometry.half_width, "slit offset exceeds half width");
    const double n2 = std::norm(coeffs.a) + std::norm(coeffs.b);
    require(std::abs(n2 - 1.0) <= 1e-12, "coefficient normalization");
}

/// The section-3 parameter set: b_s=0.1, x_0=0.4, tau_s1=0.33, tau_f1=0.2,
/// particle-2 times scaled by 1/0.9, sigma=xi=1, sigma_bar=xi_bar=6,
/// a=0.3, b=+sqrt(1-a^2).
inline ArrangementConfig paper_defaults() {
    ArrangementConfig cfg;
    cfg.geometry = {0.1, 0.4};
    const ParticleTimes t1{0.33, 0.2};
    const ParticleTimes t2{0.33 / 0.9, 0.2 / 0.9};
    cfg.psi = {1.0, t1};
    cfg.varphi = {6.0, t1};
    cfg.phi = {1.0, t2};
    cfg.chi = {6.0, t2};
    cfg.coeffs = {{0.3, 0.0}, {std::sqrt(1.0 - 0.09), 0.0}};
    cfg.validate();
    return cfg;
}

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Parses a flat `key = value` document (one pair per line, `#` comments).
/// Required keys: b_s, x0, tau_s_1, tau_f_1, tau_s_2, tau_f_2, sigma,
/// sigma_bar, xi, xi_bar, a, b. `b` may be the literal `auto`, meaning
/// +sqrt(1-a^2). Coefficients off normalization by no more than 1e-6 are
/// renormalized; beyond that is an error.
inline ArrangementConfig load_config(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: malformed line '" + line + "'");
        kv[detail::trim(line.substr(0, eq))] = detail::trim(line.substr(eq + 1));
    }

    auto get = [&kv](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) throw std::invalid_argument("config: missing " + key);
        return it->second;
    };
    auto get_num = [&get](const std::string& key) {
        const std::string& s = get(key);
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("config: bad number for " + key);
        }
        if (pos != s.size()) throw std::invalid_argument("config: bad number for " + key);
        return v;
    };

    ArrangementConfig cfg;
    cfg.geometry.half_width = get_num("b_s");
    cfg.geometry.center_offset = get_num("x0");
    const ParticleTimes t1{get_num("tau_s_1"), get_num("tau_f_1")};
    const ParticleTimes t2{get_num("tau_s_2"), get_num("tau_f_2")};
    cfg.psi = {get_num("sigma"), t1};
    cfg.varphi = {get_num("sigma_bar"), t1};
    cfg.phi = {get_num("xi"), t2};
    cfg.chi = {get_num("xi_bar"), t2};

    const double a = get_num("a");
    double b;
    if (get("b") == "auto") {
        if (std::abs(a) > 1.0) throw std::invalid_argument("config: invariant |a| <= 1 with b = auto");
        b = std::sqrt(1.0 - a * a);
    } else {
        b = get_num("b");
    }
    double n2 = a * a + b * b;
    if (std::abs(n2 - 1.0) > 1e-6)
        throw std::invalid_argument("config: invariant coefficient normalization");
    const double scale = 1.0 / std::sqrt(n2);
    cfg.coeffs = {{a * scale, 0.0}, {b * scale, 0.0}};

    if (auto it = kv.find("mu_uses_total_time"); it != kv.end())
        cfg.mu_uses_total_time = (it->second == "true" || it->second == "1");

    cfg.validate();
    return cfg;
}

inline ArrangementConfig load_config(const std::string& text) {
    std::istringstream in(text);
    return load_config(in);
}

/// Canonical serialization; parses back to an equal config.
inline std::string serialize(const ArrangementConfig& cfg) {
    char buf[64];
    std::string out;
    auto put = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "%s = %.17g\n", key, v);
        out += buf;
    };
    put("b_s", cfg.geometry.half_width);
    put("x0", cfg.geometry.center_offset);
    put("tau_s_1", cfg.psi.times.tau_s);
    put("tau_f_1", cfg.psi.times.tau_f);
    put("tau_s_2", cfg.phi.times.tau_s);
    put("tau_f_2", cfg.phi.times.tau_f);
    put("sigma", cfg.psi.width);
    put("sigma_bar", cfg.varphi.width);
    put("xi", cfg.phi.width);
    put("xi_bar", cfg.chi.width);
    put("a", cfg.coeffs.a.real());
    put("b", cfg.coeffs.b.real());
    out += std::string("mu_uses_total_time = ") + (cfg.mu_uses_total_time ? "true" : "false") + "\n";
    return out;
}

}  // namespace twoslit
