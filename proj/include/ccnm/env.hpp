#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ccnm/cheb.hpp"

namespace ccnm {

/// Attenuation scaling in k = (1 + i*eta*alpha) * omega / c for alpha
/// given in dB per wavelength: eta = 1 / (40*pi*log10(e)).
inline double attenuation_eta() {
    static const double eta = 1.0 / (40.0 * pi * std::log10(std::exp(1.0)));
    return eta;
}

[[nodiscard]] inline std::complex<double> complex_wavenumber(double c, double alpha,
                                                             double omega) {
    if (!(c > 0.0))
        throw std::invalid_argument("complex_wavenumber: sound speed must be positive");
    if (!(omega > 0.0))
        throw std::invalid_argument("complex_wavenumber: omega must be positive");
    return std::complex<double>(1.0, attenuation_eta() * alpha) * (omega / c);
}

enum class ProfileKind { Constant, Tabulated, Named };

enum class NamedProfile {
    Pseudolinear,  // 1/sqrt(a*z + b)
    Munk,          // deep-water channel around a 1300 m axis
    LinearBottom,  // 0.2*z + 1100
    ExpBottomA,    // 1500 + 30*exp((z-10)/100)
    ExpBottomB,    // 2000 - 100*exp(-(z-400)/1000)
    ExpDensity,    // exp(z/3000)
    LinearAtten,   // 0.005*z - 1
};

/// Depth-dependent scalar property: a constant, a named closed form, or a
/// piecewise-linear table over strictly increasing depths.
struct Profile {
    ProfileKind kind = ProfileKind::Constant;
    double constant = 0.0;
    NamedProfile name = NamedProfile::Munk;
    std::vector<std::pair<double, double>> table;  // (depth m, value)

    [[nodiscard]] static Profile make_constant(double v) {
        Profile p;
        p.kind = ProfileKind::Constant;
        p.constant = v;
        return p;
    }
    [[nodiscard]] static Profile make_named(NamedProfile n) {
        Profile p;
        p.kind = ProfileKind::Named;
        p.name = n;
        return p;
    }
    [[nodiscard]] static Profile make_table(std::vector<std::pair<double, double>> t) {
        Profile p;
        p.kind = ProfileKind::Tabulated;
        p.table = std::move(t);
        return p;
    }

    bool operator==(const Profile&) const = default;
};

[[nodiscard]] inline double eval_named_profile(NamedProfile name, double z) {
    switch (name) {
        case NamedProfile::Pseudolinear:
            return 1.0 / std::sqrt(5.94e-10 * z + 4.16e-7);
        case NamedProfile::Munk: {
            const double zt = (z - 1300.0) / 650.0;
            return 1500.0 * (1.0 + 0.0073 * (zt - 1.0 + std::exp(-zt)));
        }
        case NamedProfile::LinearBottom:
            return 0.2 * z + 1100.0;
        case NamedProfile::ExpBottomA:
            return 1500.0 + 30.0 * std::exp((z - 10.0) / 100.0);
        case NamedProfile::ExpBottomB:
            return 2000.0 - 100.0 * std::exp(-(z - 400.0) / 1000.0);
        case NamedProfile::ExpDensity:
            return std::exp(z / 3000.0);
        case NamedProfile::LinearAtten:
            return 0.005 * z - 1.0;
    }
    throw std::logic_error("eval_named_profile: unreachable");
}

[[nodiscard]] inline double eval_profile(const Profile& p, double z) {
    switch (p.kind) {
        case ProfileKind::Constant:
            return p.constant;
        case ProfileKind::Named:
            return eval_named_profile(p.name, z);
        case ProfileKind::Tabulated: {
            const auto& t = p.table;
            if (z < t.front().first || z > t.back().first)
                throw std::domain_error("eval_profile: depth outside tabulated domain");
            for (size_t i = 1; i < t.size(); ++i) {
                if (z <= t[i].first) {
                    const double z0 = t[i - 1].first, z1 = t[i].first;
                    const double v0 = t[i - 1].second, v1 = t[i].second;
                    return v0 + (v1 - v0) * (z - z0) / (z1 - z0);
                }
            }
            return t.back().second;
        }
    }
    throw std::logic_error("eval_profile: unreachable");
}

enum class BottomBc { Free, Rigid };

/// Uniformly spaced receiver lattice, kept as its start:step:stop triplet
/// so files round-trip exactly.
struct Lattice {
    double start = 0.0;
    double step = 0.0;
    double stop = 0.0;

    [[nodiscard]] std::vector<double> values() const {
        std::vector<double> v;
        // half-step slack so stop lands on the lattice despite round-off
        for (double x = start; x <= stop + 0.5 * step; x += step) v.push_back(x);
        if (!v.empty() && v.back() > stop) v.pop_back();
        return v;
    }

    bool operator==(const Lattice&) const = default;
};

struct LayerSpec {
    Profile c;      // sound speed, m/s
    Profile rho;    // density, g/cm^3
    Profile alpha;  // attenuation, dB per wavelength

    bool operator==(const LayerSpec&) const = default;
};

/// Full two-layer problem description.
struct EnvironmentSpec {
    double freq_hz = 0.0;
    double source_depth_m = 0.0;
    double h_m = 0.0;      // water/sediment interface depth
    double big_h_m = 0.0;  // total depth
    LayerSpec water;
    LayerSpec bottom;
    BottomBc bottom_bc = BottomBc::Free;
    int n_water = 40;
    int n_bottom = 40;
    double cp_max_mps = std::numeric_limits<double>::infinity();
    std::optional<Lattice> ranges_m;
    std::optional<Lattice> depths_m;

    [[nodiscard]] double omega() const { return 2.0 * pi * freq_hz; }

    bool operator==(const EnvironmentSpec&) const = default;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
          line(line_no) {}
};

}  // namespace ccnm
