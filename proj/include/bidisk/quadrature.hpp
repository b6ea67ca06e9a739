#pragma once

#include "bidisk/geometry.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

namespace bidisk {

struct QuadratureConfig {
    int n_theta = 512;  // angular nodes
    int n_radial = 64;  // radial Gauss-Legendre nodes
    bool per_arc = true;

    /// Throws std::invalid_argument unless n_theta >= 8 and n_radial >= 4.
    void validate() const;
    /// Same rule with both node counts doubled.
    QuadratureConfig refined() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1], ascending. Cached per n.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

/// Pairwise (cascade) summation; the result depends only on the input order.
template <class T>
T pairwise_sum(std::span<const T> values) {
    if (values.empty()) {
        return T{};
    }
    if (values.size() <= 8) {
        T acc = values[0];
        for (std::size_t i = 1; i < values.size(); ++i) {
            acc = acc + values[i];
        }
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.subspan(0, half)) + pairwise_sum(values.subspan(half));
}

/// Number of angular nodes the circle rules use at evaluation radius r. Kernels
/// of the form 1/|1 - z e^{-i theta}|^p are analytic in a strip of half-width
/// about 1-|z|, so the node count grows like 1/(1-|z|) near the boundary.
int circle_nodes_for_radius(const QuadratureConfig& cfg, double r);

/// (1/2pi) int_0^{2pi} fn(theta) dtheta. With cfg.per_arc and a non-empty sorted
/// list of breakpoints in [0, 2pi), each arc between consecutive breakpoints is
/// integrated by composite 16-point Gauss-Legendre; otherwise the equal-weight
/// periodic trapezoid rule with max(cfg.n_theta, min_nodes) nodes is used.
template <class Fn>
auto circle_mean(Fn&& fn, const QuadratureConfig& cfg, std::span<const double> breakpoints = {},
                 int min_nodes = 0) -> decltype(fn(0.0));

/// Mean over the disk, (1/pi) int_D fn dA, by Gauss-Legendre in r (weight 2r)
/// tensored with the periodic trapezoid rule in theta.
template <class Fn>
auto disk_mean(Fn&& fn, const QuadratureConfig& cfg) -> decltype(fn(cplx{}));

/// The same mean computed in polar coordinates centred at `center`. Integrands
/// with a |w - center|^2 log|w - center| type singularity become smooth in the
/// angle and only mildly singular in the radius, and the result depends
/// smoothly on `center`.
template <class Fn>
auto disk_mean_about(cplx center, Fn&& fn, const QuadratureConfig& cfg) -> decltype(fn(cplx{}));

// ---------------------------------------------------------------------------

template <class Fn>
auto circle_mean(Fn&& fn, const QuadratureConfig& cfg, std::span<const double> breakpoints,
                 int min_nodes) -> decltype(fn(0.0)) {
    using T = decltype(fn(0.0));
    constexpr double two_pi = 2.0 * std::numbers::pi;
    cfg.validate();
    const int n = std::max(cfg.n_theta, min_nodes);
    std::vector<T> parts;
    if (cfg.per_arc && !breakpoints.empty()) {
        const GaussRule& gl = gauss_legendre(16);
        const int panels_total = std::max(1, (n + 15) / 16);
        for (std::size_t a = 0; a < breakpoints.size(); ++a) {
            const double lo = breakpoints[a];
            const double hi = a + 1 < breakpoints.size() ? breakpoints[a + 1] : breakpoints[0] + two_pi;
            const double len = hi - lo;
            if (!(len > 0.0)) {
                continue;
            }
            const int panels = std::max(1, static_cast<int>(std::ceil(panels_total * len / two_pi)));
            const double h = len / panels;
            for (int p = 0; p < panels; ++p) {
                const double mid = lo + (p + 0.5) * h;
                T acc{};
                for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
                    acc = acc + fn(mid + 0.5 * h * gl.nodes[i]) * (0.5 * h * gl.weights[i]);
                }
                parts.push_back(acc);
            }
        }
        return pairwise_sum(std::span<const T>(parts)) * (1.0 / two_pi);
    }
    parts.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        parts.push_back(fn(two_pi * j / n));
    }
    return pairwise_sum(std::span<const T>(parts)) * (1.0 / n);
}

template <class Fn>
auto disk_mean_about(cplx center, Fn&& fn, const QuadratureConfig& cfg) -> decltype(fn(cplx{})) {
    using T = decltype(fn(cplx{}));
    constexpr double two_pi = 2.0 * std::numbers::pi;
    cfg.validate();
    const GaussRule& gl = gauss_legendre(cfg.n_radial);
    const double c2 = std::norm(center);
    std::vector<T> lines;
    lines.reserve(static_cast<std::size_t>(cfg.n_theta));
    for (int j = 0; j < cfg.n_theta; ++j) {
        const cplx dir = std::polar(1.0, two_pi * j / cfg.n_theta);
        // Distance from center to the unit circle along dir.
        const double b = (std::conj(center) * dir).real();
        const double reach = -b + std::sqrt(b * b + 1.0 - c2);
        T acc{};
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double rho = 0.5 * reach * (gl.nodes[i] + 1.0);
            const double wt = 0.5 * reach * gl.weights[i] * rho;
            acc = acc + fn(center + rho * dir) * wt;
        }
        lines.push_back(acc);
    }
    // (1/pi) * (2pi/n_theta) * sum over lines
    return pairwise_sum(std::span<const T>(lines)) * (2.0 / cfg.n_theta);
}

template <class Fn>
auto disk_mean(Fn&& fn, const QuadratureConfig& cfg) -> decltype(fn(cplx{})) {
    return disk_mean_about(cplx{0.0, 0.0}, std::forward<Fn>(fn), cfg);
}

} // namespace bidisk
