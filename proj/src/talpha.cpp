#include "bidisk/talpha.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bidisk {

namespace {

constexpr double kPi = std::numbers::pi;

cplx ipow(cplx base, int m) {
    cplx out{1.0, 0.0};
    for (int i = 0; i < m; ++i) {
        out *= base;
    }
    return out;
}

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

// Derivative dF/dx = (ab/c) F(a+1, b+1; c+1; x).
double talpha_radial_factor_derivative(double alpha, int k, double x) {
    if (alpha == 2.0) {
        return -(k - 1.0) / (k + 1.0);
    }
    const double a = -alpha / 2.0;
    const double b = k - alpha / 2.0;
    const double c = k + 1.0;
    if (a == 0.0 || b == 0.0) {
        return 0.0;
    }
    return a * b / c * gauss_hypergeometric(a + 1.0, b + 1.0, c + 1.0, x);
}

} // namespace

double gauss_hypergeometric(double a, double b, double c, double x) {
    if (is_nonpositive_integer(c)) {
        throw std::domain_error("gauss_hypergeometric: c must not be a nonpositive integer");
    }
    const bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if (!(x >= 0.0) || x > 1.0 || (x == 1.0 && !terminating)) {
        throw std::domain_error("gauss_hypergeometric: x must lie in [0, 1) (or [0, 1] for a terminating series)");
    }
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < 1000000; ++n) {
        const double num = (a + n) * (b + n);
        if (num == 0.0) {
            break;
        }
        term *= num / ((c + n) * (n + 1.0)) * x;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum) && std::abs(num / ((c + n) * (n + 1.0)) * x) < 1.0) {
            break;
        }
    }
    return sum;
}

double talpha_radial_factor(double alpha, int k, double x) {
    if (alpha == 2.0) {
        return 1.0 - (k - 1.0) / (k + 1.0) * x;
    }
    if (alpha == 0.0) {
        return 1.0;
    }
    return gauss_hypergeometric(-alpha / 2.0, k - alpha / 2.0, k + 1.0, x);
}

void CoefficientSequence::validate() const {
    for (const auto& [k, c] : coeffs) {
        if (std::abs(k) > 64) {
            throw std::invalid_argument("CoefficientSequence: |k| = " + std::to_string(std::abs(k)) + " exceeds 64");
        }
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("CoefficientSequence: non-finite coefficient");
        }
    }
    if (!std::isfinite(alpha)) {
        throw std::invalid_argument("CoefficientSequence: non-finite alpha");
    }
}

cplx CoefficientSequence::coeff(int k) const {
    const auto it = coeffs.find(k);
    return it == coeffs.end() ? cplx{} : it->second;
}

int CoefficientSequence::max_degree() const {
    int m = 0;
    for (const auto& [k, c] : coeffs) {
        m = std::max(m, std::abs(k));
    }
    return m;
}

cplx t_alpha_eval(const CoefficientSequence& s, const DiskPoint& z) {
    const cplx zv = z.value();
    const double x = z.modulus_sq();
    cplx acc{};
    for (const auto& [k, c] : s.coeffs) {
        const int m = std::abs(k);
        const cplx base = k >= 0 ? zv : std::conj(zv);
        acc += c * talpha_radial_factor(s.alpha, m, x) * ipow(base, m);
    }
    return acc;
}

WirtingerPair t_alpha_wirtinger(const CoefficientSequence& s, const DiskPoint& z) {
    const cplx zv = z.value();
    const cplx zb = std::conj(zv);
    const double x = z.modulus_sq();
    WirtingerPair out;
    for (const auto& [k, c] : s.coeffs) {
        const int m = std::abs(k);
        const double F = talpha_radial_factor(s.alpha, m, x);
        const double dF = talpha_radial_factor_derivative(s.alpha, m, x);
        if (k >= 0) {
            // d/dz [F(z zbar) z^m] = F' zbar z^m + m F z^{m-1};  d/dzbar = F' z z^m
            const cplx pm = ipow(zv, m);
            const cplx pm1 = m > 0 ? ipow(zv, m - 1) : cplx{};
            out.dz += c * (dF * zb * pm + static_cast<double>(m) * F * pm1);
            out.dzbar += c * (dF * zv * pm);
        } else {
            const cplx pm = ipow(zb, m);
            const cplx pm1 = ipow(zb, m - 1);
            out.dz += c * (dF * zb * pm);
            out.dzbar += c * (dF * zv * pm + static_cast<double>(m) * F * pm1);
        }
    }
    return out;
}

CoefficientSequence t2_coefficient_extract(const std::function<cplx(cplx)>& field, double radius, int max_degree) {
    if (!(radius > 0.0 && radius < 1.0)) {
        throw std::domain_error("t2_coefficient_extract: radius must lie in (0, 1)");
    }
    if (max_degree < 1 || max_degree > 64) {
        throw std::domain_error("t2_coefficient_extract: K must lie in [1, 64]");
    }
    const int n = 4 * max_degree;
    std::vector<cplx> samples(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        samples[static_cast<std::size_t>(j)] = field(std::polar(radius, 2.0 * kPi * j / n));
    }
    const double x = radius * radius;
    std::vector<cplx> modes;
    modes.reserve(static_cast<std::size_t>(2 * max_degree + 1));
    double largest = 0.0;
    for (int k = -max_degree; k <= max_degree; ++k) {
        cplx mode{};
        for (int j = 0; j < n; ++j) {
            mode += samples[static_cast<std::size_t>(j)] * std::polar(1.0, -2.0 * kPi * ((static_cast<long>(k) * j) % n) / n);
        }
        modes.push_back(mode / static_cast<double>(n));
        largest = std::max(largest, std::abs(modes.back()));
    }
    // Modes at roundoff level carry no information; dividing them by r^|k|
    // would only amplify noise.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * largest;
    CoefficientSequence out;
    out.alpha = 2.0;
    for (int k = -max_degree; k <= max_degree; ++k) {
        const cplx mode = modes[static_cast<std::size_t>(k + max_degree)];
        const int m = std::abs(k);
        const double denom = talpha_radial_factor(2.0, m, x) * std::pow(radius, m);
        if (denom == 0.0) {
            throw std::domain_error("t2_coefficient_extract: vanishing radial factor");
        }
        out.coeffs[k] = std::abs(mode) <= floor ? cplx{} : mode / denom;
    }
    return out;
}

CoefficientSequence t2_coefficients_from_boundary(const std::map<int, cplx>& boundary_modes) {
    CoefficientSequence out;
    out.alpha = 2.0;
    for (const auto& [k, b] : boundary_modes) {
        out.coeffs[k] = 0.5 * (std::abs(k) + 1.0) * b;
    }
    return out;
}

std::map<int, cplx> t2_boundary_trace(const CoefficientSequence& s) {
    if (s.alpha != 2.0) {
        throw std::invalid_argument("t2_boundary_trace: alpha must be 2");
    }
    std::map<int, cplx> out;
    for (const auto& [k, c] : s.coeffs) {
        out[k] = c * (2.0 / (std::abs(k) + 1.0));
    }
    return out;
}

double t2_sup_estimate(const CoefficientSequence& s) {
    const auto trace = t2_boundary_trace(s);
    constexpr int n = 8192;
    double best = 0.0;
    for (int j = 0; j < n; ++j) {
        const double t = 2.0 * kPi * j / n;
        cplx v{};
        for (const auto& [k, c] : trace) {
            v += c * std::polar(1.0, k * t);
        }
        best = std::max(best, std::abs(v));
    }
    return best * 1.001;
}

CoefficientBoundReport coefficient_bound_check(const CoefficientSequence& s, double M) {
    if (s.alpha != 2.0) {
        throw std::invalid_argument("coefficient_bound_check: alpha must be 2");
    }
    constexpr double kSlack = 1e-9;
    CoefficientBoundReport report;
    report.min_margin = std::numeric_limits<double>::infinity();
    auto push = [&](int k, double lhs, double rhs) {
        const double margin = rhs - lhs;
        const bool holds = margin >= -kSlack;
        report.entries.push_back({k, lhs, rhs, holds});
        report.all_hold = report.all_hold && holds;
        report.min_margin = std::min(report.min_margin, margin);
    };
    push(0, 2.0 * std::abs(s.coeff(0)), M);
    for (int k = 1; k <= s.max_degree(); ++k) {
        const double fk = 2.0 / (k + 1.0);
        push(k, (std::abs(s.coeff(k)) + std::abs(s.coeff(-k))) * fk, 4.0 * M / kPi);
    }
    return report;
}

double t2_gradient_deviation_bound(double M, double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::domain_error("t2_gradient_deviation_bound: r must lie in [0, 1)");
    }
    const double q = 1.0 - r;
    return 4.0 * M * r * (-r * r * r + 3.0 * r * r - 3.0 * r + 3.0) / (kPi * q * q * q);
}

} // namespace bidisk
