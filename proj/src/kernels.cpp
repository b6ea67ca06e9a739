#include "bidisk/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bidisk {

namespace {

constexpr double kPi = std::numbers::pi;

// theta closer to pi than this uses the limit value of J.
constexpr double kJLimitBand = 1e-9;

} // namespace

const char* to_string(KernelKind kind) {
    switch (kind) {
    case KernelKind::poisson: return "P";
    case KernelKind::h0: return "H0";
    case KernelKind::k2: return "K2";
    case KernelKind::f0: return "F0";
    }
    return "?";
}

namespace detail {

double kernel_value(KernelKind kind, cplx z) noexcept {
    const double s = 1.0 - std::norm(z);
    const double d = std::norm(1.0 - z);
    const double p = s / d;
    switch (kind) {
    case KernelKind::poisson: return p;
    case KernelKind::h0: return 0.5 * s * p;
    case KernelKind::k2: return 0.5 * s * s * s / (d * d);
    case KernelKind::f0: return 0.5 * s * p + 0.5 * s * s * s / (d * d);
    }
    return 0.0;
}

double green_value(cplx z, cplx w) noexcept {
    const double dist2 = std::norm(z - w);
    const double tail = (1.0 - std::norm(z)) * (1.0 - std::norm(w));
    if (dist2 == 0.0) {
        return -tail;
    }
    const double num = std::norm(1.0 - z * std::conj(w));
    return dist2 * std::log(num / dist2) - tail;
}

cplx green_dz(cplx z, cplx w) noexcept {
    const cplx d = z - w;
    const double dist2 = std::norm(d);
    const cplx tail = std::conj(z) * (1.0 - std::norm(w));
    if (dist2 == 0.0) {
        return tail;
    }
    const cplx q = 1.0 - z * std::conj(w);
    const double log_term = std::log(std::norm(q) / dist2);
    // d/dz |z-w|^2 = conj(z-w); d/dz log|q|^2 = -conj(w)/q; d/dz log|z-w|^2 = 1/(z-w).
    return std::conj(d) * (log_term - 1.0) - dist2 * std::conj(w) / q + tail;
}

cplx k2_gradient_value(cplx z, cplx e_minus) noexcept {
    const double s = 1.0 - std::norm(z);
    const cplx a = 1.0 - z * e_minus;             // 1 - z e^{-i theta}
    const cplx b = 1.0 - std::conj(z) / e_minus;  // 1 - conj(z) e^{i theta}
    const cplx num = s * s * (2.0 * e_minus * s - 3.0 * std::conj(z) * a);
    return num / (2.0 * b * b * a * a * a);
}

cplx poisson_gradient_value(cplx z, cplx e_minus) noexcept {
    const cplx a = 1.0 - z * e_minus;
    return e_minus / (a * a);
}

} // namespace detail

double kernel_eval(KernelKind kind, const DiskPoint& z) {
    if (!(z.modulus_sq() < 1.0)) {
        throw std::domain_error("kernel_eval: |z| must be < 1");
    }
    return detail::kernel_value(kind, z.value());
}

double green(const DiskPoint& z, const DiskPoint& w) {
    return detail::green_value(z.value(), w.value());
}

WirtingerPair green_gradient(const DiskPoint& z, const DiskPoint& w) {
    const cplx dz = detail::green_dz(z.value(), w.value());
    return {dz, std::conj(dz)};
}

cplx k2_kernel_gradient(const DiskPoint& z, double theta) {
    if (!(z.modulus_sq() < 1.0)) {
        throw std::domain_error("k2_kernel_gradient: |z| must be < 1");
    }
    return detail::k2_gradient_value(z.value(), std::polar(1.0, -theta));
}

cplx poisson_kernel_gradient(const DiskPoint& z, double theta) {
    if (!(z.modulus_sq() < 1.0)) {
        throw std::domain_error("poisson_kernel_gradient: |z| must be < 1");
    }
    return detail::poisson_gradient_value(z.value(), std::polar(1.0, -theta));
}

double i_alpha(double alpha, const DiskPoint& z) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("i_alpha: alpha must be > 0");
    }
    const double x = z.modulus_sq();
    if (!(x < 1.0)) {
        throw std::domain_error("i_alpha: |z| must be < 1");
    }
    // term_n = (Gamma(n+alpha)/(n! Gamma(alpha)))^2 x^n, advanced by the ratio
    // ((n+alpha)/(n+1))^2 x.
    double term = 1.0;
    double sum = 1.0;
    for (long n = 0; n < 100000000; ++n) {
        const double ratio = (n + alpha) / (n + 1.0);
        term *= ratio * ratio * x;
        sum += term;
        // Terms eventually decay geometrically; stop once negligible and decreasing.
        if (term < 1e-16 * sum && ratio * ratio * x < 1.0) {
            break;
        }
    }
    return sum;
}

double i2_closed_form(const DiskPoint& z) {
    const double x = z.modulus_sq();
    const double s = 1.0 - x;
    return (1.0 + x) / (s * s * s);
}

double j_integral(double theta, double r) {
    if (!(theta >= 0.0 && theta <= kPi)) {
        throw std::domain_error("j_integral: theta must lie in [0, pi]");
    }
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::domain_error("j_integral: r must lie in [0, 1)");
    }
    const double r2 = r * r;
    if (theta > kPi - kJLimitBand) {
        return kPi * (1.0 + r2);
    }
    const double first = 2.0 * r * (1.0 - r2) * std::sin(theta) / (1.0 + r2 - 2.0 * r * std::cos(theta));
    const double second = 2.0 * (1.0 + r2) * std::atan((1.0 + r) * std::tan(0.5 * theta) / (1.0 - r));
    return first + second;
}

} // namespace bidisk
