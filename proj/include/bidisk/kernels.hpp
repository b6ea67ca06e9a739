#pragma once

#include "bidisk/geometry.hpp"

namespace bidisk {

enum class KernelKind { poisson, h0, k2, f0 };

const char* to_string(KernelKind kind);

/// P(z) = (1-|z|^2)/|1-z|^2, H0 = (1-|z|^2) P / 2, K2 = (1-|z|^2)^3 / (2|1-z|^4),
/// F0 = H0 + K2. Throws std::domain_error unless |z| < 1.
double kernel_eval(KernelKind kind, const DiskPoint& z);

/// Biharmonic Green function of the disk,
///   G(z,w) = |z-w|^2 log|(1 - z conj(w))/(z - w)|^2 - (1-|z|^2)(1-|w|^2),
/// extended to the diagonal by its limit -(1-|z|^2)^2.
double green(const DiskPoint& z, const DiskPoint& w);

/// (dG/dz, dG/dzbar) in the first slot. On the diagonal the log term has
/// vanishing gradient and the pair reduces to (conj(z), z)(1-|w|^2).
WirtingerPair green_gradient(const DiskPoint& z, const DiskPoint& w);

/// d/dz of z -> K2(z e^{-i theta}).
cplx k2_kernel_gradient(const DiskPoint& z, double theta);

/// d/dz of z -> P(z e^{-i theta}); the dzbar derivative is its conjugate.
cplx poisson_kernel_gradient(const DiskPoint& z, double theta);

/// I_alpha(z) = sum_n (Gamma(n+alpha)/(n! Gamma(alpha)))^2 |z|^{2n}, the circle
/// mean of |1 - z e^{i theta}|^{-2 alpha}.
double i_alpha(double alpha, const DiskPoint& z);

/// Closed form (1+|z|^2)/(1-|z|^2)^3 of I_2.
double i2_closed_form(const DiskPoint& z);

/// J(theta) = int_0^theta (1-r^2)^3 / (1 + r^2 - 2r cos phi)^2 dphi in closed form,
/// for theta in [0, pi] and r in [0, 1).
double j_integral(double theta, double r);

namespace detail {

// Unchecked variants used inside quadrature loops; callers guarantee |z| < 1.
double kernel_value(KernelKind kind, cplx z) noexcept;
double green_value(cplx z, cplx w) noexcept;
cplx green_dz(cplx z, cplx w) noexcept;
cplx k2_gradient_value(cplx z, cplx e_minus) noexcept;
cplx poisson_gradient_value(cplx z, cplx e_minus) noexcept;

} // namespace detail

} // namespace bidisk
