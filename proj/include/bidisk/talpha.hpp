#pragma once

#include "bidisk/geometry.hpp"

#include <functional>
#include <map>
#include <vector>

namespace bidisk {

/// Gauss hypergeometric series F(a, b; c; x) by Pochhammer recurrence. x must lie
/// in [0, 1), or in [0, 1] when a or b is a nonpositive integer (terminating
/// series). Throws std::domain_error for c in {0, -1, -2, ...} or x out of range.
double gauss_hypergeometric(double a, double b, double c, double x);

/// F(-alpha/2, k - alpha/2; k + 1; x) with the closed form 1 - (k-1) x/(k+1)
/// used for alpha = 2.
double talpha_radial_factor(double alpha, int k, double x);

/// Coefficients c_k, |k| <= 64, of a T_alpha-harmonic expansion
///   sum_{k>=0} c_k F_k(|z|^2) z^k + sum_{k>=1} c_{-k} F_k(|z|^2) conj(z)^k.
struct CoefficientSequence {
    double alpha = 2.0;
    std::map<int, cplx> coeffs;

    void validate() const;
    cplx coeff(int k) const;
    int max_degree() const;
};

cplx t_alpha_eval(const CoefficientSequence& s, const DiskPoint& z);

/// Termwise Wirtinger derivatives of the expansion.
WirtingerPair t_alpha_wirtinger(const CoefficientSequence& s, const DiskPoint& z);

/// Coefficients of a T2-harmonic field from 4K samples on |z| = radius:
/// c_k = m_k / (F(-1, |k|-1; |k|+1; r^2) r^{|k|}) with m_k the k-th circle mode.
/// Circle modes below 64 eps times the largest one are treated as zero.
/// Throws std::domain_error unless 0 < radius < 1 and 1 <= K <= 64.
CoefficientSequence t2_coefficient_extract(const std::function<cplx(cplx)>& field, double radius, int max_degree);

/// Expansion coefficients of K2[b] for a boundary trigonometric polynomial
/// b = sum b_k e^{ik theta}: c_k = (|k|+1) b_k / 2.
CoefficientSequence t2_coefficients_from_boundary(const std::map<int, cplx>& boundary_modes);

/// Boundary trace sum_k c_k F_k(1) e^{ik theta} of an alpha = 2 expansion; the
/// field is a K2 transform of this trace.
std::map<int, cplx> t2_boundary_trace(const CoefficientSequence& s);

/// sup |u| over D for the alpha = 2 field: the maximum of the boundary trace
/// over 8192 angles times 1.001. Since K2 is a positive kernel of mean at most
/// one, sup_D |u| equals the sup of the trace.
double t2_sup_estimate(const CoefficientSequence& s);

struct CoefficientBoundEntry {
    int k = 0;
    double lhs = 0.0; // (|c_k| + |c_-k|) F_k(1), or 2|c_0| for k = 0
    double rhs = 0.0; // 4M/pi, or M for k = 0
    bool holds = true;
};

struct CoefficientBoundReport {
    std::vector<CoefficientBoundEntry> entries;
    bool all_hold = true;
    double min_margin = 0.0;
};

/// Checks |c_k F_k(1)| + |c_-k F_k(1)| <= 4M/pi for k >= 1 (equivalently
/// |c_k| + |c_-k| <= 2M(k+1)/pi) and |c_0 F_0(1)| = 2|c_0| <= M, with 1e-9 slack.
CoefficientBoundReport coefficient_bound_check(const CoefficientSequence& s, double M);

/// 4 M r (-r^3 + 3r^2 - 3r + 3) / (pi (1-r)^3): bound on
/// |u_z(z) - u_z(0)| + |u_zbar(z) - u_zbar(0)| for u(0) = 0 and sup |u| <= M.
double t2_gradient_deviation_bound(double M, double r);

} // namespace bidisk
