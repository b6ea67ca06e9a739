#pragma once

#include "bidisk/boundary.hpp"
#include "bidisk/geometry.hpp"
#include "bidisk/kernels.hpp"
#include "bidisk/quadrature.hpp"
#include "bidisk/source.hpp"

namespace bidisk {

/// Data (f, h, g) of Delta^2 Phi = g in D, Phi = f and d_n Phi = h on T, with
/// d_n the inward normal derivative (-d/dr).
struct BiharmonicProblem {
    BoundaryFunction f;
    BoundaryFunction h;
    SourceFunction g;
    QuadratureConfig quad;
};

struct SupNorms {
    double f_sup = 0.0;
    double fh_sup = 0.0; // ||f + h||
    double g_sup = 0.0;
};

SupNorms sup_norms(const BiharmonicProblem& p);

/// (1/2pi) int K(z e^{-i theta}) b(e^{i theta}) dtheta for K one of P, H0, K2, F0.
cplx boundary_transform(KernelKind kind, const BoundaryFunction& b, const DiskPoint& z,
                        const QuadratureConfig& cfg);

/// Wirtinger derivatives of P[b] or K2[b], differentiated under the integral.
/// Throws std::invalid_argument for H0 and F0.
WirtingerPair boundary_transform_gradient(KernelKind kind, const BoundaryFunction& b, const DiskPoint& z,
                                          const QuadratureConfig& cfg);

/// Quantities integrated against g in a single pass over the disk rule centred
/// at z. All are means over D (normalised area measure).
struct GreenMoments {
    cplx potential;    // G[g](z)      = (1/16) mean G(z,.) g
    cplx dz;           // G[g]_z(z)    = (1/16) mean G_z(z,.) g
    cplx dzbar;        // G[g]_zbar(z) = (1/16) mean G_zbar(z,.) g
    double abs_dz = 0.0;    // mean |G_z(z,.) g|
    double abs_dzbar = 0.0; // mean |G_zbar(z,.) g|

    GreenMoments operator+(const GreenMoments& o) const {
        return {potential + o.potential, dz + o.dz, dzbar + o.dzbar, abs_dz + o.abs_dz, abs_dzbar + o.abs_dzbar};
    }
    GreenMoments operator*(double s) const {
        return {potential * s, dz * s, dzbar * s, abs_dz * s, abs_dzbar * s};
    }
};

GreenMoments green_moments(const SourceFunction& g, const DiskPoint& z, const QuadratureConfig& cfg);

/// G[g](z) = (1/16) mean_D G(z, w) g(w).
cplx green_potential(const SourceFunction& g, const DiskPoint& z, const QuadratureConfig& cfg);

/// Phi(z) = (1/2)(1-|z|^2) P[f+h](z) + K2[f](z) - G[g](z).
cplx solve_at(const BiharmonicProblem& p, const DiskPoint& z);

/// Phi(z) assembled as F0[f](z) + H0[h](z) - G[g](z).
cplx solve_at_kernel_form(const BiharmonicProblem& p, const DiskPoint& z);

/// (Phi_z, Phi_zbar) from derivative kernels under the integrals.
WirtingerPair solve_wirtinger(const BiharmonicProblem& p, const DiskPoint& z);

/// Delta^2 Phi(z) - g(z) with the 13-point finite-difference bilaplacian of
/// spacing `step`. Throws std::domain_error if |z| > 0.7 or the stencil leaves
/// |z| < 0.9.
cplx pde_residual(const BiharmonicProblem& p, const DiskPoint& z, double step);

/// The 13-point bilaplacian of an arbitrary field.
template <class Fn>
cplx bilaplacian_13(Fn&& field, cplx z, double step) {
    const auto at = [&](int dx, int dy) { return field(z + cplx(dx * step, dy * step)); };
    const cplx centre = at(0, 0);
    const cplx axis1 = at(1, 0) + at(-1, 0) + at(0, 1) + at(0, -1);
    const cplx diag = at(1, 1) + at(1, -1) + at(-1, 1) + at(-1, -1);
    const cplx axis2 = at(2, 0) + at(-2, 0) + at(0, 2) + at(0, -2);
    const double h2 = step * step;
    return (20.0 * centre - 8.0 * axis1 + 2.0 * diag + axis2) / (h2 * h2);
}

} // namespace bidisk
