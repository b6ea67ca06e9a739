#include "bidisk/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace bidisk {

SupNorms sup_norms(const BiharmonicProblem& p) {
    return {sup_norm(p.f), sup_norm_sum(p.f, p.h), sup_norm(p.g)};
}

cplx boundary_transform(KernelKind kind, const BoundaryFunction& b, const DiskPoint& z,
                        const QuadratureConfig& cfg) {
    const cplx zv = z.value();
    const auto bp = b.breakpoints();
    const int nodes = circle_nodes_for_radius(cfg, z.modulus());
    return circle_mean(
        [&](double theta) { return detail::kernel_value(kind, zv * std::polar(1.0, -theta)) * b(theta); }, cfg, bp,
        nodes);
}

WirtingerPair boundary_transform_gradient(KernelKind kind, const BoundaryFunction& b, const DiskPoint& z,
                                          const QuadratureConfig& cfg) {
    if (kind != KernelKind::poisson && kind != KernelKind::k2) {
        throw std::invalid_argument("boundary_transform_gradient: only P and K2 kernels are supported");
    }
    const cplx zv = z.value();
    const auto bp = b.breakpoints();
    const int nodes = circle_nodes_for_radius(cfg, z.modulus());
    // Both kernels are real, so d/dzbar of the kernel is the conjugate of d/dz.
    return circle_mean(
        [&](double theta) {
            const cplx e_minus = std::polar(1.0, -theta);
            const cplx kz = kind == KernelKind::poisson ? detail::poisson_gradient_value(zv, e_minus)
                                                        : detail::k2_gradient_value(zv, e_minus);
            const cplx v = b(theta);
            return WirtingerPair{kz * v, std::conj(kz) * v};
        },
        cfg, bp, nodes);
}

GreenMoments green_moments(const SourceFunction& g, const DiskPoint& z, const QuadratureConfig& cfg) {
    if (g.is_zero()) {
        return {};
    }
    const cplx zv = z.value();
    GreenMoments m = disk_mean_about(
        zv,
        [&](cplx w) {
            const cplx gw = g(w);
            const double gv = detail::green_value(zv, w);
            const cplx gz = detail::green_dz(zv, w);
            const cplx a = gz * gw;
            const cplx b = std::conj(gz) * gw;
            return GreenMoments{gv * gw, a, b, std::abs(a), std::abs(b)};
        },
        cfg);
    m.potential /= 16.0;
    m.dz /= 16.0;
    m.dzbar /= 16.0;
    return m;
}

cplx green_potential(const SourceFunction& g, const DiskPoint& z, const QuadratureConfig& cfg) {
    if (g.is_zero()) {
        return {};
    }
    const cplx zv = z.value();
    return disk_mean_about(zv, [&](cplx w) { return detail::green_value(zv, w) * g(w); }, cfg) / 16.0;
}

cplx solve_at(const BiharmonicProblem& p, const DiskPoint& z) {
    const double s = 1.0 - z.modulus_sq();
    const cplx harmonic = boundary_transform(KernelKind::poisson, p.f, z, p.quad) +
                          boundary_transform(KernelKind::poisson, p.h, z, p.quad);
    return 0.5 * s * harmonic + boundary_transform(KernelKind::k2, p.f, z, p.quad) -
           green_potential(p.g, z, p.quad);
}

cplx solve_at_kernel_form(const BiharmonicProblem& p, const DiskPoint& z) {
    return boundary_transform(KernelKind::f0, p.f, z, p.quad) + boundary_transform(KernelKind::h0, p.h, z, p.quad) -
           green_potential(p.g, z, p.quad);
}

WirtingerPair solve_wirtinger(const BiharmonicProblem& p, const DiskPoint& z) {
    const cplx zv = z.value();
    const double s = 1.0 - z.modulus_sq();
    const cplx harmonic = boundary_transform(KernelKind::poisson, p.f, z, p.quad) +
                          boundary_transform(KernelKind::poisson, p.h, z, p.quad);
    const WirtingerPair dharm = boundary_transform_gradient(KernelKind::poisson, p.f, z, p.quad) +
                                boundary_transform_gradient(KernelKind::poisson, p.h, z, p.quad);
    const WirtingerPair dk2 = boundary_transform_gradient(KernelKind::k2, p.f, z, p.quad);
    const GreenMoments gm = green_moments(p.g, z, p.quad);
    WirtingerPair out;
    out.dz = 0.5 * (s * dharm.dz - std::conj(zv) * harmonic) + dk2.dz - gm.dz;
    out.dzbar = 0.5 * (s * dharm.dzbar - zv * harmonic) + dk2.dzbar - gm.dzbar;
    return out;
}

cplx pde_residual(const BiharmonicProblem& p, const DiskPoint& z, double step) {
    if (z.modulus() > 0.7) {
        throw std::domain_error("pde_residual: |z| must be <= 0.7");
    }
    if (!(step > 0.0) || z.modulus() + 2.0 * step >= 0.9) {
        throw std::domain_error("pde_residual: 13-point stencil leaves |z| < 0.9");
    }
    const cplx lap2 = bilaplacian_13([&](cplx w) { return solve_at(p, DiskPoint(w)); }, z.value(), step);
    return lap2 - p.g(z.value());
}

} // namespace bidisk
