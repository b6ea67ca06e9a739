#pragma once

#include "bidisk/geometry.hpp"

#include <cstdint>
#include <functional>
#include <utility>

namespace bidisk {

struct LandauResult {
    double r0 = 0.0;
    double residual = 0.0;
    std::pair<double, double> bracket{0.0, 0.0};
    double R0_lower = 0.0;
};

/// Finds the sign change of a monotone function on [lo, hi] by bisection until
/// the bracket stops shrinking or is narrower than `width`. Throws
/// std::domain_error if fn(lo) and fn(hi) have the same sign.
LandauResult bisect_root(const std::function<double(double)>& fn, double lo, double hi, double width = 1e-14);

/// pi/(4M) - (4/pi) M r (-r^3 + 3r^2 - 3r + 3)/(1-r)^3, strictly decreasing in r.
double landau_t2_residual(double M, double r);

/// Univalence radius for T2-harmonic u with u(0) = 0, J_u(0) = 1, sup|u| <= M.
/// Requires M >= pi/4 (std::domain_error otherwise).
LandauResult landau_t2(double M);

/// sigma(r) = (M1 + M2 + 101/120 M3) r + (2 M2 r/pi)[(2-r)(1+r^2)/(1-r)^2 + r]
///          + 4 M1 r (-r^3 + 3r^2 - 3r + 3)/(pi (1-r)^3).
double sigma_eval(double M1, double M2, double M3, double r);

/// ((4/pi) M1 + (2/pi) M2 + (23/48) M3) sigma(r) - 1, increasing in r.
double landau_ibdp_residual(double M1, double M2, double M3, double r);

/// Univalence radius for normalised solutions of the biharmonic problem.
LandauResult landau_ibdp(double M1, double M2, double M3);

struct UnivalenceProbe {
    std::size_t pairs = 0;
    std::size_t collisions = 0;  // pairs with |map(z1) - map(z2)| <= 1e-14 |z1 - z2|
    double min_ratio = 0.0;      // min |map(z1) - map(z2)| / |z1 - z2|
};

/// Falsification probe for injectivity of `map` on the disk of radius `radius`:
/// evaluates `pairs` random point pairs drawn uniformly from that disk.
UnivalenceProbe univalence_probe(const std::function<cplx(cplx)>& map, double radius, std::size_t pairs,
                                 std::uint64_t seed);

} // namespace bidisk
