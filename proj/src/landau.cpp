#include "bidisk/landau.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace bidisk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLo = 1e-9;
constexpr double kHi = 1.0 - 1e-9;

} // namespace

LandauResult bisect_root(const std::function<double(double)>& fn, double lo, double hi, double width) {
    double flo = fn(lo);
    const double fhi = fn(hi);
    if (flo == 0.0) {
        return {lo, 0.0, {lo, lo}, 0.0};
    }
    if (fhi == 0.0) {
        return {hi, 0.0, {hi, hi}, 0.0};
    }
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::domain_error("bisect_root: no sign change on the bracket");
    }
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double fmid = fn(mid);
        if (fmid == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    // Report the bracket end with the smaller residual.
    const double rlo = fn(lo);
    const double rhi = fn(hi);
    const double r0 = std::abs(rlo) <= std::abs(rhi) ? lo : hi;
    return {r0, std::abs(rlo) <= std::abs(rhi) ? rlo : rhi, {lo, hi}, 0.0};
}

double landau_t2_residual(double M, double r) {
    const double q = 1.0 - r;
    return kPi / (4.0 * M) - 4.0 / kPi * M * r / (q * q * q) * (-r * r * r + 3.0 * r * r - 3.0 * r + 3.0);
}

LandauResult landau_t2(double M) {
    if (!(M >= kPi / 4.0)) {
        throw std::domain_error("landau_t2: M must be >= pi/4 for J_u(0) = 1 to be attainable");
    }
    LandauResult res = bisect_root([M](double r) { return landau_t2_residual(M, r); }, kLo, kHi);
    const double r = res.r0;
    const double q = 1.0 - r;
    res.R0_lower = 4.0 * M * r * r / (kPi * q * q * q) * (-0.8 * r * r * r + 2.25 * r * r - 2.0 * r + 1.5);
    return res;
}

double sigma_eval(double M1, double M2, double M3, double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::domain_error("sigma_eval: r must lie in [0, 1)");
    }
    const double q = 1.0 - r;
    return (M1 + M2 + 101.0 / 120.0 * M3) * r + 2.0 * M2 * r / kPi * ((2.0 - r) * (1.0 + r * r) / (q * q) + r) +
           4.0 * M1 * r / (kPi * q * q * q) * (-r * r * r + 3.0 * r * r - 3.0 * r + 3.0);
}

double landau_ibdp_residual(double M1, double M2, double M3, double r) {
    return (4.0 / kPi * M1 + 2.0 / kPi * M2 + 23.0 / 48.0 * M3) * sigma_eval(M1, M2, M3, r) - 1.0;
}

LandauResult landau_ibdp(double M1, double M2, double M3) {
    if (M1 < 0.0 || M2 < 0.0 || M3 < 0.0 || !(M1 > 0.0 || M2 > 0.0 || M3 > 0.0)) {
        throw std::domain_error("landau_ibdp: the bounds must be nonnegative with at least one positive");
    }
    LandauResult res =
        bisect_root([&](double r) { return landau_ibdp_residual(M1, M2, M3, r); }, kLo, kHi);
    res.R0_lower = res.r0 / (8.0 / kPi * M1 + 4.0 / kPi * M2 + 23.0 / 24.0 * M3);
    return res;
}

UnivalenceProbe univalence_probe(const std::function<cplx(cplx)>& map, double radius, std::size_t pairs,
                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto draw = [&] {
        return std::polar(radius * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
    };
    UnivalenceProbe probe;
    probe.min_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pairs; ++i) {
        const cplx z1 = draw();
        const cplx z2 = draw();
        const double dz = std::abs(z1 - z2);
        if (dz == 0.0) {
            continue;
        }
        const double ratio = std::abs(map(z1) - map(z2)) / dz;
        ++probe.pairs;
        if (ratio <= 1e-14) {
            ++probe.collisions;
        }
        probe.min_ratio = std::min(probe.min_ratio, ratio);
    }
    return probe;
}

} // namespace bidisk
