#include "bidisk/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bidisk {

DiskPoint::DiskPoint(cplx z, Closure closure) : z_(z), closure_(closure) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::domain_error("DiskPoint: non-finite coordinate");
    }
    const double m2 = std::norm(z);
    const bool ok = closure == Closure::open ? m2 < 1.0 : m2 <= 1.0;
    if (!ok) {
        throw std::domain_error("DiskPoint: |z|^2 = " + std::to_string(m2) +
                                (closure == Closure::open ? " is not < 1" : " is not <= 1"));
    }
}

DerivativeSummary derivative_stats(const WirtingerPair& w) {
    auto finite = [](cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); };
    if (!finite(w.dz) || !finite(w.dzbar)) {
        throw std::invalid_argument("derivative_stats: non-finite Wirtinger derivative");
    }
    const double a = std::abs(w.dz);
    const double b = std::abs(w.dzbar);
    return {a + b, std::abs(a - b), (a - b) * (a + b)};
}

} // namespace bidisk
