#pragma once

#include <complex>

namespace bidisk {

using cplx = std::complex<double>;

enum class Closure { open, closed };

/// A point of the unit disk. Construction validates |z| < 1 (open) or
/// |z| <= 1 (closed) and throws std::domain_error otherwise.
class DiskPoint {
public:
    explicit DiskPoint(cplx z, Closure closure = Closure::open);
    DiskPoint(double re, double im, Closure closure = Closure::open)
        : DiskPoint(cplx{re, im}, closure) {}

    cplx value() const noexcept { return z_; }
    double re() const noexcept { return z_.real(); }
    double im() const noexcept { return z_.imag(); }
    double modulus() const noexcept { return std::abs(z_); }
    double modulus_sq() const noexcept { return std::norm(z_); }
    Closure closure() const noexcept { return closure_; }

private:
    cplx z_;
    Closure closure_;
};

/// Values of the Wirtinger derivatives d/dz and d/dzbar at a point.
struct WirtingerPair {
    cplx dz{};
    cplx dzbar{};
};

/// Singular-value statistics of the real differential.
struct DerivativeSummary {
    double norm = 0.0;     // |dz| + |dzbar|
    double lambda = 0.0;   // | |dz| - |dzbar| |
    double jacobian = 0.0; // |dz|^2 - |dzbar|^2
};

DerivativeSummary derivative_stats(const WirtingerPair& w);

inline WirtingerPair operator+(WirtingerPair a, const WirtingerPair& b) {
    return {a.dz + b.dz, a.dzbar + b.dzbar};
}
inline WirtingerPair operator-(WirtingerPair a, const WirtingerPair& b) {
    return {a.dz - b.dz, a.dzbar - b.dzbar};
}
inline WirtingerPair operator*(cplx s, const WirtingerPair& a) {
    return {s * a.dz, s * a.dzbar};
}
inline WirtingerPair operator*(const WirtingerPair& a, double s) {
    return {a.dz * s, a.dzbar * s};
}

} // namespace bidisk
