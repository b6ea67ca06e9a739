#pragma once

#include "bidisk/geometry.hpp"

#include <map>
#include <variant>
#include <vector>

namespace bidisk {

inline constexpr int kMaxFourierDegree = 64;

/// Trigonometric polynomial sum_k c_k e^{ik theta}, |k| <= 64.
struct FourierData {
    std::map<int, cplx> coeffs;
};

/// Piecewise constant: `upper` on theta in [0, pi), `lower` on [pi, 2pi).
struct TwoArcData {
    cplx upper;
    cplx lower;
};

/// N uniform samples at theta_j = 2 pi j / N, read as their trigonometric
/// interpolant (the Nyquist mode is split evenly between +-N/2).
struct SampledData {
    std::vector<cplx> values;
};

/// A function on the unit circle.
class BoundaryFunction {
public:
    using Variant = std::variant<FourierData, TwoArcData, SampledData>;

    static BoundaryFunction fourier(std::map<int, cplx> coeffs);
    static BoundaryFunction constant(cplx value);
    static BoundaryFunction two_arc(cplx upper, cplx lower);
    static BoundaryFunction samples(std::vector<cplx> values);

    const Variant& data() const noexcept { return data_; }
    bool is_fourier() const noexcept { return std::holds_alternative<FourierData>(data_); }
    bool is_two_arc() const noexcept { return std::holds_alternative<TwoArcData>(data_); }
    bool is_samples() const noexcept { return std::holds_alternative<SampledData>(data_); }

    /// Value at e^{i theta}.
    cplx operator()(double theta) const;

    /// Angles in [0, 2pi) where the function may jump; empty for smooth data.
    std::vector<double> breakpoints() const;

    /// Fourier coefficients of the function (exact for fourier and sampled data;
    /// for two-arc data, the modes |k| <= max_degree of the jump function).
    std::map<int, cplx> fourier_coefficients(int max_degree = kMaxFourierDegree) const;

    BoundaryFunction scaled(cplx factor) const;
    BoundaryFunction shifted(cplx offset) const;
    BoundaryFunction conjugated() const;

private:
    explicit BoundaryFunction(Variant data);
    void validate() const;

    Variant data_;
    // Interpolation coefficients for sampled data, k in [-N/2, N/2].
    std::map<int, cplx> sample_modes_;
};

/// Pointwise sum of two boundary functions of the same representation (sampled
/// data must have equal length). Throws std::invalid_argument otherwise.
BoundaryFunction operator+(const BoundaryFunction& a, const BoundaryFunction& b);

/// Estimate of sup |b| on the circle: the maximum over 4096 uniform angles times
/// 1.001 for smooth data, exact for two-arc data.
double sup_norm(const BoundaryFunction& b);

/// Estimate of sup |a + b| on the circle, with the same rules.
double sup_norm_sum(const BoundaryFunction& a, const BoundaryFunction& b);

} // namespace bidisk
