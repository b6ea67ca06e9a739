#pragma once

#include "bidisk/geometry.hpp"

#include <variant>
#include <vector>

namespace bidisk {

struct ConstantSource {
    cplx value;
};

/// sum_n coeffs[n] |w|^{2n}
struct RadialSource {
    std::vector<cplx> coeffs;
};

/// sum c (Re w)^i (Im w)^j over terms with i + j <= 6.
struct PolyTerm {
    int i = 0;
    int j = 0;
    cplx c;
};
struct PolySource {
    std::vector<PolyTerm> terms;
};

inline constexpr int kMaxPolyDegree = 6;

/// Right-hand side g of the biharmonic equation, given in closed form.
class SourceFunction {
public:
    using Variant = std::variant<ConstantSource, RadialSource, PolySource>;

    static SourceFunction constant(cplx value);
    static SourceFunction radial(std::vector<cplx> coeffs);
    static SourceFunction poly(std::vector<PolyTerm> terms);

    const Variant& data() const noexcept { return data_; }

    cplx operator()(cplx w) const;

    bool is_zero() const;

    SourceFunction scaled(cplx factor) const;
    SourceFunction conjugated() const;

private:
    explicit SourceFunction(Variant data);

    Variant data_;
};

/// Estimate of sup |g| over the closed disk: exact for constants, otherwise the
/// maximum over a 128 x 256 polar grid (radii up to 1) times 1.001.
double sup_norm(const SourceFunction& g);

} // namespace bidisk
