#pragma once

#include "bidisk/bounds.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace bidisk {

/// Deterministic pseudo-random problem: Fourier data f and f+h of the given
/// degree, and a polynomial source g of total degree min(degree, 2). Each
/// component is rescaled so its sup-norm estimate equals the target (a zero
/// target gives a zero component). Degree 0 gives constant data.
BiharmonicProblem random_problem(std::uint64_t seed, int degree, const SupNorms& target,
                                 const QuadratureConfig& quad = {});

struct SweepOptions {
    std::vector<TheoremId> theorems;
    std::size_t problems = 500;
    std::size_t points_per_problem = 20;
    std::uint64_t seed = 0;
    int degree = 8;
    double max_radius = 0.95;
    QuadratureConfig quad;
    int threads = 0;
};

struct TheoremSummary {
    TheoremId theorem = TheoremId::harm_schwarz;
    std::size_t samples = 0;
    std::size_t violations = 0;
    double min_margin = std::numeric_limits<double>::infinity();
};

struct SweepReport {
    std::vector<BoundCheckRecord> records;
    std::vector<TheoremSummary> summaries;

    std::size_t violations() const;
    const TheoremSummary* summary(TheoremId id) const;
};

/// Evaluates the selected inequalities over `problems` random problems and
/// `points_per_problem` points each (the first point is the origin). A record
/// that fails at the configured quadrature is recomputed once with both node
/// counts doubled before it is reported.
SweepReport run_sweep(const SweepOptions& options);

/// Per-theorem counts and minimum margins, in the order of `theorems`.
std::vector<TheoremSummary> summarize(const std::vector<BoundCheckRecord>& records,
                                      const std::vector<TheoremId>& theorems);

struct SharpnessReport {
    cplx u0;
    cplx uz0;
    cplx uzbar0;
    double gradient_norm = 0.0; // ||D_U(0)||
    double uz_error = 0.0;      // |U_z(0) + 2i/pi|
    double norm_error = 0.0;    // | ||D_U(0)|| - 4/pi |
    bool pass = false;
};

/// U = K2[chi_upper - chi_lower]: U_z(0) = -2i/pi and ||D_U(0)|| = 4/pi.
SharpnessReport sharpness_demo(const QuadratureConfig& cfg = {});

} // namespace bidisk
