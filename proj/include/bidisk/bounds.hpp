#pragma once

#include "bidisk/solver.hpp"
#include "bidisk/talpha.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace bidisk {

enum class TheoremId {
    harm_schwarz,          // |u(z) - (1-|z|^2)/(1+|z|^2) u(0)| <= (4/pi) arctan|z|
    t2_schwarz,            // T2-harmonic Schwarz lemma
    t2_schwarz_pick,       // ||D_u(z)|| <= (2+5|z|)(1+|z|^2)/(1-|z|^2), 4/pi at 0
    main_schwarz,          // Schwarz lemma for solutions of the biharmonic problem
    gradient_bound,        // ||D_Phi(z)|| bound
    green_deviation,       // |G[g]_z(z) - G[g]_z(0)| (and zbar) deviation bound
    green_gradient_l1,     // mean |G_z(z,.) g| <= 23/6 ||g||
    h0_deviation,          // H0[f+h] gradient deviation bound
    lambda_bound,          // lambda(D_Phi(0)) lower bound for normalised solutions
    t2_gradient_deviation, // series gradient deviation bound for T2 fields
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);

inline constexpr double kViolationSlack = 1e-9;

/// One evaluated inequality lhs <= rhs at z.
struct BoundCheckRecord {
    TheoremId theorem = TheoremId::harm_schwarz;
    cplx z;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // rhs - lhs
    bool holds = true;   // margin >= -kViolationSlack
};

BoundCheckRecord make_record(TheoremId id, cplx z, double lhs, double rhs);

// The Schwarz-type inequalities are homogeneous in the data, so the checks
// below scale each right-hand side by the sup-norm estimate of the data rather
// than requiring it to be at most one.

/// u = P[data]; lhs = |u(z) - (1-|z|^2)/(1+|z|^2) u(0)|, rhs = (4/pi) arctan|z| ||data||.
BoundCheckRecord check_harmonic_schwarz(const BoundaryFunction& data, const DiskPoint& z,
                                        const QuadratureConfig& cfg);

/// u = K2[ustar]; lhs = |u(z) - (1-|z|^2)^3/(1+|z|^2)^2 u(0)|,
/// rhs = (2/pi)[(1+|z|^2) arctan|z| + |z|(1-|z|^2)/(1+|z|^2)] ||ustar||.
BoundCheckRecord check_t2_schwarz(const BoundaryFunction& ustar, const DiskPoint& z, const QuadratureConfig& cfg);

/// u = K2[ustar]; lhs = ||D_u(z)||, rhs = (2+5|z|)(1+|z|^2)/(1-|z|^2) ||ustar||,
/// and 4/pi ||ustar|| at z = 0.
BoundCheckRecord check_t2_schwarz_pick(const BoundaryFunction& ustar, const DiskPoint& z,
                                       const QuadratureConfig& cfg);

BoundCheckRecord check_main_schwarz(const BiharmonicProblem& p, const SupNorms& norms, const DiskPoint& z);

BoundCheckRecord check_gradient_bound(const BiharmonicProblem& p, const SupNorms& norms, const DiskPoint& z);

/// Three records: the G[g]_z and G[g]_zbar deviation bounds
/// ((1-|z|^2)/16 + 43/120) ||g|| |z|, and mean_D |G_z(z,.) g| <= (23/6) ||g||.
std::vector<BoundCheckRecord> check_green_deviation(const SourceFunction& g, double g_sup, const DiskPoint& z,
                                                    const QuadratureConfig& cfg);

/// H = H0[f+h] = (1/2)(1-|z|^2) P[f+h]; lhs = |H_z(z) - H_z(0)| + |H_zbar(z) - H_zbar(0)|,
/// rhs = M2|z| + (2 M2 |z|/pi)[(2-|z|)(1+|z|^2)/(1-|z|)^2 + |z|] with M2 = fh_sup.
BoundCheckRecord check_h0_deviation(const BoundaryFunction& f, const BoundaryFunction& h, double fh_sup,
                                    const DiskPoint& z, const QuadratureConfig& cfg);

/// lhs = |u_z(z) - u_z(0)| + |u_zbar(z) - u_zbar(0)| by termwise differentiation;
/// rhs = t2_gradient_deviation_bound(M, |z|) + 2|c_0||z| (the c_0 (1+|z|^2) part).
BoundCheckRecord check_t2_gradient_deviation(const CoefficientSequence& s, double M, const DiskPoint& z);

/// Rescales a problem to the normalised class Phi(0) = 0, J_Phi(0) = 1
/// (conjugating when J_Phi(0) < 0). Returns nullopt when |J_Phi(0)| < 1e-12.
std::optional<BiharmonicProblem> normalize_problem(const BiharmonicProblem& p);

/// For a normalised problem: lhs = 1/((4/pi)M1 + (2/pi)M2 + (23/48)M3), rhs = lambda(D_Phi(0)).
BoundCheckRecord check_lambda_bound(const BiharmonicProblem& normalized, const SupNorms& norms);

struct QuotientSample {
    double r = 0.0;
    double quotient = 0.0;
};

struct BoundaryQuotientReport {
    cplx eta;
    std::vector<QuotientSample> samples;
    double lower_bound = 0.0;   // 1 - ||f+h||
    double min_quotient = 0.0;  // over r in {0.9, 0.99, 0.999} when present
    bool consistent = false;    // min_quotient >= lower_bound - 0.05
};

/// Radial difference quotients |Phi(eta) - Phi(r eta)|/(1-r), with Phi(eta)
/// taken from the Dirichlet datum f(eta).
BoundaryQuotientReport boundary_quotient_scan(const BiharmonicProblem& p, cplx eta, const std::vector<double>& radii);

} // namespace bidisk
