#include "bidisk/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace bidisk {

namespace {

constexpr double kPi = std::numbers::pi;

struct TheoremName {
    TheoremId id;
    std::string_view name;
};

constexpr std::array<TheoremName, 10> kTheoremNames{{
    {TheoremId::harm_schwarz, "harm"},
    {TheoremId::t2_schwarz, "t2"},
    {TheoremId::t2_schwarz_pick, "t2-pick"},
    {TheoremId::main_schwarz, "main"},
    {TheoremId::gradient_bound, "gradient"},
    {TheoremId::green_deviation, "green-dev"},
    {TheoremId::green_gradient_l1, "green-l1"},
    {TheoremId::h0_deviation, "h0-dev"},
    {TheoremId::lambda_bound, "lambda"},
    {TheoremId::t2_gradient_deviation, "t2-grad-dev"},
}};

cplx circle_average(const BoundaryFunction& b, const QuadratureConfig& cfg) {
    const auto bp = b.breakpoints();
    return circle_mean([&](double t) { return b(t); }, cfg, bp);
}

} // namespace

std::string_view to_string(TheoremId id) {
    for (const auto& entry : kTheoremNames) {
        if (entry.id == id) return entry.name;
    }
    return "?";
}

std::optional<TheoremId> theorem_from_string(std::string_view name) {
    for (const auto& entry : kTheoremNames) {
        if (entry.name == name) return entry.id;
    }
    return std::nullopt;
}

BoundCheckRecord make_record(TheoremId id, cplx z, double lhs, double rhs) {
    const double margin = rhs - lhs;
    return {id, z, lhs, rhs, margin, margin >= -kViolationSlack};
}

BoundCheckRecord check_harmonic_schwarz(const BoundaryFunction& data, const DiskPoint& z,
                                        const QuadratureConfig& cfg) {
    const double M = sup_norm(data);
    const double r = z.modulus();
    const double r2 = r * r;
    const cplx u0 = circle_average(data, cfg);
    const cplx uz = boundary_transform(KernelKind::poisson, data, z, cfg);
    const double lhs = std::abs(uz - (1.0 - r2) / (1.0 + r2) * u0);
    const double rhs = 4.0 / kPi * std::atan(r) * M;
    return make_record(TheoremId::harm_schwarz, z.value(), lhs, rhs);
}

BoundCheckRecord check_t2_schwarz(const BoundaryFunction& ustar, const DiskPoint& z, const QuadratureConfig& cfg) {
    const double M = sup_norm(ustar);
    const double r = z.modulus();
    const double r2 = r * r;
    const double s = 1.0 - r2;
    const cplx u0 = boundary_transform(KernelKind::k2, ustar, DiskPoint(0.0, 0.0), cfg);
    const cplx uz = boundary_transform(KernelKind::k2, ustar, z, cfg);
    const double lhs = std::abs(uz - s * s * s / ((1.0 + r2) * (1.0 + r2)) * u0);
    const double rhs = 2.0 / kPi * ((1.0 + r2) * std::atan(r) + r * s / (1.0 + r2)) * M;
    return make_record(TheoremId::t2_schwarz, z.value(), lhs, rhs);
}

BoundCheckRecord check_t2_schwarz_pick(const BoundaryFunction& ustar, const DiskPoint& z,
                                       const QuadratureConfig& cfg) {
    const double M = sup_norm(ustar);
    const double r = z.modulus();
    const double r2 = r * r;
    const WirtingerPair d = boundary_transform_gradient(KernelKind::k2, ustar, z, cfg);
    const double lhs = derivative_stats(d).norm;
    double factor = (2.0 + 5.0 * r) * (1.0 + r2) / (1.0 - r2);
    if (r == 0.0) {
        factor = std::min(factor, 4.0 / kPi);
    }
    return make_record(TheoremId::t2_schwarz_pick, z.value(), lhs, factor * M);
}

BoundCheckRecord check_main_schwarz(const BiharmonicProblem& p, const SupNorms& norms, const DiskPoint& z) {
    const double r = z.modulus();
    const double r2 = r * r;
    const double s = 1.0 - r2;
    const cplx pf0 = circle_average(p.f, p.quad);
    const cplx pfh0 = pf0 + circle_average(p.h, p.quad);
    const cplx phi = solve_at(p, z);
    const double lhs =
        std::abs(phi - 0.5 * s * s * s / ((1.0 + r2) * (1.0 + r2)) * pf0 - 0.5 * s * s / (1.0 + r2) * pfh0);
    const double rhs = 2.0 / kPi * s * std::atan(r) * norms.fh_sup +
                       2.0 / kPi * ((1.0 + r2) * std::atan(r) + r * s / (1.0 + r2)) * norms.f_sup +
                       s * s / 64.0 * norms.g_sup;
    return make_record(TheoremId::main_schwarz, z.value(), lhs, rhs);
}

BoundCheckRecord check_gradient_bound(const BiharmonicProblem& p, const SupNorms& norms, const DiskPoint& z) {
    const double r = z.modulus();
    const double r2 = r * r;
    const double lhs = derivative_stats(solve_wirtinger(p, z)).norm;
    const double f_factor = r == 0.0 ? 4.0 / kPi : (2.0 + 5.0 * r) / (1.0 - r2) * (1.0 + r2);
    const double rhs = f_factor * norms.f_sup + (2.0 / kPi + r) * norms.fh_sup + 23.0 / 48.0 * norms.g_sup;
    return make_record(TheoremId::gradient_bound, z.value(), lhs, rhs);
}

std::vector<BoundCheckRecord> check_green_deviation(const SourceFunction& g, double g_sup, const DiskPoint& z,
                                                    const QuadratureConfig& cfg) {
    const double r = z.modulus();
    const GreenMoments at_z = green_moments(g, z, cfg);
    const GreenMoments at_0 = green_moments(g, DiskPoint(0.0, 0.0), cfg);
    const double dev_rhs = ((1.0 - r * r) / 16.0 + 43.0 / 120.0) * g_sup * r;
    return {
        make_record(TheoremId::green_deviation, z.value(), std::abs(at_z.dz - at_0.dz), dev_rhs),
        make_record(TheoremId::green_deviation, z.value(), std::abs(at_z.dzbar - at_0.dzbar), dev_rhs),
        make_record(TheoremId::green_gradient_l1, z.value(), std::max(at_z.abs_dz, at_z.abs_dzbar),
                    23.0 / 6.0 * g_sup),
    };
}

BoundCheckRecord check_h0_deviation(const BoundaryFunction& f, const BoundaryFunction& h, double fh_sup,
                                    const DiskPoint& z, const QuadratureConfig& cfg) {
    const auto h0_gradient = [&](const DiskPoint& w) {
        const double s = 1.0 - w.modulus_sq();
        const cplx harmonic =
            boundary_transform(KernelKind::poisson, f, w, cfg) + boundary_transform(KernelKind::poisson, h, w, cfg);
        const WirtingerPair d = boundary_transform_gradient(KernelKind::poisson, f, w, cfg) +
                                boundary_transform_gradient(KernelKind::poisson, h, w, cfg);
        return WirtingerPair{0.5 * (s * d.dz - std::conj(w.value()) * harmonic),
                             0.5 * (s * d.dzbar - w.value() * harmonic)};
    };
    const WirtingerPair at_z = h0_gradient(z);
    const WirtingerPair at_0 = h0_gradient(DiskPoint(0.0, 0.0));
    const double lhs = std::abs(at_z.dz - at_0.dz) + std::abs(at_z.dzbar - at_0.dzbar);
    const double r = z.modulus();
    const double q = 1.0 - r;
    const double rhs = fh_sup * r + 2.0 * fh_sup * r / kPi * ((2.0 - r) * (1.0 + r * r) / (q * q) + r);
    return make_record(TheoremId::h0_deviation, z.value(), lhs, rhs);
}

BoundCheckRecord check_t2_gradient_deviation(const CoefficientSequence& s, double M, const DiskPoint& z) {
    const WirtingerPair at_z = t_alpha_wirtinger(s, z);
    const WirtingerPair at_0 = t_alpha_wirtinger(s, DiskPoint(0.0, 0.0));
    const double lhs = std::abs(at_z.dz - at_0.dz) + std::abs(at_z.dzbar - at_0.dzbar);
    const double r = z.modulus();
    const double rhs = t2_gradient_deviation_bound(M, r) + 2.0 * std::abs(s.coeff(0)) * r;
    return make_record(TheoremId::t2_gradient_deviation, z.value(), lhs, rhs);
}

std::optional<BiharmonicProblem> normalize_problem(const BiharmonicProblem& p) {
    const DiskPoint origin(0.0, 0.0);
    const cplx phi0 = solve_at(p, origin);
    const double jac = derivative_stats(solve_wirtinger(p, origin)).jacobian;
    if (std::abs(jac) < 1e-12) {
        return std::nullopt;
    }
    BiharmonicProblem q = p;
    cplx offset = phi0;
    if (jac < 0.0) {
        q.f = p.f.conjugated();
        q.h = p.h.conjugated();
        q.g = p.g.conjugated();
        offset = std::conj(phi0);
    }
    const double scale = 1.0 / std::sqrt(std::abs(jac));
    q.f = q.f.shifted(-offset).scaled(scale);
    q.h = q.h.scaled(scale);
    q.g = q.g.scaled(scale);
    return q;
}

BoundCheckRecord check_lambda_bound(const BiharmonicProblem& normalized, const SupNorms& norms) {
    const DerivativeSummary d = derivative_stats(solve_wirtinger(normalized, DiskPoint(0.0, 0.0)));
    const double lhs = 1.0 / (4.0 / kPi * norms.f_sup + 2.0 / kPi * norms.fh_sup + 23.0 / 48.0 * norms.g_sup);
    return make_record(TheoremId::lambda_bound, cplx{}, lhs, d.lambda);
}

BoundaryQuotientReport boundary_quotient_scan(const BiharmonicProblem& p, cplx eta, const std::vector<double>& radii) {
    if (std::abs(std::abs(eta) - 1.0) > 1e-12) {
        throw std::invalid_argument("boundary_quotient_scan: eta must have unit modulus");
    }
    BoundaryQuotientReport report;
    report.eta = eta;
    const double theta = std::arg(eta);
    const cplx phi_eta = p.f(theta < 0.0 ? theta + 2.0 * kPi : theta);
    report.lower_bound = 1.0 - sup_norm_sum(p.f, p.h);
    report.min_quotient = std::numeric_limits<double>::infinity();
    for (double r : radii) {
        if (!(r > 0.0 && r < 1.0)) {
            throw std::invalid_argument("boundary_quotient_scan: radii must lie in (0, 1)");
        }
        const double q = std::abs(phi_eta - solve_at(p, DiskPoint(r * eta))) / (1.0 - r);
        report.samples.push_back({r, q});
        for (double tracked : {0.9, 0.99, 0.999}) {
            if (std::abs(r - tracked) < 1e-12) {
                report.min_quotient = std::min(report.min_quotient, q);
            }
        }
    }
    if (!std::isfinite(report.min_quotient)) {
        for (const auto& s : report.samples) {
            report.min_quotient = std::min(report.min_quotient, s.quotient);
        }
    }
    report.consistent = report.min_quotient >= report.lower_bound - 0.05;
    return report;
}

} // namespace bidisk
