#include "bidisk/harness.hpp"

#include "bidisk/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

namespace bidisk {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

cplx normal_complex(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    const double re = n(rng);
    const double im = n(rng);
    return {re, im};
}

BoundaryFunction random_fourier(std::mt19937_64& rng, int degree, double target) {
    std::map<int, cplx> coeffs;
    for (int k = -degree; k <= degree; ++k) {
        coeffs[k] = normal_complex(rng);
    }
    const BoundaryFunction raw = BoundaryFunction::fourier(coeffs);
    if (target == 0.0) {
        return BoundaryFunction::fourier({});
    }
    return raw.scaled(target / sup_norm(raw));
}

SourceFunction random_source(std::mt19937_64& rng, int degree, double target) {
    std::vector<PolyTerm> terms;
    for (int total = 0; total <= degree; ++total) {
        for (int i = 0; i <= total; ++i) {
            terms.push_back({i, total - i, normal_complex(rng)});
        }
    }
    if (target == 0.0) {
        return SourceFunction::constant(0.0);
    }
    if (degree == 0) {
        const cplx c = terms.front().c;
        return SourceFunction::constant(c * (target / std::abs(c)));
    }
    const SourceFunction raw = SourceFunction::poly(std::move(terms));
    return raw.scaled(target / sup_norm(raw));
}

// Computes a check at the configured rule and, if any record fails, once more
// with doubled node counts.
std::vector<BoundCheckRecord> with_retry(const std::function<std::vector<BoundCheckRecord>(const QuadratureConfig&)>& check,
                                         const QuadratureConfig& cfg) {
    auto records = check(cfg);
    const bool failed = std::any_of(records.begin(), records.end(), [](const auto& r) { return !r.holds; });
    if (failed) {
        records = check(cfg.refined());
    }
    return records;
}

bool wants(const std::vector<TheoremId>& list, TheoremId id) {
    return std::find(list.begin(), list.end(), id) != list.end();
}

std::vector<BoundCheckRecord> problem_records(const SweepOptions& opt, std::size_t index) {
    const std::uint64_t pseed = splitmix64(opt.seed * 0x100000001b3ULL + index);
    std::mt19937_64 rng(pseed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const SupNorms target{0.2 + 1.8 * unit(rng), 0.2 + 1.8 * unit(rng), 0.2 + 1.8 * unit(rng)};
    const int degree = opt.degree <= 0 ? 0 : 1 + static_cast<int>(index % static_cast<std::size_t>(opt.degree));
    BiharmonicProblem p = random_problem(splitmix64(pseed), degree, target, opt.quad);
    const SupNorms norms = sup_norms(p);

    // Schwarz data with sup-norm one; every fourth problem uses a two-arc u*.
    const BoundaryFunction fh = p.f + p.h;
    const double fh_norm = sup_norm(fh);
    const BoundaryFunction harm_data = fh_norm > 0.0 ? fh.scaled(1.0 / fh_norm) : fh;
    BoundaryFunction ustar = norms.f_sup > 0.0 ? p.f.scaled(1.0 / norms.f_sup) : p.f;
    if (index % 4 == 3) {
        ustar = BoundaryFunction::two_arc(std::polar(unit(rng), 2.0 * kPi * unit(rng)),
                                          std::polar(unit(rng), 2.0 * kPi * unit(rng)));
    }
    const CoefficientSequence series = t2_coefficients_from_boundary(p.f.fourier_coefficients());
    const double series_sup = t2_sup_estimate(series);

    std::vector<cplx> points{cplx{}};
    while (points.size() < opt.points_per_problem) {
        points.push_back(std::polar(opt.max_radius * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng)));
    }
    points.resize(opt.points_per_problem);

    std::vector<BoundCheckRecord> out;
    const auto add = [&](std::vector<BoundCheckRecord> recs) { out.insert(out.end(), recs.begin(), recs.end()); };
    const auto with_quad = [&p](const QuadratureConfig& q) {
        BiharmonicProblem copy = p;
        copy.quad = q;
        return copy;
    };

    for (const cplx zv : points) {
        const DiskPoint z(zv);
        if (wants(opt.theorems, TheoremId::harm_schwarz)) {
            add(with_retry([&](const QuadratureConfig& q) { return std::vector{check_harmonic_schwarz(harm_data, z, q)}; },
                           opt.quad));
        }
        if (wants(opt.theorems, TheoremId::t2_schwarz)) {
            add(with_retry([&](const QuadratureConfig& q) { return std::vector{check_t2_schwarz(ustar, z, q)}; },
                           opt.quad));
        }
        if (wants(opt.theorems, TheoremId::t2_schwarz_pick)) {
            add(with_retry([&](const QuadratureConfig& q) { return std::vector{check_t2_schwarz_pick(ustar, z, q)}; },
                           opt.quad));
        }
        if (wants(opt.theorems, TheoremId::main_schwarz)) {
            add(with_retry([&](const QuadratureConfig& q) { return std::vector{check_main_schwarz(with_quad(q), norms, z)}; },
                           opt.quad));
        }
        if (wants(opt.theorems, TheoremId::gradient_bound)) {
            add(with_retry(
                [&](const QuadratureConfig& q) { return std::vector{check_gradient_bound(with_quad(q), norms, z)}; },
                opt.quad));
        }
        if (wants(opt.theorems, TheoremId::green_deviation) || wants(opt.theorems, TheoremId::green_gradient_l1)) {
            auto recs = with_retry([&](const QuadratureConfig& q) { return check_green_deviation(p.g, norms.g_sup, z, q); },
                                   opt.quad);
            for (const auto& r : recs) {
                if (wants(opt.theorems, r.theorem)) out.push_back(r);
            }
        }
        if (wants(opt.theorems, TheoremId::h0_deviation)) {
            add(with_retry(
                [&](const QuadratureConfig& q) { return std::vector{check_h0_deviation(p.f, p.h, norms.fh_sup, z, q)}; },
                opt.quad));
        }
        if (wants(opt.theorems, TheoremId::t2_gradient_deviation)) {
            out.push_back(check_t2_gradient_deviation(series, series_sup, z));
        }
    }
    if (wants(opt.theorems, TheoremId::lambda_bound)) {
        add(with_retry(
            [&](const QuadratureConfig& q) -> std::vector<BoundCheckRecord> {
                const auto normalized = normalize_problem(with_quad(q));
                if (!normalized) return {};
                return {check_lambda_bound(*normalized, sup_norms(*normalized))};
            },
            opt.quad));
    }
    return out;
}

} // namespace

BiharmonicProblem random_problem(std::uint64_t seed, int degree, const SupNorms& target, const QuadratureConfig& quad) {
    if (degree < 0 || degree > kMaxFourierDegree) {
        throw std::invalid_argument("random_problem: degree must lie in [0, 64]");
    }
    std::mt19937_64 rng(seed);
    const BoundaryFunction f = random_fourier(rng, degree, target.f_sup);
    const BoundaryFunction fh = random_fourier(rng, degree, target.fh_sup);
    const SourceFunction g = random_source(rng, std::min(degree, 2), target.g_sup);
    return {f, fh + f.scaled(-1.0), g, quad};
}

std::size_t SweepReport::violations() const {
    std::size_t n = 0;
    for (const auto& s : summaries) n += s.violations;
    return n;
}

const TheoremSummary* SweepReport::summary(TheoremId id) const {
    for (const auto& s : summaries) {
        if (s.theorem == id) return &s;
    }
    return nullptr;
}

std::vector<TheoremSummary> summarize(const std::vector<BoundCheckRecord>& records,
                                      const std::vector<TheoremId>& theorems) {
    std::vector<TheoremSummary> out;
    for (TheoremId id : theorems) {
        TheoremSummary s;
        s.theorem = id;
        for (const auto& r : records) {
            if (r.theorem != id) continue;
            ++s.samples;
            if (!r.holds) ++s.violations;
            s.min_margin = std::min(s.min_margin, r.margin);
        }
        out.push_back(s);
    }
    return out;
}

SweepReport run_sweep(const SweepOptions& options) {
    options.quad.validate();
    std::vector<std::vector<BoundCheckRecord>> per_problem(options.problems);
    parallel_for(
        options.problems, [&](std::size_t i) { per_problem[i] = problem_records(options, i); }, options.threads);
    SweepReport report;
    for (auto& recs : per_problem) {
        report.records.insert(report.records.end(), recs.begin(), recs.end());
    }
    report.summaries = summarize(report.records, options.theorems);
    return report;
}

SharpnessReport sharpness_demo(const QuadratureConfig& cfg) {
    const BoundaryFunction chi = BoundaryFunction::two_arc(1.0, -1.0);
    const DiskPoint origin(0.0, 0.0);
    QuadratureConfig q = cfg;
    q.per_arc = true;
    SharpnessReport rep;
    rep.u0 = boundary_transform(KernelKind::k2, chi, origin, q);
    const WirtingerPair d = boundary_transform_gradient(KernelKind::k2, chi, origin, q);
    rep.uz0 = d.dz;
    rep.uzbar0 = d.dzbar;
    rep.gradient_norm = derivative_stats(d).norm;
    rep.uz_error = std::abs(rep.uz0 - cplx(0.0, -2.0 / kPi));
    rep.norm_error = std::abs(rep.gradient_norm - 4.0 / kPi);
    rep.pass = rep.uz_error < 1e-8 && rep.norm_error < 1e-8;
    return rep;
}

} // namespace bidisk
