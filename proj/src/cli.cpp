#include "bidisk/cli.hpp"

#include "bidisk/harness.hpp"
#include "bidisk/kernels.hpp"
#include "bidisk/landau.hpp"
#include "bidisk/parallel.hpp"
#include "bidisk/problem_io.hpp"
#include "bidisk/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>

namespace bidisk::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct QuadFlags {
    std::optional<int> n_theta;
    std::optional<int> n_radial;

    void add(CLI::App* app) {
        app->add_option("--n-theta", n_theta, "angular quadrature nodes");
        app->add_option("--n-radial", n_radial, "radial Gauss-Legendre nodes");
    }
    QuadratureConfig apply(QuadratureConfig q) const {
        if (n_theta) q.n_theta = *n_theta;
        if (n_radial) q.n_radial = *n_radial;
        q.validate();
        return q;
    }
};

struct GridFlags {
    std::string kind = "polar";
    int rings = 10;
    int spokes = 16;
    int nx = 21;
    double max_radius = 0.9;

    void add(CLI::App* app) {
        app->add_option("--grid", kind, "polar or rect")->check(CLI::IsMember({"polar", "rect"}));
        app->add_option("--rings", rings, "polar grid: radii")->check(CLI::PositiveNumber);
        app->add_option("--spokes", spokes, "polar grid: angles")->check(CLI::PositiveNumber);
        app->add_option("--nx", nx, "rect grid: points per side")->check(CLI::Range(2, 100000));
        app->add_option("--max-radius", max_radius, "largest |z| on the grid")->check(CLI::Range(0.0, 1.0));
    }

    // Polar: radii max_radius*i/rings and the origin once. Rect: square
    // [-R, R]^2 restricted to |z| <= R.
    std::vector<cplx> points() const {
        std::vector<cplx> pts;
        if (kind == "polar") {
            pts.emplace_back(0.0, 0.0);
            for (int i = 1; i <= rings; ++i) {
                const double r = max_radius * i / rings;
                for (int j = 0; j < spokes; ++j) pts.push_back(std::polar(r, 2.0 * kPi * j / spokes));
            }
        } else {
            for (int iy = 0; iy < nx; ++iy) {
                for (int ix = 0; ix < nx; ++ix) {
                    const cplx z(-max_radius + 2.0 * max_radius * ix / (nx - 1),
                                 -max_radius + 2.0 * max_radius * iy / (nx - 1));
                    if (std::abs(z) <= max_radius) pts.push_back(z);
                }
            }
        }
        return pts;
    }
};

std::string fmt(double v) { return format_double(v); }

void write_solve(std::ostream& out, const BiharmonicProblem& p, const std::vector<cplx>& pts, bool derivatives,
                 int threads) {
    std::vector<cplx> phi(pts.size());
    std::vector<WirtingerPair> d(derivatives ? pts.size() : 0);
    parallel_for(
        pts.size(),
        [&](std::size_t i) {
            const DiskPoint z(pts[i]);
            phi[i] = solve_at(p, z);
            if (derivatives) d[i] = solve_wirtinger(p, z);
        },
        threads);
    out << "z_re,z_im,phi_re,phi_im";
    if (derivatives) out << ",dz_re,dz_im,dzbar_re,dzbar_im";
    out << '\n';
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out << fmt(pts[i].real()) << ',' << fmt(pts[i].imag()) << ',' << fmt(phi[i].real()) << ','
            << fmt(phi[i].imag());
        if (derivatives) {
            out << ',' << fmt(d[i].dz.real()) << ',' << fmt(d[i].dz.imag()) << ',' << fmt(d[i].dzbar.real()) << ','
                << fmt(d[i].dzbar.imag());
        }
        out << '\n';
    }
}

std::vector<TheoremId> parse_theorems(const std::vector<std::string>& names) {
    static const std::vector<TheoremId> all = {
        TheoremId::harm_schwarz,    TheoremId::t2_schwarz,        TheoremId::t2_schwarz_pick,
        TheoremId::main_schwarz,    TheoremId::gradient_bound,    TheoremId::green_deviation,
        TheoremId::green_gradient_l1, TheoremId::h0_deviation,    TheoremId::lambda_bound,
        TheoremId::t2_gradient_deviation};
    std::vector<TheoremId> out;
    for (const auto& n : names) {
        if (n == "all") return all;
        const auto id = theorem_from_string(n);
        if (!id) throw CLI::ValidationError("--theorem", "unknown theorem '" + n + "'");
        out.push_back(*id);
        // the green deviation check emits its 23/6 companion records too
        if (*id == TheoremId::green_deviation) out.push_back(TheoremId::green_gradient_l1);
    }
    return out;
}

nlohmann::json landau_json(const LandauResult& r) {
    return {{"r0", r.r0}, {"residual", r.residual}, {"R0_lower", r.R0_lower}};
}

void write_kernel_table(std::ostream& out, const std::string& kernel, const GridFlags& grid, cplx w,
                        const QuadratureConfig& cfg) {
    if (kernel == "J") {
        // (r, theta) grid: r = max_radius*i/rings, theta = pi*j/spokes
        out << "r,theta,J\n";
        for (int i = 0; i <= grid.rings; ++i) {
            const double r = grid.max_radius * i / grid.rings;
            for (int j = 0; j <= grid.spokes; ++j) {
                const double t = kPi * j / grid.spokes;
                out << fmt(r) << ',' << fmt(t) << ',' << fmt(j_integral(t, r)) << '\n';
            }
        }
        return;
    }
    const std::vector<cplx> pts = grid.points();
    if (kernel == "I2") {
        out << "z_re,z_im,series,closed_form\n";
        for (cplx z : pts) {
            const DiskPoint p(z);
            out << fmt(z.real()) << ',' << fmt(z.imag()) << ',' << fmt(i_alpha(2.0, p)) << ','
                << fmt(i2_closed_form(p)) << '\n';
        }
        return;
    }
    if (kernel == "G") {
        const DiskPoint wp(w);
        out << "z_re,z_im,G,G1_re,G1_im\n";
        const SourceFunction one = SourceFunction::constant(1.0);
        for (cplx z : pts) {
            const DiskPoint p(z);
            const cplx g1 = green_potential(one, p, cfg);
            out << fmt(z.real()) << ',' << fmt(z.imag()) << ',' << fmt(green(p, wp)) << ',' << fmt(g1.real()) << ','
                << fmt(g1.imag()) << '\n';
        }
        return;
    }
    KernelKind kind = KernelKind::poisson;
    if (kernel == "H0") kind = KernelKind::h0;
    else if (kernel == "K2") kind = KernelKind::k2;
    else if (kernel == "F0") kind = KernelKind::f0;
    out << "z_re,z_im," << kernel << '\n';
    for (cplx z : pts) out << fmt(z.real()) << ',' << fmt(z.imag()) << ',' << fmt(kernel_eval(kind, DiskPoint(z))) << '\n';
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Biharmonic Dirichlet problem on the unit disk: solver and bound verifier"};
    app.require_subcommand(1);
    std::string output;
    int threads = 0;
    app.add_option("-o,--output", output, "write results to this file instead of stdout");
    app.add_option("--threads", threads, "worker threads (0: BIDISK_THREADS or hardware)")->check(CLI::NonNegativeNumber);

    QuadFlags q_solve, q_verify, q_landau, q_sharp, q_table;

    auto* solve = app.add_subcommand("solve", "evaluate Phi on a grid");
    std::string problem_path;
    bool derivatives = false;
    GridFlags solve_grid;
    solve->add_option("--problem", problem_path, "problem JSON file")->required();
    solve->add_flag("--derivatives", derivatives, "also write Phi_z and Phi_zbar");
    solve_grid.add(solve);
    q_solve.add(solve);

    auto* verify = app.add_subcommand("verify", "random inequality sweep");
    std::vector<std::string> theorem_names{"all"};
    std::size_t samples = 100;
    std::size_t points = 20;
    std::uint64_t seed = 0;
    int degree = 8;
    std::string format = "json";
    verify->add_option("--theorem", theorem_names, "harm|t2|t2-pick|main|gradient|green-dev|h0-dev|all");
    verify->add_option("--samples", samples, "random problems")->check(CLI::PositiveNumber);
    verify->add_option("--points", points, "points per problem")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--degree", degree, "maximal Fourier degree")->check(CLI::Range(0, kMaxFourierDegree));
    verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    q_verify.add(verify);

    auto* landau = app.add_subcommand("landau", "univalence radius");
    std::string variant;
    double m = 1.0, m1 = 1.0, m2 = 1.0, m3 = 1.0;
    landau->add_option("--variant", variant, "t2 or ibdp")->required()->check(CLI::IsMember({"t2", "ibdp"}));
    landau->add_option("--m", m, "sup bound (t2)");
    landau->add_option("--m1", m1, "bound on f (ibdp)");
    landau->add_option("--m2", m2, "bound on h (ibdp)");
    landau->add_option("--m3", m3, "bound on g (ibdp)");
    q_landau.add(landau);

    auto* sharp = app.add_subcommand("sharpness", "gradient of K2[chi_upper - chi_lower] at 0");
    q_sharp.add(sharp);

    auto* table = app.add_subcommand("kernel-table", "tabulate a kernel on a grid");
    std::string kernel;
    GridFlags table_grid;
    std::vector<double> w_pole{0.0, 0.0};
    table->add_option("--kernel", kernel, "P|H0|K2|F0|G|I2|J")
        ->required()
        ->check(CLI::IsMember({"P", "H0", "K2", "F0", "G", "I2", "J"}));
    table->add_option("--w", w_pole, "second Green argument re im")->expected(2);
    table_grid.add(table);
    q_table.add(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitConfig;
    }

    std::ofstream file;
    if (!output.empty()) {
        file.open(output, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << output << "'\n";
            return kExitConfig;
        }
    }
    std::ostream& dst = output.empty() ? out : file;
    const int nthreads = threads > 0 ? threads : default_thread_count();

    try {
        if (*solve) {
            BiharmonicProblem p = load_problem(problem_path);
            p.quad = q_solve.apply(p.quad);
            write_solve(dst, p, solve_grid.points(), derivatives, nthreads);
            return kExitOk;
        }
        if (*verify) {
            SweepOptions opt;
            opt.theorems = parse_theorems(theorem_names);
            opt.problems = samples;
            opt.points_per_problem = points;
            opt.seed = seed;
            opt.degree = degree;
            opt.quad = q_verify.apply({});
            opt.threads = nthreads;
            const SweepReport rep = run_sweep(opt);
            if (format == "csv") {
                write_csv(dst, rep.records);
            } else {
                dst << to_json(rep).dump(2) << '\n';
            }
            for (const auto& s : rep.summaries) {
                err << to_string(s.theorem) << ": " << s.samples << " samples, " << s.violations
                    << " violations, min margin " << fmt(s.min_margin) << '\n';
            }
            return rep.violations() == 0 ? kExitOk : kExitViolations;
        }
        if (*landau) {
            q_landau.apply({});
            const LandauResult r = variant == "t2" ? landau_t2(m) : landau_ibdp(m1, m2, m3);
            dst << landau_json(r).dump(2) << '\n';
            return kExitOk;
        }
        if (*sharp) {
            const SharpnessReport r = sharpness_demo(q_sharp.apply({}));
            nlohmann::json j = {{"uz0", {r.uz0.real(), r.uz0.imag()}},
                                {"uzbar0", {r.uzbar0.real(), r.uzbar0.imag()}},
                                {"gradient_norm", r.gradient_norm},
                                {"expected_uz0", {0.0, -2.0 / kPi}},
                                {"expected_norm", 4.0 / kPi},
                                {"pass", r.pass}};
            dst << j.dump(2) << '\n';
            return r.pass ? kExitOk : kExitViolations;
        }
        if (*table) {
            write_kernel_table(dst, kernel, table_grid, cplx(w_pole[0], w_pole[1]), q_table.apply({}));
            return kExitOk;
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        // domain errors, bad problem files, invalid quadrature
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}

} // namespace bidisk::cli
