#include "bidisk/bounds.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace bidisk;
using oracle::pi;

namespace {

BiharmonicProblem make(BoundaryFunction f, BoundaryFunction h, SourceFunction g) {
    return {std::move(f), std::move(h), std::move(g), QuadratureConfig{}};
}

const BiharmonicProblem& identity_problem() {
    static const auto p = make(BoundaryFunction::fourier({{1, 1.0}}), BoundaryFunction::fourier({{1, -1.0}}),
                               SourceFunction::constant(0.0));
    return p;
}

} // namespace

TEST_CASE("record bookkeeping") {
    auto r = make_record(TheoremId::harm_schwarz, 0.1, 1.0, 1.0 - 5e-10);
    CHECK(r.holds);
    CHECK(r.margin == doctest::Approx(-5e-10));
    r = make_record(TheoremId::harm_schwarz, 0.1, 1.0, 1.0 - 2e-9);
    CHECK_FALSE(r.holds);
    for (const char* n : {"harm", "t2", "t2-pick", "main", "gradient", "green-dev", "h0-dev"}) {
        const auto id = theorem_from_string(n);
        REQUIRE(id);
        CHECK(to_string(*id) == n);
    }
    CHECK_FALSE(theorem_from_string("nope"));
}

TEST_CASE("harmonic Schwarz") {
    QuadratureConfig q;
    const auto r0 = check_harmonic_schwarz(BoundaryFunction::constant(1.0), DiskPoint(0, 0), q);
    CHECK(r0.lhs == doctest::Approx(0.0).scale(1.0));
    CHECK(r0.rhs == 0.0);
    CHECK(r0.holds);
    const auto r = check_harmonic_schwarz(BoundaryFunction::constant(1.0), DiskPoint(0.5, 0), q);
    CHECK(r.lhs == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(4 / pi * std::atan(0.5)).epsilon(1e-12));
    CHECK(r.holds);

    std::mt19937_64 rng(73);
    for (int i = 0; i < 200; ++i) {
        const auto b = BoundaryFunction::fourier(oracle::random_modes(rng, 8));
        const auto data = b.scaled(1.0 / sup_norm(b));
        for (int j = 0; j < 5; ++j) CHECK(check_harmonic_schwarz(data, DiskPoint(oracle::random_point(rng, 0.95)), q).holds);
    }
}

TEST_CASE("T2 Schwarz and Schwarz-Pick") {
    QuadratureConfig q;
    const auto one = BoundaryFunction::constant(1.0);
    CHECK(check_t2_schwarz(one, DiskPoint(0, 0), q).lhs == doctest::Approx(0.0).scale(1.0));
    const auto r = check_t2_schwarz(one, DiskPoint(0.5, 0), q);
    CHECK(r.lhs == doctest::Approx(0.625 - 0.75 * 0.75 * 0.75 / (1.25 * 1.25) * 0.5).epsilon(1e-10));
    CHECK(r.rhs == doctest::Approx(2 / pi * (1.25 * std::atan(0.5) + 0.5 * 0.75 / 1.25)).epsilon(1e-12));
    CHECK(r.holds);

    const auto arc = BoundaryFunction::two_arc(1.0, -1.0);
    for (int i = 1; i <= 50; ++i) {
        const DiskPoint z(std::polar(0.019 * i, 0.37 * i));
        CHECK(check_t2_schwarz(arc, z, q).holds);
        CHECK(check_t2_schwarz_pick(arc, z, q).holds);
    }

    const auto p0 = check_t2_schwarz_pick(one, DiskPoint(0, 0), q);
    CHECK(p0.lhs < 1e-12);
    CHECK(p0.rhs == doctest::Approx(4 / pi));
    const auto sharp = check_t2_schwarz_pick(arc, DiskPoint(0, 0), q);
    CHECK(std::abs(sharp.lhs - 4 / pi) < 1e-8);
    CHECK(sharp.holds);
}

TEST_CASE("main Schwarz and gradient bounds on golden problems") {
    const auto& id = identity_problem();
    const auto n = sup_norms(id);
    const auto r = check_main_schwarz(id, n, DiskPoint(0.5, 0));
    CHECK(r.lhs == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(r.rhs == doctest::Approx(2 / pi * (1.25 * std::atan(0.5) + 0.3)).epsilon(2e-3));
    CHECK(r.holds);

    const auto src = make(BoundaryFunction::constant(0.0), BoundaryFunction::constant(0.0), SourceFunction::constant(1.0));
    const auto s = check_main_schwarz(src, sup_norms(src), DiskPoint(0, 0));
    CHECK(s.lhs == doctest::Approx(1.0 / 64).epsilon(1e-8));
    CHECK(std::abs(s.margin) < 1e-8);
    CHECK(s.holds);

    const auto g = check_gradient_bound(id, n, DiskPoint(0, 0));
    CHECK(g.lhs == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(g.rhs >= 4 / pi);
    CHECK(g.holds);

    const auto cst = make(BoundaryFunction::constant(1.0), BoundaryFunction::constant(0.0), SourceFunction::constant(0.0));
    for (double t : {0.0, 0.4, 0.8}) CHECK(check_gradient_bound(cst, sup_norms(cst), DiskPoint(std::polar(t, 1.0))).lhs < 1e-10);
}

TEST_CASE("green deviation bounds") {
    QuadratureConfig q;
    const auto one = SourceFunction::constant(1.0);
    const auto at0 = check_green_deviation(one, 1.0, DiskPoint(0, 0), q);
    REQUIRE(at0.size() == 3);
    CHECK(at0[0].lhs < 1e-15);
    CHECK(at0[1].lhs < 1e-15);
    for (const auto& r : check_green_deviation(one, 1.0, DiskPoint(0.5, 0), q)) CHECK(r.holds);

    const auto rad = SourceFunction::radial({0.0, 1.0});
    const double s = sup_norm(rad);
    for (int i = 0; i < 20; ++i)
        for (const auto& r : check_green_deviation(rad, s, DiskPoint(std::polar(0.045 * (i + 1), 0.7 * i)), q))
            CHECK(r.holds);
}

TEST_CASE("h0 and t2 gradient deviations") {
    QuadratureConfig q;
    std::mt19937_64 rng(79);
    for (int i = 0; i < 30; ++i) {
        const auto f = BoundaryFunction::fourier(oracle::random_modes(rng, 6));
        const auto h = BoundaryFunction::fourier(oracle::random_modes(rng, 6));
        const double m2 = sup_norm_sum(f, h);
        const DiskPoint z(oracle::random_point(rng, 0.95));
        CHECK(check_h0_deviation(f, h, m2, z, q).holds);

        auto ustar = BoundaryFunction::fourier(oracle::random_modes(rng, 6));
        const auto s = t2_coefficients_from_boundary(ustar.fourier_coefficients());
        CHECK(check_t2_gradient_deviation(s, t2_sup_estimate(s), z).holds);
    }
    const auto f = BoundaryFunction::constant(0.0);
    CHECK(check_h0_deviation(f, f, 0.0, DiskPoint(0.3, 0.3), q).lhs == 0.0);
}

TEST_CASE("normalisation and the lambda bound") {
    std::mt19937_64 rng(83);
    for (int i = 0; i < 20; ++i) {
        auto p = make(BoundaryFunction::fourier(oracle::random_modes(rng, 4)),
                      BoundaryFunction::fourier(oracle::random_modes(rng, 4)),
                      SourceFunction::poly({{1, 0, cplx(0.3, 0.2)}, {0, 1, 0.1}}));
        const auto n = normalize_problem(p);
        REQUIRE(n);
        const auto d = derivative_stats(solve_wirtinger(*n, DiskPoint(0, 0)));
        CHECK(std::abs(solve_at(*n, DiskPoint(0, 0))) < 1e-10);
        CHECK(d.jacobian == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(d.norm * d.lambda == doctest::Approx(std::abs(d.jacobian)).epsilon(1e-12));
        CHECK(check_lambda_bound(*n, sup_norms(*n)).holds);
    }
    const auto flat = make(BoundaryFunction::constant(1.0), BoundaryFunction::constant(0.0), SourceFunction::constant(0.0));
    CHECK_FALSE(normalize_problem(flat));
}

TEST_CASE("boundary quotient scan") {
    const std::vector<double> radii{0.9, 0.99, 0.999};
    for (cplx eta : {cplx(1, 0), cplx(0, 1), std::polar(1.0, pi / 4)}) {
        const auto rep = boundary_quotient_scan(identity_problem(), eta, radii);
        REQUIRE(rep.samples.size() == 3);
        for (const auto& s : rep.samples) CHECK(std::abs(s.quotient - 1.0) < 1e-7);
        CHECK(rep.lower_bound == doctest::Approx(1.0));
        CHECK(rep.consistent);
    }
}
