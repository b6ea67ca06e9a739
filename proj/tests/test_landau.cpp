#include "bidisk/landau.hpp"
#include "bidisk/harness.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace bidisk;
using oracle::pi;

TEST_CASE("bisection") {
    const auto r = bisect_root([](double x) { return x * x - 2.0; }, 0.0, 2.0);
    CHECK(r.r0 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(r.bracket.first <= r.r0);
    CHECK(r.r0 <= r.bracket.second);
    CHECK_THROWS_AS(bisect_root([](double x) { return x * x + 1.0; }, 0.0, 2.0), std::domain_error);
}

TEST_CASE("t2 Landau radius") {
    CHECK(landau_t2_residual(1.0, 0.1) > 0.0);
    CHECK(landau_t2_residual(1.0, 0.15) < 0.0);
    const auto r = landau_t2(1.0);
    CHECK(r.r0 > 0.1);
    CHECK(r.r0 < 0.15);
    CHECK(std::abs(r.residual) < 1e-12);
    CHECK(r.R0_lower > 0.0);
    CHECK(landau_t2_residual(1.0, r.bracket.first) * landau_t2_residual(1.0, r.bracket.second) <= 0.0);

    double prev = 1.0;
    for (double m : {1.0, 2.0, 4.0, 8.0}) {
        const auto s = landau_t2(m);
        CHECK(s.r0 < prev);
        CHECK(s.R0_lower > 0.0);
        prev = s.r0;
    }
    CHECK_THROWS_AS(landau_t2(0.5), std::domain_error);

    // residual strictly decreasing
    double last = landau_t2_residual(1.0, 1e-3);
    for (int i = 2; i < 1000; ++i) {
        const double cur = landau_t2_residual(1.0, i / 1000.0);
        CHECK(cur < last);
        last = cur;
    }
}

TEST_CASE("sigma and the ibdp radius") {
    CHECK(sigma_eval(1, 1, 1, 0.0) == 0.0);
    CHECK(sigma_eval(1, 0, 0, 0.5) == doctest::Approx(0.5 + 34 / pi).epsilon(1e-14));

    double q_prev = 0.0, s_prev = 0.0;
    for (int i = 1; i < 100; ++i) {
        const double r = i / 100.0;
        const double s = sigma_eval(1, 1, 1, r);
        CHECK(s > s_prev);
        CHECK(s / r >= q_prev);
        s_prev = s;
        q_prev = s / r;
    }

    const auto a = landau_ibdp(1, 0, 0);
    CHECK(std::abs(4 / pi * sigma_eval(1, 0, 0, a.r0) - 1.0) < 1e-12);
    CHECK(a.R0_lower == doctest::Approx(a.r0 * pi / 8).epsilon(1e-14));
    const auto b = landau_ibdp(2, 2, 2);
    const auto c = landau_ibdp(1, 1, 1);
    CHECK(b.r0 < c.r0);
    CHECK(std::abs(c.residual) < 1e-12);
    CHECK_THROWS_AS(landau_ibdp(0, 0, 0), std::domain_error);
}

TEST_CASE("univalence probe on a normalised random solution") {
    const auto p = random_problem(5, 3, {0.5, 0.5, 0.5});
    const auto n = normalize_problem(p);
    REQUIRE(n);
    const auto norms = sup_norms(*n);
    const auto L = landau_ibdp(norms.f_sup, norms.fh_sup, norms.g_sup);
    const auto probe = univalence_probe([&](cplx z) { return solve_at(*n, DiskPoint(z)); }, L.r0, 2000, 1);
    CHECK(probe.pairs == 2000);
    CHECK(probe.collisions == 0);
    CHECK(probe.min_ratio > 0.0);

    // a map that is not injective on the disc is caught
    const auto bad = univalence_probe([](cplx z) { return z * z; }, 0.5, 2000, 2);
    CHECK(bad.min_ratio < 0.05);
}
