#include "bidisk/kernels.hpp"
#include "bidisk/quadrature.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

using namespace bidisk;
using oracle::pi;

TEST_CASE("config validation") {
    QuadratureConfig q;
    CHECK(q.n_theta == 512);
    CHECK(q.n_radial == 64);
    CHECK(q.per_arc);
    CHECK_NOTHROW(q.validate());
    CHECK(q.refined().n_theta == 1024);
    CHECK(q.refined().n_radial == 128);
    q.n_theta = 4;
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
    q = {};
    q.n_radial = 2;
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
}

TEST_CASE("gauss-legendre nodes integrate polynomials exactly") {
    for (int n : {4, 16, 64}) {
        const auto& g = gauss_legendre(n);
        REQUIRE(g.nodes.size() == static_cast<std::size_t>(n));
        for (int p = 0; p < 2 * n; ++p) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += g.weights[i] * std::pow(g.nodes[i], p);
            const double exact = p % 2 ? 0.0 : 2.0 / (p + 1);
            CHECK(s == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
        }
    }
}

TEST_CASE("circle mean examples") {
    QuadratureConfig q;
    CHECK(std::abs(circle_mean([](double) { return cplx(1.0); }, q) - 1.0) < 1e-15);
    q.n_theta = 64;
    CHECK(std::abs(circle_mean([](double t) { return std::polar(1.0, t); }, q)) < 1e-14);
    q = {};
    const double pm = circle_mean([](double t) { return kernel_eval(KernelKind::poisson, DiskPoint(std::polar(0.5, -t))); }, q);
    CHECK(pm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("trapezoid is exact on trigonometric polynomials below the node count") {
    std::mt19937_64 rng(9);
    QuadratureConfig q;
    q.n_theta = 64;
    for (int trial = 0; trial < 20; ++trial) {
        const auto modes = oracle::random_modes(rng, 31);
        const cplx got = circle_mean(
            [&](double t) {
                cplx s = 0.0;
                for (const auto& [k, c] : modes) s += c * std::polar(1.0, k * t);
                return s;
            },
            q);
        CHECK(std::abs(got - modes.at(0)) < 1e-13);
    }
}

TEST_CASE("per-arc rule on the two-arc indicator") {
    QuadratureConfig q;
    const std::vector<double> bp{0.0, pi};
    const cplx got = circle_mean([](double t) { return (t < pi ? 1.0 : -1.0) * std::polar(1.0, -t); }, q, bp);
    CHECK(std::abs(got - cplx(0.0, -2.0 / pi)) < 1e-10);

    // the uniform rule is visibly worse on the jump
    QuadratureConfig plain = q;
    plain.per_arc = false;
    plain.n_theta = 60;
    const cplx rough = circle_mean(
        [](double t) { return (t < pi - 1e-12 ? 1.0 : -1.0) * std::polar(1.0, -t - 0.013); }, plain);
    CHECK(std::abs(rough - cplx(0.0, -2.0 / pi) * std::polar(1.0, -0.013)) > 1e-4);
}

TEST_CASE("disk mean examples") {
    QuadratureConfig q;
    CHECK(std::abs(disk_mean([](cplx) { return cplx(1.0); }, q) - 1.0) < 1e-14);
    CHECK(std::abs(disk_mean([](cplx w) { return cplx(std::norm(w)); }, q) - 0.5) < 1e-12);

    const double ref = 2.0 * oracle::integrate(
                                 [](double r) { return (-2 * r * r * std::log(r) - 1 + r * r) * r; }, 0.0, 1.0);
    CHECK(ref == doctest::Approx(-0.25).epsilon(1e-14));
    const double got = disk_mean([](cplx w) { return green(DiskPoint(0, 0), DiskPoint(w, Closure::closed)); }, q);
    CHECK(std::abs(got - ref) < 1e-8);
}

TEST_CASE("off-centre disk rule agrees with the centred one") {
    QuadratureConfig q;
    const auto poly = [](cplx w) { return std::norm(w) * std::norm(w) + w * w * std::conj(w) + 0.3; };
    const cplx base = disk_mean(poly, q);
    for (cplx c : {cplx(0.3, 0.2), cplx(-0.7, 0.1), cplx(0.0, 0.95)}) {
        CHECK(std::abs(disk_mean_about(c, poly, q) - base) < 1e-12);
    }
    // |w|^4 has mean 1/3
    CHECK(std::abs(disk_mean_about(cplx(0.5, -0.5), [](cplx w) { return cplx(std::pow(std::norm(w), 2)); }, q) -
                   1.0 / 3.0) < 1e-12);
}

TEST_CASE("refinement plateau for smooth integrands") {
    QuadratureConfig q;
    const auto f = [](cplx w) { return std::exp(w) * std::cos(std::norm(w)); };
    const cplx a = disk_mean(f, q), b = disk_mean(f, q.refined());
    CHECK(std::abs(a - b) < 1e-10);
    const auto h = [](double t) { return std::exp(std::cos(t)) * std::polar(1.0, std::sin(2 * t)); };
    CHECK(std::abs(circle_mean(h, q) - circle_mean(h, q.refined())) < 1e-10);
}

TEST_CASE("node count grows near the boundary") {
    QuadratureConfig q;
    CHECK(circle_nodes_for_radius(q, 0.0) <= q.n_theta);
    CHECK(circle_nodes_for_radius(q, 0.999) >= 64000);
    CHECK(circle_nodes_for_radius(q, 0.9999) > circle_nodes_for_radius(q, 0.999));
}

TEST_CASE("pairwise sum") {
    std::vector<double> v(1000, 0.1);
    CHECK(pairwise_sum(std::span<const double>(v)) == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(pairwise_sum(std::span<const double>()) == 0.0);
}
