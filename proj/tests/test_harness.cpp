#include "bidisk/harness.hpp"
#include "bidisk/parallel.hpp"
#include "bidisk/report.hpp"

#include <doctest.h>

#include <atomic>
#include <sstream>
#include <stdexcept>

using namespace bidisk;

TEST_CASE("random problems are deterministic and scaled") {
    const SupNorms t{1.0, 1.0, 1.0};
    const auto a = random_problem(99, 8, t);
    const auto b = random_problem(99, 8, t);
    for (double th : {0.1, 2.0, 4.4}) {
        CHECK(a.f(th) == b.f(th));
        CHECK(a.h(th) == b.h(th));
    }
    CHECK(a.g(cplx(0.2, 0.1)) == b.g(cplx(0.2, 0.1)));
    const auto n = sup_norms(a);
    CHECK(n.f_sup >= 0.999);
    CHECK(n.f_sup <= 1.002);
    CHECK(n.fh_sup >= 0.999);
    CHECK(n.fh_sup <= 1.002);
    CHECK(n.g_sup >= 0.999);
    CHECK(n.g_sup <= 1.002);

    const auto c = random_problem(1, 0, t);
    CHECK(c.f(0.3) == c.f(2.9));
    CHECK(c.h(0.3) == c.h(2.9));
    CHECK(c.g(cplx(0.1, 0.1)) == c.g(cplx(-0.5, 0.2)));
}

TEST_CASE("small sweep over every theorem") {
    SweepOptions o;
    o.theorems = {TheoremId::harm_schwarz,   TheoremId::t2_schwarz,       TheoremId::t2_schwarz_pick,
                  TheoremId::main_schwarz,   TheoremId::gradient_bound,   TheoremId::green_deviation,
                  TheoremId::green_gradient_l1, TheoremId::h0_deviation, TheoremId::lambda_bound,
                  TheoremId::t2_gradient_deviation};
    o.problems = 20;
    o.points_per_problem = 10;
    o.seed = 3;
    const auto rep = run_sweep(o);
    CHECK(rep.violations() == 0);
    REQUIRE(rep.summaries.size() == o.theorems.size());
    for (const auto& s : rep.summaries) {
        CHECK(s.samples > 0);
        CHECK(s.violations == 0);
        CHECK(s.min_margin >= -kViolationSlack);
    }
    CHECK(rep.summary(TheoremId::harm_schwarz)->samples == 200);

    // same answer whatever the thread count
    o.threads = 1;
    const auto one = run_sweep(o);
    o.threads = 3;
    const auto three = run_sweep(o);
    std::ostringstream a, b;
    write_csv(a, one.records);
    write_csv(b, three.records);
    CHECK(a.str() == b.str());
}

TEST_CASE("summaries report true minima") {
    std::vector<BoundCheckRecord> recs{make_record(TheoremId::t2_schwarz, 0.0, 1.0, 3.0),
                                       make_record(TheoremId::t2_schwarz, 0.0, 2.0, 1.0),
                                       make_record(TheoremId::harm_schwarz, 0.0, 0.0, 0.5)};
    const auto s = summarize(recs, {TheoremId::t2_schwarz, TheoremId::harm_schwarz, TheoremId::main_schwarz});
    CHECK(s[0].samples == 2);
    CHECK(s[0].violations == 1);
    CHECK(s[0].min_margin == -1.0);
    CHECK(s[1].min_margin == 0.5);
    CHECK(s[2].samples == 0);
}

TEST_CASE("sharpness demo") {
    const auto r = sharpness_demo();
    CHECK(std::abs(r.u0) < 1e-14);
    CHECK(r.uz_error < 1e-8);
    CHECK(r.norm_error < 1e-8);
    CHECK(r.pass);
}

TEST_CASE("report formats") {
    const auto r = make_record(TheoremId::main_schwarz, cplx(0.1, -0.2), 0.25, 1.0 / 3.0);
    std::ostringstream csv;
    write_csv(csv, {r});
    CHECK(csv.str() ==
          "theorem,z_re,z_im,lhs,rhs,margin,holds\n"
          "main,0.10000000000000001,-0.20000000000000001,0.25,0.33333333333333331,0.083333333333333315,true\n");
    SweepReport rep;
    rep.records = {r};
    rep.summaries = summarize(rep.records, {TheoremId::main_schwarz});
    const auto j = to_json(rep);
    CHECK(j["records"].size() == 1);
    CHECK(j["summary"][0]["theorem"] == "main");
    CHECK(j["summary"][0]["violations"] == 0);
    CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("parallel_for") {
    std::vector<int> hit(1000, 0);
    parallel_for(hit.size(), [&](std::size_t i) { hit[i] += 1; }, 4);
    for (int h : hit) CHECK(h == 1);
    CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) { if (i == 7) throw std::runtime_error("x"); }, 2),
                    std::runtime_error);
    CHECK(default_thread_count() >= 1);
}
