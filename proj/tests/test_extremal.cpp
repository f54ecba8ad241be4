#include <doctest.h>

#include <cmath>

#include "autoconv/extremal.hpp"
#include "autoconv/quadrature.hpp"

using namespace autoconv;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kLog16OverPi = 0.88254346669577906396;
}  // namespace

TEST_CASE("h_value") {
    CHECK(extremal::h_value(0.5) == 0.0);
    CHECK(extremal::h_value(0.0) == 0.0);
    CHECK(extremal::h_value(-0.2) == 0.0);
    CHECK(extremal::h_value(0.125) == doctest::Approx(2.0));
    // pdf: inverse-sqrt singularity at the left end of (0, 1/2)
    const double mass = quad_singular([](double x) { return extremal::h_value(x); }, 0.0, 0.5,
                                      QuadratureSpec{1e-10, 40000});
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("h_autoconv closed form") {
    CHECK(extremal::h_autoconv(0.3) == doctest::Approx(0.5 * kPi));
    CHECK(extremal::h_autoconv(0.5) == doctest::Approx(0.5 * kPi));
    CHECK(extremal::h_autoconv(1.0) == 0.0);
    CHECK(extremal::h_autoconv(1.0 - 1e-12) == doctest::Approx(0.0).epsilon(1e-5));
    CHECK(extremal::h_autoconv(-0.1) == 0.0);
    // against quadrature of int h(y) h(x-y) dy
    for (double x : {0.7, 0.9}) {
        const double direct = quad_singular(
            [x](double y) { return extremal::h_value(y) * extremal::h_value(x - y); }, x - 0.5, 0.5,
            QuadratureSpec{1e-9, 40000});
        CAPTURE(x);
        CHECK(std::abs(extremal::h_autoconv(x) - direct) < 1e-6);
    }
    for (double x : {0.2, 0.45}) {
        const double direct = quad_singular(
            [x](double y) { return extremal::h_value(y) * extremal::h_value(x - y); }, 0.0, x,
            QuadratureSpec{1e-9, 40000});
        CAPTURE(x);
        CHECK(std::abs(extremal::h_autoconv(x) - direct) < 1e-6);
    }
}

TEST_CASE("h_autoconv shape: plateau then decreasing") {
    for (double x : {0.01, 0.2, 0.49999})
        CHECK(extremal::h_autoconv(x) == 0.5 * kPi);
    double prev = extremal::h_autoconv(0.5);
    for (int i = 1; i <= 100; ++i) {
        const double x = 0.5 + 0.5 * i / 101.0;
        const double v = extremal::h_autoconv(x);
        CHECK(v <= prev + 1e-15);
        prev = v;
    }
    // continuity across the plateau edge
    CHECK(extremal::h_autoconv(0.5 + 1e-12) == doctest::Approx(0.5 * kPi).epsilon(1e-5));
}

TEST_CASE("h_stats reproduces (1, pi/2, log 4)") {
    const extremal::HStats s = extremal::h_stats();
    CHECK(s.sup == doctest::Approx(0.5 * kPi).epsilon(1e-12));
    CHECK(std::abs(s.l1 - 1.0) < 1e-6);
    CHECK(std::abs(s.l2sq - std::log(4.0)) < 1e-6);
    CHECK(s.l1_budget > 0.0);
    CHECK(s.l2sq_budget > 0.0);
}

TEST_CASE("discretize_h produces a pdf on (0,1/2)") {
    for (int k : {4, 10}) {
        const auto f = extremal::discretize_h(1 << k);
        CHECK(f.is_pdf());
        CHECK(f.support_lo() == 0.0);
        CHECK(f.support_hi() == doctest::Approx(0.5));
        CHECK(f.pieces() == static_cast<std::size_t>(1 << k));
    }
    CHECK_THROWS_AS(extremal::discretize_h(1), std::invalid_argument);
}

TEST_CASE("conjecture1 probe") {
    // uniform pdf on (-1/4,1/4): sup = 2, I = 1/2, ratio = 2 >= pi/2
    const stepfn::StepFunction uniform({-0.25, 0.25}, {2.0});
    const auto r = extremal::conjecture1_probe(uniform);
    CHECK(r.ratio == doctest::Approx(2.0));
    CHECK(r.at_or_above_reference);

    // refining discretizations of h: decreasing toward pi/2, never below
    double prev = 1e9;
    for (int k = 4; k <= 10; ++k) {
        const auto p = extremal::conjecture1_probe(extremal::discretize_h(1 << k));
        CAPTURE(k);
        CHECK(p.ratio >= 0.5 * kPi);
        CHECK(p.ratio < prev);
        prev = p.ratio;
    }
    CHECK(prev < 1.582);  // close to pi/2 = 1.5708 by k = 10

    // everything tested sits above the proven constant
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto p = extremal::conjecture1_probe(stepfn::random_pdf(seed));
        CHECK(p.ratio > 1.262);
    }
}

TEST_CASE("conjecture2 probe") {
    // uniform pdf: the tent gives exactly (4/3)/(2*1) = 2/3
    const stepfn::StepFunction uniform({-0.25, 0.25}, {2.0});
    const auto r = extremal::conjecture2_probe(uniform);
    CHECK(r.ratio == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(!r.counterexample_candidate);

    // discretizations of h approach log16/pi from below
    double prev = 0.0;
    for (int k = 4; k <= 10; ++k) {
        const auto p = extremal::conjecture2_probe(extremal::discretize_h(1 << k));
        CAPTURE(k);
        CHECK(p.ratio > prev);
        CHECK(p.ratio <= kLog16OverPi);
        CHECK(!p.counterexample_candidate);
        prev = p.ratio;
    }
    CHECK(prev > 0.86);

    // Holder: the ratio never exceeds 1; no false counterexample flags
    for (std::uint64_t seed = 50; seed <= 80; ++seed) {
        const auto p = extremal::conjecture2_probe(stepfn::random_pdf(seed));
        CAPTURE(seed);
        CHECK(p.ratio <= 1.0);
        CHECK(!p.counterexample_candidate);
    }
    CHECK_THROWS_AS(extremal::conjecture2_probe(stepfn::StepFunction({0.0, 1.0}, {0.5})),
                    std::invalid_argument);
}
