#include <doctest.h>

#include <cmath>
#include <complex>
#include <set>

#include "autoconv/quadrature.hpp"
#include "autoconv/stepfn.hpp"
#include "oracles.hpp"

using namespace autoconv;
using stepfn::StepFunction;

namespace {

constexpr double kPi = 3.14159265358979323846;

StepFunction uniform_pdf() { return StepFunction({-0.25, 0.25}, {2.0}); }
StepFunction box01() { return StepFunction({0.0, 1.0}, {1.0}); }

}  // namespace

TEST_CASE("StepFunction validation and accessors") {
    CHECK_THROWS_AS(StepFunction({0.0, 0.0, 1.0}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(StepFunction({0.0, 1.0}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(StepFunction({0.5}, {}), std::invalid_argument);

    const StepFunction f({-0.25, 0.0, 0.25}, {1.0, 3.0});
    CHECK(f.integral() == doctest::Approx(1.0));
    CHECK(f.is_pdf());
    CHECK(f.value_at(-0.1) == 1.0);
    CHECK(f.value_at(0.1) == 3.0);
    CHECK(f.value_at(0.25) == 0.0);
    CHECK(f.value_at(-0.3) == 0.0);
    CHECK(f.total_variation() == doctest::Approx(1.0 + 2.0 + 3.0));
    CHECK(f.l2sq() == doctest::Approx(0.25 * 1.0 + 0.25 * 9.0));
    CHECK(f.antiderivative_at(0.0) == doctest::Approx(0.25));
    CHECK(f.antiderivative_at(10.0) == doctest::Approx(1.0));
}

TEST_CASE("autoconvolve of the uniform pdf is the tent of height 2") {
    const auto conv = stepfn::autoconvolve(uniform_pdf());
    CHECK(conv.nodes().front() == doctest::Approx(-0.5));
    CHECK(conv.nodes().back() == doctest::Approx(0.5));
    CHECK(conv.value_at(0.0) == doctest::Approx(2.0));
    CHECK(conv.value_at(0.25) == doctest::Approx(1.0));
    CHECK(conv.value_at(-0.5) == doctest::Approx(0.0));
    CHECK(stepfn::sup_norm(conv) == doctest::Approx(2.0));
    CHECK(conv.integral() == doctest::Approx(1.0));
    CHECK(conv.l2sq() == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("autoconvolve of the unit box is the tent centered at 1") {
    const auto conv = stepfn::autoconvolve(box01());
    CHECK(conv.value_at(1.0) == doctest::Approx(1.0));
    CHECK(conv.value_at(0.0) == doctest::Approx(0.0));
    CHECK(conv.value_at(2.0) == doctest::Approx(0.0));
    CHECK(conv.value_at(0.5) == doctest::Approx(0.5));
    CHECK(stepfn::sup_norm(conv) == doctest::Approx(1.0));
    // autocorrelation of the same box is the tent centered at 0
    const auto corr = stepfn::autocorrelate(box01());
    CHECK(corr.value_at(0.0) == doctest::Approx(1.0));
    CHECK(corr.value_at(0.5) == doctest::Approx(0.5));
    CHECK(corr.value_at(-0.5) == doctest::Approx(0.5));
}

TEST_CASE("autoconvolution invariants on random pdfs") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const StepFunction f = stepfn::random_pdf(seed);
        const auto conv = stepfn::autoconvolve(f);
        const auto corr = stepfn::autocorrelate(f);
        CAPTURE(seed);
        const double m = f.integral();
        CHECK(conv.integral() == doctest::Approx(m * m).epsilon(1e-10));
        CHECK(corr.integral() == doctest::Approx(m * m).epsilon(1e-10));
        // support doubles
        CHECK(conv.nodes().back() - conv.nodes().front() ==
              doctest::Approx(2.0 * f.support_length()));
        // nonnegative result for nonnegative input
        for (double v : conv.node_values()) CHECK(v >= -1e-14);
        // evenness of the autocorrelation
        for (int i = 1; i <= 10; ++i) {
            const double x = 0.05 * i;
            CHECK(corr.value_at(x) == doctest::Approx(corr.value_at(-x)).epsilon(1e-12));
        }
        // trivial sup lower bound
        CHECK(stepfn::sup_norm(conv) >=
              conv.integral() / (conv.nodes().back() - conv.nodes().front()) - 1e-12);
    }
}

TEST_CASE("autoconvolution values match the brute-force oracle") {
    const StepFunction f = stepfn::random_pdf(123456);
    const auto conv = stepfn::autoconvolve(f);
    const auto corr = stepfn::autocorrelate(f);
    for (int i = 0; i < 20; ++i) {
        const double x = -0.5 + (i + 0.5) / 20.0;
        CAPTURE(x);
        CHECK(std::abs(conv.value_at(x) - oracles::conv_at(f, x, false)) < 1e-8);
        CHECK(std::abs(corr.value_at(x) - oracles::conv_at(f, x, true)) < 1e-8);
    }
    // and against quadrature of the defining integral at a few points,
    // panelled at the integrand's jump locations
    for (double x : {-0.31, -0.07, 0.02, 0.18, 0.44}) {
        std::set<double> cuts;
        for (double b : f.breakpoints()) {
            if (b > f.support_lo() && b < f.support_hi()) cuts.insert(b);
            const double r = x - b;
            if (r > f.support_lo() && r < f.support_hi()) cuts.insert(r);
        }
        std::vector<double> pts{f.support_lo()};
        pts.insert(pts.end(), cuts.begin(), cuts.end());
        pts.push_back(f.support_hi());
        const double q = quad_piecewise([&](double y) { return f.value_at(y) * f.value_at(x - y); },
                                        pts, QuadratureSpec{1e-11, 40000});
        CAPTURE(x);
        CHECK(std::abs(conv.value_at(x) - q) < 1e-8);
    }
}

TEST_CASE("fourier_hat closed form") {
    CHECK(stepfn::fourier_hat(uniform_pdf(), 0).real() == doctest::Approx(1.0));
    CHECK(stepfn::fourier_hat(uniform_pdf(), 0).imag() == doctest::Approx(0.0));
    // int 2 cos(2 pi x) over (-1/4,1/4) = 2/pi
    CHECK(stepfn::fourier_hat(uniform_pdf(), 1).real() == doctest::Approx(2.0 / kPi).epsilon(1e-12));
    CHECK(std::abs(stepfn::fourier_hat(uniform_pdf(), 1).imag()) < 1e-15);

    const StepFunction f = stepfn::random_pdf(99);
    for (long j : {1L, 2L, 17L, 400L}) {
        const auto a = stepfn::fourier_hat(f, j);
        const auto b = stepfn::fourier_hat(f, -j);
        CHECK(a.real() == doctest::Approx(b.real()).epsilon(1e-13));
        CHECK(a.imag() == doctest::Approx(-b.imag()).epsilon(1e-13));
    }
}

TEST_CASE("fourier_tilde normalization") {
    const double u = 0.63;
    CHECK(stepfn::fourier_tilde(uniform_pdf(), 0, u).real() == doctest::Approx(1.0 / 0.63));
    // even support: transform is real
    for (long j : {1L, 3L, 8L})
        CHECK(std::abs(stepfn::fourier_tilde(uniform_pdf(), j, u).imag()) < 1e-14);
    CHECK_THROWS_AS(stepfn::fourier_tilde(uniform_pdf(), 1, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(stepfn::fourier_tilde(uniform_pdf(), 1, 1.0), std::invalid_argument);

    // u * sum |tilde f|^2 recovers int f^2 (Parseval with g1 = g2)
    const StepFunction f = stepfn::random_pdf(7);
    const auto rep = stepfn::verify_parseval_u(f, f, u, 2000);
    CHECK(rep.within_bound);
    CHECK(rep.inner_exact == doctest::Approx(f.l2sq()).epsilon(1e-12));
}

TEST_CASE("verify_parseval_u accepts, rejects, and certifies") {
    const double u = 0.63;
    const auto rep = stepfn::verify_parseval_u(uniform_pdf(), uniform_pdf(), u, 2000);
    CHECK(rep.inner_exact == doctest::Approx(2.0));  // int (2 chi)^2 = 2
    CHECK(rep.gap < rep.tail_bound);
    CHECK(rep.within_bound);

    // supports (-0.4,0.4) and (-0.3,0.3): 0.7 > 0.63, hypothesis fails
    const StepFunction wide({-0.4, 0.4}, {1.0});
    const StepFunction mid({-0.3, 0.3}, {1.0});
    CHECK_THROWS_AS(stepfn::verify_parseval_u(wide, mid, u, 100), std::invalid_argument);

    // zero functions: 0 = 0
    const StepFunction zero({-0.1, 0.1}, {0.0});
    const auto zrep = stepfn::verify_parseval_u(zero, zero, u, 50);
    CHECK(zrep.inner_exact == 0.0);
    CHECK(zrep.gap == doctest::Approx(0.0));
    CHECK(zrep.within_bound);
}

TEST_CASE("hat-Parseval partial sums are monotone from below with certified gap") {
    const StepFunction f = stepfn::random_pdf(31);  // support inside (-1/2,1/2)
    const double exact = f.l2sq();
    const long J = 3000;
    double partial = std::norm(stepfn::fourier_hat(f, 0));
    double prev = partial;
    for (long j = 1; j <= J; ++j) {
        partial += 2.0 * std::norm(stepfn::fourier_hat(f, j));
        CHECK(partial >= prev - 1e-18);
        prev = partial;
    }
    CHECK(partial <= exact + 1e-12);  // from below
    const double tv = f.total_variation();
    const double tail = 2.0 * (tv / kPi) * (tv / kPi) / static_cast<double>(J);
    CHECK(exact - partial < tail);
    CHECK(exact - partial > 0.0);
}

TEST_CASE("hfold_grid") {
    SUBCASE("h=2 uniform pdf reaches the exact peak") {
        const auto g = stepfn::hfold_grid(uniform_pdf(), 2, 1 << 10);
        CHECK(std::abs(g.grid_max - 2.0) <= 1e-3);
    }
    SUBCASE("h=4 uniform pdf on (-1/8,1/8) clears the theorem constant") {
        const StepFunction f({-0.125, 0.125}, {4.0});
        const auto g = stepfn::hfold_grid(f, 4, 1 << 10);
        CHECK(g.grid_max >= 1.262);
        CHECK(g.grid_max == doctest::Approx(8.0 / 3.0).epsilon(1e-3));
    }
    SUBCASE("h=2 grid max tracks the exact sup on random pdfs") {
        for (std::uint64_t seed : {5u, 6u, 7u}) {
            const StepFunction f = stepfn::random_pdf(seed);
            const int res = 1 << 12;
            const auto g = stepfn::hfold_grid(f, 2, res);
            const double sup = stepfn::sup_norm(stepfn::autoconvolve(f));
            double vmax = 0.0;
            for (double v : f.values()) vmax = std::max(vmax, v);
            const double lip = f.total_variation() * vmax;
            CAPTURE(seed);
            CHECK(std::abs(g.grid_max - sup) <= 2.0 / res * lip + 1e-9);
        }
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(stepfn::hfold_grid(uniform_pdf(), 3, 1 << 10), std::invalid_argument);
        CHECK_THROWS_AS(stepfn::hfold_grid(uniform_pdf(), 2, 100), std::invalid_argument);
    }
}

TEST_CASE("random_pdf is reproducible and valid") {
    for (std::uint64_t seed : {1ull, 42ull, 905ull}) {
        const StepFunction a = stepfn::random_pdf(seed);
        const StepFunction b = stepfn::random_pdf(seed);
        CHECK(a.breakpoints() == b.breakpoints());
        CHECK(a.values() == b.values());
        CHECK(a.is_pdf());
        CHECK(a.pieces() >= 2);
        CHECK(a.pieces() <= 12);
        CHECK(a.support_lo() == -0.25);
        CHECK(a.support_hi() == 0.25);
    }
    CHECK(stepfn::random_pdf(1).values() != stepfn::random_pdf(2).values());
}
