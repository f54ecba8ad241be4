#include <doctest.h>

#include <cmath>

#include "autoconv/kernels.hpp"
#include "autoconv/specfun.hpp"

using namespace autoconv;
using kernels::Params;

namespace {

constexpr double kPi = 3.14159265358979323846;

const Params& reference_params() {
    static const Params p = Params::make(0.13, 22);
    return p;
}

// Built once; the Parseval cross-route is the expensive part.
const kernels::KssKernel& reference_kernel() {
    static const kernels::KssKernel k = kernels::KssKernel::build(reference_params());
    return k;
}

// Independently coded variant of the coefficient formula (plain cot,
// no symmetry reduction).
double selberg_c_reference(double u, int n, int k) {
    const double phase = kPi * k / (2.0 * u);
    return (1.0 - static_cast<double>(k) / n) *
               (std::sin(phase) / std::tan(kPi * k / n) + std::cos(phase)) +
           std::sin(phase) / kPi;
}

}  // namespace

TEST_CASE("Params validation") {
    CHECK_THROWS_AS(Params::make(0.0, 22), std::invalid_argument);
    CHECK_THROWS_AS(Params::make(0.25, 22), std::invalid_argument);
    // at u = 0.63, 2u/(2u-1) = 4.846...: n = 4 fails, n = 5 works
    CHECK_THROWS_AS(Params::make(0.13, 4), std::invalid_argument);
    CHECK_NOTHROW(Params::make(0.13, 5));
    CHECK(Params::make(0.13, 22).u == doctest::Approx(0.63));
    CHECK(Params::min_n(0.63) == 5);
    // delta = 0.05 puts 2u/(2u-1) at 11 up to rounding noise: n = 11 is a
    // degenerate tie (denominator ~1e-16) and must be rejected
    CHECK_THROWS_AS(Params::make(0.05, 11), std::invalid_argument);
    CHECK_NOTHROW(Params::make(0.05, 12));
}

TEST_CASE("kss_value support, normalization, evenness") {
    const Params& p = reference_params();
    CHECK(kernels::kss_value(p, p.delta) == 0.0);
    CHECK(kernels::kss_value(p, -2.0) == 0.0);
    const double mass = quad_piecewise([&](double x) { return kernels::kss_value(p, x); },
                                       {-p.delta, 0.0, p.delta}, QuadratureSpec{1e-10, 40000});
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
    for (int i = 1; i <= 20; ++i) {
        const double x = p.delta * i / 21.0;
        CHECK(kernels::kss_value(p, x) == kernels::kss_value(p, -x));
    }
}

TEST_CASE("kss_coeff closed form") {
    const Params& p = reference_params();
    CHECK(kernels::kss_coeff(p, 0) == doctest::Approx(1.0 / 0.63).epsilon(1e-15));
    // j = 1 against direct quadrature of the transform integral
    for (long j : {1L, 2L, 5L}) {
        const double direct =
            2.0 / p.u *
            quad_piecewise(
                [&](double x) {
                    return kernels::kss_value(p, x) * std::cos(2.0 * kPi * x * j / p.u);
                },
                {0.0, p.delta}, QuadratureSpec{1e-11, 40000});
        CAPTURE(j);
        CHECK(std::abs(kernels::kss_coeff(p, j) - direct) < 1e-8);
    }
    for (long j = -30; j <= 30; ++j) {
        CHECK(kernels::kss_coeff(p, j) >= 0.0);
        CHECK(kernels::kss_coeff(p, j) == kernels::kss_coeff(p, -j));
    }
}

TEST_CASE("kss_l2sq window and route agreement") {
    const kernels::KssKernel& k = reference_kernel();
    CHECK(k.l2sq * 0.13 > 0.574);
    CHECK(k.l2sq * 0.13 < 0.5747);

    const kernels::L2Result r = kernels::kss_l2sq(reference_params());
    CHECK(r.route_gap < 1e-6);
    CHECK(r.parseval_J == 5000000);

    // delta = 0.1184 reuses the cached delta-free integral
    const Params p2 = Params::make(0.1184, 22);
    const kernels::L2Result r2 = kernels::kss_l2sq(p2, QuadratureSpec{1e-9, 20000}, 0, false);
    CHECK(r2.value < 0.5747 / 0.1184);
    CHECK(r2.value > 0.574 / 0.1184);
}

TEST_CASE("kss coefficient positivity on Spec(G)") {
    const kernels::KssKernel& k = reference_kernel();
    CHECK(k.min_spec_coeff > 0.0);
    for (int j = 1; j <= 21; ++j) CHECK(k.coeff(j) > 0.0);
    // table lookups and the direct formula agree
    CHECK(k.coeff(13) == kernels::kss_coeff(reference_params(), 13));
    // beyond the table it falls back to the formula
    CHECK(k.coeff(k.coeff_table.truncation_J + 5) ==
          kernels::kss_coeff(reference_params(), k.coeff_table.truncation_J + 5));
}

TEST_CASE("selberg_c formula and domain") {
    CHECK_THROWS_AS(kernels::selberg_c(0.63, 22, 0), std::invalid_argument);
    CHECK_THROWS_AS(kernels::selberg_c(0.63, 22, 22), std::invalid_argument);
    CHECK(std::isfinite(kernels::selberg_c(0.63, 22, 21)));
    for (int n : {5, 12, 22, 40}) {
        for (int k = 1; k <= n - 1; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(kernels::selberg_c(0.63, n, k) ==
                  doctest::Approx(selberg_c_reference(0.63, n, k)).epsilon(1e-12));
        }
    }
}

TEST_CASE("selberg_eval periodicity, evenness, zero mean") {
    const double u = 0.63;
    const int n = 22;
    for (double x : {0.0, 0.07, 0.13, 0.24, 0.3}) {
        CHECK(kernels::selberg_eval(u, n, x) ==
              doctest::Approx(kernels::selberg_eval(u, n, x + u)).epsilon(1e-9));
        CHECK(kernels::selberg_eval(u, n, x) ==
              doctest::Approx(kernels::selberg_eval(u, n, -x)).epsilon(1e-12));
    }
    CHECK(kernels::selberg_eval(u, n, 0.25) >= 1.0);
    const double mean = quad_singular([&](double x) { return kernels::selberg_eval(u, n, x); }, 0.0,
                                      u, QuadratureSpec{1e-10, 40000});
    CHECK(std::abs(mean) < 1e-9);
}

TEST_CASE("selberg_coeff support is exactly Spec(G)") {
    const double u = 0.63;
    const int n = 22;
    CHECK(kernels::selberg_coeff(u, n, 0) == 0.0);
    CHECK(kernels::selberg_coeff(u, n, 22) == 0.0);
    CHECK(kernels::selberg_coeff(u, n, -25) == 0.0);
    for (long j = 1; j <= 21; ++j) {
        CHECK(kernels::selberg_coeff(u, n, j) != 0.0);
        CHECK(kernels::selberg_coeff(u, n, j) == kernels::selberg_coeff(u, n, -j));
    }
    CHECK(kernels::selberg_coeff(u, n, 3) ==
          doctest::Approx(2.0 * u * kernels::selberg_c(u, n, 3) / (2.0 * u * n - 2.0 * u - n)));
}

TEST_CASE("selberg Parseval identity: u sum tG(j)^2 = int_0^u G^2") {
    for (auto [u, n] : {std::pair{0.63, 22}, std::pair{0.63, 5}, std::pair{0.55, 12}}) {
        double coeff_side = 0.0;
        for (int j = 1; j <= n - 1; ++j) {
            const double g = kernels::selberg_coeff(u, n, j);
            coeff_side += 2.0 * g * g;
        }
        coeff_side *= u;
        const double integral_side = quad_singular(
            [&, u = u, n = n](double x) {
                const double g = kernels::selberg_eval(u, n, x);
                return g * g;
            },
            0.0, u, QuadratureSpec{1e-10, 40000});
        CAPTURE(u);
        CAPTURE(n);
        CHECK(std::abs(coeff_side - integral_side) < 1e-8);
    }
}

TEST_CASE("selberg_min certification") {
    const kernels::SelbergMin m = kernels::selberg_min(0.63, 22, 1000000);
    CHECK(m.certified > 1.006);
    CHECK(m.certified < 1.012);
    CHECK(m.grid_min >= m.certified);
    CHECK(m.grid_min == doctest::Approx(1.0061072).epsilon(1e-5));

    // certified value never exceeds a pointwise evaluation
    for (int i = 0; i <= 1000; ++i) {
        const double x = 0.25 * i / 1000.0;
        CHECK(m.certified <= kernels::selberg_eval(0.63, 22, x) + 1e-15);
    }

    // small n admitted by the parameter constraint still majorizes 1
    const kernels::SelbergMin m5 = kernels::selberg_min(0.63, 5, 200000);
    CHECK(m5.certified >= 1.0);
}

TEST_CASE("G >= 1 on a dense grid of [-1/4, 1/4] for valid parameter pairs") {
    for (auto [u, n] : {std::pair{0.63, 22}, std::pair{0.63, 5}, std::pair{0.55, 12},
                        std::pair{0.74, 40}}) {
        REQUIRE(n > 2.0 * u / (2.0 * u - 1.0));
        for (int i = 0; i <= 10000; ++i) {
            const double x = -0.25 + 0.5 * i / 10000.0;
            if (kernels::selberg_eval(u, n, x) < 1.0) {
                CAPTURE(u);
                CAPTURE(n);
                CAPTURE(x);
                CHECK(kernels::selberg_eval(u, n, x) >= 1.0);
            }
        }
    }
}

TEST_CASE("SelbergKernel object matches the free functions") {
    const kernels::SelbergKernel g = kernels::SelbergKernel::build(reference_params(), 100000);
    CHECK(g.spec_max() == 21);
    CHECK(g.coeff(7) == kernels::selberg_coeff(0.63, 22, 7));
    CHECK(g.eval(0.11) == doctest::Approx(kernels::selberg_eval(0.63, 22, 0.11)).epsilon(1e-14));
    CHECK(g.min_on_quarter.certified > 1.005);
}
