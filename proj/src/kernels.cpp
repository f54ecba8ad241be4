#include "autoconv/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "autoconv/specfun.hpp"

namespace autoconv::kernels {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
}  // namespace

int Params::min_n(double u) {
    return static_cast<int>(std::floor(2.0 * u / (2.0 * u - 1.0))) + 1;
}

Params Params::make(double delta, int n) {
    if (!(delta > 0.0 && delta < 0.25))
        throw std::invalid_argument("Params: delta must lie in (0, 1/4)");
    const double u = delta + 0.5;
    // The 1e-9 floor rejects ties where 2un-2u-n is only positive by
    // rounding; the periodic kernel's denominator would be pure noise.
    if (!(2.0 * u * n - 2.0 * u - n > 1e-9))
        throw std::invalid_argument("Params: n must exceed 2u/(2u-1)");
    return Params{delta, u, n};
}

double kss_value(const Params& p, double x) {
    if (std::abs(x) >= p.delta) return 0.0;
    return specfun::ss_autocorr(x / p.delta) / p.delta;
}

double kss_coeff(const Params& p, long j) {
    if (j == 0) return 1.0 / p.u;
    const double b = specfun::bessel_j0(kPi * p.delta * static_cast<double>(std::labs(j)) / p.u);
    return b * b / p.u;
}

double ss_autocorr_l2sq(const QuadratureSpec& spec) {
    auto compute = [](const QuadratureSpec& s) {
        QuadratureSpec half = s;
        half.abs_tol = 0.5 * s.abs_tol;
        // even integrand; the log^2 singularity sits at the left endpoint
        return 2.0 * quad_singular(
                         [](double t) {
                             const double v = specfun::ss_autocorr(t);
                             return v * v;
                         },
                         0.0, 1.0, half);
    };
    static const double cached = compute(QuadratureSpec{1e-9, 20000});
    if (spec.abs_tol == 1e-9 && spec.max_subdivisions == 20000) return cached;
    return compute(spec);
}

L2Result kss_l2sq(const Params& p, const QuadratureSpec& spec, long parseval_J, bool run_parseval) {
    L2Result r;
    r.value = ss_autocorr_l2sq(spec) / p.delta;
    r.budget = spec.abs_tol / p.delta + 1e-12;
    if (run_parseval) {
        // Ascending-j terms shrink like 1/j^2; sum them smallest first.
        long double acc = 0.0L;
        for (long j = parseval_J; j >= 1; --j) {
            const double c = kss_coeff(p, j);
            acc += 2.0L * static_cast<long double>(c) * c;
        }
        const double c0 = kss_coeff(p, 0);
        acc += static_cast<long double>(c0) * c0;
        r.parseval_value = static_cast<double>(p.u * acc);
        // tilde K(j)^2 < 1/(pi delta j)^2, summed over |j| > J
        r.parseval_tail = 2.0 * p.u / (kPi * kPi * p.delta * p.delta * static_cast<double>(parseval_J));
        r.parseval_J = parseval_J;
        r.route_gap = std::abs(r.value - r.parseval_value);
        if (r.route_gap > 1e-6)
            throw std::runtime_error("kss_l2sq: quadrature and Parseval routes disagree beyond 1e-6");
    }
    return r;
}

double KssKernel::coeff(long j) const {
    if (std::labs(j) <= coeff_table.truncation_J) return coeff_table.at(j).real();
    return kss_coeff(params, j);
}

KssKernel KssKernel::build(const Params& p, long table_J, const QuadratureSpec& spec,
                           long parseval_J, bool run_parseval) {
    KssKernel k;
    k.params = p;
    const L2Result l2 = kss_l2sq(p, spec, parseval_J, run_parseval);
    k.l2sq = l2.value;
    k.l2sq_budget = l2.budget;

    k.coeff_table.period_param = p.u;
    k.coeff_table.truncation_J = table_J;
    k.coeff_table.coeffs.resize(static_cast<std::size_t>(2 * table_J + 1));
    for (long j = 0; j <= table_J; ++j) {
        const double c = kss_coeff(p, j);
        k.coeff_table.coeffs[static_cast<std::size_t>(table_J + j)] = {c, 0.0};
        k.coeff_table.coeffs[static_cast<std::size_t>(table_J - j)] = {c, 0.0};
    }
    k.coeff_table.inv_j_bound = 1.0 / (kPi * p.delta);  // tilde K(j) <= 1/(pi delta j)
    k.coeff_table.tail_bound =
        2.0 / (kPi * kPi * p.delta * p.delta * static_cast<double>(table_J));

    double mn = kss_coeff(p, 1);
    for (int j = 1; j <= p.n - 1; ++j) mn = std::min(mn, kss_coeff(p, j));
    if (!(mn > 0.0))
        throw std::runtime_error(
            "KssKernel: tilde K vanishes on Spec(G); these Params are rejected");
    k.min_spec_coeff = mn;
    return k;
}

double selberg_c(double u, int n, int k) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("selberg_c: k must lie in [1, n-1]");
    // cot(pi k/n) via the k <-> n-k symmetry keeps the argument in
    // (0, pi/2], avoiding cancellation at the extreme indices.
    const int kr = std::min(k, n - k);
    const double theta = kPi * static_cast<double>(kr) / n;
    double cotv = std::cos(theta) / std::sin(theta);
    if (2 * k > n) cotv = -cotv;
    const double phase = kPi * k / (2.0 * u);
    return (1.0 - static_cast<double>(k) / n) * (cotv * std::sin(phase) + std::cos(phase)) +
           std::sin(phase) / kPi;
}

double selberg_eval(double u, int n, double x) {
    const double denom = 2.0 * u * n - 2.0 * u - n;
    double s = 0.0;
    for (int k = 1; k <= n - 1; ++k) s += selberg_c(u, n, k) * std::cos(kTwoPi * k * x / u);
    return 4.0 * u / denom * s;
}

double selberg_coeff(double u, int n, long j) {
    const long a = std::labs(j);
    if (a < 1 || a > n - 1) return 0.0;
    return 2.0 * u * selberg_c(u, n, static_cast<int>(a)) / (2.0 * u * n - 2.0 * u - n);
}

SelbergMin selberg_min(double u, int n, long M) {
    if (M < 2) throw std::invalid_argument("selberg_min: M must be >= 2");
    const double denom = 2.0 * u * n - 2.0 * u - n;
    std::vector<double> coef(static_cast<std::size_t>(n));  // coef[k], k = 1..n-1
    double lip = 0.0;
    for (int k = 1; k <= n - 1; ++k) {
        coef[static_cast<std::size_t>(k)] = 4.0 * u / denom * selberg_c(u, n, k);
        lip += std::abs(coef[static_cast<std::size_t>(k)]) * kTwoPi * k / u;
    }

    const double dx = 0.25 / static_cast<double>(M - 1);
    double best = std::numeric_limits<double>::infinity();
    double bestx = 0.0;
    for (long i = 0; i < M; ++i) {
        const double x = static_cast<double>(i) * dx;
        // cos(2 pi k x / u) by the three-term cosine recurrence
        const double c1 = std::cos(kTwoPi * x / u);
        double ckm1 = 1.0, ck = c1;
        double s = 0.0;
        for (int k = 1; k <= n - 1; ++k) {
            s += coef[static_cast<std::size_t>(k)] * ck;
            const double next = 2.0 * c1 * ck - ckm1;
            ckm1 = ck;
            ck = next;
        }
        if (s < best) {
            best = s;
            bestx = x;
        }
    }

    SelbergMin r;
    r.grid_min = best;
    r.grid_argmin = bestx;
    r.lipschitz = lip;
    r.grid_points = M;
    // every x in [0,1/4] lies within dx/2 of a grid point
    r.certified = best - lip * 0.5 * dx;
    return r;
}

double SelbergKernel::coeff(long j) const {
    const long a = std::labs(j);
    if (a < 1 || a > params.n - 1) return 0.0;
    return 2.0 * params.u * c_values[static_cast<std::size_t>(a - 1)] /
           (2.0 * params.u * params.n - 2.0 * params.u - params.n);
}

double SelbergKernel::eval(double x) const {
    const double denom = 2.0 * params.u * params.n - 2.0 * params.u - params.n;
    double s = 0.0;
    for (int k = 1; k <= params.n - 1; ++k)
        s += c_values[static_cast<std::size_t>(k - 1)] * std::cos(kTwoPi * k * x / params.u);
    return 4.0 * params.u / denom * s;
}

SelbergKernel SelbergKernel::build(const Params& p, long M) {
    SelbergKernel g;
    g.params = p;
    g.c_values.resize(static_cast<std::size_t>(p.n - 1));
    for (int k = 1; k <= p.n - 1; ++k) g.c_values[static_cast<std::size_t>(k - 1)] = selberg_c(p.u, p.n, k);
    g.min_on_quarter = selberg_min(p.u, p.n, M);
    return g;
}

}  // namespace autoconv::kernels
