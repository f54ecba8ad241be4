#include "autoconv/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace autoconv::extremal {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kLog16OverPi = 0.88254346669577906396;  // log(16)/pi
}  // namespace

double h_value(double x) {
    if (x <= 0.0 || x >= 0.5) return 0.0;
    return 1.0 / std::sqrt(2.0 * x);
}

double h_autoconv(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    if (x <= 0.5) return 0.5 * kPi;
    return 0.5 * kPi - 2.0 * std::atan(std::sqrt(2.0 * x - 1.0));
}

HStats h_stats(const QuadratureSpec& spec) {
    HStats s;
    s.sup = 0.5 * kPi;  // constant plateau on (0,1/2], decreasing after

    // the plateau contributes pi/4 exactly; the decaying arc by quadrature
    // (its derivative blows up like an inverse square root at x = 1/2)
    const double arc = quad_singular([](double x) { return h_autoconv(x); }, 0.5, 1.0, spec);
    s.l1 = 0.25 * kPi + arc;
    s.l1_budget = spec.abs_tol + 1e-12;

    const double arc2 = quad_singular(
        [](double x) {
            const double v = h_autoconv(x);
            return v * v;
        },
        0.5, 1.0, spec);
    s.l2sq = 0.25 * kPi * 0.5 * kPi + arc2;
    s.l2sq_budget = spec.abs_tol + 1e-12;
    return s;
}

stepfn::StepFunction discretize_h(int pieces) {
    if (pieces < 2) throw std::invalid_argument("discretize_h: need at least 2 pieces");
    const double dx = 0.5 / pieces;
    std::vector<double> bp(static_cast<std::size_t>(pieces) + 1);
    std::vector<double> vals(static_cast<std::size_t>(pieces));
    for (int i = 0; i <= pieces; ++i) bp[static_cast<std::size_t>(i)] = i * dx;
    double mass = 0.0;
    for (int i = 0; i < pieces; ++i) {
        vals[static_cast<std::size_t>(i)] = h_value((i + 0.5) * dx);
        mass += vals[static_cast<std::size_t>(i)] * dx;
    }
    for (auto& v : vals) v /= mass;
    return stepfn::StepFunction(std::move(bp), std::move(vals));
}

ProbeReport conjecture1_probe(const stepfn::StepFunction& f) {
    if (!f.is_nonnegative())
        throw std::invalid_argument("conjecture1_probe: f must be nonnegative");
    if (!(f.integral() > 0.0))
        throw std::invalid_argument("conjecture1_probe: f must have positive mass");
    ProbeReport r;
    r.reference = 0.5 * kPi;
    r.support_length = f.support_length();
    const stepfn::PiecewiseLinear conv = stepfn::autoconvolve(f);
    r.sup = conv.sup_norm();
    const double l1f = f.integral();
    r.ratio = r.sup * 2.0 * r.support_length / (l1f * l1f);
    r.at_or_above_reference = r.ratio >= r.reference - 1e-12;
    return r;
}

namespace {

// Extended-precision recomputation of the conjecture-2 ratio, used only
// to re-verify a candidate value above the reference constant.
double ratio2_extended(const stepfn::PiecewiseLinear& conv) {
    const auto& x = conv.nodes();
    const auto& v = conv.node_values();
    long double l1 = 0.0L, l2 = 0.0L, sup = 0.0L;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const long double a = v[i], b = v[i + 1], w = x[i + 1] - x[i];
        l1 += 0.5L * (a + b) * w;
        l2 += (a * a + a * b + b * b) / 3.0L * w;
    }
    for (double nv : v) sup = std::max<long double>(sup, nv);
    return static_cast<double>(l2 / (sup * l1));
}

}  // namespace

ProbeReport conjecture2_probe(const stepfn::StepFunction& f) {
    if (!f.is_pdf(1e-9)) throw std::invalid_argument("conjecture2_probe: f must be a pdf");
    ProbeReport r;
    r.reference = kLog16OverPi;
    r.support_length = f.support_length();
    const stepfn::PiecewiseLinear conv = stepfn::autoconvolve(f);
    r.sup = conv.sup_norm();
    r.l1 = conv.integral();
    r.l2sq = conv.l2sq();
    r.ratio = r.l2sq / (r.sup * r.l1);
    r.at_or_above_reference = r.ratio >= r.reference;
    if (r.ratio > r.reference) {
        // never assert: the inequality is open; re-verify, then report
        const double recheck = ratio2_extended(conv);
        r.counterexample_candidate = recheck > r.reference;
        r.ratio = recheck;
    }
    return r;
}

}  // namespace autoconv::extremal
