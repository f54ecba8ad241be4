#include "autoconv/stepfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace autoconv::stepfn {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
}  // namespace

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : bp_(std::move(breakpoints)), val_(std::move(values)) {
    if (bp_.size() < 2) throw std::invalid_argument("StepFunction: need at least two breakpoints");
    if (val_.size() + 1 != bp_.size())
        throw std::invalid_argument("StepFunction: values must have breakpoints-1 entries");
    for (std::size_t i = 0; i + 1 < bp_.size(); ++i)
        if (!(bp_[i] < bp_[i + 1]))
            throw std::invalid_argument("StepFunction: breakpoints must be strictly increasing");
    cum_.resize(bp_.size());
    cum_[0] = 0.0;
    for (std::size_t i = 0; i < val_.size(); ++i)
        cum_[i + 1] = cum_[i] + val_[i] * (bp_[i + 1] - bp_[i]);
}

double StepFunction::value_at(double x) const {
    if (x < bp_.front() || x >= bp_.back()) return 0.0;
    const auto it = std::upper_bound(bp_.begin(), bp_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - bp_.begin()) - 1;
    return val_[std::min(i, val_.size() - 1)];
}

double StepFunction::integral() const { return cum_.back(); }

double StepFunction::l2sq() const {
    double s = 0.0;
    for (std::size_t i = 0; i < val_.size(); ++i) s += val_[i] * val_[i] * (bp_[i + 1] - bp_[i]);
    return s;
}

double StepFunction::total_variation() const {
    double tv = std::abs(val_.front()) + std::abs(val_.back());
    for (std::size_t i = 0; i + 1 < val_.size(); ++i) tv += std::abs(val_[i + 1] - val_[i]);
    return tv;
}

double StepFunction::antiderivative_at(double x) const {
    if (x <= bp_.front()) return 0.0;
    if (x >= bp_.back()) return cum_.back();
    const auto it = std::upper_bound(bp_.begin(), bp_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - bp_.begin()) - 1;
    return cum_[i] + val_[i] * (x - bp_[i]);
}

bool StepFunction::is_nonnegative() const {
    for (double v : val_)
        if (v < 0.0) return false;
    return true;
}

bool StepFunction::is_pdf(double tol) const {
    return is_nonnegative() && std::abs(integral() - 1.0) <= tol;
}

PiecewiseLinear::PiecewiseLinear(std::vector<double> nodes, std::vector<double> node_values)
    : nodes_(std::move(nodes)), vals_(std::move(node_values)) {
    if (nodes_.size() != vals_.size() || nodes_.size() < 2)
        throw std::invalid_argument("PiecewiseLinear: mismatched or too-short node data");
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
        if (!(nodes_[i] < nodes_[i + 1]))
            throw std::invalid_argument("PiecewiseLinear: nodes must be strictly increasing");
}

double PiecewiseLinear::value_at(double x) const {
    if (x <= nodes_.front() || x >= nodes_.back()) {
        if (x == nodes_.front()) return vals_.front();
        if (x == nodes_.back()) return vals_.back();
        return 0.0;
    }
    const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
    const double t = (x - nodes_[i]) / (nodes_[i + 1] - nodes_[i]);
    return vals_[i] + t * (vals_[i + 1] - vals_[i]);
}

double PiecewiseLinear::integral() const {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
        s += 0.5 * (vals_[i] + vals_[i + 1]) * (nodes_[i + 1] - nodes_[i]);
    return s;
}

double PiecewiseLinear::l2sq() const {
    // int of (linear segment)^2 = (a^2 + ab + b^2)/3 * width
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
        const double a = vals_[i], b = vals_[i + 1];
        s += (a * a + a * b + b * b) / 3.0 * (nodes_[i + 1] - nodes_[i]);
    }
    return s;
}

double PiecewiseLinear::sup_norm() const {
    double m = 0.0;
    for (double v : vals_) m = std::max(m, std::abs(v));
    return m;
}

namespace {

// Shared core for f*f and f o f.  In both cases the result is piecewise
// linear with corners exactly at {x_i + s*x_j} (s = +1 for convolution
// breakpoint sums, s = -1 for correlation differences), and the value at
// a corner is sum_i v_i * (F(hi_i) - F(lo_i)) with F the exact
// antiderivative of f.
PiecewiseLinear pair_transform(const StepFunction& f, bool convolution) {
    const auto& bp = f.breakpoints();
    std::set<double> node_set;
    for (double a : bp)
        for (double b : bp) node_set.insert(convolution ? a + b : a - b);
    std::vector<double> nodes(node_set.begin(), node_set.end());

    const auto& v = f.values();
    std::vector<double> nv(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const double x = nodes[k];
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0.0) continue;
            double lo, hi;
            if (convolution) {
                // int_{bp_i}^{bp_{i+1}} f(x-y) dy = F(x-bp_i) - F(x-bp_{i+1})
                lo = x - bp[i + 1];
                hi = x - bp[i];
            } else {
                // int_{bp_i}^{bp_{i+1}} f(x+y) dy = F(x+bp_{i+1}) - F(x+bp_i)
                lo = x + bp[i];
                hi = x + bp[i + 1];
            }
            s += v[i] * (f.antiderivative_at(hi) - f.antiderivative_at(lo));
        }
        nv[k] = s;
    }
    return PiecewiseLinear(std::move(nodes), std::move(nv));
}

}  // namespace

PiecewiseLinear autoconvolve(const StepFunction& f) { return pair_transform(f, true); }

PiecewiseLinear autocorrelate(const StepFunction& f) { return pair_transform(f, false); }

double sup_norm(const PiecewiseLinear& g) { return g.sup_norm(); }

std::complex<double> transform_at(const StepFunction& f, double xi) {
    if (xi == 0.0) return {f.integral(), 0.0};
    const auto& bp = f.breakpoints();
    const auto& v = f.values();
    const std::complex<double> den(0.0, kTwoPi * xi);
    std::complex<double> s{0.0, 0.0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0.0) continue;
        const double a = -kTwoPi * xi * bp[i];
        const double b = -kTwoPi * xi * bp[i + 1];
        const std::complex<double> ea(std::cos(a), std::sin(a));
        const std::complex<double> eb(std::cos(b), std::sin(b));
        s += v[i] * (ea - eb);
    }
    return s / den;
}

std::complex<double> fourier_hat(const StepFunction& f, long j) {
    return transform_at(f, static_cast<double>(j));
}

std::complex<double> fourier_tilde(const StepFunction& f, long j, double u) {
    if (!(u > 0.5 && u < 1.0)) throw std::invalid_argument("fourier_tilde: requires 1/2 < u < 1");
    return transform_at(f, static_cast<double>(j) / u) / u;
}

namespace {

CoeffTable make_table(const StepFunction& f, double period_param, long J) {
    if (J < 0) throw std::invalid_argument("coefficient table: J must be >= 0");
    CoeffTable t;
    t.period_param = period_param;
    t.truncation_J = J;
    t.coeffs.resize(static_cast<std::size_t>(2 * J + 1));
    for (long j = 0; j <= J; ++j) {
        const std::complex<double> c =
            (period_param == 1.0) ? fourier_hat(f, j) : fourier_tilde(f, j, period_param);
        t.coeffs[static_cast<std::size_t>(J + j)] = c;
        t.coeffs[static_cast<std::size_t>(J - j)] = std::conj(c);
    }
    // |coeff(j)| <= TV(f)/(pi |j|) by integration by parts (an extra 1/u
    // and the frequency scaling j/u cancel for the tilde normalization).
    t.inv_j_bound = f.total_variation() / kPi;
    // sum_{|j|>J} (A/j)^2 <= 2 A^2 / J
    t.tail_bound = (J > 0) ? 2.0 * t.inv_j_bound * t.inv_j_bound / static_cast<double>(J)
                           : std::numeric_limits<double>::infinity();
    return t;
}

}  // namespace

CoeffTable hat_table(const StepFunction& f, long J) { return make_table(f, 1.0, J); }

CoeffTable tilde_table(const StepFunction& f, double u, long J) {
    if (!(u > 0.5 && u < 1.0)) throw std::invalid_argument("tilde_table: requires 1/2 < u < 1");
    return make_table(f, u, J);
}

ParsevalReport verify_parseval_u(const StepFunction& g1, const StepFunction& g2, double u, long J) {
    if (!(u > 0.5 && u < 1.0)) throw std::invalid_argument("verify_parseval_u: requires 1/2 < u < 1");
    if (J < 1) throw std::invalid_argument("verify_parseval_u: J must be >= 1");
    const double a1 = std::max(std::abs(g1.support_lo()), std::abs(g1.support_hi()));
    const double a2 = std::max(std::abs(g2.support_lo()), std::abs(g2.support_hi()));
    if (a1 + a2 > u)
        throw std::invalid_argument("verify_parseval_u: supports too wide (a1+a2 > u)");

    // exact int g1 g2 over the common refinement
    double inner = 0.0;
    {
        std::set<double> cuts(g1.breakpoints().begin(), g1.breakpoints().end());
        cuts.insert(g2.breakpoints().begin(), g2.breakpoints().end());
        std::vector<double> pts(cuts.begin(), cuts.end());
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const double mid = 0.5 * (pts[i] + pts[i + 1]);
            inner += g1.value_at(mid) * g2.value_at(mid) * (pts[i + 1] - pts[i]);
        }
    }

    double partial = 0.0;
    {
        // j = 0 term plus twice the real part of the positive-j terms
        const std::complex<double> c0 = fourier_tilde(g1, 0, u) * std::conj(fourier_tilde(g2, 0, u));
        double acc = c0.real();
        for (long j = 1; j <= J; ++j) {
            const std::complex<double> c =
                fourier_tilde(g1, j, u) * std::conj(fourier_tilde(g2, j, u));
            acc += 2.0 * c.real();
        }
        partial = u * acc;
    }

    ParsevalReport r;
    r.inner_exact = inner;
    r.partial_sum = partial;
    r.gap = std::abs(inner - partial);
    const double A1 = g1.total_variation() / kPi;
    const double A2 = g2.total_variation() / kPi;
    r.tail_bound = u * 2.0 * A1 * A2 / static_cast<double>(J);
    r.truncation_J = J;
    r.within_bound = r.gap <= r.tail_bound + 1e-8;
    return r;
}

HfoldGrid hfold_grid(const StepFunction& f, int h, int resolution) {
    if (h < 2 || h % 2 != 0) throw std::invalid_argument("hfold_grid: h must be an even integer >= 2");
    if (resolution < (1 << 10)) throw std::invalid_argument("hfold_grid: resolution must be >= 2^10");

    const double lo = f.support_lo();
    const double dx = f.support_length() / resolution;
    std::vector<double> base(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) base[static_cast<std::size_t>(i)] = f.value_at(lo + (i + 0.5) * dx);

    std::vector<double> acc = base;
    for (int fold = 2; fold <= h; ++fold) {
        std::vector<double> next(acc.size() + base.size() - 1, 0.0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] == 0.0) continue;
            const double ai = acc[i] * dx;
            for (std::size_t j = 0; j < base.size(); ++j) next[i + j] += ai * base[j];
        }
        acc = std::move(next);
    }

    HfoldGrid g;
    g.dx = dx;
    g.x0 = h * lo + 0.5 * h * dx;  // sample k sits at h*lo + (k + h/2) dx
    g.samples = std::move(acc);
    g.grid_max = *std::max_element(g.samples.begin(), g.samples.end());
    return g;
}

namespace {

// Portable uniform doubles in [0,1) from the raw mt19937_64 stream, so
// that seeded suites reproduce bit-identically across standard libraries.
double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

StepFunction random_pdf(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int pieces = 2 + static_cast<int>(rng() % 11);  // 2..12
    std::set<double> cuts;
    while (static_cast<int>(cuts.size()) < pieces - 1) {
        const double c = -0.25 + 0.5 * unit_double(rng);
        if (c > -0.25 && c < 0.25) cuts.insert(c);
    }
    std::vector<double> bp;
    bp.push_back(-0.25);
    bp.insert(bp.end(), cuts.begin(), cuts.end());
    bp.push_back(0.25);

    std::vector<double> vals(static_cast<std::size_t>(pieces));
    for (auto& v : vals) v = 0.05 + 0.95 * unit_double(rng);
    double mass = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i) mass += vals[i] * (bp[i + 1] - bp[i]);
    for (auto& v : vals) v /= mass;
    return StepFunction(std::move(bp), std::move(vals));
}

}  // namespace autoconv::stepfn
