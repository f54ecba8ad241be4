#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace autoconv::stepfn {

/// Compactly supported step function: value values[i] on
/// [breakpoints[i], breakpoints[i+1]), zero outside
/// [breakpoints.front(), breakpoints.back()].
class StepFunction {
public:
    StepFunction(std::vector<double> breakpoints, std::vector<double> values);

    const std::vector<double>& breakpoints() const { return bp_; }
    const std::vector<double>& values() const { return val_; }
    std::size_t pieces() const { return val_.size(); }

    double support_lo() const { return bp_.front(); }
    double support_hi() const { return bp_.back(); }
    double support_length() const { return bp_.back() - bp_.front(); }

    double value_at(double x) const;
    double integral() const;
    double l2sq() const;
    /// Sum of absolute jumps, counting the jumps from/to zero at the ends.
    double total_variation() const;
    /// F(x) = int_{-inf}^x f, exact piecewise-linear antiderivative.
    double antiderivative_at(double x) const;

    bool is_nonnegative() const;
    bool is_pdf(double tol = 1e-12) const;

private:
    std::vector<double> bp_;
    std::vector<double> val_;
    std::vector<double> cum_;  // antiderivative at each breakpoint
};

/// Continuous piecewise-linear function with compact support: value
/// node_values[i] at nodes[i], linear between, zero outside.
class PiecewiseLinear {
public:
    PiecewiseLinear(std::vector<double> nodes, std::vector<double> node_values);

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& node_values() const { return vals_; }

    double value_at(double x) const;
    double integral() const;
    double l2sq() const;
    double sup_norm() const;

private:
    std::vector<double> nodes_;
    std::vector<double> vals_;
};

/// Exact autoconvolution f*f.  Nodes are the deduplicated pairwise sums
/// of f's breakpoints; node values come from exact overlap integration.
PiecewiseLinear autoconvolve(const StepFunction& f);

/// Exact autocorrelation (f o f)(x) = int f(y) f(x+y) dy.
PiecewiseLinear autocorrelate(const StepFunction& f);

double sup_norm(const PiecewiseLinear& g);

/// int f(x) e^{-2 pi i xi x} dx in closed form.
std::complex<double> transform_at(const StepFunction& f, double xi);

/// hat f(j), the 1-periodic Fourier coefficient.
std::complex<double> fourier_hat(const StepFunction& f, long j);

/// tilde f(j) = (1/u) int f(x) e^{-2 pi i x j / u} dx, 1/2 < u < 1.
std::complex<double> fourier_tilde(const StepFunction& f, long j, double u);

/// Truncated coefficient table with certified decay data.
/// tail_bound bounds sum_{|j|>J} |coeff(j)|^2; inv_j_bound is a constant
/// A with |coeff(j)| <= A/|j| for |j| > J, for other closed-form tails.
struct CoeffTable {
    double period_param = 1.0;
    long truncation_J = 0;
    std::vector<std::complex<double>> coeffs;  // index j + truncation_J
    double inv_j_bound = 0.0;
    double tail_bound = 0.0;

    const std::complex<double>& at(long j) const { return coeffs[static_cast<std::size_t>(j + truncation_J)]; }
};

CoeffTable hat_table(const StepFunction& f, long J);
CoeffTable tilde_table(const StepFunction& f, double u, long J);

struct ParsevalReport {
    double inner_exact = 0.0;    // int g1 conj(g2), exact
    double partial_sum = 0.0;    // u * sum_{|j|<=J} tilde g1 conj(tilde g2)
    double gap = 0.0;            // |difference|
    double tail_bound = 0.0;     // certified bound on the neglected sum
    long truncation_J = 0;
    bool within_bound = false;   // gap <= tail_bound + 1e-8
};

/// Check the u-period Parseval identity for two step functions supported
/// on (-a1,a1), (-a2,a2) with a1+a2 <= u; rejects wider supports.
ParsevalReport verify_parseval_u(const StepFunction& g1, const StepFunction& g2, double u, long J);

struct HfoldGrid {
    double x0 = 0.0;  // coordinate of samples[0]
    double dx = 0.0;
    std::vector<double> samples;
    double grid_max = 0.0;
};

/// h-fold autoconvolution sampled on a uniform grid via repeated
/// discrete convolution of midpoint Riemann samples.  Approximate; no
/// certified error (the grid max converges at rate O(1/resolution)).
HfoldGrid hfold_grid(const StepFunction& f, int h, int resolution);

/// Seeded random step pdf on (-1/4,1/4): piece count in [2,12], positive
/// values, normalized.  The stream is reproducible across platforms.
StepFunction random_pdf(std::uint64_t seed);

}  // namespace autoconv::stepfn
