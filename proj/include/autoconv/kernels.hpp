#pragma once

#include <vector>

#include "autoconv/quadrature.hpp"
#include "autoconv/stepfn.hpp"

namespace autoconv::kernels {

/// Parameter triple (delta, u, n) with u = delta + 1/2 and
/// n > 2u/(2u-1); throws on violation.
struct Params {
    double delta;
    double u;
    int n;

    static Params make(double delta, int n);
    /// Smallest admissible n for this delta.
    static int min_n(double u);
};

/// K_ss(x) = (1/delta) (ss o ss)(x/delta); a pdf on (-delta,delta).
double kss_value(const Params& p, double x);

/// tilde K_ss(j) = J0(pi delta j / u)^2 / u  (= 1/u at j = 0).
double kss_coeff(const Params& p, long j);

struct L2Result {
    double value = 0.0;          // quadrature route, primary
    double budget = 0.0;         // absolute error budget of `value`
    double parseval_value = 0.0; // u * sum_j tilde K(j)^2, truncated
    double parseval_tail = 0.0;  // certified bound on the neglected sum
    long parseval_J = 0;
    double route_gap = 0.0;      // |value - parseval_value|
};

/// ||K_ss||_2^2 by two independent routes: quadrature of (ss o ss)^2
/// scaled by 1/delta, and the u-period Parseval sum of the squared
/// coefficients.  Throws if the routes disagree by more than 1e-6.
L2Result kss_l2sq(const Params& p, const QuadratureSpec& spec = {1e-9, 20000},
                  long parseval_J = 5000000, bool run_parseval = true);

/// ||ss o ss||_2^2, cached at the default tolerance (delta-independent).
double ss_autocorr_l2sq(const QuadratureSpec& spec = {1e-9, 20000});

struct KssKernel {
    Params params;
    double l2sq = 0.0;
    double l2sq_budget = 0.0;
    stepfn::CoeffTable coeff_table;  // tilde K_ss(j), |j| <= truncation_J
    double min_spec_coeff = 0.0;     // min tilde K(j) over 1 <= |j| <= n-1

    double coeff(long j) const;

    /// Builds the table and checks tilde K(j) > 0 on 1 <= |j| <= n-1
    /// (rejecting parameter coincidences that would break the lower
    /// bound, which divides by these coefficients).
    static KssKernel build(const Params& p, long table_J = 2000,
                           const QuadratureSpec& spec = {1e-9, 20000},
                           long parseval_J = 5000000, bool run_parseval = true);
};

/// C_{u,n}(k) for 1 <= k <= n-1; rejects k outside that range.
double selberg_c(double u, int n, int k);

/// G_{u,n}(x), the u-periodic even cosine sum.
double selberg_eval(double u, int n, double x);

/// tilde G_{u,n}(j): 2u C(|j|)/(2un-2u-n) for 1 <= |j| <= n-1, else 0.
double selberg_coeff(double u, int n, long j);

struct SelbergMin {
    double certified = 0.0;  // grid_min - lipschitz * (grid spacing)/2
    double grid_min = 0.0;
    double grid_argmin = 0.0;
    double lipschitz = 0.0;  // sum_k |coef_k| 2 pi k / u, bounds |G'|
    long grid_points = 0;
};

/// Certified lower bound for min G_{u,n} over [0, 1/4] from an M-point
/// inclusive grid plus a Lipschitz gap correction.
SelbergMin selberg_min(double u, int n, long M = 1000000);

struct SelbergKernel {
    Params params;
    std::vector<double> c_values;  // C(1..n-1)
    SelbergMin min_on_quarter;
    // Spec(G) = { j : 1 <= |j| <= n-1 }

    double coeff(long j) const;
    double eval(double x) const;
    int spec_max() const { return params.n - 1; }

    static SelbergKernel build(const Params& p, long M = 1000000);
};

}  // namespace autoconv::kernels
