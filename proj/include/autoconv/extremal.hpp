#pragma once

#include "autoconv/quadrature.hpp"
#include "autoconv/stepfn.hpp"

namespace autoconv::extremal {

/// h(x) = 1/sqrt(2x) on (0,1/2), 0 elsewhere; a pdf.
double h_value(double x);

/// (h*h)(x): pi/2 on (0,1/2], pi/2 - 2 arctan(sqrt(2x-1)) on (1/2,1),
/// 0 otherwise.
double h_autoconv(double x);

struct HStats {
    double l1 = 0.0;
    double sup = 0.0;
    double l2sq = 0.0;
    double l1_budget = 0.0;
    double l2sq_budget = 0.0;
};

/// (||h*h||_1, ||h*h||_inf, ||h*h||_2^2); the sup is exact (the plateau
/// value), the integrals come from quadrature of the closed form.
HStats h_stats(const QuadratureSpec& spec = {1e-8, 20000});

/// Step pdf sampling h at cell midpoints on (0,1/2), normalized.
stepfn::StepFunction discretize_h(int pieces);

struct ProbeReport {
    double ratio = 0.0;
    double reference = 0.0;  // pi/2 for probe 1, log16/pi for probe 2
    bool at_or_above_reference = false;
    bool counterexample_candidate = false;  // probe 2 only, re-verified
    double sup = 0.0, l1 = 0.0, l2sq = 0.0;
    double support_length = 0.0;
};

/// ||f*f||_inf * 2I / ||f||_1^2 against pi/2; f nonnegative with compact
/// support of length I.
ProbeReport conjecture1_probe(const stepfn::StepFunction& f);

/// ||f*f||_2^2 / (||f*f||_inf ||f*f||_1) against log16/pi; a value above
/// the reference is re-verified in extended precision before being
/// flagged (reported, never asserted).
ProbeReport conjecture2_probe(const stepfn::StepFunction& f);

}  // namespace autoconv::extremal
