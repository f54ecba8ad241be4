#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "autoconv/kernels.hpp"
#include "autoconv/quadrature.hpp"
#include "autoconv/stepfn.hpp"

namespace autoconv::verify {

/// Result of running the four-lemma chain on one test pdf.  The checks
/// are theorems, so a failure indicates an implementation bug.
struct ChainReport {
    std::uint64_t seed = 0;  // 0 when the input was not seeded
    double sup_ff = 0.0;     // ||f*f||_inf

    double i_ast = 0.0;   // int (f*f) K
    double i_circ = 0.0;  // int (f o f) K
    double quad_budget = 0.0;

    bool holder_ok = false;  // (a) i_ast <= sup_ff

    double cauchy_rhs = 0.0;  // 1 + sqrt(sup-1) sqrt(||K||_2^2 - 1)
    bool cauchy_ok = false;   // (b)

    double equality_lhs = 0.0;        // i_ast + i_circ
    double equality_rhs = 0.0;        // 2/u + 2u^2 sum (Re tf)^2 Re tK, truncated
    double equality_gap = 0.0;
    double equality_allowance = 0.0;  // certified tail + 1e-6 + quadrature budget
    bool equality_ok = false;         // (c)

    double lower_lhs = 0.0;  // u^2 sum_{j!=0} (Re tf)^2 tK, truncated
    double lower_rhs = 0.0;  // (min G)^2 / sum_{Spec} tG^2/tK
    bool lower_ok = false;   // (d)

    bool sup_above_theorem = false;  // sup_ff >= 1.262

    bool pass() const { return holder_ok && cauchy_ok && equality_ok && lower_ok; }
    std::string failed_checks() const;
};

/// Runs checks (a)-(d) on a pdf supported inside [-1/4, 1/4].
ChainReport verify_lemma_chain(const stepfn::StepFunction& f, const kernels::Params& params,
                               const stepfn::CoeffTable& kernel_coeffs, double kss_l2sq,
                               const kernels::SelbergKernel& selberg,
                               const QuadratureSpec& spec = {1e-9, 20000});

struct SuiteSummary {
    int count = 0;
    int passed = 0;
    double min_sup_ff = 0.0;
    std::uint64_t base_seed = 0;
    std::vector<ChainReport> failures;
    bool all_above_theorem = true;
};

/// Runs the chain on `count` seeded random pdfs (seeds base_seed,
/// base_seed+1, ...), in parallel across instances; the summary is
/// aggregated in seed order and is deterministic.
SuiteSummary run_chain_suite(int count, std::uint64_t base_seed, const kernels::Params& params,
                             const kernels::KssKernel& kernel, const kernels::SelbergKernel& selberg,
                             int threads = 0);

}  // namespace autoconv::verify
