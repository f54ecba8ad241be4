#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "autoconv/kernels.hpp"
#include "autoconv/quadrature.hpp"

namespace autoconv::bound {

enum class Mode { full, simple };

/// Ledger of every constant feeding the final lower bound.  The emitted
/// bound is the adverse-rounded (conservative) one; error_budget is the
/// distance to the nominal value.
struct BoundReport {
    double delta = 0.0;
    double u = 0.0;
    int n = 0;  // 0 in simple mode
    double kss_l2sq = 0.0;
    double kss_l2sq_budget = 0.0;
    double min_g = 0.0;  // certified; 0 in simple mode
    double min_g_budget = 0.0;
    double L = 0.0;
    double R = 0.0;
    double bound = 0.0;
    double error_budget = 0.0;
    Mode mode = Mode::full;
};

/// L = (1/2) sqrt(kss_l2sq - 1), rounded up by the propagated budget.
/// Rejects kss_l2sq <= 1.
double compute_L(double kss_l2sq, double l2sq_budget = 0.0);

/// R = 2/u + 2 min_g^2 / sum_{j in Spec(G)} tilde G(j)^2 / tilde K(j),
/// rounded down by the budget propagated from min_g.  Rejects parameters
/// with a vanishing tilde K on Spec(G).
double compute_R(const kernels::Params& p, double min_g, const kernels::KssKernel& kernel,
                 const kernels::SelbergKernel& selberg, double min_g_budget = 0.0);

/// Positive-root solve: (sqrt(L^2+R-2) - L)^2 + 1 when R > 2, else the
/// vacuous value 1.
double solve_bound(double L, double R);

struct FullOptions {
    long table_J = 2000;
    long parseval_J = 5000000;
    bool parseval_check = true;
    long min_grid_M = 1000000;
    QuadratureSpec quad = {1e-9, 20000};
};

BoundReport simple_bound(double delta, const QuadratureSpec& spec = {1e-9, 20000});
BoundReport full_bound(const kernels::Params& p, const FullOptions& opt = {});

struct SweepRange {
    double delta_min = 0.05;
    double delta_max = 0.24;
    double delta_step = 0.005;
    int n_min = 5;
    int n_max = 40;
};

struct SweepResult {
    std::vector<BoundReport> reports;                 // input order
    std::vector<std::pair<double, int>> infeasible;   // skipped (delta, n)
    std::size_t argmax = 0;                           // index of best bound
};

/// Sweep points skip the slow cross-checks: the Parseval route for
/// ||K||_2^2 and the 10^6-point minimum grid.
FullOptions sweep_defaults();

/// Full-bound evaluation over the grid, skipping infeasible pairs.
/// Points run concurrently; results keep input order.
SweepResult sweep(const SweepRange& range, const FullOptions& opt = sweep_defaults(),
                  int threads = 0);

std::string csv_header();
std::string to_csv_row(const BoundReport& r);
std::string to_csv(const std::vector<BoundReport>& rows);

/// Stable-field-order JSON object; budgets appear as sibling fields.
std::string to_json(const BoundReport& r, int indent = 2);

}  // namespace autoconv::bound
