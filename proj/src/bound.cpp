#include "autoconv/bound.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace autoconv::bound {

double compute_L(double kss_l2sq, double l2sq_budget) {
    if (!(kss_l2sq > 1.0)) throw std::invalid_argument("compute_L: kss_l2sq must exceed 1");
    // increasing in l2sq, so the adverse direction is up
    return 0.5 * std::sqrt(kss_l2sq + l2sq_budget - 1.0) + 1e-12;
}

double compute_R(const kernels::Params& p, double min_g, const kernels::KssKernel& kernel,
                 const kernels::SelbergKernel& selberg, double min_g_budget) {
    if (!(kernel.min_spec_coeff > 0.0))
        throw std::invalid_argument("compute_R: tilde K must be positive on Spec(G)");
    double spec_sum = 0.0;
    for (int j = 1; j <= selberg.spec_max(); ++j) {
        const double kt = kernel.coeff(j);
        if (!(kt > 0.0))
            throw std::invalid_argument("compute_R: tilde K must be positive on Spec(G)");
        const double gt = selberg.coeff(j);
        spec_sum += 2.0 * gt * gt / kt;
    }
    const double mg = std::max(min_g - min_g_budget, 0.0);  // adverse direction is down
    return 2.0 / p.u + 2.0 * mg * mg / spec_sum - 1e-12;
}

double solve_bound(double L, double R) {
    if (!(L > 0.0)) throw std::invalid_argument("solve_bound: L must be positive");
    if (R <= 2.0) return 1.0;
    const double root = std::sqrt(L * L + R - 2.0) - L;
    return root * root + 1.0;
}

BoundReport simple_bound(double delta, const QuadratureSpec& spec) {
    if (!(delta > 0.0 && delta < 0.25))
        throw std::invalid_argument("simple_bound: delta must lie in (0, 1/4)");
    const double u = delta + 0.5;
    BoundReport r;
    r.delta = delta;
    r.u = u;
    r.mode = Mode::simple;
    r.kss_l2sq = kernels::ss_autocorr_l2sq(spec) / delta;
    r.kss_l2sq_budget = spec.abs_tol / delta + 1e-12;
    r.L = compute_L(r.kss_l2sq, r.kss_l2sq_budget);
    r.R = 2.0 / u;
    r.bound = solve_bound(r.L, r.R);
    const double nominal = solve_bound(compute_L(r.kss_l2sq), r.R);
    r.error_budget = std::max(nominal - r.bound, 0.0) + 1e-12;
    return r;
}

BoundReport full_bound(const kernels::Params& p, const FullOptions& opt) {
    const kernels::KssKernel kernel =
        kernels::KssKernel::build(p, opt.table_J, opt.quad, opt.parseval_J, opt.parseval_check);
    const kernels::SelbergKernel selberg = kernels::SelbergKernel::build(p, opt.min_grid_M);

    BoundReport r;
    r.delta = p.delta;
    r.u = p.u;
    r.n = p.n;
    r.mode = Mode::full;
    r.kss_l2sq = kernel.l2sq;
    r.kss_l2sq_budget = kernel.l2sq_budget;
    r.min_g = selberg.min_on_quarter.certified;
    r.min_g_budget = selberg.min_on_quarter.grid_min - selberg.min_on_quarter.certified;
    r.L = compute_L(r.kss_l2sq, r.kss_l2sq_budget);
    // min_g is already the certified (rounded-down) value
    r.R = compute_R(p, r.min_g, kernel, selberg);
    r.bound = solve_bound(r.L, r.R);
    const double nominal =
        solve_bound(compute_L(r.kss_l2sq),
                    compute_R(p, selberg.min_on_quarter.grid_min, kernel, selberg));
    r.error_budget = std::max(nominal - r.bound, 0.0) + 1e-12;
    return r;
}

FullOptions sweep_defaults() {
    FullOptions o;
    o.parseval_check = false;
    o.min_grid_M = 100000;
    o.table_J = 64;  // compute_R only reads j <= n-1
    return o;
}

SweepResult sweep(const SweepRange& range, const FullOptions& opt, int threads) {
    if (!(range.delta_step > 0.0))
        throw std::invalid_argument("sweep: delta_step must be positive");
    std::vector<std::pair<double, int>> points;
    // half-step slack so a delta_max that is a whole number of steps away
    // is included despite rounding
    for (double d = range.delta_min; d <= range.delta_max + 0.5 * range.delta_step;
         d += range.delta_step)
        for (int n = range.n_min; n <= range.n_max; ++n) points.emplace_back(d, n);

    SweepResult out;
    if (points.empty()) return out;

    std::vector<BoundReport> slots(points.size());
    std::vector<char> feasible(points.size(), 0);

    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min<int>(nthreads, static_cast<int>(points.size())));
    auto worker = [&](int t) {
        for (std::size_t i = static_cast<std::size_t>(t); i < points.size();
             i += static_cast<std::size_t>(nthreads)) {
            const auto [d, n] = points[i];
            try {
                slots[i] = full_bound(kernels::Params::make(d, n), opt);
                feasible[i] = 1;
            } catch (const std::exception&) {
                // flagged as infeasible (parameter constraint violated,
                // or a tilde-K zero on Spec(G))
            }
        }
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < points.size(); ++i) {
        if (feasible[i])
            out.reports.push_back(slots[i]);
        else
            out.infeasible.push_back(points[i]);
    }
    for (std::size_t i = 0; i < out.reports.size(); ++i)
        if (out.reports[i].bound > out.reports[out.argmax].bound) out.argmax = i;
    return out;
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::string csv_header() { return "delta,u,n,kss_l2sq,min_g,L,R,bound,error_budget,mode"; }

std::string to_csv_row(const BoundReport& r) {
    std::ostringstream os;
    os << fmt(r.delta) << ',' << fmt(r.u) << ',' << r.n << ',' << fmt(r.kss_l2sq) << ','
       << fmt(r.min_g) << ',' << fmt(r.L) << ',' << fmt(r.R) << ',' << fmt(r.bound) << ','
       << fmt(r.error_budget) << ',' << (r.mode == Mode::full ? "full" : "simple");
    return os.str();
}

std::string to_csv(const std::vector<BoundReport>& rows) {
    std::string s = csv_header();
    s += '\n';
    for (const auto& r : rows) {
        s += to_csv_row(r);
        s += '\n';
    }
    return s;
}

std::string to_json(const BoundReport& r, int indent) {
    nlohmann::ordered_json j;
    j["mode"] = r.mode == Mode::full ? "full" : "simple";
    j["delta"] = r.delta;
    j["u"] = r.u;
    j["n"] = r.n;
    j["kss_l2sq"] = r.kss_l2sq;
    j["kss_l2sq_error_budget"] = r.kss_l2sq_budget;
    j["min_g"] = r.min_g;
    j["min_g_error_budget"] = r.min_g_budget;
    j["L"] = r.L;
    j["R"] = r.R;
    j["bound"] = r.bound;
    j["error_budget"] = r.error_budget;
    return j.dump(indent);
}

}  // namespace autoconv::bound
