#include "autoconv/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "autoconv/bound.hpp"
#include "autoconv/discrete.hpp"
#include "autoconv/extremal.hpp"
#include "autoconv/kernels.hpp"
#include "autoconv/stepfn.hpp"
#include "autoconv/verify.hpp"

namespace autoconv::cli {

namespace {

using json = nlohmann::ordered_json;
constexpr double kPi = 3.14159265358979323846;

// --out is resolved against AUTOCONV_OUT_DIR when relative.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::filesystem::path p(out_path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("AUTOCONV_OUT_DIR")) p = std::filesystem::path(dir) / p;
    }
    std::ofstream os(p);
    if (!os) throw std::runtime_error("cannot open output file: " + p.string());
    os << text;
    if (!text.empty() && text.back() != '\n') os << '\n';
}

json report_to_json(const bound::BoundReport& r) { return json::parse(bound::to_json(r)); }

std::string report_to_text(const bound::BoundReport& r) {
    std::ostringstream os;
    os.precision(12);
    os << "mode            " << (r.mode == bound::Mode::full ? "full" : "simple") << "\n"
       << "delta           " << r.delta << "\n"
       << "u = delta+1/2   " << r.u << "\n";
    if (r.mode == bound::Mode::full) os << "n               " << r.n << "\n";
    os << "||K||_2^2       " << r.kss_l2sq << "  (budget " << r.kss_l2sq_budget << ")\n";
    if (r.mode == bound::Mode::full)
        os << "min G on [0,.25]" << ' ' << r.min_g << "  (budget " << r.min_g_budget << ")\n";
    os << "L               " << r.L << "\n"
       << "R               " << r.R << "\n"
       << "bound           " << r.bound << "  (budget " << r.error_budget << ")\n";
    return os.str();
}

std::vector<double> parse_reals(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw CLI::ValidationError("empty numeric list");
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (double v : parse_reals(s)) out.push_back(static_cast<int>(v));
    return out;
}

int cmd_bound(double delta, int n, bool simple, long grid, double tol,
              const std::string& format, const std::string& out) {
    bound::BoundReport rep;
    if (simple) {
        rep = bound::simple_bound(delta, QuadratureSpec{tol, 20000});
    } else {
        bound::FullOptions opt;
        opt.min_grid_M = grid;
        opt.quad = QuadratureSpec{tol, 20000};
        rep = bound::full_bound(kernels::Params::make(delta, n), opt);
    }
    emit(format == "text" ? report_to_text(rep) : bound::to_json(rep), out);
    return 0;
}

int cmd_sweep(const bound::SweepRange& range, long grid, const std::string& format,
              const std::string& out) {
    bound::FullOptions opt = bound::sweep_defaults();
    opt.min_grid_M = grid;
    const bound::SweepResult res = bound::sweep(range, opt);
    if (format == "json") {
        json j;
        j["points"] = json::array();
        for (const auto& r : res.reports) j["points"].push_back(report_to_json(r));
        j["infeasible"] = json::array();
        for (const auto& [d, n] : res.infeasible) j["infeasible"].push_back({{"delta", d}, {"n", n}});
        if (!res.reports.empty()) j["argmax"] = report_to_json(res.reports[res.argmax]);
        emit(j.dump(2), out);
    } else {
        emit(bound::to_csv(res.reports), out);
        if (!res.reports.empty()) {
            const auto& best = res.reports[res.argmax];
            std::cerr << "argmax: delta=" << best.delta << " n=" << best.n
                      << " bound=" << best.bound << "\n";
        }
    }
    return 0;
}

int cmd_verify(int count, std::uint64_t seed, double delta, int n, long grid,
               const std::string& format, const std::string& out) {
    const kernels::Params p = kernels::Params::make(delta, n);
    const kernels::KssKernel kernel = kernels::KssKernel::build(p);
    const kernels::SelbergKernel selberg = kernels::SelbergKernel::build(p, grid);
    const verify::SuiteSummary s = verify::run_chain_suite(count, seed, p, kernel, selberg);

    json j;
    j["count"] = s.count;
    j["seed"] = s.base_seed;
    j["passed"] = s.passed;
    j["failed"] = s.count - s.passed;
    j["min_sup_ff"] = s.min_sup_ff;
    j["theorem_bound"] = 1.262;
    j["all_at_or_above_theorem_bound"] = s.all_above_theorem;
    j["failures"] = json::array();
    for (const auto& f : s.failures)
        j["failures"].push_back({{"seed", f.seed}, {"checks", f.failed_checks()}});
    if (format == "text") {
        std::ostringstream os;
        os.precision(12);
        os << s.passed << "/" << s.count << " pass, min ||f*f||_inf = " << s.min_sup_ff << "\n";
        for (const auto& f : s.failures)
            os << "FAIL seed=" << f.seed << " checks=" << f.failed_checks() << "\n";
        emit(os.str(), out);
    } else {
        emit(j.dump(2), out);
    }
    return (s.passed == s.count && s.all_above_theorem) ? 0 : 1;
}

int cmd_poly(const std::string& coeffs, const std::string& out) {
    const discrete::NonnegPolynomial p(parse_reals(coeffs));
    const double r = discrete::ratio_R(p);
    json j;
    j["coefficients"] = p.coefficients();
    j["degree"] = p.degree();
    j["p1"] = p.at_one();
    j["square_height"] = discrete::square_height(p);
    j["ratio"] = r;
    j["constant"] = discrete::kRatioConstant;
    j["above_constant"] = r > discrete::kRatioConstant;
    emit(j.dump(2), out);
    return r > discrete::kRatioConstant ? 0 : 1;
}

int cmd_bset(const std::string& set_csv, int n, const std::string& out) {
    const discrete::IntSet a = discrete::IntSet::make(parse_ints(set_csv), n);
    const auto c3 = discrete::check_corollary3(a);
    const auto c4 = discrete::check_corollary4(a);
    json j;
    j["set"] = a.elements;
    j["n"] = a.universe_n;
    j["g"] = discrete::bstar_g(a);
    j["newman_ratio"] = discrete::ratio_R(discrete::newman_polynomial(a));
    j["corollary_gn"] = {{"lhs_gn", c3.lhs}, {"rhs_0631_A2", c3.rhs}, {"holds", c3.holds}};
    j["corollary_multiplicity"] = {{"lhs_g", c4.lhs}, {"rhs_0631_eps2_n", c4.rhs}, {"holds", c4.holds}};
    emit(j.dump(2), out);
    return (c3.holds && c4.holds) ? 0 : 1;
}

int cmd_sym(const std::string& intervals_arg, const std::string& out) {
    std::vector<std::pair<double, double>> iv;
    std::stringstream ss(intervals_arg);
    std::string pair_str;
    while (std::getline(ss, pair_str, ';')) {
        if (pair_str.empty()) continue;
        const auto nums = parse_reals(pair_str);
        if (nums.size() != 2) throw CLI::ValidationError("intervals must be a,b pairs");
        iv.emplace_back(nums[0], nums[1]);
    }
    const discrete::IntervalSet b(std::move(iv));
    const double mu = b.measure();
    const double sym = discrete::symmetric_subset_measure(b);
    json j;
    j["intervals"] = json::array();
    for (const auto& [a, c] : b.intervals()) j["intervals"].push_back({a, c});
    j["measure"] = mu;
    j["symmetric_subset_measure"] = sym;
    j["lower_bound_0631_mu2"] = discrete::kRatioConstant * mu * mu;
    j["exceeds_lower_bound"] = sym > discrete::kRatioConstant * mu * mu;
    emit(j.dump(2), out);
    return sym > discrete::kRatioConstant * mu * mu ? 0 : 1;
}

int cmd_extremal(int probe, int level_lo, int level_hi, const std::string& out) {
    json j;
    j["probe"] = probe;
    j["reference"] = probe == 1 ? 0.5 * kPi : 0.88254346669577906396;
    j["levels"] = json::array();
    bool all_ok = true;
    for (int k = level_lo; k <= level_hi; ++k) {
        const int pieces = 1 << k;
        const stepfn::StepFunction f = extremal::discretize_h(pieces);
        const extremal::ProbeReport r =
            probe == 1 ? extremal::conjecture1_probe(f) : extremal::conjecture2_probe(f);
        json lvl;
        lvl["level"] = k;
        lvl["pieces"] = pieces;
        lvl["ratio"] = r.ratio;
        if (probe == 1) {
            lvl["at_or_above_reference"] = r.at_or_above_reference;
            all_ok = all_ok && r.at_or_above_reference;
        } else {
            lvl["counterexample_candidate"] = r.counterexample_candidate;
        }
        j["levels"].push_back(lvl);
    }
    emit(j.dump(2), out);
    return all_ok ? 0 : 1;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Numerical toolkit for lower bounds on the supremum of autoconvolutions"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "json";
    double tol = 1e-9;
    long grid = 1000000;
    std::uint64_t seed = 1;

    // bound
    auto* sc_bound = app.add_subcommand("bound", "Constant ledger and final lower bound");
    double b_delta = 0.13;
    int b_n = 22;
    bool b_simple = false;
    sc_bound->add_option("--delta", b_delta, "kernel support half-width, in (0, 1/4)")->required();
    sc_bound->add_option("--n", b_n, "periodic-kernel order");
    sc_bound->add_flag("--simple", b_simple, "drop the periodic-kernel term (R = 2/u)");
    sc_bound->add_option("--grid", grid, "minimum-certification grid points");
    sc_bound->add_option("--tol", tol, "quadrature absolute tolerance");
    sc_bound->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sc_bound->add_option("--out", out_path, "output file (stdout if omitted)");

    // sweep
    auto* sc_sweep = app.add_subcommand("sweep", "Bound over a (delta, n) grid, CSV");
    bound::SweepRange range;
    std::string sweep_format = "csv";
    sc_sweep->add_option("--delta-min", range.delta_min);
    sc_sweep->add_option("--delta-max", range.delta_max);
    sc_sweep->add_option("--delta-step", range.delta_step);
    sc_sweep->add_option("--n-min", range.n_min);
    sc_sweep->add_option("--n-max", range.n_max);
    long sweep_grid = 100000;
    sc_sweep->add_option("--grid", sweep_grid, "minimum-certification grid points per sweep point");
    sc_sweep->add_option("--format", sweep_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sc_sweep->add_option("--out", out_path, "output file (stdout if omitted)");

    // verify
    auto* sc_verify = app.add_subcommand("verify", "Lemma-chain suite on seeded random pdfs");
    int v_count = 100;
    double v_delta = 0.13;
    int v_n = 22;
    sc_verify->add_option("--count", v_count, "number of random pdfs");
    sc_verify->add_option("--seed", seed, "base seed");
    sc_verify->add_option("--delta", v_delta);
    sc_verify->add_option("--n", v_n);
    sc_verify->add_option("--grid", grid);
    sc_verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    sc_verify->add_option("--out", out_path);

    // poly
    auto* sc_poly = app.add_subcommand("poly", "Height ratio R(p) for a nonnegative polynomial");
    std::string poly_coeffs;
    sc_poly->add_option("--coeffs", poly_coeffs, "comma-separated coefficients, p_0 first")
        ->required();
    sc_poly->add_option("--out", out_path);

    // bset
    auto* sc_bset = app.add_subcommand("bset", "Additive-multiplicity checks for an integer set");
    std::string bset_set;
    int bset_n = 0;
    sc_bset->add_option("--set", bset_set, "comma-separated elements of A")->required();
    sc_bset->add_option("--n", bset_n, "universe size n")->required();
    sc_bset->add_option("--out", out_path);

    // sym
    auto* sc_sym = app.add_subcommand("sym", "Largest centrally symmetric subset measure");
    std::string sym_intervals;
    sc_sym->add_option("--intervals", sym_intervals, "semicolon-separated a,b pairs in [0,1]")
        ->required();
    sc_sym->add_option("--out", out_path);

    // extremal
    auto* sc_ext = app.add_subcommand("extremal", "Conjecture probes on discretizations of h");
    int probe = 1;
    std::string levels = "4:10";
    sc_ext->add_option("--probe", probe, "1 (sup ratio) or 2 (L2 ratio)")
        ->check(CLI::IsMember({1, 2}));
    sc_ext->add_option("--levels", levels, "k range lo:hi; pieces = 2^k");
    sc_ext->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (sc_bound->parsed()) {
            if (!b_simple && !sc_bound->count("--n")) b_n = 22;
            return cmd_bound(b_delta, b_n, b_simple, grid, tol, format, out_path);
        }
        if (sc_sweep->parsed()) return cmd_sweep(range, sweep_grid, sweep_format, out_path);
        if (sc_verify->parsed()) return cmd_verify(v_count, seed, v_delta, v_n, grid, format, out_path);
        if (sc_poly->parsed()) return cmd_poly(poly_coeffs, out_path);
        if (sc_bset->parsed()) return cmd_bset(bset_set, bset_n, out_path);
        if (sc_sym->parsed()) return cmd_sym(sym_intervals, out_path);
        if (sc_ext->parsed()) {
            int lo = 4, hi = 10;
            const auto colon = levels.find(':');
            if (colon == std::string::npos) {
                lo = hi = std::stoi(levels);
            } else {
                lo = std::stoi(levels.substr(0, colon));
                hi = std::stoi(levels.substr(colon + 1));
            }
            if (lo < 1 || hi < lo || hi > 16) throw std::invalid_argument("levels out of range");
            return cmd_extremal(probe, lo, hi, out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace autoconv::cli
