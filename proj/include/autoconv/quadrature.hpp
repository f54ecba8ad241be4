#pragma once

#include <cmath>
#include <cstddef>
#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace autoconv {

/// Absolute-error target and subdivision budget for adaptive quadrature.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    int max_subdivisions = 20000;
};

/// Thrown when the adaptive scheme cannot reach abs_tol within the
/// subdivision budget (usually a sign of an interior singularity).
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Gauss-Legendre nodes/weights on [-1,1], computed once per order by
// Newton iteration on the recurrence.  Self-contained and accurate to
// machine precision; avoids hard-coding long tables.
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

inline GaussRule make_gauss_rule(int n) {
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double xi = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // evaluate P_n(xi) and P_n'(xi)
            double p0 = 1.0, p1 = xi;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (xi * p1 - p0) / (xi * xi - 1.0);
            double dx = p1 / pp;
            xi -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.x[i] = -xi;
        r.x[n - 1 - i] = xi;
        double wi = 2.0 / ((1.0 - xi * xi) * pp * pp);
        r.w[i] = wi;
        r.w[n - 1 - i] = wi;
    }
    return r;
}

inline const GaussRule& gauss10() {
    static const GaussRule r = make_gauss_rule(10);
    return r;
}
inline const GaussRule& gauss21() {
    static const GaussRule r = make_gauss_rule(21);
    return r;
}

template <class F>
double apply_rule(const GaussRule& r, F&& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(c + h * r.x[i]);
    return s * h;
}

struct Segment {
    double a, b, value, err;
};

// Globally adaptive: always bisect the segment with the largest error
// estimate until the summed estimates drop below tol.  Ties break on the
// left endpoint, so the refinement path (and the result) is reproducible.
template <class F>
double adaptive_global(F&& f, double a, double b, double tol, int max_subdivisions) {
    auto eval = [&](double lo, double hi) -> Segment {
        const GaussRule& r = gauss21();
        const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        double fv[21];
        double s = 0.0;
        for (std::size_t i = 0; i < 21; ++i) {
            fv[i] = f(c + h * r.x[i]);
            s += r.w[i] * fv[i];
        }
        const double fine = s * h;
        if (!std::isfinite(fine))
            throw QuadratureError("integrand not finite inside the interval");
        const double coarse = apply_rule(gauss10(), f, lo, hi);
        const double diff = std::abs(fine - coarse);
        // A small rule difference can be a fluke on non-smooth panels;
        // guard it against the integrand's variation around its mean.
        const double mean = 0.5 * s;
        double ra = 0.0;
        for (std::size_t i = 0; i < 21; ++i) ra += r.w[i] * std::abs(fv[i] - mean);
        const double resasc = ra * h;
        double err = diff;
        if (resasc > 0.0 && diff < resasc)
            err = resasc * std::min(1.0, std::pow(200.0 * diff / resasc, 1.5));
        return {lo, hi, fine, err};
    };
    auto worse = [](const Segment& x, const Segment& y) {
        return x.err < y.err || (x.err == y.err && x.a > y.a);
    };

    std::vector<Segment> heap{eval(a, b)};
    double total_err = heap.front().err;
    int splits = 0;
    while (total_err > tol) {
        if (++splits > max_subdivisions)
            throw QuadratureError("max_subdivisions exhausted (interior singularity?)");
        std::pop_heap(heap.begin(), heap.end(), worse);
        const Segment s = heap.back();
        heap.pop_back();
        if (s.b - s.a < 1e-15 * (b - a))
            throw QuadratureError("subinterval collapsed before reaching tolerance");
        const double m = 0.5 * (s.a + s.b);
        const Segment left = eval(s.a, m), right = eval(m, s.b);
        total_err += left.err + right.err - s.err;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), worse);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), worse);
    }
    std::sort(heap.begin(), heap.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    double sum = 0.0;
    for (const Segment& s : heap) sum += s.value;
    return sum;
}

}  // namespace detail

/// Integrate f over (a,b), tolerating inverse-square-root singularities at
/// either endpoint.  The substitution t = a + (b-a) sin^2(theta) removes
/// them (the Jacobian (b-a) sin(2 theta) vanishes at both ends), after
/// which the integrand is refined adaptively with a nested Gauss pair.
/// Deterministic: identical inputs take identical refinement paths.
template <class F>
double quad_singular(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
    if (!(a < b)) throw std::invalid_argument("quad_singular: requires a < b");
    if (!(spec.abs_tol > 0) || spec.max_subdivisions < 1)
        throw std::invalid_argument("quad_singular: invalid QuadratureSpec");
    const double len = b - a;
    auto g = [&](double theta) {
        const double s = std::sin(theta);
        const double t = a + len * s * s;
        // When sin^2 rounds onto an endpoint the true transformed value
        // is negligible (the Jacobian vanishes there); skip evaluating f,
        // which may be singular at the endpoint itself.
        if (t <= a || t >= b) return 0.0;
        return f(t) * len * std::sin(2.0 * theta);
    };
    const double half_pi = 1.57079632679489661923;
    return detail::adaptive_global(g, 0.0, half_pi, spec.abs_tol, spec.max_subdivisions);
}

/// quad_singular summed over consecutive panels pts[0] < pts[1] < ...;
/// the per-panel tolerance is abs_tol split evenly.
template <class F>
double quad_piecewise(F&& f, const std::vector<double>& pts, const QuadratureSpec& spec = {}) {
    if (pts.size() < 2) throw std::invalid_argument("quad_piecewise: need at least one panel");
    QuadratureSpec panel = spec;
    panel.abs_tol = spec.abs_tol / static_cast<double>(pts.size() - 1);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(pts[i] < pts[i + 1]))
            throw std::invalid_argument("quad_piecewise: panel points not increasing");
        total += quad_singular(f, pts[i], pts[i + 1], panel);
    }
    return total;
}

}  // namespace autoconv
