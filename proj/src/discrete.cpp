#include "autoconv/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace autoconv::discrete {

NonnegPolynomial::NonnegPolynomial(std::vector<double> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw std::invalid_argument("NonnegPolynomial: empty coefficient list");
    for (double v : c_)
        if (v < 0.0) throw std::invalid_argument("NonnegPolynomial: coefficients must be >= 0");
    if (!(c_.back() > 0.0))
        throw std::invalid_argument("NonnegPolynomial: leading coefficient must be positive");
}

double NonnegPolynomial::at_one() const {
    double s = 0.0;
    for (double v : c_) s += v;
    return s;
}

NonnegPolynomial NonnegPolynomial::square() const {
    std::vector<double> q(2 * c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0.0) continue;
        for (std::size_t j = 0; j < c_.size(); ++j) q[i + j] += c_[i] * c_[j];
    }
    return NonnegPolynomial(std::move(q));
}

double square_height(const NonnegPolynomial& p) {
    const NonnegPolynomial q = p.square();
    return *std::max_element(q.coefficients().begin(), q.coefficients().end());
}

double ratio_R(const NonnegPolynomial& p) {
    const double p1 = p.at_one();
    if (!(p1 > 0.0)) throw std::invalid_argument("ratio_R: requires p(1) > 0");
    return square_height(p) * (p.degree() + 1) / (p1 * p1);
}

IntSet IntSet::make(std::vector<int> elements, int universe_n) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) throw std::invalid_argument("IntSet: set must be nonempty");
    if (universe_n < 1 || elements.front() < 1 || elements.back() > universe_n)
        throw std::invalid_argument("IntSet: elements must lie in {1,...,n}");
    return IntSet{std::move(elements), universe_n};
}

int bstar_g(const IntSet& a) {
    std::vector<int> mult(static_cast<std::size_t>(2 * a.universe_n + 1), 0);
    int g = 0;
    for (int x : a.elements)
        for (int y : a.elements) g = std::max(g, ++mult[static_cast<std::size_t>(x + y)]);
    return g;
}

NonnegPolynomial newman_polynomial(const IntSet& a) {
    std::vector<double> c(static_cast<std::size_t>(a.elements.back()), 0.0);
    for (int x : a.elements) c[static_cast<std::size_t>(x - 1)] = 1.0;
    return NonnegPolynomial(std::move(c));
}

CorollaryReport check_corollary3(const IntSet& a) {
    CorollaryReport r;
    r.g = bstar_g(a);
    r.n = a.universe_n;
    r.size = static_cast<int>(a.elements.size());
    r.lhs = static_cast<double>(r.g) * r.n;
    r.rhs = kRatioConstant * r.size * r.size;
    r.holds = r.lhs > r.rhs;
    return r;
}

CorollaryReport check_corollary4(const IntSet& a) {
    CorollaryReport r;
    r.g = bstar_g(a);
    r.n = a.universe_n;
    r.size = static_cast<int>(a.elements.size());
    const double eps = static_cast<double>(r.size) / r.n;
    r.lhs = r.g;
    r.rhs = kRatioConstant * eps * eps * r.n;
    r.holds = r.lhs > r.rhs;
    return r;
}

IntervalSet::IntervalSet(std::vector<std::pair<double, double>> intervals) : iv_(std::move(intervals)) {
    if (iv_.empty()) throw std::invalid_argument("IntervalSet: must be nonempty");
    std::sort(iv_.begin(), iv_.end());
    for (const auto& [a, b] : iv_)
        if (!(0.0 <= a && a < b && b <= 1.0))
            throw std::invalid_argument("IntervalSet: intervals must be nondegenerate within [0,1]");
    for (std::size_t i = 0; i + 1 < iv_.size(); ++i)
        if (!(iv_[i].second <= iv_[i + 1].first))
            throw std::invalid_argument("IntervalSet: intervals must be pairwise disjoint");
}

double IntervalSet::measure() const {
    double m = 0.0;
    for (const auto& [a, b] : iv_) m += b - a;
    return m;
}

stepfn::StepFunction IntervalSet::indicator() const {
    std::vector<double> bp;
    std::vector<double> vals;
    bp.push_back(iv_.front().first);
    for (std::size_t i = 0; i < iv_.size(); ++i) {
        vals.push_back(1.0);
        bp.push_back(iv_[i].second);
        if (i + 1 < iv_.size() && iv_[i + 1].first > iv_[i].second) {
            vals.push_back(0.0);
            bp.push_back(iv_[i + 1].first);
        }
    }
    return stepfn::StepFunction(std::move(bp), std::move(vals));
}

IntervalSet IntervalSet::random(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int k = 1 + static_cast<int>(rng() % 6);  // 1..6 intervals
    std::set<int> ticks;                            // dyadic grid 0..4096
    while (static_cast<int>(ticks.size()) < 2 * k) ticks.insert(static_cast<int>(rng() % 4097));
    std::vector<int> t(ticks.begin(), ticks.end());
    std::vector<std::pair<double, double>> iv;
    for (int i = 0; i < k; ++i)
        iv.emplace_back(t[static_cast<std::size_t>(2 * i)] / 4096.0,
                        t[static_cast<std::size_t>(2 * i + 1)] / 4096.0);
    return IntervalSet(std::move(iv));
}

double symmetric_subset_measure(const IntervalSet& b) {
    return stepfn::autoconvolve(b.indicator()).sup_norm();
}

PowersOfTwoReport powers_of_two_example(int N) {
    if (N < 1) throw std::invalid_argument("powers_of_two_example: N must be >= 1");
    PowersOfTwoReport r;
    r.N = N;
    // p has N nonzero terms; accumulate the square sparsely
    std::map<long long, long long> q;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) ++q[(1LL << i) + (1LL << j)];
    for (const auto& [deg, cnt] : q) {
        r.sum_sq += cnt * cnt;
        r.sum += cnt;
        r.max_coeff = std::max(r.max_coeff, cnt);
    }
    const long long nn = static_cast<long long>(N) * N;
    r.matches_formula =
        (N >= 2) ? (r.sum_sq == 2 * nn - N && r.max_coeff == 2 && r.sum == nn)
                 : (r.sum_sq == 1 && r.max_coeff == 1 && r.sum == 1);
    return r;
}

}  // namespace autoconv::discrete
