#pragma once

#include <cstdint>
#include <vector>

#include "autoconv/stepfn.hpp"

namespace autoconv::discrete {

/// The constant 1.262/2 from the continuous lower bound; every discrete
/// inequality below is strict against it.
inline constexpr double kRatioConstant = 0.631;

/// Polynomial with nonnegative real coefficients and nonzero leading
/// coefficient.
class NonnegPolynomial {
public:
    explicit NonnegPolynomial(std::vector<double> coefficients);

    const std::vector<double>& coefficients() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    double at_one() const;  // p(1) = sum of coefficients

    NonnegPolynomial square() const;  // exact coefficient convolution

private:
    std::vector<double> c_;
};

/// H(p^2): maximum coefficient of the square.
double square_height(const NonnegPolynomial& p);

/// R(p) = H(p^2) (deg p + 1) / p(1)^2; rejects the zero polynomial.
double ratio_R(const NonnegPolynomial& p);

/// Sorted distinct integers inside {1, ..., universe_n}.
struct IntSet {
    std::vector<int> elements;
    int universe_n = 0;

    static IntSet make(std::vector<int> elements, int universe_n);
};

/// Max multiplicity over the multiset {a1 + a2 : ai in A}, ordered pairs.
int bstar_g(const IntSet& a);

/// Newman polynomial with exponents a - 1 (so deg(p) + 1 <= n).
NonnegPolynomial newman_polynomial(const IntSet& a);

struct CorollaryReport {
    int g = 0;
    int n = 0;
    int size = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

/// g*n > 0.631 |A|^2 (equivalently |A| < sqrt(gn/0.631)).
CorollaryReport check_corollary3(const IntSet& a);

/// With eps = |A|/n: g > 0.631 eps^2 n.
CorollaryReport check_corollary4(const IntSet& a);

/// Disjoint open intervals inside [0,1], sorted.
class IntervalSet {
public:
    explicit IntervalSet(std::vector<std::pair<double, double>> intervals);

    const std::vector<std::pair<double, double>>& intervals() const { return iv_; }
    double measure() const;

    /// Indicator as a step function over the hull (gaps carry value 0).
    stepfn::StepFunction indicator() const;

    /// Seeded random set with dyadic endpoints (denominator 2^12).
    static IntervalSet random(std::uint64_t seed);

private:
    std::vector<std::pair<double, double>> iv_;
};

/// Measure of the largest centrally symmetric subset of B, i.e.
/// sup (chi_B * chi_B).
double symmetric_subset_measure(const IntervalSet& b);

struct PowersOfTwoReport {
    int N = 0;
    long long sum_sq = 0;     // sum q_i^2
    long long max_coeff = 0;  // max q_i
    long long sum = 0;        // sum q_i
    bool matches_formula = false;  // (2N^2-N, 2, N^2) for N >= 2
};

/// Square of the polynomial with p_i = 1 exactly at i = 2^k, 0 <= k < N.
PowersOfTwoReport powers_of_two_example(int N);

}  // namespace autoconv::discrete
