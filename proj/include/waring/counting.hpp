#pragma once

#include "waring/rational.hpp"
#include "waring/smooth.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace waring {

// Integer coefficient vector of a k-th-power generating polynomial:
// coeff[m] counts representations of m using `copies` variables from the
// recorded base set.  All coefficients are exact big integers.
struct CoefficientSeries {
    std::vector<Integer> coeff;
    int    k = 0;
    double P = 0;
    bool   smooth = false;
    double eta = 1.0;
    int    copies = 1;

    std::size_t degree() const { return coeff.empty() ? 0 : coeff.size() - 1; }
    Integer mass() const;
};

// Indicator series with a single variable: 1 at x^k for each admissible x.
CoefficientSeries power_series(int k, double P);
CoefficientSeries power_series(int k, double P, double eta);  // smooth base

// Coefficients of a * b, optionally truncated at max_degree.
CoefficientSeries multiply(const CoefficientSeries& a, const CoefficientSeries& b,
                           std::optional<std::size_t> max_degree = {});

// copies-fold convolution of the base with itself (copies = 0 gives {1}).
CoefficientSeries convolve_power(const CoefficientSeries& base, int copies,
                                 std::optional<std::size_t> max_degree = {});

// Full truncated series of (classical)^t * (smooth)^u with cap P.
CoefficientSeries mixed_rep_series(int k, int t, int u, double eta, double P,
                                   std::size_t max_degree);

// Ordered representations n = x_1^k + ... + x_t^k + y_1^k + ... + y_u^k with
// 1 <= x_i <= P and the y_j eta-smooth in [1, P].  The single-argument form
// takes P = n^{1/k}.
Integer mixed_rep_count(int k, int t, int u, double eta, std::uint64_t n);
Integer mixed_rep_count(int k, int t, int u, double eta, double P, std::uint64_t n);

// Parseval: sum of squared coefficients of base^s = the exact value of the
// 2s-th moment integral of the base's exponential sum over [0,1).
Integer even_moment(const CoefficientSeries& base, int s);

// Representation count by the orthogonality identity: the rectangle rule with
// Q = degree + 1 nodes is exact for trigonometric polynomials of degree < Q.
// Throws tolerance_error when the pre-rounding imaginary part or rounding
// residual exceeds 1e-6.
Integer dft_rep_count(int k, int t, int u, double eta, std::uint64_t n);
Integer dft_rep_count(int k, int t, int u, double eta, double P, std::uint64_t n);

// All counts 0..n_max in one pass over the shared evaluation grid.
std::vector<Integer> dft_rep_table(int k, int t, int u, double eta, double P,
                                   std::uint64_t n_max);

struct VinogradovCount {
    int s = 0;
    int k = 0;
    std::uint64_t X = 0;
    Integer J;
};

// Number of solutions of sum_i (x_i^j - y_i^j) = 0 for j = 1..k with
// 1 <= x_i, y_i <= X, by bucketing x-tuples on their power-sum vector.
VinogradovCount vinogradov_count(int s, int k, std::uint64_t X);

struct MinorMomentReport {
    Integer full_moment;       // exact 2(w/2)-th moment over [0,1)
    double  major_quadrature = 0;
    double  minor_quadrature = 0;
    double  minor_estimate = 0;   // full - major quadrature
    double  consistency_gap = 0;  // |major + minor - full| / full
    double  reference = 0;        // P^{w-k-1}
    double  ratio = 0;            // minor_estimate / reference
};

// Report-only split of the w-th absolute moment of f into major/minor parts
// (w even).  grid is the sample density per unit length of arc.
MinorMomentReport minor_arc_moment(int k, double P, int w, std::size_t grid);

} // namespace waring
