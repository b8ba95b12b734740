#pragma once

#include "waring/smooth.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace waring {

using Complex = std::complex<double>;

// e(theta) = exp(2*pi*i*theta) for theta in [0,1).
Complex unit_phase(double theta);

// z^n by binary exponentiation (std::pow on complex goes through exp/log).
Complex ipow(Complex z, unsigned n);

// Table of q-th roots of unity: roots[j] = e(j/q).
std::vector<Complex> roots_of_unity(std::uint64_t q);

// frac(alpha * x^k), exact: the double alpha is treated as the dyadic
// rational it is, and x^k enters only through its residue modulo the
// denominator, so no precision is lost however large x^k gets.
double exact_frac_phase(double alpha, std::uint64_t x, int k);

// alpha = a/q with the phase reduced through x^k mod q.
struct RationalAlpha {
    std::int64_t a = 0;
    std::uint64_t q = 1;
};

// f(alpha) = sum_{1 <= x <= P} e(alpha x^k)
Complex weyl_sum_f(int k, double P, double alpha);
Complex weyl_sum_f(int k, double P, const RationalAlpha& alpha);

// g(alpha) = sum over the eta-smooth x in [1, P] of e(alpha x^k)
Complex smooth_weyl_sum_g(int k, double P, double eta, double alpha);
Complex smooth_weyl_sum_g(int k, const SmoothSet& set, double alpha);

// S(q,a) = sum_{r=1}^{q} e(a r^k / q).  In normalized mode gcd(a,q) = 1 is
// enforced (throws std::invalid_argument otherwise).
Complex gauss_sum_S(std::uint64_t q, std::int64_t a, int k, bool normalized = false);

// Adaptive Simpson on a complex integrand over [a, b], absolute tolerance tol.
Complex adaptive_simpson(const std::function<Complex(double)>& f, double a,
                         double b, double tol);

// v(beta) = int_0^P e(beta gamma^k) dgamma, by phase-sized panels plus
// adaptive Simpson inside each panel; absolute error target ~1e-8 * P.
Complex v_integral(int k, double P, double beta);
// Same integral at doubled panel resolution and tighter tolerance
// (step-halving cross-check).
Complex v_integral_refined(int k, double P, double beta);

struct ApproxReport {
    Complex exact;      // the sum itself
    Complex approx;     // (rho) q^{-1} S(q,a) v(alpha - a/q)
    double  gap = 0;    // |exact - approx|
    double  reference = 0;  // log P for f, P (log P)^{-1/2} for g
};

ApproxReport major_arc_approx_f(int k, double P, std::uint64_t q, std::int64_t a,
                                double alpha);
// rho <= 0 selects the default dickman_rho(1/eta).
ApproxReport major_arc_approx_g(int k, double P, double eta, std::uint64_t q,
                                std::int64_t a, double alpha, double rho = -1.0);

} // namespace waring
