#pragma once

#include "waring/expsums.hpp"
#include "waring/rational.hpp"

#include <cstdint>
#include <vector>

namespace waring {

// A(q) = sum over a in [1,q], gcd(a,q)=1, of (S(q,a)/q)^s e(-na/q).
Complex a_q(std::uint64_t q, std::uint64_t n, int s, int k);

// Real part of sum_{q <= Q} A(q); throws tolerance_error when the discarded
// imaginary residual reaches 1e-8 * Q.
double singular_series_truncated(std::uint64_t n, int s, int k, std::uint64_t Q);

// Precomputed (S(q,a)/q)^s for q <= Q: amortizes singular-series evaluation
// over many targets n.
class SingularSeriesTable {
public:
    SingularSeriesTable(int s, int k, std::uint64_t Q);
    double evaluate(std::uint64_t n) const;  // same contract as the free function
    std::uint64_t truncation() const { return Q_; }

private:
    struct Term {
        std::uint64_t a;
        Complex zpow;
    };
    int s_;
    int k_;
    std::uint64_t Q_;
    std::vector<std::vector<Term>> terms_;  // per q
};

// M_n(p^gamma) / p^{gamma(s-1)} with M_n(q) = #{x in (Z/q)^s : sum x_i^k = n},
// exact; gamma = 0 yields 1.
Rational local_density(std::uint64_t p, int gamma, std::uint64_t n, int s, int k);

struct SingularIntegralReport {
    double quadrature = 0;   // real part of the truncated integral
    double imag_residual = 0;
    double closed_form = 0;  // Gamma(1+1/k)^s / Gamma(s/k) * n^{s/k-1}
    double rel_gap = 0;
    double W = 0;
};

// J(n;W) = int_{|beta| <= W P^{-k}} v(beta)^s e(-beta n) dbeta with P = n^{1/k}.
SingularIntegralReport singular_integral(std::uint64_t n, int k, int s, double W);

enum class RhoSource { dickman, empirical, one };

struct MainTermParts {
    double rho = 1;          // the smooth density constant used
    double rho_factor = 1;   // rho^u
    double sing_series = 0;  // S(n;Q)
    double gamma_factor = 0;
    double power = 0;        // n^{s/k - 1}
    double prediction = 0;   // product of the above
};

MainTermParts main_term(std::uint64_t n, int k, int t, int u, double eta,
                        std::uint64_t Q, RhoSource src = RhoSource::dickman);

struct PositivityReport {
    double min_value = 0, max_value = 0;
    std::uint64_t argmin = 0, argmax = 0;
    bool pass = false;  // min > 0.05 and max < 20
};

PositivityReport positivity_check(std::uint64_t n_lo, std::uint64_t n_hi, int k,
                                  int s, std::uint64_t Q);

struct AsymptoticReport {
    std::size_t samples = 0;
    double mean_ratio = 0;  // exact / predicted
    double min_ratio = 0;
    double max_ratio = 0;
};

// Exact representation counts against the main-term prediction over
// n in [n_lo, n_hi], sampling every `step`-th n.
AsymptoticReport asymptotic_comparison(int k, int t, int u, double eta,
                                       std::uint64_t n_lo, std::uint64_t n_hi,
                                       std::uint64_t Q, std::uint64_t step = 1,
                                       RhoSource src = RhoSource::dickman);

} // namespace waring
