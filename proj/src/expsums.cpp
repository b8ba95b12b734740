#include "waring/expsums.hpp"

#include "waring/common.hpp"
#include "waring/dickman.hpp"

#include <gmpxx.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace waring {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// alpha decomposed as sign * m / 2^d with integer m < 2^53, d = 53 - exp2.
struct Dyadic {
    bool negative = false;
    std::uint64_t mantissa = 0;
    int d = 0;  // alpha = mantissa * 2^(-d); d <= 0 means alpha is an integer
};

Dyadic decompose(double alpha) {
    Dyadic dy;
    dy.negative = alpha < 0;
    int e = 0;
    const double mant = std::frexp(std::abs(alpha), &e);
    dy.mantissa = static_cast<std::uint64_t>(std::ldexp(mant, 53));
    dy.d = 53 - e;
    return dy;
}

} // namespace

Complex unit_phase(double theta) {
    return {std::cos(kTwoPi * theta), std::sin(kTwoPi * theta)};
}

Complex ipow(Complex z, unsigned n) {
    Complex acc{1.0, 0.0};
    while (n > 0) {
        if (n & 1) acc *= z;
        z *= z;
        n >>= 1;
    }
    return acc;
}

std::vector<Complex> roots_of_unity(std::uint64_t q) {
    std::vector<Complex> roots(q);
    for (std::uint64_t j = 0; j < q; ++j)
        roots[j] = unit_phase(static_cast<double>(j) / static_cast<double>(q));
    return roots;
}

double exact_frac_phase(double alpha, std::uint64_t x, int k) {
    if (alpha == 0.0 || x == 0) return 0.0;
    const Dyadic dy = decompose(alpha);
    if (dy.d <= 0 || dy.mantissa == 0) return 0.0;  // alpha is an integer

    double frac;
    if (dy.d <= 64) {
        // x^k mod 2^d through natural u64 wraparound plus a final mask
        const std::uint64_t mask =
            dy.d == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << dy.d) - 1);
        std::uint64_t xk = 1;
        for (int i = 0; i < k; ++i) xk *= x;
        const unsigned __int128 prod =
            static_cast<unsigned __int128>(dy.mantissa) * (xk & mask);
        const std::uint64_t res = static_cast<std::uint64_t>(prod) & mask;
        frac = std::ldexp(static_cast<double>(res), -dy.d);
    } else {
        mpz_class mod = 1;
        mpz_mul_2exp(mod.get_mpz_t(), mod.get_mpz_t(), static_cast<mp_bitcnt_t>(dy.d));
        mpz_class xk, base = static_cast<unsigned long>(x);
        mpz_powm_ui(xk.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k),
                    mod.get_mpz_t());
        mpz_class res = xk * mpz_class(static_cast<unsigned long>(dy.mantissa));
        mpz_fdiv_r(res.get_mpz_t(), res.get_mpz_t(), mod.get_mpz_t());
        frac = std::ldexp(res.get_d(), -dy.d);
    }
    if (dy.negative && frac != 0.0) frac = 1.0 - frac;
    return frac;
}

Complex weyl_sum_f(int k, double P, double alpha) {
    if (k < 2 || P < 1) throw std::invalid_argument("weyl_sum_f: need k >= 2, P >= 1");
    const auto n = static_cast<std::uint64_t>(std::floor(P));
    Complex sum{0.0, 0.0};
    for (std::uint64_t x = 1; x <= n; ++x)
        sum += unit_phase(exact_frac_phase(alpha, x, k));
    return sum;
}

Complex weyl_sum_f(int k, double P, const RationalAlpha& alpha) {
    if (k < 2 || P < 1) throw std::invalid_argument("weyl_sum_f: need k >= 2, P >= 1");
    const std::uint64_t q = alpha.q;
    if (q == 0) throw std::invalid_argument("weyl_sum_f: zero denominator");
    const std::uint64_t a =
        static_cast<std::uint64_t>(((alpha.a % static_cast<std::int64_t>(q)) + static_cast<std::int64_t>(q)) %
                                   static_cast<std::int64_t>(q));
    const auto roots = roots_of_unity(q);
    const auto n = static_cast<std::uint64_t>(std::floor(P));
    Complex sum{0.0, 0.0};
    for (std::uint64_t x = 1; x <= n; ++x) {
        const std::uint64_t xk = powmod_u64(x, static_cast<std::uint64_t>(k), q);
        sum += roots[static_cast<std::size_t>(
            static_cast<unsigned __int128>(a) * xk % q)];
    }
    return sum;
}

Complex smooth_weyl_sum_g(int k, const SmoothSet& set, double alpha) {
    Complex sum{0.0, 0.0};
    for (const auto x : set.members)
        sum += unit_phase(exact_frac_phase(alpha, x, k));
    return sum;
}

Complex smooth_weyl_sum_g(int k, double P, double eta, double alpha) {
    return smooth_weyl_sum_g(k, smooth_set(P, eta), alpha);
}

Complex gauss_sum_S(std::uint64_t q, std::int64_t a, int k, bool normalized) {
    if (q == 0) throw std::invalid_argument("gauss_sum_S: q >= 1 required");
    const std::uint64_t a_mod =
        static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(q)) + static_cast<std::int64_t>(q)) %
                                   static_cast<std::int64_t>(q));
    if (normalized && gcd_u64(a_mod == 0 ? q : a_mod, q) != 1)
        throw std::invalid_argument("gauss_sum_S: gcd(a,q) != 1 in normalized mode");
    const auto roots = roots_of_unity(q);
    Complex sum{0.0, 0.0};
    for (std::uint64_t r = 1; r <= q; ++r) {
        const std::uint64_t rk = powmod_u64(r, static_cast<std::uint64_t>(k), q);
        sum += roots[static_cast<std::size_t>(
            static_cast<unsigned __int128>(a_mod) * rk % q)];
    }
    return sum;
}

namespace {

// Adaptive Simpson on a complex integrand; classic 15-fold error estimate.
template <typename F>
Complex simpson_ad(const F& f, double a, double b, Complex fa, Complex fm, Complex fb,
                   Complex whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const Complex flm = f(lm);
    const Complex frm = f(rm);
    const Complex left  = (fa + 4.0 * flm + fm) * ((m - a) / 6.0);
    const Complex right = (fm + 4.0 * frm + fb) * ((b - m) / 6.0);
    const Complex delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_ad(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_ad(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

Complex v_integral_impl(int k, double P, double beta, double cycles_per_panel,
                        double tol_scale) {
    if (k < 2 || P < 1) throw std::invalid_argument("v_integral: need k >= 2, P >= 1");
    if (beta == 0.0) return {P, 0.0};

    const double abs_beta = std::abs(beta);
    const double total_phase = abs_beta * std::pow(P, k);
    const double panels_needed = total_phase / cycles_per_panel;
    if (panels_needed > static_cast<double>(budget().max_panels))
        throw budget_error("v_integral: oscillation budget exceeded (|beta| P^k = " +
                           std::to_string(total_phase) + ")");

    const auto f = [k, beta](double g) {
        return unit_phase(beta * std::pow(g, k) -
                          std::floor(beta * std::pow(g, k)));
    };

    // panel boundaries where the phase crosses multiples of cycles_per_panel
    const auto npanels = static_cast<std::size_t>(panels_needed) + 1;
    const double tol_per_panel = tol_scale * P / static_cast<double>(npanels);
    Complex sum{0.0, 0.0};
    double lo = 0.0;
    for (std::size_t j = 1; j <= npanels; ++j) {
        double hi = std::pow(static_cast<double>(j) * cycles_per_panel / abs_beta,
                             1.0 / k);
        if (j == npanels || hi > P) hi = P;
        if (hi > lo) sum += adaptive_simpson(f, lo, hi, tol_per_panel);
        lo = hi;
        if (lo >= P) break;
    }
    return sum;
}

} // namespace

Complex adaptive_simpson(const std::function<Complex(double)>& f, double a,
                         double b, double tol) {
    const double m = 0.5 * (a + b);
    const Complex fa = f(a), fm = f(m), fb = f(b);
    const Complex whole = (fa + 4.0 * fm + fb) * ((b - a) / 6.0);
    return simpson_ad(f, a, b, fa, fm, fb, whole, tol, 28);
}

Complex v_integral(int k, double P, double beta) {
    return v_integral_impl(k, P, beta, 0.25, 1e-9);
}

Complex v_integral_refined(int k, double P, double beta) {
    return v_integral_impl(k, P, beta, 0.125, 1e-11);
}

ApproxReport major_arc_approx_f(int k, double P, std::uint64_t q, std::int64_t a,
                                double alpha) {
    ApproxReport rep;
    rep.exact = weyl_sum_f(k, P, alpha);
    const double beta = static_cast<double>(
        static_cast<long double>(alpha) -
        static_cast<long double>(a) / static_cast<long double>(q));
    rep.approx = gauss_sum_S(q, a, k) / static_cast<double>(q) * v_integral(k, P, beta);
    rep.gap = std::abs(rep.exact - rep.approx);
    rep.reference = std::log(P);
    return rep;
}

ApproxReport major_arc_approx_g(int k, double P, double eta, std::uint64_t q,
                                std::int64_t a, double alpha, double rho) {
    ApproxReport rep;
    const SmoothSet set = smooth_set(P, eta);
    rep.exact = smooth_weyl_sum_g(k, set, alpha);
    if (rho <= 0) rho = dickman_rho(1.0 / eta);
    const double beta = static_cast<double>(
        static_cast<long double>(alpha) -
        static_cast<long double>(a) / static_cast<long double>(q));
    rep.approx = rho * gauss_sum_S(q, a, k) / static_cast<double>(q) *
                 v_integral(k, P, beta);
    rep.gap = std::abs(rep.exact - rep.approx);
    rep.reference = P / std::sqrt(std::log(P));
    return rep;
}

} // namespace waring
