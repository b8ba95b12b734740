#include "waring/local.hpp"

#include "waring/common.hpp"
#include "waring/counting.hpp"
#include "waring/dickman.hpp"
#include "waring/smooth.hpp"

#include <cmath>
#include <stdexcept>

namespace waring {

Complex a_q(std::uint64_t q, std::uint64_t n, int s, int k) {
    if (q < 1) throw std::invalid_argument("a_q: q >= 1");
    const auto roots = roots_of_unity(q);
    std::vector<std::uint64_t> rk(q);
    for (std::uint64_t r = 0; r < q; ++r)
        rk[r] = powmod_u64(r + 1, static_cast<std::uint64_t>(k), q);

    Complex sum{0.0, 0.0};
    for (std::uint64_t a = 1; a <= q; ++a) {
        if (gcd_u64(a, q) != 1) continue;
        Complex sq{0.0, 0.0};
        for (std::uint64_t r = 0; r < q; ++r)
            sq += roots[static_cast<std::size_t>(
                static_cast<unsigned __int128>(a) * rk[r] % q)];
        const Complex z = sq / static_cast<double>(q);
        const std::uint64_t na = static_cast<unsigned __int128>(n) * a % q;
        sum += ipow(z, static_cast<unsigned>(s)) * std::conj(roots[na]);
    }
    return sum;
}

SingularSeriesTable::SingularSeriesTable(int s, int k, std::uint64_t Q)
    : s_(s), k_(k), Q_(Q), terms_(Q + 1) {
    if (Q < 1) throw std::invalid_argument("SingularSeriesTable: Q >= 1");
    parallel_blocks(Q, 4, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t qi = lo; qi < hi; ++qi) {
            const std::uint64_t q = qi + 1;
            const auto roots = roots_of_unity(q);
            std::vector<std::uint64_t> rk(q);
            for (std::uint64_t r = 0; r < q; ++r)
                rk[r] = powmod_u64(r + 1, static_cast<std::uint64_t>(k_), q);
            auto& dst = terms_[q];
            for (std::uint64_t a = 1; a <= q; ++a) {
                if (gcd_u64(a, q) != 1) continue;
                Complex sq{0.0, 0.0};
                for (std::uint64_t r = 0; r < q; ++r)
                    sq += roots[static_cast<std::size_t>(
                        static_cast<unsigned __int128>(a) * rk[r] % q)];
                dst.push_back(
                    {a, ipow(sq / static_cast<double>(q), static_cast<unsigned>(s_))});
            }
        }
    });
}

double SingularSeriesTable::evaluate(std::uint64_t n) const {
    Complex total{0.0, 0.0};
    for (std::uint64_t q = 1; q <= Q_; ++q) {
        const auto roots = roots_of_unity(q);
        Complex aq{0.0, 0.0};
        for (const auto& term : terms_[q]) {
            const std::uint64_t na = static_cast<unsigned __int128>(n) * term.a % q;
            aq += term.zpow * std::conj(roots[na]);
        }
        total += aq;
    }
    if (std::abs(total.imag()) >= 1e-8 * static_cast<double>(Q_))
        throw tolerance_error("singular series: imaginary residual " +
                              std::to_string(total.imag()) + " at n=" + std::to_string(n));
    return total.real();
}

double singular_series_truncated(std::uint64_t n, int s, int k, std::uint64_t Q) {
    if (Q < 1) throw std::invalid_argument("singular_series_truncated: Q >= 1");
    // per-q terms computed in parallel, reduced in ascending q
    std::vector<Complex> terms(Q + 1, Complex{});
    parallel_blocks(Q, 4, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t qi = lo; qi < hi; ++qi)
            terms[qi + 1] = a_q(qi + 1, n, s, k);
    });
    Complex total{0.0, 0.0};
    for (std::uint64_t q = 1; q <= Q; ++q) total += terms[q];
    if (std::abs(total.imag()) >= 1e-8 * static_cast<double>(Q))
        throw tolerance_error("singular series: imaginary residual " +
                              std::to_string(total.imag()) + " at n=" + std::to_string(n));
    return total.real();
}

Rational local_density(std::uint64_t p, int gamma, std::uint64_t n, int s, int k) {
    if (gamma < 0) throw std::invalid_argument("local_density: gamma >= 0");
    if (gamma == 0) return rat(1, 1);

    std::uint64_t q = 1;
    for (int i = 0; i < gamma; ++i) {
        q *= p;
        if (q > budget().max_cells)
            throw budget_error("local_density: p^gamma exceeds the cell cap");
    }

    // histogram of k-th power residues, then s-fold cyclic convolution
    std::vector<Integer> hist(q, Integer(0));
    for (std::uint64_t x = 0; x < q; ++x)
        hist[powmod_u64(x, static_cast<std::uint64_t>(k), q)] += 1;

    std::vector<Integer> acc(q, Integer(0));
    acc[0] = 1;
    for (int i = 0; i < s; ++i) {
        std::vector<Integer> next(q, Integer(0));
        for (std::uint64_t c = 0; c < q; ++c) {
            if (acc[c] == 0) continue;
            for (std::uint64_t d = 0; d < q; ++d) {
                if (hist[d] == 0) continue;
                next[(c + d) % q] += acc[c] * hist[d];
            }
        }
        acc.swap(next);
    }

    Integer denom = 1;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(gamma) * static_cast<unsigned long>(s - 1));
    return rat(acc[n % q], denom);
}

SingularIntegralReport singular_integral(std::uint64_t n, int k, int s, double W) {
    if (W < 1) throw std::invalid_argument("singular_integral: W >= 1");
    SingularIntegralReport rep;
    rep.W = W;
    const double P = std::pow(static_cast<double>(n), 1.0 / k);
    const double limit = W * std::pow(P, -k);  // = W / n

    const auto integrand = [&](double beta) {
        return ipow(v_integral(k, P, beta), static_cast<unsigned>(s)) *
               unit_phase(-beta * static_cast<double>(n) -
                          std::floor(-beta * static_cast<double>(n)));
    };

    // e(-beta n) winds through about 2W cycles across the window; panel it
    const auto npanels = static_cast<std::size_t>(std::ceil(8.0 * W)) + 8;
    const double width = 2.0 * limit / static_cast<double>(npanels);
    rep.closed_form = std::pow(std::tgamma(1.0 + 1.0 / k), s) /
                      std::tgamma(static_cast<double>(s) / k) *
                      std::pow(static_cast<double>(n), static_cast<double>(s) / k - 1.0);
    const double tol = std::abs(rep.closed_form) * 1e-7 / static_cast<double>(npanels);

    Complex total{0.0, 0.0};
    for (std::size_t j = 0; j < npanels; ++j) {
        const double lo = -limit + width * static_cast<double>(j);
        const double hi = j + 1 == npanels ? limit : lo + width;
        total += adaptive_simpson(integrand, lo, hi, tol);
    }
    rep.quadrature = total.real();
    rep.imag_residual = total.imag();
    rep.rel_gap = std::abs(rep.quadrature - rep.closed_form) / std::abs(rep.closed_form);
    return rep;
}

MainTermParts main_term(std::uint64_t n, int k, int t, int u, double eta,
                        std::uint64_t Q, RhoSource src) {
    MainTermParts parts;
    const int s = t + u;
    if (u == 0) {
        parts.rho = 1.0;
    } else {
        switch (src) {
            case RhoSource::dickman:
                parts.rho = dickman_rho(1.0 / eta);
                break;
            case RhoSource::empirical: {
                const double P = std::pow(static_cast<double>(n), 1.0 / k);
                parts.rho = smooth_density(P, eta).density;
                break;
            }
            case RhoSource::one:
                parts.rho = 1.0;
                break;
        }
    }
    parts.rho_factor = std::pow(parts.rho, u);
    parts.sing_series = singular_series_truncated(n, s, k, Q);
    parts.gamma_factor = std::pow(std::tgamma(1.0 + 1.0 / k), s) /
                         std::tgamma(static_cast<double>(s) / k);
    parts.power = std::pow(static_cast<double>(n), static_cast<double>(s) / k - 1.0);
    parts.prediction = parts.rho_factor * parts.sing_series * parts.gamma_factor * parts.power;
    return parts;
}

PositivityReport positivity_check(std::uint64_t n_lo, std::uint64_t n_hi, int k,
                                  int s, std::uint64_t Q) {
    if (s < 4 * k)
        throw std::invalid_argument("positivity_check: s >= 4k required");
    const SingularSeriesTable table(s, k, Q);
    PositivityReport rep;
    bool first = true;
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
        const double v = table.evaluate(n);
        if (first || v < rep.min_value) {
            rep.min_value = v;
            rep.argmin = n;
        }
        if (first || v > rep.max_value) {
            rep.max_value = v;
            rep.argmax = n;
        }
        first = false;
    }
    rep.pass = rep.min_value > 0.05 && rep.max_value < 20.0;
    return rep;
}

AsymptoticReport asymptotic_comparison(int k, int t, int u, double eta,
                                       std::uint64_t n_lo, std::uint64_t n_hi,
                                       std::uint64_t Q, std::uint64_t step,
                                       RhoSource src) {
    if (n_lo < 1 || n_hi < n_lo)
        throw std::invalid_argument("asymptotic_comparison: bad n range");
    if (step < 1) step = 1;
    const int s = t + u;

    double rho = 1.0;
    if (u > 0) {
        const double P_hi = std::pow(static_cast<double>(n_hi), 1.0 / k);
        switch (src) {
            case RhoSource::dickman: rho = dickman_rho(1.0 / eta); break;
            case RhoSource::empirical: rho = smooth_density(P_hi, eta).density; break;
            case RhoSource::one: rho = 1.0; break;
        }
    }
    const double rho_factor = std::pow(rho, u);
    const double gamma_factor = std::pow(std::tgamma(1.0 + 1.0 / k), s) /
                                std::tgamma(static_cast<double>(s) / k);
    const SingularSeriesTable table(s, k, Q);

    // with u = 0 one shared series covers the whole range: any x_i in a
    // solution of sum x_i^k = n automatically satisfies x_i <= n^{1/k}
    std::vector<Integer> shared;
    if (u == 0) {
        const auto cap = static_cast<double>(ikroot(n_hi, k));
        shared = convolve_power(power_series(k, cap), t, n_hi).coeff;
    }

    AsymptoticReport rep;
    double sum_ratio = 0;
    for (std::uint64_t n = n_lo; n <= n_hi; n += step) {
        Integer exact;
        if (u == 0)
            exact = n < shared.size() ? shared[n] : Integer(0);
        else
            exact = mixed_rep_count(k, t, u, eta, n);
        const double prediction = rho_factor * table.evaluate(n) * gamma_factor *
                                  std::pow(static_cast<double>(n),
                                           static_cast<double>(s) / k - 1.0);
        if (prediction <= 0) continue;
        const double ratio = exact.get_d() / prediction;
        if (rep.samples == 0 || ratio < rep.min_ratio) rep.min_ratio = ratio;
        if (rep.samples == 0 || ratio > rep.max_ratio) rep.max_ratio = ratio;
        sum_ratio += ratio;
        ++rep.samples;
    }
    if (rep.samples > 0) rep.mean_ratio = sum_ratio / static_cast<double>(rep.samples);
    return rep;
}

} // namespace waring
