#include "waring/counting.hpp"

#include "waring/arcs.hpp"
#include "waring/common.hpp"
#include "waring/expsums.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace waring {

namespace {

void check_cells(std::size_t cells, const char* who) {
    if (cells > budget().max_cells)
        throw budget_error(std::string(who) + ": " + std::to_string(cells) +
                           " coefficient cells exceed cap " +
                           std::to_string(budget().max_cells));
}

// P = n^{1/k} as a real, nudged so floor(P) equals the exact integer root.
double real_cap(std::uint64_t n, int k) {
    const std::uint64_t root = ikroot(n, k);
    double P = std::pow(static_cast<double>(n), 1.0 / k);
    if (static_cast<std::uint64_t>(std::floor(P)) != root)
        P = static_cast<double>(root);
    return P;
}

std::uint64_t pow_u64(std::uint64_t x, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

} // namespace

Integer CoefficientSeries::mass() const {
    Integer m = 0;
    for (const auto& c : coeff) m += c;
    return m;
}

CoefficientSeries power_series(int k, double P) {
    if (k < 2 || P < 1) throw std::invalid_argument("power_series: need k >= 2, P >= 1");
    const auto n = static_cast<std::uint64_t>(std::floor(P));
    const double top = std::pow(static_cast<double>(n), k);
    if (top > 1e18) throw budget_error("power_series: P^k out of range");
    CoefficientSeries s;
    s.k = k;
    s.P = P;
    const std::uint64_t deg = pow_u64(n, k);
    check_cells(deg + 1, "power_series");
    s.coeff.assign(deg + 1, Integer(0));
    for (std::uint64_t x = 1; x <= n; ++x) s.coeff[pow_u64(x, k)] = 1;
    return s;
}

CoefficientSeries power_series(int k, double P, double eta) {
    const SmoothSet set = smooth_set(P, eta);
    CoefficientSeries s;
    s.k = k;
    s.P = P;
    s.smooth = true;
    s.eta = eta;
    const std::uint64_t top = set.members.empty() ? 0 : set.members.back();
    const double top_f = std::pow(static_cast<double>(top), k);
    if (top_f > 1e18) throw budget_error("power_series: P^k out of range");
    const std::uint64_t deg = pow_u64(top, k);
    check_cells(deg + 1, "power_series");
    s.coeff.assign(deg + 1, Integer(0));
    for (const auto x : set.members) s.coeff[pow_u64(x, k)] = 1;
    return s;
}

CoefficientSeries multiply(const CoefficientSeries& a, const CoefficientSeries& b,
                           std::optional<std::size_t> max_degree) {
    std::size_t deg = a.degree() + b.degree();
    if (max_degree) deg = std::min(deg, *max_degree);
    check_cells(deg + 1, "multiply");

    // gather the (usually sparse) support of b once
    std::vector<std::pair<std::size_t, const Integer*>> nz;
    for (std::size_t j = 0; j < b.coeff.size() && j <= deg; ++j)
        if (b.coeff[j] != 0) nz.emplace_back(j, &b.coeff[j]);

    CoefficientSeries out;
    out.k = a.k;
    out.P = a.P;
    out.smooth = a.smooth || b.smooth;
    out.eta = a.eta;
    out.copies = a.copies + b.copies;
    out.coeff.assign(deg + 1, Integer(0));

    // each output cell is owned by exactly one block: results are identical
    // at any thread count
    parallel_blocks(deg + 1, 4096, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t m = lo; m < hi; ++m) {
            Integer acc = 0;
            for (const auto& [j, bj] : nz) {
                if (j > m) break;
                const std::size_t i = m - j;
                if (i >= a.coeff.size()) continue;
                if (a.coeff[i] == 0) continue;
                if (*bj == 1)
                    acc += a.coeff[i];
                else
                    acc += a.coeff[i] * (*bj);
            }
            out.coeff[m] = acc;
        }
    });
    return out;
}

CoefficientSeries convolve_power(const CoefficientSeries& base, int copies,
                                 std::optional<std::size_t> max_degree) {
    if (copies < 0) throw std::invalid_argument("convolve_power: copies >= 0");
    CoefficientSeries acc;
    acc.k = base.k;
    acc.P = base.P;
    acc.smooth = base.smooth;
    acc.eta = base.eta;
    acc.copies = 0;
    acc.coeff.assign(1, Integer(1));
    for (int i = 0; i < copies; ++i) acc = multiply(acc, base, max_degree);
    acc.copies = copies;
    return acc;
}

CoefficientSeries mixed_rep_series(int k, int t, int u, double eta, double P,
                                   std::size_t max_degree) {
    if (t < 0 || u < 0) throw std::invalid_argument("mixed_rep_series: t,u >= 0");
    CoefficientSeries out;
    if (t > 0) {
        out = convolve_power(power_series(k, P), t, max_degree);
    } else {
        out.k = k;
        out.P = P;
        out.coeff.assign(1, Integer(1));
        out.copies = 0;
    }
    if (u > 0) {
        const auto smooth_base = power_series(k, P, eta);
        out = multiply(out, convolve_power(smooth_base, u, max_degree), max_degree);
        out.smooth = true;
        out.eta = eta;
    }
    out.copies = t + u;
    return out;
}

Integer mixed_rep_count(int k, int t, int u, double eta, double P, std::uint64_t n) {
    const auto series = mixed_rep_series(k, t, u, eta, P, n);
    if (n >= series.coeff.size()) return 0;
    return series.coeff[n];
}

Integer mixed_rep_count(int k, int t, int u, double eta, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("mixed_rep_count: n >= 1");
    return mixed_rep_count(k, t, u, eta, real_cap(n, k), n);
}

Integer even_moment(const CoefficientSeries& base, int s) {
    if (s < 1) throw std::invalid_argument("even_moment: s >= 1");
    const auto conv = convolve_power(base, s);
    Integer sum = 0;
    for (const auto& c : conv.coeff)
        if (c != 0) sum += c * c;
    return sum;
}

namespace {

struct DftGrid {
    std::uint64_t Q = 0;
    std::vector<Complex> values;  // f(j/Q)^t g(j/Q)^u for j = 0..Q-1
};

DftGrid dft_grid(int k, int t, int u, double eta, double P) {
    const auto cap = static_cast<std::uint64_t>(std::floor(P));
    std::vector<std::uint64_t> classical;
    for (std::uint64_t x = 1; x <= cap; ++x) classical.push_back(x);
    std::vector<std::uint64_t> smooth_members;
    if (u > 0) smooth_members = smooth_set(P, eta).members;

    std::uint64_t degree = 0;
    if (t > 0 && !classical.empty())
        degree += static_cast<std::uint64_t>(t) * pow_u64(classical.back(), k);
    if (u > 0 && !smooth_members.empty())
        degree += static_cast<std::uint64_t>(u) * pow_u64(smooth_members.back(), k);

    DftGrid grid;
    grid.Q = degree + 1;
    check_cells(grid.Q, "dft_rep_count");
    const auto roots = roots_of_unity(grid.Q);

    // residues x^k mod Q once; each grid value then costs O(#terms)
    std::vector<std::uint64_t> cl_res(classical.size()), sm_res(smooth_members.size());
    for (std::size_t i = 0; i < classical.size(); ++i)
        cl_res[i] = powmod_u64(classical[i], static_cast<std::uint64_t>(k), grid.Q);
    for (std::size_t i = 0; i < smooth_members.size(); ++i)
        sm_res[i] = powmod_u64(smooth_members[i], static_cast<std::uint64_t>(k), grid.Q);

    grid.values.assign(grid.Q, Complex{});
    parallel_blocks(grid.Q, 1024, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) {
            Complex f{0.0, 0.0};
            for (const auto r : cl_res)
                f += roots[static_cast<std::size_t>(
                    static_cast<unsigned __int128>(j) * r % grid.Q)];
            Complex g{0.0, 0.0};
            for (const auto r : sm_res)
                g += roots[static_cast<std::size_t>(
                    static_cast<unsigned __int128>(j) * r % grid.Q)];
            Complex val = t > 0 ? ipow(f, static_cast<unsigned>(t)) : Complex{1.0, 0.0};
            if (u > 0) val *= ipow(g, static_cast<unsigned>(u));
            grid.values[j] = val;
        }
    });
    return grid;
}

Integer round_dft(Complex sum, std::uint64_t Q, std::uint64_t n) {
    const double real = sum.real() / static_cast<double>(Q);
    const double imag = sum.imag() / static_cast<double>(Q);
    const double rounded = std::round(real);
    if (std::abs(imag) > 1e-6 || std::abs(real - rounded) > 1e-6)
        throw tolerance_error("dft_rep_count: residual too large at n=" +
                              std::to_string(n) + " (imag " + std::to_string(imag) +
                              ", frac " + std::to_string(real - rounded) + ")");
    return Integer(static_cast<long>(rounded));
}

} // namespace

Integer dft_rep_count(int k, int t, int u, double eta, double P, std::uint64_t n) {
    const DftGrid grid = dft_grid(k, t, u, eta, P);
    if (n >= grid.Q)
        throw std::invalid_argument("dft_rep_count: n exceeds the polynomial degree");
    const auto roots = roots_of_unity(grid.Q);
    // fixed-size blocks with a serial block-order reduction: byte-identical
    // totals at any thread count
    const std::size_t block = 4096;
    const std::size_t nblocks = (grid.Q + block - 1) / block;
    std::vector<Complex> partial(nblocks, Complex{});
    parallel_blocks(grid.Q, block, [&](std::size_t lo, std::size_t hi) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = lo; j < hi; ++j) {
            const auto idx = static_cast<std::size_t>(
                static_cast<unsigned __int128>(n) * j % grid.Q);
            acc += grid.values[j] * std::conj(roots[idx]);
        }
        partial[lo / block] = acc;
    });
    Complex sum{0.0, 0.0};
    for (const auto& p : partial) sum += p;
    return round_dft(sum, grid.Q, n);
}

Integer dft_rep_count(int k, int t, int u, double eta, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("dft_rep_count: n >= 1");
    return dft_rep_count(k, t, u, eta, real_cap(n, k), n);
}

std::vector<Integer> dft_rep_table(int k, int t, int u, double eta, double P,
                                   std::uint64_t n_max) {
    const DftGrid grid = dft_grid(k, t, u, eta, P);
    if (n_max >= grid.Q)
        throw std::invalid_argument("dft_rep_table: n_max exceeds the polynomial degree");
    const auto roots = roots_of_unity(grid.Q);
    std::vector<Integer> out(n_max + 1);
    parallel_blocks(n_max + 1, 64, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t n = lo; n < hi; ++n) {
            Complex sum{0.0, 0.0};
            for (std::uint64_t j = 0; j < grid.Q; ++j) {
                const auto idx = static_cast<std::size_t>(
                    static_cast<unsigned __int128>(n) * j % grid.Q);
                sum += grid.values[j] * std::conj(roots[idx]);
            }
            out[n] = round_dft(sum, grid.Q, n);
        }
    });
    return out;
}

VinogradovCount vinogradov_count(int s, int k, std::uint64_t X) {
    if (s < 1 || k < 1 || X < 1)
        throw std::invalid_argument("vinogradov_count: s, k, X >= 1");
    double tuples = 1;
    for (int i = 0; i < s; ++i) tuples *= static_cast<double>(X);
    if (tuples > static_cast<double>(budget().max_tuples))
        throw budget_error("vinogradov_count: X^s exceeds the tuple budget");

    struct VecHash {
        std::size_t operator()(const std::vector<std::uint64_t>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (const auto x : v) {
                h ^= std::hash<std::uint64_t>{}(x);
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    std::unordered_map<std::vector<std::uint64_t>, std::uint64_t, VecHash> buckets;

    std::vector<std::uint64_t> tuple(static_cast<std::size_t>(s), 1);
    std::vector<std::uint64_t> key(static_cast<std::size_t>(k));
    for (;;) {
        std::fill(key.begin(), key.end(), 0);
        for (const auto x : tuple) {
            std::uint64_t p = 1;
            for (int j = 0; j < k; ++j) {
                p *= x;
                key[static_cast<std::size_t>(j)] += p;
            }
        }
        ++buckets[key];
        // odometer
        int pos = s - 1;
        while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == X) {
            tuple[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++tuple[static_cast<std::size_t>(pos)];
    }

    VinogradovCount out;
    out.s = s;
    out.k = k;
    out.X = X;
    out.J = 0;
    for (const auto& [kv, cnt] : buckets) {
        const Integer c(static_cast<unsigned long>(cnt));
        out.J += c * c;
    }
    return out;
}

MinorMomentReport minor_arc_moment(int k, double P, int w, std::size_t grid) {
    if (w < 2 || w % 2 != 0)
        throw std::invalid_argument("minor_arc_moment: w must be even and >= 2");
    MinorMomentReport rep;
    rep.full_moment = even_moment(power_series(k, P), w / 2);

    const ArcSet arcs = major_arcs(k, P);
    const auto abs_pow = [&](double alpha) {
        const Complex f = weyl_sum_f(k, P, alpha);
        return std::pow(std::norm(f), w / 2.0);
    };
    const auto quad = [&](double lo, double hi) {
        // composite Simpson, node count from the global grid density
        auto nseg = static_cast<std::size_t>(std::ceil((hi - lo) * static_cast<double>(grid)));
        nseg = std::max<std::size_t>(nseg, 8);
        if (nseg % 2) ++nseg;
        if (nseg > budget().max_panels) throw budget_error("minor_arc_moment: grid too fine");
        const double h = (hi - lo) / static_cast<double>(nseg);
        double sum = abs_pow(lo) + abs_pow(hi);
        for (std::size_t i = 1; i < nseg; ++i)
            sum += abs_pow(lo + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
        return sum * h / 3.0;
    };

    for (const auto& arc : arcs.intervals)
        if (arc.hi > arc.lo) rep.major_quadrature += quad(arc.lo, arc.hi);

    // complement intervals (the arcs are disjoint for k >= 3; the sweep keeps
    // k = 2 honest as well)
    double cursor = 0.0;
    for (const auto& arc : arcs.intervals) {
        if (arc.lo > cursor) rep.minor_quadrature += quad(cursor, arc.lo);
        cursor = std::max(cursor, arc.hi);
    }
    if (cursor < 1.0) rep.minor_quadrature += quad(cursor, 1.0);

    const double full = rep.full_moment.get_d();
    rep.minor_estimate = full - rep.major_quadrature;
    rep.consistency_gap = std::abs(rep.major_quadrature + rep.minor_quadrature - full) / full;
    rep.reference = std::pow(P, w - k - 1);
    rep.ratio = rep.minor_estimate / rep.reference;
    return rep;
}

} // namespace waring
