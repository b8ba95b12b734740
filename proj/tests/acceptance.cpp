// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
// The headline bounds certified by the ledger concern all sufficiently large
// integers and cannot be observed directly; this suite checks (i) the exact
// arithmetic backbone bit-for-bit and (ii) oracle/property facts about the
// analytic machinery at desk scale.

#include "waring/arcs.hpp"
#include "waring/common.hpp"
#include "waring/counting.hpp"
#include "waring/dickman.hpp"
#include "waring/expsums.hpp"
#include "waring/ledger.hpp"
#include "waring/local.hpp"
#include "waring/smooth.hpp"
#include "waring/table.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace waring;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void line(int id, bool pass, const std::string& label, const std::string& detail,
          double seconds) {
    if (!pass) ++failures;
    std::printf("%s  %2d  %-28s  %s  [%.2fs]\n", pass ? "PASS" : "FAIL", id,
                label.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
}

std::string cli_run(const std::string& args, int& exit_code) {
    const std::string out_file = "/tmp/waring_acceptance_out.txt";
    const std::string cmd =
        std::string(WARING_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion_1_ledger() {
    Timer timer;
    const auto certs = verify_all();
    bool pass = certs.size() == 10;
    for (const auto& cert : certs) pass = pass && cert.pass;
    const std::string h = h_sequence(builtin_rows());
    pass = pass && h == "31 39 47 55 63 72 81 90 99 108";
    const double sec = timer.seconds();
    pass = pass && sec < 1.0;
    line(1, pass, "ledger reproduction", "10 rows, H(k) = " + h, sec);
}

void criterion_2_margins() {
    Timer timer;
    bool pass = true;
    int matches = 0;
    for (const auto& row : builtin_rows()) {
        const Rational margin = delta_margin(row);
        pass = pass && margin < rat(-1L, row.delta_inv);
        if (minimal_delta_inv(row) == row.delta_inv) ++matches;
    }
    pass = pass && minimal_delta_inv(builtin_row(7)) == 1267;
    pass = pass && minimal_delta_inv(builtin_row(12)) == 546;
    pass = pass && matches == 10;
    line(2, pass, "margin check",
         "margin < -1/delta_inv on 10/10 rows; minimal delta_inv matches " +
             std::to_string(matches) + "/10 (k=7: 1267, k=12: 546)",
         timer.seconds());
}

void criterion_3_u_column() {
    Timer timer;
    bool pass = true;
    for (const auto& row : builtin_rows()) {
        pass = pass && row.t < row.k + 4;
        const auto ue = u_exponent(row);
        pass = pass && ue.floor == row.u_floor;
        pass = pass && ue.value > rat(2L * row.r, 1);
    }
    pass = pass && u_exponent(builtin_row(7)).floor == 47;
    pass = pass && u_exponent(builtin_row(12)).floor == 314;
    pass = pass && u_exponent(builtin_row(16)).floor == 1780;
    line(3, pass, "U-column reproduction",
         "floor(U) matches all rows, U > 2r, t < k+4 (spots 47/314/1780)",
         timer.seconds());
}

void criterion_4_weights() {
    Timer timer;
    bool pass = true;
    for (const auto& row : builtin_rows()) {
        const auto hw = row_weights(row);
        pass = pass && hw.omega + hw.phi1 + hw.phi2 == 1;
        pass = pass && rat(static_cast<long>(row.k) * (row.k + 1), 1) * hw.omega ==
                           rat(row.t, 1);
        pass = pass && rat(2L * row.w, 1) * hw.phi1 + rat(2L * row.w + 2, 1) * hw.phi2 ==
                           rat(row.u, 1);
        pass = pass && hw.phi1 >= 0 && hw.phi2 >= 0;
    }
    line(4, pass, "Hoelder-weight identities",
         "omega+phi1+phi2 = 1, k(k+1)omega = t, 2w phi1+(2w+2) phi2 = u, phi >= 0",
         timer.seconds());
}

void criterion_5_orthogonality() {
    Timer timer;
    const int k = 3, t = 2, u = 2;
    const double eta = 0.6, P = 8.0;
    const std::uint64_t n_max = 4 * 512;
    const auto series = mixed_rep_series(k, t, u, eta, P, n_max);
    const auto table = dft_rep_table(k, t, u, eta, P, n_max);
    bool pass = series.coeff.size() == n_max + 1 && table.size() == n_max + 1;
    std::uint64_t checked = 0;
    for (std::uint64_t n = 0; n <= n_max && pass; ++n) {
        pass = table[n] == series.coeff[n];
        ++checked;
    }
    const double sec = timer.seconds();
    line(5, pass && sec < 60.0, "orthogonality oracle",
         "dft = convolution for " + std::to_string(checked) + " values of n <= 2048",
         sec);
}

void criterion_6_moments() {
    Timer timer;
    bool pass = even_moment(power_series(2, 3.0), 2) == 15;
    for (const int k : {2, 3})
        for (const std::uint64_t P : {3, 5, 12})
            for (const int s : {1, 2, 3}) {
                std::vector<std::uint64_t> base;
                for (std::uint64_t x = 1; x <= P; ++x) base.push_back(x);
                const Integer lib = even_moment(power_series(k, static_cast<double>(P)), s);
                pass = pass && lib == oracle::even_moment(base, k, s);
            }
    line(6, pass, "moment oracle",
         "even_moment = 2s-tuple enumeration, k in {2,3}, P <= 12, s <= 3 (15 at k=2,P=3,s=2)",
         timer.seconds());
}

void criterion_7_vinogradov() {
    Timer timer;
    bool pass = true;
    for (int s = 1; s <= 3; ++s)
        for (int k = 1; k <= 3; ++k)
            for (std::uint64_t X = 1; X <= 8; ++X)
                pass = pass && vinogradov_count(s, k, X).J == oracle::vinogradov(s, k, X);
    for (std::uint64_t X = 1; X <= 12; ++X) {
        pass = pass && vinogradov_count(1, 2, X).J == X;
        pass = pass && vinogradov_count(1, 3, X).J == X;
        pass = pass && vinogradov_count(2, 2, X).J == 2 * X * X - X;
    }
    line(7, pass, "Vinogradov oracle",
         "J matches naive enumeration (s<=3, k<=3, X<=8); J_{1,k}=X, J_{2,2}=2X^2-X",
         timer.seconds());
}

void criterion_8_singular_series() {
    Timer timer;
    bool pass = std::abs(a_q(1, 3, 8, 2) - Complex{1.0, 0.0}) < 1e-12;
    for (const int k : {2, 3}) pass = pass && std::abs(a_q(2, 5, 8, k)) < 1e-12;

    std::mt19937_64 rng(20260809);
    std::uniform_int_distribution<std::uint64_t> qs(2, 54);
    int done = 0;
    while (done < 50) {
        const std::uint64_t q1 = qs(rng), q2 = qs(rng);
        if (q1 * q2 > 3000 || gcd_u64(q1, q2) != 1) continue;
        const std::uint64_t n = 1 + (rng() % 50);
        const Complex lhs = a_q(q1 * q2, n, 8, 2);
        const Complex rhs = a_q(q1, n, 8, 2) * a_q(q2, n, 8, 2);
        pass = pass && std::abs(lhs - rhs) < 1e-9;
        ++done;
    }

    for (const std::uint64_t p : {2, 3, 5})
        for (int gamma = 1; gamma <= 3; ++gamma)
            for (const std::uint64_t n : {1, 2, 7}) {
                double partial = 1.0;
                std::uint64_t ph = 1;
                for (int h = 1; h <= gamma; ++h) {
                    ph *= p;
                    partial += a_q(ph, n, 5, 2).real();
                }
                pass = pass &&
                       std::abs(local_density(p, gamma, n, 5, 2).get_d() - partial) < 1e-9;
            }

    const auto positivity = positivity_check(1, 500, 2, 8, 100);
    pass = pass && positivity.min_value > 0.05;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "A(1)=1, A(2)=0, 50 coprime products, Euler factors p<=5 gamma<=3, "
                  "min S(n;100) = %.4f > 0.05",
                  positivity.min_value);
    line(8, pass, "singular-series properties", detail, timer.seconds());
}

void criterion_9_smooth_density() {
    Timer timer;
    const auto rep = smooth_density(1e6, 0.5);
    const double target = 1.0 - std::log(2.0);
    const double rel = std::abs(rep.density - target) / target;
    const bool density_ok = rel <= 0.10;  // pinned from the stated tolerance
    const bool rho_ok = std::abs(dickman_rho(2.0) - target) < 1e-6;
    char detail[220];
    std::snprintf(detail, sizeof detail,
                  "count=%llu density=%.6f vs 1-ln2=%.6f rel gap=%.2f%% (stated "
                  "tolerance 10%%); dickman_rho(2) gap=%.1e (tol 1e-6)",
                  static_cast<unsigned long long>(rep.count), rep.density, target,
                  100.0 * rel, std::abs(dickman_rho(2.0) - target));
    line(9, density_ok && rho_ok, "smooth density", detail, timer.seconds());
    if (!density_ok)
        std::printf("      note: the second-order smooth-counting term is a +%.1f%% "
                    "relative effect at P=1e6 and only falls below 10%% near P~1e8;\n"
                    "      the count above is exact (two independent sieves agree), so "
                    "the stated tolerance is not attainable at this P.\n",
                    100.0 * rel);
}

void criterion_10_arcs() {
    Timer timer;
    bool pass = true;
    std::mt19937_64 rng(20260809);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (const int k : {3, 7})
        for (const double P : {20.0, 100.0}) {
            const auto set = major_arcs(k, P);
            pass = pass && pairwise_disjoint(set);
            pass = pass && arc_measure(set) <= std::pow(P, 2 - k);
            for (int i = 0; i < 10000; ++i) {
                const double alpha = unif(rng);
                pass = pass && classify(alpha, k, P).major == covers(set, alpha);
            }
        }
    line(10, pass, "arc geometry",
         "k in {3,7}, P in {20,100}: disjoint, measure <= P^{2-k}, classify = membership "
         "on 4x10^4 random alpha",
         timer.seconds());
}

void criterion_11_asymptotic() {
    Timer timer;
    const auto rep = asymptotic_comparison(2, 5, 0, 1.0, 10000, 11000, 200);
    const bool in_window = rep.mean_ratio >= 0.85 && rep.mean_ratio <= 1.15;
    const double sec = timer.seconds();
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "k=2, t=5: mean R(n)/prediction = %.4f over %zu values (window "
                  "[0.85, 1.15], Q=200)",
                  rep.mean_ratio, rep.samples);
    line(11, in_window && sec < 300.0, "asymptotic comparison", detail, sec);
}

void criterion_12_approximant() {
    Timer timer;
    bool pass = true;
    double worst = 0;
    std::mt19937_64 rng(20260809);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (const int k : {2, 3}) {
        const double P = 1000.0;
        const auto arcs = pruned_arcs(k, P, 6.0);
        for (int i = 0; i < 100; ++i) {
            const auto& arc = arcs.intervals[static_cast<std::size_t>(i) % arcs.intervals.size()];
            const double alpha = arc.lo + (arc.hi - arc.lo) * unif(rng);
            const auto rep = major_arc_approx_f(
                k, P, arc.label.q, static_cast<std::int64_t>(arc.label.a), alpha);
            worst = std::max(worst, rep.gap / rep.reference);
            pass = pass && rep.gap <= 10.0 * rep.reference;
        }
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "|f - q^{-1}S v| <= 10 log P on 200 pruned-arc points, P=1e3 "
                  "(worst gap %.3f log P)",
                  worst);
    line(12, pass, "major-arc approximant", detail, timer.seconds());
}

void criterion_13_determinism() {
    Timer timer;
    const std::string cmds[] = {
        "count --k 3 --t 2 --u 2 --eta 0.6 --P 8 --n 2048 --dft",
        "moments --k 2 --P 12 --s 3",
        "vinogradov --s 3 --k 3 --X 6",
        "local --what series --n 41 --s 8 --k 2 --Q 100",
        "local --what positivity --n 200 --s 8 --k 2 --Q 80",
    };
    bool pass = true;
    for (const auto& cmd : cmds) {
        int code1 = 0, code8 = 0;
        const std::string out1 = cli_run(cmd + " --threads 1", code1);
        const std::string out8 = cli_run(cmd + " --threads 8", code8);
        pass = pass && code1 == 0 && code8 == 0 && out1 == out8 && !out1.empty();
    }
    line(13, pass, "determinism",
         "criteria 5-8 computations byte-identical through the CLI at 1 and 8 threads",
         timer.seconds());
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_1_ledger();
    criterion_2_margins();
    criterion_3_u_column();
    criterion_4_weights();
    criterion_5_orthogonality();
    criterion_6_moments();
    criterion_7_vinogradov();
    criterion_8_singular_series();
    criterion_9_smooth_density();
    criterion_10_arcs();
    criterion_11_asymptotic();
    criterion_12_approximant();
    criterion_13_determinism();
    std::printf("%d/13 criteria passed\n", 13 - failures);
    return failures == 0 ? 0 : 1;
}
