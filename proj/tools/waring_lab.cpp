// waring-lab: command-line front end over the circle-method laboratory.
// Subcommands stream machine-readable records to stdout; diagnostics go to
// stderr.  Exit codes: 0 all checks passed, 1 a verification check failed,
// 2 usage or resource error.

#include "waring/arcs.hpp"
#include "waring/common.hpp"
#include "waring/counting.hpp"
#include "waring/dickman.hpp"
#include "waring/expsums.hpp"
#include "waring/ledger.hpp"
#include "waring/local.hpp"
#include "waring/smooth.hpp"
#include "waring/table.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

using njson = nlohmann::ordered_json;
using namespace waring;

namespace {

enum class Format { json, csv, text };

struct Options {
    Format format = Format::json;
    std::string cache_dir;
    unsigned long seed = 20260809;
};

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "text") return Format::text;
    throw CLI::ValidationError("--format", "expected json, csv or text");
}

void emit(const njson& j) { std::cout << j.dump() << "\n"; }

std::vector<ExponentRow> rows_from(const std::string& path) {
    if (path.empty()) return builtin_rows();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open row file: " + path);
    return load_rows(in);
}

int cmd_ledger_verify(const Options& opt, const std::string& rows_path, int only_k) {
    auto rows = rows_from(rows_path);
    if (only_k > 0) {
        std::vector<ExponentRow> filtered;
        for (const auto& r : rows)
            if (r.k == only_k) filtered.push_back(r);
        if (filtered.empty()) throw std::runtime_error("no row with that k");
        rows = filtered;
    }
    const auto certs = verify_rows(rows);
    bool all = true;
    for (const auto& cert : certs) {
        all = all && cert.pass;
        if (opt.format == Format::text)
            std::cout << cert.to_text();
        else
            std::cout << cert.to_json() << "\n";
    }
    if (opt.format == Format::text)
        std::cout << "H(k): " << h_sequence(rows) << "\n";
    else
        emit(njson{{"record", "h_sequence"}, {"H", h_sequence(rows)}, {"pass", all}});
    return all ? 0 : 1;
}

int cmd_ledger_table(const Options& opt, const std::string& rows_path) {
    const auto rows = rows_from(rows_path);
    if (opt.format == Format::csv)
        std::cout << "k,w,lambda_w,lambda_w1,t,u,delta_inv,r,U_floor,H,omega,phi1,phi2,"
                     "margin,minimal_delta_inv,U\n";
    if (opt.format == Format::text)
        std::printf("%3s %4s %13s %13s %3s %3s %9s %3s %7s %4s %14s %9s\n", "k", "w",
                    "lambda_w", "lambda_w1", "t", "u", "delta_inv", "r", "[U]", "H",
                    "margin", "min d^-1");
    for (const auto& row : rows) {
        const auto hw = row_weights(row);
        const auto ue = u_exponent(row);
        const long mdi = hw.margin < 0 ? minimal_delta_inv(row) : -1;
        if (opt.format == Format::text) {
            std::printf("%3d %4d %13.7f %13.7f %3d %3d %9ld %3d %7ld %4d %14.6e %9ld\n",
                        row.k, row.w, row.lambda_w.get_d(), row.lambda_w1.get_d(), row.t,
                        row.u, row.delta_inv, row.r, row.u_floor, row.h,
                        hw.margin.get_d(), mdi);
            continue;
        }
        if (opt.format == Format::csv) {
            std::cout << row.k << ',' << row.w << ',' << to_string(row.lambda_w) << ','
                      << to_string(row.lambda_w1) << ',' << row.t << ',' << row.u << ','
                      << row.delta_inv << ',' << row.r << ',' << row.u_floor << ','
                      << row.h << ',' << to_string(hw.omega) << ',' << to_string(hw.phi1)
                      << ',' << to_string(hw.phi2) << ',' << to_string(hw.margin) << ','
                      << mdi << ',' << to_string(ue.value) << "\n";
        } else {
            emit(njson{{"k", row.k},
                       {"w", row.w},
                       {"lambda_w", to_string(row.lambda_w)},
                       {"lambda_w1", to_string(row.lambda_w1)},
                       {"t", row.t},
                       {"u", row.u},
                       {"delta_inv", row.delta_inv},
                       {"r", row.r},
                       {"U_floor", row.u_floor},
                       {"H", row.h},
                       {"omega", to_string(hw.omega)},
                       {"phi1", to_string(hw.phi1)},
                       {"phi2", to_string(hw.phi2)},
                       {"margin", to_string(hw.margin)},
                       {"margin_approx", hw.margin.get_d()},
                       {"minimal_delta_inv", mdi},
                       {"U", to_string(ue.value)}});
        }
    }
    return 0;
}

int cmd_smooth(const Options& opt, double P, double eta, bool list) {
    const SmoothSet set = opt.cache_dir.empty() ? smooth_set(P, eta)
                                                : smooth_set_cached(opt.cache_dir, P, eta);
    const auto floor_p = static_cast<std::uint64_t>(std::floor(P));
    const double density = static_cast<double>(set.size()) / static_cast<double>(floor_p);
    const double rho = dickman_rho(1.0 / eta);
    emit(njson{{"record", "smooth"},
               {"P", P},
               {"eta", eta},
               {"bound", set.bound},
               {"count", set.size()},
               {"density", density},
               {"dickman", rho},
               {"rel_gap", std::abs(density - rho) / rho}});
    if (list)
        for (const auto m : set.members) std::cout << m << "\n";
    return 0;
}

int cmd_dickman(double x, double step) {
    const double rho = step > 0 ? dickman_rho(x, step) : dickman_rho(x);
    emit(njson{{"record", "dickman"}, {"x", x}, {"rho", rho}});
    return 0;
}

void emit_sum(const std::string& what, int k, double P, double alpha, Complex value) {
    emit(njson{{"record", what},
               {"k", k},
               {"P", P},
               {"alpha", alpha},
               {"re", value.real()},
               {"im", value.imag()}});
}

int cmd_sums(const Options&, const std::string& what, int k, double P, double eta,
             double alpha, long long q, long long a, double beta, bool approx,
             bool from_stdin) {
    if (from_stdin) {
        std::string line;
        while (std::getline(std::cin, line)) {
            if (line.empty()) continue;
            const auto req = njson::parse(line);
            const std::string w = req.value("what", "f");
            const int kk = req.value("k", 2);
            const double pp = req.value("P", 10.0);
            const double al = req.value("alpha", 0.0);
            if (w == "f")
                emit_sum("f", kk, pp, al, weyl_sum_f(kk, pp, al));
            else if (w == "g")
                emit_sum("g", kk, pp, al,
                         smooth_weyl_sum_g(kk, pp, req.value("eta", 0.5), al));
            else
                throw std::runtime_error("stdin batch supports what = f | g");
        }
        return 0;
    }

    if (what == "f") {
        if (approx) {
            const auto rep = major_arc_approx_f(k, P, static_cast<std::uint64_t>(q), a, alpha);
            emit(njson{{"record", "f_approx"},
                       {"k", k},
                       {"P", P},
                       {"alpha", alpha},
                       {"q", q},
                       {"a", a},
                       {"re", rep.exact.real()},
                       {"im", rep.exact.imag()},
                       {"approx_re", rep.approx.real()},
                       {"approx_im", rep.approx.imag()},
                       {"gap", rep.gap},
                       {"reference", rep.reference}});
        } else {
            emit_sum("f", k, P, alpha, weyl_sum_f(k, P, alpha));
        }
    } else if (what == "g") {
        if (approx) {
            const auto rep =
                major_arc_approx_g(k, P, eta, static_cast<std::uint64_t>(q), a, alpha);
            emit(njson{{"record", "g_approx"},
                       {"k", k},
                       {"P", P},
                       {"eta", eta},
                       {"alpha", alpha},
                       {"q", q},
                       {"a", a},
                       {"re", rep.exact.real()},
                       {"im", rep.exact.imag()},
                       {"approx_re", rep.approx.real()},
                       {"approx_im", rep.approx.imag()},
                       {"gap", rep.gap},
                       {"reference", rep.reference}});
        } else {
            emit_sum("g", k, P, alpha, smooth_weyl_sum_g(k, P, eta, alpha));
        }
    } else if (what == "S") {
        const auto v = gauss_sum_S(static_cast<std::uint64_t>(q), a, k);
        emit(njson{{"record", "S"},
                   {"q", q},
                   {"a", a},
                   {"k", k},
                   {"re", v.real()},
                   {"im", v.imag()}});
    } else if (what == "v") {
        const auto v = v_integral(k, P, beta);
        emit(njson{{"record", "v"},
                   {"k", k},
                   {"P", P},
                   {"beta", beta},
                   {"re", v.real()},
                   {"im", v.imag()}});
    } else {
        throw std::runtime_error("unknown sum kind: " + what);
    }
    return 0;
}

int cmd_arcs(const Options& opt, const std::string& kind, int k, double P, double W,
             long long sample) {
    const ArcSet set = kind == "pruned" ? pruned_arcs(k, P, W <= 0 ? std::log(std::log(P)) : W)
                                        : major_arcs(k, P);
    const double measure = arc_measure(set);
    const bool disjoint = pairwise_disjoint(set);
    if (opt.format == Format::csv) {
        std::cout << "q,a,center,half_width\n";
        for (const auto& arc : set.intervals) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%llu,%llu,%.17g,%.17g\n",
                          static_cast<unsigned long long>(arc.label.q),
                          static_cast<unsigned long long>(arc.label.a), arc.center,
                          arc.half_width);
            std::cout << buf;
        }
        return 0;
    }
    njson j{{"record", "arcs"},
            {"kind", kind},
            {"k", k},
            {"P", P},
            {"W", set.W},
            {"count", set.intervals.size()},
            {"measure", measure},
            {"disjoint", disjoint},
            {"measure_bound", std::pow(P, 2 - k)}};
    bool ok = true;
    if (sample > 0 && kind == "major") {
        // seeded cross-validation of classify against interval membership
        std::mt19937_64 rng(opt.seed);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        long long agree = 0;
        for (long long i = 0; i < sample; ++i) {
            const double alpha = unif(rng);
            if (classify(alpha, k, P).major == covers(set, alpha)) ++agree;
        }
        ok = agree == sample;
        j["sampled"] = sample;
        j["classify_agrees"] = agree;
    }
    emit(j);
    return ok ? 0 : 1;
}

int cmd_classify(int k, double P, double alpha) {
    const auto c = classify(alpha, k, P);
    emit(njson{{"record", "classify"},
               {"alpha", alpha},
               {"k", k},
               {"P", P},
               {"major", c.major},
               {"q", c.major ? njson(c.label.q) : njson(nullptr)},
               {"a", c.major ? njson(c.label.a) : njson(nullptr)},
               {"distance", c.major ? njson(c.distance) : njson(nullptr)}});
    return 0;
}

int cmd_count(int k, int t, int u, double eta, double P, long long n, bool with_dft) {
    const auto nn = static_cast<std::uint64_t>(n);
    const Integer direct = P > 0 ? mixed_rep_count(k, t, u, eta, P, nn)
                                 : mixed_rep_count(k, t, u, eta, nn);
    njson j{{"record", "count"}, {"k", k}, {"t", t}, {"u", u},
            {"eta", eta},        {"n", n}, {"R", direct.get_str()}};
    bool ok = true;
    if (with_dft) {
        const Integer dft = P > 0 ? dft_rep_count(k, t, u, eta, P, nn)
                                  : dft_rep_count(k, t, u, eta, nn);
        j["R_dft"] = dft.get_str();
        ok = dft == direct;
        j["agree"] = ok;
    }
    emit(j);
    return ok ? 0 : 1;
}

int cmd_moments(int k, double P, int s, double eta, bool minor, long long grid) {
    if (minor) {
        const auto rep = minor_arc_moment(k, P, 2 * s, static_cast<std::size_t>(grid));
        emit(njson{{"record", "minor_moment"},
                   {"k", k},
                   {"P", P},
                   {"w", 2 * s},
                   {"grid", grid},
                   {"full_moment", rep.full_moment.get_str()},
                   {"major_quadrature", rep.major_quadrature},
                   {"minor_quadrature", rep.minor_quadrature},
                   {"minor_estimate", rep.minor_estimate},
                   {"consistency_gap", rep.consistency_gap},
                   {"reference", rep.reference},
                   {"ratio", rep.ratio}});
        return 0;
    }
    const auto base = eta > 0 && eta < 1 ? power_series(k, P, eta) : power_series(k, P);
    const Integer m = even_moment(base, s);
    emit(njson{{"record", "moment"},
               {"k", k},
               {"P", P},
               {"s", s},
               {"smooth", eta > 0 && eta < 1},
               {"eta", eta},
               {"value", m.get_str()}});
    return 0;
}

int cmd_vinogradov(int s, int k, long long X) {
    const auto v = vinogradov_count(s, k, static_cast<std::uint64_t>(X));
    emit(njson{{"record", "vinogradov"},
               {"s", v.s},
               {"k", v.k},
               {"X", v.X},
               {"J", v.J.get_str()}});
    return 0;
}

int cmd_series(const Options& opt, int k, double P, double eta, int copies,
               long long max_degree) {
    auto base = eta > 0 && eta < 1 ? power_series(k, P, eta) : power_series(k, P);
    const auto series =
        copies == 1 ? base
                    : convolve_power(base, copies,
                                     max_degree > 0
                                         ? std::optional<std::size_t>(
                                               static_cast<std::size_t>(max_degree))
                                         : std::nullopt);
    if (opt.format == Format::csv) std::cout << "index,coefficient\n";
    for (std::size_t i = 0; i < series.coeff.size(); ++i) {
        if (series.coeff[i] == 0) continue;
        if (opt.format == Format::csv)
            std::cout << i << ',' << series.coeff[i].get_str() << "\n";
        else
            emit(njson{{"index", i}, {"coefficient", series.coeff[i].get_str()}});
    }
    return 0;
}

int cmd_local(const Options& opt, const std::string& what, long long q, long long n,
              long long n_lo, int s, int k, long long Q, long long p, int gamma) {
    const auto nn = static_cast<std::uint64_t>(n);
    if (what == "series-table") {
        const SingularSeriesTable table(s, k, static_cast<std::uint64_t>(Q));
        if (opt.format == Format::csv) std::cout << "n,Q,value\n";
        for (std::uint64_t i = static_cast<std::uint64_t>(n_lo); i <= nn; ++i) {
            const double v = table.evaluate(i);
            if (opt.format == Format::csv) {
                char buf[96];
                std::snprintf(buf, sizeof buf, "%llu,%lld,%.17g\n",
                              static_cast<unsigned long long>(i), Q, v);
                std::cout << buf;
            } else {
                emit(njson{{"n", i}, {"Q", Q}, {"value", v}});
            }
        }
        return 0;
    }
    if (what == "aq") {
        const auto v = a_q(static_cast<std::uint64_t>(q), nn, s, k);
        emit(njson{{"record", "a_q"},
                   {"q", q},
                   {"n", n},
                   {"s", s},
                   {"k", k},
                   {"re", v.real()},
                   {"im", v.imag()}});
        return 0;
    }
    if (what == "series") {
        const double v = singular_series_truncated(nn, s, k, static_cast<std::uint64_t>(Q));
        emit(njson{{"record", "singular_series"},
                   {"n", n},
                   {"s", s},
                   {"k", k},
                   {"Q", Q},
                   {"value", v}});
        return 0;
    }
    if (what == "density") {
        const Rational d = local_density(static_cast<std::uint64_t>(p), gamma, nn, s, k);
        emit(njson{{"record", "local_density"},
                   {"p", p},
                   {"gamma", gamma},
                   {"n", n},
                   {"s", s},
                   {"k", k},
                   {"density", to_string(d)},
                   {"density_approx", d.get_d()}});
        return 0;
    }
    if (what == "positivity") {
        const auto rep = positivity_check(1, nn, k, s, static_cast<std::uint64_t>(Q));
        emit(njson{{"record", "positivity"},
                   {"n_hi", n},
                   {"s", s},
                   {"k", k},
                   {"Q", Q},
                   {"min", rep.min_value},
                   {"argmin", rep.argmin},
                   {"max", rep.max_value},
                   {"argmax", rep.argmax},
                   {"pass", rep.pass}});
        return rep.pass ? 0 : 1;
    }
    throw std::runtime_error("unknown local computation: " + what);
}

int cmd_integral(long long n, int k, int s, double W) {
    const auto rep = singular_integral(static_cast<std::uint64_t>(n), k, s, W);
    emit(njson{{"record", "singular_integral"},
               {"n", n},
               {"k", k},
               {"s", s},
               {"W", rep.W},
               {"quadrature", rep.quadrature},
               {"closed_form", rep.closed_form},
               {"rel_gap", rep.rel_gap}});
    return 0;
}

RhoSource parse_rho(const std::string& name) {
    if (name == "dickman") return RhoSource::dickman;
    if (name == "empirical") return RhoSource::empirical;
    if (name == "one") return RhoSource::one;
    throw std::runtime_error("unknown rho source: " + name);
}

int cmd_asymptotic(int k, int t, int u, double eta, long long n_lo, long long n_hi,
                   long long Q, long long step, const std::string& rho_src) {
    const auto rep = asymptotic_comparison(
        k, t, u, eta, static_cast<std::uint64_t>(n_lo), static_cast<std::uint64_t>(n_hi),
        static_cast<std::uint64_t>(Q), static_cast<std::uint64_t>(step),
        parse_rho(rho_src));
    emit(njson{{"record", "asymptotic"},
               {"k", k},
               {"t", t},
               {"u", u},
               {"eta", eta},
               {"n_lo", n_lo},
               {"n_hi", n_hi},
               {"Q", Q},
               {"samples", rep.samples},
               {"mean_ratio", rep.mean_ratio},
               {"min_ratio", rep.min_ratio},
               {"max_ratio", rep.max_ratio}});
    return 0;
}

int cmd_report(const Options& opt, int mutate_row) {
    bool all_pass = true;
    njson doc;
    doc["record"] = "report";

    // --- ledger section: exact arithmetic ---
    auto rows = builtin_rows();
    if (mutate_row > 0)
        for (auto& row : rows)
            if (row.k == mutate_row) row.lambda_w = row.lambda_w + rat(1, 100);
    const auto certs = verify_rows(rows);
    int passed = 0;
    for (const auto& c : certs) passed += c.pass ? 1 : 0;
    all_pass = all_pass && passed == static_cast<int>(certs.size());
    if (opt.format == Format::json)
        for (const auto& cert : certs)
            for (const auto& c : cert.checks)
                emit(njson{{"record", "check"},
                           {"k", cert.k},
                           {"id", c.id},
                           {"status", c.pass ? "pass" : "fail"},
                           {"expected", c.expected},
                           {"actual", c.actual}});
    doc["ledger"] = njson{{"status", "exact"},
                          {"rows", certs.size()},
                          {"passed", passed},
                          {"H", h_sequence(rows)}};

    // --- moment section: exact integers bridged to quadrature ---
    {
        const Integer m = even_moment(power_series(2, 3.0), 2);
        const bool moment_ok = m == 15;
        const auto series = mixed_rep_series(3, 2, 2, 0.6, 8.0, 600);
        const auto table = dft_rep_table(3, 2, 2, 0.6, 8.0, 600);
        bool dft_ok = true;
        for (std::size_t n = 0; n < table.size(); ++n)
            dft_ok = dft_ok && table[n] == series.coeff[n];

        // three-factor interpolation bound with the k=7 row weights applied
        // to desk-scale k'=2 sums
        const auto& row = builtin_row(7);
        const auto hw = row_weights(row);
        const int kp = 2;
        const double Pp = 6.0, eta_p = 0.6;
        const Integer m_f = even_moment(power_series(kp, Pp), row.k * (row.k + 1) / 2);
        const Integer m_g1 = even_moment(power_series(kp, Pp, eta_p), row.w);
        const Integer m_g2 = even_moment(power_series(kp, Pp, eta_p), row.w + 1);
        const auto set = smooth_set(Pp, eta_p);
        const int N = 1 << 12;
        double lhs = 0;
        for (int j = 0; j < N; ++j) {
            const double alpha = static_cast<double>(j) / N;
            lhs += std::pow(std::abs(weyl_sum_f(kp, Pp, alpha)), row.t) *
                   std::pow(std::abs(smooth_weyl_sum_g(kp, set, alpha)), row.u);
        }
        lhs /= N;
        auto log_mpz = [](const Integer& v) {
            signed long e2 = 0;
            const double mant = mpz_get_d_2exp(&e2, v.get_mpz_t());
            return std::log(mant) + static_cast<double>(e2) * std::log(2.0);
        };
        const double rhs_log = hw.omega.get_d() * log_mpz(m_f) +
                               hw.phi1.get_d() * log_mpz(m_g1) +
                               hw.phi2.get_d() * log_mpz(m_g2);
        const bool holder_ok = std::log(lhs) <= rhs_log + 1e-6;

        all_pass = all_pass && moment_ok && dft_ok && holder_ok;
        doc["moments"] = njson{{"status", "exact"},
                               {"parseval_15", moment_ok},
                               {"dft_equals_convolution", dft_ok},
                               {"holder_bound_holds", holder_ok},
                               {"holder_slack_log", rhs_log - std::log(lhs)}};
    }

    // --- arc section ---
    {
        njson arcs_section = njson::array();
        bool arcs_ok = true;
        for (const int k : {3, 7}) {
            const auto set = major_arcs(k, 20.0);
            const double measure = arc_measure(set);
            const bool disjoint = pairwise_disjoint(set);
            const bool bounded = measure <= std::pow(20.0, 2 - k);
            arcs_ok = arcs_ok && disjoint && bounded;
            arcs_section.push_back(njson{{"k", k},
                                         {"P", 20.0},
                                         {"count", set.intervals.size()},
                                         {"measure", measure},
                                         {"disjoint", disjoint},
                                         {"measure_bounded", bounded}});
        }
        all_pass = all_pass && arcs_ok;
        doc["arcs"] = njson{{"status", "exact geometry in doubles"},
                            {"sets", arcs_section}};
    }

    // --- asymptotic section: empirical ---
    {
        const auto rep = asymptotic_comparison(2, 5, 0, 1.0, 2000, 2400, 100);
        const bool sane = rep.mean_ratio > 0.7 && rep.mean_ratio < 1.3;
        all_pass = all_pass && sane;
        doc["asymptotic"] = njson{{"status", "empirical"},
                                  {"mean_ratio", rep.mean_ratio},
                                  {"window", "[0.7, 1.3]"},
                                  {"pass", sane}};
    }

    doc["annotations"] = njson{
        {"exact", "ledger identities, margins, U column, moment/orthogonality counts"},
        {"empirical", "major-arc approximants, smooth density vs dickman, main-term ratio"},
        {"out_of_reach",
         "asymptotic inequalities with unspecified constants (minor-arc mean values, "
         "o(1) terms); reported as trends only"}};
    doc["pass"] = all_pass;

    if (opt.format == Format::text) {
        std::cout << "ledger: " << passed << "/" << certs.size() << " rows pass; H(k) = "
                  << doc["ledger"]["H"].get<std::string>() << "\n"
                  << "moments: parseval=" << doc["moments"]["parseval_15"]
                  << " dft=" << doc["moments"]["dft_equals_convolution"] << "\n"
                  << "arcs: " << doc["arcs"]["sets"].dump() << "\n"
                  << "asymptotic mean ratio: " << doc["asymptotic"]["mean_ratio"] << "\n"
                  << (all_pass ? "REPORT PASS" : "REPORT FAIL") << "\n";
    } else {
        emit(doc);
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circle-method laboratory for sums of k-th powers"};
    app.require_subcommand(1);

    Options opt;
    int threads = 1;
    std::string format = "json";
    app.add_option("--threads", threads, "worker threads (default 1)");
    app.add_option("--format", format, "json | csv | text");
    app.add_option("--seed", opt.seed, "seed for randomized samplers");
    app.add_option("--cache-dir", opt.cache_dir,
                   "smooth-set cache directory (or WARING_CACHE_DIR)");
    app.add_option("--max-cells", budget().max_cells, "coefficient cell cap");
    app.add_option("--max-panels", budget().max_panels, "quadrature panel cap");
    app.add_option("--max-tuples", budget().max_tuples, "enumeration tuple cap");
    app.add_option("--max-arcs", budget().max_arcs, "arc count cap");
    app.add_option("--max-sieve", budget().max_sieve, "sieve length cap");

    // ledger-verify
    auto* ledger_verify = app.add_subcommand("ledger-verify", "certify ledger rows");
    std::string rows_path;
    int only_k = -1;
    bool verify_all_flag = false;
    ledger_verify->add_flag("--all", verify_all_flag, "verify every row (default)");
    ledger_verify->add_option("--k", only_k, "verify a single k");
    ledger_verify->add_option("--rows", rows_path, "row override file");

    // ledger-table
    auto* ledger_table = app.add_subcommand("ledger-table", "print rows with derived data");
    ledger_table->add_option("--rows", rows_path, "row override file");

    // smooth
    auto* smooth_cmd = app.add_subcommand("smooth", "build a smooth set");
    double P = 100.0, eta = 0.5;
    bool list_members = false;
    smooth_cmd->add_option("--P", P, "cap")->required();
    smooth_cmd->add_option("--eta", eta, "smoothness exponent")->required();
    smooth_cmd->add_flag("--list", list_members, "print members");

    // dickman
    auto* dickman_cmd = app.add_subcommand("dickman", "evaluate the rho function");
    double x = 2.0, step = -1.0;
    dickman_cmd->add_option("--x", x, "argument")->required();
    dickman_cmd->add_option("--step", step, "grid step override");

    // sums
    auto* sums_cmd = app.add_subcommand("sums", "evaluate f, g, S or v");
    std::string what = "f";
    int k = 3;
    double alpha = 0.0, beta = 0.0;
    long long q = 1, a = 0;
    bool approx = false, from_stdin = false;
    sums_cmd->add_option("--what", what, "f | g | S | v")->required();
    sums_cmd->add_option("--k", k, "power");
    sums_cmd->add_option("--P", P, "cap");
    sums_cmd->add_option("--eta", eta, "smoothness exponent (g)");
    sums_cmd->add_option("--alpha", alpha, "argument (f, g)");
    sums_cmd->add_option("--beta", beta, "argument (v)");
    sums_cmd->add_option("--q", q, "modulus (S, approximants)")->check(CLI::PositiveNumber);
    sums_cmd->add_option("--a", a, "numerator (S, approximants)");
    sums_cmd->add_flag("--approx", approx, "compare against the major-arc approximant");
    sums_cmd->add_flag("--stdin", from_stdin, "read JSON requests from stdin");

    // arcs
    auto* arcs_cmd = app.add_subcommand("arcs", "enumerate a dissection");
    std::string kind = "major";
    double W = -1.0;
    arcs_cmd->add_option("--kind", kind, "major | pruned");
    arcs_cmd->add_option("--k", k, "power")->required();
    arcs_cmd->add_option("--P", P, "cap")->required();
    arcs_cmd->add_option("--W", W, "pruning parameter (default log log P)");
    long long sample = 0;
    arcs_cmd->add_option("--sample", sample,
                         "cross-validate classify on this many seeded alpha");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "major/minor test for one alpha");
    classify_cmd->add_option("--alpha", alpha, "point in [0,1)")->required();
    classify_cmd->add_option("--k", k, "power")->required();
    classify_cmd->add_option("--P", P, "cap")->required();

    // count
    auto* count_cmd = app.add_subcommand("count", "exact representation count");
    int t = 1, u = 0;
    long long n = 1;
    bool with_dft = false;
    double cap_override = -1.0;
    count_cmd->add_option("--k", k, "power")->required();
    count_cmd->add_option("--t", t, "classical variables")->required();
    count_cmd->add_option("--u", u, "smooth variables")->required();
    count_cmd->add_option("--eta", eta, "smoothness exponent");
    count_cmd->add_option("--n", n, "target")->required()->check(CLI::PositiveNumber);
    count_cmd->add_option("--P", cap_override, "cap override (default n^{1/k})");
    count_cmd->add_flag("--dft", with_dft, "cross-check through orthogonality");

    // moments
    auto* moments_cmd = app.add_subcommand("moments", "exact even moment");
    int s = 2;
    double eta_m = -1.0;
    moments_cmd->add_option("--k", k, "power")->required();
    moments_cmd->add_option("--P", P, "cap")->required();
    moments_cmd->add_option("--s", s, "half the moment order")->required();
    moments_cmd->add_option("--eta", eta_m, "smooth base (optional)");
    bool minor = false;
    long long grid = 2000;
    moments_cmd->add_flag("--minor", minor, "split the 2s-th moment over the dissection");
    moments_cmd->add_option("--grid", grid, "quadrature sample density (with --minor)");

    // vinogradov
    auto* vin_cmd = app.add_subcommand("vinogradov", "power-sum system count");
    long long X = 3;
    vin_cmd->add_option("--s", s, "variables per side")->required();
    vin_cmd->add_option("--k", k, "top degree")->required();
    vin_cmd->add_option("--X", X, "box size")->required()->check(CLI::PositiveNumber);

    // series
    auto* series_cmd = app.add_subcommand("series", "export a coefficient series");
    int copies = 1;
    long long max_degree = -1;
    series_cmd->add_option("--k", k, "power")->required();
    series_cmd->add_option("--P", P, "cap")->required();
    series_cmd->add_option("--eta", eta_m, "smooth base (optional)");
    series_cmd->add_option("--copies", copies, "convolution copies");
    series_cmd->add_option("--max-degree", max_degree, "truncation");

    // local
    auto* local_cmd = app.add_subcommand("local", "singular-series computations");
    std::string local_what = "aq";
    long long Q = 50, p = 2;
    int gamma = 1;
    long long local_n_lo = 1;
    local_cmd->add_option("--n-lo", local_n_lo, "range start (series-table)");
    local_cmd->add_option("--what", local_what,
                          "aq | series | series-table | density | positivity")
        ->required();
    local_cmd->add_option("--q", q, "modulus (aq)")->check(CLI::PositiveNumber);
    local_cmd->add_option("--n", n, "target");
    local_cmd->add_option("--s", s, "variable count")->required();
    local_cmd->add_option("--k", k, "power")->required();
    local_cmd->add_option("--Q", Q, "truncation (series, positivity)");
    local_cmd->add_option("--p", p, "prime (density)")->check(CLI::PositiveNumber);
    local_cmd->add_option("--gamma", gamma, "prime-power exponent (density)");

    // integral
    auto* integral_cmd = app.add_subcommand("integral", "truncated singular integral");
    integral_cmd->add_option("--n", n, "target")->required()->check(CLI::PositiveNumber);
    integral_cmd->add_option("--k", k, "power")->required();
    integral_cmd->add_option("--s", s, "variable count")->required();
    integral_cmd->add_option("--W", W, "window")->required();

    // asymptotic
    auto* asym_cmd = app.add_subcommand("asymptotic", "exact counts vs main term");
    long long n_lo = 10000, n_hi = 11000, step_n = 1;
    std::string rho_src = "dickman";
    asym_cmd->add_option("--k", k, "power")->required();
    asym_cmd->add_option("--t", t, "classical variables")->required();
    asym_cmd->add_option("--u", u, "smooth variables")->required();
    asym_cmd->add_option("--eta", eta, "smoothness exponent");
    asym_cmd->add_option("--n-lo", n_lo, "range start")->required();
    asym_cmd->add_option("--n-hi", n_hi, "range end")->required();
    asym_cmd->add_option("--Q", Q, "singular series truncation");
    asym_cmd->add_option("--step", step_n, "sample every step-th n");
    asym_cmd->add_option("--rho", rho_src, "dickman | empirical | one");

    // report
    auto* report_cmd = app.add_subcommand("report", "chained verification document");
    int mutate_row = -1;
    report_cmd->add_option("--mutate-row", mutate_row, "corrupt one row first");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    set_thread_count(threads);
    opt.format = parse_format(format);
    if (opt.cache_dir.empty())
        if (const char* env = std::getenv("WARING_CACHE_DIR")) opt.cache_dir = env;

    try {
        if (*ledger_verify) return cmd_ledger_verify(opt, rows_path, only_k);
        if (*ledger_table) return cmd_ledger_table(opt, rows_path);
        if (*smooth_cmd) return cmd_smooth(opt, P, eta, list_members);
        if (*dickman_cmd) return cmd_dickman(x, step);
        if (*sums_cmd)
            return cmd_sums(opt, what, k, P, eta, alpha, q, a, beta, approx, from_stdin);
        if (*arcs_cmd) return cmd_arcs(opt, kind, k, P, W, sample);
        if (*classify_cmd) return cmd_classify(k, P, alpha);
        if (*count_cmd) return cmd_count(k, t, u, eta, cap_override, n, with_dft);
        if (*moments_cmd) return cmd_moments(k, P, s, eta_m, minor, grid);
        if (*vin_cmd) return cmd_vinogradov(s, k, X);
        if (*series_cmd) return cmd_series(opt, k, P, eta_m, copies, max_degree);
        if (*local_cmd) return cmd_local(opt, local_what, q, n, local_n_lo, s, k, Q, p, gamma);
        if (*integral_cmd) return cmd_integral(n, k, s, W);
        if (*asym_cmd)
            return cmd_asymptotic(k, t, u, eta, n_lo, n_hi, Q, step_n, rho_src);
        if (*report_cmd) return cmd_report(opt, mutate_row);
    } catch (const budget_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const tolerance_error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
