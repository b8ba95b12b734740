#include "waring/ledger.hpp"

#include "waring/common.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace waring {

namespace {

// No floating point is used anywhere in this module: the margin comparisons
// are razor-thin (for k=7 the margin clears -1/1267 by about 2.7e-7) and must
// not be polluted by rounding.
Rational delta_v(const Rational& lambda, int v, int k) {
    return lambda - rat(2L * v - k, 1);
}

} // namespace

HolderWeights holder_weights(int k, int t, int u, int w) {
    if (k < 2 || t < 0 || u < 1 || w < 1)
        throw std::invalid_argument("holder_weights: need k >= 2, t >= 0, u >= 1, w >= 1");
    HolderWeights hw;
    hw.omega = rat(t, static_cast<long>(k) * (k + 1));
    const Rational one_minus = rat(1, 1) - hw.omega;
    const Rational half_u = rat(u, 2);
    hw.phi1 = one_minus * rat(w + 1, 1) - half_u;
    hw.phi2 = half_u - one_minus * rat(w, 1);
    return hw;
}

HolderWeights row_weights(const ExponentRow& row) {
    HolderWeights hw = holder_weights(row.k, row.t, row.u, row.w);
    hw.delta_w  = delta_v(row.lambda_w, row.w, row.k);
    hw.delta_w1 = delta_v(row.lambda_w1, row.w + 1, row.k);
    hw.margin   = hw.phi1 * hw.delta_w + hw.phi2 * hw.delta_w1 - hw.omega;
    return hw;
}

long derived_w(int k, int t, int u) {
    const Rational omega = rat(t, static_cast<long>(k) * (k + 1));
    if (omega >= 1)
        throw std::domain_error("derived_w: omega >= 1 (t >= k(k+1)) is ill-posed");
    // u / (2(1-omega)), floored exactly
    const Rational w = rat(u, 1) / (rat(2, 1) * (rat(1, 1) - omega));
    return floor_rational(w).get_si();
}

Rational delta_margin(const ExponentRow& row) {
    return row_weights(row).margin;
}

long minimal_delta_inv(const ExponentRow& row) {
    const Rational margin = delta_margin(row);
    if (margin >= 0)
        throw std::domain_error("minimal_delta_inv: margin is nonnegative, no delta exists");
    // least D >= 1 with -1/D > margin, i.e. D > 1/(-margin)
    const Rational inv = rat(1, 1) / (-margin);
    const Integer d = floor_rational(inv) + 1;
    return d.get_si();
}

UExponent u_exponent(const ExponentRow& row) {
    if (row.t >= row.k + 4)
        throw std::domain_error("u_exponent: t >= k+4, exponent split degenerates");
    UExponent ue;
    ue.value = rat(row.u, 1) / (rat(1, 1) - rat(row.t, row.k + 4));
    ue.floor = floor_rational(ue.value);
    return ue;
}

namespace {

CheckResult check(const std::string& id, const std::string& what, bool pass,
                  const std::string& expected, const std::string& actual) {
    return CheckResult{id, what, pass, expected, actual};
}

} // namespace

RowCertificate verify_row(const ExponentRow& row) {
    RowCertificate cert;
    cert.k = row.k;
    cert.weights = row_weights(row);

    // (a) the headline bound is the plain total of the two sum counts
    cert.checks.push_back(check("a", "H = t + u",
                                row.h == row.t + row.u,
                                std::to_string(row.t + row.u), std::to_string(row.h)));

    // (b) the moment index is the derived one
    {
        bool ok = false;
        std::string actual = "undefined";
        if (row.t < row.k * (row.k + 1)) {
            const long w = derived_w(row.k, row.t, row.u);
            ok = w == row.w;
            actual = std::to_string(w);
        }
        cert.checks.push_back(check("b", "w = floor(u/(2(1-omega)))", ok,
                                    std::to_string(row.w), actual));
    }

    // (c) the interpolation weights are a genuine convex combination
    cert.checks.push_back(check("c", "phi1 >= 0 and phi2 >= 0",
                                cert.weights.phi1 >= 0 && cert.weights.phi2 >= 0,
                                "nonnegative",
                                to_string(cert.weights.phi1) + ", " + to_string(cert.weights.phi2)));

    // (d) the margin clears -1/delta_inv
    {
        const bool ok = row.delta_inv > 0 &&
                        cert.weights.margin < rat(-1L, row.delta_inv);
        cert.checks.push_back(check("d", "margin < -1/delta_inv", ok,
                                    "< -1/" + std::to_string(row.delta_inv),
                                    to_string(cert.weights.margin)));
    }

    // (e) room for the Hoelder split on the pruned-arc complement
    cert.checks.push_back(check("e", "t < k + 4", row.t < row.k + 4,
                                "< " + std::to_string(row.k + 4), std::to_string(row.t)));

    // (f) the U column reproduces and clears 2r
    {
        bool ok = false;
        std::string actual = "undefined";
        if (row.t < row.k + 4) {
            const UExponent ue = u_exponent(row);
            cert.u_value = ue.value;
            cert.u_floor_computed = ue.floor;
            cert.u_defined = true;
            ok = ue.floor == row.u_floor && ue.value > rat(2L * row.r, 1);
            actual = ue.floor.get_str() + " (U = " + to_string(ue.value) + ")";
        }
        cert.checks.push_back(check("f", "floor(U) = U_floor and U > 2r", ok,
                                    std::to_string(row.u_floor) + ", > " + std::to_string(2 * row.r),
                                    actual));
    }

    cert.pass = true;
    for (const auto& c : cert.checks) cert.pass = cert.pass && c.pass;

    // Soft report: is delta_inv the sharpest possible integer?  The row data
    // does not claim minimality, so this never fails the certificate.
    if (cert.weights.margin < 0) {
        cert.minimal_defined = true;
        cert.minimal_dinv = minimal_delta_inv(row);
        cert.dinv_matches_minimal = cert.minimal_dinv == row.delta_inv;
        cert.dinv_tight = row.delta_inv <= 1 ||
                          cert.weights.margin >= rat(-1L, row.delta_inv - 1);
    }

    return cert;
}

std::vector<RowCertificate> verify_rows(const std::vector<ExponentRow>& rows) {
    std::vector<RowCertificate> certs(rows.size());
    parallel_for(rows.size(), [&](std::size_t i) { certs[i] = verify_row(rows[i]); });
    return certs;
}

std::vector<RowCertificate> verify_all() {
    return verify_rows(builtin_rows());
}

std::string h_sequence(const std::vector<ExponentRow>& rows) {
    std::string out;
    for (const auto& row : rows) {
        if (!out.empty()) out += ' ';
        out += std::to_string(row.t + row.u);
    }
    return out;
}

std::string RowCertificate::to_json() const {
    nlohmann::json j;
    j["k"] = k;
    j["pass"] = pass;
    nlohmann::json jchecks = nlohmann::json::array();
    for (const auto& c : checks) {
        jchecks.push_back({{"id", c.id},
                           {"what", c.what},
                           {"pass", c.pass},
                           {"expected", c.expected},
                           {"actual", c.actual}});
    }
    j["checks"] = jchecks;
    j["omega"] = to_string(weights.omega);
    j["phi1"] = to_string(weights.phi1);
    j["phi2"] = to_string(weights.phi2);
    j["delta_w"] = to_string(weights.delta_w);
    j["delta_w1"] = to_string(weights.delta_w1);
    j["margin"] = to_string(weights.margin);
    j["margin_approx"] = weights.margin.get_d();
    if (u_defined) {
        j["U"] = to_string(u_value);
        j["U_floor"] = u_floor_computed.get_str();
    }
    if (minimal_defined) {
        j["minimal_delta_inv"] = minimal_dinv;
        j["delta_inv_matches_minimal"] = dinv_matches_minimal;
        j["delta_inv_tight"] = dinv_tight;
    }
    return j.dump();
}

std::string RowCertificate::to_text() const {
    std::ostringstream os;
    os << "k=" << k << (pass ? "  PASS" : "  FAIL") << "\n";
    for (const auto& c : checks) {
        os << "  (" << c.id << ") " << c.what << ": " << (c.pass ? "pass" : "FAIL")
           << "  expected " << c.expected << ", got " << c.actual << "\n";
    }
    os << "  omega=" << to_string(weights.omega)
       << " phi1=" << to_string(weights.phi1)
       << " phi2=" << to_string(weights.phi2) << "\n";
    os << "  margin=" << to_string(weights.margin)
       << " (~" << weights.margin.get_d() << ")";
    if (minimal_defined)
        os << "  minimal_delta_inv=" << minimal_dinv
           << (dinv_matches_minimal ? " (matches)" : " (differs)");
    os << "\n";
    return os.str();
}

} // namespace waring
