#pragma once

#include "waring/rational.hpp"
#include "waring/table.hpp"

#include <string>
#include <vector>

namespace waring {

// Interpolation weights for the three-factor Hoelder split of the mixed
// moment, plus the per-exponent margins and the combined margin.
// Identities (exact): omega + phi1 + phi2 = 1, k(k+1)*omega = t,
// 2w*phi1 + (2w+2)*phi2 = u.
struct HolderWeights {
    Rational omega;
    Rational phi1;
    Rational phi2;
    Rational delta_w;   // lambda_{w,k}   - 2w     + k
    Rational delta_w1;  // lambda_{w+1,k} - 2(w+1) + k
    Rational margin;    // phi1*delta_w + phi2*delta_w1 - omega
};

// omega = t/(k(k+1)), phi1 = (1-omega)(w+1) - u/2, phi2 = u/2 - (1-omega)w.
// Accepts t = 0 (degenerate two-factor interpolation); does not enforce
// nonnegativity of phi1/phi2 - that is verify_row's job.
HolderWeights holder_weights(int k, int t, int u, int w);

// Weights plus margins for a full ledger row.
HolderWeights row_weights(const ExponentRow& row);

// floor(u / (2(1-omega))), exact; throws std::domain_error when omega >= 1.
long derived_w(int k, int t, int u);

// The combined margin phi1*delta_w + phi2*delta_w1 - omega, exact.
Rational delta_margin(const ExponentRow& row);

// Least positive D with -1/D > margin; throws std::domain_error when the
// margin is nonnegative (no such D exists).
long minimal_delta_inv(const ExponentRow& row);

struct UExponent {
    Rational value;  // u / (1 - t/(k+4)), exact
    Integer  floor;
};

// Throws std::domain_error when t >= k+4 (the exponent split degenerates).
UExponent u_exponent(const ExponentRow& row);

struct CheckResult {
    std::string id;       // "a".."f"
    std::string what;
    bool        pass = false;
    std::string expected;
    std::string actual;
};

// Certificate for one ledger row.  Failures are recorded, never thrown, and
// every intermediate rational is carried so a failure is self-explaining.
struct RowCertificate {
    int  k = 0;
    bool pass = false;

    std::vector<CheckResult> checks;

    HolderWeights weights;
    Rational      u_value;          // meaningful when t < k+4
    Integer       u_floor_computed;
    bool          u_defined = false;

    // soft minimality report on delta_inv (never affects pass)
    bool minimal_defined = false;
    long minimal_dinv = 0;          // least D with -1/D > margin
    bool dinv_matches_minimal = false;
    bool dinv_tight = false;        // margin >= -1/(delta_inv-1)

    std::string to_json() const;
    std::string to_text() const;
};

RowCertificate verify_row(const ExponentRow& row);

// verify_row over every built-in row, ascending k.
std::vector<RowCertificate> verify_all();
std::vector<RowCertificate> verify_rows(const std::vector<ExponentRow>& rows);

// The reproduced headline bounds "H(7) .. H(16)" as a single space-joined row.
std::string h_sequence(const std::vector<ExponentRow>& rows);

} // namespace waring
