#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace waring {

// The integers in [1, P] whose prime factors all lie below P^eta.
// 1 is always a member (its prime condition is vacuous).
struct SmoothSet {
    double cap = 0;     // P
    double eta = 0;
    double bound = 0;   // B = P^eta, rounded up one ulp before any p <= B test
    std::vector<std::uint64_t> members;  // strictly ascending

    bool contains(std::uint64_t m) const;
    std::uint64_t size() const { return members.size(); }
};

// True iff every prime factor of m is <= bound (trial division).
bool is_smooth(std::uint64_t m, double bound);

// Builds the full set by a greatest-prime-factor sieve over [1, floor(P)].
SmoothSet smooth_set(double P, double eta);

struct DensityReport {
    std::uint64_t count = 0;
    std::uint64_t floor_p = 0;
    double density = 0;   // count / floor(P)
    double dickman = 0;   // rho(1/eta)
    double rel_gap = 0;   // |density - dickman| / dickman
};

DensityReport smooth_density(double P, double eta);

// On-disk member cache, keyed by (floor(P), B): a header line followed by one
// member per line.  load returns false on miss or key mismatch.
bool load_smooth_cache(const std::string& dir, double P, double eta, SmoothSet& out);
void store_smooth_cache(const std::string& dir, const SmoothSet& set);
SmoothSet smooth_set_cached(const std::string& dir, double P, double eta);

} // namespace waring
