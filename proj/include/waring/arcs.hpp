#pragma once

#include <cstdint>
#include <vector>

namespace waring {

struct ArcLabel {
    std::uint64_t q = 1;
    std::uint64_t a = 0;  // 0 <= a <= q, gcd(a,q) = 1
};

struct Arc {
    ArcLabel label;
    double center = 0;      // a/q
    double half_width = 0;
    double lo = 0, hi = 0;  // clipped to [0,1)
};

enum class ArcKind { major, minor, pruned };

struct ArcSet {
    ArcKind kind = ArcKind::major;
    int k = 0;
    double P = 0;
    double W = 0;  // pruning parameter (pruned sets only)
    std::vector<Arc> intervals;  // ascending by lo
};

struct Classification {
    bool major = false;
    ArcLabel label;     // meaningful when major
    double distance = 0;  // |q*alpha - a| at the label
};

// Least q <= P with |q*alpha - a| <= (2k)^{-1} P^{1-k} for some a coprime to
// q; exhaustive search over q (a = round(q*alpha)).
Classification classify(double alpha, int k, double P);

// Continued-fraction fast path; must agree with the exhaustive search.
Classification classify_convergents(double alpha, int k, double P);

// All (q,a) with 0 <= a <= q <= P, gcd(a,q) = 1, half-width
// (2k)^{-1} P^{1-k} / q, clipped to [0,1).
ArcSet major_arcs(int k, double P);

// Narrow arcs: q <= W, half-width W * P^{-k}.
ArcSet pruned_arcs(int k, double P, double W);

// Measure of the union of the clipped intervals (overlap-aware).
double arc_measure(const ArcSet& set);

// Sum of clipped lengths ignoring overlap (equals arc_measure iff disjoint).
double total_length(const ArcSet& set);

bool pairwise_disjoint(const ArcSet& set);

// True iff alpha lies in one of the set's closed intervals.
bool covers(const ArcSet& set, double alpha);

} // namespace waring
