#include "waring/arcs.hpp"

#include "waring/common.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace waring {

namespace {

double major_threshold(int k, double P) {
    return std::pow(P, 1.0 - k) / (2.0 * k);
}

Arc make_arc(std::uint64_t q, std::uint64_t a, double half_width) {
    Arc arc;
    arc.label = {q, a};
    arc.center = static_cast<double>(a) / static_cast<double>(q);
    arc.half_width = half_width;
    arc.lo = std::max(0.0, arc.center - half_width);
    arc.hi = std::min(1.0, arc.center + half_width);  // [0,1): the point 1 has measure zero
    return arc;
}

} // namespace

Classification classify(double alpha, int k, double P) {
    if (P < 2) throw std::invalid_argument("classify: P >= 2 required");
    const double threshold = major_threshold(k, P);
    const auto qmax = static_cast<std::uint64_t>(std::floor(P));
    for (std::uint64_t q = 1; q <= qmax; ++q) {
        const double qa = static_cast<double>(q) * alpha;
        const double a = std::round(qa);
        if (a < 0) continue;
        const double dist = std::abs(qa - a);
        if (dist > threshold) continue;
        const auto ai = static_cast<std::uint64_t>(a);
        // a non-coprime pair reduces to an earlier q, already rejected
        if (gcd_u64(ai == 0 ? q : ai, q) != 1) continue;
        return {true, {q, ai}, dist};
    }
    return {false, {}, 0.0};
}

Classification classify_convergents(double alpha, int k, double P) {
    if (P < 2) throw std::invalid_argument("classify: P >= 2 required");
    const double threshold = major_threshold(k, P);
    const auto qmax = static_cast<std::uint64_t>(std::floor(P));

    // continued-fraction convergents a_j/q_j of alpha; the best rational
    // approximation with q <= qmax is among them (and q=1 endpoints)
    Classification best{false, {}, 0.0};
    auto consider = [&](std::uint64_t q, double a_real) {
        if (q == 0 || q > qmax || a_real < 0) return;
        const auto a = static_cast<std::uint64_t>(std::round(a_real));
        const double dist = std::abs(static_cast<double>(q) * alpha - static_cast<double>(a));
        if (dist > threshold) return;
        if (gcd_u64(a == 0 ? q : a, q) != 1) return;
        if (!best.major || q < best.label.q) best = {true, {q, a}, dist};
    };

    consider(1, std::round(alpha));
    double y = alpha;
    std::uint64_t p_prev = 1, q_prev = 0, p_cur = static_cast<std::uint64_t>(std::floor(alpha)),
                  q_cur = 1;
    consider(q_cur, static_cast<double>(p_cur));
    for (int iter = 0; iter < 64; ++iter) {
        const double frac = y - std::floor(y);
        if (frac < 1e-15) break;
        y = 1.0 / frac;
        const double term_f = std::floor(y);
        if (term_f > 1e18) break;
        const auto term = static_cast<std::uint64_t>(term_f);
        const std::uint64_t p_next = term * p_cur + p_prev;
        const std::uint64_t q_next = term * q_cur + q_prev;
        if (q_next > qmax) {
            // intermediate (semiconvergent) denominators can still land inside
            for (std::uint64_t tq = q_cur + q_prev; tq <= qmax; tq += q_cur)
                consider(tq, std::round(static_cast<double>(tq) * alpha));
            break;
        }
        p_prev = p_cur; q_prev = q_cur; p_cur = p_next; q_cur = q_next;
        consider(q_cur, static_cast<double>(p_cur));
        if (best.major) break;  // least q found: convergents ascend in q
    }
    return best;
}

ArcSet major_arcs(int k, double P) {
    if (P < 2) throw std::invalid_argument("major_arcs: P >= 2 required");
    ArcSet set;
    set.kind = ArcKind::major;
    set.k = k;
    set.P = P;
    const double threshold = major_threshold(k, P);
    const auto qmax = static_cast<std::uint64_t>(std::floor(P));

    // count ~ sum phi(q) = O(P^2)
    std::size_t count = 0;
    for (std::uint64_t q = 1; q <= qmax; ++q) {
        for (std::uint64_t a = 0; a <= q; ++a) {
            if (gcd_u64(a == 0 ? q : a, q) != 1) continue;
            ++count;
            if (count > budget().max_arcs)
                throw budget_error("major_arcs: arc count exceeds cap");
            set.intervals.push_back(make_arc(q, a, threshold / static_cast<double>(q)));
        }
    }
    std::sort(set.intervals.begin(), set.intervals.end(),
              [](const Arc& x, const Arc& y) { return x.lo < y.lo; });
    return set;
}

ArcSet pruned_arcs(int k, double P, double W) {
    if (P < 2 || W < 1)
        throw std::invalid_argument("pruned_arcs: P >= 2 and W >= 1 required");
    ArcSet set;
    set.kind = ArcKind::pruned;
    set.k = k;
    set.P = P;
    set.W = W;
    const double half_width = W * std::pow(P, -k);
    const auto qmax = static_cast<std::uint64_t>(std::floor(W));
    for (std::uint64_t q = 1; q <= qmax; ++q)
        for (std::uint64_t a = 0; a <= q; ++a) {
            if (gcd_u64(a == 0 ? q : a, q) != 1) continue;
            set.intervals.push_back(make_arc(q, a, half_width));
        }
    std::sort(set.intervals.begin(), set.intervals.end(),
              [](const Arc& x, const Arc& y) { return x.lo < y.lo; });
    return set;
}

double total_length(const ArcSet& set) {
    double sum = 0;
    for (const auto& arc : set.intervals) sum += std::max(0.0, arc.hi - arc.lo);
    return sum;
}

double arc_measure(const ArcSet& set) {
    // sweep the union of [lo, hi] intervals (already sorted by lo)
    double measure = 0;
    double cur_lo = 0, cur_hi = -1;
    for (const auto& arc : set.intervals) {
        if (arc.hi <= arc.lo) continue;
        if (arc.lo > cur_hi) {
            if (cur_hi > cur_lo) measure += cur_hi - cur_lo;
            cur_lo = arc.lo;
            cur_hi = arc.hi;
        } else {
            cur_hi = std::max(cur_hi, arc.hi);
        }
    }
    if (cur_hi > cur_lo) measure += cur_hi - cur_lo;
    return measure;
}

bool pairwise_disjoint(const ArcSet& set) {
    for (std::size_t i = 1; i < set.intervals.size(); ++i)
        if (set.intervals[i].lo < set.intervals[i - 1].hi) return false;
    return true;
}

bool covers(const ArcSet& set, double alpha) {
    // binary search on lo, then walk back over arcs that could still reach alpha
    const auto& v = set.intervals;
    double max_len = 0;
    for (const auto& arc : v) max_len = std::max(max_len, arc.hi - arc.lo);
    auto it = std::upper_bound(v.begin(), v.end(), alpha,
                               [](double x, const Arc& arc) { return x < arc.lo; });
    while (it != v.begin()) {
        --it;
        if (alpha - it->lo > max_len) break;
        if (alpha >= it->lo && alpha <= it->hi) return true;
    }
    return false;
}

} // namespace waring
