#pragma once

// Brute-force reference implementations used only by tests.  Everything here
// is deliberately naive (nested loops, trial division) and independent of the
// library's computation paths.

#include "waring/rational.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

inline std::uint64_t ipow_u64(std::uint64_t x, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

// Ordered tuples (x_1..x_t, y_1..y_u) with x in [1,xcap], y drawn from ys,
// and sum of k-th powers equal to n.
inline std::uint64_t rep_count(int k, int t, int u, std::uint64_t xcap,
                               const std::vector<std::uint64_t>& ys,
                               std::uint64_t n) {
    std::uint64_t count = 0;
    // recursive enumeration over the t + u slots
    std::vector<std::uint64_t> slot(static_cast<std::size_t>(t + u), 0);
    auto rec = [&](auto&& self, int pos, std::uint64_t remaining) -> void {
        if (pos == t + u) {
            if (remaining == 0) ++count;
            return;
        }
        if (pos < t) {
            for (std::uint64_t x = 1; x <= xcap; ++x) {
                const std::uint64_t p = ipow_u64(x, k);
                if (p > remaining) break;
                self(self, pos + 1, remaining - p);
            }
        } else {
            for (const auto y : ys) {
                const std::uint64_t p = ipow_u64(y, k);
                if (p > remaining) continue;
                self(self, pos + 1, remaining - p);
            }
        }
    };
    rec(rec, 0, n);
    return count;
}

// 2s-th moment of the base's sum: solutions of
// x_1^k + .. + x_s^k = y_1^k + .. + y_s^k, counted by enumerating all
// 2s-tuples outright.
inline std::uint64_t even_moment(const std::vector<std::uint64_t>& base, int k, int s) {
    const int slots = 2 * s;
    std::vector<std::size_t> idx(static_cast<std::size_t>(slots), 0);
    std::uint64_t result = 0;
    for (;;) {
        std::uint64_t left = 0, right = 0;
        for (int i = 0; i < s; ++i) left += ipow_u64(base[idx[static_cast<std::size_t>(i)]], k);
        for (int i = s; i < slots; ++i) right += ipow_u64(base[idx[static_cast<std::size_t>(i)]], k);
        if (left == right) ++result;
        int pos = slots - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == base.size()) {
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
    }
    return result;
}

// Vinogradov system count by full nested enumeration over both tuples.
inline std::uint64_t vinogradov(int s, int k, std::uint64_t X) {
    std::vector<std::uint64_t> xs(static_cast<std::size_t>(s), 1),
        ys(static_cast<std::size_t>(s), 1);
    auto powsums = [&](const std::vector<std::uint64_t>& v) {
        std::vector<std::uint64_t> ps(static_cast<std::size_t>(k), 0);
        for (const auto x : v) {
            std::uint64_t p = 1;
            for (int j = 0; j < k; ++j) {
                p *= x;
                ps[static_cast<std::size_t>(j)] += p;
            }
        }
        return ps;
    };
    auto advance = [&](std::vector<std::uint64_t>& v) {
        int pos = s - 1;
        while (pos >= 0 && v[static_cast<std::size_t>(pos)] == X) {
            v[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) return false;
        ++v[static_cast<std::size_t>(pos)];
        return true;
    };
    std::uint64_t count = 0;
    do {
        const auto px = powsums(xs);
        std::fill(ys.begin(), ys.end(), 1);
        do {
            if (powsums(ys) == px) ++count;
        } while (advance(ys));
    } while (advance(xs));
    return count;
}

// Measure of a union of intervals by endpoint events (independent of the
// library's sweep).
inline double union_measure(std::vector<std::pair<double, double>> intervals) {
    std::vector<std::pair<double, int>> events;
    for (const auto& [lo, hi] : intervals) {
        if (hi <= lo) continue;
        events.emplace_back(lo, +1);
        events.emplace_back(hi, -1);
    }
    std::sort(events.begin(), events.end());
    double measure = 0, open_at = 0;
    int depth = 0;
    for (const auto& [x, d] : events) {
        if (depth == 0 && d > 0) open_at = x;
        depth += d;
        if (depth == 0 && d < 0) measure += x - open_at;
    }
    return measure;
}

} // namespace oracle
