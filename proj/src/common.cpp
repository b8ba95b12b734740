#include "waring/common.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace waring {

Budget& budget() {
    static Budget b;
    return b;
}

namespace {
int g_threads = 1;
}

int thread_count() { return g_threads; }

void set_thread_count(int n) {
    if (n < 1) n = 1;
    g_threads = n;
}

void parallel_blocks(std::size_t n, std::size_t block,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    if (block == 0) block = 1;
    const std::size_t nblocks = (n + block - 1) / block;
    const int workers = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(g_threads), nblocks));

    if (workers <= 1) {
        for (std::size_t b = 0; b < nblocks; ++b)
            fn(b * block, std::min(n, (b + 1) * block));
        return;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t b = next.fetch_add(1);
                if (b >= nblocks) return;
                fn(b * block, std::min(n, (b + 1) * block));
            }
        });
    }
    for (auto& th : pool) th.join();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    parallel_blocks(n, 64, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
}

std::uint64_t ikroot(std::uint64_t n, int k) {
    if (k <= 1 || n < 2) return n;
    // float estimate, then fix up; exact for all u64 inputs
    std::uint64_t r = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
    auto pow_leq = [&](std::uint64_t x) -> bool { // x^k <= n without overflow
        unsigned __int128 p = 1;
        for (int i = 0; i < k; ++i) {
            p *= x;
            if (p > n) return false;
        }
        return true;
    };
    while (r > 0 && !pow_leq(r)) --r;
    while (pow_leq(r + 1)) ++r;
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    unsigned __int128 acc = 1;
    unsigned __int128 b = base % m;
    while (exp > 0) {
        if (exp & 1) acc = acc * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace waring
