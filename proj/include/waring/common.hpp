#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace waring {

// Thrown when a computation would exceed one of the configured resource caps.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a numeric tolerance is breached (signals an arithmetic defect,
// e.g. a DFT grid that is too small or an imaginary residual that is too large).
class tolerance_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Resource caps shared by all modules.  CLI flags override the defaults.
struct Budget {
    std::size_t max_cells   = std::size_t(1) << 24; // coefficient-series cells
    std::size_t max_tuples  = 100'000'000;          // Vinogradov enumeration
    std::size_t max_panels  = 4'000'000;            // oscillatory quadrature panels
    std::size_t max_arcs    = 10'000'000;           // arc labels per dissection
    std::size_t max_sieve   = 200'000'000;          // sieve length
};

Budget& budget();

int  thread_count();
void set_thread_count(int n);

// Runs fn(lo, hi) over [0, n) split into blocks of fixed size `block`.
// Block boundaries depend only on n and block, never on the thread count,
// and every block is processed exactly once, so any scheme whose writes are
// disjoint per block produces identical results at any thread count.
void parallel_blocks(std::size_t n, std::size_t block,
                     const std::function<void(std::size_t, std::size_t)>& fn);

// Convenience: evaluates fn(i) for i in [0, n) into a caller-visible slot per
// index (fn writes results itself); just a thin wrapper over parallel_blocks.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t)>& fn);

// Floor of the integer k-th root of n (largest x with x^k <= n).
std::uint64_t ikroot(std::uint64_t n, int k);

// Greatest common divisor on unsigned 64-bit values.
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// (base^exp) mod m with 64-bit operands, exact.
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

} // namespace waring
