#include "waring/smooth.hpp"

#include "waring/common.hpp"
#include "waring/dickman.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace waring {

namespace {

// B = P^eta in floating point, rounded up one ulp so that boundary primes are
// never excluded through representation error.
double smooth_bound(double P, double eta) {
    return std::nextafter(std::pow(P, eta), std::numeric_limits<double>::infinity());
}

std::string cache_key(std::uint64_t floor_p, double bound) {
    // the bound participates in the key bit-exactly
    char buf[64];
    std::snprintf(buf, sizeof buf, "%llu_%a", static_cast<unsigned long long>(floor_p), bound);
    std::string key(buf);
    for (char& c : key)
        if (c == '.' || c == '+' || c == '-') c = '_';
    return key;
}

} // namespace

bool SmoothSet::contains(std::uint64_t m) const {
    return std::binary_search(members.begin(), members.end(), m);
}

bool is_smooth(std::uint64_t m, double bound) {
    if (m == 0) return false;
    std::uint64_t rest = m;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        if (static_cast<double>(p) > bound) return false;
        while (rest % p == 0) rest /= p;
    }
    // leftover prime factor
    return rest == 1 || static_cast<double>(rest) <= bound;
}

SmoothSet smooth_set(double P, double eta) {
    if (P < 1 || eta <= 0 || eta > 1)
        throw std::invalid_argument("smooth_set: need P >= 1 and 0 < eta <= 1");
    const auto n = static_cast<std::uint64_t>(std::floor(P));
    if (n > budget().max_sieve)
        throw budget_error("smooth_set: sieve length " + std::to_string(n) +
                           " exceeds cap " + std::to_string(budget().max_sieve));

    SmoothSet set;
    set.cap = P;
    set.eta = eta;
    set.bound = smooth_bound(P, eta);

    // gpf[m] ends up holding the greatest prime factor of m (gpf[1] = 1):
    // each prime overwrites its multiples, larger primes last.
    std::vector<std::uint32_t> gpf(n + 1, 1);
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (gpf[p] != 1) continue;  // not prime
        for (std::uint64_t m = p; m <= n; m += p)
            gpf[m] = static_cast<std::uint32_t>(p);
    }
    for (std::uint64_t m = 1; m <= n; ++m)
        if (static_cast<double>(gpf[m]) <= set.bound) set.members.push_back(m);
    return set;
}

DensityReport smooth_density(double P, double eta) {
    const SmoothSet set = smooth_set(P, eta);
    DensityReport rep;
    rep.count = set.size();
    rep.floor_p = static_cast<std::uint64_t>(std::floor(P));
    rep.density = static_cast<double>(rep.count) / static_cast<double>(rep.floor_p);
    rep.dickman = dickman_rho(1.0 / eta);
    rep.rel_gap = std::abs(rep.density - rep.dickman) / rep.dickman;
    return rep;
}

bool load_smooth_cache(const std::string& dir, double P, double eta, SmoothSet& out) {
    const auto n = static_cast<std::uint64_t>(std::floor(P));
    const double bound = smooth_bound(P, eta);
    const auto path = std::filesystem::path(dir) / ("smooth_" + cache_key(n, bound) + ".txt");
    std::ifstream in(path);
    if (!in) return false;

    std::string header;
    if (!std::getline(in, header)) return false;
    std::istringstream hs(header);
    std::string tag;
    std::uint64_t file_n = 0, count = 0;
    std::string file_bound;
    hs >> tag >> file_n >> file_bound >> count;
    if (tag != "#smooth" || file_n != n || file_bound != cache_key(n, bound)) return false;

    out = SmoothSet{};
    out.cap = P;
    out.eta = eta;
    out.bound = bound;
    out.members.reserve(count);
    std::uint64_t m;
    while (in >> m) out.members.push_back(m);
    return out.members.size() == count;
}

void store_smooth_cache(const std::string& dir, const SmoothSet& set) {
    std::filesystem::create_directories(dir);
    const auto n = static_cast<std::uint64_t>(std::floor(set.cap));
    const std::string key = cache_key(n, set.bound);
    const auto path = std::filesystem::path(dir) / ("smooth_" + key + ".txt");
    std::ofstream out(path);
    out << "#smooth " << n << ' ' << key << ' ' << set.members.size() << "\n";
    for (const auto m : set.members) out << m << "\n";
}

SmoothSet smooth_set_cached(const std::string& dir, double P, double eta) {
    if (dir.empty()) return smooth_set(P, eta);
    SmoothSet set;
    if (load_smooth_cache(dir, P, eta, set)) return set;
    set = smooth_set(P, eta);
    store_smooth_cache(dir, set);
    return set;
}

} // namespace waring
