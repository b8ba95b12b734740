#include "waring/dickman.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace waring {

namespace {

constexpr double kDefaultStep = 1e-4;
constexpr double kMaxArg = 128.0;  // rho underflows double range long before this

struct RhoTable {
    double step = 0;
    std::vector<double> values;  // values[j] = rho(j*step)

    double xmax() const { return step * static_cast<double>(values.size() - 1); }

    double eval(double x) const {
        if (x <= 1.0) return 1.0;
        if (x >= xmax()) return values.back();
        const double pos = x / step;
        const auto j = static_cast<std::size_t>(pos);
        const double frac = pos - static_cast<double>(j);
        return values[j] * (1.0 - frac) + values[j + 1] * frac;
    }
};

// Integrates rho(x) = rho(x_j) - h * rho(m-1)/m at panel midpoints m.  The
// grid step divides 1 exactly, so m-1 sits halfway between two earlier grid
// nodes and the midpoint value is their average; the scheme is second order.
RhoTable build_table(double xmax, double step) {
    RhoTable t;
    const auto per_unit = static_cast<std::size_t>(std::llround(1.0 / step));
    if (per_unit < 2) throw std::invalid_argument("dickman_rho: step too large");
    t.step = 1.0 / static_cast<double>(per_unit);

    const auto units = static_cast<std::size_t>(std::ceil(xmax));
    const std::size_t n = per_unit * (units < 2 ? 2 : units);
    t.values.assign(n + 1, 1.0);

    for (std::size_t j = per_unit; j < n; ++j) {
        const double m = (static_cast<double>(j) + 0.5) * t.step;
        double rho_delayed;  // rho(m - 1)
        if (m - 1.0 <= 0.0) {
            rho_delayed = 1.0;
        } else {
            const std::size_t dj = j - per_unit;
            rho_delayed = 0.5 * (t.values[dj] + t.values[dj + 1]);
        }
        t.values[j + 1] = t.values[j] - t.step * rho_delayed / m;
        if (t.values[j + 1] < 0.0) t.values[j + 1] = 0.0;
    }
    return t;
}

} // namespace

double dickman_rho(double x, double step) {
    if (x < 0) throw std::invalid_argument("dickman_rho: negative argument");
    if (x <= 1.0) return 1.0;
    const double cap = std::min(x + 1.0, kMaxArg);
    const RhoTable t = build_table(cap, step);
    return t.eval(std::min(x, kMaxArg));
}

double dickman_rho(double x) {
    if (x < 0) throw std::invalid_argument("dickman_rho: negative argument");
    if (x <= 1.0) return 1.0;

    static std::mutex mu;
    static RhoTable cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.values.empty() || cache.xmax() < std::min(x, kMaxArg))
        cache = build_table(std::max(10.0, std::min(x + 1.0, kMaxArg)), kDefaultStep);
    return cache.eval(std::min(x, kMaxArg));
}

} // namespace waring
