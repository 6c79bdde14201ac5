#include "finagent/core/stats.hpp"

#include <algorithm>
#include <cmath>

#include "finagent/core/errors.hpp"

namespace finagent {

double mean(std::span<const double> xs) {
    if (xs.empty()) throw PreconditionError("mean of empty vector");
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double sample_sd(std::span<const double> xs) {
    if (xs.size() < 2) throw PreconditionError("sample sd needs >= 2 values");
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double percentile_linear(std::vector<double> xs, double p) {
    if (xs.empty()) throw PreconditionError("percentile of empty vector");
    if (p < 0.0) p = 0.0;
    if (p > 100.0) p = 100.0;
    std::sort(xs.begin(), xs.end());
    const double rank = p / 100.0 * static_cast<double>(xs.size() - 1);
    const auto lo = static_cast<size_t>(rank);
    const auto hi = std::min(lo + 1, xs.size() - 1);
    const double frac = rank - static_cast<double>(lo);
    return xs[lo] + frac * (xs[hi] - xs[lo]);
}

} // namespace finagent
