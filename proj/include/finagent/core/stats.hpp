#pragma once

#include <span>
#include <vector>

namespace finagent {

double mean(std::span<const double> xs);

// Sample standard deviation (n-1 denominator). Requires xs.size() >= 2.
double sample_sd(std::span<const double> xs);

// Linear-interpolation percentile, p in [0,100]. Requires non-empty input.
// Matches the usual rank = p/100 * (n-1) convention.
double percentile_linear(std::vector<double> xs, double p);

} // namespace finagent
