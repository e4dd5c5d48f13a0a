#pragma once

#include <span>

namespace koiter {

/// \brief Least-squares slope of log(y) against log(x); throws InvalidArgument on fewer than 2 or nonpositive points.
double loglog_slope(std::span<const double> x, std::span<const double> y);

/// \brief True if every element is strictly smaller than its predecessor.
bool strictly_decreasing(std::span<const double> values);

}  // namespace koiter
