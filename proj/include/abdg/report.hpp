#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "abdg/geometry.hpp"

namespace abdg {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// One pass/fail line of a report. Upper-bound records pass when
// worst_residual < tolerance; margin records (lower_bound) pass when
// worst_residual > tolerance. NaN marks a point where the quantity could not
// be evaluated; such a point is always the worst.
struct CheckRecord {
    std::string name;
    bool satisfied = false;
    double worst_residual = 0.0;
    std::optional<ChartPoint> witness;
    double tolerance = 0.0;
    bool lower_bound = false;
    std::string note;
};

// Sequential reductions in grid order. Ties keep the earlier point, which
// is the lexicographically smallest grid index.
CheckRecord max_record(std::string name, const std::vector<double>& values, const std::vector<ChartPoint>& points,
                       double tol);
CheckRecord min_record(std::string name, const std::vector<double>& values, const std::vector<ChartPoint>& points,
                       double tol);

struct Stats {
    double min = kNaN, max = kNaN, mean = kNaN;
    int count = 0;  // finite values seen
};
Stats stats_of(const std::vector<double>& values);

} // namespace abdg
