#include "abdg/report.hpp"

#include <cmath>

namespace abdg {

namespace {

template <class Worse>
CheckRecord reduce(std::string name, const std::vector<double>& values, const std::vector<ChartPoint>& points,
                   double tol, bool lower, Worse worse) {
    CheckRecord r;
    r.name = std::move(name);
    r.tolerance = tol;
    r.lower_bound = lower;
    if (values.empty()) {
        r.worst_residual = kNaN;
        r.note = "no points";
        return r;
    }
    std::size_t at = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (std::isnan(values[at])) break;
        if (std::isnan(values[i]) || worse(values[i], values[at])) at = i;
    }
    r.worst_residual = values[at];
    r.witness = points[at];
    r.satisfied = !std::isnan(r.worst_residual) && (lower ? r.worst_residual > tol : r.worst_residual < tol);
    return r;
}

} // namespace

CheckRecord max_record(std::string name, const std::vector<double>& values, const std::vector<ChartPoint>& points,
                       double tol) {
    return reduce(std::move(name), values, points, tol, false, [](double a, double b) { return a > b; });
}

CheckRecord min_record(std::string name, const std::vector<double>& values, const std::vector<ChartPoint>& points,
                       double tol) {
    return reduce(std::move(name), values, points, tol, true, [](double a, double b) { return a < b; });
}

Stats stats_of(const std::vector<double>& values) {
    Stats s;
    double sum = 0.0;
    for (double x : values) {
        if (!std::isfinite(x)) continue;
        if (s.count == 0 || x < s.min) s.min = x;
        if (s.count == 0 || x > s.max) s.max = x;
        sum += x;
        ++s.count;
    }
    if (s.count > 0) s.mean = sum / s.count;
    return s;
}

} // namespace abdg
