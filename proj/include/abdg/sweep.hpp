#pragma once

#include <functional>
#include <vector>

#include "abdg/geometry.hpp"

namespace abdg {

struct Grid {
    int nu = 64;
    int nv = 64;
    int size() const { return nu * nv; }
};

// Cell centres in grid-index order: index = i * nv + j, i along u.
ChartPoint cell_centre(const Domain& d, const Grid& g, int index);
std::vector<ChartPoint> cell_centres(const Domain& d, const Grid& g);

enum class Execution { Serial, Parallel };

// Thread count for parallel sweeps: the OpenMP default, capped by ABDG_THREADS
// when that is a positive integer.
int sweep_threads();

// Calls body(i) for i in [0, n). The parallel path hands out indices
// dynamically; results must go to per-index slots. If bodies throw, the
// exception of the lowest index is rethrown after the loop.
void for_each_index(int n, const std::function<void(int)>& body, Execution exec);

template <class T, class F> std::vector<T> sweep(const std::vector<ChartPoint>& points, F fn, Execution exec) {
    std::vector<T> out(points.size());
    for_each_index(static_cast<int>(points.size()), [&](int i) { out[i] = fn(points[i]); }, exec);
    return out;
}

} // namespace abdg
