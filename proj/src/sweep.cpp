#include "abdg/sweep.hpp"

#include <omp.h>

#include <cstdlib>
#include <exception>
#include <string>

#include "abdg/error.hpp"

namespace abdg {

ChartPoint cell_centre(const Domain& d, const Grid& g, int index) {
    const int i = index / g.nv, j = index % g.nv;
    return {d.u0 + (i + 0.5) * d.width() / g.nu, d.v0 + (j + 0.5) * d.height() / g.nv};
}

std::vector<ChartPoint> cell_centres(const Domain& d, const Grid& g) {
    if (g.nu <= 0 || g.nv <= 0) fail(ErrorKind::DomainError, "grid dimensions must be positive");
    std::vector<ChartPoint> pts(g.size());
    for (int k = 0; k < g.size(); ++k) pts[k] = cell_centre(d, g, k);
    return pts;
}

int sweep_threads() {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("ABDG_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0 && cap < n) n = static_cast<int>(cap);
    }
    return n;
}

void for_each_index(int n, const std::function<void(int)>& body, Execution exec) {
    std::vector<std::exception_ptr> errors(n);
    if (exec == Execution::Serial) {
        for (int i = 0; i < n; ++i) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    } else {
#pragma omp parallel for schedule(dynamic, 4) num_threads(sweep_threads())
        for (int i = 0; i < n; ++i) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace abdg
