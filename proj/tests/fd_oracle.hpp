#pragma once

// Finite-difference oracle for mixed partial derivatives, independent of the
// jet engine: tensor-product central stencils with two Richardson levels.

#include <array>
#include <cmath>
#include <functional>

namespace oracle {

using Fn2 = std::function<double(double, double)>;

// Central stencil weights for d^n/dx^n, n <= 3, on offsets -2..2 (in units of h).
inline std::array<double, 5> stencil(int n) {
    switch (n) {
    case 0: return {0, 0, 1, 0, 0};
    case 1: return {0, -0.5, 0, 0.5, 0};
    case 2: return {0, 1, -2, 1, 0};
    default: return {-0.5, 1, 0, -1, 0.5};
    }
}

inline double central_partial(const Fn2& g, double u, double v, int i, int j, double h) {
    const auto su = stencil(i), sv = stencil(j);
    double s = 0.0;
    for (int a = 0; a < 5; ++a) {
        if (su[a] == 0.0) continue;
        for (int b = 0; b < 5; ++b) {
            if (sv[b] == 0.0) continue;
            s += su[a] * sv[b] * g(u + (a - 2) * h, v + (b - 2) * h);
        }
    }
    return s / (std::pow(h, i) * std::pow(h, j));
}

// Error expansion of the central stencils is even in h, so two Richardson
// steps remove the h^2 and h^4 terms.
inline double richardson_partial(const Fn2& g, double u, double v, int i, int j, double h = 0.02) {
    const double d1 = central_partial(g, u, v, i, j, h);
    const double d2 = central_partial(g, u, v, i, j, h / 2);
    const double d4 = central_partial(g, u, v, i, j, h / 4);
    const double r1 = (4 * d2 - d1) / 3;
    const double r2 = (4 * d4 - d2) / 3;
    return (16 * r2 - r1) / 15;
}

} // namespace oracle
