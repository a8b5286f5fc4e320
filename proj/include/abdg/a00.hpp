#pragma once

#include "abdg/geometry.hpp"

namespace abdg {

// Normal form of a pair with A = Ahat = 0 in coordinates (x, y) = (u, v):
//   alpha = W^2 H_y e^{-2g} g_y + W^2 H (e^{-2g} g_y)_y + (e^{2g} g_x)_x
//   beta  = -W^2 (e^{-2g} g_y)_y - (e^{2g} g_x)_x / H + H_x e^{2g} g_x / H^2
//   alpha_y = (alpha + beta H) g_y,   beta_x = -(alpha + beta H) g_x / H
// with g = gamma and W a nonzero constant.
struct A00State {
    ScalarField gamma, H, alpha, beta;
    double W = 1.0;
    Domain domain{-1.0, 1.0, -1.0, 1.0};
};

struct A00Residuals {
    double alpha_eq = 0.0, beta_eq = 0.0, alpha_y_eq = 0.0, beta_x_eq = 0.0;
    // alpha + beta H = W^2 H_y e^{-2g} g_y + (H_x / H) e^{2g} g_x
    double identity = 0.0;
    double max_dalpha = 0.0, max_dbeta = 0.0;
    double max_sum = 0.0;          // |alpha + beta H|
    double max_d_betaH = 0.0;      // |d(beta H)|
    double max_d_alpha_W2H = 0.0;  // |d(alpha / (W^2 H))|
    // Verdicts: constancy of alpha (resp. beta) and, independently, the
    // curvature characterization nabla R = 0 <=> alpha + beta H = 0 and beta H
    // constant (resp. alpha / (W^2 H) constant for nablahat Rhat).
    bool alpha_constant = false, beta_constant = false;
    bool nabla_symmetric = false, nablahat_symmetric = false;
};

// Residuals are |lhs - rhs| / (1 + |lhs| + |rhs|), maximised over the
// cell centres of an nx x ny grid. Throws GammaCritical where g_x or g_y
// vanishes (below 1e-10), DegenerateSurface where H does.
A00Residuals a00_residuals(const A00State& state, int nx, int ny, double tol = 1e-8);

// alpha and beta defined by the first two equations from gamma and H.
A00State a00_manufactured(ScalarField gamma, ScalarField H, double W, Domain domain);

// H = 1, W = 1, constant alpha = a, beta = -a, gamma a function of
// s = x + y/2 solving the system exactly.
A00State a00_symmetric_instance(double a = 0.3, Domain domain = {-1.0, 1.0, -1.0, 1.0});

} // namespace abdg
