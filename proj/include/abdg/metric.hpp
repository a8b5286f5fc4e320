#pragma once

#include <string_view>

#include "abdg/pair.hpp"

namespace abdg {

enum class MetricCase {
    Euclidean,                  // 0 < A Ahat < 1, alpha < 0
    LorentzTimelike,            // 0 < A Ahat < 1, alpha > 0
    LorentzSpacelikeTimelike,   // A Ahat > 1, alpha > 0
    LorentzSpacelikeSpacelike,  // A Ahat > 1, alpha < 0
    LorentzMixed,               // A Ahat < 0
};

std::string_view to_string(MetricCase c);

struct CaseLabel {
    MetricCase kind;
    int delta;
};

// Throws AlphaZero for alpha = 0 and Unclassifiable for A Ahat in {0, 1}
// (within `tol`).
CaseLabel classify_case(double A, double Ahat, double alpha, double tol = 1e-12);

// Number of negative eigenvalues of a symmetric 3x3 matrix, by sign changes
// of the characteristic polynomial (all roots are real).
int negative_eigenvalues(const Mat3<double>& G);

struct MetricReconstruction {
    Mat3<double> G{};          // ambient bilinear form in the standard basis
    int delta = 0;
    MetricCase kind = MetricCase::Euclidean;
    int negative_eigenvalues = 0;
    double dg_residual = 0.0;  // max |d_m G_ab| / max |G_ab|
    double kappa = 0.0;        // sectional curvature of g = G(f_*, f_*) from the Christoffel R
    double kappahat = 0.0;
    double L2 = 0.0;           // G(fhat - f, fhat - f)
    double angle_invariant = 0.0;  // cos^2, cosh^2 or sinh^2 of the angle between xi and xihat
    double angle_expected = 0.0;   // A Ahat, A Ahat or -A Ahat
    double cos_angle = 0.0;        // signed cosine, cases with a spacelike xi-plane
    double cos_expected = 0.0;     // sign(Ahat) sqrt(A Ahat)
    double alpha = 0.0;
};

// G is defined on the basis (fhat - f, f_* X2, xi) by
// diag(-delta (1 - A Ahat), delta alpha (1 - A Ahat), delta alpha (Ahat/A) W^2).
// Throws AlphaZero, Unclassifiable (also for A = 0), InconsistentSignature.
MetricReconstruction metric_reconstruction(const SurfacePair& pair, ChartPoint p);

} // namespace abdg
