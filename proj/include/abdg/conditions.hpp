#pragma once

#include <string>
#include <vector>

#include "abdg/pair.hpp"
#include "abdg/report.hpp"
#include "abdg/sweep.hpp"

namespace abdg {

struct Tolerances {
    double alg = 1e-6;   // algebraic identities
    double diff = 1e-5;  // quantities involving a derivative
    double tangency = kTangencyTol;
};

struct SweepOptions {
    Grid grid;
    Tolerances tol;
    Execution exec = Execution::Parallel;
    bool curvature = true;  // nabla R at every point (the expensive part)
};

// Everything the condition report needs at one point. NaN (or -1 for the
// dimensions) where the quantity could not be evaluated; `error` holds the
// first failure.
struct PointSample {
    double tangency = kNaN;     // max tangency residual of fhat - f, both surfaces
    double distance = kNaN;     // |fhat - f|
    double rank_margin = kNaN;  // |omega^2_1 ^ omega^3_1| / |[omega^2_1; omega^3_1]|_F^2
    double rank_wedge = kNaN;   // signed omega^2_1 ^ omega^3_1
    double w_margin = kNaN;     // |W| / (|fhat - f| |xi| |xihat|)
    double A = kNaN, Ahat = kNaN, W = kNaN;
    double dA = kNaN, dAhat = kNaN, dW = kNaN;  // max |partial|
    double H = kNaN, Hhat = kNaN;
    double r5 = kNaN;  // |W^4 H Hhat - (1 - A Ahat)^4|
    double r6 = kNaN;  // max over d_u, d_v of |det(f_* Y, xi, xihat) - det(fhat_* Y, xi, xihat)|, normalized
    double r7 = kNaN;  // |dW ^ dH|
    double psi = kNaN, defect = kNaN;
    double nabla = kNaN, nablahat = kNaN;
    int dim = -1, dimhat = -1;
    std::string error;
};

// `step` > 0 enables the finite-difference fallback for nabla R when the
// jets of a map run out of order budget.
PointSample sample_pair_point(const SurfacePair& pair, ChartPoint p, bool curvature, double step = 0.0);

struct ConditionReport {
    std::vector<CheckRecord> conditions;  // 1 to 7, or (i) to (vii)
    CheckRecord conformal;                // conclusion: conformality defect
    std::vector<CheckRecord> curvature;   // nabla R, nablahat Rhat, equal image dimensions
    Stats psi, H, Hhat;
    int dim_R = -1, dim_Rhat = -1;        // common value over the grid, -1 if it varies
    std::vector<ChartPoint> points;
    std::vector<PointSample> samples;
    std::vector<std::string> diagnostics;

    bool conditions_hold() const;
};

// Conditions 1 to 7 of the Backlund theorem over the cell centres of the
// grid, and its conclusions. Per-point evaluation failures become failures
// of the affected conditions at that point.
ConditionReport backlund_condition_report(const SurfacePair& pair, const SweepOptions& opts = {});

struct BlaschkePairReport : ConditionReport {
    int xi_sign = 1, xihat_sign = 1;
    double normalization_gap = kNaN;  // |W - (1 - A Ahat)| at the centre for the chosen signs
    SurfacePair pair;                 // f, fhat with the chosen Blaschke normals
};

// Equips f and fhat with Blaschke normals, picks the signs minimizing
// |W - (1 - A Ahat)| at the domain centre over the four assignments, and
// evaluates conditions (i)-(vii). With require_normalization a gap above
// tol.alg throws SignChoiceFailed; otherwise it is reported.
BlaschkePairReport blaschke_pair_check(const SurfaceMap& f, const SurfaceMap& fhat, const SweepOptions& opts = {},
                                       bool require_normalization = false);

} // namespace abdg
