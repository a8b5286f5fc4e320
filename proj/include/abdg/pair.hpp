#pragma once

#include <string>

#include "abdg/forms.hpp"

namespace abdg {

// Two immersions on a shared chart with a transversal field for each.
struct SurfacePair {
    std::string label;
    SurfaceMap f;
    SurfaceMap fhat;
    TransversalField xi;
    TransversalField xihat;
    std::string warning;  // set by builders for legal but degenerate configurations

    const Domain& domain() const { return f.domain(); }
};

inline constexpr double kTangencyTol = 1e-8;

// |det(d, f_u, f_v)| / (|d| |f_u x f_v|): zero iff d is tangent to f at p.
double tangency_residual(const Vec3<double>& d, const Vec3<double>& fu, const Vec3<double>& fv);

// Jets of everything the pair frame is built from. f and fhat are expanded
// one order deeper than `order` to get their tangent vectors.
struct PairJets {
    JetVec3 f, fhat, fu, fv, fhu, fhv, d, xi, xihat;
    MultiJet A, Ahat, W;
};
PairJets pair_jets(const SurfacePair& pair, ChartPoint p, int order);

// X1, X2 (and hatted) in chart components, with the ambient vectors
// v2 = f_* X2 = (A xi - xihat) / W and v2hat = fhat_* X2hat = (xi - Ahat xihat) / W.
struct PairFrame {
    Vec2<double> X1{}, X2{}, X1hat{}, X2hat{};
    double A = 0.0, Ahat = 0.0, W = 0.0;
    Vec3<double> d{}, v2{}, v2hat{}, xi{}, xihat{};
};

// Throws CoincidentPoints, NotTangent (either surface) or ZeroW.
PairFrame solve_pair_frame(const SurfacePair& pair, ChartPoint p, double tangency_tol = kTangencyTol);

enum class PairSide { F, Fhat };

// Moving frame (f; D, v2, xi) or (fhat; D, v2hat, xihat). Where W vanishes
// (relative to |D||xi||xihat|) the middle column falls back to xi x D, which
// keeps D as first column so the rank lemma still applies.
FrameBuilder pair_frame_builder(const SurfacePair& pair, PairSide side);

// ((1 - A Ahat) / W)^4 / (H Hhat). Throws ZeroW, DegenerateSurface.
double psi(const SurfacePair& pair, ChartPoint p);

struct SphericalRank {
    int rank = 0;               // from omega^2_1 ^ omega^3_1
    double wedge = 0.0;         // (omega^2_1 ^ omega^3_1)(d_u, d_v)
    double margin = 0.0;        // |wedge| / |[omega^2_1; omega^3_1]|_F^2, scale free
    int jacobian_rank = 0;      // of p -> D/|D|
    double jacobian_det = 0.0;  // det(n, n_u, n_v), n = D/|D|
    double frame_det = 0.0;     // det(D, v2, v3)
    bool agree = false;         // same rank and sign(jacobian_det) = sign(frame_det * wedge)
    double lemma_residual = 0.0;
};

inline constexpr double kRankTol = 1e-7;
SphericalRank spherical_rank(const SurfacePair& pair, ChartPoint p, double tol = kRankTol);

struct Conformality {
    double defect = 0.0;  // min_l |hhat - l h|_F / |hhat|_F, chart basis
    double psi_minus_1 = 0.0;  // NaN where W = 0
};
Conformality conformality_defect(const SurfacePair& pair, ChartPoint p);

struct ParallelCriterion {
    double lambda = 0.0;
    double beta = 0.0;
    double defect = 0.0;  // H Hhat - beta^4
    Vec2<double> X2{}, X2hat{};
    double decomposition_residual = 0.0;
    bool beta_vanishes = false;
};

// xi and xihat must be parallel (NotParallel otherwise). X2 is the
// unimodular completion of X1 picked from the chart basis, shifted by
// x2_shift * X1.
ParallelCriterion parallel_transversal_criterion(const SurfacePair& pair, ChartPoint p, double x2_shift = 0.0);

// theta^1 = s w21 + t w31, omega^3_2 = u w21 + v w31, omega^1_2 = alpha w21,
// omega^1_3 = beta w31, omegahat^3_2 = x w21 + y w31.
struct FrameCoefficients {
    double s = 0, t = 0, u = 0, v = 0, alpha = 0, beta = 0, x = 0, y = 0;
    Vec2<double> dalpha{};
    double alpha_residual = 0.0;  // |omega^1_2 ^ omega^2_1| / (|omega^1_2||omega^2_1|)
    double beta_residual = 0.0;   // same for omega^1_3 against omega^3_1
    double s_residual = 0.0;      // s - (Ahat W u / (1 - A Ahat) + v)
    double x_residual = 0.0;      // x + (1 - A Ahat)^2 u / (W^2 H)
    double beta_relation = 0.0;   // beta - Ahat W^2 alpha / (A (1 - A Ahat)), 0 when A = 0
    double omega11 = 0.0;         // max |omega^1_1| component, zero under condition 6
    double A = 0, Ahat = 0, W = 0, H = 0;
};
FrameCoefficients frame_coefficients(const SurfacePair& pair, ChartPoint p);

// alpha of omega^1_2 = alpha omega^2_1 as a jet of `order`.
MultiJet alpha_jet(const SurfacePair& pair, ChartPoint p, int order);

} // namespace abdg
