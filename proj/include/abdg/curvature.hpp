#pragma once

#include "abdg/forms.hpp"
#include "abdg/pair.hpp"

namespace abdg {

// R[l][k][i][j] is the d_l component of R(d_i, d_j) d_k for the induced
// connection of (f, xi), in the chart basis.
using CurvatureTensor = std::array<std::array<Mat2<double>, 2>, 2>;

struct Curvature {
    CurvatureTensor R{};
    Mat2<double> ric{};  // ric[j][k] = sum_i R[i][k][i][j]
    double theta12 = 0.0;
};

// R from Christoffel jets: d_i G^l_jk - d_j G^l_ik + G^l_im G^m_jk - G^l_jm G^m_ik.
Curvature connection_curvature(const SurfaceMap& f, const TransversalField& xi, ChartPoint p);

// Value of R(X, Y) Z for chart vectors.
Vec2<double> apply(const CurvatureTensor& R, const Vec2<double>& X, const Vec2<double>& Y, const Vec2<double>& Z);

struct CovariantDerivativeR {
    std::array<CurvatureTensor, 2> nabla{};  // nabla[m] = nabla_{d_m} R
    double norm = 0.0;                       // max component in the frame (d_u, d_v / theta12)
    int dim_im = 0;
    double sv_ratio = 0.0;                   // smallest / largest singular value of the image of R
};

// Singular values of the stacked vectors R(d_u, d_v) d_k; a singular value
// counts as zero below rel times the largest, or when the largest is below
// 1e-10 times `scale`.
int image_dimension(const CurvatureTensor& R, double scale, double rel = 1e-7, double* ratio = nullptr);

// Jet route differentiates Christoffel jets; Central and Richardson difference
// R over a stencil of half-width `step`, which must stay inside `domain`.
CovariantDerivativeR covariant_derivative_R(const SurfaceMap& f, const TransversalField& xi, ChartPoint p,
                                            DerivativeMode mode = DerivativeMode::Jet, double step = 0.0,
                                            const Domain* domain = nullptr);

// Residuals of the pair-frame curvature values against the Christoffel R:
// R(X1,X2)X1 = (1 - A Ahat) X2, R(X1,X2)X2 = -alpha Ahat W^2 H / (A (1 - A Ahat)) X1,
// Rhat(X1hat,X2hat)X1hat = (1 - A Ahat) X2hat and
// Rhat(X1hat,X2hat)X2hat = -alpha (1 - A Ahat)^3 / (W^2 H) X1hat,
// each relative to the size of the predicted vector.
struct FrameCurvatureCheck {
    double r121 = 0.0, r122 = 0.0, r121hat = 0.0, r122hat = 0.0;
    double ric = 0.0;  // Ric(X1,X1) = -(1 - A Ahat), Ric(X1,X2) = 0
};
FrameCurvatureCheck frame_curvature_check(const SurfacePair& pair, ChartPoint p);

// tr S of the Blaschke structure and the 2-form proxy
// (-theta^2 ^ omega^1_3 + theta^1 ^ omega^2_3) / (theta^1 ^ theta^2) = -tr S
// from the Maurer-Cartan forms of (f; f_u, f_v, xi_B).
struct Minimality {
    double trace = 0.0;
    double proxy = 0.0;
};
Minimality affine_minimality(const SurfaceMap& f, ChartPoint p, int orientation = 1);

} // namespace abdg
