#include "abdg/metric.hpp"

#include <algorithm>
#include <cmath>

#include "abdg/curvature.hpp"

namespace abdg {

namespace {

using JetMat3 = std::array<std::array<MultiJet, 3>, 3>;

double bilinear(const Mat3<double>& G, const Vec3<double>& x, const Vec3<double>& y) {
    double s = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) s += G[a][b] * x[a] * y[b];
    return s;
}

int expected_negatives(MetricCase c) { return c == MetricCase::Euclidean ? 0 : 1; }

// Sectional curvature of g_ij = G(f_i, f_j) for the connection with curvature R.
double sectional(const Mat3<double>& G, const Vec3<double>& fu, const Vec3<double>& fv, const CurvatureTensor& R) {
    const Vec3<double> t[2] = {fu, fv};
    double g[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g[i][j] = bilinear(G, t[i], t[j]);
    const double num = R[0][1][0][1] * g[0][0] + R[1][1][0][1] * g[1][0];
    return num / (g[0][0] * g[1][1] - g[0][1] * g[1][0]);
}

} // namespace

std::string_view to_string(MetricCase c) {
    switch (c) {
    case MetricCase::Euclidean: return "euclidean";
    case MetricCase::LorentzTimelike: return "lorentz-timelike-congruence";
    case MetricCase::LorentzSpacelikeTimelike: return "lorentz-spacelike-timelike";
    case MetricCase::LorentzSpacelikeSpacelike: return "lorentz-spacelike-spacelike";
    case MetricCase::LorentzMixed: return "lorentz-mixed";
    }
    return "?";
}

CaseLabel classify_case(double A, double Ahat, double alpha, double tol) {
    if (std::abs(alpha) <= tol) fail(ErrorKind::AlphaZero, "alpha = 0: dim Im R = 1 branch, no metric exists");
    const double p = A * Ahat;
    if (std::abs(p) <= tol || std::abs(p - 1.0) <= tol)
        fail(ErrorKind::Unclassifiable, "A Ahat = " + std::to_string(p) + " lies on a case boundary");
    if (p < 0) return {MetricCase::LorentzMixed, -1};
    if (p < 1) return alpha < 0 ? CaseLabel{MetricCase::Euclidean, -1} : CaseLabel{MetricCase::LorentzTimelike, 1};
    return alpha > 0 ? CaseLabel{MetricCase::LorentzSpacelikeTimelike, 1}
                     : CaseLabel{MetricCase::LorentzSpacelikeSpacelike, 1};
}

int negative_eigenvalues(const Mat3<double>& G) {
    // det(x I - G) = x^3 - c1 x^2 + c2 x - c3; negative roots are the sign
    // changes of the coefficients of p(-x) = -(x^3 + c1 x^2 + c2 x + c3).
    const double c1 = G[0][0] + G[1][1] + G[2][2];
    const double c2 = G[0][0] * G[1][1] - G[0][1] * G[1][0] + G[0][0] * G[2][2] - G[0][2] * G[2][0] +
                      G[1][1] * G[2][2] - G[1][2] * G[2][1];
    const double c3 = det3(Vec3<double>{G[0][0], G[1][0], G[2][0]}, Vec3<double>{G[0][1], G[1][1], G[2][1]},
                           Vec3<double>{G[0][2], G[1][2], G[2][2]});
    const double scale = std::max({std::abs(c1), std::cbrt(std::abs(c3)), std::sqrt(std::abs(c2)), 1e-300});
    // Coefficients of x^3 + c1 x^2 + c2 x + c3 with scale-relative zero handling.
    const double coef[4] = {1.0, c1 / scale, c2 / (scale * scale), c3 / (scale * scale * scale)};
    int changes = 0;
    double last = coef[0];
    for (int i = 1; i < 4; ++i) {
        if (std::abs(coef[i]) < 1e-14) continue;
        if ((coef[i] > 0) != (last > 0)) ++changes;
        last = coef[i];
    }
    return changes;
}

MetricReconstruction metric_reconstruction(const SurfacePair& pair, ChartPoint p) {
    const PairJets j = pair_jets(pair, p, 1);
    const double A = j.A.value(), Ah = j.Ahat.value();
    const MultiJet alpha = alpha_jet(pair, p, 1);
    if (A == 0.0) fail(ErrorKind::Unclassifiable, "A = 0: G(xi, xi) needs Ahat / A");
    const CaseLabel label = classify_case(A, Ah, alpha.value());
    const double delta = label.delta;

    // G = sum_a Gb_a r_a r_a^T with r_a the dual rows of (D, v2, xi).
    const JetVec3 v2 = (j.A * j.xi - j.xihat) / j.W;
    const Mat3<MultiJet> rows = dual_rows(j.d, v2, j.xi, det3(j.d, v2, j.xi));
    const MultiJet k = 1.0 - j.A * j.Ahat;
    const MultiJet gb[3] = {-delta * k, delta * alpha * k, delta * alpha * (j.Ahat / j.A) * j.W * j.W};
    JetMat3 G;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            MultiJet s = MultiJet::constant(0.0, 1);
            for (int c = 0; c < 3; ++c) s = s + gb[c] * rows[c][a] * rows[c][b];
            G[a][b] = s;
        }

    MetricReconstruction r;
    r.delta = label.delta;
    r.kind = label.kind;
    r.alpha = alpha.value();
    double gmax = 0.0, dmax = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            r.G[a][b] = G[a][b].value();
            gmax = std::max(gmax, std::abs(r.G[a][b]));
            dmax = std::max({dmax, std::abs(G[a][b].partial(1, 0)), std::abs(G[a][b].partial(0, 1))});
        }
    r.dg_residual = dmax / gmax;
    r.negative_eigenvalues = negative_eigenvalues(r.G);
    if (r.negative_eigenvalues != expected_negatives(r.kind))
        fail(ErrorKind::InconsistentSignature, "G has " + std::to_string(r.negative_eigenvalues) +
                                                   " negative eigenvalues, case " + std::string(to_string(r.kind)) +
                                                   " needs " + std::to_string(expected_negatives(r.kind)));

    r.kappa = sectional(r.G, values(j.fu), values(j.fv), connection_curvature(pair.f, pair.xi, p).R);
    r.kappahat = sectional(r.G, values(j.fhu), values(j.fhv), connection_curvature(pair.fhat, pair.xihat, p).R);

    const Vec3<double> d = values(j.d), xi = values(j.xi), xih = values(j.xihat);
    r.L2 = bilinear(r.G, d, d);
    const double gxx = bilinear(r.G, xi, xi), gxh = bilinear(r.G, xi, xih), ghh = bilinear(r.G, xih, xih);
    if (r.kind == MetricCase::LorentzMixed) {
        r.angle_invariant = gxh * gxh / (-gxx * ghh);
        r.angle_expected = -A * Ah;
    } else {
        r.angle_invariant = gxh * gxh / (gxx * ghh);
        r.angle_expected = A * Ah;
    }
    if (r.kind == MetricCase::Euclidean || r.kind == MetricCase::LorentzTimelike) {
        r.cos_angle = gxh / std::sqrt(gxx * ghh);
        r.cos_expected = (Ah > 0 ? 1.0 : -1.0) * std::sqrt(A * Ah);
    }
    return r;
}

} // namespace abdg
