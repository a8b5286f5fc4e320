#include "abdg/curvature.hpp"

#include <algorithm>
#include <cmath>

namespace abdg {

namespace {

using JetTensor = std::array<std::array<std::array<std::array<MultiJet, 2>, 2>, 2>, 2>;

MultiJet partial(const MultiJet& a, int axis) { return axis == 0 ? a.du() : a.dv(); }

// Curvature jets one order below the Christoffel jets.
JetTensor curvature_jets(const GaussWeingartenJets& g) {
    const auto& G = g.gamma;
    JetTensor R;
    for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    MultiJet r = partial(G[l][j][k], i) - partial(G[l][i][k], j);
                    for (int m = 0; m < 2; ++m) r = r + G[l][i][m] * G[m][j][k] - G[l][j][m] * G[m][i][k];
                    R[l][k][i][j] = r;
                }
    return R;
}

CurvatureTensor values_of(const JetTensor& R) {
    CurvatureTensor r{};
    for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) r[l][k][i][j] = R[l][k][i][j].value();
    return r;
}

Mat2<double> ricci(const CurvatureTensor& R) {
    Mat2<double> ric{};
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) ric[j][k] = R[0][k][0][j] + R[1][k][1][j];
    return ric;
}

// Size of curvature-like terms: max of |d Gamma| and |Gamma|^2.
double curvature_scale(const GaussWeingartenJets& g) {
    double s = 0.0;
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const MultiJet& c = g.gamma[l][i][j];
                s = std::max({s, c.value() * c.value(), std::abs(c.partial(1, 0)), std::abs(c.partial(0, 1))});
            }
    return s;
}

// nabla_m R from the value of R, its chart derivatives dR[m] and Gamma.
std::array<CurvatureTensor, 2> covariant(const CurvatureTensor& R, const std::array<CurvatureTensor, 2>& dR,
                                         const std::array<Mat2<double>, 2>& G) {
    std::array<CurvatureTensor, 2> out{};
    for (int m = 0; m < 2; ++m)
        for (int l = 0; l < 2; ++l)
            for (int k = 0; k < 2; ++k)
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        double v = dR[m][l][k][i][j];
                        for (int n = 0; n < 2; ++n) {
                            v += G[l][m][n] * R[n][k][i][j];
                            v -= G[n][m][i] * R[l][k][n][j];
                            v -= G[n][m][j] * R[l][k][i][n];
                            v -= G[n][m][k] * R[l][n][i][j];
                        }
                        out[m][l][k][i][j] = v;
                    }
    return out;
}

CurvatureTensor combine(const CurvatureTensor& a, double sa, const CurvatureTensor& b, double sb) {
    CurvatureTensor r{};
    for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) r[l][k][i][j] = sa * a[l][k][i][j] + sb * b[l][k][i][j];
    return r;
}

// Central difference of R along axis m with half-width h.
CurvatureTensor central(const SurfaceMap& f, const TransversalField& xi, ChartPoint p, int m, double h) {
    ChartPoint a = p, b = p;
    (m == 0 ? a.u : a.v) += h;
    (m == 0 ? b.u : b.v) -= h;
    return combine(connection_curvature(f, xi, a).R, 0.5 / h, connection_curvature(f, xi, b).R, -0.5 / h);
}

double frame_norm(const std::array<CurvatureTensor, 2>& nabla, double theta12) {
    const double P[2] = {1.0, 1.0 / theta12};
    double n = 0.0;
    for (int m = 0; m < 2; ++m)
        for (int l = 0; l < 2; ++l)
            for (int k = 0; k < 2; ++k)
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        n = std::max(n, std::abs(nabla[m][l][k][i][j] * P[m] * P[k] * P[i] * P[j] / P[l]));
    return n;
}

double norm2(const Vec2<double>& a) { return std::hypot(a[0], a[1]); }

double rel_gap(const Vec2<double>& got, const Vec2<double>& want) {
    const double s = norm2(want);
    const Vec2<double> d{got[0] - want[0], got[1] - want[1]};
    return s > 0 ? norm2(d) / s : norm2(d);
}

} // namespace

Curvature connection_curvature(const SurfaceMap& f, const TransversalField& xi, ChartPoint p) {
    const GaussWeingartenJets g = gauss_weingarten_jets(f, xi, p, 1);
    Curvature c;
    c.R = values_of(curvature_jets(g));
    c.ric = ricci(c.R);
    c.theta12 = g.theta12.value();
    return c;
}

Vec2<double> apply(const CurvatureTensor& R, const Vec2<double>& X, const Vec2<double>& Y, const Vec2<double>& Z) {
    Vec2<double> r{0.0, 0.0};
    for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) r[l] += R[l][k][i][j] * X[i] * Y[j] * Z[k];
    return r;
}

int image_dimension(const CurvatureTensor& R, double scale, double rel, double* ratio) {
    // Columns R(d_u, d_v) d_k; R(d_i, d_i) = 0 and R(d_v, d_u) = -R(d_u, d_v).
    const double a = R[0][0][0][1], b = R[0][1][0][1], c = R[1][0][0][1], d = R[1][1][0][1];
    const double fro2 = a * a + b * b + c * c + d * d;
    const double det = std::abs(a * d - b * c);
    const double disc = std::sqrt(std::max(0.0, fro2 * fro2 - 4 * det * det));
    const double smax = std::sqrt((fro2 + disc) / 2);
    const double smin = smax > 0 ? det / smax : 0.0;
    if (ratio) *ratio = smax > 0 ? smin / smax : 0.0;
    if (!(smax > 1e-10 * scale) || smax == 0.0) return 0;
    return smin > rel * smax ? 2 : 1;
}

CovariantDerivativeR covariant_derivative_R(const SurfaceMap& f, const TransversalField& xi, ChartPoint p,
                                            DerivativeMode mode, double step, const Domain* domain) {
    const GaussWeingartenJets g = gauss_weingarten_jets(f, xi, p, 2);
    const JetTensor Rj = curvature_jets(g);
    const CurvatureTensor R = values_of(Rj);
    std::array<Mat2<double>, 2> G{};
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) G[l][i][j] = g.gamma[l][i][j].value();

    std::array<CurvatureTensor, 2> dR{};
    if (mode == DerivativeMode::Jet) {
        for (int m = 0; m < 2; ++m)
            for (int l = 0; l < 2; ++l)
                for (int k = 0; k < 2; ++k)
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j) dR[m][l][k][i][j] = Rj[l][k][i][j].partial(m == 0, m == 1);
    } else {
        if (!(step > 0)) fail(ErrorKind::DomainError, "difference step must be positive");
        if (domain && (!domain->contains({p.u - step, p.v - step}) || !domain->contains({p.u + step, p.v + step})))
            fail(ErrorKind::OutsideDomain, "curvature stencil leaves the domain");
        for (int m = 0; m < 2; ++m) {
            const CurvatureTensor d1 = central(f, xi, p, m, step);
            dR[m] = mode == DerivativeMode::Central
                        ? d1
                        : combine(central(f, xi, p, m, step / 2), 4.0 / 3.0, d1, -1.0 / 3.0);
        }
    }

    CovariantDerivativeR out;
    out.nabla = covariant(R, dR, G);
    out.norm = frame_norm(out.nabla, g.theta12.value());
    out.dim_im = image_dimension(R, curvature_scale(g), 1e-7, &out.sv_ratio);
    return out;
}

FrameCurvatureCheck frame_curvature_check(const SurfacePair& pair, ChartPoint p) {
    const PairFrame fr = solve_pair_frame(pair, p);
    const FrameCoefficients fc = frame_coefficients(pair, p);
    const Curvature c = connection_curvature(pair.f, pair.xi, p);
    const Curvature ch = connection_curvature(pair.fhat, pair.xihat, p);
    const double k = 1.0 - fr.A * fr.Ahat, W = fr.W, H = fc.H, alpha = fc.alpha;
    auto scaled = [](const Vec2<double>& x, double s) { return Vec2<double>{s * x[0], s * x[1]}; };

    FrameCurvatureCheck r;
    r.r121 = rel_gap(apply(c.R, fr.X1, fr.X2, fr.X1), scaled(fr.X2, k));
    r.r121hat = rel_gap(apply(ch.R, fr.X1hat, fr.X2hat, fr.X1hat), scaled(fr.X2hat, k));
    r.r122 = fr.A != 0.0 ? rel_gap(apply(c.R, fr.X1, fr.X2, fr.X2),
                                   scaled(fr.X1, -alpha * fr.Ahat * W * W * H / (fr.A * k)))
                         : 0.0;
    r.r122hat = rel_gap(apply(ch.R, fr.X1hat, fr.X2hat, fr.X2hat), scaled(fr.X1hat, -alpha * k * k * k / (W * W * H)));
    auto ric = [&](const Vec2<double>& x, const Vec2<double>& y) {
        double s = 0.0;
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l) s += c.ric[j][l] * x[j] * y[l];
        return s;
    };
    r.ric = std::max(std::abs(ric(fr.X1, fr.X1) + k), std::abs(ric(fr.X1, fr.X2))) / std::abs(k);
    return r;
}

Minimality affine_minimality(const SurfaceMap& f, ChartPoint p, int orientation) {
    const TransversalField xb = blaschke_field(f, orientation);
    const GaussWeingartenData g = gauss_weingarten(f, xb, p);
    Minimality m;
    m.trace = g.shape[0][0] + g.shape[1][1];
    const FrameBuilder frame = [f, xb](ChartPoint q, int order) {
        const JetVec3 f1 = f.jets(q, order + 1);
        return FrameJets{truncated(f1, order), {du(f1), dv(f1), xb.jets(q, order)}};
    };
    const FrameForms w = maurer_cartan(frame, p, 0);
    const double area = wedge(w.theta[0], w.theta[1]);
    m.proxy = (-wedge(w.theta[1], w.omega[0][2]) + wedge(w.theta[0], w.omega[1][2])) / area;
    return m;
}

} // namespace abdg
