#include "abdg/pair.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace abdg {

namespace {

std::string at(ChartPoint p) { return "(" + std::to_string(p.u) + ", " + std::to_string(p.v) + ")"; }

double max_abs(const Mat2<double>& m) {
    return std::max({std::abs(m[0][0]), std::abs(m[0][1]), std::abs(m[1][0]), std::abs(m[1][1])});
}

void require_nondegenerate(const GaussWeingartenData& g, ChartPoint p, const char* which) {
    const double det = g.h[0][0] * g.h[1][1] - g.h[0][1] * g.h[1][0];
    const double n = max_abs(g.h);
    if (!(std::abs(det) > 1e-10 * n * n))
        fail(ErrorKind::DegenerateSurface, std::string("affine fundamental form of ") + which + " is degenerate at " + at(p));
}

bool w_vanishes(double w, const Vec3<double>& d, const Vec3<double>& xi, const Vec3<double>& xih) {
    return std::abs(w) <= 1e-12 * norm(d) * norm(xi) * norm(xih);
}

// Chart components (a, b) of a tangent vector x = a f_u + b f_v, read off with
// the dual basis of (f_u, f_v, xi).
Vec2<double> chart_components(const Vec3<double>& x, const Vec3<double>& fu, const Vec3<double>& fv,
                              const Vec3<double>& xi) {
    const Mat3<double> rows = dual_rows(fu, fv, xi, det3(fu, fv, xi));
    return {dot(rows[0], x), dot(rows[1], x)};
}

double frobenius2(const Vec2<double>& a, const Vec2<double>& b) {
    return a[0] * a[0] + a[1] * a[1] + b[0] * b[0] + b[1] * b[1];
}

double norm2(const Vec2<double>& a) { return std::hypot(a[0], a[1]); }

} // namespace

double tangency_residual(const Vec3<double>& d, const Vec3<double>& fu, const Vec3<double>& fv) {
    const double scale = norm(d) * norm(cross(fu, fv));
    return scale > 0 ? std::abs(det3(d, fu, fv)) / scale : 0.0;
}

PairJets pair_jets(const SurfacePair& pair, ChartPoint p, int order) {
    PairJets j;
    const JetVec3 f1 = pair.f.jets(p, order + 1), g1 = pair.fhat.jets(p, order + 1);
    j.f = truncated(f1, order);
    j.fhat = truncated(g1, order);
    j.fu = du(f1);
    j.fv = dv(f1);
    j.fhu = du(g1);
    j.fhv = dv(g1);
    j.xi = truncated(pair.xi.jets(p, order), order);
    j.xihat = truncated(pair.xihat.jets(p, order), order);
    j.d = j.fhat - j.f;
    j.A = det3(j.fu, j.fv, j.xihat) / det3(j.fu, j.fv, j.xi);
    j.Ahat = det3(j.fhu, j.fhv, j.xi) / det3(j.fhu, j.fhv, j.xihat);
    j.W = det3(j.d, j.xi, j.xihat);
    return j;
}

PairFrame solve_pair_frame(const SurfacePair& pair, ChartPoint p, double tangency_tol) {
    const PairJets j = pair_jets(pair, p, 0);
    PairFrame r;
    r.d = values(j.d);
    r.xi = values(j.xi);
    r.xihat = values(j.xihat);
    const Vec3<double> fu = values(j.fu), fv = values(j.fv), fhu = values(j.fhu), fhv = values(j.fhv);
    check_frame(fu, fv, r.xi);
    check_frame(fhu, fhv, r.xihat);

    const double scale = 1.0 + norm(values(j.f)) + norm(values(j.fhat));
    if (norm(r.d) <= 1e-12 * scale) fail(ErrorKind::CoincidentPoints, "f and fhat coincide at " + at(p));
    const double t = tangency_residual(r.d, fu, fv), th = tangency_residual(r.d, fhu, fhv);
    if (t > tangency_tol || th > tangency_tol)
        fail(ErrorKind::NotTangent, "fhat - f is not tangent to both surfaces at " + at(p) + " (residuals " +
                                        std::to_string(t) + ", " + std::to_string(th) + ")");

    r.A = j.A.value();
    r.Ahat = j.Ahat.value();
    r.W = j.W.value();
    if (w_vanishes(r.W, r.d, r.xi, r.xihat)) fail(ErrorKind::ZeroW, "det(fhat - f, xi, xihat) vanishes at " + at(p));
    r.v2 = (r.A * r.xi - r.xihat) / r.W;
    r.v2hat = (r.xi - r.Ahat * r.xihat) / r.W;
    r.X1 = chart_components(r.d, fu, fv, r.xi);
    r.X2 = chart_components(r.v2, fu, fv, r.xi);
    r.X1hat = chart_components(r.d, fhu, fhv, r.xihat);
    r.X2hat = chart_components(r.v2hat, fhu, fhv, r.xihat);
    return r;
}

FrameBuilder pair_frame_builder(const SurfacePair& pair, PairSide side) {
    return [pair, side](ChartPoint p, int order) {
        const PairJets j = pair_jets(pair, p, order);
        const bool hat = side == PairSide::Fhat;
        const JetVec3& v3 = hat ? j.xihat : j.xi;
        FrameJets F;
        F.base = hat ? j.fhat : j.f;
        F.col[0] = j.d;
        F.col[2] = v3;
        if (w_vanishes(j.W.value(), values(j.d), values(j.xi), values(j.xihat))) {
            F.col[1] = cross(v3, j.d);
        } else if (hat) {
            F.col[1] = (j.xi - j.Ahat * j.xihat) / j.W;
        } else {
            F.col[1] = (j.A * j.xi - j.xihat) / j.W;
        }
        return F;
    };
}

double psi(const SurfacePair& pair, ChartPoint p) {
    const PairJets j = pair_jets(pair, p, 0);
    const double A = j.A.value(), Ah = j.Ahat.value(), W = j.W.value();
    if (w_vanishes(W, values(j.d), values(j.xi), values(j.xihat)))
        fail(ErrorKind::ZeroW, "psi needs det(fhat - f, xi, xihat) != 0 at " + at(p));
    const GaussWeingartenData g = gauss_weingarten(pair.f, pair.xi, p);
    const GaussWeingartenData gh = gauss_weingarten(pair.fhat, pair.xihat, p);
    require_nondegenerate(g, p, "f");
    require_nondegenerate(gh, p, "fhat");
    const double q = (1.0 - A * Ah) / W;
    return q * q * q * q / (g.H * gh.H);
}

SphericalRank spherical_rank(const SurfacePair& pair, ChartPoint p, double tol) {
    SphericalRank r;
    const FrameBuilder builder = pair_frame_builder(pair, PairSide::F);
    const FrameForms m = maurer_cartan(builder, p, 0);
    const Vec2<double> w21 = m.omega[1][0].value(), w31 = m.omega[2][0].value();
    r.wedge = wedge(w21, w31);
    const double fro = frobenius2(w21, w31);
    r.margin = fro > 0 ? std::abs(r.wedge) / fro : 0.0;
    r.rank = r.margin > tol ? 2 : (fro > 1e-20 ? 1 : 0);
    r.frame_det = det3(m.col[0], m.col[1], m.col[2]);

    // Oracle: Jacobian of the normalized direction of D.
    const PairJets j = pair_jets(pair, p, 1);
    const MultiJet len = sqrt(dot(j.d, j.d));
    const JetVec3 n = j.d / len;
    const Vec3<double> n0 = values(n), nu = values(du(n)), nv = values(dv(n));
    r.jacobian_det = det3(n0, nu, nv);
    const double a = dot(nu, nu), b = dot(nu, nv), c = dot(nv, nv);
    const double disc = std::sqrt(std::max(0.0, (a - c) * (a - c) + 4 * b * b));
    const double s_max = std::sqrt(std::max(0.0, (a + c + disc) / 2));
    // Smallest singular value from the Gram determinant, accurate near rank drop.
    const double s_min = s_max > 0 ? std::sqrt(std::max(0.0, a * c - b * b)) / s_max : 0.0;
    r.jacobian_rank = s_max <= 1e-10 ? 0 : (s_min / s_max > tol ? 2 : 1);
    const bool same_sign = (r.jacobian_det > 0) == (r.frame_det * r.wedge > 0);
    r.agree = r.rank == r.jacobian_rank && (r.rank < 2 || same_sign);

    // d(v^i/v^k) ^ d(v^j/v^k) = sign * det(phi) / (v^k)^3 * omega^2_1 ^ omega^3_1,
    // in the affine chart of the largest component k of D.
    const Vec3<double> d0 = values(j.d);
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(d0[i]) > std::abs(d0[k])) k = i;
    static constexpr int kOther[3][2] = {{1, 2}, {0, 2}, {0, 1}};
    static constexpr double kSign[3] = {1.0, -1.0, 1.0};
    const MultiJet r1 = j.d[kOther[k][0]] / j.d[k], r2 = j.d[kOther[k][1]] / j.d[k];
    const double lhs = wedge(differential(r1).value(), differential(r2).value());
    const double factor = kSign[k] * r.frame_det / (d0[k] * d0[k] * d0[k]);
    const double rhs = factor * r.wedge;
    const double scale = std::abs(factor) * norm2(w21) * norm2(w31);
    r.lemma_residual = scale > 0 ? std::abs(lhs - rhs) / scale : std::abs(lhs - rhs);
    return r;
}

Conformality conformality_defect(const SurfacePair& pair, ChartPoint p) {
    const GaussWeingartenData g = gauss_weingarten(pair.f, pair.xi, p);
    const GaussWeingartenData gh = gauss_weingarten(pair.fhat, pair.xihat, p);
    require_nondegenerate(g, p, "f");
    require_nondegenerate(gh, p, "fhat");
    double hh = 0, hg = 0, gg = 0;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            hh += g.h[i][k] * g.h[i][k];
            hg += g.h[i][k] * gh.h[i][k];
            gg += gh.h[i][k] * gh.h[i][k];
        }
    const double l = hg / hh;
    double res = 0;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) res += (gh.h[i][k] - l * g.h[i][k]) * (gh.h[i][k] - l * g.h[i][k]);
    Conformality c;
    c.defect = std::sqrt(res / gg);
    const PairJets j = pair_jets(pair, p, 0);
    // psi is undefined where W = 0, e.g. for parallel transversals.
    c.psi_minus_1 = w_vanishes(j.W.value(), values(j.d), values(j.xi), values(j.xihat))
                        ? std::numeric_limits<double>::quiet_NaN()
                        : psi(pair, p) - 1.0;
    return c;
}

ParallelCriterion parallel_transversal_criterion(const SurfacePair& pair, ChartPoint p, double x2_shift) {
    const PairJets j = pair_jets(pair, p, 0);
    const Vec3<double> xi = values(j.xi), xih = values(j.xihat), d = values(j.d);
    const Vec3<double> fu = values(j.fu), fv = values(j.fv), fhu = values(j.fhu), fhv = values(j.fhv);
    if (norm(cross(xi, xih)) > 1e-8 * norm(xi) * norm(xih))
        fail(ErrorKind::NotParallel, "xi and xihat are not parallel at " + at(p));
    if (tangency_residual(d, fu, fv) > kTangencyTol || tangency_residual(d, fhu, fhv) > kTangencyTol)
        fail(ErrorKind::NotTangent, "fhat - f is not tangent to both surfaces at " + at(p));

    // Unimodular completion of X1: the chart direction least parallel to X1.
    const Vec2<double> x1 = chart_components(d, fu, fv, xi);
    Vec2<double> x2 = std::abs(x1[0]) < std::abs(x1[1]) ? Vec2<double>{1.0, 0.0} : Vec2<double>{0.0, 1.0};
    Vec3<double> v2 = x2[0] * fu + x2[1] * fv;
    const double theta = det3(d, v2, xi);
    v2 = v2 / theta;
    x2 = {x2[0] / theta + x2_shift * x1[0], x2[1] / theta + x2_shift * x1[1]};
    v2 = v2 + x2_shift * d;

    // fhat_* X2hat spans fhat_* T cap span{v2, xi}, scaled so that
    // det(D, fhat_* X2hat, xihat) = 1.
    const Vec3<double> nh = cross(fhu, fhv);
    const Vec3<double> y = dot(nh, xi) * v2 - dot(nh, v2) * xi;
    const double ty = det3(d, y, xih);
    if (ty == 0.0) fail(ErrorKind::SingularFrame, "no unimodular X2hat at " + at(p));
    const Vec3<double> vh2 = y / ty;

    // Least-squares decomposition vh2 = lambda v2 + beta xi.
    const double a11 = dot(v2, v2), a12 = dot(v2, xi), a22 = dot(xi, xi);
    const double b1 = dot(v2, vh2), b2 = dot(xi, vh2);
    const double det = a11 * a22 - a12 * a12;
    ParallelCriterion r;
    r.lambda = (b1 * a22 - b2 * a12) / det;
    r.beta = (a11 * b2 - a12 * b1) / det;
    r.decomposition_residual = norm(vh2 - r.lambda * v2 - r.beta * xi) / norm(vh2);
    r.X2 = x2;
    r.X2hat = chart_components(vh2, fhu, fhv, xih);
    r.beta_vanishes = std::abs(r.beta) <= 1e-12 * (std::abs(r.lambda) * norm(v2) / norm(xi));

    const GaussWeingartenData g = gauss_weingarten(pair.f, pair.xi, p);
    const GaussWeingartenData gh = gauss_weingarten(pair.fhat, pair.xihat, p);
    require_nondegenerate(g, p, "f");
    require_nondegenerate(gh, p, "fhat");
    const double b4 = r.beta * r.beta * r.beta * r.beta;
    r.defect = g.H * gh.H - b4;
    return r;
}

namespace {

// alpha = <omega^1_2, omega^2_1> / |omega^2_1|^2, the least-squares fit of
// omega^1_2 = alpha omega^2_1.
MultiJet alpha_from(const FrameForms& m) {
    const FormJet& w12 = m.omega[0][1];
    const FormJet& w21 = m.omega[1][0];
    return (w12.a * w21.a + w12.b * w21.b) / (w21.a * w21.a + w21.b * w21.b);
}

} // namespace

MultiJet alpha_jet(const SurfacePair& pair, ChartPoint p, int order) {
    return alpha_from(maurer_cartan(pair_frame_builder(pair, PairSide::F), p, order));
}

FrameCoefficients frame_coefficients(const SurfacePair& pair, ChartPoint p) {
    const FrameForms m = maurer_cartan(pair_frame_builder(pair, PairSide::F), p, 1);
    const FrameForms mh = maurer_cartan(pair_frame_builder(pair, PairSide::Fhat), p, 0);
    const PairJets j = pair_jets(pair, p, 0);
    FrameCoefficients c;
    c.A = j.A.value();
    c.Ahat = j.Ahat.value();
    c.W = j.W.value();
    c.H = gauss_weingarten(pair.f, pair.xi, p).H;

    const Vec2<double> w21 = m.omega[1][0].value(), w31 = m.omega[2][0].value();
    const Vec2<double> st = expand_in(m.theta[0].value(), w21, w31);
    const Vec2<double> uv = expand_in(m.omega[2][1].value(), w21, w31);
    const Vec2<double> xy = expand_in(mh.omega[2][1].value(), w21, w31);
    c.s = st[0];
    c.t = st[1];
    c.u = uv[0];
    c.v = uv[1];
    c.x = xy[0];
    c.y = xy[1];

    const MultiJet alpha = alpha_from(m);
    c.alpha = alpha.value();
    c.dalpha = {alpha.du().value(), alpha.dv().value()};
    const Vec2<double> v12 = m.omega[0][1].value(), v13 = m.omega[0][2].value();
    c.beta = (v13[0] * w31[0] + v13[1] * w31[1]) / (w31[0] * w31[0] + w31[1] * w31[1]);
    auto rel_wedge = [](const Vec2<double>& a, const Vec2<double>& b) {
        const double s = norm2(a) * norm2(b);
        return s > 0 ? std::abs(wedge(a, b)) / s : 0.0;
    };
    c.alpha_residual = rel_wedge(v12, w21);
    c.beta_residual = rel_wedge(v13, w31);

    const double k = 1.0 - c.A * c.Ahat;
    c.s_residual = c.s - (c.Ahat * c.W * c.u / k + c.v);
    c.x_residual = c.x + k * k * c.u / (c.W * c.W * c.H);
    c.beta_relation = c.A != 0.0 ? c.beta - c.Ahat * c.W * c.W * c.alpha / (c.A * k) : 0.0;
    const Vec2<double> w11 = m.omega[0][0].value();
    c.omega11 = std::max(std::abs(w11[0]), std::abs(w11[1]));
    return c;
}

} // namespace abdg
