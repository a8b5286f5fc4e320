#include "abdg/geometry.hpp"

#include <cmath>
#include <string>

namespace abdg {

bool Domain::contains(ChartPoint p) const {
    const double su = 1e-12 * (1.0 + std::abs(u1 - u0));
    const double sv = 1e-12 * (1.0 + std::abs(v1 - v0));
    return p.u >= u0 - su && p.u <= u1 + su && p.v >= v0 - sv && p.v <= v1 + sv;
}

JetVec3 VectorField::jets(ChartPoint p, int order) const {
    if (!eval_) fail(ErrorKind::ConstructionFailed, "field '" + label_ + "' has no evaluator");
    if (order < 0 || order > max_order_)
        fail(ErrorKind::OrderExceeded, "field '" + label_ + "' asked for order " + std::to_string(order) +
                                           " with budget " + std::to_string(max_order_));
    if (!domain_.contains(p))
        fail(ErrorKind::OutsideDomain, "point (" + std::to_string(p.u) + ", " + std::to_string(p.v) +
                                           ") outside the domain of '" + label_ + "'");
    return eval_(p, order);
}

VectorField VectorField::with_order_budget(int order) const {
    VectorField r = *this;
    r.max_order_ = order;
    return r;
}

VectorField VectorField::relabeled(std::string label) const {
    VectorField r = *this;
    r.label_ = std::move(label);
    return r;
}

ScalarField ScalarField::constant(double c) {
    return ScalarField([c](ChartPoint, int order) { return MultiJet::constant(c, order); });
}

GaussWeingartenData values(const GaussWeingartenJets& g) {
    GaussWeingartenData r;
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.gamma[k][i][j] = g.gamma[k][i][j].value();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r.h[i][j] = g.h[i][j].value();
            r.shape[i][j] = g.shape[i][j].value();
        }
        r.tau[i] = g.tau[i].value();
    }
    r.theta12 = g.theta12.value();
    r.H = g.H.value();
    r.conormal = values(g.conormal);
    return r;
}

void check_frame(const Vec3<double>& fu, const Vec3<double>& fv, const Vec3<double>& xi) {
    const double area = norm(cross(fu, fv));
    if (!(area > 1e-12 * norm(fu) * norm(fv)) || area == 0.0)
        fail(ErrorKind::NotImmersive, "f_u and f_v are (nearly) dependent");
    if (!(std::abs(det3(fu, fv, xi)) > 1e-10 * area * norm(xi)))
        fail(ErrorKind::NotTransversal, "transversal field lies (nearly) in the tangent plane");
}

namespace {

struct SurfaceJets {
    JetVec3 fu, fv, fuu, fuv, fvv;
};

SurfaceJets surface_derivatives(const SurfaceMap& f, ChartPoint p, int order) {
    JetVec3 F = f.jets(p, order + 2);
    SurfaceJets s;
    s.fu = du(F);
    s.fv = dv(F);
    s.fuu = du(s.fu);
    s.fuv = dv(s.fu);
    s.fvv = dv(s.fv);
    return s;
}

} // namespace

GaussWeingartenJets gauss_weingarten_jets(const SurfaceMap& f, const TransversalField& xi, ChartPoint p, int order) {
    SurfaceJets s = surface_derivatives(f, p, order);
    JetVec3 X = xi.jets(p, order + 1);
    check_frame(values(s.fu), values(s.fv), values(X));
    return gauss_weingarten_core(s.fu, s.fv, s.fuu, s.fuv, s.fvv, X, du(X), dv(X));
}

GaussWeingartenData gauss_weingarten(const SurfaceMap& f, const TransversalField& xi, ChartPoint p) {
    return values(gauss_weingarten_jets(f, xi, p, 0));
}

Vec3<double> conormal(const SurfaceMap& f, const TransversalField& xi, ChartPoint p) {
    JetVec3 F = f.jets(p, 1);
    Vec3<double> fu = values(du(F)), fv = values(dv(F)), x = xi.value(p);
    check_frame(fu, fv, x);
    return cross(fu, fv) / det3(fu, fv, x);
}

TransversalField euclidean_normal(const SurfaceMap& f) {
    return TransversalField(f.label() + ":unit-normal", f.domain(), [f](ChartPoint p, int order) {
        JetVec3 F = f.jets(p, order + 1);
        JetVec3 n = cross(du(F), dv(F));
        MultiJet len = sqrt(dot(n, n));
        return n / len;
    });
}

TransversalField blaschke_field(const SurfaceMap& f, int orientation) {
    const double sign = orientation >= 0 ? 1.0 : -1.0;
    return TransversalField(f.label() + ":blaschke", f.domain(), [f, sign](ChartPoint p, int order) {
        // Seed with the cross product normal; its fundamental form and
        // transversal connection are exact up to order + 1.
        SurfaceJets s = surface_derivatives(f, p, order + 1);
        JetVec3 seed = cross(s.fu, s.fv);
        GaussWeingartenJets g =
            gauss_weingarten_core(s.fu, s.fv, s.fuu, s.fuv, s.fvv, seed, du(seed), dv(seed));

        const GaussWeingartenData g0 = values(g);
        double hnorm2 = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) hnorm2 += g0.h[i][j] * g0.h[i][j];
        const double second_scale =
            norm(values(s.fuu)) + norm(values(s.fuv)) + norm(values(s.fvv));
        const double deth = g0.h[0][0] * g0.h[1][1] - g0.h[0][1] * g0.h[1][0];
        if (std::sqrt(hnorm2) <= 1e-12 * second_scale / norm(values(seed)) || std::abs(deth) <= 1e-10 * hnorm2)
            fail(ErrorKind::DegenerateSurface, "affine fundamental form is degenerate at (" + std::to_string(p.u) +
                                                   ", " + std::to_string(p.v) + ")");

        // xi = lambda seed + f_* Z with |H| = 1 and tau = 0.
        MultiJet lambda = pow(abs(g.H), 0.25);
        Vec2<MultiJet> rhs = {g.tau[0] + lambda.du() / lambda, g.tau[1] + lambda.dv() / lambda};
        Mat2<MultiJet> hinv = inverse2(g.h);
        MultiJet z0 = -lambda * (hinv[0][0] * rhs[0] + hinv[0][1] * rhs[1]);
        MultiJet z1 = -lambda * (hinv[1][0] * rhs[0] + hinv[1][1] * rhs[1]);
        JetVec3 xi = lambda * seed + z0 * s.fu + z1 * s.fv;
        return truncated(sign * xi, order);
    });
}

BlaschkeNormal blaschke_normal(const SurfaceMap& f, ChartPoint p, int orientation) {
    TransversalField xi = blaschke_field(f, orientation);
    BlaschkeNormal b;
    b.xi = xi.value(p);
    b.gw = gauss_weingarten(f, xi, p);
    return b;
}

TransversalField changed_transversal(const SurfaceMap& f, const TransversalField& xi, const ScalarField& lambda,
                                     const ChartVectorField& z) {
    return TransversalField(xi.label() + ":changed", xi.domain(), [f, xi, lambda, z](ChartPoint p, int order) {
        JetVec3 F = f.jets(p, order + 1);
        JetVec3 X = xi.jets(p, order);
        return lambda.jets(p, order) * X + z.u.jets(p, order) * du(F) + z.v.jets(p, order) * dv(F);
    });
}

GaussWeingartenData transversal_change(const SurfaceMap& f, const TransversalField& xi, const ScalarField& lambda,
                                       const ChartVectorField& z, ChartPoint p) {
    const GaussWeingartenData g = gauss_weingarten(f, xi, p);
    const MultiJet lj = lambda.jets(p, 1);
    const MultiJet zj[2] = {z.u.jets(p, 1), z.v.jets(p, 1)};
    const double lam = lj.value();
    if (lam == 0.0) fail(ErrorKind::ZeroScale, "transversal rescaling factor vanishes");
    const double Z[2] = {zj[0].value(), zj[1].value()};
    const double dlam[2] = {lj.coeff(1, 0), lj.coeff(0, 1)};
    // dZ[k][i] = d_i Z^k
    const double dZ[2][2] = {{zj[0].coeff(1, 0), zj[0].coeff(0, 1)}, {zj[1].coeff(1, 0), zj[1].coeff(0, 1)}};

    GaussWeingartenData r;
    r.theta12 = lam * g.theta12;
    r.H = g.H / std::pow(lam, 4);
    for (int k = 0; k < 3; ++k) r.conormal[k] = g.conormal[k] / lam;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            r.h[i][j] = g.h[i][j] / lam;
            for (int k = 0; k < 2; ++k) r.gamma[k][i][j] = g.gamma[k][i][j] - g.h[i][j] * Z[k] / lam;
        }
    for (int i = 0; i < 2; ++i) {
        const double hz = g.h[i][0] * Z[0] + g.h[i][1] * Z[1];
        r.tau[i] = g.tau[i] + dlam[i] / lam + hz / lam;
    }
    // S~(d_i) = lam S(d_i) - nabla_{d_i} Z + tau~_i Z
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            double nabla = dZ[k][i];
            for (int j = 0; j < 2; ++j) nabla += g.gamma[k][i][j] * Z[j];
            r.shape[k][i] = lam * g.shape[k][i] - nabla + r.tau[i] * Z[k];
        }
    return r;
}

} // namespace abdg
