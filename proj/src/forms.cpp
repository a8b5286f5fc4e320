#include "abdg/forms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace abdg {

FormJet operator+(const FormJet& x, const FormJet& y) { return {x.a + y.a, x.b + y.b}; }
FormJet operator-(const FormJet& x, const FormJet& y) { return {x.a - y.a, x.b - y.b}; }
FormJet operator*(const MultiJet& s, const FormJet& x) { return {s * x.a, s * x.b}; }
FormJet differential(const MultiJet& g) { return {g.du(), g.dv()}; }

MultiJet wedge_jet(const FormJet& x, const FormJet& y) { return x.a * y.b - x.b * y.a; }

ChartOneForm ChartOneForm::from_fields(Domain domain, ScalarField a, ScalarField b) {
    return ChartOneForm(domain, [a, b](ChartPoint p, int order) { return FormJet{a.jets(p, order), b.jets(p, order)}; });
}

FormJet ChartOneForm::jets(ChartPoint p, int order) const {
    if (!eval_) fail(ErrorKind::ConstructionFailed, "one-form has no evaluator");
    if (!domain_.contains(p)) fail(ErrorKind::OutsideDomain, "one-form evaluated outside its domain");
    return eval_(p, order);
}

namespace {

void require_stencil(const Domain& d, ChartPoint p, double reach) {
    if (!d.contains({p.u - reach, p.v - reach}) || !d.contains({p.u + reach, p.v + reach}))
        fail(ErrorKind::OutsideDomain, "difference stencil of half-width " + std::to_string(reach) +
                                           " at (" + std::to_string(p.u) + ", " + std::to_string(p.v) +
                                           ") leaves the domain");
}

// b_u - a_v by central differences with step h, from a sampler returning
// (a, b) at a point.
template <class Sample> double central_curl(const Sample& sample, ChartPoint p, double h) {
    const Vec2<double> up = sample({p.u + h, p.v}), um = sample({p.u - h, p.v});
    const Vec2<double> vp = sample({p.u, p.v + h}), vm = sample({p.u, p.v - h});
    return (up[1] - um[1]) / (2 * h) - (vp[0] - vm[0]) / (2 * h);
}

template <class Sample> double curl(const Sample& sample, ChartPoint p, DerivativeMode mode, double h) {
    if (mode == DerivativeMode::Central) return central_curl(sample, p, h);
    // Central differences have an even error expansion in h.
    const double d1 = central_curl(sample, p, h), d2 = central_curl(sample, p, h / 2);
    return (4 * d2 - d1) / 3;
}

} // namespace

double exterior_derivative(const ChartOneForm& w, ChartPoint p, DerivativeMode mode, double step) {
    if (mode == DerivativeMode::Jet) return w.jets(p, 1).d().value();
    if (!(step > 0)) fail(ErrorKind::ParamOutOfRange, "difference step must be positive");
    require_stencil(w.domain(), p, step);
    return curl([&](ChartPoint q) { return w.value(q); }, p, mode, step);
}

namespace {

double frobenius(const std::array<Vec3<double>, 3>& c) {
    double s = 0.0;
    for (const auto& v : c) s += dot(v, v);
    return std::sqrt(s);
}

} // namespace

FrameForms maurer_cartan(const FrameBuilder& frame, ChartPoint p, int order) {
    const FrameJets F = frame(p, order + 1);
    FrameForms r;
    r.base = values(F.base);
    for (int k = 0; k < 3; ++k) r.col[k] = values(F.col[k]);

    const double det = det3(r.col[0], r.col[1], r.col[2]);
    const Mat3<double> inv = dual_rows(r.col[0], r.col[1], r.col[2], det);
    const std::array<Vec3<double>, 3> rows = {inv[0], inv[1], inv[2]};
    const double cond = frobenius(r.col) * frobenius(rows);
    if (!std::isfinite(cond) || cond > 1e12)
        fail(ErrorKind::SingularFrame, "frame columns are (nearly) dependent, condition " + std::to_string(cond));

    const MultiJet djet = det3(F.col[0], F.col[1], F.col[2]);
    const Mat3<MultiJet> R = dual_rows(F.col[0], F.col[1], F.col[2], djet);
    auto coords = [&](const JetVec3& x) { return coords_in(R, x); };
    auto trunc = [order](const MultiJet& x) { return x.truncated(order); };

    const Vec3<MultiJet> bu = coords(du(F.base)), bv = coords(dv(F.base));
    for (int i = 0; i < 3; ++i) r.theta[i] = {trunc(bu[i]), trunc(bv[i])};
    for (int j = 0; j < 3; ++j) {
        const Vec3<MultiJet> cu = coords(du(F.col[j])), cv = coords(dv(F.col[j]));
        for (int i = 0; i < 3; ++i) r.omega[i][j] = {trunc(cu[i]), trunc(cv[i])};
    }
    return r;
}

double maurer_cartan_reconstruction(const FrameBuilder& frame, ChartPoint p) {
    const FrameJets F = frame(p, 1);
    const FrameForms m = maurer_cartan(frame, p, 0);
    double worst = 0.0;
    for (int axis = 0; axis < 2; ++axis) {
        auto d = [axis](const JetVec3& x) { return values(axis == 0 ? du(x) : dv(x)); };
        auto pick = [axis](const FormJet& w) { return axis == 0 ? w.a.value() : w.b.value(); };
        Vec3<double> target = d(F.base), rec{};
        for (int i = 0; i < 3; ++i) rec = rec + pick(m.theta[i]) * m.col[i];
        worst = std::max(worst, norm(rec - target) / std::max(1.0, norm(target)));
        for (int j = 0; j < 3; ++j) {
            target = d(F.col[j]);
            rec = {};
            for (int i = 0; i < 3; ++i) rec = rec + pick(m.omega[i][j]) * m.col[i];
            worst = std::max(worst, norm(rec - target) / std::max(1.0, norm(target)));
        }
    }
    return worst;
}

double StructureResiduals::max() const {
    double m = 0.0;
    for (double x : theta) m = std::max(m, std::abs(x));
    for (const auto& row : omega)
        for (double x : row) m = std::max(m, std::abs(x));
    return m;
}

namespace {

// Twelve forms flattened: theta^0..2 then omega^i_j row-major.
using FormValues = std::array<Vec2<double>, 12>;

FormValues flatten(const FrameForms& m) {
    FormValues v;
    for (int i = 0; i < 3; ++i) v[i] = m.theta[i].value();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v[3 + 3 * i + j] = m.omega[i][j].value();
    return v;
}

} // namespace

StructureResiduals structural_residuals(const FrameBuilder& frame, ChartPoint p, DerivativeMode mode, double step,
                                        const Domain* domain) {
    std::array<double, 12> dforms{};
    FrameForms centre;
    if (mode == DerivativeMode::Jet) {
        centre = maurer_cartan(frame, p, 1);
        for (int i = 0; i < 3; ++i) dforms[i] = centre.theta[i].d().value();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) dforms[3 + 3 * i + j] = centre.omega[i][j].d().value();
    } else {
        if (!(step > 0)) fail(ErrorKind::ParamOutOfRange, "difference step must be positive");
        if (domain) require_stencil(*domain, p, step);
        centre = maurer_cartan(frame, p, 0);
        // One Maurer-Cartan solve per stencil point, shared by all twelve forms.
        auto sampled_curl = [&](double h) {
            const FormValues up = flatten(maurer_cartan(frame, {p.u + h, p.v}, 0));
            const FormValues um = flatten(maurer_cartan(frame, {p.u - h, p.v}, 0));
            const FormValues vp = flatten(maurer_cartan(frame, {p.u, p.v + h}, 0));
            const FormValues vm = flatten(maurer_cartan(frame, {p.u, p.v - h}, 0));
            std::array<double, 12> c{};
            for (int k = 0; k < 12; ++k) c[k] = (up[k][1] - um[k][1]) / (2 * h) - (vp[k][0] - vm[k][0]) / (2 * h);
            return c;
        };
        const auto d1 = sampled_curl(step);
        if (mode == DerivativeMode::Central) {
            dforms = d1;
        } else {
            const auto d2 = sampled_curl(step / 2);
            for (int k = 0; k < 12; ++k) dforms[k] = (4 * d2[k] - d1[k]) / 3;
        }
    }

    StructureResiduals r;
    double scale = 0.0;
    std::array<double, 12> raw{};
    for (int s = 0; s < 3; ++s) {
        double acc = dforms[s];
        scale = std::max(scale, std::abs(dforms[s]));
        for (int k = 0; k < 3; ++k) {
            const double t = wedge(centre.omega[s][k], centre.theta[k]);
            scale = std::max(scale, std::abs(t));
            acc += t;
        }
        raw[s] = acc;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int k0 = 3 + 3 * i + j;
            double acc = dforms[k0];
            scale = std::max(scale, std::abs(dforms[k0]));
            for (int k = 0; k < 3; ++k) {
                const double t = wedge(centre.omega[i][k], centre.omega[k][j]);
                scale = std::max(scale, std::abs(t));
                acc += t;
            }
            raw[k0] = acc;
        }
    // Wedge terms are products of coefficients; when they all cancel to
    // roundoff the squared coefficient size keeps the ratio meaningful.
    double coef = 0.0;
    for (const auto& f : flatten(centre)) coef = std::max({coef, std::abs(f[0]), std::abs(f[1])});
    scale = std::max(scale, coef * coef);
    r.scale = scale;
    const double div = scale > 0 ? scale : 1.0;
    for (int s = 0; s < 3; ++s) r.theta[s] = raw[s] / div;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.omega[i][j] = raw[3 + 3 * i + j] / div;
    return r;
}

namespace {

using FormMatrix = std::array<std::array<FormJet, 4>, 4>;

FormMatrix to_matrix(const FrameForms& m) {
    const int order = m.theta[0].order();
    FormMatrix M;
    for (auto& row : M)
        for (auto& x : row) x = {MultiJet::constant(0.0, order), MultiJet::constant(0.0, order)};
    for (int i = 0; i < 3; ++i) {
        M[i + 1][0] = m.theta[i];
        for (int j = 0; j < 3; ++j) M[i + 1][j + 1] = m.omega[i][j];
    }
    return M;
}

AffineJetMatrix inverse_affine(const AffineJetMatrix& a) {
    // a = [1 0; t B] => a^-1 = [1 0; -B^-1 t, B^-1]
    Vec3<MultiJet> c0{a[1][1], a[2][1], a[3][1]}, c1{a[1][2], a[2][2], a[3][2]}, c2{a[1][3], a[2][3], a[3][3]};
    const MultiJet det = det3(c0, c1, c2);
    if (det.value() == 0.0) fail(ErrorKind::SingularFrame, "gauge matrix is singular");
    const Mat3<MultiJet> rows = dual_rows(c0, c1, c2, det);
    const Vec3<MultiJet> t{a[1][0], a[2][0], a[3][0]};
    AffineJetMatrix r;
    r[0] = {MultiJet(1.0), MultiJet(0.0), MultiJet(0.0), MultiJet(0.0)};
    for (int i = 0; i < 3; ++i) {
        r[i + 1][0] = -dot(rows[i], t);
        for (int j = 0; j < 3; ++j) r[i + 1][j + 1] = rows[i][j];
    }
    return r;
}

} // namespace

FrameForms gauge_transformed(const FrameForms& forms, const AffineJetMatrix& a) {
    const FormMatrix M = to_matrix(forms);
    const AffineJetMatrix ai = inverse_affine(a);
    FormMatrix out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            MultiJet su(0.0), sv(0.0);
            for (int k = 0; k < 4; ++k) {
                MultiJet mu(0.0), mv(0.0);
                for (int l = 0; l < 4; ++l) {
                    mu += M[k][l].a * a[l][j];
                    mv += M[k][l].b * a[l][j];
                }
                su += ai[i][k] * (mu + a[k][j].du());
                sv += ai[i][k] * (mv + a[k][j].dv());
            }
            out[i][j] = {su, sv};
        }
    FrameForms r;
    for (int i = 0; i < 3; ++i) {
        r.theta[i] = out[i + 1][0];
        for (int j = 0; j < 3; ++j) r.omega[i][j] = out[i + 1][j + 1];
    }
    return r;
}

Vec2<double> expand_in(const Vec2<double>& target, const Vec2<double>& x, const Vec2<double>& y) {
    const double det = wedge(x, y);
    const double nx = std::hypot(x[0], x[1]), ny = std::hypot(y[0], y[1]);
    if (!(std::abs(det) >= 1e-10 * nx * ny) || det == 0.0)
        fail(ErrorKind::DegenerateExpansionBasis, "expansion basis forms are (nearly) dependent");
    return {wedge(target, y) / det, wedge(x, target) / det};
}

} // namespace abdg
