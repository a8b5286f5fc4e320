#pragma once

#include <functional>
#include <string>
#include <utility>

#include "abdg/jet.hpp"
#include "abdg/linalg.hpp"

namespace abdg {

struct ChartPoint {
    double u = 0.0;
    double v = 0.0;
};

struct Domain {
    double u0 = 0.0, u1 = 1.0, v0 = 0.0, v1 = 1.0;

    bool contains(ChartPoint p) const;
    double width() const { return u1 - u0; }
    double height() const { return v1 - v0; }
};

// A map from the chart into R^3 that can be expanded to any jet order up to a
// budget. Used both for immersions and for transversal vector fields.
class VectorField {
public:
    using Evaluator = std::function<JetVec3(ChartPoint, int)>;

    VectorField() = default;
    VectorField(std::string label, Domain domain, Evaluator eval, int max_order = kMaxJetOrder)
        : label_(std::move(label)), domain_(domain), eval_(std::move(eval)), max_order_(max_order) {}

    // `formula` is a generic callable (T u, T v) -> Vec3<T>.
    template <class F> static VectorField from_formula(std::string label, Domain domain, F formula) {
        return VectorField(std::move(label), domain, [formula](ChartPoint p, int order) {
            MultiJet u = MultiJet::variable(p.u, 0, order);
            MultiJet v = MultiJet::variable(p.v, 1, order);
            return formula(u, v);
        });
    }

    JetVec3 jets(ChartPoint p, int order) const;
    Vec3<double> value(ChartPoint p) const { return values(jets(p, 0)); }

    const std::string& label() const { return label_; }
    const Domain& domain() const { return domain_; }
    int max_order() const { return max_order_; }
    bool valid() const { return static_cast<bool>(eval_); }
    // Same map, refusing expansions deeper than `order`.
    VectorField with_order_budget(int order) const;
    VectorField relabeled(std::string label) const;

private:
    std::string label_;
    Domain domain_;
    Evaluator eval_;
    int max_order_ = kMaxJetOrder;
};

using SurfaceMap = VectorField;
using TransversalField = VectorField;

class ScalarField {
public:
    using Evaluator = std::function<MultiJet(ChartPoint, int)>;

    ScalarField() = default;
    explicit ScalarField(Evaluator eval) : eval_(std::move(eval)) {}

    template <class F> static ScalarField from_formula(F formula) {
        return ScalarField([formula](ChartPoint p, int order) {
            return MultiJet(formula(MultiJet::variable(p.u, 0, order), MultiJet::variable(p.v, 1, order)));
        });
    }
    static ScalarField constant(double c);

    MultiJet jets(ChartPoint p, int order) const { return eval_(p, order); }
    double value(ChartPoint p) const { return eval_(p, 0).value(); }

private:
    Evaluator eval_;
};

template <class T> struct GaussWeingartenT {
    std::array<Mat2<T>, 2> gamma{}; // gamma[k][i][j] = Christoffel symbol of d_k in D_{d_i} f_* d_j
    Mat2<T> h{};                    // affine fundamental form
    Mat2<T> shape{};                // S(d_i) = sum_k shape[k][i] d_k
    Vec2<T> tau{};                  // transversal connection form
    T theta12{};                    // det(f_u, f_v, xi)
    T H{};                          // det h / theta12^2
    Vec3<T> conormal{};             // nu(f_u) = nu(f_v) = 0, nu(xi) = 1
};

using GaussWeingartenData = GaussWeingartenT<double>;
using GaussWeingartenJets = GaussWeingartenT<MultiJet>;

GaussWeingartenData values(const GaussWeingartenJets& g);

// Decomposes the second derivatives of f and the first derivatives of xi in
// the frame (f_u, f_v, xi). No regularity checks.
template <class T>
GaussWeingartenT<T> gauss_weingarten_core(const Vec3<T>& fu, const Vec3<T>& fv, const Vec3<T>& fuu, const Vec3<T>& fuv,
                                          const Vec3<T>& fvv, const Vec3<T>& xi, const Vec3<T>& xiu,
                                          const Vec3<T>& xiv) {
    GaussWeingartenT<T> g;
    g.theta12 = det3(fu, fv, xi);
    const Mat3<T> rows = dual_rows(fu, fv, xi, g.theta12);
    const Vec3<T>* second[2][2] = {{&fuu, &fuv}, {&fuv, &fvv}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Vec3<T> c = coords_in(rows, *second[i][j]);
            g.gamma[0][i][j] = c[0];
            g.gamma[1][i][j] = c[1];
            g.h[i][j] = c[2];
        }
    const Vec3<T>* dxi[2] = {&xiu, &xiv};
    for (int i = 0; i < 2; ++i) {
        Vec3<T> c = coords_in(rows, *dxi[i]);
        g.shape[0][i] = -c[0];
        g.shape[1][i] = -c[1];
        g.tau[i] = c[2];
    }
    g.H = (g.h[0][0] * g.h[1][1] - g.h[0][1] * g.h[1][0]) / (g.theta12 * g.theta12);
    g.conormal = rows[2];
    return g;
}

// Throws NotImmersive / NotTransversal on the point values.
void check_frame(const Vec3<double>& fu, const Vec3<double>& fv, const Vec3<double>& xi);

// Jets of order `order`: f is expanded to order + 2 and xi to order + 1.
GaussWeingartenJets gauss_weingarten_jets(const SurfaceMap& f, const TransversalField& xi, ChartPoint p, int order);
GaussWeingartenData gauss_weingarten(const SurfaceMap& f, const TransversalField& xi, ChartPoint p);

// nu with nu(f_u) = nu(f_v) = 0 and nu(xi) = 1.
Vec3<double> conormal(const SurfaceMap& f, const TransversalField& xi, ChartPoint p);

// Unit normal f_u x f_v / |f_u x f_v| as a transversal field.
TransversalField euclidean_normal(const SurfaceMap& f);

// The equiaffine normal: volume-normalized (|H| = 1) with tau = 0. Orientation
// +1 makes det(f_u, f_v, xi) > 0. Expanding the field to order K costs K + 3
// derivatives of f. Throws DegenerateSurface where the affine fundamental form
// is degenerate.
TransversalField blaschke_field(const SurfaceMap& f, int orientation = 1);

struct BlaschkeNormal {
    Vec3<double> xi{};
    GaussWeingartenData gw;
};
BlaschkeNormal blaschke_normal(const SurfaceMap& f, ChartPoint p, int orientation = 1);

// Tangent vector field on the chart, as components (Z^u, Z^v).
struct ChartVectorField {
    ScalarField u;
    ScalarField v;
};

// xi~ = lambda xi + f_* Z as a new field (direct route).
TransversalField changed_transversal(const SurfaceMap& f, const TransversalField& xi, const ScalarField& lambda,
                                     const ChartVectorField& z);

// Gauss-Weingarten data of xi~ = lambda xi + f_* Z from the data of xi by the
// change rules, without re-decomposing the derivatives of xi~.
GaussWeingartenData transversal_change(const SurfaceMap& f, const TransversalField& xi, const ScalarField& lambda,
                                       const ChartVectorField& z, ChartPoint p);

} // namespace abdg
