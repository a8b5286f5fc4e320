#pragma once

#include <array>
#include <functional>

#include "abdg/geometry.hpp"

namespace abdg {

// a du + b dv, with jet coefficients about one chart point.
struct FormJet {
    MultiJet a;
    MultiJet b;

    Vec2<double> value() const { return {a.value(), b.value()}; }
    double operator()(const Vec2<double>& x) const { return a.value() * x[0] + b.value() * x[1]; }
    int order() const { return std::min(a.order(), b.order()); }
    // d(a du + b dv) = (b_u - a_v) du^dv, one order lower.
    MultiJet d() const { return b.du() - a.dv(); }
};

FormJet operator+(const FormJet& x, const FormJet& y);
FormJet operator-(const FormJet& x, const FormJet& y);
FormJet operator*(const MultiJet& s, const FormJet& x);
FormJet differential(const MultiJet& g); // dg, one order lower

// du^dv coefficient of x ^ y.
inline double wedge(const Vec2<double>& x, const Vec2<double>& y) { return x[0] * y[1] - x[1] * y[0]; }
inline double wedge(const FormJet& x, const FormJet& y) { return wedge(x.value(), y.value()); }
MultiJet wedge_jet(const FormJet& x, const FormJet& y);

// A 1-form field on the chart: point, order -> coefficient jets.
class ChartOneForm {
public:
    using Evaluator = std::function<FormJet(ChartPoint, int)>;

    ChartOneForm() = default;
    ChartOneForm(Domain domain, Evaluator eval) : domain_(domain), eval_(std::move(eval)) {}
    static ChartOneForm from_fields(Domain domain, ScalarField a, ScalarField b);

    FormJet jets(ChartPoint p, int order) const;
    Vec2<double> value(ChartPoint p) const { return jets(p, 0).value(); }
    const Domain& domain() const { return domain_; }

private:
    Domain domain_;
    Evaluator eval_;
};

enum class DerivativeMode { Jet, Central, Richardson };

// du^dv coefficient of dw at p. `step` is used by the difference modes only;
// the whole stencil must lie in the domain.
double exterior_derivative(const ChartOneForm& w, ChartPoint p, DerivativeMode mode = DerivativeMode::Jet,
                           double step = 0.0);

// Base point and three columns of an affine frame along the chart.
struct FrameJets {
    JetVec3 base;
    std::array<JetVec3, 3> col;
};
using FrameBuilder = std::function<FrameJets(ChartPoint, int)>;

// Pull-back of the Maurer-Cartan form: df = sum theta[i] v_i and
// dv_j = sum omega[i][j] v_i, so omega[i][j] is omega^i_j.
struct FrameForms {
    std::array<FormJet, 3> theta;
    std::array<std::array<FormJet, 3>, 3> omega;
    Vec3<double> base{};
    std::array<Vec3<double>, 3> col{};
};

// Forms with coefficient jets of `order`; the builder is asked for order + 1.
// Throws SingularFrame when the Frobenius condition number of the columns
// exceeds 1e12.
FrameForms maurer_cartan(const FrameBuilder& frame, ChartPoint p, int order = 0);

// Max over both chart directions of |d frame - (frame expanded with the
// forms)|, relative to the size of the derivative. Checks the solve.
double maurer_cartan_reconstruction(const FrameBuilder& frame, ChartPoint p);

// Residuals of d theta^s + sum omega^s_k ^ theta^k and
// d omega^i_j + sum omega^i_k ^ omega^k_j, each divided by the largest
// single term appearing in any of the twelve equations at p.
struct StructureResiduals {
    std::array<double, 3> theta{};
    std::array<std::array<double, 3>, 3> omega{};
    double scale = 0.0;
    double max() const;
};

StructureResiduals structural_residuals(const FrameBuilder& frame, ChartPoint p, DerivativeMode mode,
                                        double step = 0.0, const Domain* domain = nullptr);

// 4x4 jets of a frame change F' = F a with a = [1 0; t B].
using AffineJetMatrix = std::array<std::array<MultiJet, 4>, 4>;

// Forms of F a predicted from the forms of F: a^-1 (F^-1 dF) a + a^-1 da.
// The jets of `a` must have order at least forms order + 1.
FrameForms gauge_transformed(const FrameForms& forms, const AffineJetMatrix& a);

// Coefficients (s, t) with target = s x + t y at the base point. Throws
// DegenerateExpansionBasis when |x^y| < 1e-10 |x||y|.
Vec2<double> expand_in(const Vec2<double>& target, const Vec2<double>& x, const Vec2<double>& y);

} // namespace abdg
