#include <doctest.h>

#include <cmath>
#include <random>

#include "abdg/forms.hpp"

using namespace abdg;

namespace {

bool throws_kind(ErrorKind kind, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind() == kind;
    }
    return false;
}

const Domain kUnit{-1.0, 1.0, -1.0, 1.0};

// (f; f_u, f_v, xi) for the paraboloid with xi = e3.
FrameJets paraboloid_frame(ChartPoint p, int order) {
    MultiJet u = MultiJet::variable(p.u, 0, order), v = MultiJet::variable(p.v, 1, order);
    MultiJet zero = MultiJet::constant(0.0, order), one = MultiJet::constant(1.0, order);
    return {{u, v, (u * u + v * v) * 0.5}, {JetVec3{one, zero, u}, JetVec3{zero, one, v}, JetVec3{zero, zero, one}}};
}

// A generic non-adapted frame with transcendental entries.
FrameJets twisted_frame(ChartPoint p, int order) {
    MultiJet u = MultiJet::variable(p.u, 0, order), v = MultiJet::variable(p.v, 1, order);
    MultiJet one = MultiJet::constant(1.0, order);
    return {{sin(u) * v, cos(v) + u, exp(0.3 * u * v)},
            {JetVec3{2.0 + sin(u + v), 0.3 * u, 0.2 * v * v},
             JetVec3{0.1 * cos(u), 1.5 + 0.2 * u * v, sin(v) * 0.4},
             JetVec3{0.2 * u, tanh(v) * 0.3, one + 0.5 * exp(0.2 * u)}}};
}

} // namespace

TEST_CASE("exterior derivative of simple forms") {
    ChartOneForm du_form(kUnit, [](ChartPoint, int order) {
        return FormJet{MultiJet::constant(1.0, order), MultiJet::constant(0.0, order)};
    });
    ChartOneForm u_dv(kUnit, [](ChartPoint p, int order) {
        return FormJet{MultiJet::constant(0.0, order), MultiJet::variable(p.u, 0, order)};
    });
    const ChartPoint p{0.2, -0.3};
    CHECK(exterior_derivative(du_form, p) == 0.0);
    CHECK(exterior_derivative(u_dv, p) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(exterior_derivative(u_dv, p, DerivativeMode::Central, 1e-3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(exterior_derivative(u_dv, p, DerivativeMode::Richardson, 1e-3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(throws_kind(ErrorKind::OutsideDomain,
                      [&] { (void)exterior_derivative(u_dv, {0.99, 0.0}, DerivativeMode::Central, 0.05); }));
}

TEST_CASE("d of an exact form vanishes") {
    ScalarField g = ScalarField::from_formula([](auto u, auto v) { return sin(u * v) + exp(u) * cos(2.0 * v); });
    ChartOneForm dg(kUnit, [g](ChartPoint p, int order) { return differential(g.jets(p, order + 1)); });
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> pt(-0.8, 0.8);
    for (int k = 0; k < 20; ++k) {
        const ChartPoint p{pt(rng), pt(rng)};
        CHECK(std::abs(exterior_derivative(dg, p)) < 1e-12);
        CHECK(std::abs(exterior_derivative(dg, p, DerivativeMode::Richardson, 1e-2)) < 1e-9);
    }
}

TEST_CASE("wedge is antisymmetric") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> c(-2.0, 2.0);
    for (int k = 0; k < 50; ++k) {
        const Vec2<double> a{c(rng), c(rng)}, b{c(rng), c(rng)};
        const Vec2<double> x{c(rng), c(rng)}, y{c(rng), c(rng)};
        // (a^b)(X,Y) = a(X)b(Y) - a(Y)b(X) = wedge * det(X,Y)
        const double ab = (a[0] * x[0] + a[1] * x[1]) * (b[0] * y[0] + b[1] * y[1]) -
                          (a[0] * y[0] + a[1] * y[1]) * (b[0] * x[0] + b[1] * x[1]);
        const double ba = (b[0] * x[0] + b[1] * x[1]) * (a[0] * y[0] + a[1] * y[1]) -
                          (b[0] * y[0] + b[1] * y[1]) * (a[0] * x[0] + a[1] * x[1]);
        CHECK(ab == doctest::Approx(-ba).epsilon(1e-14));
        CHECK(ab == doctest::Approx(wedge(a, b) * (x[0] * y[1] - x[1] * y[0])).epsilon(1e-12));
        CHECK(wedge(a, b) == -wedge(b, a));
    }
}

TEST_CASE("paraboloid adapted frame forms") {
    const ChartPoint p{0.4, -0.7};
    FrameForms m = maurer_cartan(paraboloid_frame, p, 2);
    CHECK(m.theta[0].value() == Vec2<double>{1.0, 0.0});
    CHECK(m.theta[1].value() == Vec2<double>{0.0, 1.0});
    CHECK(m.theta[2].value() == Vec2<double>{0.0, 0.0});
    // omega^3_1 = h11 du + h12 dv with h = identity
    CHECK(m.omega[2][0].value() == Vec2<double>{1.0, 0.0});
    CHECK(m.omega[2][1].value() == Vec2<double>{0.0, 1.0});
    CHECK(maurer_cartan_reconstruction(paraboloid_frame, p) < 1e-14);
    CHECK(structural_residuals(paraboloid_frame, p, DerivativeMode::Jet).max() < 1e-12);
    CHECK(structural_residuals(paraboloid_frame, p, DerivativeMode::Richardson, 1e-2, &kUnit).max() < 1e-9);
}

TEST_CASE("constant frame has vanishing connection forms") {
    FrameBuilder constant = [](ChartPoint p, int order) {
        MultiJet u = MultiJet::variable(p.u, 0, order), v = MultiJet::variable(p.v, 1, order);
        MultiJet z = MultiJet::constant(0.0, order);
        return FrameJets{{u, v, z},
                         {JetVec3{MultiJet(2.0), z, z}, JetVec3{MultiJet(1.0), MultiJet(1.0), z},
                          JetVec3{z, MultiJet(0.5), MultiJet(3.0)}}};
    };
    FrameForms m = maurer_cartan(constant, {0.1, 0.2}, 1);
    for (const auto& row : m.omega)
        for (const auto& w : row) CHECK(w.value() == Vec2<double>{0.0, 0.0});
    const StructureResiduals r = structural_residuals(constant, {0.1, 0.2}, DerivativeMode::Jet);
    CHECK(r.max() == 0.0);
}

TEST_CASE("generic frame: reconstruction, structure equations, jet vs differences") {
    const ChartPoint p{0.1, 0.25};
    CHECK(maurer_cartan_reconstruction(twisted_frame, p) < 1e-13);
    const StructureResiduals jet = structural_residuals(twisted_frame, p, DerivativeMode::Jet);
    CHECK(jet.max() < 1e-12);
    CHECK(jet.scale > 0.1);
    const StructureResiduals fd = structural_residuals(twisted_frame, p, DerivativeMode::Richardson, 1e-2, &kUnit);
    CHECK(fd.max() < 1e-8);

    // d omega from jets against differences of the solved forms.
    FrameForms m = maurer_cartan(twisted_frame, p, 1);
    ChartOneForm w21(kUnit, [](ChartPoint q, int order) { return maurer_cartan(twisted_frame, q, order).omega[1][0]; });
    const double jet_d = m.omega[1][0].d().value();
    CHECK(exterior_derivative(w21, p) == doctest::Approx(jet_d).epsilon(1e-13));
    CHECK(exterior_derivative(w21, p, DerivativeMode::Richardson, 1e-2) == doctest::Approx(jet_d).epsilon(1e-8));

    // Halving the step cuts the plain central residual about 4x.
    const double r1 = structural_residuals(twisted_frame, p, DerivativeMode::Central, 0.1, &kUnit).max();
    const double r2 = structural_residuals(twisted_frame, p, DerivativeMode::Central, 0.05, &kUnit).max();
    CHECK(r1 / r2 > 3.0);
}

TEST_CASE("gauge change of forms") {
    const ChartPoint p{-0.2, 0.3};
    const int order = 1;
    FrameForms m = maurer_cartan(twisted_frame, p, order);
    auto gauge = [](ChartPoint q, int k) {
        MultiJet u = MultiJet::variable(q.u, 0, k), v = MultiJet::variable(q.v, 1, k);
        MultiJet z = MultiJet::constant(0.0, k), one = MultiJet::constant(1.0, k);
        AffineJetMatrix a;
        a[0] = {one, z, z, z};
        a[1] = {0.3 * u, one + 0.2 * v, 0.1 * u, z};
        a[2] = {z, sin(u), 1.3 + z, 0.2 * v * u};
        a[3] = {v, z, 0.4 + z, cos(v)};
        return a;
    };
    FrameBuilder changed = [&](ChartPoint q, int k) {
        FrameJets F = twisted_frame(q, k);
        AffineJetMatrix a = gauge(q, k);
        FrameJets G;
        G.base = F.base;
        for (int r = 0; r < 3; ++r) G.base = G.base + a[r + 1][0] * F.col[r];
        for (int j = 0; j < 3; ++j) {
            G.col[j] = JetVec3{MultiJet(0.0), MultiJet(0.0), MultiJet(0.0)};
            for (int r = 0; r < 3; ++r) G.col[j] = G.col[j] + a[r + 1][j + 1] * F.col[r];
        }
        return G;
    };
    FrameForms direct = maurer_cartan(changed, p, 0);
    FrameForms predicted = gauge_transformed(m, gauge(p, order + 1));
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(direct.theta[i].a.value() - predicted.theta[i].a.value()) < 1e-12);
        CHECK(std::abs(direct.theta[i].b.value() - predicted.theta[i].b.value()) < 1e-12);
        for (int j = 0; j < 3; ++j) {
            CHECK(std::abs(direct.omega[i][j].a.value() - predicted.omega[i][j].a.value()) < 1e-12);
            CHECK(std::abs(direct.omega[i][j].b.value() - predicted.omega[i][j].b.value()) < 1e-12);
        }
    }
}

TEST_CASE("singular frames and degenerate expansion bases are refused") {
    FrameBuilder flat = [](ChartPoint p, int order) {
        MultiJet u = MultiJet::variable(p.u, 0, order), v = MultiJet::variable(p.v, 1, order);
        MultiJet z = MultiJet::constant(0.0, order), one = MultiJet::constant(1.0, order);
        return FrameJets{{u, v, z}, {JetVec3{one, z, z}, JetVec3{z, one, z}, JetVec3{one, one, z}}};
    };
    CHECK(throws_kind(ErrorKind::SingularFrame, [&] { (void)maurer_cartan(flat, {0.0, 0.0}); }));
    CHECK(throws_kind(ErrorKind::DegenerateExpansionBasis, [] { (void)expand_in({1, 2}, {1, 1}, {2, 2}); }));
    const Vec2<double> st = expand_in({3, 1}, {1, 0}, {1, 1});
    CHECK(st[0] == doctest::Approx(2.0));
    CHECK(st[1] == doctest::Approx(1.0));
}
