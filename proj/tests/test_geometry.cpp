#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "abdg/geometry.hpp"

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

SurfaceMap paraboloid() {
    return SurfaceMap::from_formula("paraboloid", {-2, 2, -2, 2}, [](auto u, auto v) {
        return Vec3<decltype(u)>{u, v, 0.5 * (u * u + v * v)};
    });
}

SurfaceMap saddle() {
    return SurfaceMap::from_formula("saddle", {-2, 2, -2, 2}, [](auto u, auto v) {
        return Vec3<decltype(u)>{u, v, 0.5 * (u * u - v * v)};
    });
}

SurfaceMap sphere() {
    return SurfaceMap::from_formula("sphere", {0.3, 2.8, -3, 3}, [](auto a, auto b) {
        return Vec3<decltype(a)>{sin(a) * cos(b), sin(a) * sin(b), cos(a)};
    });
}

SurfaceMap pseudosphere() {
    return SurfaceMap::from_formula("pseudosphere", {0.5, 2.5, -3, 3}, [](auto u, auto v) {
        return Vec3<decltype(u)>{sech(u) * cos(v), sech(u) * sin(v), u - tanh(u)};
    });
}

// A bumpy graph with no special structure.
SurfaceMap bumpy() {
    return SurfaceMap::from_formula("bumpy", {-1, 1, -1, 1}, [](auto u, auto v) {
        return Vec3<decltype(u)>{u + 0.1 * v * v, v, exp(0.3 * u) * (1.0 + 0.5 * u * u + 0.8 * v * v) + 0.2 * sin(u * v)};
    });
}

TransversalField constant_field(const SurfaceMap& f, Vec3<double> c) {
    return TransversalField("const", f.domain(), [c](ChartPoint, int order) {
        return JetVec3{MultiJet::constant(c[0], order), MultiJet::constant(c[1], order), MultiJet::constant(c[2], order)};
    });
}

TransversalField minus_position(const SurfaceMap& f) {
    return TransversalField("-f", f.domain(), [f](ChartPoint p, int order) { return -f.jets(p, order); });
}

double max_abs(const Mat2<double>& m) {
    return std::max({std::abs(m[0][0]), std::abs(m[0][1]), std::abs(m[1][0]), std::abs(m[1][1])});
}

// Ambient reconstruction of the Gauss and Weingarten formulas.
double reconstruction_residual(const SurfaceMap& f, const TransversalField& xi, ChartPoint p) {
    JetVec3 F = f.jets(p, 2);
    JetVec3 X = xi.jets(p, 1);
    const GaussWeingartenData g = gauss_weingarten(f, xi, p);
    Vec3<double> fd[2] = {values(du(F)), values(dv(F))};
    Vec3<double> second[2][2] = {{values(du(du(F))), values(dv(du(F)))}, {values(du(dv(F))), values(dv(dv(F)))}};
    Vec3<double> dxi[2] = {values(du(X)), values(dv(X))};
    Vec3<double> x = values(X);
    double worst = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Vec3<double> rec = g.gamma[0][i][j] * fd[0] + g.gamma[1][i][j] * fd[1] + g.h[i][j] * x;
            worst = std::max(worst, norm(rec - second[i][j]) / (1.0 + norm(second[i][j])));
        }
        Vec3<double> rec = -(g.shape[0][i] * fd[0] + g.shape[1][i] * fd[1]) + g.tau[i] * x;
        worst = std::max(worst, norm(rec - dxi[i]) / (1.0 + norm(dxi[i])));
    }
    return worst;
}

} // namespace

TEST_CASE("paraboloid with the vertical transversal") {
    SurfaceMap f = paraboloid();
    TransversalField xi = constant_field(f, {0, 0, 1});
    ChartPoint p{0.7, -0.4};
    GaussWeingartenData g = gauss_weingarten(f, xi, p);
    CHECK(g.h[0][0] == doctest::Approx(1.0));
    CHECK(g.h[1][1] == doctest::Approx(1.0));
    CHECK(std::abs(g.h[0][1]) < 1e-15);
    for (int k = 0; k < 2; ++k) CHECK(max_abs(g.gamma[k]) < 1e-15);
    CHECK(max_abs(g.shape) < 1e-15);
    CHECK(std::abs(g.tau[0]) + std::abs(g.tau[1]) < 1e-15);
    CHECK(g.theta12 == doctest::Approx(1.0));
    CHECK(g.H == doctest::Approx(1.0));
    Vec3<double> nu = conormal(f, xi, p);
    CHECK(nu[0] == doctest::Approx(-0.7));
    CHECK(nu[1] == doctest::Approx(0.4));
    CHECK(nu[2] == doctest::Approx(1.0));
    CHECK(nu == g.conormal);
}

TEST_CASE("unit sphere with xi = -f has S = Id and tau = 0") {
    SurfaceMap f = sphere();
    TransversalField xi = minus_position(f);
    for (ChartPoint p : {ChartPoint{0.4, 0.1}, ChartPoint{1.3, -2.0}, ChartPoint{2.5, 2.9}}) {
        GaussWeingartenData g = gauss_weingarten(f, xi, p);
        CHECK(g.shape[0][0] == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(g.shape[1][1] == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(std::abs(g.shape[0][1]) + std::abs(g.shape[1][0]) < 1e-13);
        CHECK(std::abs(g.tau[0]) + std::abs(g.tau[1]) < 1e-13);
    }
}

TEST_CASE("conormal near the north pole agrees with a dense LU solve") {
    SurfaceMap f = sphere();
    TransversalField xi = minus_position(f);
    ChartPoint p{0.35, 0.8};
    JetVec3 F = f.jets(p, 1);
    Vec3<double> fu = values(du(F)), fv = values(dv(F)), x = xi.value(p);
    Eigen::Matrix3d m;
    m << fu[0], fu[1], fu[2], fv[0], fv[1], fv[2], x[0], x[1], x[2];
    Eigen::Vector3d nu = m.partialPivLu().solve(Eigen::Vector3d(0, 0, 1));
    Vec3<double> got = conormal(f, xi, p);
    for (int k = 0; k < 3; ++k) CHECK(got[k] == doctest::Approx(nu[k]).epsilon(1e-13));
    // the pairing is ambient: nu = -f as a covector
    Vec3<double> fp = f.value(p);
    for (int k = 0; k < 3; ++k) CHECK(got[k] == doctest::Approx(-fp[k]).epsilon(1e-13));
    CHECK(dot(got, x) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("pseudosphere with the unit normal has H = -1") {
    SurfaceMap f = pseudosphere();
    TransversalField n = euclidean_normal(f);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> du(0.5, 2.5), dv(-3, 3);
    for (int k = 0; k < 50; ++k) {
        ChartPoint p{du(rng), dv(rng)};
        CHECK(gauss_weingarten(f, n, p).H == doctest::Approx(-1.0).epsilon(1e-12));
    }
}

TEST_CASE("Gauss and Weingarten reconstruction on sample surfaces") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> t(0.05, 0.95);
    double worst = 0.0;
    for (const SurfaceMap& f : {paraboloid(), saddle(), sphere(), pseudosphere(), bumpy()}) {
        const Domain d = f.domain();
        for (const TransversalField& xi : {euclidean_normal(f), blaschke_field(f)}) {
            for (int k = 0; k < 100; ++k) {
                ChartPoint p{d.u0 + t(rng) * d.width(), d.v0 + t(rng) * d.height()};
                worst = std::max(worst, reconstruction_residual(f, xi, p));
            }
        }
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("Blaschke normal of the paraboloid and the sphere") {
    SurfaceMap f = paraboloid();
    for (ChartPoint p : {ChartPoint{0.0, 0.0}, ChartPoint{1.2, -0.7}}) {
        BlaschkeNormal b = blaschke_normal(f, p);
        CHECK(std::abs(b.xi[0]) < 1e-12);
        CHECK(std::abs(b.xi[1]) < 1e-12);
        CHECK(b.xi[2] == doctest::Approx(1.0).epsilon(1e-12));
    }
    SurfaceMap s = sphere();
    for (ChartPoint p : {ChartPoint{0.5, 0.3}, ChartPoint{2.0, -1.0}}) {
        BlaschkeNormal b = blaschke_normal(s, p);
        Vec3<double> fp = s.value(p);
        // up to orientation; with theta12 > 0 the chart orientation makes it +f
        const double sgn = dot(b.xi, fp) > 0 ? 1.0 : -1.0;
        CHECK(norm(b.xi - sgn * fp) < 1e-12);
        CHECK(b.gw.theta12 > 0);
    }
}

TEST_CASE("Blaschke normal is equiaffine and volume normalized") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> t(0.05, 0.95);
    for (const SurfaceMap& f : {paraboloid(), saddle(), sphere(), pseudosphere(), bumpy()}) {
        const Domain d = f.domain();
        for (int k = 0; k < 20; ++k) {
            ChartPoint p{d.u0 + t(rng) * d.width(), d.v0 + t(rng) * d.height()};
            for (int orientation : {1, -1}) {
                BlaschkeNormal b = blaschke_normal(f, p, orientation);
                CHECK(std::abs(b.gw.tau[0]) < 1e-8);
                CHECK(std::abs(b.gw.tau[1]) < 1e-8);
                CHECK(std::abs(std::abs(b.gw.H) - 1.0) < 1e-8);
                CHECK(b.gw.theta12 * orientation > 0);
            }
        }
    }
}

TEST_CASE("Blaschke normal is equivariant under unimodular linear maps") {
    const double T[3][3] = {{1.2, 0.3, -0.1}, {0.0, 0.9, 0.4}, {0.2, -0.5, 0.0}};
    // rescale the last row to make det T = 1
    double det = T[0][0] * (T[1][1] * T[2][2] - T[1][2] * T[2][1]) - T[0][1] * (T[1][0] * T[2][2] - T[1][2] * T[2][0]) +
                 T[0][2] * (T[1][0] * T[2][1] - T[1][1] * T[2][0]);
    double M[3][3];
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) M[r][c] = r == 2 ? T[r][c] / det : T[r][c];
    SurfaceMap base = bumpy();
    SurfaceMap moved("moved", base.domain(), [base, M](ChartPoint p, int order) {
        JetVec3 x = base.jets(p, order);
        JetVec3 y;
        for (int r = 0; r < 3; ++r) y[r] = M[r][0] * x[0] + M[r][1] * x[1] + M[r][2] * x[2];
        return y;
    });
    for (ChartPoint p : {ChartPoint{0.2, 0.3}, ChartPoint{-0.6, 0.5}, ChartPoint{0.8, -0.9}}) {
        Vec3<double> a = blaschke_normal(base, p).xi;
        Vec3<double> b = blaschke_normal(moved, p).xi;
        Vec3<double> ta{};
        for (int r = 0; r < 3; ++r) ta[r] = M[r][0] * a[0] + M[r][1] * a[1] + M[r][2] * a[2];
        CHECK(norm(ta - b) < 1e-8 * (1.0 + norm(b)));
    }
}

TEST_CASE("Blaschke construction is a fixed point on affine normals") {
    SurfaceMap f = bumpy();
    TransversalField xb = blaschke_field(f);
    // the recomputed Gauss-Weingarten data of the Blaschke field satisfy the
    // normalization, so normalizing again changes nothing
    for (ChartPoint p : {ChartPoint{0.1, 0.2}, ChartPoint{-0.5, -0.4}}) {
        GaussWeingartenData g = gauss_weingarten(f, xb, p);
        CHECK(std::abs(g.tau[0]) + std::abs(g.tau[1]) < 1e-8);
        CHECK(std::abs(std::abs(g.H) - 1.0) < 1e-8);
        TransversalField again = blaschke_field(SurfaceMap::from_formula("same", f.domain(), [](auto u, auto v) {
            return Vec3<decltype(u)>{u + 0.1 * v * v, v,
                                     exp(0.3 * u) * (1.0 + 0.5 * u * u + 0.8 * v * v) + 0.2 * sin(u * v)};
        }));
        CHECK(norm(again.value(p) - xb.value(p)) < 1e-12);
    }
}

TEST_CASE("transversal change rules agree with direct recomputation") {
    SurfaceMap f = bumpy();
    TransversalField xi = euclidean_normal(f);
    ChartPoint p{0.3, -0.2};

    GaussWeingartenData same = transversal_change(f, xi, ScalarField::constant(1.0),
                                                  {ScalarField::constant(0.0), ScalarField::constant(0.0)}, p);
    GaussWeingartenData ref = gauss_weingarten(f, xi, p);
    CHECK(same.H == doctest::Approx(ref.H).epsilon(1e-15));
    CHECK(max_abs(same.shape) == doctest::Approx(max_abs(ref.shape)).epsilon(1e-15));

    SurfaceMap par = paraboloid();
    GaussWeingartenData g2 = transversal_change(par, constant_field(par, {0, 0, 1}), ScalarField::constant(2.0),
                                                {ScalarField::constant(0.0), ScalarField::constant(0.0)}, {0.3, 0.4});
    CHECK(g2.H == doctest::Approx(1.0 / 16.0).epsilon(1e-15));

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> c(-0.5, 0.5);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const double a0 = 1.0 + c(rng), a1 = c(rng), a2 = c(rng), b0 = c(rng), b1 = c(rng), b2 = c(rng), d0 = c(rng),
                     d1 = c(rng);
        ScalarField lam = ScalarField::from_formula([=](auto u, auto v) { return a0 + a1 * sin(u) + a2 * u * v; });
        ChartVectorField z{ScalarField::from_formula([=](auto u, auto v) { return b0 + b1 * u + b2 * cos(v); }),
                           ScalarField::from_formula([=](auto u, auto v) { return d0 * exp(0.5 * u) + d1 * v * v; })};
        ChartPoint q{0.8 * c(rng) * 2, 0.8 * c(rng) * 2};
        GaussWeingartenData rule = transversal_change(f, xi, lam, z, q);
        GaussWeingartenData direct = gauss_weingarten(f, changed_transversal(f, xi, lam, z), q);
        auto upd = [&](double a, double b) { worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(b))); };
        upd(rule.H, direct.H);
        upd(rule.theta12, direct.theta12);
        for (int i = 0; i < 2; ++i) {
            upd(rule.tau[i], direct.tau[i]);
            for (int j = 0; j < 2; ++j) {
                upd(rule.h[i][j], direct.h[i][j]);
                upd(rule.shape[i][j], direct.shape[i][j]);
                for (int k = 0; k < 2; ++k) upd(rule.gamma[k][i][j], direct.gamma[k][i][j]);
            }
        }
        for (int k = 0; k < 3; ++k) upd(rule.conormal[k], direct.conormal[k]);
        // rank of h does not depend on the transversal
        const double det = direct.h[0][0] * direct.h[1][1] - direct.h[0][1] * direct.h[1][0];
        CHECK(det != doctest::Approx(0.0));
    }
    CHECK(worst < 1e-8);

    CHECK(throws_kind(ErrorKind::ZeroScale, [&] {
        (void)transversal_change(f, xi, ScalarField::constant(0.0),
                                 {ScalarField::constant(0.0), ScalarField::constant(0.0)}, p);
    }));
}

TEST_CASE("regularity failures raise typed errors") {
    SurfaceMap folded = SurfaceMap::from_formula("folded", {-1, 1, -1, 1}, [](auto u, auto v) {
        return Vec3<decltype(u)>{u + v, u + v, u * v * 0.0 + u + v};
    });
    CHECK(throws_kind(ErrorKind::NotImmersive,
                      [&] { (void)gauss_weingarten(folded, constant_field(folded, {0, 0, 1}), {0.1, 0.1}); }));
    SurfaceMap f = paraboloid();
    CHECK(throws_kind(ErrorKind::NotTransversal,
                      [&] { (void)gauss_weingarten(f, constant_field(f, {1, 0, 0}), {0.0, 0.0}); }));
    SurfaceMap plane = SurfaceMap::from_formula("plane", {-1, 1, -1, 1}, [](auto u, auto v) {
        return Vec3<decltype(u)>{u, v, 0.3 * u - 0.2 * v};
    });
    CHECK(throws_kind(ErrorKind::DegenerateSurface, [&] { (void)blaschke_normal(plane, {0.2, 0.2}); }));
    SurfaceMap cylinder = SurfaceMap::from_formula("cylinder", {-1, 1, -1, 1}, [](auto u, auto v) {
        return Vec3<decltype(u)>{cos(u), sin(u), v};
    });
    CHECK(throws_kind(ErrorKind::DegenerateSurface, [&] { (void)blaschke_normal(cylinder, {0.2, 0.2}); }));
    CHECK(throws_kind(ErrorKind::OutsideDomain, [&] { (void)f.value({3.0, 0.0}); }));
    CHECK(throws_kind(ErrorKind::OrderExceeded, [&] { (void)f.with_order_budget(2).jets({0, 0}, 3); }));
}
