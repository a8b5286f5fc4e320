#include <doctest.h>

#include <cmath>

#include "abdg/catalog.hpp"
#include "abdg/pair.hpp"
#include "pair_oracles.hpp"

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

const std::vector<ChartPoint> kSamples = {{1.7, -0.4}, {2.1, 0.0}, {2.5, 0.3}, {1.9, 0.45}};

double bilinear(const Mat2<double>& h, const Vec2<double>& x, const Vec2<double>& y) {
    double s = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += h[i][j] * x[i] * y[j];
    return s;
}

} // namespace

TEST_CASE("classical pair: psi = 1 and the affine fundamental forms are conformal") {
    const SurfacePair pair = make_pair("classical");
    for (ChartPoint p : kSamples) {
        CHECK(psi(pair, p) == doctest::Approx(1.0).epsilon(1e-10));
        const Conformality c = conformality_defect(pair, p);
        CHECK(c.defect < 1e-10);
        CHECK(std::abs(c.psi_minus_1) < 1e-10);
    }
}

TEST_CASE("pair frame on the classical pair") {
    const SurfacePair pair = make_pair("classical");
    for (ChartPoint p : kSamples) {
        const PairFrame fr = solve_pair_frame(pair, p);
        // fhat - f = f_* X1 = fhat_* X1hat
        const JetVec3 fj = pair.f.jets(p, 1), gj = pair.fhat.jets(p, 1);
        Vec3<double> a{}, b{};
        for (int k = 0; k < 3; ++k) {
            a[k] = fj[k].partial(1, 0) * fr.X1[0] + fj[k].partial(0, 1) * fr.X1[1];
            b[k] = gj[k].partial(1, 0) * fr.X1hat[0] + gj[k].partial(0, 1) * fr.X1hat[1];
        }
        for (int k = 0; k < 3; ++k) {
            CHECK(a[k] == doctest::Approx(fr.d[k]).epsilon(1e-12));
            CHECK(b[k] == doctest::Approx(fr.d[k]).epsilon(1e-12));
        }
        // h(X1hat, X1) = 0 and hhat(X1, X1hat) = 0 under the Backlund conditions.
        const Mat2<double> h = gauss_weingarten(pair.f, pair.xi, p).h;
        const Mat2<double> hh = gauss_weingarten(pair.fhat, pair.xihat, p).h;
        CHECK(std::abs(bilinear(h, fr.X1hat, fr.X1)) < 1e-10 * std::abs(bilinear(h, fr.X1, fr.X1)));
        CHECK(std::abs(bilinear(hh, fr.X1, fr.X1hat)) < 1e-10 * std::abs(bilinear(hh, fr.X1hat, fr.X1hat)));
    }
}

TEST_CASE("frame coefficient relations on the classical pair") {
    const SurfacePair pair = make_pair("classical");
    for (ChartPoint p : kSamples) {
        const FrameCoefficients c = frame_coefficients(pair, p);
        CHECK(c.alpha_residual < 1e-9);
        CHECK(c.beta_residual < 1e-9);
        CHECK(std::abs(c.s_residual) < 1e-9);
        CHECK(std::abs(c.x_residual) < 1e-9);
        CHECK(std::abs(c.beta_relation) < 1e-9);
        CHECK(c.omega11 < 1e-9);
    }
}

TEST_CASE("psi is invariant under transversal changes") {
    for (const char* name : {"classical", "classical-b", "focal"}) {
        const oracle::InvarianceGap g = oracle::psi_invariance(make_pair(name), 99, 20);
        INFO(name);
        CHECK(g.psi_drift < 1e-8);
        CHECK(g.identity < 1e-9);
    }
}

TEST_CASE("rank lemma on the classical pair and a cylinder") {
    const SurfacePair pair = make_pair("classical");
    for (ChartPoint p : kSamples) {
        const SphericalRank r = spherical_rank(pair, p);
        CHECK(r.rank == 2);
        CHECK(r.jacobian_rank == 2);
        CHECK(r.agree);
        CHECK(r.lemma_residual < 1e-9);
    }
    const SurfacePair cyl = make_pair("translate");
    const SphericalRank r = spherical_rank(cyl, {0.1, 0.2});
    CHECK(r.rank == 0);
    CHECK(r.jacobian_rank == 0);
    CHECK(r.agree);
}

TEST_CASE("parallel transversals: criterion and choice of X2") {
    const SurfacePair pair = make_pair("parallel", {{"eps", 0.0}, {"lambda", 2.0}});
    const ChartPoint p{2.0, 0.1};
    const ParallelCriterion a = parallel_transversal_criterion(pair, p);
    const ParallelTruth truth = parallel_ground_truth(pair, p);
    CHECK(a.lambda == doctest::Approx(truth.lambda).epsilon(1e-10));
    CHECK(a.beta == doctest::Approx(truth.beta).epsilon(1e-10));
    CHECK(a.decomposition_residual < 1e-10);
    // Conformal at eps = 0, so H Hhat = beta^4.
    CHECK(std::abs(a.defect) < 1e-9);
    for (double shift : {-0.7, 0.4, 1.3}) {
        const ParallelCriterion b = parallel_transversal_criterion(pair, p, shift);
        CHECK(b.lambda == doctest::Approx(a.lambda).epsilon(1e-12));
        CHECK(std::pow(b.beta, 4) == doctest::Approx(std::pow(a.beta, 4)).epsilon(1e-10));
    }
    const SurfacePair off = make_pair("parallel", {{"eps", 0.1}, {"lambda", 2.0}});
    CHECK(std::abs(parallel_transversal_criterion(off, p).defect) > 1e-3);
}

TEST_CASE("typed failures of the pair frame") {
    const SurfacePair base = make_pair("classical");
    const ChartPoint p{2.0, 0.0};

    SurfacePair lifted = base;  // fhat = f + xi is never tangent
    const SurfaceMap f = base.f;
    const TransversalField xi = base.xi;
    lifted.fhat = SurfaceMap("lifted", f.domain(), [f, xi](ChartPoint q, int order) {
        return f.jets(q, order) + xi.jets(q, order);
    });
    CHECK(throws_kind(ErrorKind::NotTangent, [&] { (void)solve_pair_frame(lifted, p); }));

    SurfacePair same = base;
    same.fhat = base.f;
    CHECK(throws_kind(ErrorKind::CoincidentPoints, [&] { (void)solve_pair_frame(same, p); }));

    CHECK(throws_kind(ErrorKind::ZeroW, [&] { (void)psi(make_pair("spoiler-3"), p); }));
    CHECK(throws_kind(ErrorKind::NotParallel, [&] { (void)parallel_transversal_criterion(base, p); }));
}
