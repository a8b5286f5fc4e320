#include <doctest.h>

#include <cmath>
#include <set>

#include "abdg/catalog.hpp"
#include "abdg/expr.hpp"

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

} // namespace

TEST_CASE("expressions parse and evaluate on doubles and jets") {
    const Expression e = Expression::parse("sin(u) * exp(v) - u^2 / (1 + v*v) + pi");
    const double u = 0.3, v = -0.7;
    const double direct = std::sin(u) * std::exp(v) - u * u / (1 + v * v) + M_PI;
    CHECK(e(u, v) == doctest::Approx(direct).epsilon(1e-15));
    const MultiJet j = e(MultiJet::variable(u, 0, 2), MultiJet::variable(v, 1, 2));
    CHECK(j.value() == doctest::Approx(direct).epsilon(1e-15));
    // d/dv = sin(u) exp(v) + 2 u^2 v / (1 + v^2)^2
    CHECK(j.partial(0, 1) == doctest::Approx(std::sin(u) * std::exp(v) + 2 * u * u * v / std::pow(1 + v * v, 2)));

    CHECK(Expression::parse("-2^2")(0, 0) == doctest::Approx(-4.0));
    CHECK(Expression::parse("2^3^2")(0, 0) == doctest::Approx(512.0));
    CHECK(Expression::parse("sech(0) + atan(1) * 4 - asinh(0)")(0, 0) == doctest::Approx(1.0 + M_PI));
    CHECK(Expression::parse("1.5e-1 * u")(2, 0) == doctest::Approx(0.3));

    for (const char* bad : {"", "u +", "sin(u", "foo(u)", "u v", "2 ** u", "w"})
        CHECK_MESSAGE(throws_kind(ErrorKind::ParseError, [&] { (void)Expression::parse(bad); }), bad);
}

TEST_CASE("catalog entries and parameter schema") {
    std::set<std::string> names;
    for (const auto& e : catalog_entries()) names.insert(e.name);
    for (const char* n : {"elliptic-paraboloid", "hyperbolic-paraboloid", "unit-sphere", "pseudosphere", "graph",
                          "classical", "classical-b", "focal", "parallel", "translate", "rescaled-xi", "spoiler-1",
                          "spoiler-7"})
        CHECK_MESSAGE(names.count(n) == 1, n);

    const CatalogEntry& cl = find_entry("classical");
    const Params p = resolve_params(cl, {{"sigma", 1.0}});
    CHECK(p.at("sigma") == 1.0);
    CHECK(p.at("L") == 1.0);
    CHECK(throws_kind(ErrorKind::ParamOutOfRange, [&] { (void)resolve_params(cl, {{"L", -1.0}}); }));
    CHECK(throws_kind(ErrorKind::UnknownEntry, [&] { (void)resolve_params(cl, {{"extent", 1.0}}); }));
    CHECK(throws_kind(ErrorKind::UnknownEntry, [] { (void)find_entry("torus"); }));
    CHECK(throws_kind(ErrorKind::UnknownEntry, [] { (void)make_surface("classical"); }));
    CHECK(throws_kind(ErrorKind::UnknownEntry, [] { (void)make_pair("unit-sphere"); }));
    CHECK(throws_kind(ErrorKind::ParamOutOfRange, [] { (void)make_surface("graph"); }));
    CHECK(throws_kind(ErrorKind::ParseError, [] { (void)make_surface("graph", {}, "u +"); }));
}

TEST_CASE("surfaces build and evaluate inside their charts") {
    for (const auto& e : catalog_entries()) {
        if (e.kind != EntryKind::Surface) continue;
        const SurfaceMap f = e.name == "graph" ? make_surface("graph", {}, "u^3 - 3*u*v^2") : make_surface(e.name);
        const Domain& d = f.domain();
        const ChartPoint mid{0.5 * (d.u0 + d.u1), 0.5 * (d.v0 + d.v1)};
        INFO(e.name);
        CHECK(std::isfinite(gauss_weingarten(f, euclidean_normal(f), mid).H));
    }
    const SurfaceMap g = make_surface("graph", {{"extent", 2.0}}, "u*v");
    const Vec3<double> x = g.value({0.5, -1.5});
    CHECK(x[2] == doctest::Approx(-0.75));
    CHECK(g.domain().u1 == 2.0);
}

TEST_CASE("classical pair validates and has constant curvature -sin^2 sigma / L^2") {
    for (double sigma : {M_PI / 3, M_PI / 4, 2.0}) {
        ClassicalParams cp;
        cp.sigma = sigma;
        cp.L = 1.7;
        const SurfacePair pair = make_classical_pair(cp);
        CHECK(validate_classical(pair, sigma, cp.L).ok());
        CHECK(pair.warning.empty());
        const double K = -std::pow(std::sin(sigma) / cp.L, 2);
        for (ChartPoint p : {ChartPoint{1.7, -0.3}, ChartPoint{2.4, 0.4}}) {
            CHECK(gauss_weingarten(pair.f, pair.xi, p).H == doctest::Approx(K).epsilon(1e-10));
            CHECK(gauss_weingarten(pair.fhat, pair.xihat, p).H == doctest::Approx(K).epsilon(1e-10));
        }
    }
    // tan(sigma/2) = 1 coincides with the seed soliton.
    ClassicalParams right;
    right.sigma = M_PI / 2;
    CHECK(throws_kind(ErrorKind::ConstructionFailed, [&] { (void)make_classical_pair(right); }));
}

TEST_CASE("rank drop of the spherical representation lies on v = 0") {
    ClassicalParams cp;
    cp.phase = 0.0;
    const ChartPoint q = classical_rank_drop(cp, 0.5, 1.5);
    CHECK(q.v == 0.0);
    CHECK(q.u > 0.5);
    CHECK(q.u < 1.5);
    cp.domain = {q.u - 0.1, q.u + 0.1, -0.1, 0.1};
    const SurfacePair pair = make_classical_pair(cp);
    CHECK(std::abs(spherical_rank(pair, q).margin) < 1e-8);
}

TEST_CASE("spoiler index range") {
    CHECK(throws_kind(ErrorKind::UnknownEntry, [] { (void)make_spoiler(8, ClassicalParams{}); }));
    CHECK(make_spoiler(4, ClassicalParams{}).label.find('4') != std::string::npos);
}
