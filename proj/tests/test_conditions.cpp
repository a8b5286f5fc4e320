#include <doctest.h>

#include <cmath>
#include <string>

#include "abdg/catalog.hpp"
#include "abdg/conditions.hpp"

using namespace abdg;

namespace {

SweepOptions options(int n, bool curvature = false) {
    SweepOptions o;
    o.grid = {n, n};
    o.curvature = curvature;
    return o;
}

int failing(const ConditionReport& r, int* which) {
    int count = 0;
    for (std::size_t k = 0; k < r.conditions.size(); ++k)
        if (!r.conditions[k].satisfied) {
            ++count;
            *which = static_cast<int>(k) + 1;
        }
    return count;
}

} // namespace

TEST_CASE("classical pair satisfies conditions 1 to 7 and the conclusions") {
    const ConditionReport r = backlund_condition_report(make_pair("classical"), options(9, true));
    REQUIRE(r.conditions.size() == 7);
    for (const auto& c : r.conditions) {
        INFO(c.name << " worst " << c.worst_residual);
        CHECK(c.satisfied);
        CHECK(c.witness.has_value());
    }
    CHECK(r.conditions_hold());
    CHECK(r.conformal.satisfied);
    for (const auto& c : r.curvature) CHECK_MESSAGE(c.satisfied, c.name);
    CHECK(r.dim_R == 2);
    CHECK(r.dim_Rhat == 2);
    CHECK(r.H.min == doctest::Approx(-0.75).epsilon(1e-10));
    CHECK(r.H.max == doctest::Approx(-0.75).epsilon(1e-10));
    CHECK(r.psi.count == 81);
    CHECK(r.diagnostics.empty());
}

TEST_CASE("each spoiler fails exactly its condition, with a witness inside the chart") {
    for (int k = 1; k <= 7; ++k) {
        const SurfacePair pair = make_pair("spoiler-" + std::to_string(k));
        const ConditionReport r = backlund_condition_report(pair, options(11));
        int which = 0;
        INFO("spoiler " << k);
        CHECK(failing(r, &which) == 1);
        CHECK(which == k);
        const CheckRecord& c = r.conditions[k - 1];
        REQUIRE(c.witness.has_value());
        CHECK(pair.domain().contains(*c.witness));
    }
}

TEST_CASE("rescaling xi by a constant changes neither psi nor conformality") {
    const ConditionReport r = backlund_condition_report(make_pair("rescaled-xi", {{"c", 1.3}}), options(9));
    CHECK(r.conditions_hold());
    CHECK(r.conformal.satisfied);
    CHECK(r.psi.max == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("parallel transversals fail condition 3 only") {
    const ConditionReport r = backlund_condition_report(make_pair("parallel"), options(9));
    int which = 0;
    CHECK(failing(r, &which) == 1);
    CHECK(which == 3);
    CHECK(r.psi.count == 0);  // psi needs W != 0
}

TEST_CASE("Blaschke pair check on the classical pair") {
    const SurfacePair c = make_pair("classical");
    const BlaschkePairReport r = blaschke_pair_check(c.f, c.fhat, options(9));
    CHECK(r.normalization_gap < 1e-10);
    CHECK(r.conditions_hold());
    CHECK(r.conditions.front().name == "blaschke-pair-i");
    CHECK(r.conditions.back().name == "blaschke-pair-vii");
}

TEST_CASE("Blaschke pair conditions (vi) and (vii) on paraboloids") {
    const SurfaceMap saddle = make_surface("hyperbolic-paraboloid");
    const SurfaceMap bowl = make_surface("elliptic-paraboloid");
    // Opposite signs of det h: (vi) fails everywhere.
    const BlaschkePairReport mixed = blaschke_pair_check(bowl, saddle, options(8));
    CHECK(!mixed.conditions[5].satisfied);
    CHECK(mixed.conditions[5].worst_residual == 1.0);

    // Two saddles, fhat = f(u, v + 1): parallel Blaschke normals give A Ahat = 1
    // and Ahat = A, as (vii) asks for eps = -1.
    const SurfaceMap moved = SurfaceMap::from_formula("moved", saddle.domain(), [](auto u, auto v) {
        return Vec3<decltype(u)>{u, v + 1.0, 0.5 * (u * u - (v + 1.0) * (v + 1.0))};
    });
    const BlaschkePairReport two = blaschke_pair_check(saddle, moved, options(8));
    CHECK(two.conditions[5].satisfied);
    CHECK(two.conditions[6].worst_residual < 1e-8);
}

TEST_CASE("a rank drop between cell centres is caught by the sign change of the wedge") {
    // With an even grid no centre lies on the drop curve of spoiler 2.
    const ConditionReport r = backlund_condition_report(make_pair("spoiler-2"), options(12));
    CHECK(!r.conditions[1].satisfied);
    CHECK(r.conditions[1].worst_residual == 0.0);
    double smallest = INFINITY;
    for (const auto& s : r.samples) smallest = std::min(smallest, s.rank_margin);
    CHECK(smallest > 1e-6);
}
