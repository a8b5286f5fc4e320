#pragma once

// Random transversal changes xi~ = lambda xi + f_* Z, xibar = mu xihat + fhat_* V
// for the psi invariance checks.

#include <algorithm>
#include <cmath>
#include <random>

#include "abdg/pair.hpp"

namespace oracle {

struct InvarianceGap {
    double psi_drift = 0.0;  // max |psi~ - psi| / |psi|
    double identity = 0.0;   // max |1 - A~ Abar - (1 - A Ahat) W~ / (lambda mu W)|
    int skipped = 0;         // draws with W~ too small to define psi
};

inline InvarianceGap psi_invariance(const abdg::SurfacePair& pair, unsigned long seed, int trials) {
    using namespace abdg;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> c(-1.0, 1.0), s(0.5, 2.0), t(0.0, 1.0);
    const Domain& d = pair.domain();
    const ChartPoint mid{0.5 * (d.u0 + d.u1), 0.5 * (d.v0 + d.v1)};
    InvarianceGap gap;
    for (int trial = 0; trial < trials; ++trial) {
        // lambda and mu stay within 10% of their centre value, so they never vanish.
        const double l0 = (c(rng) < 0 ? -1 : 1) * s(rng), m0 = (c(rng) < 0 ? -1 : 1) * s(rng);
        const double l1 = 0.2 * c(rng) / d.width(), l2 = 0.2 * c(rng) / d.height();
        const double m1 = 0.2 * c(rng) / d.width(), m2 = 0.2 * c(rng) / d.height();
        const double z[6] = {c(rng), c(rng), c(rng), c(rng), c(rng), c(rng)};
        const double w[6] = {c(rng), c(rng), c(rng), c(rng), c(rng), c(rng)};
        auto affine = [mid](double a, double b, double e) {
            return ScalarField::from_formula([=](auto u, auto v) { return a + b * (u - mid.u) + e * sin(v - mid.v); });
        };
        ScalarField lam = ScalarField::from_formula(
            [=](auto u, auto v) { return l0 * (1.0 + l1 * (u - mid.u) + l2 * (v - mid.v)); });
        ScalarField mu = ScalarField::from_formula(
            [=](auto u, auto v) { return m0 * (1.0 + m1 * (u - mid.u) + m2 * sin(v - mid.v)); });
        ChartVectorField Z{affine(z[0], z[1], z[2]), affine(z[3], z[4], z[5])};
        ChartVectorField V{affine(w[0], w[1], w[2]), affine(w[3], w[4], w[5])};

        SurfacePair changed = pair;
        changed.xi = changed_transversal(pair.f, pair.xi, lam, Z);
        changed.xihat = changed_transversal(pair.fhat, pair.xihat, mu, V);

        const ChartPoint p{d.u0 + (0.05 + 0.9 * t(rng)) * d.width(), d.v0 + (0.05 + 0.9 * t(rng)) * d.height()};
        const PairJets a = pair_jets(pair, p, 0), b = pair_jets(changed, p, 0);
        const double W = a.W.value(), Wt = b.W.value();
        if (std::abs(Wt) < 1e-6 * std::abs(W)) {
            ++gap.skipped;
            continue;
        }
        const double psi0 = psi(pair, p), psi1 = psi(changed, p);
        gap.psi_drift = std::max(gap.psi_drift, std::abs(psi1 - psi0) / std::abs(psi0));
        const double lhs = 1.0 - b.A.value() * b.Ahat.value();
        const double rhs = (1.0 - a.A.value() * a.Ahat.value()) * Wt / (lam.value(p) * mu.value(p) * W);
        gap.identity = std::max(gap.identity, std::abs(lhs - rhs));
    }
    return gap;
}

} // namespace oracle
