#include "abdg/a00.hpp"

#include <algorithm>
#include <cmath>

namespace abdg {

namespace {

struct Rhs {
    MultiJet alpha, beta;
};

// Right-hand sides of the alpha and beta equations, two orders below gamma.
Rhs normal_form(const MultiJet& g, const MultiJet& H, double W) {
    const MultiJet gx = g.du(), gy = g.dv();
    const MultiJet em = exp(-2.0 * g.truncated(gx.order())) * gy;  // e^{-2g} g_y
    const MultiJet ep = exp(2.0 * g.truncated(gx.order())) * gx;   // e^{2g} g_x
    const int n = gx.order() - 1;
    const MultiJet Hn = H.truncated(n), Hx = H.du().truncated(n), Hy = H.dv().truncated(n);
    const MultiJet W2 = MultiJet::constant(W * W, n);
    Rhs r;
    r.alpha = W2 * Hy * em.truncated(n) + W2 * Hn * em.dv() + ep.du();
    r.beta = -W2 * em.dv() - ep.du() / Hn + Hx * ep.truncated(n) / (Hn * Hn);
    return r;
}

double rel(double lhs, double rhs) { return std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + std::abs(rhs)); }

std::string at(ChartPoint p) { return "(" + std::to_string(p.u) + ", " + std::to_string(p.v) + ")"; }

} // namespace

A00Residuals a00_residuals(const A00State& s, int nx, int ny, double tol) {
    if (s.W == 0.0) fail(ErrorKind::ZeroW, "normal form needs W != 0");
    A00Residuals r;
    const Domain& d = s.domain;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            const ChartPoint p{d.u0 + (i + 0.5) * d.width() / nx, d.v0 + (j + 0.5) * d.height() / ny};
            const MultiJet g = s.gamma.jets(p, 3), H = s.H.jets(p, 2);
            const MultiJet al = s.alpha.jets(p, 1), be = s.beta.jets(p, 1);
            const double gx = g.partial(1, 0), gy = g.partial(0, 1);
            if (std::abs(gx) < 1e-10 || std::abs(gy) < 1e-10)
                fail(ErrorKind::GammaCritical, "gamma_x or gamma_y vanishes at " + at(p));
            if (std::abs(H.value()) < 1e-12) fail(ErrorKind::DegenerateSurface, "H vanishes at " + at(p));
            const Rhs rhs = normal_form(g, H, s.W);
            const double a = al.value(), b = be.value(), h = H.value();
            const double ay = al.partial(0, 1), bx = be.partial(1, 0), ax = al.partial(1, 0), by = be.partial(0, 1);
            const double sum = a + b * h;
            r.alpha_eq = std::max(r.alpha_eq, rel(a, rhs.alpha.value()));
            r.beta_eq = std::max(r.beta_eq, rel(b, rhs.beta.value()));
            r.alpha_y_eq = std::max(r.alpha_y_eq, rel(ay, sum * gy));
            r.beta_x_eq = std::max(r.beta_x_eq, rel(bx, -sum * gx / h));
            const double e2g = std::exp(2.0 * g.value());
            const double hx = H.partial(1, 0), hy = H.partial(0, 1);
            r.identity = std::max(r.identity, rel(sum, s.W * s.W * hy * gy / e2g + hx / h * e2g * gx));
            r.max_dalpha = std::max({r.max_dalpha, std::abs(ax), std::abs(ay)});
            r.max_dbeta = std::max({r.max_dbeta, std::abs(bx), std::abs(by)});
            r.max_sum = std::max(r.max_sum, std::abs(sum));
            const MultiJet bh = be * H.truncated(1), q = al / (s.W * s.W * H.truncated(1));
            r.max_d_betaH = std::max({r.max_d_betaH, std::abs(bh.partial(1, 0)), std::abs(bh.partial(0, 1))});
            r.max_d_alpha_W2H = std::max({r.max_d_alpha_W2H, std::abs(q.partial(1, 0)), std::abs(q.partial(0, 1))});
        }
    r.alpha_constant = r.max_dalpha < tol;
    r.beta_constant = r.max_dbeta < tol;
    r.nabla_symmetric = r.max_sum < tol && r.max_d_betaH < tol;
    r.nablahat_symmetric = r.max_sum < tol && r.max_d_alpha_W2H < tol;
    return r;
}

A00State a00_manufactured(ScalarField gamma, ScalarField H, double W, Domain domain) {
    A00State s;
    s.gamma = gamma;
    s.H = H;
    s.W = W;
    s.domain = domain;
    s.alpha = ScalarField([gamma, H, W](ChartPoint p, int order) {
        return normal_form(gamma.jets(p, order + 2), H.jets(p, order + 1), W).alpha;
    });
    s.beta = ScalarField([gamma, H, W](ChartPoint p, int order) {
        return normal_form(gamma.jets(p, order + 2), H.jets(p, order + 1), W).beta;
    });
    return s;
}

A00State a00_symmetric_instance(double a, Domain domain) {
    // With H = W = 1 and e^{2g} = E(s), the two equations reduce to
    // E + k/E = Q(s), k = -1/4, Q = a s^2 + s; E is the positive root.
    A00State s;
    s.W = 1.0;
    s.domain = domain;
    s.gamma = ScalarField::from_formula([a](auto x, auto y) {
        const auto t = x + 0.5 * y;
        const auto Q = a * t * t + t;
        return 0.5 * log((Q + sqrt(Q * Q + 1.0)) * 0.5);
    });
    s.H = ScalarField::constant(1.0);
    s.alpha = ScalarField::constant(a);
    s.beta = ScalarField::constant(-a);
    return s;
}

} // namespace abdg
