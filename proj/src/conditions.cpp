#include "abdg/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "abdg/curvature.hpp"

namespace abdg {

namespace {

constexpr std::size_t kMaxDiagnostics = 20;

double max_partial(const MultiJet& a) { return std::max(std::abs(a.partial(1, 0)), std::abs(a.partial(0, 1))); }

std::string at(ChartPoint p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%.6f, %.6f)", p.u, p.v);
    return buf;
}

void note_error(PointSample& s, const std::string& what) {
    if (s.error.empty()) s.error = what;
}

CovariantDerivativeR nabla_R(const SurfaceMap& f, const TransversalField& xi, ChartPoint p, double step,
                             const Domain& domain) {
    try {
        return covariant_derivative_R(f, xi, p);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::OrderExceeded || !(step > 0)) throw;
        return covariant_derivative_R(f, xi, p, DerivativeMode::Richardson, step, &domain);
    }
}

std::vector<double> field(const std::vector<PointSample>& s, double PointSample::*m) {
    std::vector<double> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i].*m;
    return out;
}

int common_dim(const std::vector<PointSample>& s, int PointSample::*m) {
    if (s.empty()) return -1;
    const int d = s.front().*m;
    for (const auto& x : s)
        if (x.*m != d) return -1;
    return d;
}

// First finite sample of a member, for the constancy reference.
double reference(const std::vector<PointSample>& s, double PointSample::*m) {
    for (const auto& x : s)
        if (std::isfinite(x.*m)) return x.*m;
    return kNaN;
}

std::vector<PointSample> run_sweep(const SurfacePair& pair, const std::vector<ChartPoint>& pts,
                                   const SweepOptions& o) {
    const double step = 0.25 * std::min(pair.domain().width() / o.grid.nu, pair.domain().height() / o.grid.nv);
    return sweep<PointSample>(pts, [&](ChartPoint p) { return sample_pair_point(pair, p, o.curvature, step); },
                              o.exec);
}

void collect_diagnostics(ConditionReport& r) {
    std::size_t failures = 0;
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
        if (r.samples[i].error.empty()) continue;
        if (failures++ < kMaxDiagnostics) r.diagnostics.push_back(at(r.points[i]) + ": " + r.samples[i].error);
    }
    if (failures > kMaxDiagnostics)
        r.diagnostics.push_back(std::to_string(failures - kMaxDiagnostics) + " more points with evaluation errors");
}

void fill_conclusions(ConditionReport& r, const Tolerances& tol, bool curvature) {
    const auto& s = r.samples;
    r.conformal = max_record("conformality-defect", field(s, &PointSample::defect), r.points, tol.alg);
    r.psi = stats_of(field(s, &PointSample::psi));
    r.H = stats_of(field(s, &PointSample::H));
    r.Hhat = stats_of(field(s, &PointSample::Hhat));
    if (!curvature) return;
    r.curvature.push_back(max_record("nabla-R", field(s, &PointSample::nabla), r.points, tol.diff));
    r.curvature.push_back(max_record("nablahat-Rhat", field(s, &PointSample::nablahat), r.points, tol.diff));
    std::vector<double> mismatch(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        mismatch[i] = s[i].dim < 0 || s[i].dimhat < 0 ? kNaN : std::abs(s[i].dim - s[i].dimhat);
    CheckRecord dim = max_record("dim-im-R-equal", mismatch, r.points, 0.5);
    dim.note = "|dim Im R - dim Im Rhat|";
    r.curvature.push_back(dim);
    r.dim_R = common_dim(s, &PointSample::dim);
    r.dim_Rhat = common_dim(s, &PointSample::dimhat);
}

TransversalField scaled(const TransversalField& xi, double s) {
    return TransversalField(
        xi.label(), xi.domain(), [xi, s](ChartPoint p, int order) { return s * xi.jets(p, order); }, xi.max_order());
}

} // namespace

PointSample sample_pair_point(const SurfacePair& pair, ChartPoint p, bool curvature, double step) {
    PointSample s;
    MultiJet W, H;
    bool have_pair = false, have_h = false;
    try {
        const PairJets j = pair_jets(pair, p, 1);
        const Vec3<double> d = values(j.d), xi = values(j.xi), xih = values(j.xihat);
        const Vec3<double> fu = values(j.fu), fv = values(j.fv), fhu = values(j.fhu), fhv = values(j.fhv);
        s.distance = norm(d);
        s.tangency = s.distance > 0 ? std::max(tangency_residual(d, fu, fv), tangency_residual(d, fhu, fhv)) : kNaN;
        if (!(s.distance > 0)) note_error(s, "CoincidentPoints: fhat = f");
        s.A = j.A.value();
        s.Ahat = j.Ahat.value();
        s.W = j.W.value();
        s.dA = max_partial(j.A);
        s.dAhat = max_partial(j.Ahat);
        s.dW = max_partial(j.W);
        s.w_margin = std::abs(s.W) / (s.distance * norm(xi) * norm(xih));
        const double sx = norm(xi) * norm(xih);
        s.r6 = std::max(std::abs(det3(fu, xi, xih) - det3(fhu, xi, xih)) / (std::max(norm(fu), norm(fhu)) * sx),
                        std::abs(det3(fv, xi, xih) - det3(fhv, xi, xih)) / (std::max(norm(fv), norm(fhv)) * sx));
        W = j.W;
        have_pair = true;
    } catch (const Error& e) {
        note_error(s, e.what());
    }
    try {
        const SphericalRank sr = spherical_rank(pair, p);
        s.rank_margin = sr.margin;
        s.rank_wedge = sr.wedge;
    } catch (const Error& e) {
        note_error(s, e.what());
    }
    try {
        const GaussWeingartenJets g = gauss_weingarten_jets(pair.f, pair.xi, p, 1);
        s.H = g.H.value();
        s.Hhat = gauss_weingarten(pair.fhat, pair.xihat, p).H;
        H = g.H;
        have_h = true;
    } catch (const Error& e) {
        note_error(s, e.what());
    }
    if (have_pair && have_h) {
        const double k = 1.0 - s.A * s.Ahat;
        s.r5 = std::abs(std::pow(s.W, 4) * s.H * s.Hhat - std::pow(k, 4));
        s.r7 = std::abs(W.partial(1, 0) * H.partial(0, 1) - W.partial(0, 1) * H.partial(1, 0));
    }
    try {
        const Conformality c = conformality_defect(pair, p);
        s.defect = c.defect;
        s.psi = 1.0 + c.psi_minus_1;
    } catch (const Error& e) {
        note_error(s, e.what());
    }
    if (curvature) {
        try {
            const CovariantDerivativeR n = nabla_R(pair.f, pair.xi, p, step, pair.domain());
            s.nabla = n.norm;
            s.dim = n.dim_im;
        } catch (const Error& e) {
            note_error(s, e.what());
        }
        try {
            const CovariantDerivativeR n = nabla_R(pair.fhat, pair.xihat, p, step, pair.domain());
            s.nablahat = n.norm;
            s.dimhat = n.dim_im;
        } catch (const Error& e) {
            note_error(s, e.what());
        }
    }
    return s;
}

namespace {

// Rank margins with sign changes between grid neighbours counted as zeros:
// the wedge is continuous, so it vanishes between two samples of opposite
// sign even when no cell centre lands on the zero curve. The smaller margin
// of the pair is the witness.
std::vector<double> rank_margins(const std::vector<PointSample>& s, const Grid& g) {
    std::vector<double> m(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) m[i] = s[i].rank_margin;
    auto link = [&](int a, int b) {
        const double x = s[a].rank_wedge, y = s[b].rank_wedge;
        if (!(x * y < 0)) return;
        const int k = s[b].rank_margin < s[a].rank_margin ? b : a;
        if (!std::isnan(m[k])) m[k] = 0.0;
    };
    for (int i = 0; i < g.nu; ++i)
        for (int j = 0; j < g.nv; ++j) {
            const int a = i * g.nv + j;
            if (i + 1 < g.nu) link(a, a + g.nv);
            if (j + 1 < g.nv) link(a, a + 1);
        }
    return m;
}

} // namespace

bool ConditionReport::conditions_hold() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const CheckRecord& r) { return r.satisfied; });
}

ConditionReport backlund_condition_report(const SurfacePair& pair, const SweepOptions& o) {
    ConditionReport r;
    r.points = cell_centres(pair.domain(), o.grid);
    r.samples = run_sweep(pair, r.points, o);
    const auto& s = r.samples;
    const auto& pts = r.points;
    const Tolerances& tol = o.tol;

    r.conditions.push_back(max_record("condition-1", field(s, &PointSample::tangency), pts, tol.tangency));
    r.conditions.back().note = "tangency of fhat - f to both surfaces, fhat != f";
    r.conditions.push_back(min_record("condition-2", rank_margins(s, o.grid), pts, tol.alg));
    r.conditions.back().note =
        "margin of omega^2_1 ^ omega^3_1 (rank 2 of the spherical representation); 0 at a sign change between neighbours";
    r.conditions.push_back(min_record("condition-3", field(s, &PointSample::w_margin), pts, tol.alg));
    r.conditions.back().note = "|W| / (|fhat - f| |xi| |xihat|)";

    const double A0 = reference(s, &PointSample::A), Ah0 = reference(s, &PointSample::Ahat);
    std::vector<double> r4(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const PointSample& x = s[i];
        if (std::max(std::abs(x.A), std::abs(x.Ahat)) <= tol.alg) {
            r4[i] = kNaN;
            continue;
        }
        r4[i] = std::max({std::abs(x.A - A0), std::abs(x.Ahat - Ah0), x.dA, x.dAhat}) / (1.0 + std::abs(A0));
        if (std::isnan(x.dA) || std::isnan(x.dAhat)) r4[i] = kNaN;
    }
    r.conditions.push_back(max_record("condition-4", r4, pts, tol.diff));
    r.conditions.back().note = "variation of A and Ahat relative to 1 + |A|; unavailable where A = Ahat = 0";
    r.conditions.push_back(max_record("condition-5", field(s, &PointSample::r5), pts, tol.alg));
    r.conditions.back().note = "|W^4 H Hhat - (1 - A Ahat)^4|";
    r.conditions.push_back(max_record("condition-6", field(s, &PointSample::r6), pts, tol.alg));
    r.conditions.back().note = "|det(f_* Y, xi, xihat) - det(fhat_* Y, xi, xihat)| / (|f_* Y| |xi| |xihat|)";
    r.conditions.push_back(max_record("condition-7", field(s, &PointSample::r7), pts, tol.diff));
    r.conditions.back().note = "|dW ^ dH|";

    fill_conclusions(r, tol, o.curvature);
    collect_diagnostics(r);
    return r;
}

BlaschkePairReport blaschke_pair_check(const SurfaceMap& f, const SurfaceMap& fhat, const SweepOptions& o,
                                       bool require_normalization) {
    BlaschkePairReport r;
    SurfacePair base{"blaschke-pair", f, fhat, blaschke_field(f, 1), blaschke_field(fhat, 1), ""};
    const Domain& d = f.domain();
    const ChartPoint c{(d.u0 + d.u1) / 2, (d.v0 + d.v1) / 2};

    static constexpr int kSigns[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    double best = kNaN;
    std::string last_error;
    for (const auto& sg : kSigns) {
        SurfacePair trial = base;
        trial.xi = scaled(base.xi, sg[0]);
        trial.xihat = scaled(base.xihat, sg[1]);
        try {
            const PairJets j = pair_jets(trial, c, 0);
            const double gap = std::abs(j.W.value() - (1.0 - j.A.value() * j.Ahat.value()));
            if (std::isnan(best) || gap < best) {
                best = gap;
                r.xi_sign = sg[0];
                r.xihat_sign = sg[1];
                r.pair = trial;
            }
        } catch (const Error& e) {
            last_error = e.what();
        }
    }
    if (std::isnan(best)) fail(ErrorKind::SignChoiceFailed, "no sign assignment is evaluable at the centre: " + last_error);
    r.normalization_gap = best;
    if (require_normalization && !(best <= o.tol.alg))
        fail(ErrorKind::SignChoiceFailed, "best |W - (1 - A Ahat)| at the centre is " + std::to_string(best));

    r.points = cell_centres(d, o.grid);
    r.samples = run_sweep(r.pair, r.points, o);
    const auto& s = r.samples;
    const auto& pts = r.points;
    const Tolerances& tol = o.tol;

    r.conditions.push_back(max_record("blaschke-pair-i", field(s, &PointSample::tangency), pts, tol.tangency));
    r.conditions.back().note = "tangency of fhat - f to both surfaces, fhat != f";
    r.conditions.push_back(min_record("blaschke-pair-ii", rank_margins(s, o.grid), pts, tol.alg));
    r.conditions.back().note = "margin of omega^2_1 ^ omega^3_1";

    const double A0 = reference(s, &PointSample::A), Ah0 = reference(s, &PointSample::Ahat);
    const double W0 = reference(s, &PointSample::W);
    std::vector<double> r3(s.size()), r4(s.size()), r5(s.size()), r6(s.size()), r7(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const PointSample& x = s[i];
        r3[i] = std::max({std::abs(x.A - A0), std::abs(x.Ahat - Ah0), x.dA, x.dAhat}) / (1.0 + std::abs(A0));
        if (std::isnan(x.dA) || std::isnan(x.dAhat)) r3[i] = kNaN;
        r4[i] = x.w_margin <= tol.alg || std::isnan(x.dW)
                    ? kNaN
                    : std::max(std::abs(x.W - W0), x.dW) / (1.0 + std::abs(W0));
        r5[i] = std::abs(std::abs(x.W) - std::abs(1.0 - x.A * x.Ahat));
        r6[i] = std::isnan(x.H) || std::isnan(x.Hhat) ? kNaN : ((x.H > 0) != (x.Hhat > 0) ? 1.0 : 0.0);
        r7[i] = std::isnan(x.H) ? kNaN : std::abs(x.Ahat + (x.H > 0 ? 1.0 : -1.0) * x.A);
    }
    r.conditions.push_back(max_record("blaschke-pair-iii", r3, pts, tol.diff));
    r.conditions.back().note = "variation of A and Ahat relative to 1 + |A|";
    r.conditions.push_back(max_record("blaschke-pair-iv", r4, pts, tol.diff));
    r.conditions.back().note = "variation of W relative to 1 + |W|; unavailable where W vanishes";
    r.conditions.push_back(max_record("blaschke-pair-v", r5, pts, tol.alg));
    r.conditions.back().note = "||W| - |1 - A Ahat||";
    r.conditions.push_back(max_record("blaschke-pair-vi", r6, pts, 0.5));
    r.conditions.back().note = "1 where sign det h != sign det hhat";
    r.conditions.push_back(max_record("blaschke-pair-vii", r7, pts, tol.alg));
    r.conditions.back().note = "|Ahat + eps A|, eps = sign det h";

    fill_conclusions(r, tol, o.curvature);
    collect_diagnostics(r);
    return r;
}

} // namespace abdg
