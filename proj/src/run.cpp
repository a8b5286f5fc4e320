#include "abdg/run.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>

#include "abdg/a00.hpp"
#include "abdg/curvature.hpp"
#include "abdg/metric.hpp"

namespace abdg {

namespace {

constexpr std::size_t kMaxErrorsPerCheck = 5;

std::string at(ChartPoint p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%.6f, %.6f)", p.u, p.v);
    return buf;
}

// Per-point columns of one check; NaN where the evaluation threw.
template <std::size_t N> struct Columns {
    std::vector<std::array<double, N>> rows;
    std::vector<std::string> errors;

    std::vector<double> col(std::size_t k) const {
        std::vector<double> out(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) out[i] = rows[i][k];
        return out;
    }
};

template <std::size_t N>
Columns<N> evaluate(const std::vector<ChartPoint>& pts, Execution exec,
                    const std::function<std::array<double, N>(ChartPoint)>& fn) {
    Columns<N> c;
    c.rows.resize(pts.size());
    c.errors.resize(pts.size());
    for_each_index(
        static_cast<int>(pts.size()),
        [&](int i) {
            try {
                c.rows[i] = fn(pts[i]);
            } catch (const Error& e) {
                c.rows[i].fill(kNaN);
                c.errors[i] = e.what();
            }
        },
        exec);
    return c;
}

class Builder {
public:
    Builder(RunResult& out, const std::vector<ChartPoint>& pts) : out_(out), pts_(pts) {}

    void add(const std::string& check, CheckRecord r, std::string note = "") {
        if (!note.empty()) r.note = std::move(note);
        out_.records.emplace_back(check, std::move(r));
    }
    void max(const std::string& check, const std::string& name, const std::vector<double>& v, double tol,
             std::string note = "") {
        add(check, max_record(name, v, pts_, tol), std::move(note));
    }
    template <std::size_t N> void errors(const std::string& check, const Columns<N>& c) {
        std::size_t n = 0;
        for (std::size_t i = 0; i < c.errors.size(); ++i) {
            if (c.errors[i].empty()) continue;
            if (n++ < kMaxErrorsPerCheck) out_.diagnostics.push_back(check + " " + at(pts_[i]) + ": " + c.errors[i]);
        }
        if (n > kMaxErrorsPerCheck)
            out_.diagnostics.push_back(check + ": " + std::to_string(n - kMaxErrorsPerCheck) + " more points failed");
    }
    void stats(const std::string& prefix, const std::vector<double>& v) {
        const Stats s = stats_of(v);
        out_.scalars[prefix + "_min"] = s.min;
        out_.scalars[prefix + "_max"] = s.max;
        out_.scalars[prefix + "_mean"] = s.mean;
    }

private:
    RunResult& out_;
    const std::vector<ChartPoint>& pts_;
};

FrameBuilder chart_frame(const SurfaceMap& f, const TransversalField& xi) {
    return [f, xi](ChartPoint q, int order) {
        const JetVec3 f1 = f.jets(q, order + 1);
        return FrameJets{truncated(f1, order), {du(f1), dv(f1), xi.jets(q, order)}};
    };
}

bool requested(const std::vector<std::string>& checks, const std::string& c) {
    return std::find(checks.begin(), checks.end(), c) != checks.end();
}

void validate(const RunConfig& c) {
    if (c.pair.empty() == c.surface.empty()) fail(ErrorKind::DomainError, "select exactly one of --pair or --surface");
    if (c.grid.nu < 8 || c.grid.nv < 8)
        fail(ErrorKind::DomainError, "grid must be at least 8x8, got " + std::to_string(c.grid.nu) + "x" +
                                         std::to_string(c.grid.nv));
    if (c.order < 3 || c.order > 6) fail(ErrorKind::DomainError, "--order must lie in [3, 6]");
    if (!(c.tol.alg > 0) || !(c.tol.diff > 0) || !(c.tol.tangency > 0))
        fail(ErrorKind::DomainError, "tolerances must be positive");
    if (c.transversal != "blaschke" && c.transversal != "euclidean")
        fail(ErrorKind::DomainError, "--transversal must be blaschke or euclidean");
    for (const auto& k : c.checks) {
        if (!requested(known_checks(), k)) fail(ErrorKind::DomainError, "unknown check '" + k + "'");
        if (is_pair_check(k) && c.pair.empty()) fail(ErrorKind::DomainError, "check '" + k + "' needs a pair");
    }
}

// Checks that apply to one surface with a transversal field.
void surface_checks(const std::string& tag, const SurfaceMap& f, const TransversalField& xi,
                    const std::vector<std::string>& checks, const std::vector<ChartPoint>& pts, Execution exec,
                    const Tolerances& tol, double step, Builder& b, std::vector<double>* H, std::vector<double>* nabla) {
    const std::string sfx = tag.empty() ? "" : "-" + tag;
    if (requested(checks, "gw")) {
        const FrameBuilder frame = chart_frame(f, xi);
        const auto c = evaluate<3>(pts, exec, [&](ChartPoint p) {
            return std::array<double, 3>{structural_residuals(frame, p, DerivativeMode::Jet).max(),
                                         maurer_cartan_reconstruction(frame, p), gauss_weingarten(f, xi, p).H};
        });
        b.max("gw", "gw-structure" + sfx, c.col(0), tol.alg, "structure equations of (f; f_u, f_v, xi)");
        b.max("gw", "gw-reconstruction" + sfx, c.col(1), tol.alg, "d frame against the frame expanded in its forms");
        b.stats("H" + (tag.empty() ? std::string() : "_" + tag), c.col(2));
        if (H) *H = c.col(2);
        b.errors("gw", c);
    }
    if (requested(checks, "blaschke")) {
        const auto c = evaluate<2>(pts, exec, [&](ChartPoint p) {
            const BlaschkeNormal n = blaschke_normal(f, p);
            return std::array<double, 2>{std::max(std::abs(n.gw.tau[0]), std::abs(n.gw.tau[1])),
                                         std::abs(std::abs(n.gw.H) - 1.0)};
        });
        b.max("blaschke", "blaschke-equiaffine" + sfx, c.col(0), kBlaschkeTol, "|tau| of the Blaschke normal");
        b.max("blaschke", "blaschke-volume" + sfx, c.col(1), kBlaschkeTol, "||H| - 1| of the Blaschke normal");
        b.errors("blaschke", c);
    }
    if (requested(checks, "chern-terng")) {
        const auto c = evaluate<2>(pts, exec, [&](ChartPoint p) {
            const Minimality m = affine_minimality(f, p);
            return std::array<double, 2>{std::abs(m.trace + m.proxy) / (1.0 + std::abs(m.trace)), m.trace};
        });
        b.max("chern-terng", "chern-terng-agreement" + sfx, c.col(0), kChernTerngTol,
              "tr S against the 2-form proxy, relative to 1 + |tr S|");
        b.stats("trS" + (tag.empty() ? std::string() : "_" + tag), c.col(1));
        b.errors("chern-terng", c);
    }
    if (requested(checks, "curvature") && tag.empty()) {
        const Domain& d = f.domain();
        const auto c = evaluate<2>(pts, exec, [&](ChartPoint p) {
            CovariantDerivativeR n;
            try {
                n = covariant_derivative_R(f, xi, p);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::OrderExceeded) throw;
                n = covariant_derivative_R(f, xi, p, DerivativeMode::Richardson, step, &d);
            }
            return std::array<double, 2>{n.norm, static_cast<double>(n.dim_im)};
        });
        b.max("curvature", "nabla-R", c.col(0), tol.diff);
        b.stats("dim_im_R", c.col(1));
        if (nabla) *nabla = c.col(0);
        b.errors("curvature", c);
    }
}

// A check that throws as a whole (not per point) becomes one failing record.
void guarded(const std::string& check, RunResult& out, Builder& b, const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        CheckRecord r;
        r.name = check;
        r.worst_residual = kNaN;
        r.note = e.what();
        b.add(check, r);
        out.diagnostics.push_back(check + ": " + e.what());
    }
}

void pair_check(const std::string& check, const SurfacePair& pair, const SweepOptions& so,
                const ConditionReport& rep, const std::vector<ChartPoint>& pts, RunResult& out, Builder& b);

void pair_checks(const SurfacePair& pair, const RunConfig& cfg, const std::vector<std::string>& checks,
                 const std::vector<ChartPoint>& pts, Execution exec, RunResult& out, Builder& b) {
    const Tolerances& tol = cfg.tol;
    SweepOptions so;
    so.grid = cfg.grid;
    so.tol = tol;
    so.exec = exec;
    so.curvature = requested(checks, "curvature");
    const ConditionReport rep = backlund_condition_report(pair, so);
    for (const auto& d : rep.diagnostics) out.diagnostics.push_back("sample " + d);
    out.scalars["psi_min"] = rep.psi.min;
    out.scalars["psi_max"] = rep.psi.max;
    out.scalars["psi_mean"] = rep.psi.mean;
    out.scalars["H_min"] = rep.H.min;
    out.scalars["H_max"] = rep.H.max;
    out.scalars["H_mean"] = rep.H.mean;
    out.scalars["Hhat_min"] = rep.Hhat.min;
    out.scalars["Hhat_max"] = rep.Hhat.max;
    out.scalars["Hhat_mean"] = rep.Hhat.mean;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const PointSample& s = rep.samples[i];
        out.rows.push_back({pts[i], s.psi, s.H, s.Hhat, s.W, s.A, s.Ahat, s.defect, s.nabla});
    }

    for (const auto& check : known_checks()) {
        if (!requested(checks, check)) continue;
        guarded(check, out, b, [&] { pair_check(check, pair, so, rep, pts, out, b); });
    }
}

void pair_check(const std::string& check, const SurfacePair& pair, const SweepOptions& so,
                const ConditionReport& rep, const std::vector<ChartPoint>& pts, RunResult& out, Builder& b) {
    const Tolerances& tol = so.tol;
    const Execution exec = so.exec;
    {
        if (check == "gw" || check == "blaschke" || check == "chern-terng") {
            surface_checks("f", pair.f, pair.xi, {check}, pts, exec, tol, 0.0, b, nullptr, nullptr);
            surface_checks("fhat", pair.fhat, pair.xihat, {check}, pts, exec, tol, 0.0, b, nullptr, nullptr);
        } else if (check == "psi") {
            std::vector<double> dev(pts.size()), disagree(pts.size());
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const PointSample& s = rep.samples[i];
                dev[i] = std::abs(s.psi - 1.0);
                disagree[i] = std::isnan(dev[i]) || std::isnan(s.defect)
                                  ? kNaN
                                  : ((dev[i] < tol.alg) != (s.defect < tol.alg) ? 1.0 : 0.0);
            }
            b.max("psi", "psi-one", dev, tol.alg, "|psi - 1|");
            b.add("psi", rep.conformal);
            b.max("psi", "psi-criterion", disagree, 0.5, "1 where psi = 1 and conformality disagree");
        } else if (check == "rank") {
            const auto c = evaluate<3>(pts, exec, [&](ChartPoint p) {
                const SphericalRank r = spherical_rank(pair, p);
                return std::array<double, 3>{r.agree ? 0.0 : 1.0, r.lemma_residual, static_cast<double>(r.rank)};
            });
            b.max("rank", "rank-agreement", c.col(0), 0.5, "1 where the wedge and the direction Jacobian disagree");
            b.max("rank", "rank-lemma-identity", c.col(1), 1e-7, "chart determinant identity of the rank lemma");
            b.stats("rank", c.col(2));
            b.errors("rank", c);
        } else if (check == "conditions") {
            for (const auto& r : rep.conditions) b.add("conditions", r);
            CheckRecord conf = rep.conformal;
            conf.name = "conclusion-conformal";
            b.add("conditions", conf);
        } else if (check == "curvature") {
            for (const auto& r : rep.curvature) b.add("curvature", r);
            const auto c = evaluate<1>(pts, exec, [&](ChartPoint p) {
                const FrameCurvatureCheck f = frame_curvature_check(pair, p);
                return std::array<double, 1>{std::max({f.r121, f.r122, f.r121hat, f.r122hat, f.ric})};
            });
            b.max("curvature", "frame-curvature", c.col(0), tol.alg,
                  "R(X1, X2) X1, R(X1, X2) X2 and Ric in the pair frames against the Christoffel R");
            b.errors("curvature", c);
            out.scalars["dim_im_R"] = rep.dim_R;
            out.scalars["dim_im_Rhat"] = rep.dim_Rhat;
        } else if (check == "metric") {
            const auto c = evaluate<5>(pts, exec, [&](ChartPoint p) {
                const MetricReconstruction m = metric_reconstruction(pair, p);
                const double cos_gap = m.kind == MetricCase::Euclidean || m.kind == MetricCase::LorentzTimelike
                                           ? std::abs(m.cos_angle - m.cos_expected)
                                           : 0.0;
                return std::array<double, 5>{m.dg_residual,
                                             std::max(std::abs(m.kappa - m.delta), std::abs(m.kappahat - m.delta)),
                                             std::max(std::abs(m.angle_invariant - m.angle_expected), cos_gap),
                                             m.kappa, static_cast<double>(m.delta)};
            });
            b.max("metric", "metric-dg", c.col(0), tol.alg, "max |d G| / max |G|");
            b.max("metric", "metric-kappa", c.col(1), tol.diff, "|kappa - delta|, |kappahat - delta|");
            b.max("metric", "metric-angle", c.col(2), tol.alg, "angle invariant between xi and xihat");
            b.stats("kappa", c.col(3));
            b.errors("metric", c);
            const Domain& d = pair.domain();
            try {
                const ChartPoint centre{(d.u0 + d.u1) / 2, (d.v0 + d.v1) / 2};
                const MetricReconstruction m = metric_reconstruction(pair, centre);
                out.labels["case"] = std::string(to_string(m.kind));
                out.scalars["delta"] = m.delta;
                out.scalars["kappa"] = m.kappa;
                out.scalars["kappahat"] = m.kappahat;
            } catch (const Error& e) {
                out.labels["case"] = "unavailable";
                out.diagnostics.push_back(std::string("metric centre: ") + e.what());
            }
        } else if (check == "blaschke-pair") {
            const BlaschkePairReport r = blaschke_pair_check(pair.f, pair.fhat, so);
            for (const auto& x : r.conditions) b.add("blaschke-pair", x);
            CheckRecord conf = r.conformal;
            conf.name = "blaschke-pair-conformal";
            b.add("blaschke-pair", conf);
            for (auto x : r.curvature) {
                x.name = "blaschke-pair-" + x.name;
                b.add("blaschke-pair", x);
            }
            out.scalars["blaschke_pair_xi_sign"] = r.xi_sign;
            out.scalars["blaschke_pair_xihat_sign"] = r.xihat_sign;
            out.scalars["blaschke_pair_normalization_gap"] = r.normalization_gap;
            for (const auto& d : r.diagnostics) out.diagnostics.push_back("blaschke-pair " + d);
        }
    }
}

void a00_check(const RunConfig& cfg, RunResult& out, Builder& b) {
    const A00State pos = a00_symmetric_instance(cfg.a00_a);
    const A00Residuals r = a00_residuals(pos, cfg.grid.nu, cfg.grid.nv, kA00Tol);
    auto rec = [](std::string name, double worst, double tol, std::string note) {
        CheckRecord c;
        c.name = std::move(name);
        c.worst_residual = worst;
        c.tolerance = tol;
        c.satisfied = worst < tol;
        c.note = std::move(note);
        return c;
    };
    b.add("a00", rec("a00-equations", std::max({r.alpha_eq, r.beta_eq, r.alpha_y_eq, r.beta_x_eq}), kA00Tol,
                     "four equations of the A = Ahat = 0 system on the constant-alpha instance"));
    b.add("a00", rec("a00-identity", r.identity, kA00Tol, "alpha + beta H identity"));
    const bool match = r.nabla_symmetric == r.alpha_constant && r.nablahat_symmetric == r.beta_constant;
    b.add("a00", rec("a00-verdicts", match ? 0.0 : 1.0, 0.5, "curvature verdicts against constancy of alpha, beta"));
    out.scalars["a00_max_dalpha"] = r.max_dalpha;
    out.scalars["a00_max_dbeta"] = r.max_dbeta;
}

} // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> k = {"gw",     "blaschke", "psi",         "rank",         "conditions",
                                               "curvature", "metric", "a00", "chern-terng", "blaschke-pair"};
    return k;
}

bool is_pair_check(const std::string& c) {
    return c == "psi" || c == "rank" || c == "conditions" || c == "metric" || c == "blaschke-pair";
}

std::vector<std::string> default_checks(bool pair) {
    if (pair) return {"psi", "rank", "conditions", "curvature"};
    return {"gw", "blaschke", "curvature", "chern-terng"};
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DomainError:
    case ErrorKind::UnknownEntry:
    case ErrorKind::ParamOutOfRange:
    case ErrorKind::ParseError: return 2;
    default: return 3;
    }
}

RunResult run_checks(const RunConfig& cfg, Execution exec) {
    validate(cfg);
    std::vector<std::string> checks = cfg.checks.empty() ? default_checks(!cfg.pair.empty()) : cfg.checks;
    std::vector<std::string> ordered;
    for (const auto& k : known_checks())
        if (requested(checks, k)) ordered.push_back(k);

    RunResult out;
    out.checks = ordered;
    const int budget = cfg.order + 2;
    if (!cfg.pair.empty()) {
        SurfacePair pair = make_pair(cfg.pair, cfg.params);
        pair.f = pair.f.with_order_budget(budget);
        pair.fhat = pair.fhat.with_order_budget(budget);
        if (!pair.warning.empty()) out.diagnostics.push_back("warning: " + pair.warning);
        const std::vector<ChartPoint> pts = cell_centres(pair.domain(), cfg.grid);
        Builder b(out, pts);
        pair_checks(pair, cfg, ordered, pts, exec, out, b);
        if (requested(ordered, "a00")) guarded("a00", out, b, [&] { a00_check(cfg, out, b); });
    } else {
        const SurfaceMap f = make_surface(cfg.surface, cfg.params, cfg.expression).with_order_budget(budget);
        const TransversalField xi = cfg.transversal == "euclidean" ? euclidean_normal(f) : blaschke_field(f);
        const std::vector<ChartPoint> pts = cell_centres(f.domain(), cfg.grid);
        Builder b(out, pts);
        const double step = 0.25 * std::min(f.domain().width() / cfg.grid.nu, f.domain().height() / cfg.grid.nv);
        std::vector<double> H, nabla;
        surface_checks("", f, xi, ordered, pts, exec, cfg.tol, step, b, &H, &nabla);
        if (requested(ordered, "a00")) guarded("a00", out, b, [&] { a00_check(cfg, out, b); });
        for (std::size_t i = 0; i < pts.size(); ++i) {
            CsvRow row;
            row.p = pts[i];
            if (!H.empty()) row.H = H[i];
            if (!nabla.empty()) row.nabla = nabla[i];
            out.rows.push_back(row);
        }
    }
    const bool ok = std::all_of(out.records.begin(), out.records.end(), [](const auto& r) { return r.second.satisfied; });
    out.exit_code = ok ? 0 : 1;
    out.status = ok ? "ok" : "check-failure";
    return out;
}

} // namespace abdg
