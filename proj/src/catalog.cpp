#include "abdg/catalog.hpp"

#include <cmath>
#include <numbers>

#include "abdg/expr.hpp"

namespace abdg {

namespace {

constexpr double kPi = std::numbers::pi;

using Frame3 = std::array<JetVec3, 3>;

MultiJet var(ChartPoint p, int axis, int order) { return MultiJet::variable(axis == 0 ? p.u : p.v, axis, order); }

JetVec3 pseudosphere(const MultiJet& u, const MultiJet& v) {
    const MultiJet s = sech(u);
    return {s * cos(v), s * sin(v), u - tanh(u)};
}

// Orthonormal frame of the pseudosphere: e1 along f_u, e2 along f_v, n = e1 x e2.
Frame3 pseudosphere_frame(const MultiJet& u, const MultiJet& v) {
    const MultiJet s = sech(u);
    JetVec3 e1{-cos(v) * s, -sin(v) * s, tanh(u)};
    JetVec3 e2{-sin(v), cos(v), MultiJet(0.0)};
    return {e1, e2, cross(e1, e2)};
}

std::vector<ParamSpec> classical_params(double sigma, double phase) {
    return {{"sigma", 1e-3, kPi - 1e-3, sigma, "angle between the unit normals"},
            {"L", 1e-3, 1e3, 1.0, "distance |fhat - f|"},
            {"phase", -20.0, 20.0, phase, "soliton phase"},
            {"umin", 0.05, 6.0, 1.6, "chart u lower bound"},
            {"umax", 0.05, 6.0, 2.6, "chart u upper bound"},
            {"vmin", -3.0, 3.0, -0.5, "chart v lower bound"},
            {"vmax", -3.0, 3.0, 0.5, "chart v upper bound"}};
}

std::vector<ParamSpec> with(std::vector<ParamSpec> base, std::vector<ParamSpec> extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
}

ClassicalParams classical_from(const Params& p) {
    ClassicalParams c;
    c.sigma = p.at("sigma");
    c.L = p.at("L");
    c.phase = p.at("phase");
    c.domain = {p.at("umin"), p.at("umax"), p.at("vmin"), p.at("vmax")};
    if (!(c.domain.u0 < c.domain.u1) || !(c.domain.v0 < c.domain.v1))
        fail(ErrorKind::ParamOutOfRange, "empty chart rectangle");
    return c;
}

VectorField field(std::string label, Domain d, VectorField::Evaluator eval, int budget = kMaxJetOrder) {
    return VectorField(std::move(label), d, std::move(eval), budget);
}

// Data of the focal geometry at one point, everything as jets of `order`.
struct FocalJets {
    JetVec3 f, fhat, n, w;
};

// f = c * pseudosphere, w = unit tangent at the Backlund angle + eps, fhat =
// f + rho w with rho making the line f + t w tangent to fhat.
FocalJets focal_jets(const ClassicalParams& cp, double eps, ChartPoint p, int order) {
    const int k = order + 1;
    const MultiJet u = var(p, 0, k), v = var(p, 1, k);
    const double c = cp.L / std::sin(cp.sigma);
    const Frame3 e = pseudosphere_frame(u, v);
    const MultiJet th = backlund_angle(u, v, cp.sigma, cp.phase) + eps;
    const JetVec3 f = c * pseudosphere(u, v);
    const JetVec3 w = cos(th) * e[0] + sin(th) * e[1];
    const JetVec3 wu = du(w), wv = dv(w), fu = du(f), fv = dv(f);
    const JetVec3 wt = truncated(w, order);
    const MultiJet rho = -(det3(wt, wu, fv) + det3(wt, fu, wv)) / det3(wt, wu, wv);
    FocalJets r;
    r.f = truncated(f, order);
    r.w = wt;
    r.fhat = r.f + rho * wt;
    r.n = truncated(e[2], order);
    return r;
}

void require_transversal_everywhere(const SurfacePair& pair, int samples = 9) {
    const Domain& d = pair.domain();
    for (int i = 0; i < samples; ++i)
        for (int j = 0; j < samples; ++j) {
            const ChartPoint p{d.u0 + (i + 0.5) * d.width() / samples, d.v0 + (j + 0.5) * d.height() / samples};
            try {
                const PairJets pj = pair_jets(pair, p, 0);
                check_frame(values(pj.fu), values(pj.fv), values(pj.xi));
                check_frame(values(pj.fhu), values(pj.fhv), values(pj.xihat));
            } catch (const Error& e) {
                fail(ErrorKind::ConstructionFailed, pair.label + ": " + e.what());
            }
        }
}

} // namespace

MultiJet backlund_angle(const MultiJet& u, const MultiJet& v, double sigma, double phase) {
    const double a = std::tan(sigma / 2), k = (a - 1) / (a + 1);
    const MultiJet g = a * (u + v) / 2.0 + (u - v) / (2.0 * a) + phase;
    return 2.0 * atan(k * (exp(-u) - exp(g)) / (1.0 + exp(g - u)));
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = [] {
        const std::vector<ParamSpec> extent = {{"extent", 0.05, 10.0, 1.0, "chart is [-extent, extent]^2"}};
        const auto cl = classical_params(kPi / 3, 2.65);
        std::vector<CatalogEntry> e = {
            {"elliptic-paraboloid", EntryKind::Surface, extent, "(u, v, (u^2 + v^2)/2); Blaschke normal (0, 0, 1)"},
            {"hyperbolic-paraboloid", EntryKind::Surface, extent, "(u, v, (u^2 - v^2)/2); Blaschke normal (0, 0, 1)"},
            {"unit-sphere", EntryKind::Surface, {{"lat", 0.1, 1.5, 1.2, "latitude range [-lat, lat]"}},
             "(cos u cos v, cos u sin v, sin u), v in [-1.5, 1.5]; Blaschke normal -f"},
            {"pseudosphere", EntryKind::Surface,
             {{"umin", 0.05, 6.0, 0.5, "chart u lower bound"}, {"umax", 0.05, 6.0, 2.5, "chart u upper bound"}},
             "(sech u cos v, sech u sin v, u - tanh u), v in [-1, 1]; K = -1"},
            {"graph", EntryKind::Surface, extent, "(u, v, expr(u, v)); expression given with --expr"},
            {"classical", EntryKind::Pair, cl,
             "pseudosphere scaled to K = -sin^2(sigma)/L^2 and its one-soliton Backlund transform; unit normals"},
            {"classical-b", EntryKind::Pair, classical_params(kPi / 4, 0.15), "classical pair at sigma = pi/4"},
            {"focal", EntryKind::Pair,
             with(cl, {{"eps", -0.3, 0.3, 0.05, "rotation of the congruence off the Backlund angle"}}),
             "focal surfaces of a rotated congruence; A = Ahat = cos sigma, |H| = 1; not conformal for eps != 0"},
            {"parallel", EntryKind::Pair,
             with(cl, {{"eps", -0.3, 0.3, 0.0, "rotation of the congruence off the Backlund angle"},
                       {"lambda", 0.05, 20.0, 2.0, "xihat = xi / lambda"}}),
             "focal geometry with constant parallel transversals"},
            {"translate", EntryKind::Pair, {},
             "cylinder and its translate along the rulings; spherical representation of rank 0"},
            {"rescaled-xi", EntryKind::Pair, with(cl, {{"c", 0.05, 20.0, 1.3, "constant factor on xi"}}),
             "classical pair with xi scaled by c"},
        };
        const char* spoil[7] = {
            "fhat translated by 1e-7 L along the normal at the centre (breaks 1)",
            "domain centred on a rank drop of the spherical representation (breaks 2)",
            "xihat replaced by xi, so W = 0 (breaks 3)",
            "xihat scaled by 1 + 0.1 u (breaks 4)",
            "focal pair at eps = 0.05 (breaks 5)",
            "xihat + 0.2 (fhat - f) (breaks 6)",
            "xi, xihat rescaled and tilted within span{xi, xihat} (breaks 7)",
        };
        for (int i = 0; i < 7; ++i)
            e.push_back({"spoiler-" + std::to_string(i + 1), EntryKind::Pair, cl, spoil[i]});
        return e;
    }();
    return entries;
}

const CatalogEntry& find_entry(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return e;
    fail(ErrorKind::UnknownEntry, "no catalog entry named '" + name + "'");
}

Params resolve_params(const CatalogEntry& entry, const Params& given) {
    Params r;
    for (const auto& s : entry.params) r[s.name] = s.def;
    for (const auto& [k, val] : given) {
        const ParamSpec* spec = nullptr;
        for (const auto& s : entry.params)
            if (s.name == k) spec = &s;
        if (!spec) fail(ErrorKind::UnknownEntry, "'" + entry.name + "' has no parameter '" + k + "'");
        if (!(val >= spec->lo && val <= spec->hi))
            fail(ErrorKind::ParamOutOfRange, k + " = " + std::to_string(val) + " outside [" + std::to_string(spec->lo) +
                                                 ", " + std::to_string(spec->hi) + "]");
        r[k] = val;
    }
    return r;
}

SurfaceMap make_surface(const std::string& name, const Params& params, const std::string& expression) {
    const CatalogEntry& entry = find_entry(name);
    if (entry.kind != EntryKind::Surface) fail(ErrorKind::UnknownEntry, "'" + name + "' is a pair, not a surface");
    const Params p = resolve_params(entry, params);
    if (name == "elliptic-paraboloid" || name == "hyperbolic-paraboloid") {
        const double e = p.at("extent"), sgn = name[0] == 'e' ? 1.0 : -1.0;
        return SurfaceMap::from_formula(name, {-e, e, -e, e}, [sgn](auto u, auto v) {
            return JetVec3{u, v, (u * u + sgn * v * v) * 0.5};
        });
    }
    if (name == "unit-sphere") {
        const double lat = p.at("lat");
        return SurfaceMap::from_formula(name, {-lat, lat, -1.5, 1.5}, [](auto u, auto v) {
            return JetVec3{cos(u) * cos(v), cos(u) * sin(v), sin(u)};
        });
    }
    if (name == "pseudosphere") {
        if (!(p.at("umin") < p.at("umax"))) fail(ErrorKind::ParamOutOfRange, "umin must be below umax");
        return SurfaceMap::from_formula(name, {p.at("umin"), p.at("umax"), -1.0, 1.0},
                                        [](auto u, auto v) { return pseudosphere(u, v); });
    }
    if (expression.empty()) fail(ErrorKind::ParamOutOfRange, "graph needs an expression");
    const Expression ex = Expression::parse(expression);
    const double e = p.at("extent");
    return SurfaceMap::from_formula("graph(" + expression + ")", {-e, e, -e, e},
                                    [ex](auto u, auto v) { return JetVec3{u, v, ex(u, v)}; });
}

SurfacePair make_classical_pair(const ClassicalParams& cp) {
    const double s = std::sin(cp.sigma), co = std::cos(cp.sigma);
    if (std::abs(s) < 1e-6) fail(ErrorKind::ParamOutOfRange, "sigma must have sin sigma != 0");
    const double c = cp.L / s;
    const ClassicalParams q = cp;
    SurfacePair pair;
    pair.label = "classical";
    pair.f = SurfaceMap::from_formula("f", cp.domain, [c](auto u, auto v) { return c * pseudosphere(u, v); });
    pair.fhat = SurfaceMap::from_formula("fhat", cp.domain, [c, s, q](auto u, auto v) {
        const Frame3 e = pseudosphere_frame(u, v);
        const MultiJet th = backlund_angle(u, v, q.sigma, q.phase);
        return c * (pseudosphere(u, v) + s * (cos(th) * e[0] + sin(th) * e[1]));
    });
    pair.xi = SurfaceMap::from_formula("xi", cp.domain, [](auto u, auto v) { return pseudosphere_frame(u, v)[2]; });
    pair.xihat = SurfaceMap::from_formula("xihat", cp.domain, [s, co, q](auto u, auto v) {
        const Frame3 e = pseudosphere_frame(u, v);
        const MultiJet th = backlund_angle(u, v, q.sigma, q.phase);
        return co * e[2] + s * (-sin(th) * e[0] + cos(th) * e[1]);
    });
    if (std::abs(co) < 1e-12) pair.warning = "cos sigma = 0: A = Ahat = 0, condition 4 pipeline not applicable";
    const ClassicalValidation val = validate_classical(pair, cp.sigma, cp.L);
    if (!val.ok()) {
        // tan(sigma/2) = 1 is the soliton parameter of the pseudosphere itself;
        // the closed-form angle degenerates there.
        const std::string hint = std::abs(co) < 1e-6 ? " (sigma too close to pi/2 for the one-soliton formula)" : "";
        fail(ErrorKind::ConstructionFailed,
             "classical pair failed self-validation: length " + std::to_string(val.length_variation) + ", tangency " +
                 std::to_string(val.tangency) + ", angle " + std::to_string(val.angle) + hint);
    }
    require_transversal_everywhere(pair);
    return pair;
}

ClassicalValidation validate_classical(const SurfacePair& pair, double sigma, double L, int samples) {
    ClassicalValidation r;
    const Domain& d = pair.domain();
    for (int i = 0; i < samples; ++i)
        for (int j = 0; j < samples; ++j) {
            const ChartPoint p{d.u0 + (i + 0.5) * d.width() / samples, d.v0 + (j + 0.5) * d.height() / samples};
            const PairJets pj = pair_jets(pair, p, 0);
            const Vec3<double> D = values(pj.d), xi = values(pj.xi), xih = values(pj.xihat);
            const Vec3<double> n = cross(values(pj.fu), values(pj.fv)), nh = cross(values(pj.fhu), values(pj.fhv));
            r.length_variation = std::max(r.length_variation, std::abs(norm(D) - L));
            r.tangency = std::max({r.tangency, tangency_residual(D, values(pj.fu), values(pj.fv)),
                                   tangency_residual(D, values(pj.fhu), values(pj.fhv))});
            // unit normals of the right surfaces, at angle sigma
            const double off = std::max({std::abs(norm(xi) - 1.0), std::abs(norm(xih) - 1.0),
                                         norm(cross(xi, n)) / norm(n), norm(cross(xih, nh)) / norm(nh)});
            r.angle = std::max({r.angle, off, std::abs(dot(xi, xih) - std::cos(sigma))});
        }
    return r;
}

SurfacePair make_focal_geometry(const ClassicalParams& cp, double eps) {
    if (std::abs(std::sin(cp.sigma)) < 1e-6) fail(ErrorKind::ParamOutOfRange, "sigma must have sin sigma != 0");
    SurfacePair pair;
    pair.label = "focal";
    pair.f = field("f", cp.domain, [cp, eps](ChartPoint p, int order) { return focal_jets(cp, eps, p, order).f; },
                   kMaxJetOrder - 1);
    pair.fhat = field("fhat", cp.domain,
                      [cp, eps](ChartPoint p, int order) { return focal_jets(cp, eps, p, order).fhat; },
                      kMaxJetOrder - 1);
    return pair;
}

SurfacePair make_focal_pair(const ClassicalParams& cp, double eps) {
    SurfacePair pair = make_focal_geometry(cp, eps);
    const double a = std::cos(cp.sigma);
    if (std::abs(a) < 1e-6) fail(ErrorKind::ParamOutOfRange, "focal pair needs cos sigma != 0");
    // m: the direction in span{D_u, D_v} orthogonal to the tangent line it cuts.
    auto frame = [cp, eps](ChartPoint p, int order) {
        const FocalJets j = focal_jets(cp, eps, p, order + 1);
        const JetVec3 D = j.fhat - j.f;
        const JetVec3 Du = du(D), Dv = dv(D);
        const JetVec3 q = cross(Du, Dv);
        const JetVec3 n = truncated(j.n, order);
        JetVec3 m = cross(q, cross(q, n));
        if (dot(values(m), values(n)) < 0) m = -m;
        struct Out {
            JetVec3 m, Du, Dv, fu, fv, fhu, fhv, fuu, fuv, fvv;
        };
        const JetVec3 f2 = focal_jets(cp, eps, p, order + 2).f;
        return Out{m, Du, Dv, truncated(du(j.f), order), truncated(dv(j.f), order), du(j.fhat), dv(j.fhat),
                   du(du(f2)), du(dv(f2)), dv(dv(f2))};
    };
    auto xi_jets = [frame](ChartPoint p, int order) {
        const auto o = frame(p, order);
        const MultiJet t = det3(o.fu, o.fv, o.m);
        const MultiJet h11 = det3(o.fu, o.fv, o.fuu), h12 = det3(o.fu, o.fv, o.fuv), h22 = det3(o.fu, o.fv, o.fvv);
        const MultiJet Hm = (h11 * h22 - h12 * h12) / (t * t * t * t);
        return pow(abs(Hm), 0.25) * o.m;
    };
    pair.xi = field("xi", cp.domain, xi_jets, kMaxJetOrder - 3);
    pair.xihat = field("xihat", cp.domain, [frame, xi_jets, a](ChartPoint p, int order) {
        const auto o = frame(p, order);
        const JetVec3 xi = xi_jets(p, order);
        const JetVec3 n = cross(o.fu, o.fv), nh = cross(o.fhu, o.fhv);
        // n.xihat = a n.xi and nh.xihat = nh.xi / a with xihat = x D_u + y D_v
        const MultiJet m11 = dot(n, o.Du), m12 = dot(n, o.Dv), m21 = dot(nh, o.Du), m22 = dot(nh, o.Dv);
        const MultiJet r1 = a * dot(n, xi), r2 = dot(nh, xi) / a;
        const MultiJet det = m11 * m22 - m12 * m21;
        const MultiJet x = (r1 * m22 - m12 * r2) / det, y = (m11 * r2 - m21 * r1) / det;
        return x * o.Du + y * o.Dv;
    }, kMaxJetOrder - 3);
    pair.label = "focal";
    require_transversal_everywhere(pair);
    return pair;
}

SurfacePair make_parallel_pair(const ClassicalParams& cp, double eps, double lambda) {
    SurfacePair pair = make_focal_geometry(cp, eps);
    const ChartPoint c{(cp.domain.u0 + cp.domain.u1) / 2, (cp.domain.v0 + cp.domain.v1) / 2};
    const Vec3<double> e = values(focal_jets(cp, eps, c, 0).n);
    pair.xi = field("xi", cp.domain, [e](ChartPoint, int order) {
        return JetVec3{MultiJet::constant(e[0], order), MultiJet::constant(e[1], order), MultiJet::constant(e[2], order)};
    });
    pair.xihat = field("xihat", cp.domain, [e, lambda](ChartPoint, int order) {
        return JetVec3{MultiJet::constant(e[0] / lambda, order), MultiJet::constant(e[1] / lambda, order),
                       MultiJet::constant(e[2] / lambda, order)};
    });
    pair.label = "parallel";
    require_transversal_everywhere(pair);
    return pair;
}

ParallelTruth parallel_ground_truth(const SurfacePair& pair, ChartPoint p) {
    const PairJets j = pair_jets(pair, p, 0);
    const Vec3<double> d = values(j.d), xi = values(j.xi), xih = values(j.xihat);
    const Vec3<double> fu = values(j.fu), fv = values(j.fv);
    // X1 in the chart: the component of D along f_u versus f_v.
    const double a = det3(d, fv, xi) / det3(fu, fv, xi), b = det3(fu, d, xi) / det3(fu, fv, xi);
    Vec3<double> v2 = std::abs(a) < std::abs(b) ? fu : fv;
    v2 = v2 / det3(d, v2, xi);
    const Vec3<double> nh = cross(values(j.fhu), values(j.fhv));
    const double t = det3(d, v2, xih);
    return {1.0 / t, -dot(nh, v2) / (dot(nh, xi) * t)};
}

ChartPoint classical_rank_drop(const ClassicalParams& cp, double lo, double hi) {
    auto g = [&](double u) {
        const double th = backlund_angle(MultiJet(u), MultiJet(0.0), cp.sigma, cp.phase).value();
        const double s = sech(u);
        return std::sin(th) * std::sin(th) - s * s;
    };
    double glo = g(lo);
    if (glo * g(hi) > 0) fail(ErrorKind::ConstructionFailed, "no rank drop of the spherical representation bracketed");
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi), gm = g(mid);
        if ((gm > 0) == (glo > 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return {0.5 * (lo + hi), 0.0};
}

SurfacePair make_spoiler(int condition, const ClassicalParams& cp) {
    SurfacePair pair;
    switch (condition) {
    case 1: {
        pair = make_classical_pair(cp);
        const ChartPoint c{(cp.domain.u0 + cp.domain.u1) / 2, (cp.domain.v0 + cp.domain.v1) / 2};
        const Vec3<double> shift = 1e-7 * cp.L * pair.xi.value(c);
        const SurfaceMap base = pair.fhat;
        pair.fhat = field("fhat", cp.domain, [base, shift](ChartPoint p, int order) {
            JetVec3 r = base.jets(p, order);
            for (int i = 0; i < 3; ++i) r[i] += shift[i];
            return r;
        });
        break;
    }
    case 2: {
        const ChartPoint r = classical_rank_drop(cp, 0.3, 1.5);
        ClassicalParams q = cp;
        q.domain = {r.u - 0.25, r.u + 0.25, -0.25, 0.25};
        pair = make_classical_pair(q);
        break;
    }
    case 3:
        pair = make_classical_pair(cp);
        pair.xihat = pair.xi;
        break;
    case 4: {
        pair = make_classical_pair(cp);
        const TransversalField base = pair.xihat;
        pair.xihat = field("xihat", cp.domain, [base](ChartPoint p, int order) {
            return (1.0 + 0.1 * var(p, 0, order)) * base.jets(p, order);
        });
        break;
    }
    case 5: pair = make_focal_pair(cp, 0.05); break;
    case 6: {
        pair = make_classical_pair(cp);
        const SurfacePair base = pair;
        pair.xihat = field("xihat", cp.domain, [base](ChartPoint p, int order) {
            return base.xihat.jets(p, order) + 0.2 * (base.fhat.jets(p, order) - base.f.jets(p, order));
        });
        break;
    }
    case 7: {
        pair = make_classical_pair(cp);
        const SurfacePair base = pair;
        // xi' = l xi + z2 v2, xihat' = m xihat + w2 v2hat keeps 1 - A Ahat and
        // W proportional while l / m varies, so W and H stop being functionally dependent.
        auto parts = [base](ChartPoint p, int order) {
            const PairJets j = pair_jets(base, p, order);
            const MultiJet l = 1.0 + 0.1 * var(p, 0, order), m = 1.0 + 0.1 * var(p, 1, order);
            const MultiJet k = 1.0 - j.A * j.Ahat;
            const MultiJet z2 = j.Ahat * j.W * (l - m) / k, w2 = j.A * j.W * (l - m) / k;
            const JetVec3 v2 = (j.A * j.xi - j.xihat) / j.W, v2h = (j.xi - j.Ahat * j.xihat) / j.W;
            return std::array<JetVec3, 2>{l * j.xi + z2 * v2, m * j.xihat + w2 * v2h};
        };
        pair.xi = field("xi", cp.domain, [parts](ChartPoint p, int order) { return parts(p, order)[0]; },
                        kMaxJetOrder - 1);
        pair.xihat = field("xihat", cp.domain, [parts](ChartPoint p, int order) { return parts(p, order)[1]; },
                           kMaxJetOrder - 1);
        break;
    }
    default: fail(ErrorKind::UnknownEntry, "spoilers exist for conditions 1 to 7");
    }
    pair.label = "spoiler-" + std::to_string(condition);
    require_transversal_everywhere(pair);
    return pair;
}

SurfacePair make_pair(const std::string& name, const Params& params) {
    const CatalogEntry& entry = find_entry(name);
    if (entry.kind != EntryKind::Pair) fail(ErrorKind::UnknownEntry, "'" + name + "' is a surface, not a pair");
    const Params p = resolve_params(entry, params);
    if (name == "translate") {
        // Cylinder over a cubic, translated along its rulings.
        const Domain d{-0.5, 0.5, -0.5, 0.5};
        SurfacePair pair;
        pair.label = name;
        pair.f = SurfaceMap::from_formula("f", d, [](auto u, auto v) { return JetVec3{u, v, u * u * 0.5 + 0.3 * u * u * u}; });
        pair.fhat = SurfaceMap::from_formula("fhat", d, [](auto u, auto v) {
            return JetVec3{u, v + 1.0, u * u * 0.5 + 0.3 * u * u * u};
        });
        pair.xi = field("xi", d, [](ChartPoint, int) { return JetVec3{MultiJet(0.0), MultiJet(0.0), MultiJet(1.0)}; });
        pair.xihat = field("xihat", d, [](ChartPoint, int) { return JetVec3{MultiJet(0.5), MultiJet(0.0), MultiJet(1.0)}; });
        return pair;
    }
    const ClassicalParams cp = classical_from(p);
    if (name == "classical" || name == "classical-b") {
        SurfacePair pair = make_classical_pair(cp);
        pair.label = name;
        return pair;
    }
    if (name == "focal") return make_focal_pair(cp, p.at("eps"));
    if (name == "parallel") return make_parallel_pair(cp, p.at("eps"), p.at("lambda"));
    if (name == "rescaled-xi") {
        SurfacePair pair = make_classical_pair(cp);
        const TransversalField base = pair.xi;
        const double c = p.at("c");
        pair.xi = field("xi", cp.domain, [base, c](ChartPoint q, int order) { return c * base.jets(q, order); });
        pair.label = name;
        return pair;
    }
    return make_spoiler(std::stoi(name.substr(8)), cp);
}

} // namespace abdg
