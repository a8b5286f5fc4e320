#pragma once

#include <map>
#include <string>
#include <vector>

#include "abdg/pair.hpp"

namespace abdg {

using Params = std::map<std::string, double>;

struct ParamSpec {
    std::string name;
    double lo, hi, def;
    std::string doc;
};

enum class EntryKind { Surface, Pair };

struct CatalogEntry {
    std::string name;
    EntryKind kind;
    std::vector<ParamSpec> params;
    std::string notes;
};

const std::vector<CatalogEntry>& catalog_entries();
// Throws UnknownEntry.
const CatalogEntry& find_entry(const std::string& name);
// Defaults filled in; throws ParamOutOfRange for values outside the schema
// and UnknownEntry for names the entry does not declare.
Params resolve_params(const CatalogEntry& entry, const Params& given);

// `expression` is used by "graph" only: z = expression(u, v).
SurfaceMap make_surface(const std::string& name, const Params& params = {}, const std::string& expression = "");
SurfacePair make_pair(const std::string& name, const Params& params = {});

// Pseudosphere and its one-soliton Backlund transform, scaled so that
// |fhat - f| = L and K = -sin^2(sigma)/L^2, with Euclidean unit normals.
struct ClassicalParams {
    double sigma = 1.0471975511965976;
    double L = 1.0;
    double phase = 2.65;
    Domain domain{1.6, 2.6, -0.5, 0.5};
};

struct ClassicalValidation {
    double length_variation = 0.0;  // max ||fhat - f| - L|
    double tangency = 0.0;          // max tangency residual, both surfaces
    double angle = 0.0;             // max |<xi, xihat> - cos sigma|
    bool ok(double tol = 1e-8) const { return length_variation < tol && tangency < tol && angle < tol; }
};

// Soliton angle of the transform relative to the pseudosphere's u-direction.
MultiJet backlund_angle(const MultiJet& u, const MultiJet& v, double sigma, double phase);

// Throws ConstructionFailed unless the self-validation passes. cos sigma = 0
// is built but flagged in `warning`.
SurfacePair make_classical_pair(const ClassicalParams& params);
ClassicalValidation validate_classical(const SurfacePair& pair, double sigma, double L, int samples = 9);

// Focal surface pair of the line congruence through f along the Backlund
// direction rotated by eps in the tangent plane. eps = 0 reproduces the
// classical geometry.
SurfacePair make_focal_geometry(const ClassicalParams& params, double eps);

// Transversals for a focal pair that keep A = Ahat = a, |H| = 1, and
// xi, xihat in span{D_u, D_v}; only conformality (condition 5) is lost
// when eps != 0.
SurfacePair make_focal_pair(const ClassicalParams& params, double eps);

// Focal geometry with constant parallel transversals xi = e, xihat = e / lambda,
// e the unit normal of f at the domain centre.
SurfacePair make_parallel_pair(const ClassicalParams& params, double eps, double lambda);

// Closed-form (lambda, beta) for the parallel pair in the unimodular
// completion used by parallel_transversal_criterion.
struct ParallelTruth {
    double lambda = 0.0;
    double beta = 0.0;
};
ParallelTruth parallel_ground_truth(const SurfacePair& pair, ChartPoint p);

// Point of v = 0 where the spherical representation of the classical pair
// drops rank, found by bisection on u in [lo, hi].
ChartPoint classical_rank_drop(const ClassicalParams& params, double lo, double hi);

// Single-condition spoilers of the classical pair, index 1..7.
SurfacePair make_spoiler(int condition, const ClassicalParams& params);

} // namespace abdg
