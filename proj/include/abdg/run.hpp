#pragma once

#include <map>
#include <string>
#include <vector>

#include "abdg/catalog.hpp"
#include "abdg/conditions.hpp"

namespace abdg {

inline constexpr int kSchemaVersion = 1;
inline constexpr double kBlaschkeTol = 1e-8;
inline constexpr double kChernTerngTol = 1e-7;
inline constexpr double kA00Tol = 1e-8;

// Canonical check order; reports list records in this order.
const std::vector<std::string>& known_checks();
bool is_pair_check(const std::string& check);  // needs a pair selection

struct RunConfig {
    std::string pair;     // exactly one of pair / surface
    std::string surface;
    Params params;
    std::string expression;              // graph surface only
    std::string transversal = "blaschke";  // surface checks: blaschke | euclidean
    Grid grid{32, 32};
    int order = 4;  // surface maps may be expanded to order + 2
    Tolerances tol;
    std::vector<std::string> checks;  // empty: defaults for the selection
    double a00_a = 0.3;
};

// Defaults for an empty check list.
std::vector<std::string> default_checks(bool pair);

struct CsvRow {
    ChartPoint p;
    double psi = kNaN, H = kNaN, Hhat = kNaN, W = kNaN, A = kNaN, Ahat = kNaN, defect = kNaN, nabla = kNaN;
};

struct RunResult {
    std::vector<std::string> checks;  // effective checks, canonical order
    std::vector<std::pair<std::string, CheckRecord>> records;  // (check, record)
    std::map<std::string, double> scalars;
    std::map<std::string, std::string> labels;
    std::vector<std::string> diagnostics;
    std::vector<CsvRow> rows;
    int exit_code = 0;
    std::string status = "ok";
};

// Validates the config (DomainError, UnknownEntry, ParamOutOfRange for
// configuration faults), builds the selection and runs the checks.
// Construction failures propagate as Error.
RunResult run_checks(const RunConfig& config, Execution exec = Execution::Parallel);

// Exit code for an error escaping run_checks: 2 for configuration faults, 3
// for construction faults.
int exit_code_for(ErrorKind kind);

// Structured report: schema_version, config, records, summary, diagnostics.
// Floats carry 17 significant digits; NaN and infinities become null.
std::string report_json(const RunConfig& config, const RunResult& result);
std::string report_csv(const RunResult& result);
std::string report_schema();

} // namespace abdg
