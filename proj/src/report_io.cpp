#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "abdg/run.hpp"

namespace abdg {

namespace {

using Json = nlohmann::ordered_json;

std::string number(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// nlohmann handles structure and string escaping; floats are printed here
// with a fixed 17 significant digits so reports are diffable.
void dump(const Json& j, std::ostringstream& os, int indent) {
    const std::string pad(indent * 2, ' '), inner((indent + 1) * 2, ' ');
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) os << ",\n";
            first = false;
            os << inner << Json(it.key()).dump() << ": ";
            dump(it.value(), os, indent + 1);
        }
        os << "\n" << pad << "}";
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            os << "[]";
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) os << ",\n";
            os << inner;
            dump(j[i], os, indent + 1);
        }
        os << "\n" << pad << "]";
        return;
    }
    case Json::value_t::number_float: os << number(j.get<double>()); return;
    default: os << j.dump();
    }
}

Json point(const std::optional<ChartPoint>& p) {
    if (!p) return nullptr;
    return Json{{"u", p->u}, {"v", p->v}};
}

std::string csv_number(double x) { return std::isfinite(x) ? number(x) : ""; }

} // namespace

std::string report_json(const RunConfig& cfg, const RunResult& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    Json c;
    c["selection"] = cfg.pair.empty() ? cfg.surface : cfg.pair;
    c["kind"] = cfg.pair.empty() ? "surface" : "pair";
    Json params = Json::object();
    for (const auto& [k, v] : cfg.params) params[k] = v;
    c["params"] = params;
    if (!cfg.expression.empty()) c["expression"] = cfg.expression;
    if (cfg.pair.empty()) c["transversal"] = cfg.transversal;
    c["grid"] = Json::array({cfg.grid.nu, cfg.grid.nv});
    c["order"] = cfg.order;
    c["tolerances"] = Json{{"alg", cfg.tol.alg}, {"diff", cfg.tol.diff}, {"tangency", cfg.tol.tangency}};
    Json checks = Json::array();
    for (const auto& k : r.checks) checks.push_back(k);
    c["checks"] = checks;
    j["config"] = c;

    Json records = Json::array();
    for (const auto& [check, rec] : r.records) {
        Json x;
        x["name"] = rec.name;
        x["check"] = check;
        x["satisfied"] = rec.satisfied;
        x["worst_residual"] = rec.worst_residual;
        x["witness_point"] = point(rec.witness);
        x["tolerance"] = rec.tolerance;
        x["comparison"] = rec.lower_bound ? "greater" : "less";
        if (!rec.note.empty()) x["note"] = rec.note;
        records.push_back(x);
    }
    j["records"] = records;
    Json summary = Json::object();
    for (const auto& [k, v] : r.scalars) summary[k] = v;
    for (const auto& [k, v] : r.labels) summary[k] = v;
    j["summary"] = summary;
    Json diag = Json::array();
    for (const auto& d : r.diagnostics) diag.push_back(d);
    j["diagnostics"] = diag;
    j["status"] = r.status;
    j["exit_code"] = r.exit_code;

    std::ostringstream os;
    dump(j, os, 0);
    os << "\n";
    return os.str();
}

std::string report_csv(const RunResult& r) {
    std::ostringstream os;
    os << "u,v,psi,H,Hhat,W,A,Ahat,defect,nabla_R\n";
    for (const auto& row : r.rows) {
        os << number(row.p.u) << ',' << number(row.p.v) << ',' << csv_number(row.psi) << ',' << csv_number(row.H)
           << ',' << csv_number(row.Hhat) << ',' << csv_number(row.W) << ',' << csv_number(row.A) << ','
           << csv_number(row.Ahat) << ',' << csv_number(row.defect) << ',' << csv_number(row.nabla) << '\n';
    }
    return os.str();
}

std::string report_schema() {
    Json record = {{"type", "object"},
                   {"required", {"name", "check", "satisfied", "worst_residual", "witness_point", "tolerance",
                                 "comparison"}},
                   {"properties",
                    {{"name", {{"type", "string"}}},
                     {"check", {{"type", "string"}}},
                     {"satisfied", {{"type", "boolean"}}},
                     {"worst_residual", {{"type", {"number", "null"}}}},
                     {"witness_point",
                      {{"type", {"object", "null"}},
                       {"properties", {{"u", {{"type", "number"}}}, {"v", {{"type", "number"}}}}}}},
                     {"tolerance", {{"type", "number"}}},
                     {"comparison", {{"enum", {"less", "greater"}}}},
                     {"note", {{"type", "string"}}}}}};
    Json schema = {{"$schema", "https://json-schema.org/draft/2020-12/schema"},
                   {"title", "abdg check report"},
                   {"type", "object"},
                   {"required", {"schema_version", "config", "records", "summary", "diagnostics", "status", "exit_code"}},
                   {"properties",
                    {{"schema_version", {{"const", kSchemaVersion}}},
                     {"config", {{"type", "object"}}},
                     {"records", {{"type", "array"}, {"items", record}}},
                     {"summary", {{"type", "object"}, {"additionalProperties", {{"type", {"number", "string", "null"}}}}}},
                     {"diagnostics", {{"type", "array"}, {"items", {{"type", "string"}}}}},
                     {"status", {{"enum", {"ok", "check-failure", "config-error", "construction-error"}}}},
                     {"exit_code", {{"enum", {0, 1, 2, 3}}}}}}};
    return schema.dump(2) + "\n";
}

} // namespace abdg
