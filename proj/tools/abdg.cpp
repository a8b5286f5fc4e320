// Command-line driver: check / list / schema.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

#include "abdg/run.hpp"

using namespace abdg;

namespace {

Grid parse_grid(const std::string& text) {
    const auto x = text.find('x');
    int nu = 0, nv = 0;
    std::size_t a = 0, b = 0;
    try {
        if (x == std::string::npos) throw std::invalid_argument("no x");
        nu = std::stoi(text.substr(0, x), &a);
        nv = std::stoi(text.substr(x + 1), &b);
    } catch (const std::exception&) {
        fail(ErrorKind::DomainError, "malformed grid '" + text + "', expected NxM");
    }
    if (a != x || b != text.size() - x - 1) fail(ErrorKind::DomainError, "malformed grid '" + text + "', expected NxM");
    if (nu < 8 || nv < 8) fail(ErrorKind::DomainError, "grid '" + text + "' is below the 8x8 minimum");
    return {nu, nv};
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    os << text;
    return static_cast<bool>(os);
}

void print_catalog() {
    for (const auto& e : catalog_entries()) {
        std::printf("%-22s %-7s %s\n", e.name.c_str(), e.kind == EntryKind::Pair ? "pair" : "surface", e.notes.c_str());
        for (const auto& p : e.params)
            std::printf("    --%-8s default %-10.6g range [%g, %g]  %s\n", p.name.c_str(), p.def, p.lo, p.hi,
                        p.doc.c_str());
    }
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

// Expands `--config FILE` into flags placed before the command-line flags, so
// the last occurrence (the command line) wins. Blank lines and # comments are
// skipped; `key = true` becomes a bare flag.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            out.push_back(args[i]);
        }
    }
    if (path.empty()) return out;
    std::ifstream is(path);
    if (!is) fail(ErrorKind::DomainError, "cannot read config file " + path);
    std::vector<std::string> flags;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(ErrorKind::DomainError, path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (value == "true") {
            flags.push_back("--" + key);
        } else if (value != "false") {
            flags.push_back("--" + key);
            flags.push_back(value);
        }
    }
    auto at = std::find(out.begin(), out.end(), "check");
    if (at == out.end()) fail(ErrorKind::DomainError, "--config is only valid with the check subcommand");
    out.insert(at + 1, flags.begin(), flags.end());
    return out;
}

std::string status_for(int code) {
    switch (code) {
    case 0: return "ok";
    case 1: return "check-failure";
    case 2: return "config-error";
    default: return "construction-error";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affine Backlund pair checker"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    app.add_subcommand("list", "List catalog surfaces and pairs with their parameters");
    app.add_subcommand("schema", "Print the JSON schema of the check report");
    CLI::App* check = app.add_subcommand("check", "Run checks on a catalog surface or pair");
    std::string config_path;
    check->add_option("--config", config_path, "key=value file; command-line flags override it");

    RunConfig cfg;
    std::string grid = "32x32", checks, out, csv;
    bool serial = false;
    auto* pair_opt = check->add_option("--pair", cfg.pair, "Catalog pair (see `list`)");
    auto* surf_opt = check->add_option("--surface", cfg.surface, "Catalog surface (see `list`)");
    pair_opt->excludes(surf_opt);
    check->add_option("--expr", cfg.expression, "z = expr(u, v) for the graph surface");
    check->add_option("--transversal", cfg.transversal, "Transversal for surface checks: blaschke | euclidean")
        ->capture_default_str();
    check->add_option("--grid", grid, "Grid of cell centres NxM, at least 8x8")->capture_default_str();
    check->add_option("--order", cfg.order, "Jet order K in [3, 6]; surface maps are expanded to K + 2")
        ->capture_default_str();
    check->add_option("--tol-alg", cfg.tol.alg, "Tolerance for algebraic identities")->capture_default_str();
    check->add_option("--tol-diff", cfg.tol.diff, "Tolerance for differentiated quantities")->capture_default_str();
    check->add_option("--tol-tangency", cfg.tol.tangency, "Tolerance for tangency of fhat - f")->capture_default_str();
    check->add_option("--checks", checks,
                      "Comma list of gw, blaschke, psi, rank, conditions, curvature, metric, a00, chern-terng, "
                      "blaschke-pair. Default: psi,rank,conditions,curvature for pairs, "
                      "gw,blaschke,curvature,chern-terng for surfaces");
    check->add_option("--a00-a", cfg.a00_a, "Constant alpha of the A00 instance used by the a00 check")
        ->capture_default_str();
    check->add_option("--out", out, "Write the JSON report here (default: stdout)");
    check->add_option("--csv", csv, "Write per-point u, v, psi, H, Hhat, W, A, Ahat, defect, nabla_R here");
    check->add_flag("--serial", serial, "Use the serial reference sweep");

    // Catalog parameters, one flag per distinct name.
    std::map<std::string, double> param_values;
    std::map<std::string, CLI::Option*> param_opts;
    for (const auto& e : catalog_entries())
        for (const auto& p : e.params) {
            if (param_opts.count(p.name)) continue;
            param_values[p.name] = p.def;
            param_opts[p.name] = check->add_option("--" + p.name, param_values[p.name], p.doc + " (catalog parameter)");
        }

    check->footer("Exit codes: 0 all checks satisfied, 1 check failure, 2 configuration error, 3 construction "
                  "error. ABDG_THREADS caps the number of threads. Catalog parameter defaults: see `list`.");

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = expand_config(args);
        std::reverse(args.begin(), args.end());  // CLI11 takes the vector back to front
        app.parse(args);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (app.got_subcommand("list")) {
        print_catalog();
        return 0;
    }
    if (app.got_subcommand("schema")) {
        std::cout << report_schema();
        return 0;
    }

    RunResult result;
    int code = 0;
    try {
        cfg.grid = parse_grid(grid);
        for (const auto& [name, opt] : param_opts)
            if (opt->count() > 0) cfg.params[name] = param_values[name];
        std::string item;
        for (char c : checks + ",") {
            if (c != ',') {
                item += c;
            } else if (!item.empty()) {
                cfg.checks.push_back(item);
                item.clear();
            }
        }
        result = run_checks(cfg, serial ? Execution::Serial : Execution::Parallel);
        code = result.exit_code;
    } catch (const Error& e) {
        code = exit_code_for(e.kind());
        result.exit_code = code;
        result.status = status_for(code);
        result.diagnostics.push_back(e.what());
        std::fprintf(stderr, "error: %s\n", e.what());
    }

    const std::string json = report_json(cfg, result);
    if (out.empty()) {
        std::cout << json;
    } else {
        if (!write_file(out, json)) {
            std::fprintf(stderr, "error: cannot write %s\n", out.c_str());
            return 2;
        }
        for (const auto& [chk, r] : result.records)
            std::printf("%-4s %-28s worst %-12.4g tol %g\n", r.satisfied ? "ok" : "FAIL", r.name.c_str(),
                        r.worst_residual, r.tolerance);
    }
    if (!csv.empty() && !result.rows.empty() && !write_file(csv, report_csv(result))) {
        std::fprintf(stderr, "error: cannot write %s\n", csv.c_str());
        return 2;
    }
    return code;
}
