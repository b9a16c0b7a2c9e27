// swkb-lab: batch front-end for catalog inspection, shape-invariance checks,
// spectrum tables, SWKB verification runs, hbar sweeps and Schrodinger-oracle
// comparisons. Exit codes: 0 = all checks pass, 1 = checks ran and failed,
// 2 = invalid input or configuration.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "swkb/oracle.hpp"
#include "swkb/report.hpp"
#include "swkb/shape_invariance.hpp"
#include "swkb/spectrum.hpp"
#include "swkb/superpotential.hpp"
#include "swkb/swkb_engine.hpp"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;

int max_threads() {
    if (const char* env = std::getenv("SWKB_LAB_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// deterministic fan-out: results land in input order regardless of schedule
template <typename Item, typename Fn>
void parallel_map(const std::vector<Item>& items, Fn fn) {
    const int threads = std::min<int>(max_threads(), static_cast<int>(items.size()));
    if (threads <= 1) {
        for (size_t i = 0; i < items.size(); ++i) fn(i, items[i]);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1))
                fn(i, items[i]);
        });
    }
    for (auto& th : pool) th.join();
}

swkb::ConstantMap parse_overrides(const std::vector<std::string>& kvs) {
    swkb::ConstantMap out;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw swkb::UnknownParameter("--set expects key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        char* end = nullptr;
        const std::string vs = kv.substr(eq + 1);
        const double value = std::strtod(vs.c_str(), &end);
        if (end == vs.c_str() || *end != '\0')
            throw swkb::UnknownParameter("--set " + key + ": '" + vs + "' is not a number");
        out[key] = value;
    }
    return out;
}

std::map<std::string, std::string> override_strings(const swkb::ConstantMap& ov) {
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : ov) out[k] = swkb::fmt_real(v);
    return out;
}

std::pair<int, int> parse_n_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int n = std::stoi(s);
        return {n, n};
    }
    const int lo = std::stoi(s.substr(0, dots));
    const int hi = std::stoi(s.substr(dots + 2));
    if (lo < 0 || hi < lo) throw swkb::ValidityError("--n: bad range '" + s + "'");
    return {lo, hi};
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw swkb::Error("cannot write " + path);
    out << body;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    if (out.empty()) throw swkb::ValidityError("expected a comma-separated list of reals");
    return out;
}

// ---------------------------------------------------------------------------

struct CatalogArgs {
    bool as_json = false;
    std::string name;
};

int cmd_catalog_list(const CatalogArgs& args) {
    json doc = swkb::catalog_document();
    if (!args.name.empty()) {
        json filtered = json::array();
        for (const auto& e : doc["entries"])
            if (e["name"] == args.name) filtered.push_back(e);
        if (filtered.empty()) throw swkb::UnknownParameter("no catalog entry named '" + args.name + "'");
        doc["entries"] = filtered;
    }
    if (args.as_json) {
        std::cout << doc.dump(2) << "\n";
        return kExitPass;
    }
    for (const auto& e : doc["entries"]) {
        std::cout << e["name"].get<std::string>() << "  [" << e["class"].get<std::string>() << "]"
                  << "  a=" << e["a"].get<double>() << "  hbar=" << e["hbar"].get<double>()
                  << "\n    constants:";
        for (const auto& [k, v] : e["constants"].items())
            std::cout << " " << k << "=" << v.get<double>();
        std::cout << "\n    domain: [" << e["domain"]["left"].dump() << ", "
                  << e["domain"]["right"].dump() << "]   n_max=" << e["default_n_max"].get<int>()
                  << "\n    constraints:";
        for (const auto& c : e["constraints"]) std::cout << " {" << c.get<std::string>() << "}";
        std::cout << "\n";
    }
    return kExitPass;
}

struct VerifyArgs {
    std::string potential;
    std::string n_range = "0..10";
    std::vector<std::string> sets;
    std::string method = "gauss";
    double tol = 1e-8;
    std::string csv_path, json_path, plot_path;
};

swkb::QuadratureConfig quad_config_for(const std::string& method) {
    swkb::QuadratureConfig config;
    if (method == "gauss" || method == "sine_substitution_gauss")
        config.method = swkb::QuadMethod::sine_substitution_gauss;
    else if (method == "tanh-sinh" || method == "tanh_sinh")
        config.method = swkb::QuadMethod::tanh_sinh;
    else
        throw swkb::UnknownParameter("unknown quadrature method '" + method + "'");
    return config;
}

int cmd_verify(const VerifyArgs& args) {
    const swkb::ConstantMap overrides = parse_overrides(args.sets);
    const swkb::SuperpotentialSpec spec = swkb::catalog_entry(args.potential, overrides);
    const swkb::QuadratureConfig config = quad_config_for(args.method);
    const swkb::SpectrumModel model = swkb::make_spectrum_model(spec);
    auto [n_lo, n_hi] = parse_n_range(args.n_range);
    n_hi = std::min(n_hi, model.n_max);

    std::vector<int> ns;
    for (int n = n_lo; n <= n_hi; ++n) ns.push_back(n);
    if (ns.empty()) throw swkb::ValidityError("verify: empty n range after n_max clipping");

    std::vector<swkb::SwkbResult> results(ns.size());
    std::vector<std::string> errors(ns.size());
    parallel_map(ns, [&](size_t i, int n) {
        try {
            results[i] = swkb::swkb_integral(spec, n, config);
        } catch (const swkb::Error& e) {
            errors[i] = e.what();
        }
    });

    const swkb::RunManifest manifest = swkb::RunManifest::make(
        "verify --potential " + args.potential + " --n " + args.n_range,
        override_strings(overrides), swkb::to_json(config));
    swkb::CsvWriter csv({"name", "class", "n", "E_n", "x1", "x2", "integral", "residual",
                         "converged"},
                        manifest);
    json rows = json::array();
    double max_rel_residual = 0;
    bool failed = false;
    std::cout << "  n      E_n           I             I - n*pi*hbar   converged\n";
    for (size_t i = 0; i < ns.size(); ++i) {
        if (!errors[i].empty()) {
            std::cerr << "n=" << ns[i] << ": " << errors[i] << "\n";
            failed = true;
            continue;
        }
        const swkb::SwkbResult& r = results[i];
        const double limit = args.tol * std::max(r.n * std::numbers::pi * spec.hbar, spec.hbar);
        const double rel = std::abs(r.residual) / std::max(r.n * std::numbers::pi * spec.hbar,
                                                           spec.hbar);
        max_rel_residual = std::max(max_rel_residual, rel);
        if (std::abs(r.residual) > limit || !r.converged) failed = true;
        std::printf("%3d  %12.8f  %14.10f  %+14.3e   %s\n", r.n, r.energy, r.integral, r.residual,
                    r.converged ? "yes" : "NO");
        csv.add_row({spec.name, swkb::to_string(spec.si_class), std::to_string(r.n),
                     swkb::fmt_real(r.energy), swkb::fmt_real(r.turning.x1),
                     swkb::fmt_real(r.turning.x2), swkb::fmt_real(r.integral),
                     swkb::fmt_real(r.residual), r.converged ? "true" : "false"});
        json row = swkb::to_json(r);
        row["name"] = spec.name;
        rows.push_back(row);
    }
    std::cout << "max relative residual: " << swkb::fmt_real(max_rel_residual)
              << "  (tolerance " << swkb::fmt_real(args.tol) << ")\n";

    if (!args.csv_path.empty()) write_file(args.csv_path, csv.str());
    if (!args.json_path.empty()) {
        json doc{{"manifest", swkb::to_json(manifest)}, {"results", rows}};
        write_file(args.json_path, doc.dump(2) + "\n");
    }
    if (!args.plot_path.empty()) {
        swkb::CsvWriter plot({"n", "x", "integrand"}, manifest);
        for (size_t i = 0; i < ns.size(); ++i) {
            if (!errors[i].empty() || ns[i] == 0) continue;
            const swkb::SwkbResult& r = results[i];
            const int samples = 512;
            for (int s = 0; s <= samples; ++s) {
                const double x =
                    r.turning.x1 + (r.turning.x2 - r.turning.x1) * s / static_cast<double>(samples);
                const double w = swkb::eval_W(spec, x);
                const double v = std::max(0.0, r.energy - w * w);
                plot.add_row({std::to_string(ns[i]), swkb::fmt_real(x),
                              swkb::fmt_real(std::sqrt(v))});
            }
        }
        write_file(args.plot_path, plot.str());
    }
    return failed ? kExitCheckFailed : kExitPass;
}

struct SiCheckArgs {
    std::string potential;
    std::vector<std::string> sets;
    double x_lo = 0, x_hi = 0, a_lo = 0, a_hi = 0;
    bool have_x = false, have_a = false;
    int x_points = 20, a_points = 10;
    double tol = 1e-8;
    std::string json_path;
};

int cmd_si_check(const SiCheckArgs& args) {
    const swkb::ConstantMap overrides = parse_overrides(args.sets);
    const swkb::SuperpotentialSpec spec = swkb::catalog_entry(args.potential, overrides);
    if (args.x_points < 2 || args.a_points < 1)
        throw swkb::ValidityError("si-check: grid must have at least 2x1 points");

    std::vector<swkb::GridPoint> grid;
    if (args.have_x || args.have_a) {
        const swkb::ValidityInfo& info = swkb::validity_info(spec.name);
        const double xl = args.have_x ? args.x_lo : info.grid_x_lo;
        const double xh = args.have_x ? args.x_hi : info.grid_x_hi;
        const double al = args.have_a ? args.a_lo : info.grid_a_lo;
        const double ah = args.have_a ? args.a_hi : info.grid_a_hi;
        if (!(xl < xh) || !spec.domain.is_interior(xl) || !spec.domain.is_interior(xh))
            throw swkb::ValidityError("si-check: x grid bounds are invalid for this domain");
        if (!(al <= ah)) throw swkb::ValidityError("si-check: a grid bounds are invalid");
        for (int i = 0; i < args.x_points; ++i)
            for (int j = 0; j < args.a_points; ++j)
                grid.emplace_back(xl + (xh - xl) * i / (args.x_points - 1),
                                  args.a_points == 1 ? al : al + (ah - al) * j / (args.a_points - 1));
    } else {
        grid = swkb::standard_grid(spec, args.x_points, args.a_points);
    }

    const swkb::ResidualReport sic = swkb::residual_sic(spec, grid);
    const swkb::ResidualReport pde1 = swkb::residual_pde1(spec, grid);
    const swkb::ResidualReport pde2 = swkb::residual_pde2(spec, grid);
    const auto [tag, fitted] = swkb::classify(spec);

    std::cout << "shape-invariance condition: max |residual| = "
              << swkb::fmt_real(sic.max_abs_residual) << "\n"
              << "pde W dW/da - dW/dx + g'/2 : max |residual| = "
              << swkb::fmt_real(pde1.max_abs_residual) << "\n"
              << "pde d3W/(da2 dx)           : max |residual| = "
              << swkb::fmt_real(pde2.max_abs_residual) << "\n"
              << "classified as: " << swkb::to_string(tag) << "\n";

    const swkb::RunManifest manifest =
        swkb::RunManifest::make("si-check --potential " + args.potential,
                                override_strings(overrides),
                                json{{"x_points", args.x_points}, {"a_points", args.a_points}});
    if (!args.json_path.empty()) {
        json doc{{"manifest", swkb::to_json(manifest)},
                 {"entry", spec.name},
                 {"sic", swkb::to_json(sic)},
                 {"pde1", swkb::to_json(pde1)},
                 {"pde2", swkb::to_json(pde2)},
                 {"classified_as", swkb::to_string(tag)},
                 {"fitted_constants", fitted}};
        write_file(args.json_path, doc.dump(2) + "\n");
    }
    const double worst =
        std::max({sic.max_abs_residual, pde1.max_abs_residual, pde2.max_abs_residual});
    return worst <= args.tol ? kExitPass : kExitCheckFailed;
}

struct SpectrumArgs {
    std::string potential;
    std::vector<std::string> sets;
    int n_max = -1;
    std::string csv_path;
};

int cmd_spectrum(const SpectrumArgs& args) {
    const swkb::ConstantMap overrides = parse_overrides(args.sets);
    const swkb::SuperpotentialSpec spec = swkb::catalog_entry(args.potential, overrides);
    const swkb::SpectrumModel model = args.n_max >= 0
                                          ? swkb::make_spectrum_model(spec, args.n_max)
                                          : swkb::make_spectrum_model(spec);
    const swkb::RunManifest manifest = swkb::RunManifest::make(
        "spectrum --potential " + args.potential, override_strings(overrides),
        json{{"n_max", model.n_max}});
    swkb::CsvWriter csv({"name", "class", "n", "E_n", "dE_dhbar"}, manifest);
    std::cout << "  n        E_n        dE_n/dhbar\n";
    for (int n = 0; n <= model.n_max; ++n) {
        const double e = swkb::energy(model, n);
        const double de = swkb::dE_dhbar(model, n);
        std::printf("%3d  %12.8f  %12.8f\n", n, e, de);
        csv.add_row({spec.name, swkb::to_string(spec.si_class), std::to_string(n),
                     swkb::fmt_real(e), swkb::fmt_real(de)});
    }
    if (!args.csv_path.empty()) write_file(args.csv_path, csv.str());
    return kExitPass;
}

struct SweepArgs {
    std::string potential;
    std::vector<std::string> sets;
    int n = 2;
    std::string hbar_list = "0.5,1,2";
    double tol = 1e-8;
    std::string csv_path;
};

int cmd_sweep(const SweepArgs& args) {
    const swkb::ConstantMap overrides = parse_overrides(args.sets);
    const std::vector<double> hbars = parse_double_list(args.hbar_list);
    swkb::QuadratureConfig config;
    const swkb::RunManifest manifest = swkb::RunManifest::make(
        "sweep --potential " + args.potential + " --n " + std::to_string(args.n),
        override_strings(overrides), swkb::to_json(config));
    swkb::CsvWriter csv({"hbar", "integral", "I_over_hbar", "residual"}, manifest);

    std::vector<double> ratios;
    bool failed = false;
    std::cout << "  hbar        I               I/hbar          residual\n";
    for (double hb : hbars) {
        swkb::ConstantMap ov = overrides;
        ov["hbar"] = hb;
        const swkb::SuperpotentialSpec spec = swkb::catalog_entry(args.potential, ov);
        const swkb::SwkbResult r = swkb::swkb_integral(spec, args.n, config);
        if (!r.converged) failed = true;
        const double ratio = r.integral / hb;
        ratios.push_back(ratio);
        std::printf("%7.4f  %14.10f  %14.10f  %+12.3e\n", hb, r.integral, ratio, r.residual);
        csv.add_row({swkb::fmt_real(hb), swkb::fmt_real(r.integral), swkb::fmt_real(ratio),
                     swkb::fmt_real(r.residual)});
    }
    const double lo = *std::min_element(ratios.begin(), ratios.end());
    const double hi = *std::max_element(ratios.begin(), ratios.end());
    const double mean = (lo + hi) / 2;
    const double spread = (mean == 0.0) ? (hi - lo) : (hi - lo) / std::abs(mean);
    std::cout << "I/hbar spread: " << swkb::fmt_real(spread) << "  (tolerance "
              << swkb::fmt_real(args.tol) << ")\n";
    if (spread > args.tol) failed = true;
    if (!args.csv_path.empty()) write_file(args.csv_path, csv.str());
    return failed ? kExitCheckFailed : kExitPass;
}

struct OracleArgs {
    std::string potential;
    std::vector<std::string> sets;
    int eigen_count = 4;
    double box_lo = 0, box_hi = 0;
    bool have_box = false;
    int grid_points = 0;
    double rel_tol = 1e-6;
    double threshold = 0;  // 0: per-entry default
    bool no_box_check = false;
    bool isospectrality = false;
    std::string sign = "minus";
    std::string csv_path, json_path;
};

double default_oracle_threshold(const std::string& name) {
    if (name == "morse" || name == "eckart_like") return 1e-4;
    return 1e-5;
}

int cmd_oracle_compare(const OracleArgs& args) {
    const swkb::ConstantMap overrides = parse_overrides(args.sets);
    const swkb::SuperpotentialSpec spec = swkb::catalog_entry(args.potential, overrides);
    swkb::OracleConfig config;
    config.eigen_count = args.eigen_count;
    config.convergence_rel_tol = args.rel_tol;
    config.check_box = !args.no_box_check;
    if (args.grid_points > 0) {
        config.grid_points = args.grid_points;
    }
    if (args.have_box) {
        config.box = swkb::DomainInterval::open(args.box_lo, args.box_hi);
        config.use_default_box = false;
    }
    const double threshold =
        args.threshold > 0 ? args.threshold : default_oracle_threshold(spec.name);
    const swkb::Sign sign = args.sign == "plus" ? swkb::Sign::plus : swkb::Sign::minus;

    const swkb::RunManifest manifest = swkb::RunManifest::make(
        "oracle-compare --potential " + args.potential, override_strings(overrides),
        swkb::to_json(config));

    if (args.isospectrality) {
        const double gap = swkb::isospectrality_check(spec, config);
        std::cout << "partner gap max |E-_{n+1} - E+_n| (relative): " << swkb::fmt_real(gap)
                  << "\n";
        return gap <= threshold ? kExitPass : kExitCheckFailed;
    }

    const swkb::OracleReport report = swkb::solve_spectrum(spec, sign, config);
    swkb::CsvWriter csv({"name", "n", "algebraic", "numerical", "deviation"}, manifest);
    std::cout << "  n    algebraic        numerical        deviation\n";
    for (int n = 0; n < args.eigen_count; ++n) {
        std::printf("%3d  %15.10f  %15.10f  %+10.3e\n", n, report.algebraic[n],
                    report.eigenvalues[n], report.eigenvalues[n] - report.algebraic[n]);
        csv.add_row({spec.name, std::to_string(n), swkb::fmt_real(report.algebraic[n]),
                     swkb::fmt_real(report.eigenvalues[n]),
                     swkb::fmt_real(report.eigenvalues[n] - report.algebraic[n])});
    }
    std::cout << "max relative deviation: " << swkb::fmt_real(report.max_rel_deviation)
              << "  (threshold " << swkb::fmt_real(threshold) << ", grid "
              << report.grid_points_used << ")\n";
    if (!args.csv_path.empty()) write_file(args.csv_path, csv.str());
    if (!args.json_path.empty()) {
        json doc{{"manifest", swkb::to_json(manifest)}, {"report", swkb::to_json(report)}};
        write_file(args.json_path, doc.dump(2) + "\n");
    }
    return report.max_rel_deviation <= threshold ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"swkb-lab: numerical laboratory for SWKB quantization of shape-invariant "
                 "superpotentials"};
    app.require_subcommand(1);
    app.set_version_flag("--version", swkb::tool_version());

    auto* catalog_cmd = app.add_subcommand("catalog", "catalog inspection");
    catalog_cmd->require_subcommand(1);
    CatalogArgs cat_args;
    auto* list_cmd = catalog_cmd->add_subcommand("list", "list catalog entries");
    list_cmd->add_flag("--json", cat_args.as_json, "emit the machine-readable JSON document");
    list_cmd->add_option("--name", cat_args.name, "show a single entry");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "check I(a,n,hbar) = n*pi*hbar");
    verify_cmd->add_option("--potential", verify_args.potential, "catalog entry")->required();
    verify_cmd->add_option("--n", verify_args.n_range, "level range, e.g. 0..10");
    verify_cmd->add_option("--set", verify_args.sets, "parameter override key=value");
    verify_cmd->add_option("--method", verify_args.method, "gauss | tanh-sinh");
    verify_cmd->add_option("--tol", verify_args.tol, "relative residual tolerance");
    verify_cmd->add_option("--csv", verify_args.csv_path, "write CSV report");
    verify_cmd->add_option("--json", verify_args.json_path, "write JSON report");
    verify_cmd->add_option("--plot-data", verify_args.plot_path,
                           "write (x, integrand) samples for external plotting");

    SiCheckArgs si_args;
    auto* si_cmd = app.add_subcommand("si-check", "shape-invariance residuals and classifier");
    si_cmd->add_option("--potential", si_args.potential, "catalog entry")->required();
    si_cmd->add_option("--set", si_args.sets, "parameter override key=value");
    auto* xlo = si_cmd->add_option("--x-lo", si_args.x_lo, "grid x lower bound");
    auto* xhi = si_cmd->add_option("--x-hi", si_args.x_hi, "grid x upper bound");
    auto* alo = si_cmd->add_option("--a-lo", si_args.a_lo, "grid a lower bound");
    auto* ahi = si_cmd->add_option("--a-hi", si_args.a_hi, "grid a upper bound");
    si_cmd->add_option("--x-points", si_args.x_points, "grid points in x");
    si_cmd->add_option("--a-points", si_args.a_points, "grid points in a");
    si_cmd->add_option("--tol", si_args.tol, "max residual tolerance");
    si_cmd->add_option("--json", si_args.json_path, "write JSON report");

    SpectrumArgs spec_args;
    auto* spec_cmd = app.add_subcommand("spectrum", "algebraic spectrum table");
    spec_cmd->add_option("--potential", spec_args.potential, "catalog entry")->required();
    spec_cmd->add_option("--set", spec_args.sets, "parameter override key=value");
    spec_cmd->add_option("--n-max", spec_args.n_max, "highest level");
    spec_cmd->add_option("--csv", spec_args.csv_path, "write CSV table");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "hbar sweep of the SWKB integral");
    sweep_cmd->add_option("--potential", sweep_args.potential, "catalog entry")->required();
    sweep_cmd->add_option("--n", sweep_args.n, "level");
    sweep_cmd->add_option("--hbar", sweep_args.hbar_list, "comma-separated hbar values");
    sweep_cmd->add_option("--set", sweep_args.sets, "parameter override key=value");
    sweep_cmd->add_option("--tol", sweep_args.tol, "I/hbar constancy tolerance");
    sweep_cmd->add_option("--csv", sweep_args.csv_path, "write CSV table");

    OracleArgs oracle_args;
    auto* oracle_cmd = app.add_subcommand("oracle-compare",
                                          "algebraic spectrum vs direct eigensolve");
    oracle_cmd->add_option("--potential", oracle_args.potential, "catalog entry")->required();
    oracle_cmd->add_option("--set", oracle_args.sets, "parameter override key=value");
    oracle_cmd->add_option("--eigen-count", oracle_args.eigen_count, "number of eigenvalues");
    auto* blo = oracle_cmd->add_option("--box-lo", oracle_args.box_lo, "Dirichlet box lower edge");
    auto* bhi = oracle_cmd->add_option("--box-hi", oracle_args.box_hi, "Dirichlet box upper edge");
    oracle_cmd->add_option("--grid-points", oracle_args.grid_points, "initial grid size");
    oracle_cmd->add_option("--rel-tol", oracle_args.rel_tol, "grid convergence tolerance");
    oracle_cmd->add_option("--threshold", oracle_args.threshold,
                           "max relative deviation (default per entry)");
    oracle_cmd->add_flag("--no-box-check", oracle_args.no_box_check,
                         "skip the enlarged-box comparison");
    oracle_cmd->add_flag("--isospectrality", oracle_args.isospectrality,
                         "check E-_{n+1} = E+_n instead of the minus spectrum");
    oracle_cmd->add_option("--sign", oracle_args.sign, "minus | plus");
    oracle_cmd->add_option("--csv", oracle_args.csv_path, "write CSV report");
    oracle_cmd->add_option("--json", oracle_args.json_path, "write JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitInvalid;
    }

    si_args.have_x = xlo->count() > 0 || xhi->count() > 0;
    si_args.have_a = alo->count() > 0 || ahi->count() > 0;
    oracle_args.have_box = blo->count() > 0 || bhi->count() > 0;
    if (oracle_args.have_box && (blo->count() == 0 || bhi->count() == 0)) {
        std::cerr << "oracle-compare: --box-lo and --box-hi must be given together\n";
        return kExitInvalid;
    }

    try {
        if (list_cmd->parsed()) return cmd_catalog_list(cat_args);
        if (verify_cmd->parsed()) return cmd_verify(verify_args);
        if (si_cmd->parsed()) return cmd_si_check(si_args);
        if (spec_cmd->parsed()) return cmd_spectrum(spec_args);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_args);
        if (oracle_cmd->parsed()) return cmd_oracle_compare(oracle_args);
    } catch (const swkb::ValidityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const swkb::UnknownParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const swkb::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const swkb::Error& e) {
        // checks ran but could not be satisfied (bracket, convergence, box)
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitInvalid;
}
