// batch front end for the resource-estimation library: estimates, minimum
// scalability, competitiveness scans, catalog validation.  all output is
// deterministic CSV (header row + data rows) on stdout or --out.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qre/catalog.hpp"
#include "qre/competitive.hpp"
#include "qre/csv.hpp"
#include "qre/estimator.hpp"

namespace {

using namespace qre;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

////////////////////////////////////////////////////////////////////////////
// option plumbing

struct CommonOpts {
    std::vector<std::string> instances;
    std::string catalog_path;
    std::vector<std::string> archetypes;
    std::optional<double> p0_override;
    std::optional<double> gate_time_override;
    std::string model = "power";
    std::optional<double> s;
    std::string code = "surface";
    std::string ldpc_family_path;
    std::vector<std::string> grids;
    std::string band = "1:10";
    std::string out_path;
    double s_lo = default_s_lo;
    double s_hi = default_s_hi;
    double tol = default_s_tol;
};

double parse_real(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("cannot parse " + what + " '" + text + "'");
    }
}

// "lo:hi:step" -> ascending grid values lo, lo+step, ..., <= hi
std::vector<double> parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3)
        throw UsageError("--grid expects lo:hi:step, got '" + text + "'");
    const double lo = parse_real(parts[0], "grid lo");
    const double hi = parse_real(parts[1], "grid hi");
    const double step = parse_real(parts[2], "grid step");
    if (!(step > 0.0) || !(lo <= hi))
        throw UsageError("--grid needs lo <= hi and step > 0");
    std::vector<double> grid;
    for (double v = lo; v <= hi + 1e-9 * step; v += step)
        grid.push_back(std::min(v, hi));
    return grid;
}

BandPolicy parse_band(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("--band expects lo:hi, got '" + text + "'");
    BandPolicy band;
    band.lo = parse_real(text.substr(0, colon), "band lo");
    band.hi = parse_real(text.substr(colon + 1), "band hi");
    validate(band);
    return band;
}

HardwareArchetype resolve_archetype(const std::string& name,
                                    const CommonOpts& opts) {
    HardwareArchetype arch;
    if (name == "A") {
        arch = HardwareArchetype::type_a();
    } else if (name == "B") {
        arch = HardwareArchetype::type_b();
    } else if (name == "custom") {
        if (!opts.p0_override || !opts.gate_time_override)
            throw UsageError("--archetype custom requires --p0 and --gate-time");
        arch = {"custom", 0.0, 0.0};
    } else {
        throw UsageError("unknown archetype '" + name +
                         "' (expected A, B or custom)");
    }
    if (opts.p0_override) arch.p0 = *opts.p0_override;
    if (opts.gate_time_override) arch.gate_time = *opts.gate_time_override;
    validate(arch);
    return arch;
}

std::vector<HardwareArchetype> resolve_archetypes(const CommonOpts& opts) {
    std::vector<std::string> names = opts.archetypes;
    if (names.empty()) names = {"A", "B"};
    if ((opts.p0_override || opts.gate_time_override) && names.size() != 1)
        throw UsageError(
            "--p0/--gate-time overrides need exactly one --archetype");
    std::vector<HardwareArchetype> archetypes;
    archetypes.reserve(names.size());
    for (const auto& name : names)
        archetypes.push_back(resolve_archetype(name, opts));
    return archetypes;
}

std::vector<InstanceRecord> resolve_instances(const CommonOpts& opts) {
    std::vector<InstanceRecord> all;
    if (!opts.catalog_path.empty()) {
        all = load_catalog_file(opts.catalog_path);
    } else {
        all = {canonical_instance()};
    }
    if (opts.instances.empty()) return all;
    std::vector<InstanceRecord> picked;
    for (const auto& id : opts.instances) {
        auto rec = find_instance(all, id);
        if (!rec)
            throw ValidationError("instance '" + id + "' not found in " +
                                  (opts.catalog_path.empty()
                                       ? "the built-in catalog"
                                       : opts.catalog_path));
        picked.push_back(std::move(*rec));
    }
    return picked;
}

ScalabilityModel resolve_model(const CommonOpts& opts) {
    if (opts.model == "infinite") return ScalabilityModel::infinite();
    if (!opts.s)
        throw UsageError("--model " + opts.model + " requires --s");
    if (opts.model == "power") return ScalabilityModel::power_law(*opts.s);
    if (opts.model == "log") return ScalabilityModel::logarithmic(*opts.s);
    throw UsageError("unknown model '" + opts.model +
                     "' (expected infinite, power or log)");
}

// grid axes for the scans: one --grid applies to both, two set A then B
std::pair<std::vector<double>, std::vector<double>> resolve_grids(
    const CommonOpts& opts) {
    if (opts.grids.size() > 2)
        throw UsageError("--grid may be given at most twice (axis A, axis B)");
    const std::string spec_a = opts.grids.empty() ? "1:100:1" : opts.grids[0];
    const std::string spec_b =
        opts.grids.size() < 2 ? spec_a : opts.grids[1];
    return {parse_grid(spec_a), parse_grid(spec_b)};
}

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw ValidationError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void emit_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << fields[i];
    }
    out << '\n';
}

std::string model_name(const ScalabilityModel& model) {
    switch (model.kind) {
        case ModelKind::Infinite: return "infinite";
        case ModelKind::PowerLaw: return "power";
        case ModelKind::Logarithmic: return "log";
    }
    return "?";
}

////////////////////////////////////////////////////////////////////////////
// commands

int run_estimate(const CommonOpts& opts) {
    const auto instances = resolve_instances(opts);
    const auto archetypes = resolve_archetypes(opts);
    const auto model = resolve_model(opts);
    const SurfaceCodeParams sc;
    std::optional<LdpcFamily> family;
    if (opts.code == "ldpc") {
        if (opts.ldpc_family_path.empty())
            throw UsageError("--code ldpc requires --ldpc-family");
        family = load_ldpc_family_file(opts.ldpc_family_path);
    } else if (opts.code != "surface") {
        throw UsageError("unknown code '" + opts.code +
                         "' (expected surface or ldpc)");
    }

    Output output(opts.out_path);
    auto& out = output.stream();
    emit_row(out, {"instance_id", "archetype", "model", "s", "code", "feasible",
                   "d", "ldpc_code", "n_phys", "p_phys", "p_L", "tocks",
                   "cycles", "runtime_seconds", "spacetime_volume_phys"});
    const std::string s_text =
        model.kind == ModelKind::Infinite ? "" : csv::fmt(model.s);
    for (const auto& rec : instances) {
        const ProblemResources res{rec.k, rec.V};
        for (const auto& arch : archetypes) {
            const auto est =
                family ? estimate_resources(res, arch, model, *family)
                       : estimate_resources(res, arch, model, sc);
            std::vector<std::string> row{rec.instance_id, arch.name,
                                         model_name(model), s_text, opts.code};
            if (est) {
                row.insert(row.end(),
                           {"1", csv::fmt(est->d), est->code_label,
                            csv::fmt(est->n_phys), csv::fmt(est->p_phys),
                            csv::fmt(est->p_L), csv::fmt(est->tocks),
                            csv::fmt(est->cycles),
                            csv::fmt(est->runtime_seconds),
                            csv::fmt(est->spacetime_volume_phys)});
            } else {
                row.insert(row.end(), {"0", "", "", "", "", "", "", "", "", ""});
            }
            emit_row(out, row);
        }
    }
    return kExitOk;
}

int run_min_scalability(const CommonOpts& opts) {
    const auto instances = resolve_instances(opts);
    const auto archetypes = resolve_archetypes(opts);
    ModelKind kind = ModelKind::PowerLaw;
    if (opts.model == "log") {
        kind = ModelKind::Logarithmic;
    } else if (opts.model != "power") {
        throw UsageError("min-scalability supports --model power or log");
    }
    const SurfaceCodeParams sc;
    std::optional<LdpcFamily> family;
    if (opts.code == "ldpc") {
        if (opts.ldpc_family_path.empty())
            throw UsageError("--code ldpc requires --ldpc-family");
        family = load_ldpc_family_file(opts.ldpc_family_path);
    }

    Output output(opts.out_path);
    auto& out = output.stream();
    emit_row(out, {"instance_id", "archetype", "model", "s_min"});
    for (const auto& rec : instances) {
        const ProblemResources res{rec.k, rec.V};
        for (const auto& arch : archetypes) {
            const double s_min =
                family ? min_scalability(res, arch, kind, *family, opts.s_lo,
                                         opts.s_hi, opts.tol)
                       : min_scalability(res, arch, kind, sc, opts.s_lo,
                                         opts.s_hi, opts.tol);
            emit_row(out, {rec.instance_id, arch.name, opts.model,
                           csv::fmt(s_min)});
        }
    }
    return kExitOk;
}

int run_scan_competitive(const CommonOpts& opts) {
    const auto instances = resolve_instances(opts);
    if (instances.size() != 1)
        throw UsageError("scan-competitive runs on exactly one instance");
    const auto [grid_a, grid_b] = resolve_grids(opts);
    const BandPolicy band = parse_band(opts.band);
    const SurfaceCodeParams sc;
    const auto arch_a = HardwareArchetype::type_a();
    const auto arch_b = HardwareArchetype::type_b();
    const auto& rec = instances.front();
    const std::int64_t k_max = default_k_max_factor * rec.k;

    const auto cells = scan_surface(grid_a, grid_b, rec.V, rec.k, band, arch_a,
                                    arch_b, sc, k_max);

    Output output(opts.out_path);
    auto& out = output.stream();
    emit_row(out, {"s_A", "s_B", "status", "k_ratio", "time_ratio", "d_A",
                   "d_B"});
    for (const auto& cell : cells)
        emit_row(out, {csv::fmt(cell.s_A), csv::fmt(cell.s_B),
                       to_string(cell.status), csv::fmt(cell.k_ratio),
                       csv::fmt(cell.time_ratio), csv::fmt(cell.d_A),
                       csv::fmt(cell.d_B)});
    return kExitOk;
}

int run_scan_ldpc(const CommonOpts& opts) {
    const auto instances = resolve_instances(opts);
    if (instances.size() != 1)
        throw UsageError("scan-ldpc runs on exactly one instance");
    if (opts.ldpc_family_path.empty())
        throw UsageError("scan-ldpc requires --ldpc-family");
    const auto family = load_ldpc_family_file(opts.ldpc_family_path);
    const auto [grid_a, grid_b] = resolve_grids(opts);
    const BandPolicy band = parse_band(opts.band);
    const SurfaceCodeParams sc;
    const auto arch_a = HardwareArchetype::type_a();
    const auto arch_b = HardwareArchetype::type_b();
    const auto& rec = instances.front();
    const std::int64_t k_max = default_k_max_factor * rec.k;

    const auto cells = scan_ldpc(grid_a, grid_b, rec.V, rec.k, band, arch_a,
                                 arch_b, sc, family, k_max);

    Output output(opts.out_path);
    auto& out = output.stream();
    emit_row(out, {"s_A", "s_B", "status", "improvement", "d_A", "d_B",
                   "ldpc_code"});
    for (const auto& cell : cells)
        emit_row(out, {csv::fmt(cell.s_A), csv::fmt(cell.s_B),
                       to_string(cell.status), csv::fmt(cell.improvement),
                       csv::fmt(cell.d_A), csv::fmt(cell.d_B),
                       cell.code_label});
    return kExitOk;
}

int run_catalog_validate(const CommonOpts& opts) {
    if (opts.catalog_path.empty())
        throw UsageError("catalog-validate requires --catalog");
    std::ifstream in(opts.catalog_path);
    if (!in)
        throw ParseError("catalog: cannot open '" + opts.catalog_path + "'");
    const auto report = catalog_report(in);

    Output output(opts.out_path);
    auto& out = output.stream();
    emit_row(out, {"instance_id", "status", "detail"});
    bool all_ok = true;
    for (const auto& entry : report) {
        // detail strings may carry commas; quote them
        std::string detail = entry.detail;
        if (!detail.empty()) detail = "\"" + detail + "\"";
        emit_row(out, {entry.instance_id,
                       entry.accepted ? "accepted" : "rejected", detail});
        all_ok = all_ok && entry.accepted;
    }
    return all_ok ? kExitOk : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "resource estimation under finite hardware scalability: code "
        "distances, physical qubits, runtimes, competitiveness scans"};
    app.require_subcommand(1);

    CommonOpts opts;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--instance", opts.instances,
                        "instance id(s) from the catalog");
        cmd->add_option("--catalog", opts.catalog_path,
                        "catalog file (defaults to the built-in 14_in)");
        cmd->add_option("--archetype", opts.archetypes,
                        "A, B or custom (repeatable)");
        cmd->add_option("--p0", opts.p0_override, "override base error rate");
        cmd->add_option("--gate-time", opts.gate_time_override,
                        "override gate time in seconds");
        cmd->add_option("--model", opts.model, "infinite, power or log");
        cmd->add_option("--s", opts.s, "scalability parameter");
        cmd->add_option("--code", opts.code, "surface or ldpc");
        cmd->add_option("--ldpc-family", opts.ldpc_family_path,
                        "ldpc family config file");
        cmd->add_option("--grid", opts.grids,
                        "scan axis as lo:hi:step (once for both axes, twice "
                        "for A then B)");
        cmd->add_option("--band", opts.band, "competitiveness band as lo:hi");
        cmd->add_option("--s-lo", opts.s_lo, "bisection bracket low end");
        cmd->add_option("--s-hi", opts.s_hi, "bisection bracket high end");
        cmd->add_option("--tol", opts.tol, "bisection tolerance");
        cmd->add_option("--out", opts.out_path, "output file (default stdout)");
    };

    auto* estimate = app.add_subcommand("estimate", "resource estimate rows");
    auto* min_scal =
        app.add_subcommand("min-scalability", "minimum scalability rows");
    auto* scan_comp = app.add_subcommand(
        "scan-competitive", "surface-code competitiveness grid scan");
    auto* scan_ldpc_cmd =
        app.add_subcommand("scan-ldpc", "ldpc improvement grid scan");
    auto* cat_val =
        app.add_subcommand("catalog-validate", "validate a catalog file");
    for (auto* cmd : {estimate, min_scal, scan_comp, scan_ldpc_cmd, cat_val})
        add_common(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (estimate->parsed()) return run_estimate(opts);
        if (min_scal->parsed()) return run_min_scalability(opts);
        if (scan_comp->parsed()) return run_scan_competitive(opts);
        if (scan_ldpc_cmd->parsed()) return run_scan_ldpc(opts);
        if (cat_val->parsed()) return run_catalog_validate(opts);
        std::cerr << "error: no command given\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
