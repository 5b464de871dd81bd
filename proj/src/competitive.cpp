#include "qre/competitive.hpp"

#include <algorithm>
#include <cmath>

namespace qre {

void validate(const BandPolicy& band) {
    if (!(band.lo > 0.0) || !(band.lo <= band.hi))
        throw ValidationError("band policy: need 0 < lo <= hi");
}

const char* to_string(CellStatus status) {
    switch (status) {
        case CellStatus::Competitive: return "Competitive";
        case CellStatus::TypeB_Infeasible: return "TypeB_Infeasible";
        case CellStatus::TypeA_NotCompetitive: return "TypeA_NotCompetitive";
    }
    return "?";
}

namespace {

// the single ratio expression used everywhere (search predicate, stored cell
// values, acceptance recomputation) so boundary comparisons agree bit-for-bit
double ratio_from(const HardwareArchetype& arch_A,
                  const HardwareArchetype& arch_B, int d_A, int d_B,
                  std::int64_t k_A, std::int64_t k_B) {
    return (arch_A.gate_time / arch_B.gate_time) *
           (static_cast<double>(d_A) / static_cast<double>(d_B)) *
           (static_cast<double>(k_B) / static_cast<double>(k_A));
}

std::optional<int> distance_at(std::int64_t k, double V, double s,
                               const HardwareArchetype& arch,
                               const SurfaceCodeParams& sc) {
    return solve_distance_scan({k, V}, arch, ScalabilityModel::power_law(s),
                               sc);
}

void check_grid(const std::vector<double>& grid, const char* name) {
    if (grid.empty())
        throw ValidationError(std::string("scan: empty grid ") + name);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1]))
            throw ValidationError(std::string("scan: grid ") + name +
                                  " must be strictly ascending");
}

}  // namespace

std::optional<double> time_ratio_surface(double s_A, double s_B,
                                         std::int64_t k_A, std::int64_t k_B,
                                         double V,
                                         const HardwareArchetype& arch_A,
                                         const HardwareArchetype& arch_B,
                                         const SurfaceCodeParams& sc) {
    const auto d_A = distance_at(k_A, V, s_A, arch_A, sc);
    if (!d_A) return std::nullopt;
    const auto d_B = distance_at(k_B, V, s_B, arch_B, sc);
    if (!d_B) return std::nullopt;
    return ratio_from(arch_A, arch_B, *d_A, *d_B, k_A, k_B);
}

std::optional<std::int64_t> find_min_kA(double s_A, double s_B, double V,
                                        std::int64_t k_B,
                                        const BandPolicy& band,
                                        const HardwareArchetype& arch_A,
                                        const HardwareArchetype& arch_B,
                                        const SurfaceCodeParams& sc,
                                        std::int64_t k_max) {
    validate(band);
    if (k_max < k_B)
        throw ValidationError("find_min_kA: k_max must be >= k_B");
    const auto d_B = distance_at(k_B, V, s_B, arch_B, sc);
    if (!d_B) return std::nullopt;

    const auto d_A_at = [&](std::int64_t k) {
        return distance_at(k, V, s_A, arch_A, sc);
    };
    const auto pred = [&](std::int64_t k) {
        const auto d_A = d_A_at(k);
        return d_A &&
               ratio_from(arch_A, arch_B, *d_A, *d_B, k, k_B) <= band.hi;
    };

    std::int64_t k = k_B;
    if (!pred(k)) {
        // geometric bracket: first doubling step that enters the band
        std::int64_t lo = k;
        bool entered = false;
        while (k < k_max) {
            k = std::min(k * 2, k_max);
            if (pred(k)) {
                entered = true;
                break;
            }
            lo = k;
        }
        if (!entered) return std::nullopt;
        while (k - lo > 1) {  // pred(lo) false, pred(k) true
            const std::int64_t mid = lo + (k - lo) / 2;
            (pred(mid) ? k : lo) = mid;
        }
    }

    // the band-entry point found above need not be minimal: d_A drops at
    // smaller layouts and can re-open the band below the bracket.  jump to
    // the smallest k able to satisfy the band with the current distance and
    // repeat; each jump strictly decreases k.
    const double R = (arch_A.gate_time / arch_B.gate_time) *
                     (static_cast<double>(k_B) / static_cast<double>(*d_B));
    while (k > k_B && pred(k - 1)) {
        const auto d_here = d_A_at(k - 1);
        std::int64_t need = static_cast<std::int64_t>(
            std::ceil(R * static_cast<double>(*d_here) / band.hi - 1e-9));
        if (need < k_B) need = k_B;
        while (!pred(need)) ++need;  // ceil round-off repair, a step or two
        k = need <= k - 1 ? need : k - 1;
    }
    return k;
}

CompetitiveCell evaluate_cell(double s_A, double s_B, double V,
                              std::int64_t k_B, const BandPolicy& band,
                              const HardwareArchetype& arch_A,
                              const HardwareArchetype& arch_B,
                              const SurfaceCodeParams& sc,
                              std::int64_t k_max) {
    CompetitiveCell cell;
    cell.s_A = s_A;
    cell.s_B = s_B;
    const auto d_B = distance_at(k_B, V, s_B, arch_B, sc);
    if (!d_B) {
        cell.status = CellStatus::TypeB_Infeasible;
        return cell;
    }
    cell.d_B = *d_B;
    const auto k_A =
        find_min_kA(s_A, s_B, V, k_B, band, arch_A, arch_B, sc, k_max);
    if (!k_A) {
        cell.status = CellStatus::TypeA_NotCompetitive;
        return cell;
    }
    cell.status = CellStatus::Competitive;
    cell.k_A = *k_A;
    cell.k_ratio = static_cast<double>(*k_A) / static_cast<double>(k_B);
    cell.d_A = *distance_at(*k_A, V, s_A, arch_A, sc);
    cell.time_ratio =
        ratio_from(arch_A, arch_B, *cell.d_A, *cell.d_B, *k_A, k_B);
    return cell;
}

////////////////////////////////////////////////////////////////////////////
// grid scans: cells are independent; the parallel variants write each cell
// into its grid-order slot, so thread count never changes the output

namespace {

void check_scan_inputs(const std::vector<double>& grid_A,
                       const std::vector<double>& grid_B, double V,
                       std::int64_t k_B, const BandPolicy& band,
                       const HardwareArchetype& arch_A,
                       const HardwareArchetype& arch_B,
                       const SurfaceCodeParams& sc, std::int64_t k_max) {
    check_grid(grid_A, "A");
    check_grid(grid_B, "B");
    validate(ProblemResources{k_B, V});
    validate(band);
    validate(arch_A);
    validate(arch_B);
    validate(sc);
    if (k_max < k_B) throw ValidationError("scan: k_max must be >= k_B");
}

}  // namespace

std::vector<CompetitiveCell> scan_surface_serial(
    const std::vector<double>& grid_A, const std::vector<double>& grid_B,
    double V, std::int64_t k_B, const BandPolicy& band,
    const HardwareArchetype& arch_A, const HardwareArchetype& arch_B,
    const SurfaceCodeParams& sc, std::int64_t k_max) {
    check_scan_inputs(grid_A, grid_B, V, k_B, band, arch_A, arch_B, sc, k_max);
    std::vector<CompetitiveCell> cells;
    cells.reserve(grid_A.size() * grid_B.size());
    for (const double s_A : grid_A)
        for (const double s_B : grid_B)
            cells.push_back(evaluate_cell(s_A, s_B, V, k_B, band, arch_A,
                                          arch_B, sc, k_max));
    return cells;
}

std::vector<CompetitiveCell> scan_surface(const std::vector<double>& grid_A,
                                          const std::vector<double>& grid_B,
                                          double V, std::int64_t k_B,
                                          const BandPolicy& band,
                                          const HardwareArchetype& arch_A,
                                          const HardwareArchetype& arch_B,
                                          const SurfaceCodeParams& sc,
                                          std::int64_t k_max) {
    check_scan_inputs(grid_A, grid_B, V, k_B, band, arch_A, arch_B, sc, k_max);
    const std::int64_t n_A = static_cast<std::int64_t>(grid_A.size());
    const std::int64_t n_B = static_cast<std::int64_t>(grid_B.size());
    std::vector<CompetitiveCell> cells(static_cast<std::size_t>(n_A * n_B));
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (std::int64_t i = 0; i < n_A; ++i)
        for (std::int64_t j = 0; j < n_B; ++j)
            cells[static_cast<std::size_t>(i * n_B + j)] = evaluate_cell(
                grid_A[static_cast<std::size_t>(i)],
                grid_B[static_cast<std::size_t>(j)], V, k_B, band, arch_A,
                arch_B, sc, k_max);
    return cells;
}

std::optional<double> ldpc_improvement(double s_A, std::int64_t held_kA,
                                       double V,
                                       const HardwareArchetype& arch_A,
                                       const LdpcFamily& family,
                                       const SurfaceCodeParams& sc) {
    const ProblemResources res{held_kA, V};
    const ScalabilityModel model = ScalabilityModel::power_law(s_A);
    const auto surface = estimate_resources(res, arch_A, model, sc);
    if (!surface) return std::nullopt;
    const auto ldpc = estimate_resources(res, arch_A, model, family);
    if (!ldpc) return std::nullopt;
    return surface->runtime_seconds / ldpc->runtime_seconds;
}

namespace {

LdpcCell evaluate_ldpc_cell(double s_A, double s_B, double V, std::int64_t k_B,
                            const BandPolicy& band,
                            const HardwareArchetype& arch_A,
                            const HardwareArchetype& arch_B,
                            const SurfaceCodeParams& sc,
                            const LdpcFamily& family, std::int64_t k_max) {
    const CompetitiveCell surface =
        evaluate_cell(s_A, s_B, V, k_B, band, arch_A, arch_B, sc, k_max);
    LdpcCell cell;
    cell.s_A = s_A;
    cell.s_B = s_B;
    cell.status = surface.status;
    cell.d_A = surface.d_A;
    cell.d_B = surface.d_B;
    cell.k_A = surface.k_A;
    if (surface.status != CellStatus::Competitive) return cell;
    const auto ldpc = estimate_resources({*surface.k_A, V}, arch_A,
                                         ScalabilityModel::power_law(s_A),
                                         family);
    if (!ldpc) return cell;  // competitive, but no capable family code
    const auto surf_est = estimate_resources(
        {*surface.k_A, V}, arch_A, ScalabilityModel::power_law(s_A), sc);
    cell.improvement = surf_est->runtime_seconds / ldpc->runtime_seconds;
    cell.code_label = ldpc->code_label;
    return cell;
}

}  // namespace

std::vector<LdpcCell> scan_ldpc_serial(
    const std::vector<double>& grid_A, const std::vector<double>& grid_B,
    double V, std::int64_t k_B, const BandPolicy& band,
    const HardwareArchetype& arch_A, const HardwareArchetype& arch_B,
    const SurfaceCodeParams& sc, const LdpcFamily& family,
    std::int64_t k_max) {
    check_scan_inputs(grid_A, grid_B, V, k_B, band, arch_A, arch_B, sc, k_max);
    std::vector<LdpcCell> cells;
    cells.reserve(grid_A.size() * grid_B.size());
    for (const double s_A : grid_A)
        for (const double s_B : grid_B)
            cells.push_back(evaluate_ldpc_cell(s_A, s_B, V, k_B, band, arch_A,
                                               arch_B, sc, family, k_max));
    return cells;
}

std::vector<LdpcCell> scan_ldpc(const std::vector<double>& grid_A,
                                const std::vector<double>& grid_B, double V,
                                std::int64_t k_B, const BandPolicy& band,
                                const HardwareArchetype& arch_A,
                                const HardwareArchetype& arch_B,
                                const SurfaceCodeParams& sc,
                                const LdpcFamily& family,
                                std::int64_t k_max) {
    check_scan_inputs(grid_A, grid_B, V, k_B, band, arch_A, arch_B, sc, k_max);
    const std::int64_t n_A = static_cast<std::int64_t>(grid_A.size());
    const std::int64_t n_B = static_cast<std::int64_t>(grid_B.size());
    std::vector<LdpcCell> cells(static_cast<std::size_t>(n_A * n_B));
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (std::int64_t i = 0; i < n_A; ++i)
        for (std::int64_t j = 0; j < n_B; ++j)
            cells[static_cast<std::size_t>(i * n_B + j)] = evaluate_ldpc_cell(
                grid_A[static_cast<std::size_t>(i)],
                grid_B[static_cast<std::size_t>(j)], V, k_B, band, arch_A,
                arch_B, sc, family, k_max);
    return cells;
}

}  // namespace qre
