#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qre/codes.hpp"
#include "qre/estimator.hpp"
#include "qre/scalability.hpp"

namespace qre {

// runtime-competitiveness acceptance window on T_A/T_B; ratios below lo are
// better than required and still count as competitive
struct BandPolicy {
    double lo = 1.0;
    double hi = 10.0;
};

void validate(const BandPolicy& band);

inline constexpr std::int64_t default_k_max_factor = 1000000;

enum class CellStatus { Competitive, TypeB_Infeasible, TypeA_NotCompetitive };

const char* to_string(CellStatus status);

struct CompetitiveCell {
    double s_A = 0.0;
    double s_B = 0.0;
    CellStatus status = CellStatus::TypeB_Infeasible;
    std::optional<double> k_ratio;     // k_A / k_B
    std::optional<double> time_ratio;  // T_A / T_B at the chosen k_A
    std::optional<int> d_A;
    std::optional<int> d_B;
    std::optional<std::int64_t> k_A;
};

// T_A/T_B = (t_A/t_B) * (d_A/d_B) * (k_B/k_A) with both distances from the
// integer scan under power-law models; nullopt when either side is infeasible
std::optional<double> time_ratio_surface(double s_A, double s_B,
                                         std::int64_t k_A, std::int64_t k_B,
                                         double V,
                                         const HardwareArchetype& arch_A,
                                         const HardwareArchetype& arch_B,
                                         const SurfaceCodeParams& sc);

// smallest k_A in [k_B, k_max] whose time ratio is <= band.hi.  the ratio is
// only piecewise monotone in k_A (d_A steps up as the layout grows), so a
// geometric bracket + bisection finds the band entry and a jump walk-down
// (re-targeting ceil(R*d_A/band.hi) for the current distance) establishes the
// true minimum.  nullopt: type B infeasible, or no k_A within k_max.
std::optional<std::int64_t> find_min_kA(double s_A, double s_B, double V,
                                        std::int64_t k_B,
                                        const BandPolicy& band,
                                        const HardwareArchetype& arch_A,
                                        const HardwareArchetype& arch_B,
                                        const SurfaceCodeParams& sc,
                                        std::int64_t k_max);

// one cell of the (s_A, s_B) grid
CompetitiveCell evaluate_cell(double s_A, double s_B, double V,
                              std::int64_t k_B, const BandPolicy& band,
                              const HardwareArchetype& arch_A,
                              const HardwareArchetype& arch_B,
                              const SurfaceCodeParams& sc, std::int64_t k_max);

// full scan, one cell per (s_A, s_B) pair in grid order (A-major).
// scan_surface runs cells in parallel when OpenMP is enabled; the serial
// variant is the reference implementation, and both produce identical
// sequences.
std::vector<CompetitiveCell> scan_surface(const std::vector<double>& grid_A,
                                          const std::vector<double>& grid_B,
                                          double V, std::int64_t k_B,
                                          const BandPolicy& band,
                                          const HardwareArchetype& arch_A,
                                          const HardwareArchetype& arch_B,
                                          const SurfaceCodeParams& sc,
                                          std::int64_t k_max);
std::vector<CompetitiveCell> scan_surface_serial(
    const std::vector<double>& grid_A, const std::vector<double>& grid_B,
    double V, std::int64_t k_B, const BandPolicy& band,
    const HardwareArchetype& arch_A, const HardwareArchetype& arch_B,
    const SurfaceCodeParams& sc, std::int64_t k_max);

// T_A^surface / T_A^ldpc at the frozen surface-code k_A; both runtimes from
// estimate_resources, so the ratio reduces to d_A/d_circ.  nullopt when the
// surface distance or every family code is infeasible at this size.
std::optional<double> ldpc_improvement(double s_A, std::int64_t held_kA,
                                       double V,
                                       const HardwareArchetype& arch_A,
                                       const LdpcFamily& family,
                                       const SurfaceCodeParams& sc);

struct LdpcCell {
    double s_A = 0.0;
    double s_B = 0.0;
    CellStatus status = CellStatus::TypeB_Infeasible;
    std::optional<double> improvement;  // T_A^surface / T_A^ldpc
    std::optional<int> d_A;
    std::optional<int> d_B;
    std::optional<std::int64_t> k_A;
    std::string code_label;  // selected family code, when feasible
};

// surface scan first (k_A* per competitive cell), then the ldpc improvement
// at that held k_A.  cells without a surface k_A* keep their surface status
// and carry no improvement.
std::vector<LdpcCell> scan_ldpc(const std::vector<double>& grid_A,
                                const std::vector<double>& grid_B, double V,
                                std::int64_t k_B, const BandPolicy& band,
                                const HardwareArchetype& arch_A,
                                const HardwareArchetype& arch_B,
                                const SurfaceCodeParams& sc,
                                const LdpcFamily& family, std::int64_t k_max);
std::vector<LdpcCell> scan_ldpc_serial(
    const std::vector<double>& grid_A, const std::vector<double>& grid_B,
    double V, std::int64_t k_B, const BandPolicy& band,
    const HardwareArchetype& arch_A, const HardwareArchetype& arch_B,
    const SurfaceCodeParams& sc, const LdpcFamily& family, std::int64_t k_max);

}  // namespace qre
