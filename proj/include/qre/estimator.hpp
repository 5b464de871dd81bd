#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qre/codes.hpp"
#include "qre/errors.hpp"
#include "qre/numerics.hpp"
#include "qre/scalability.hpp"

namespace qre {

// workload summary: k logical qubits busy for V/k tocks
struct ProblemResources {
    std::int64_t k = 0;
    double V = 0.0;  // space-time volume, logical-qubit * tocks
};

void validate(const ProblemResources& res);

struct ResourceEstimate {
    int d = 0;               // surface distance, or d_circ on the ldpc path
    std::string code_label;  // empty for surface, selected code for ldpc
    std::int64_t n_phys = 0;
    double p_phys = 0.0;
    double p_L = 0.0;
    double tocks = 0.0;             // t_L = V / k
    double cycles = 0.0;            // C = t_L * d
    double runtime_seconds = 0.0;   // T = gate_time * C
    double spacetime_volume_phys = 0.0;  // T * n_phys
};

// smallest d in [1, d_max] with O*(p_phys(n(d))/p_th)^((d+1)/2) <= 1/V, where
// n(d) = 2(d+1)^2 k and the rate passes through the scalability model.  every
// d is tried: p_phys grows with n(d), so feasibility is not monotone in d.
// feasibility also requires p_phys < p_th -- at or above threshold the code
// protects nothing (only binding when V <= 1/O).  nullopt = no feasible d.
std::optional<int> solve_distance_scan(const ProblemResources& res,
                                       const HardwareArchetype& arch,
                                       const ScalabilityModel& model,
                                       const SurfaceCodeParams& sc);

// continuous solution d' - 1 of the power-law feasibility equality via
//   a = [2k(p0/p_th)^s]^(1/2),  b = (V*O)^(-s),  d' = ln(b) / W(a*ln(b)).
// Secondary (W-1) gives the smaller, physical root; Principal exposes the
// upper crossing for diagnostics.  throws DegenerateVolume when V*O <= 1 and
// NoRealSolution when a*ln(b) < -1/e.
double solve_distance_closed_form(const ProblemResources& res,
                                  const HardwareArchetype& arch, double s,
                                  const SurfaceCodeParams& sc,
                                  WBranch branch = WBranch::Secondary);

// integer candidate from the closed form: max(1, ceil(d')-1), locally
// verified against the feasibility inequality and adjusted by +-1.
// nullopt when no integer distance in [1, d_max] is feasible.
std::optional<int> closed_form_distance(const ProblemResources& res,
                                        const HardwareArchetype& arch, double s,
                                        const SurfaceCodeParams& sc);

// full surface-code estimate; nullopt when no distance is feasible
std::optional<ResourceEstimate> estimate_resources(
    const ProblemResources& res, const HardwareArchetype& arch,
    const ScalabilityModel& model, const SurfaceCodeParams& sc);

// ldpc path: smallest capable family code at target 1/V, runtime uses d_circ
std::optional<ResourceEstimate> estimate_resources(
    const ProblemResources& res, const HardwareArchetype& arch,
    const ScalabilityModel& model, const LdpcFamily& family);

inline constexpr double default_s_lo = 0.5;
inline constexpr double default_s_hi = 1e4;
inline constexpr double default_s_tol = 1e-3;

// smallest s making the workload feasible, by bisection on "estimate_resources
// succeeds" (monotone in s).  BracketError if already feasible at s_lo or
// still infeasible at s_hi.
double min_scalability(const ProblemResources& res,
                       const HardwareArchetype& arch, ModelKind kind,
                       const SurfaceCodeParams& sc, double s_lo = default_s_lo,
                       double s_hi = default_s_hi, double tol = default_s_tol);
double min_scalability(const ProblemResources& res,
                       const HardwareArchetype& arch, ModelKind kind,
                       const LdpcFamily& family, double s_lo = default_s_lo,
                       double s_hi = default_s_hi, double tol = default_s_tol);

// runtime * physical qubits
double spacetime_volume_total(const ResourceEstimate& est);

}  // namespace qre
