#include "qre/estimator.hpp"

#include <cmath>

namespace qre {

void validate(const ProblemResources& res) {
    if (res.k < 1) throw ValidationError("problem resources: k must be >= 1");
    if (!(res.V >= static_cast<double>(res.k)))
        throw ValidationError("problem resources: V must be >= k");
}

namespace {

// physical rate at layout size n, nullopt when the law saturates
std::optional<double> rate_at(const ScalabilityModel& model, double p0,
                              std::int64_t n) {
    try {
        return physical_error_rate(model, p0, n);
    } catch (const RateSaturated&) {
        return std::nullopt;
    }
}

bool distance_feasible(const ProblemResources& res,
                       const HardwareArchetype& arch,
                       const ScalabilityModel& model,
                       const SurfaceCodeParams& sc, int d) {
    const std::int64_t n = surface_physical_qubits(d, res.k);
    const auto p = rate_at(model, arch.p0, n);
    if (!p) return false;
    // at or above threshold the code suppresses nothing, whatever the budget
    // says (only reachable when V <= 1/O; beyond that p_L <= 1/V < O already
    // forces p below threshold)
    if (!(*p < sc.p_th)) return false;
    return meets_budget(surface_logical_error_rate(sc, *p, d), 1.0 / res.V);
}

ResourceEstimate fill_estimate(const ProblemResources& res,
                               const HardwareArchetype& arch, int d,
                               std::int64_t n_phys, double p_phys, double p_L,
                               std::string code_label) {
    ResourceEstimate est;
    est.d = d;
    est.code_label = std::move(code_label);
    est.n_phys = n_phys;
    est.p_phys = p_phys;
    est.p_L = p_L;
    est.tocks = res.V / static_cast<double>(res.k);
    est.cycles = est.tocks * static_cast<double>(d);
    est.runtime_seconds = arch.gate_time * est.cycles;
    est.spacetime_volume_phys =
        est.runtime_seconds * static_cast<double>(n_phys);
    return est;
}

}  // namespace

std::optional<int> solve_distance_scan(const ProblemResources& res,
                                       const HardwareArchetype& arch,
                                       const ScalabilityModel& model,
                                       const SurfaceCodeParams& sc) {
    validate(res);
    validate(arch);
    validate(sc);
    for (int d = 1; d <= sc.d_max; ++d)
        if (distance_feasible(res, arch, model, sc, d)) return d;
    return std::nullopt;
}

double solve_distance_closed_form(const ProblemResources& res,
                                  const HardwareArchetype& arch, double s,
                                  const SurfaceCodeParams& sc, WBranch branch) {
    validate(res);
    validate(arch);
    validate(sc);
    if (!(s > 0.0)) throw ValidationError("closed form: s must be positive");
    const double vo = res.V * sc.overhead;
    if (vo <= 1.0)
        throw DegenerateVolume("closed form: V*O = " + std::to_string(vo) +
                               " <= 1");
    const double a = std::sqrt(2.0 * static_cast<double>(res.k)) *
                     std::pow(arch.p0 / sc.p_th, s / 2.0);
    const double ln_b = -s * std::log(vo);
    double x = a * ln_b;
    if (x < neg_inv_e) {
        if (x >= neg_inv_e - 1e-15) {
            x = neg_inv_e;  // boundary round-off; lambert_w snaps the same way
        } else {
            throw NoRealSolution(
                "closed form: a*ln(b) = " + std::to_string(x) +
                " below -1/e; device above effective threshold at every size");
        }
    }
    const double w = lambert_w(x, branch);
    return ln_b / w - 1.0;
}

std::optional<int> closed_form_distance(const ProblemResources& res,
                                        const HardwareArchetype& arch, double s,
                                        const SurfaceCodeParams& sc) {
    double d_cont = 0.0;
    try {
        d_cont = solve_distance_closed_form(res, arch, s, sc);
    } catch (const NoRealSolution&) {
        return std::nullopt;
    }
    const double d_prime = d_cont + 1.0;
    const int candidate =
        std::max(1, static_cast<int>(std::ceil(d_prime)) - 1);
    const ScalabilityModel model = ScalabilityModel::power_law(s);
    // rounding direction at the crossing is ambiguous: verify the candidate
    // and its neighbors against the real inequality
    for (int d : {candidate - 1, candidate, candidate + 1})
        if (d >= 1 && d <= sc.d_max &&
            distance_feasible(res, arch, model, sc, d))
            return d;
    return std::nullopt;
}

std::optional<ResourceEstimate> estimate_resources(
    const ProblemResources& res, const HardwareArchetype& arch,
    const ScalabilityModel& model, const SurfaceCodeParams& sc) {
    const auto d = solve_distance_scan(res, arch, model, sc);
    if (!d) return std::nullopt;
    const std::int64_t n = surface_physical_qubits(*d, res.k);
    const double p = *rate_at(model, arch.p0, n);  // feasible => not saturated
    const double p_L = surface_logical_error_rate(sc, p, *d);
    return fill_estimate(res, arch, *d, n, p, p_L, "");
}

std::optional<ResourceEstimate> estimate_resources(
    const ProblemResources& res, const HardwareArchetype& arch,
    const ScalabilityModel& model, const LdpcFamily& family) {
    validate(res);
    validate(arch);
    const auto sel = select_ldpc_code(
        family, res.k, 1.0 / res.V,
        [&](std::int64_t n) { return rate_at(model, arch.p0, n); });
    if (!sel) return std::nullopt;
    return fill_estimate(res, arch, sel->code.d_circ, sel->n_phys, sel->p_phys,
                         sel->p_L, sel->code.label);
}

namespace {

template <typename Code>
double min_scalability_impl(const ProblemResources& res,
                            const HardwareArchetype& arch, ModelKind kind,
                            const Code& code, double s_lo, double s_hi,
                            double tol) {
    if (kind == ModelKind::Infinite)
        throw ValidationError(
            "min_scalability: model kind must be PowerLaw or Logarithmic");
    const auto feasible = [&](double s) {
        return estimate_resources(res, arch, ScalabilityModel::make(kind, s),
                                  code)
            .has_value();
    };
    return bisect_threshold(feasible, s_lo, s_hi, tol);
}

}  // namespace

double min_scalability(const ProblemResources& res,
                       const HardwareArchetype& arch, ModelKind kind,
                       const SurfaceCodeParams& sc, double s_lo, double s_hi,
                       double tol) {
    return min_scalability_impl(res, arch, kind, sc, s_lo, s_hi, tol);
}

double min_scalability(const ProblemResources& res,
                       const HardwareArchetype& arch, ModelKind kind,
                       const LdpcFamily& family, double s_lo, double s_hi,
                       double tol) {
    return min_scalability_impl(res, arch, kind, family, s_lo, s_hi, tol);
}

double spacetime_volume_total(const ResourceEstimate& est) {
    return est.runtime_seconds * static_cast<double>(est.n_phys);
}

}  // namespace qre
