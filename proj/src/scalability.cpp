#include "qre/scalability.hpp"

#include <cmath>

namespace qre {

namespace {

void require_finite_s(double s) {
    if (!(s > 0.0) || !std::isfinite(s))
        throw ValidationError("scalability s must be a positive real, got " +
                              std::to_string(s));
}

}  // namespace

ScalabilityModel ScalabilityModel::infinite() {
    return {ModelKind::Infinite, 0.0};
}

ScalabilityModel ScalabilityModel::power_law(double s) {
    require_finite_s(s);
    return {ModelKind::PowerLaw, s};
}

ScalabilityModel ScalabilityModel::logarithmic(double s) {
    require_finite_s(s);
    return {ModelKind::Logarithmic, s};
}

ScalabilityModel ScalabilityModel::make(ModelKind kind, double s) {
    switch (kind) {
        case ModelKind::Infinite: return infinite();
        case ModelKind::PowerLaw: return power_law(s);
        case ModelKind::Logarithmic: return logarithmic(s);
    }
    throw ValidationError("unknown scalability model kind");
}

HardwareArchetype HardwareArchetype::type_a() { return {"A", 1e-4, 1e-4}; }

HardwareArchetype HardwareArchetype::type_b() { return {"B", 1e-3, 1e-7}; }

void validate(const HardwareArchetype& arch) {
    if (!(arch.p0 > 0.0) || !(arch.p0 < 1.0))
        throw ValidationError("archetype '" + arch.name +
                              "': p0 must lie in (0, 1)");
    if (!(arch.gate_time > 0.0))
        throw ValidationError("archetype '" + arch.name +
                              "': gate_time must be positive");
}

double physical_error_rate(const ScalabilityModel& model, double p0,
                           std::int64_t n) {
    if (n < 1) throw ValidationError("physical_error_rate: n must be >= 1");
    if (!(p0 > 0.0) || !(p0 < 1.0))
        throw ValidationError("physical_error_rate: p0 must lie in (0, 1)");
    double rate = p0;
    switch (model.kind) {
        case ModelKind::Infinite: break;
        case ModelKind::PowerLaw:
            rate = p0 * std::pow(static_cast<double>(n), 1.0 / model.s);
            break;
        case ModelKind::Logarithmic:
            rate = p0 * (1.0 + std::log(static_cast<double>(n)) / model.s);
            break;
    }
    if (rate >= 1.0)
        throw RateSaturated("physical error rate saturated (" +
                            std::to_string(rate) + ") at n = " +
                            std::to_string(n));
    return rate;
}

std::pair<double, double> circuit_success_bound(double p_phys, std::int64_t m) {
    if (!(p_phys >= 0.0) || !(p_phys < 1.0))
        throw ValidationError("circuit_success_bound: p_phys must lie in [0, 1)");
    if (m < 0) throw ValidationError("circuit_success_bound: m must be >= 0");
    // 1 - (1-p)^m via expm1/log1p to keep small-failure precision
    const double exact =
        -std::expm1(static_cast<double>(m) * std::log1p(-p_phys));
    const double bound = std::fmin(1.0, static_cast<double>(m) * p_phys);
    return {exact, bound};
}

double depth_tradeoff_factor(double p_phys, double p_th, std::int64_t n,
                             std::int64_t k) {
    if (!(p_phys > 0.0)) throw ValidationError("depth_tradeoff_factor: p_phys must be > 0");
    if (p_phys >= p_th)
        throw AboveThreshold("p_phys = " + std::to_string(p_phys) +
                             " at or above threshold " + std::to_string(p_th));
    if (k < 1 || n < 8 * k)
        throw ValidationError("depth_tradeoff_factor: need n >= 8k, k >= 1");
    const double expo =
        std::sqrt(static_cast<double>(n) / (8.0 * static_cast<double>(k)));
    return std::pow(p_th / p_phys, expo);
}

}  // namespace qre
