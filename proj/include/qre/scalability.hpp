#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "qre/errors.hpp"

namespace qre {

enum class ModelKind { Infinite, PowerLaw, Logarithmic };

// maps device size to physical error rate; s is the scalability parameter
// (unused for Infinite)
struct ScalabilityModel {
    ModelKind kind = ModelKind::Infinite;
    double s = 0.0;

    static ScalabilityModel infinite();
    static ScalabilityModel power_law(double s);
    static ScalabilityModel logarithmic(double s);
    static ScalabilityModel make(ModelKind kind, double s);
};

// named device class: base error rate p0 and gate (cycle) time in seconds
struct HardwareArchetype {
    std::string name;
    double p0 = 0.0;
    double gate_time = 0.0;

    // high-fidelity / slow: p0 = 1e-4, t = 1e-4 s
    static HardwareArchetype type_a();
    // high-speed / low-fidelity: p0 = 1e-3, t = 1e-7 s
    static HardwareArchetype type_b();
};

void validate(const HardwareArchetype& arch);

// p_phys at device size n qubits:
//   power law    p0 * n^(1/s)
//   logarithmic  p0 * (1 + ln(n)/s)
//   infinite     p0
// throws RateSaturated if the law yields a value >= 1 (model breakdown)
double physical_error_rate(const ScalabilityModel& model, double p0,
                           std::int64_t n);

// (exact_failure, union_bound) for m gates at rate p_phys:
//   exact = 1 - (1 - p)^m, bound = min(1, m*p)
std::pair<double, double> circuit_success_bound(double p_phys, std::int64_t m);

// relative depth gain (p_th/p_phys)^sqrt(n/(8k)); proportionality constant
// fixed to 1, so this is a scaling factor, not an absolute gate budget
double depth_tradeoff_factor(double p_phys, double p_th, std::int64_t n,
                             std::int64_t k);

}  // namespace qre
