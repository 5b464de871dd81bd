#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qre/errors.hpp"

namespace qre {

// the feasibility comparisons p_L <= budget sit exactly on the boundary for
// round power-of-ten inputs; a relative slack a few orders above ulp noise
// keeps the mathematical <= honest without admitting anything physical
inline constexpr double feasibility_slack = 1e-12;

inline bool meets_budget(double p_L, double budget) {
    return p_L <= budget * (1.0 + feasibility_slack);
}

struct SurfaceCodeParams {
    double p_th = 0.01;     // threshold
    double overhead = 0.1;  // prefactor O
    int d_max = 100;        // distance cap
};

void validate(const SurfaceCodeParams& params);

// one bivariate-bicycle code: [[n_data, k_log]] block with d_circ rounds of
// syndrome extraction between logical operations and fitted rate coefficients
struct LdpcCodeSpec {
    std::string label;
    std::int64_t n_data = 0;
    std::int64_t k_log = 0;
    int d_circ = 1;
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;
};

struct LdpcFamily {
    std::vector<LdpcCodeSpec> codes;  // ascending n_data, ties by label
};

// sorts, checks invariants (non-empty, k_log <= n_data, d_circ >= 1, strict
// (n_data, label) ordering)
LdpcFamily make_ldpc_family(std::vector<LdpcCodeSpec> codes);

// p_L = O * (p_phys / p_th)^((d+1)/2); values > 1 are returned as-is
double surface_logical_error_rate(const SurfaceCodeParams& params,
                                  double p_phys, int d);

// n = 2 * (d+1)^2 * k
std::int64_t surface_physical_qubits(int d, std::int64_t k);

// p_L = p_phys^(d_circ/2) * exp(c0 + c1*p + c2*p^2)
double ldpc_logical_error_rate(const LdpcCodeSpec& spec, double p_phys);

// 2 * n_data * ceil(k / k_log): data blocks plus matching check qubits
std::int64_t ldpc_physical_qubits(const LdpcCodeSpec& spec, std::int64_t k);

struct LdpcSelection {
    LdpcCodeSpec code;
    double p_L = 0.0;     // achieved logical rate
    double p_phys = 0.0;  // rate at this code's layout size
    std::int64_t n_phys = 0;
};

// smallest (by n_data) family member whose logical rate at the caller's k
// meets target_pL.  rate_of_n maps a candidate layout size to the physical
// rate; nullopt marks sizes the device cannot operate at (saturated rate),
// which disqualifies that code.
std::optional<LdpcSelection> select_ldpc_code(
    const LdpcFamily& family, std::int64_t k, double target_pL,
    const std::function<std::optional<double>(std::int64_t)>& rate_of_n);

// JSON family file: {"codes": [{label, n_data, k_log, d_circ, c0, c1, c2}]}.
// every field is required -- fit coefficients in particular are never
// defaulted (ConfigError)
LdpcFamily load_ldpc_family(std::istream& in);
LdpcFamily load_ldpc_family_file(const std::string& path);

}  // namespace qre
