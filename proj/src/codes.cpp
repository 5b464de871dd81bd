#include "qre/codes.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qre {

void validate(const SurfaceCodeParams& params) {
    if (!(params.p_th > 0.0) || !(params.p_th < 1.0))
        throw ValidationError("surface code: p_th must lie in (0, 1)");
    if (!(params.overhead > 0.0) || !(params.overhead <= 1.0))
        throw ValidationError("surface code: overhead must lie in (0, 1]");
    if (params.d_max < 1)
        throw ValidationError("surface code: d_max must be >= 1");
}

LdpcFamily make_ldpc_family(std::vector<LdpcCodeSpec> codes) {
    if (codes.empty()) throw ConfigError("ldpc family: no codes given");
    for (const auto& c : codes) {
        if (c.label.empty())
            throw ConfigError("ldpc family: code with empty label");
        if (c.n_data < 1 || c.k_log < 1 || c.k_log > c.n_data)
            throw ConfigError("ldpc code '" + c.label +
                              "': need 1 <= k_log <= n_data");
        if (c.d_circ < 1)
            throw ConfigError("ldpc code '" + c.label + "': d_circ must be >= 1");
    }
    std::sort(codes.begin(), codes.end(),
              [](const LdpcCodeSpec& a, const LdpcCodeSpec& b) {
                  return a.n_data != b.n_data ? a.n_data < b.n_data
                                              : a.label < b.label;
              });
    for (std::size_t i = 1; i < codes.size(); ++i)
        if (codes[i - 1].n_data == codes[i].n_data &&
            codes[i - 1].label == codes[i].label)
            throw ConfigError("ldpc family: duplicate code '" + codes[i].label +
                              "'");
    return {std::move(codes)};
}

double surface_logical_error_rate(const SurfaceCodeParams& params,
                                  double p_phys, int d) {
    if (!(p_phys > 0.0) || !(p_phys < 1.0))
        throw ValidationError("surface_logical_error_rate: p_phys must lie in (0, 1)");
    if (d < 1 || d > params.d_max)
        throw ValidationError("surface_logical_error_rate: d outside [1, d_max]");
    const double expo = (static_cast<double>(d) + 1.0) / 2.0;
    return params.overhead * std::pow(p_phys / params.p_th, expo);
}

std::int64_t surface_physical_qubits(int d, std::int64_t k) {
    if (d < 1 || k < 1)
        throw ValidationError("surface_physical_qubits: need d >= 1, k >= 1");
    const std::int64_t side = static_cast<std::int64_t>(d) + 1;
    return 2 * side * side * k;
}

double ldpc_logical_error_rate(const LdpcCodeSpec& spec, double p_phys) {
    if (!(p_phys > 0.0) || !(p_phys < 1.0))
        throw ValidationError("ldpc_logical_error_rate: p_phys must lie in (0, 1)");
    const double power = std::pow(p_phys, static_cast<double>(spec.d_circ) / 2.0);
    return power * std::exp(spec.c0 + spec.c1 * p_phys +
                            spec.c2 * p_phys * p_phys);
}

std::int64_t ldpc_physical_qubits(const LdpcCodeSpec& spec, std::int64_t k) {
    if (k < 1) throw ValidationError("ldpc_physical_qubits: k must be >= 1");
    const std::int64_t blocks = (k + spec.k_log - 1) / spec.k_log;
    return 2 * spec.n_data * blocks;
}

std::optional<LdpcSelection> select_ldpc_code(
    const LdpcFamily& family, std::int64_t k, double target_pL,
    const std::function<std::optional<double>(std::int64_t)>& rate_of_n) {
    if (!(target_pL > 0.0))
        throw ValidationError("select_ldpc_code: target_pL must be > 0");
    for (const auto& code : family.codes) {
        const std::int64_t n = ldpc_physical_qubits(code, k);
        const auto rate = rate_of_n(n);
        if (!rate) continue;  // device saturates at this layout size
        const double p_L = ldpc_logical_error_rate(code, *rate);
        if (meets_budget(p_L, target_pL)) return LdpcSelection{code, p_L, *rate, n};
    }
    return std::nullopt;
}

////////////////////////////////////////////////////////////////////////////
// family file loading

namespace {

using nlohmann::json;

double require_number(const json& entry, const char* field,
                      const std::string& where) {
    if (!entry.contains(field))
        throw ConfigError("ldpc family: " + where + " missing required field '" +
                          field + "'");
    const auto& v = entry.at(field);
    if (!v.is_number())
        throw ConfigError("ldpc family: " + where + " field '" + field +
                          "' must be a number");
    return v.get<double>();
}

std::int64_t require_integer(const json& entry, const char* field,
                             const std::string& where) {
    if (!entry.contains(field) || !entry.at(field).is_number_integer())
        throw ConfigError("ldpc family: " + where + " needs integer field '" +
                          field + "'");
    return entry.at(field).get<std::int64_t>();
}

}  // namespace

LdpcFamily load_ldpc_family(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("ldpc family: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("codes") || !doc["codes"].is_array())
        throw ConfigError("ldpc family: expected object with a 'codes' array");
    std::vector<LdpcCodeSpec> codes;
    std::size_t idx = 0;
    for (const auto& entry : doc["codes"]) {
        const std::string where = "codes[" + std::to_string(idx++) + "]";
        if (!entry.is_object())
            throw ConfigError("ldpc family: " + where + " is not an object");
        LdpcCodeSpec spec;
        if (!entry.contains("label") || !entry.at("label").is_string())
            throw ConfigError("ldpc family: " + where + " needs string 'label'");
        spec.label = entry.at("label").get<std::string>();
        spec.n_data = require_integer(entry, "n_data", where);
        spec.k_log = require_integer(entry, "k_log", where);
        spec.d_circ = static_cast<int>(require_integer(entry, "d_circ", where));
        spec.c0 = require_number(entry, "c0", where);
        spec.c1 = require_number(entry, "c1", where);
        spec.c2 = require_number(entry, "c2", where);
        codes.push_back(std::move(spec));
    }
    return make_ldpc_family(std::move(codes));
}

LdpcFamily load_ldpc_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("ldpc family: cannot open '" + path + "'");
    return load_ldpc_family(in);
}

}  // namespace qre
