#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qre/errors.hpp"

namespace qre {

// exact spin value; Table-style halves ("3/2") survive round-trips unharmed
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool operator==(const Rational&) const = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);
Rational parse_rational(const std::string& text);  // "p/q" or bare integer
std::string to_string(const Rational& r);          // always "p/q", reduced

// one problem instance: chemistry metadata plus the workload summary
// (logical-qubit count k and space-time volume V) the estimator consumes
struct InstanceRecord {
    std::string instance_id;  // e.g. "14_in"
    std::string mr_type;      // SR | SR/MR | MR
    std::int64_t charge_initial = 0;
    std::int64_t charge_oxidized = 0;
    Rational spin_initial;
    Rational spin_oxidized;
    std::int64_t n_electrons_initial = 0;
    std::int64_t n_electrons_oxidized = 0;
    std::int64_t n_orbitals = 0;
    std::int64_t k = 0;
    double V = 0.0;

    bool operator==(const InstanceRecord&) const = default;
};

// throws ValidationError naming the record and the violated rule
void validate(const InstanceRecord& rec);

// JSON catalog {"notes": ..., "instances": [...]}; rejects malformed fields
// (ParseError), invariant violations and duplicate ids (ValidationError)
std::vector<InstanceRecord> load_catalog(std::istream& in);
std::vector<InstanceRecord> load_catalog_file(const std::string& path);

void save_catalog(const std::vector<InstanceRecord>& records,
                  std::ostream& out);

// per-record validation report for the catalog-validate command
struct CatalogReportEntry {
    std::string instance_id;  // may be empty if the id itself failed to parse
    bool accepted = false;
    std::string detail;
};
std::vector<CatalogReportEntry> catalog_report(std::istream& in);

// the built-in reference instance: 14_in, k = 1000, V = 1e10
InstanceRecord canonical_instance();

std::optional<InstanceRecord> find_instance(
    const std::vector<InstanceRecord>& records, const std::string& id);

}  // namespace qre
