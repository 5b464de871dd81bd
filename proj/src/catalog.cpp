#include "qre/catalog.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qre {

namespace {

using ordered_json = nlohmann::ordered_json;

std::int64_t parse_int(const std::string& text) {
    std::int64_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("'" + text + "' is not an integer");
    return value;
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return make_rational(parse_int(text), 1);
    const std::string p = text.substr(0, slash);
    const std::string q = text.substr(slash + 1);
    if (p.empty() || q.empty())
        throw ParseError("'" + text + "' is not a p/q rational");
    return make_rational(parse_int(p), parse_int(q));
}

std::string to_string(const Rational& r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

void validate(const InstanceRecord& rec) {
    const std::string who = "instance '" + rec.instance_id + "'";
    if (rec.instance_id.empty())
        throw ValidationError("instance with empty instance_id");
    if (rec.mr_type != "SR" && rec.mr_type != "SR/MR" && rec.mr_type != "MR")
        throw ValidationError(who + ": mr_type must be SR, SR/MR or MR, got '" +
                              rec.mr_type + "'");
    if (rec.n_electrons_initial < 1)
        throw ValidationError(who + ": n_electrons_initial must be >= 1");
    if (rec.n_electrons_oxidized != rec.n_electrons_initial - 1)
        throw ValidationError(
            who + ": vertical ionization requires n_electrons_oxidized = "
                  "n_electrons_initial - 1");
    if (rec.spin_initial.num < 0 || rec.spin_oxidized.num < 0)
        throw ValidationError(who + ": spins must be non-negative");
    if (rec.n_orbitals < 1)
        throw ValidationError(who + ": n_orbitals must be >= 1");
    if (rec.k < 1) throw ValidationError(who + ": k must be >= 1");
    if (!(rec.V >= static_cast<double>(rec.k)))
        throw ValidationError(who + ": V must be >= k (at least one tock)");
}

////////////////////////////////////////////////////////////////////////////
// json format

namespace {

const char* const kFields[] = {"instance_id",
                               "mr_type",
                               "charge_initial",
                               "charge_oxidized",
                               "spin_initial",
                               "spin_oxidized",
                               "n_electrons_initial",
                               "n_electrons_oxidized",
                               "n_orbitals",
                               "k",
                               "V"};

Rational spin_field(const ordered_json& entry, const char* field,
                    const std::string& where) {
    const auto& v = entry.at(field);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return make_rational(v.get<std::int64_t>(), 1);
    throw ParseError(where + ": field '" + field +
                     "' must be a \"p/q\" string or integer");
}

InstanceRecord parse_record(const ordered_json& entry, std::size_t idx) {
    const std::string where = "instances[" + std::to_string(idx) + "]";
    if (!entry.is_object()) throw ParseError(where + " is not an object");
    for (const char* field : kFields)
        if (!entry.contains(field))
            throw ParseError(where + ": missing field '" + field + "'");
    InstanceRecord rec;
    try {
        rec.instance_id = entry.at("instance_id").get<std::string>();
        rec.mr_type = entry.at("mr_type").get<std::string>();
        rec.charge_initial = entry.at("charge_initial").get<std::int64_t>();
        rec.charge_oxidized = entry.at("charge_oxidized").get<std::int64_t>();
        rec.spin_initial = spin_field(entry, "spin_initial", where);
        rec.spin_oxidized = spin_field(entry, "spin_oxidized", where);
        rec.n_electrons_initial =
            entry.at("n_electrons_initial").get<std::int64_t>();
        rec.n_electrons_oxidized =
            entry.at("n_electrons_oxidized").get<std::int64_t>();
        rec.n_orbitals = entry.at("n_orbitals").get<std::int64_t>();
        rec.k = entry.at("k").get<std::int64_t>();
        rec.V = entry.at("V").get<double>();
    } catch (const ordered_json::exception& e) {
        throw ParseError(where + ": " + e.what());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
    return rec;
}

ordered_json parse_document(std::istream& in) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("catalog: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("instances") ||
        !doc["instances"].is_array())
        throw ParseError("catalog: expected object with an 'instances' array");
    return doc;
}

}  // namespace

std::vector<InstanceRecord> load_catalog(std::istream& in) {
    const ordered_json doc = parse_document(in);
    std::vector<InstanceRecord> records;
    std::set<std::string> seen;
    std::size_t idx = 0;
    for (const auto& entry : doc["instances"]) {
        InstanceRecord rec = parse_record(entry, idx++);
        validate(rec);
        if (!seen.insert(rec.instance_id).second)
            throw ValidationError("catalog: duplicate instance_id '" +
                                  rec.instance_id + "'");
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<InstanceRecord> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("catalog: cannot open '" + path + "'");
    return load_catalog(in);
}

void save_catalog(const std::vector<InstanceRecord>& records,
                  std::ostream& out) {
    ordered_json doc;
    doc["instances"] = ordered_json::array();
    for (const auto& rec : records) {
        ordered_json entry;
        entry["instance_id"] = rec.instance_id;
        entry["mr_type"] = rec.mr_type;
        entry["charge_initial"] = rec.charge_initial;
        entry["charge_oxidized"] = rec.charge_oxidized;
        entry["spin_initial"] = to_string(rec.spin_initial);
        entry["spin_oxidized"] = to_string(rec.spin_oxidized);
        entry["n_electrons_initial"] = rec.n_electrons_initial;
        entry["n_electrons_oxidized"] = rec.n_electrons_oxidized;
        entry["n_orbitals"] = rec.n_orbitals;
        entry["k"] = rec.k;
        entry["V"] = rec.V;
        doc["instances"].push_back(std::move(entry));
    }
    out << doc.dump(2) << "\n";
}

std::vector<CatalogReportEntry> catalog_report(std::istream& in) {
    const ordered_json doc = parse_document(in);
    std::vector<CatalogReportEntry> report;
    std::set<std::string> seen;
    std::size_t idx = 0;
    for (const auto& entry : doc["instances"]) {
        CatalogReportEntry line;
        if (entry.is_object() && entry.contains("instance_id") &&
            entry.at("instance_id").is_string())
            line.instance_id = entry.at("instance_id").get<std::string>();
        try {
            InstanceRecord rec = parse_record(entry, idx);
            validate(rec);
            if (!seen.insert(rec.instance_id).second)
                throw ValidationError("duplicate instance_id '" +
                                      rec.instance_id + "'");
            line.accepted = true;
        } catch (const Error& e) {
            line.accepted = false;
            line.detail = e.what();
        }
        report.push_back(std::move(line));
        ++idx;
    }
    return report;
}

InstanceRecord canonical_instance() {
    InstanceRecord rec;
    rec.instance_id = "14_in";
    rec.mr_type = "SR/MR";
    rec.charge_initial = 0;
    rec.charge_oxidized = 1;
    rec.spin_initial = make_rational(1, 1);
    rec.spin_oxidized = make_rational(1, 2);
    rec.n_electrons_initial = 30;
    rec.n_electrons_oxidized = 29;
    rec.n_orbitals = 43;
    rec.k = 1000;
    rec.V = 1e10;
    return rec;
}

std::optional<InstanceRecord> find_instance(
    const std::vector<InstanceRecord>& records, const std::string& id) {
    for (const auto& rec : records)
        if (rec.instance_id == id) return rec;
    return std::nullopt;
}

}  // namespace qre
