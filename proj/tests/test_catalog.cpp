#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qre/catalog.hpp"
#include "qre/errors.hpp"

using namespace qre;

namespace {

std::string shipped_catalog_path() {
    return std::string(QRE_DATA_DIR) + "/catalog.json";
}

}  // namespace

TEST_CASE("rational: construction and reduction") {
    CHECK(make_rational(3, 2) == Rational{3, 2});
    CHECK(make_rational(6, 4) == Rational{3, 2});
    CHECK(make_rational(0, 5) == Rational{0, 1});
    CHECK(make_rational(-3, -2) == Rational{3, 2});
    CHECK(make_rational(3, -2) == Rational{-3, 2});
    CHECK_THROWS_AS(make_rational(1, 0), ValidationError);
}

TEST_CASE("rational: parsing and printing") {
    CHECK(parse_rational("3/2") == Rational{3, 2});
    CHECK(parse_rational("1") == Rational{1, 1});
    CHECK(parse_rational("0/1") == Rational{0, 1});
    CHECK(parse_rational("6/4") == Rational{3, 2});
    CHECK(to_string(Rational{3, 2}) == "3/2");
    CHECK(to_string(Rational{1, 1}) == "1/1");
    CHECK(to_string(parse_rational("5")) == "5/1");
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rational("3/"), ParseError);
    CHECK_THROWS_AS(parse_rational("/2"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
}

TEST_CASE("canonical instance") {
    const auto rec = canonical_instance();
    CHECK(rec.instance_id == "14_in");
    CHECK(rec.k == 1000);
    CHECK(rec.V == 1e10);
    CHECK(rec.n_orbitals == 43);
    CHECK(rec.spin_initial == Rational{1, 1});
    CHECK(rec.spin_oxidized == Rational{1, 2});
    CHECK_NOTHROW(validate(rec));
}

TEST_CASE("shipped catalog loads and matches the canonical anchor") {
    const auto records = load_catalog_file(shipped_catalog_path());
    REQUIRE(records.size() == 15);
    const auto canon = find_instance(records, "14_in");
    REQUIRE(canon.has_value());
    CHECK(*canon == canonical_instance());
    // spot-check a small instance row
    const auto small = find_instance(records, "23_o10_in");
    REQUIRE(small.has_value());
    CHECK(small->n_orbitals == 10);
    CHECK(small->n_electrons_initial == 12);
    CHECK(small->n_electrons_oxidized == 11);
    // ionization rule holds file-wide, and every record validates
    for (const auto& rec : records) {
        CAPTURE(rec.instance_id);
        CHECK(rec.n_electrons_oxidized == rec.n_electrons_initial - 1);
        CHECK_NOTHROW(validate(rec));
    }
    CHECK(!find_instance(records, "no_such").has_value());
}

TEST_CASE("save then load reproduces the records") {
    const auto records = load_catalog_file(shipped_catalog_path());
    std::ostringstream out;
    save_catalog(records, out);
    std::istringstream in(out.str());
    const auto again = load_catalog(in);
    CHECK(again == records);
}

TEST_CASE("record validation rules") {
    auto rec = canonical_instance();
    CHECK_NOTHROW(validate(rec));

    auto broken = rec;
    broken.mr_type = "XX";
    CHECK_THROWS_AS(validate(broken), ValidationError);

    broken = rec;
    broken.n_electrons_oxidized = rec.n_electrons_initial;  // not ionized
    CHECK_THROWS_AS(validate(broken), ValidationError);

    broken = rec;
    broken.spin_initial = make_rational(-1, 2);
    CHECK_THROWS_AS(validate(broken), ValidationError);

    broken = rec;
    broken.n_orbitals = 0;
    CHECK_THROWS_AS(validate(broken), ValidationError);

    broken = rec;
    broken.k = 0;
    CHECK_THROWS_AS(validate(broken), ValidationError);

    broken = rec;
    broken.V = 999.0;  // V < k
    CHECK_THROWS_AS(validate(broken), ValidationError);

    broken = rec;
    broken.instance_id.clear();
    CHECK_THROWS_AS(validate(broken), ValidationError);
}

TEST_CASE("catalog loading rejections") {
    auto load = [](const std::string& text) {
        std::istringstream in(text);
        return load_catalog(in);
    };
    CHECK_THROWS_AS(load("nope"), ParseError);
    CHECK_THROWS_AS(load("[1,2]"), ParseError);
    CHECK_THROWS_AS(load("{\"instances\": {}}"), ParseError);
    CHECK(load("{\"instances\": []}").empty());
    CHECK_THROWS_AS(load("{\"instances\": [42]}"), ParseError);

    // duplicate ids across otherwise valid records
    const auto rec = canonical_instance();
    std::ostringstream dup;
    save_catalog({rec, rec}, dup);
    std::istringstream in(dup.str());
    CHECK_THROWS_AS(load_catalog(in), ValidationError);

    // missing field
    CHECK_THROWS_AS(load(R"({"instances": [{"instance_id": "x"}]})"),
                    ParseError);
    // malformed spin string
    CHECK_THROWS_AS(load(R"({"instances": [{
        "instance_id": "x", "mr_type": "SR",
        "charge_initial": 0, "charge_oxidized": 1,
        "spin_initial": "a/b", "spin_oxidized": "1/2",
        "n_electrons_initial": 2, "n_electrons_oxidized": 1,
        "n_orbitals": 4, "k": 10, "V": 100.0}]})"),
                    ParseError);
    // spin as non-integer number
    CHECK_THROWS_AS(load(R"({"instances": [{
        "instance_id": "x", "mr_type": "SR",
        "charge_initial": 0, "charge_oxidized": 1,
        "spin_initial": 0.5, "spin_oxidized": "1/2",
        "n_electrons_initial": 2, "n_electrons_oxidized": 1,
        "n_orbitals": 4, "k": 10, "V": 100.0}]})"),
                    ParseError);
}

TEST_CASE("catalog report survives bad records") {
    // one good record, one invariant violation, one duplicate
    auto rec = canonical_instance();
    auto bad = rec;
    bad.instance_id = "bad_row";
    bad.n_electrons_oxidized = bad.n_electrons_initial;  // breaks ionization
    std::ostringstream out;
    save_catalog({rec, bad, rec}, out);
    std::istringstream in(out.str());
    const auto report = catalog_report(in);
    REQUIRE(report.size() == 3);
    CHECK(report[0].instance_id == "14_in");
    CHECK(report[0].accepted);
    CHECK(report[0].detail.empty());
    CHECK(report[1].instance_id == "bad_row");
    CHECK(!report[1].accepted);
    CHECK(report[1].detail.find("ionization") != std::string::npos);
    CHECK(!report[2].accepted);
    CHECK(report[2].detail.find("duplicate") != std::string::npos);
    // the shipped file is fully accepted
    std::ifstream shipped(shipped_catalog_path());
    REQUIRE(shipped.good());
    for (const auto& line : catalog_report(shipped)) {
        CAPTURE(line.instance_id);
        CHECK(line.accepted);
    }
}
