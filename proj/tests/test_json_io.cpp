#include <foxlink/json_io.hpp>
#include <foxlink/linktable.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace foxlink;
using nlohmann::json;

TEST_CASE("coloring JSON matches the documented shape") {
    const Coloring c{6, {0, 2, 4}};
    const json j = c;
    CHECK(j.dump() == R"({"modulus":6,"values":[0,2,4]})");
    CHECK(json::parse(R"({"modulus": 6, "values": [0, 2, 4]})").get<Coloring>() == c);
}

TEST_CASE("diagram round trip") {
    const Diagram& d = find_entry("figure8")->diagram;
    CHECK(json(d).get<Diagram>() == d);
}

TEST_CASE("big integers travel as strings") {
    const Int big("123456789012345678901234567890");
    CHECK(int_from_string(int_to_string(big)) == big);
    CHECK(int_to_string(big) == "123456789012345678901234567890");
    CHECK_THROWS(int_from_string("not-a-number"));
}

TEST_CASE("prediction round trip") {
    for (const Prediction& p :
         {predicted_min_colors(6, 3), predicted_min_colors(5, 3), predicted_min_colors(11, 11)}) {
        CHECK(json(p).get<Prediction>() == p);
    }
}

TEST_CASE("verify report round trip") {
    const VerifyReport report = verify_link(*find_entry("trefoil"), {2, 3, 6, 11});
    const json j = report;
    CHECK(j.at("all_consistent").get<bool>());
    CHECK(j.at("hypothesis").get<std::string>() == kVerifyHypothesis);
    const VerifyReport back = j.get<VerifyReport>();
    CHECK(back.records == report.records);
}

TEST_CASE("scan report round trip") {
    const ScanReport report = conjecture_scan(builtin_table(), 9);
    const json j = report;
    const ScanReport back = j.get<ScanReport>();
    CHECK(back.groups == report.groups);
    CHECK(back.consistent == report.consistent);
}

TEST_CASE("matrix serialization") {
    const IntMatrix m(2, 2, {2, -2, -2, 2});
    CHECK(json(m).dump() == R"([["2","-2"],["-2","2"]])");
}
