#include <stdexcept>
#include <string>

#include "doctest.h"
#include "simplexity/enumeration.hpp"
#include "simplexity/io.hpp"
#include "simplexity/rational.hpp"
#include "simplexity/weight_lp.hpp"

using namespace simplexity;
using io::Json;

namespace {

std::string fixture(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("rational string forms") {
    CHECK(to_fraction_string(make_rational(1, 3)) == "1/3");
    CHECK(to_fraction_string(make_rational(-2, 4)) == "-1/2");
    CHECK(to_fraction_string(Rational(7)) == "7");
    CHECK(rational_from_string("5/15") == make_rational(1, 3));
    CHECK(rational_from_string("-4") == Rational(-4));
    CHECK(rational_from_string("123456789012345678901234567890/7") ==
          make_rational(Int("123456789012345678901234567890"), Int(7)));
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("simplex JSON roundtrip") {
    auto s = Simplex01::from_strings(3, {"111", "000", "011", "101"});
    Json j = io::simplex_to_json(s);
    CHECK(j["n"] == 3);
    // canonical vertex order, not input order
    CHECK(j["vertices"][0] == "000");
    CHECK(io::simplex_from_json(j) == s);
}

TEST_CASE("class file roundtrip preserves everything") {
    auto summary = enumerate_classes(3);
    Json j = io::class_file_to_json(summary);
    CHECK(j["n"] == 3);
    CHECK(j["rho"] == 2);
    REQUIRE(j["classes"].is_array());
    CHECK(j["classes"].size() == summary.classes.size());

    auto file = io::class_file_from_json(j);
    CHECK(file.n == 3);
    CHECK(file.rho == 2);
    REQUIRE(file.classes.size() == summary.classes.size());
    for (std::size_t i = 0; i < file.classes.size(); ++i) {
        CHECK(file.classes[i].volume == summary.classes[i].volume);
        CHECK(file.classes[i].folded == summary.classes[i].folded);
        CHECK(file.classes[i].count == summary.classes[i].count);
        CHECK(file.classes[i].witness == summary.classes[i].witness);
    }
}

TEST_CASE("class file validation catches structural damage") {
    auto base = io::class_file_to_json(enumerate_classes(2));
    SUBCASE("missing top-level field") {
        Json j = base;
        j.erase("rho");
        CHECK_THROWS_WITH_AS(io::class_file_from_json(j),
                             "missing field \"rho\"", std::runtime_error);
    }
    SUBCASE("volume must parse and be positive") {
        Json j = base;
        j["classes"][0]["volume"] = "garbage";
        CHECK_THROWS_AS(io::class_file_from_json(j), std::runtime_error);
        j["classes"][0]["volume"] = "-1/2";
        CHECK_THROWS_WITH_AS(io::class_file_from_json(j),
                             "class volume must be positive",
                             std::runtime_error);
    }
    SUBCASE("witness dimension must match n") {
        Json j = base;
        j["classes"][0]["witness"]["n"] = 3;
        j["classes"][0]["witness"]["vertices"] = {"000", "100", "010", "001"};
        CHECK_THROWS_WITH_AS(io::class_file_from_json(j),
                             "witness dimension does not match the file",
                             std::runtime_error);
    }
    SUBCASE("folded entries must be integers") {
        Json j = base;
        j["classes"][0]["folded"][0] = "1";
        CHECK_THROWS_WITH_AS(io::class_file_from_json(j),
                             "folded profile entries must be integers",
                             std::runtime_error);
    }
}

TEST_CASE("LP result JSON has the documented shape") {
    auto summary = enumerate_classes(3);
    auto sol = solve_lp(build_lp(summary.classes, 3));
    Json j = io::lp_result_to_json(3, sol, summary.classes);
    CHECK(j["n"] == 3);
    CHECK(j["g_star"] == "1/5");
    CHECK(j["bound"] == "5");
    REQUIRE(j["alpha"].is_array());
    CHECK(j["alpha"][0] == "2/5");
    CHECK(j["alpha"][1] == "1/5");
    CHECK(j["alpha"][2] == "2/5");
    REQUIRE(j["tight_classes"].is_array());
    CHECK(j["tight_classes"].size() == sol.tight_classes.size());
    for (const auto& entry : j["tight_classes"]) {
        CHECK(entry.contains("volume"));
        CHECK(entry.contains("folded"));
    }
}

TEST_CASE("dissection JSON roundtrip") {
    auto d = io::load_dissection(fixture("cube3_5tet.json"));
    Json j = io::dissection_to_json(d);
    CHECK(j["polytope"] == "cube");
    CHECK(j["axis"] == 1);
    auto back = io::dissection_from_json(j);
    CHECK(back.n == d.n);
    CHECK(back.axis == d.axis);
    REQUIRE(back.simplices.size() == d.simplices.size());
    for (std::size_t i = 0; i < d.simplices.size(); ++i)
        CHECK(back.simplices[i] == d.simplices[i]);
}

TEST_CASE("dissection parsing errors are specific") {
    Json good = io::dissection_to_json(
        io::load_dissection(fixture("cube3_5tet.json")));
    SUBCASE("axis defaults to 1 when absent") {
        Json j = good;
        j.erase("axis");
        CHECK(io::dissection_from_json(j).axis == 1);
    }
    SUBCASE("polytope, when present, must be cube") {
        Json j = good;
        j["polytope"] = "crosspolytope";
        CHECK_THROWS_WITH_AS(io::dissection_from_json(j),
                             "only \"cube\" dissections are supported",
                             std::runtime_error);
    }
    SUBCASE("bad vertex strings name the simplex") {
        Json j = good;
        j["simplices"][0][1] = "0x1";
        try {
            io::dissection_from_json(j);
            FAIL("expected a parse error");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find("simplex 0: ") == 0);
        }
    }
    SUBCASE("degenerate simplices are rejected at load time") {
        Json j = good;
        j["simplices"][2] = {"000", "100", "010", "110"};
        CHECK_THROWS_WITH_AS(io::dissection_from_json(j),
                             "simplex 2 is degenerate", std::runtime_error);
    }
}

TEST_CASE("file-level errors carry the path") {
    try {
        io::load_dissection("/nonexistent/nope.json");
        FAIL("expected an error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("/nonexistent/nope.json") !=
              std::string::npos);
    }

    const std::string bad = "/tmp/simplexity_bad_json_test.json";
    io::write_text_file(bad, "{ not json");
    try {
        io::load_dissection(bad);
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find(bad) != std::string::npos);
        CHECK(std::string(e.what()).find("parse") != std::string::npos);
    }
}

TEST_CASE("report JSON mirrors the verification report") {
    auto ok = verify_partition(io::load_dissection(fixture("cube3_5tet.json")));
    Json j = io::report_to_json(ok);
    CHECK(j["partition_ok"] == true);
    CHECK(j["volume_sum"] == "1");
    CHECK(j["overlap"].is_null());
    CHECK(j["class_volumes"].size() == 3);
    CHECK(j["class_volumes"][0]["axis"] == 1);
    CHECK(j["class_volumes"][0]["V"][0] == "1/3");
    CHECK(j["proposition"]["all_equal"] == true);

    auto bad =
        verify_partition(io::load_dissection(fixture("cube3_overlap.json")));
    Json k = io::report_to_json(bad);
    CHECK(k["partition_ok"] == false);
    CHECK(k["volume_sum"] == "5/6");
    REQUIRE(k["overlap"].is_object());
    CHECK(k["overlap"]["first"] == 0);
    CHECK(k["overlap"]["second"] == 4);
    CHECK(k["overlap"]["point"][0] == "3/4");
}

TEST_CASE("dumps is stable and newline-terminated") {
    Json j;
    j["n"] = 1;
    j["vertices"] = {"0", "1"};
    CHECK(io::dumps(j) == "{\n  \"n\": 1,\n  \"vertices\": [\n    \"0\",\n    \"1\"\n  ]\n}\n");
    auto s = io::dumps(io::class_file_to_json(enumerate_classes(2)));
    CHECK(s.back() == '\n');
}
