#include <filesystem>

#include "doctest.h"
#include "json.hpp"
#include "valab/error.hpp"
#include "valab/fixtures.hpp"
#include "valab/io.hpp"

using namespace valab;
using Json = nlohmann::ordered_json;
namespace fx = valab::fixtures;

namespace {

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_file(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("parse succeeded");
  return ErrorKind::Inconsistent;
}

Json ex62_json() { return Json::parse(serialize(fx::ex62(1))); }

}  // namespace

TEST_CASE("serialize and parse round-trip the corpus") {
  for (const auto& f : fx::corpus()) {
    CAPTURE(f.id);
    const std::string text = serialize(f);
    const AlgebroidFile back = parse_file(text);
    CHECK(serialize(back) == text);
    CHECK(back.id == f.id);
    CHECK(back.has_algebroid == f.has_algebroid);
    CHECK(back.algebroid.data().action == f.algebroid.data().action);
    CHECK(back.algebroid.data().pairing == f.algebroid.data().pairing);
    CHECK(back.algebra().mul() == f.algebra().mul());
    CHECK(back.t == f.t);
    CHECK(back.l1 == f.l1);
    CHECK(back.grading.has_value() == f.grading.has_value());
    CHECK(back.semisimple.has_value() == f.semisimple.has_value());
  }
}

TEST_CASE("shipped fixture files match the generated corpus") {
  for (const auto& f : fx::corpus()) {
    CAPTURE(f.id);
    const auto path = std::filesystem::path(VALAB_FIXTURE_DIR) / (f.id + ".json");
    REQUIRE(std::filesystem::exists(path));
    CHECK(serialize(load_file(path)) == serialize(f));
  }
}

TEST_CASE("rationals are written as canonical strings") {
  Json j = ex62_json();
  CHECK(j["algebra"]["mul"][1][1][0] == "-1/4");
  CHECK(j["gorenstein"]["t"][0] == "-1/2");
  CHECK(j["format_version"] == "1");
}

TEST_CASE("integer JSON numbers are accepted") {
  Json j = ex62_json();
  j["algebra"]["unit"] = Json::array({1, 0});
  CHECK(parse_file(j.dump()).algebra().unit() == Vector{1, 0});
}

TEST_CASE("malformed input is a parse error") {
  CHECK(parse_error_kind("{") == ErrorKind::ParseError);
  CHECK(parse_error_kind("[]") == ErrorKind::ParseError);
  Json j = ex62_json();
  j["format_version"] = "2";
  CHECK(parse_error_kind(j.dump()) == ErrorKind::ParseError);
  j = ex62_json();
  j["algebra"]["mul"][0][0][0] = "1/0";
  CHECK(parse_error_kind(j.dump()) == ErrorKind::ParseError);
  j = ex62_json();
  j["algebra"]["mul"][0][0][0] = 0.5;
  CHECK(parse_error_kind(j.dump()) == ErrorKind::ParseError);
  j = ex62_json();
  j["algebra"].erase("mul");
  CHECK(parse_error_kind(j.dump()) == ErrorKind::ParseError);
}

TEST_CASE("wrongly shaped arrays are a dimension mismatch") {
  Json j = ex62_json();
  j["algebra"]["mul"][0][0] = Json::array({"1"});
  CHECK(parse_error_kind(j.dump()) == ErrorKind::DimensionMismatch);
  j = ex62_json();
  j["algebroid"]["partial"] = Json::array({Json::array({"0", "0"})});
  CHECK(parse_error_kind(j.dump()) == ErrorKind::DimensionMismatch);
  j = ex62_json();
  j["gorenstein"]["t"] = Json::array({"1"});
  CHECK(parse_error_kind(j.dump()) == ErrorKind::DimensionMismatch);
}

TEST_CASE("report JSON layout") {
  CheckReport r;
  r.add(verdict("x.pass", "holds", true));
  IdentityTally t("x.fail", "fails");
  t.record("(a)", Vector{1, Rational(1, 2)});
  r.add(t.finish());
  Json j = Json::parse(report_json("check", "demo", r));
  CHECK(j["tool_version"] == "0.1.0");
  CHECK(j["command"] == "check");
  CHECK(j["fixture"] == "demo");
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["entries"][0]["check_id"] == "x.pass");
  CHECK(j["entries"][1]["status"] == "fail");
  CHECK(j["entries"][1]["witnesses"][0]["tuple"] == "(a)");
  CHECK(j["summary"]["pass"] == 1);
  CHECK(j["summary"]["fail"] == 1);
  CHECK(report_text("check", "demo", r).find("x.fail") != std::string::npos);
}
