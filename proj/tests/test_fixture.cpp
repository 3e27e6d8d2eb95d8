#include <string>

#include "doctest.h"
#include "mmi/error.hpp"
#include "mmi/fixture.hpp"
#include "support.hpp"

using namespace mmi;

namespace {

Error error_of(const std::string& text) {
  try {
    parse_fixture(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("fixture parsed: " << text);
  return Error(Errc::InternalConsistency, "unreachable");
}

const char* kMinimal = R"({
  "name": "T",
  "matrix": [[-1]],
  "ideals": [[1]]
})";

}  // namespace

TEST_CASE("all shipped fixtures parse and build") {
  const auto names = list_fixtures();
  CHECK(names == std::vector<std::string>{"CHAIN10", "NEST14", "PROP16", "RAT6", "SMOOTH1"});
  for (const auto& name : names) {
    CAPTURE(name);
    const auto f = load_fixture(name);
    CHECK(f.name == name);
    const auto t = build_tuple(f);
    if (f.expected.canonical) CHECK(t.graph().canonical().coeffs == *f.expected.canonical);
  }
}

TEST_CASE("emit and parse round trip") {
  for (const auto& name : list_fixtures()) {
    const auto f = load_fixture(name);
    const auto text = emit_fixture(f);
    CHECK(parse_fixture(text) == f);
    CHECK(emit_fixture(parse_fixture(text)) == text);
  }
}

TEST_CASE("minimal fixture") {
  const auto f = parse_fixture(kMinimal);
  CHECK(f.name == "T");
  CHECK(f.labels.empty());
  CHECK(build_tuple(f).graph().labels() == std::vector<std::string>{"E1"});
  CHECK_FALSE(f.adjacency.has_value());
  CHECK(build_tuple(f).r() == 1);
}

TEST_CASE("rational format errors") {
  const auto e = error_of(R"({"name": "T", "matrix": [[-1]], "ideals": [[1]],
    "expected": {"lct": ["3/0"]}})");
  CHECK(e.code() == Errc::RationalFormatError);
}

TEST_CASE("schema errors carry the field path") {
  const auto both = error_of(R"({"name": "T", "matrix": [[-1]], "adjacency": [], "canonical": [1],
    "ideals": [[1]]})");
  CHECK(both.code() == Errc::SchemaError);

  const auto neither = error_of(R"({"name": "T", "ideals": [[1]]})");
  CHECK(neither.code() == Errc::SchemaError);

  const auto bad_ideal = error_of(R"({"name": "T", "matrix": [[-1]], "ideals": [[1], "x"]})");
  CHECK(bad_ideal.code() == Errc::SchemaError);
  CHECK(std::string(bad_ideal.what()).find("$.ideals[1]") != std::string::npos);

  const auto unknown = error_of(R"({"name": "T", "matrix": [[-1]], "ideals": [[1]], "colour": 1})");
  CHECK(unknown.code() == Errc::SchemaError);
  CHECK(std::string(unknown.what()).find("colour") != std::string::npos);
}

TEST_CASE("syntax errors carry the line") {
  const auto e = error_of("{\n  \"name\": \"T\",\n  \"matrix\": [[-1]\n}");
  CHECK(e.code() == Errc::ParseError);
  CHECK(std::string(e.what()).find("line 4") != std::string::npos);
}

TEST_CASE("validation errors surface from build_tuple") {
  const auto f = parse_fixture(R"({"name": "T", "matrix": [[0]], "ideals": [[1]]})");
  try {
    build_tuple(f);
    FAIL("expected NotNegativeDefinite");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotNegativeDefinite);
    CHECK(e.category() == ErrorCategory::Validation);
  }
}

TEST_CASE("unknown fixture name") {
  try {
    load_fixture("NO_SUCH_FIXTURE");
    FAIL("expected Usage");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Usage);
  }
}
