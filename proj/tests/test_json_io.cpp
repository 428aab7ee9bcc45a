#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radii/errors.hpp"
#include "radii/json_io.hpp"

#include <cmath>
#include <limits>
#include <string>

using namespace radii;

namespace {

std::string error_of(const Json& j) {
  try {
    parse_body(j);
  } catch (const RadiiError& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
    return e.what();
  }
  FAIL("body parsed");
  return {};
}

}  // namespace

TEST_CASE("body descriptions") {
  const Body cube = parse_body(Json::parse(R"({"type": "canonical", "kind": "cube", "dim": 3})"));
  CHECK(cube.hash() == make_canonical(CanonicalKind::Cube, 3).hash());
  const Body p = parse_body(Json::parse(R"({"type": "vpolytope", "vertices": [[1,0],[0,1],[-1,-1]]})"));
  CHECK(p.dim() == 2);
  const Body e = parse_body(Json::parse(R"({"type": "ellipsoid", "semiaxes": [1, 2, 3]})"));
  CHECK(e.ellipsoid()->semiaxes(0) == 3.0);
  CHECK(parse_body(Json::parse(R"({"type": "antiprism_P", "eps": 0.01})")).hash() == make_antiprism_P(0.01).hash());
  CHECK(parse_body(Json::parse(R"({"type": "remark_simplex", "eps": 0.01})")).hash() == make_remark_simplex(0.01).hash());
}

TEST_CASE("parse errors name the field") {
  CHECK(error_of(Json::parse(R"({"vertices": [[1,0]]})")).find("field 'type'") != std::string::npos);
  CHECK(error_of(Json::parse(R"({"type": "vpolytope", "vertices": [[1,0],[0,1],"x"]})")).find("field 'vertices") !=
        std::string::npos);
  CHECK(error_of(Json::parse(R"({"type": "canonical", "kind": "cube", "dim": 7})")).find("field 'dim'") !=
        std::string::npos);
  CHECK(error_of(Json::parse(R"({"type": "vpolytope", "vertices": [[1,0,0,0,0,0],[0,1,0,0,0,0]]})")).find("dimension exceeds 5") !=
        std::string::npos);
  CHECK(error_of(Json::parse(R"({"type": "ellipsoid", "semiaxes": [1, -2]})")).find("semiaxes") != std::string::npos);
  CHECK(error_of(Json::parse(R"({"type": "prism"})")).find("field 'type'") != std::string::npos);
}

TEST_CASE("numbers round-trip through 17 significant digits") {
  Json j = Json::object();
  const double values[] = {0.1, 1.0 / 3.0, std::sqrt(2.0), 1e-300, -2.5e17, 4.9e-324};
  j["values"] = Json::array();
  for (double v : values) j["values"].push_back(v);
  j["bad"] = std::numeric_limits<double>::infinity();
  const std::string text = dump_json(j);
  const Json back = Json::parse(text);
  for (std::size_t k = 0; k < std::size(values); ++k) CHECK(back["values"][k].get<double>() == values[k]);
  CHECK(back["bad"].is_null());
  CHECK(text.find("0.33333333333333331") != std::string::npos);
}

TEST_CASE("serialized reports are deterministic") {
  const Body b = random_polytope(3, 12, true, 1);
  SearchConfig search;
  search.starts = 8;
  const std::string a = dump_json(to_json(radii_profile(b, search)));
  const std::string c = dump_json(to_json(radii_profile(b, search)));
  CHECK(a == c);
  const Json parsed = Json::parse(a);
  CHECK(parsed["outer"].size() == 3);
  CHECK(parsed["outer"][1]["i"] == 2);
  CHECK(parsed["outer"][1]["side"] == "UpperBoundOfMin");
}

TEST_CASE("timing is opt-in") {
  AuditConfig config;
  config.search.starts = 4;
  const AuditReport r = audit_body(make_canonical(CanonicalKind::Cube, 2), config);
  CHECK(dump_json(to_json(r)).find("seconds") == std::string::npos);
  CHECK(dump_json(to_json(r, true)).find("seconds") != std::string::npos);
}
