#include <doctest.h>

#include "eeh/errors.hpp"
#include "eeh/io.hpp"
#include "eeh/search.hpp"

using namespace eeh;

namespace {

std::string format_error(const Json& j, Complex (*f)(const Json&)) {
  try {
    f(j);
  } catch (const FormatError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("complex round trip") {
  const auto p = modified_dunce_hat();
  const auto j = complex_to_json(p, "P");
  CHECK(j["name"] == "P");
  CHECK(j["facets"].size() == 13);
  CHECK(complex_from_json(j) == p);
  CHECK(complex_from_json(parse_json(j.dump())) == p);
  CHECK_FALSE(complex_to_json(p).contains("name"));
}

TEST_CASE("complex errors name the field") {
  CHECK(format_error(parse_json(R"({"facets": [["1","2"], ["3", 4]]})"), complex_from_json)
            .find("facets[1][1]") != std::string::npos);
  CHECK(format_error(parse_json(R"({"facets": [["1","1"]]})"), complex_from_json).find("facets[0]") !=
        std::string::npos);
  CHECK(format_error(parse_json(R"({"facets": [[]]})"), complex_from_json).find("facets[0]") !=
        std::string::npos);
  CHECK(format_error(parse_json(R"({"faces": []})"), complex_from_json).find("facets") != std::string::npos);
  CHECK(format_error(parse_json(R"({"name": 3, "facets": []})"), complex_from_json).find("name") !=
        std::string::npos);
  CHECK_THROWS_AS(parse_json("{", "x.json"), FormatError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), FormatError);
}

TEST_CASE("certificate round trip and errors") {
  const auto d = dunce_hat();
  SearchConfig c;
  c.budget = 1;
  c.ordered = true;
  c.expansion_dims = {3};
  const auto r = ordered_height(d, c);
  REQUIRE(r.decided == Verdict::yes);
  const Certificate cert{1, r.certificate};
  const auto j = certificate_to_json(cert);
  CHECK(j["moves"][0]["op"] == "expand");
  CHECK(j["moves"][1]["op"] == "collapse");
  const auto back = certificate_from_json(parse_json(j.dump()));
  CHECK(back.budget == 1);
  CHECK(back.moves == cert.moves);

  auto broken = j;
  broken["moves"][0]["op"] = "flip";
  CHECK_THROWS_WITH_AS(certificate_from_json(broken), doctest::Contains("moves[0].op"), FormatError);
  broken = j;
  broken["moves"][1].erase("pair");
  CHECK_THROWS_WITH_AS(certificate_from_json(broken), doctest::Contains("moves[1].pair"), FormatError);
  broken = j;
  broken["budget"] = -2;
  CHECK_THROWS_WITH_AS(certificate_from_json(broken), doctest::Contains("budget"), FormatError);
}

TEST_CASE("instance round trip and errors") {
  const auto a = AxiomSetInstance::make({"a", "b", "c"}, {{{"a", "b"}, "c"}, {{}, "a"}}, 2);
  const auto j = instance_to_json(a);
  CHECK(instance_from_json(parse_json(j.dump())) == a);
  CHECK(j.dump() == instance_to_json(instance_from_json(j)).dump());

  auto broken = j;
  broken["implications"][1]["premises"] = "a";
  CHECK_THROWS_WITH_AS(instance_from_json(broken), doctest::Contains("implications[1].premises"), FormatError);
  broken = j;
  broken["implications"][0]["conclusion"] = "z";
  CHECK_THROWS_WITH_AS(instance_from_json(broken), doctest::Contains("implications[0].conclusion"), FormatError);
  broken = j;
  broken["sentences"] = Json::array({"a", "a"});
  CHECK_THROWS_AS(instance_from_json(broken), FormatError);
  broken = j;
  broken.erase("budget");
  CHECK_THROWS_WITH_AS(instance_from_json(broken), doctest::Contains("budget"), FormatError);
}

TEST_CASE("port map and provenance") {
  const auto g = gadget(2, 1, "s/");
  const auto ports = port_map_to_json(g);
  CHECK(ports["f"].size() == 2);
  CHECK(ports["e"].size() == 1);
  CHECK(ports["f"][0] == Json::array({"s/x0", "s/x1"}));

  const auto r = assemble(AxiomSetInstance::make({"a", "b"}, {{{"b"}, "a"}, {{"a"}, "b"}}, 1));
  const auto prov = provenance_to_json(r);
  CHECK(prov["gadgets"]["a"]["m"] == 1);
  CHECK(prov["gadgets"]["b"]["vertex_map"]["b/y1"] == "a/x0");
  CHECK(prov["classes"]["a/x0"] == Json::array({"a/x0", "b/y1"}));
  CHECK(simplex_to_json(Simplex({"2", "1"})) == Json::array({"1", "2"}));
}
