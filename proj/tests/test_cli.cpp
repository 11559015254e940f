#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "eeh/io.hpp"

namespace fs = std::filesystem;
using eeh::Json;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = eeh::cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("eeh_cli_" + std::to_string(counter()++))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }

 private:
  static int& counter() {
    static int n = 0;
    return n;
  }
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("gadget subcommand") {
  const auto d = run({"gadget", "--kind", "dunce"});
  REQUIRE(d.code == 0);
  CHECK(eeh::parse_json(d.out)["facets"].size() == 17);

  TempDir tmp;
  const auto g = run({"gadget", "--kind", "port", "--m", "2", "--l", "1", "--prefix", "s/", "--out",
                      tmp.file("g.json"), "--ports", tmp.file("ports.json")});
  REQUIRE(g.code == 0);
  const auto k = eeh::complex_from_json(eeh::read_json_file(tmp.file("g.json")));
  CHECK(k == eeh::gadget(2, 1, "s/").complex);
  CHECK(eeh::read_json_file(tmp.file("ports.json"))["f"].size() == 2);

  CHECK(run({"gadget", "--kind", "cube"}).code == 2);
  CHECK(run({"gadget", "--kind", "port", "--m", "0"}).code == 2);
}

TEST_CASE("check-erasable and height on the fixtures") {
  TempDir tmp;
  const auto p = tmp.write("p.json", eeh::complex_to_json(eeh::modified_dunce_hat(), "P").dump());
  const auto d = tmp.write("d.json", eeh::complex_to_json(eeh::dunce_hat(), "D").dump());

  CHECK(run({"check-erasable", p}).code == 0);
  CHECK(run({"check-erasable", d}).code == 1);
  CHECK(run({"check-erasable", p, "--forbid", "1,3"}).code == 1);
  CHECK(run({"check-erasable", p, "--forbid", "1"}).code == 2);

  CHECK(run({"height", d, "--max-expansions", "0", "--dims", "3"}).code == 1);
  const auto yes = run({"height", d, "--max-expansions", "1", "--dims", "3", "--ordered", "--cert",
                        tmp.file("cert.json"), "--json"});
  REQUIRE(yes.code == 0);
  CHECK(eeh::parse_json(yes.out)["verdict"] == "yes");
  CHECK(run({"verify", d, tmp.file("cert.json")}).code == 0);
  CHECK(run({"verify", d, tmp.file("cert.json"), "--budget", "0"}).code == 1);

  CHECK(run({"height", d, "--max-expansions", "1", "--dims", "3", "--strategy", "prescribed"}).code == 0);
  CHECK(run({"height", d, "--max-expansions", "2", "--node-limit", "1"}).code == 3);
  const auto minimal = run({"height", d, "--max-expansions", "3", "--dims", "3", "--minimal", "--json"});
  REQUIRE(minimal.code == 0);
  CHECK(eeh::parse_json(minimal.out)["budget"] == 1);

  CHECK(run({"height", d, "--ordered", "--unordered"}).code == 2);
  CHECK(run({"height", d, "--dims", "5"}).code == 2);
  CHECK(run({"height", tmp.file("missing.json")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("bad input files name the field") {
  TempDir tmp;
  const auto bad = tmp.write("bad.json", R"({"facets": [["1", 2]]})");
  const auto r = run({"check-erasable", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("facets[0][1]") != std::string::npos);
  const auto broken = tmp.write("broken.json", "{");
  CHECK(run({"check-erasable", broken}).code == 2);
}

TEST_CASE("axiom set subcommands and reduce") {
  TempDir tmp;
  const auto cycle = tmp.write(
      "cycle.json",
      R"({"sentences": ["a", "b"], "implications": [{"premises": ["b"], "conclusion": "a"},
          {"premises": ["a"], "conclusion": "b"}], "budget": 1})");
  const auto solved = run({"axiomset-solve", cycle, "--json"});
  REQUIRE(solved.code == 0);
  CHECK(eeh::parse_json(solved.out)["minimum"] == 1);

  const auto tight = tmp.write("tight.json", R"({"sentences": ["a", "b"], "implications": [], "budget": 1})");
  CHECK(run({"axiomset-solve", tight}).code == 1);
  CHECK(run({"axiomset-normalize", tight}).code == 1);
  CHECK(run({"reduce", tight}).code == 1);

  const auto chain = tmp.write(
      "chain.json", R"({"sentences": ["a", "b"], "implications": [{"premises": ["a"], "conclusion": "b"}], "budget": 1})");
  const auto n = run({"axiomset-normalize", chain});
  REQUIRE(n.code == 0);
  const auto nj = eeh::parse_json(n.out);
  CHECK(nj["instance"]["sentences"] == Json::array({"b"}));
  CHECK(nj["report"]["removed_forced_axioms"] == Json::array({"a"}));

  const auto reduced = run({"reduce", cycle, "--out", tmp.file("k.json"), "--provenance", tmp.file("prov.json")});
  REQUIRE(reduced.code == 0);
  CHECK(eeh::read_json_file(tmp.file("prov.json"))["budget"] == 1);
  const auto k = tmp.file("k.json");
  CHECK(run({"height", k, "--max-expansions", "1", "--dims", "3", "--max-dim", "3", "--ordered"}).code == 0);
  CHECK(run({"height", k, "--max-expansions", "0", "--dims", "3"}).code == 1);
}

TEST_CASE("identical inputs give byte-identical JSON") {
  TempDir tmp;
  const auto p = tmp.write("p.json", eeh::complex_to_json(eeh::modified_dunce_hat()).dump());
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"height", p, "--max-expansions", "1", "--json"},
        std::vector<std::string>{"check-erasable", p, "--json"},
        std::vector<std::string>{"sweep", "--max-sentences", "2", "--max-implications", "2", "--random", "2",
                                 "--threads", "2", "--json"}}) {
    const auto first = run(args);
    const auto second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK_FALSE(first.out.empty());
  }
  run({"reduce", p, "--out", tmp.file("never.json")});
  CHECK_FALSE(fs::exists(tmp.file("never.json")));
  CHECK(slurp(p).find("facets") != std::string::npos);
}
