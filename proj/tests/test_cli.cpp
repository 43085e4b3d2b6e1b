#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "doctest.h"
#include "spanv/io.hpp"

using namespace spanv;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

const fs::path data = SPANV_DATA_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string file(const char* name) { return (data / name).string(); }

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "spanv_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

json check_named(const json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["name"] == name) return c;
  FAIL("no check " << name);
  return {};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"check", file("z2_group_algebra.json"), "--hopf"}).code == 0);
  CHECK(run({"check", file("idempotent_monoid.json"), "--hopf"}).code == 1);
  Run bad = run({"check", file("malformed_fraction.json")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("malformed fraction \"1/0\"") != std::string::npos);
  CHECK(run({"check", file("nope.json")}).code == 2);
  CHECK(run({"check", file("z2_group_algebra.json"), "--bogus"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--format", "xml", "check", file("z2_group_algebra.json")}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("the Z2 group algebra passes every check") {
  Run r = run({"--format", "json", "check", file("z2_group_algebra.json")});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["status"] == "pass");
  CHECK(j["kind"] == "group_monoid");
  std::vector<std::string> names;
  for (const auto& c : j["checks"]) names.push_back(c["name"]);
  CHECK(names == std::vector<std::string>{"monad", "opmonoidal", "hopf", "antipode"});
  json hopf = check_named(j, "hopf");
  for (const char* side : {"left", "right"})
    for (const auto& d : hopf["determinants"][side]) {
      std::string v = d["value"];
      CHECK((v == "1" || v == "-1"));
    }
  json anti = check_named(j, "antipode");
  CHECK(anti["details"]["source"] == "computed");
  CHECK(anti["details"]["2-cells"] == "pass");
  // inversion on Z2 fixes both basis vectors
  for (const auto& s : anti["antipode"]) CHECK(s["matrix"] == json::parse(R"([["1","0"],["0","1"]])"));
}

TEST_CASE("the non-group monoid fails with a span witness and skips downstream") {
  Run r = run({"--format", "json", "check", file("idempotent_monoid.json"), "--antipode"});
  CHECK(r.code == 1);
  json j = json::parse(r.out);
  json hopf = check_named(j, "hopf");
  CHECK(hopf["status"] == "fail");
  CHECK(hopf["witnesses"][0]["what"].get<std::string>().find("span map identifies") != std::string::npos);
  CHECK(hopf["witnesses"][1]["where"] == "groupoid");
  CHECK(check_named(j, "antipode")["status"] == "skipped");
  CHECK(check_named(j, "monad")["status"] == "pass");
}

TEST_CASE("selected checks pull in their prerequisites only") {
  json j = json::parse(run({"--format", "json", "check", file("z2_group_algebra.json"), "--opmonoidal"}).out);
  CHECK(j["checks"].size() == 2);
  json f = json::parse(run({"--format", "json", "check", file("z2_group_algebra.json"), "--frobenius"}).out);
  REQUIRE(f["checks"].size() == 1);
  CHECK(f["checks"][0]["status"] == "pass");
  Run d = run({"--format", "json", "--seed", "7", "check", file("groupoid_z2.json"), "--duoidal"});
  CHECK(d.code == 0);
  json dj = json::parse(d.out);
  CHECK(check_named(dj, "duoidal")["details"]["seed"] == "7");
  // the flag may also follow the subcommand
  CHECK(run({"check", file("groupoid_z2.json"), "--duoidal", "--seed", "3"}).code == 0);
}

TEST_CASE("machine reports are byte-identical across runs; text reports carry timing") {
  for (const char* name : {"groupoid_z2.json", "idempotent_monoid.json", "polyad_diamond.json"}) {
    Run a = run({"--format", "json", "check", file(name)});
    Run b = run({"--format", "json", "check", file(name)});
    CHECK(a.out == b.out);
    CHECK(a.out.find("seconds") == std::string::npos);
  }
  Run t = run({"check", file("trivial.json")});
  CHECK(t.out.find(" s\n") != std::string::npos);
  CHECK(t.out.rfind("pass\n") == t.out.size() - 5);
}

TEST_CASE("polyad files") {
  CHECK(run({"check", file("polyad_translation.json")}).code == 0);
  CHECK(run({"check", file("polyad_discrete_z2.json")}).code == 0);
  Run n = run({"--format", "json", "check", file("polyad_idempotent.json"), "--hopf"});
  CHECK(n.code == 1);
  json hopf = check_named(json::parse(n.out), "hopf");
  CHECK(hopf["witnesses"][0]["where"] == "groupoid");
  Run d = run({"--format", "json", "check", file("polyad_diamond.json"), "--hopf"});
  CHECK(d.code == 1);
  CHECK(check_named(json::parse(d.out), "hopf")["witnesses"][0]["where"] == "fusion");
  // checks that only exist for V-presentations are skipped without failing
  Run a = run({"--format", "json", "check", file("polyad_translation.json"), "--antipode", "--frobenius"});
  CHECK(a.code == 0);
  CHECK(check_named(json::parse(a.out), "frobenius")["status"] == "skipped");
}

TEST_CASE("antipode command and round trip through --antipode") {
  fs::path out = scratch("z2_with_antipode.json");
  Run r = run({"--format", "json", "antipode", file("z2_group_algebra.json"), "-o", out.string()});
  REQUIRE(r.code == 0);
  json s = check_named(json::parse(r.out), "antipode")["antipode"];
  CHECK(s.size() == 2);
  Run back = run({"--format", "json", "check", out.string(), "--antipode"});
  CHECK(back.code == 0);
  json anti = check_named(json::parse(back.out), "antipode");
  CHECK(anti["details"]["source"] == "file");
  CHECK(anti["antipode"] == s);

  // enriched: the solved σ agrees with the one in the file
  Run e = run({"--format", "json", "antipode", file("groupoid_z2.json")});
  CHECK(e.code == 0);
  Run ef = run({"--format", "json", "check", file("groupoid_z2.json"), "--antipode"});
  CHECK(check_named(json::parse(e.out), "antipode")["antipode"] == check_named(json::parse(ef.out), "antipode")["antipode"]);

  CHECK(run({"antipode", file("trivial.json")}).out.find("sigma 0 = [[\"1\"]]") != std::string::npos);
  Run nh = run({"antipode", file("monoid_algebra_not_hopf.json")});
  CHECK(nh.code == 1);
  CHECK(nh.out.find("not invertible") != std::string::npos);
  CHECK(run({"antipode", file("polyad_translation.json")}).code == 2);
}

TEST_CASE("a wrong antipode in the file fails all three ways") {
  json j = json::parse(std::ifstream(data / "z2_group_algebra_explicit.json"));
  j["antipode"][1]["matrix"] = json::parse(R"([["0","1"],["1","0"]])");
  fs::path p = scratch("z2_wrong_antipode.json");
  std::ofstream(p) << j.dump();
  Run r = run({"--format", "json", "check", p.string(), "--antipode"});
  CHECK(r.code == 1);
  json anti = check_named(json::parse(r.out), "antipode");
  CHECK(anti["details"]["componentwise"] == "fail");
  CHECK(anti["details"]["presentation"] == "fail");
  CHECK(anti["details"]["2-cells"] == "fail");
}

TEST_CASE("export-polyad writes a polyad file that re-checks pointwise") {
  fs::path out = scratch("z2_image.json");
  Run e = run({"export-polyad", file("z2_group_algebra.json"), "--probes", file("probes.json"), "-o", out.string()});
  REQUIRE(e.code == 0);
  io::PresentationFile img = io::read_presentation(out);
  CHECK(img.kind() == "polyad");
  Run c = run({"--format", "json", "check", out.string()});
  CHECK(c.code == 0);
  CHECK(check_named(json::parse(c.out), "hopf")["status"] == "pass");

  // the trivial presentation exports to a trivial polyad
  Run t = run({"export-polyad", file("trivial.json"), "--probes", file("probes.json")});
  REQUIRE(t.code == 0);
  json tj = json::parse(t.out);
  CHECK(tj["target"] == "vect_image");
  for (const auto& s : tj["samples"])
    if (s["cell"] == "mu") {
      const std::size_t n = s["matrix"].size();
      for (std::size_t i = 0; i < n; ++i) CHECK(s["matrix"][i][i] == "1");
    }

  // a tampered component is caught
  json j = json::parse(std::ifstream(out));
  j["samples"][0]["matrix"][0][0] = "2";
  fs::path bad = scratch("z2_image_tampered.json");
  std::ofstream(bad) << j.dump();
  Run b = run({"--format", "json", "check", bad.string(), "--monad"});
  CHECK(b.code == 1);
  CHECK(check_named(json::parse(b.out), "monad")["witnesses"][0]["what"] == "component differs from the image");

  // the non-Hopf algebra stays non-Hopf
  fs::path nh = scratch("not_hopf_image.json");
  REQUIRE(run({"export-polyad", file("monoid_algebra_not_hopf.json"), "--probes", file("probes.json"), "-o",
               nh.string()}).code == 0);
  CHECK(run({"check", nh.string(), "--hopf"}).code == 1);

  fs::path empty = scratch("empty_probes.json");
  std::ofstream(empty) << R"({"format_version": 1, "probes": []})";
  CHECK(run({"export-polyad", file("z2_group_algebra.json"), "--probes", empty.string()}).code == 2);
  CHECK(run({"export-polyad", file("polyad_translation.json"), "--probes", file("probes.json")}).code == 2);
  CHECK(run({"export-polyad", file("z2_group_algebra.json")}).code == 2);
}
