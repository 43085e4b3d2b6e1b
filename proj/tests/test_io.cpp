#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "doctest.h"
#include "spanv/io.hpp"
#include "support/fixtures.hpp"
#include "support/polyads.hpp"

using namespace spanv;
using namespace spanv::testing;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

const fs::path data = SPANV_DATA_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<fs::path> presentation_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(data)) {
    const std::string name = e.path().filename().string();
    if (name.starts_with("probes") || name.starts_with("malformed")) continue;
    out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The error message of parsing `text`, or "" when it parses.
std::string error_of(const std::string& text) {
  try {
    io::parse_presentation(text);
  } catch (const io::InputError& e) {
    return e.what();
  }
  return "";
}

std::string mutated(const std::string& file, const std::function<void(json&)>& edit) {
  json j = json::parse(slurp(data / file));
  edit(j);
  return j.dump();
}

const io::VectDocument& vect(const io::PresentationFile& f) { return std::get<io::VectDocument>(f.body); }

}  // namespace

TEST_CASE("bundled files are canonical: parse then serialize reproduces them") {
  auto files = presentation_files();
  REQUIRE(files.size() >= 10);
  for (const auto& f : files) {
    CAPTURE(f);
    const std::string text = slurp(f);
    io::PresentationFile p = io::parse_presentation(text);
    CHECK(io::serialize(p) == text);
    CHECK(io::serialize(io::parse_presentation(io::serialize(p))) == text);
  }
}

TEST_CASE("bundled group monoids match the hand-built presentations") {
  GroupMonoidPresentation want = constant_presentation(cyclic(2), monoid_algebra(cyclic(2), "g"));
  for (const char* name : {"z2_group_algebra.json", "z2_group_algebra_explicit.json"}) {
    CAPTURE(name);
    io::PresentationFile f = io::read_presentation(data / name);
    REQUIRE(f.kind() == "group_monoid");
    const auto& g = std::get<GroupMonoidPresentation>(vect(f).presentation);
    CHECK(g.elements == want.elements);
    CHECK(g.table == want.table);
    CHECK(g.unit == want.unit);
    CHECK(g.g == want.g);
    CHECK(g.mu == want.mu);
    CHECK(g.eta == want.eta);
    REQUIRE(g.comonoid);
    // grouplike synthesis and the explicit file give the same comonoid
    CHECK(g.comonoid->delta == want.comonoid->delta);
    CHECK(g.comonoid->epsilon == want.comonoid->epsilon);
  }
  CHECK(vect(io::read_presentation(data / "z2_group_algebra.json")).comonoid_synthesized);
  CHECK_FALSE(vect(io::read_presentation(data / "z2_group_algebra_explicit.json")).comonoid_synthesized);
  CHECK(vect(io::read_presentation(data / "z2_group_algebra_explicit.json")).antipode() == want.antipode);

  GroupMonoidPresentation l = constant_presentation(cyclic(1), exterior_algebra(""));
  io::PresentationFile e = io::read_presentation(data / "exterior_q-1.json");
  CHECK(vect(e).q.q() == Rational(-1));
  const auto& eg = std::get<GroupMonoidPresentation>(vect(e).presentation);
  CHECK(eg.g == l.g);
  CHECK(eg.mu == l.mu);
  CHECK(eg.comonoid->delta == l.comonoid->delta);
  CHECK(eg.antipode == l.antipode);
}

TEST_CASE("bundled enriched categories match the hand-built presentations") {
  EnrichedCatPresentation want = constant_enriched(points(2), monoid_algebra(cyclic(2), "g"));
  io::PresentationFile f = io::read_presentation(data / "groupoid_z2.json");
  const auto& e = std::get<EnrichedCatPresentation>(vect(f).presentation);
  CHECK(e.objects == want.objects);
  CHECK(e.a == want.a);
  CHECK(e.mu == want.mu);
  CHECK(e.eta == want.eta);
  CHECK(e.comonoid->delta == want.comonoid->delta);
  CHECK(e.antipode == want.antipode);

  io::PresentationFile k = io::read_presentation(data / "indiscrete_K.json");
  const auto& ek = std::get<EnrichedCatPresentation>(vect(k).presentation);
  CHECK(ek.a == std::vector<VObject>(4, VObject::unit()));
  CHECK(vect(k).comonoid_synthesized);
  CHECK_FALSE(ek.antipode);
}

TEST_CASE("bundled polyads match the hand-built presentations") {
  auto same = [](const PolyadPresentation& a, const PolyadPresentation& b) {
    REQUIRE(a.F.size() == b.F.size());
    for (std::size_t h = 0; h < a.F.size(); ++h) CHECK_MESSAGE(functor_equal(a.F[h], b.F[h]).ok, h);
    for (const auto& [hk, m] : a.mu)
      for (const auto& x : m.from().dom()->objects()) CHECK(m.at(x) == b.mu.at(hk).at(x));
  };
  io::PresentationFile t = io::read_presentation(data / "polyad_translation.json");
  const auto& tp = std::get<io::TablePolyad>(t.body);
  same(tp.polyad, chaotic_translation());
  REQUIRE(tp.opmonoidal);
  CHECK(check_polyad_opmonoidal(tp.polyad, *tp.opmonoidal).passed());

  io::PresentationFile d = io::read_presentation(data / "polyad_diamond.json");
  const auto& dp = std::get<io::TablePolyad>(d.body);
  same(dp.polyad, diamond_closure());
  // ⊤ is the unit of the meet
  CHECK(dp.opmonoidal->monoidal.unit[0].on_object(Handle::index(0)) == Handle::index(3));
}

TEST_CASE("schema errors name the offending path") {
  struct Case {
    const char* file;
    std::function<void(json&)> edit;
    const char* expect;
  };
  const std::vector<Case> cases{
      {"z2_group_algebra.json", [](json& j) { j["eta"][0][0] = "1/0"; }, "$.eta[0][0]: malformed fraction \"1/0\""},
      {"z2_group_algebra.json", [](json& j) { j["eta"][0][0] = 1; }, "$.eta[0][0]: expected a string"},
      {"z2_group_algebra.json", [](json& j) { j["colour"] = "red"; }, "$: unknown field \"colour\""},
      {"z2_group_algebra.json", [](json& j) { j["spaces"][0]["dim"] = 2; }, "$.spaces[0]: unknown field \"dim\""},
      {"z2_group_algebra.json", [](json& j) { j.erase("mu"); }, "$: missing field \"mu\""},
      {"z2_group_algebra.json", [](json& j) { j["format_version"] = 2; }, "$.format_version: unsupported version 2"},
      {"z2_group_algebra.json", [](json& j) { j["kind"] = "groupoid"; }, "unknown kind"},
      {"z2_group_algebra.json", [](json& j) { j["backend"] = "cat"; }, "$.backend: group_monoid needs backend vect"},
      {"z2_group_algebra.json", [](json& j) { j["g"][1]["at"] = 7; }, "$.g[1].at: undeclared element 7"},
      {"z2_group_algebra.json", [](json& j) { j["g"][1]["space"] = "B"; }, "$.g[1].space: undeclared space \"B\""},
      {"z2_group_algebra.json", [](json& j) { j["g"][1]["at"] = 0; }, "$.g[1]: duplicate entry"},
      {"z2_group_algebra.json", [](json& j) { j["mu"].erase(3); }, "$.mu: missing entry at [1,1]"},
      {"z2_group_algebra.json", [](json& j) { j["mu"][2]["matrix"][0].erase(0); },
       "$.mu[2].matrix[1]: expected 3 entries like the first row"},
      {"z2_group_algebra.json", [](json& j) { j["eta"] = json::array({json::array({"1"})}); },
       "$.eta: matrix is 1x1 but"},
      {"z2_group_algebra.json", [](json& j) { j["monoid"]["product"][1][2] = 0; }, "$.monoid.product: not a monoid"},
      {"z2_group_algebra.json", [](json& j) { j["monoid"]["product"].erase(0); }, "$.monoid.product: no product for (0,0)"},
      {"z2_group_algebra.json", [](json& j) { j["spaces"][0]["basis"][1]["grade"] = 1; },
       "$.spaces[0].basis[1]: grouplike basis vectors must have grade 0"},
      {"z2_group_algebra.json", [](json& j) { j["spaces"][0]["basis"][1]["label"] = "g0"; }, "duplicate basis label g0"},
      {"z2_group_algebra.json", [](json& j) { j["q"] = "0"; }, "$.q: braid parameter must be nonzero"},
      {"z2_group_algebra_explicit.json", [](json& j) { j.erase("epsilon"); }, "give both delta and epsilon or neither"},
      {"idempotent_monoid.json", [](json& j) { 
         j["antipode"] = json::parse(R"([{"at": "1", "matrix": [["1"]]}, {"at": "z", "matrix": [["1"]]}])");
       },
       "$.antipode[1]: antipode given at a non-invertible element"},
      {"groupoid_z2.json", [](json& j) { j["mu"][0]["at"] = json::array({"x", "y"}); }, "$.mu[0].at: expected a triple"},
      {"groupoid_z2.json", [](json& j) { j["hom"][0]["at"] = json::array({"x", "w"}); },
       "$.hom[0].at[1]: undeclared object w"},
      {"polyad_translation.json", [](json& j) { j["shape"]["composition"].clear(); }, "$.shape: not a category"},
      {"polyad_translation.json", [](json& j) { j["functors"][1]["objects"].erase(0); },
       "$.functors[1].objects: missing entry at 0"},
      {"polyad_translation.json", [](json& j) { j["base"][0]["category"] = "E"; }, "undeclared category \"E\""},
      {"polyad_translation.json", [](json& j) { j["target"] = "lazy"; }, "$.target: expected tables or vect_image"},
      {"polyad_translation.json", [](json& j) { j["mu"].erase(0); }, "$.mu: missing entry at (0,0)"},
      {"polyad_translation.json", [](json& j) { j["opmonoidal"]["d0"][0]["component"] = json::array({2, 2}); },
       "$.opmonoidal.d0[0].component: undeclared morphism of C (2,2)"},
  };
  for (const auto& c : cases) {
    const std::string msg = error_of(mutated(c.file, c.edit));
    CAPTURE(msg);
    CHECK_MESSAGE(msg.find(c.expect) != std::string::npos, c.expect);
  }
  CHECK(error_of("{\"format_version\": 1,").find("not valid JSON") != std::string::npos);
  CHECK(error_of("[1, 2]") == "$: expected an object");
  try {
    io::read_presentation(data / "malformed_fraction.json");
    FAIL("malformed fraction accepted");
  } catch (const io::InputError& e) {
    CHECK(std::string(e.what()).find("malformed_fraction.json: $.eta[0][0]: malformed fraction") != std::string::npos);
  }
}

TEST_CASE("shorthand basis entries and omitted identity composites") {
  std::string text = mutated("z2_group_algebra.json", [](json& j) {
    j["spaces"][0]["basis"] = json::array({"g0", "g1"});
  });
  io::PresentationFile f = io::parse_presentation(text);
  CHECK(io::serialize(f) == slurp(data / "z2_group_algebra.json"));

  // identity composites may be listed as long as they are right
  std::string ids = mutated("polyad_translation.json", [](json& j) {
    j["shape"]["composition"].push_back(json::array({0, 1, 1}));
  });
  CHECK(io::serialize(io::parse_presentation(ids)) == slurp(data / "polyad_translation.json"));
  std::string bad = mutated("polyad_translation.json", [](json& j) {
    j["shape"]["composition"].push_back(json::array({0, 1, 0}));
  });
  CHECK(error_of(bad).find("not a category") != std::string::npos);
}

TEST_CASE("probe files") {
  auto probes = io::read_probes(data / "probes.json");
  REQUIRE(probes.size() == 3);
  CHECK(probes[0].space == VObject::unit());
  CHECK(probes[1].space.dim() == 2);
  CHECK(probes[2].space.dim() == 3);
  CHECK_THROWS_AS(io::parse_probes(R"({"format_version": 1, "probes": []})"), io::InputError);
  CHECK_THROWS_AS(io::parse_probes(R"({"format_version": 1, "probes": [], "q": "1"})"), io::InputError);
}

TEST_CASE("images of V-presentations as polyad files") {
  io::PresentationFile src = io::read_presentation(data / "z2_group_algebra.json");
  auto probes = io::read_probes(data / "probes.json");
  io::ImageDocument img = io::export_image(vect(src), probes);
  // μ at 4 pairs and η at 1 object per probe, d2 at 9 probe pairs and d0 per morphism
  CHECK(img.samples.size() == 4 * 3 + 1 * 3 + 2 * 9 + 2);

  const std::string text = io::serialize({img});
  io::PresentationFile back = io::parse_presentation(text);
  REQUIRE(back.kind() == "polyad");
  CHECK(io::serialize(back) == text);

  // the samples are the V components tensored with the probe identity
  const auto& g = std::get<GroupMonoidPresentation>(vect(src).presentation);
  for (const auto& s : img.samples)
    if (s.cell == "mu" && s.probes[0] == 1 && s.at[0] == Atom::of(std::int64_t{1}) && s.at[1] == Atom::of(std::int64_t{1})) {
      VMorphism want = tensor_mor(g.mu.at({1, 1}), VMorphism::identity(probes[1].space));
      CHECK(s.matrix == want.matrix());
    }

  io::ImageDocument none{vect(src), {}, {}};
  CHECK_THROWS_AS(io::build_image(none), io::InputError);
}
