#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cheeger/json_io.hpp"
#include "forge/cli.hpp"

using namespace cheeger;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = forge::run_cli(args, o, e);
  return {c, o.str(), e.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("forge_cli_" + std::to_string(::getpid()) + "_" +
                                       ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string file(const std::string& name, const std::string& text = "") {
    std::string p = (dir / name).string();
    if (!text.empty()) std::ofstream(p) << text;
    return p;
  }
  static std::string slurp(const std::string& p) {
    std::ifstream is(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(is), {}};
  }
  fs::path dir;
};

}  // namespace

TEST(JsonIo, ArcGonRoundTrip) {
  ArcGon g = make_dumbbell(1.0, 0.7, 0.3);
  Json j = to_json(g);
  ArcGon back = arcgon_from_json(Json::parse(j.dump()));
  ASSERT_EQ(back.edges.size(), g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    EXPECT_EQ(back.edges[i].start, g.edges[i].start);
    EXPECT_EQ(back.edges[i].end, g.edges[i].end);
    EXPECT_EQ(back.edges[i].curvature, g.edges[i].curvature);
  }
  EXPECT_THROW(arcgon_from_json(Json{{"edges", 3}}), InvalidInput);
  Json open = to_json(Profile(StaircaseParams{1.0, 1.0, 1.0 / 3, 2}));
  EXPECT_EQ(open["closed"], false);
  EXPECT_THROW(arcgon_from_json(open), InvalidInput);
}

TEST(JsonIo, StageAndContactRoundTrip) {
  auto st = cantor_stage(0.4, 3);
  auto back = cantor_stage_from_json(to_json(st));
  EXPECT_EQ(back.intervals, st.intervals);
  ContactSet c;
  c.points = {{1, 2}};
  c.intervals_param = {{0.5, 0.75}};
  c.boundary_length = 3;
  ContactSet d = contact_from_json(to_json(c));
  EXPECT_EQ(d.points.size(), 1u);
  EXPECT_EQ(d.intervals_param, c.intervals_param);
  EXPECT_EQ(d.boundary_length, 3.0);
}

TEST_F(Cli, ConstructKgonSolvesRho) {
  std::string spec = file("k6.json", R"({"kind":"kgon","k":6,"H":1.0,"rho":null})");
  std::string out = file("k6.doc.json"), contact = file("k6.contact.json");
  Outcome r = run({"construct", spec, "-o", out, "--contact-out", contact});
  ASSERT_EQ(r.code, 0) << r.err;
  Json doc = read_json_file(out);
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(doc["parameters"]["solved"], "rho");
  EXPECT_NEAR(doc["parameters"]["rho"].get<double>(), 1.8899323409911863, 1e-12);
  EXPECT_EQ(read_json_file(contact)["size"], 6);
  EXPECT_NO_THROW(arcgon_from_json(doc));
}

TEST_F(Cli, ConstructKgonFiveExitsThree) {
  std::string spec = file("k5.json", R"({"kind":"kgon","k":5,"H":1.0,"rho":null})");
  Outcome r = run({"construct", spec});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("k >= 6"), std::string::npos);
  EXPECT_NE(r.err.find("5.5"), std::string::npos);
}

TEST_F(Cli, ConstructCantorHasContact) {
  std::string spec = file("c.json", R"({"kind":"cantor","tau":0.5,"n":4,"H":1.0})");
  Outcome r = run({"construct", spec});
  ASSERT_EQ(r.code, 0) << r.err;
  Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["contact"]["intervals_param"].size(), 4u * 16);
  EXPECT_EQ(doc["parameters"]["solved"], "ell");
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"bogus"}).code, 64);
  EXPECT_EQ(run({"construct"}).code, 64);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"construct", file("missing.json")}).code, 64);
  std::string bad = file("bad.json", R"({"kind":"kgon","k":6,"rho":1.0,"delta":5})");
  EXPECT_EQ(run({"construct", bad}).code, 64);
  std::string junk = file("junk.json", "{not json");
  EXPECT_EQ(run({"construct", junk}).code, 64);
}

TEST_F(Cli, CheegerReportsAndIsDeterministic) {
  std::string spec = file("sq.json", R"({"kind":"square"})");
  std::string dom = file("sq.doc.json");
  ASSERT_EQ(run({"construct", spec, "-o", dom}).code, 0);
  std::string a = file("a.json"), b = file("b.json"), t = file("t.json");
  Outcome r1 = run({"cheeger", dom, "-o", a, "--timing", t});
  Outcome r2 = run({"cheeger", dom, "-o", b});
  ASSERT_EQ(r1.code, 0) << r1.err;
  ASSERT_EQ(r2.code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  Json rep = read_json_file(a);
  EXPECT_NEAR(rep["outputs"]["solution"]["h"].get<double>(), 2 + std::sqrt(3.14159265358979323846), 1e-8);
  EXPECT_TRUE(rep["outputs"]["grid"]["agree"].get<bool>());
  EXPECT_TRUE(read_json_file(t).contains("seconds"));
  EXPECT_FALSE(rep.contains("seconds"));
  EXPECT_EQ(run({"cheeger", dom, "--grid-step", "zero"}).code, 64);
  EXPECT_EQ(run({"cheeger", dom, "--grid-step", "0.2"}).code, 64);
}

TEST(ExitCodes, Contract) {
  EXPECT_EQ(forge::exit_code(ErrorKind::NoSolution), 3);
  EXPECT_EQ(forge::exit_code(ErrorKind::NumericalFailure), 4);
  EXPECT_EQ(forge::exit_code(ErrorKind::FallbackRequired), 4);
  EXPECT_EQ(forge::exit_code(ErrorKind::UsageError), 64);
  EXPECT_EQ(forge::exit_code(ErrorKind::InvalidInput), 64);
  EXPECT_EQ(forge::exit_code(ErrorKind::DeltaTooLarge), 64);
  EXPECT_EQ(forge::exit_code(ErrorKind::InsufficientScales), 64);
}

TEST_F(Cli, VerifySuites) {
  std::string spec = file("k6.json", R"({"kind":"kgon","k":6})");
  std::string doc = file("k6.doc.json");
  ASSERT_EQ(run({"construct", spec, "-o", doc}).code, 0);
  EXPECT_EQ(run({"verify", doc, "--suite", "self-cheeger"}).code, 0);
  Outcome c = run({"verify", doc, "--suite", "contact"});
  EXPECT_EQ(c.code, 0);
  EXPECT_GE(Json::parse(c.out)["outputs"]["size"].get<int>(), 2);
  EXPECT_EQ(run({"verify", doc, "--suite", "steiner"}).code, 0);
  EXPECT_EQ(run({"verify", doc, "--suite", "angles"}).code, 64);
  EXPECT_EQ(run({"verify", doc, "--suite", "nonsense"}).code, 64);

  std::string sq = file("sq.json", R"({"kind":"square"})"), sqd = file("sq.doc.json");
  ASSERT_EQ(run({"construct", sq, "-o", sqd}).code, 0);
  Outcome f = run({"verify", sqd, "--suite", "self-cheeger", "--samples", "200"});
  EXPECT_EQ(f.code, 2);
  EXPECT_FALSE(Json::parse(f.out)["outputs"]["failures"].empty());

  std::string cs = file("c.json", R"({"kind":"cantor","tau":0.3333333333333333,"n":3})"), csd = file("c.doc.json");
  ASSERT_EQ(run({"construct", cs, "-o", csd}).code, 0);
  EXPECT_EQ(run({"verify", csd, "--suite", "tangent-balls", "--samples", "100"}).code, 0);
  EXPECT_EQ(run({"verify", csd, "--suite", "angles"}).code, 0);
}

TEST_F(Cli, DimensionInputs) {
  Json stage = to_json(cantor_stage(1.0 / 3, 12));
  std::string st = file("stage.json", stage.dump());
  Outcome r = run({"dimension", st, "--jmin", "4", "--jmax", "12"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(Json::parse(r.out)["outputs"]["slope"].get<double>(), 0.6309, 0.05);
  Json seg = {{"points", Json::array()}};
  for (int i = 0; i < 5000; ++i) seg["points"].push_back(i / 5000.0);
  Outcome s = run({"dimension", file("seg.json", seg.dump()), "--jmin", "2", "--jmax", "10"});
  EXPECT_NEAR(Json::parse(s.out)["outputs"]["slope"].get<double>(), 1.0, 0.05);
  Outcome p = run({"dimension", file("pt.json", R"({"points":[[0.3,0.4]]})"), "--jmin", "2", "--jmax", "10"});
  EXPECT_NEAR(Json::parse(p.out)["outputs"]["slope"].get<double>(), 0.0, 0.05);
  EXPECT_EQ(run({"dimension", st, "--jmin", "4", "--jmax", "5"}).code, 64);
}

TEST_F(Cli, RenderLayers) {
  std::string spec = file("k6.json", R"({"kind":"kgon","k":6})"), doc = file("k6.doc.json");
  ASSERT_EQ(run({"construct", spec, "-o", doc}).code, 0);
  std::string svg = file("k6.svg");
  ASSERT_EQ(run({"render", doc, "--svg", svg, "--layers", "omega,cheeger_set"}).code, 0);
  std::string s = slurp(svg);
  EXPECT_NE(s.find("<g id=\"omega\""), std::string::npos);
  EXPECT_NE(s.find("<g id=\"cheeger_set\""), std::string::npos);
  EXPECT_NE(s.find(" A "), std::string::npos);
  std::string svg2 = file("k6b.svg");
  ASSERT_EQ(run({"render", doc, "--svg", svg2, "--layers", "omega,cheeger_set"}).code, 0);
  EXPECT_EQ(slurp(svg2), s);
  EXPECT_EQ(run({"render", "--svg", svg}).code, 64);
  std::string disc = file("d.json", R"({"kind":"disc"})"), dd = file("d.doc.json");
  ASSERT_EQ(run({"construct", disc, "-o", dd}).code, 0);
  EXPECT_EQ(run({"render", dd, "--svg", svg, "--layers", "contact"}).code, 64);
}

TEST_F(Cli, RenderCantorHasContactHighlights) {
  std::string spec = file("c.json", R"({"kind":"cantor","tau":0.5,"n":2})"), doc = file("c.doc.json");
  ASSERT_EQ(run({"construct", spec, "-o", doc}).code, 0);
  std::string svg = file("c.svg");
  ASSERT_EQ(run({"render", doc, "--svg", svg}).code, 0);
  std::string s = slurp(svg);
  EXPECT_NE(s.find("<g id=\"contact\""), std::string::npos);
  std::size_t groups = 0;
  for (std::size_t p = s.find("<g "); p != std::string::npos; p = s.find("<g ", p + 1)) ++groups;
  EXPECT_EQ(groups, 3u);
}

// y is flipped, so a counter-clockwise convex arc keeps its on-screen orientation
TEST(Svg, ConvexArcsUseNegativeSweep) {
  forge::Layer l{"omega", {make_disc({0, 0}, 1.0)}, {}, {}};
  std::string s = forge::render_svg({l});
  std::istringstream in(s.substr(s.find(" d=\"")));
  std::string tok;
  int arcs = 0;
  while (in >> tok) {
    if (tok != "A") continue;
    std::string rx, ry, rot, large, sweep;
    in >> rx >> ry >> rot >> large >> sweep;
    EXPECT_EQ(sweep, "0");
    ++arcs;
  }
  EXPECT_GT(arcs, 0);
}
