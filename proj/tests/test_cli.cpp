#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "geomforge/hexagon.hpp"
#include "geomforge/parallel.hpp"
#include "geomforge_cli/acceptance.hpp"
#include "geomforge_cli/commands.hpp"
#include "geomforge_cli/geometry_io.hpp"

namespace gf = geomforge;
namespace cli = geomforge::cli;

namespace {

const cli::Verdict* find_verdict(const cli::Report& r, const std::string& id) {
  for (const auto& v : r.verdicts) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("geomforge_test_" + name);
}

}  // namespace

TEST(Report, JsonShapeAndKeyOrder) {
  cli::Report r;
  r.command = "demo";
  r.parameters["q"] = 2;
  r.expect("same", 3, 3);
  r.check("flag", false, true, false).witness = "counterexample";
  r.counts["n"] = 7;
  EXPECT_FALSE(r.passed());
  const cli::Json j = cli::to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "command", "parameters", "verdicts", "counts", "pass"}));
  EXPECT_EQ(j["schema_version"], cli::kSchemaVersion);
  EXPECT_EQ(j["verdicts"][0]["pass"], true);
  EXPECT_EQ(j["verdicts"][1]["witness"], "counterexample");
  EXPECT_EQ(j["pass"], false);

  r.elapsed_ms = 5;
  EXPECT_TRUE(cli::to_json(r).contains("elapsed_ms"));
}

TEST(Report, TableMarksEachVerdict) {
  cli::Report r;
  r.command = "demo";
  r.expect("good", 1, 1);
  r.expect("bad", 1, 2);
  const std::string t = cli::to_table(r);
  EXPECT_NE(t.find("[PASS] good"), std::string::npos);
  EXPECT_NE(t.find("[FAIL] bad"), std::string::npos);
}

TEST(GeometryIo, EmbeddedRoundTrip) {
  const auto M = gf::build_split_cayley(2);
  const cli::Json j = cli::geometry_to_json(M.geometry);
  EXPECT_EQ(j["q"], 2);
  EXPECT_EQ(j["points"].size(), 63u);
  const gf::IncidenceGeometry back = cli::geometry_from_json(j);
  EXPECT_EQ(back.point_count(), 63);
  EXPECT_EQ(back.lines(), M.geometry.lines());
  EXPECT_EQ(cli::geometry_to_json(back), j);
}

TEST(GeometryIo, AbstractRoundTripThroughFile) {
  const gf::IncidenceGeometry G(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
  const auto path = temp_file("fano.json");
  cli::save_geometry(path.string(), G);
  const gf::IncidenceGeometry back = cli::load_geometry(path.string());
  std::filesystem::remove(path);
  EXPECT_EQ(back.point_count(), 7);
  EXPECT_EQ(back.lines(), G.lines());
}

TEST(GeometryIo, RejectsMalformedInput) {
  EXPECT_THROW(cli::geometry_from_json(cli::Json::parse(R"({"lines": []})")), gf::GeometryError);
  EXPECT_THROW(cli::geometry_from_json(cli::Json::parse(R"({"points": 3, "lines": [[0, 5]]})")), gf::GeometryError);
  EXPECT_THROW(cli::geometry_from_json(cli::Json::parse(R"({"q": 2, "points": [[1, 2]], "lines": []})")),
               gf::GeometryError);
  EXPECT_THROW(cli::load_geometry("/nonexistent/geometry.json"), gf::GeometryError);
}

TEST(Commands, FieldReport) {
  const auto r = cli::run_field(9);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(cli::field_axiom_violation(gf::Field::of_order(16)).has_value());
  EXPECT_THROW(cli::run_field(6), std::invalid_argument);
}

TEST(Commands, PolarReport) {
  const auto r = cli::run_polar(gf::PolarType::OrthogonalPlus, 8, 2, true);
  EXPECT_TRUE(r.passed());
  const auto* pc = find_verdict(r, "point_count");
  ASSERT_NE(pc, nullptr);
  EXPECT_EQ(pc->actual, 135);
  EXPECT_NE(find_verdict(r, "family_sizes_equal"), nullptr);
}

TEST(Commands, HexagonVerifyQ2) {
  cli::HexagonOptions opt;
  opt.q = 2;
  opt.verify = true;
  const auto r = cli::run_hexagon(opt);
  EXPECT_TRUE(r.passed());
  for (const char* id : {"step1", "step8", "generalized_hexagon", "levi_girth", "levi_diameter"}) {
    EXPECT_NE(find_verdict(r, id), nullptr) << id;
  }
  opt.q = 3;
  opt.stabilizer = true;
  EXPECT_THROW(cli::run_hexagon(opt), std::invalid_argument);
}

TEST(Commands, ExportThenNgon) {
  const auto path = temp_file("hexagon.json");
  cli::HexagonOptions opt;
  opt.q = 2;
  opt.export_path = path.string();
  ASSERT_TRUE(cli::run_hexagon(opt).passed());
  const auto r = cli::run_ngon(path.string(), false);
  std::filesystem::remove(path);
  EXPECT_TRUE(r.passed());
  const auto* ng = find_verdict(r, "generalized_ngon");
  ASSERT_NE(ng, nullptr);
  EXPECT_TRUE(ng->pass);
}

TEST(Commands, GroupPresets) {
  const auto sp = cli::run_group("Sp(4,2)", {"order", "antiflag", "line", "rank"});
  EXPECT_TRUE(sp.passed());
  EXPECT_THROW(cli::run_group("NotAGroup", {"order"}), std::invalid_argument);
  EXPECT_THROW(cli::run_group("Sp(4,2)", {"bogus"}), std::invalid_argument);
}

TEST(Commands, ConstraintReports) {
  EXPECT_TRUE(cli::run_rank3(30, 32, 13, 15).passed());
  EXPECT_TRUE(cli::run_zsigmondy(2, 6).passed());
  EXPECT_EQ(cli::zsigmondy_expected_outcome(2, 6), "q_k_64");
  EXPECT_EQ(cli::zsigmondy_expected_outcome(3, 2), "mersenne_k2");
  EXPECT_EQ(cli::zsigmondy_expected_outcome(5, 3), "primitive");
  std::string csv;
  EXPECT_TRUE(cli::run_section13(3, 20, &csv).passed());
  EXPECT_EQ(csv.rfind("q,h,m", 0), 0u);
  EXPECT_TRUE(cli::run_case31(2, 3, 5, 2, 1).passed());
}

TEST(Commands, ReportsAreDeterministicAcrossThreads) {
  gf::set_thread_count(1);
  const std::string a = cli::to_json_text(cli::run_group("Sp(4,3)", {"order", "rank", "antiflag"}));
  gf::set_thread_count(4);
  const std::string b = cli::to_json_text(cli::run_group("Sp(4,3)", {"order", "rank", "antiflag"}));
  gf::set_thread_count(1);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, cli::to_json_text(cli::run_group("Sp(4,3)", {"order", "rank", "antiflag"})));
}

TEST(Acceptance, CriteriaCatalogue) {
  const auto all = cli::acceptance_criteria();
  ASSERT_EQ(all.size(), 13u);
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].id, static_cast<int>(i) + 1);
  EXPECT_FALSE(cli::select_criteria("hexagon").empty());
  EXPECT_THROW(cli::select_criteria("no-such-tag"), std::invalid_argument);
}

TEST(Acceptance, SingleCriterionRuns) {
  const auto res = cli::run_criterion(cli::acceptance_criteria()[0]);
  EXPECT_TRUE(res.pass) << res.failure;
  EXPECT_NE(cli::summary_line(res).find("[PASS]"), std::string::npos);
}
