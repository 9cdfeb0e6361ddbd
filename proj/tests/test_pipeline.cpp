#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "lqel/errors.hpp"
#include "lqel/pipeline.hpp"

using namespace lqel;

namespace {

struct TempChartFile {
  std::filesystem::path path;
  explicit TempChartFile(const std::string& name, const std::string& text) {
    path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << text;
  }
  ~TempChartFile() { std::error_code ec; std::filesystem::remove(path, ec); }
};

}  // namespace

TEST_CASE("a defective catalog run comes out clean") {
  const AnalysisRun run = analyze("segre:2x2", 1);
  CHECK(run.n == 4);
  CHECK(run.a == 4);
  CHECK(run.catalog_entry);
  CHECK(run.overall == "ok");
  CHECK(run.secant.delta == 2);
  CHECK(run.dim_Z_projection == 2);
  CHECK(run.clifford.built);
  CHECK(run.clifford.status == "ok");
  CHECK(run.clifford.relations_ok);
  for (const auto& [name, check] : run.checks) {
    CAPTURE(name);
    CHECK(check.pass);
  }
  const std::string table = emit_report(run, ReportFormat::Table);
  CHECK(table.find("segre:2x2") != std::string::npos);
  CHECK(table.find("ok") != std::string::npos);
}

TEST_CASE("structured reports round trip byte for byte") {
  for (const char* id : {"veronese:2", "segre:2x3", "grassmann:2,6", "segre:1x2"}) {
    CAPTURE(id);
    const AnalysisRun run = analyze(id, 3);
    const std::string text = emit_report(run, ReportFormat::Structured);
    const AnalysisRun back = parse_structured(text);
    CHECK(emit_report(back, ReportFormat::Structured) == text);
    CHECK(back.catalog_id == run.catalog_id);
    CHECK(back.seed == run.seed);
    CHECK(back.overall == run.overall);
    CHECK(back.secant.delta == run.secant.delta);
    CHECK(back.secant.ker_iiv == run.secant.ker_iiv);
    CHECK(back.clifford.q == run.clifford.q);
    CHECK(back.checks.size() == run.checks.size());
  }
}

TEST_CASE("identical seeds give identical reports") {
  const std::string a =
      emit_report(analyze("grassmann:2,6", 17), ReportFormat::Structured);
  const std::string b =
      emit_report(analyze("grassmann:2,6", 17), ReportFormat::Structured);
  CHECK(a == b);
  const std::string c =
      emit_report(analyze("grassmann:2,6", 18), ReportFormat::Structured);
  CHECK(a != c);  // the sampled direction is part of the report
}

TEST_CASE("filling entries are rejected with the stable code") {
  const AnalysisRun run = analyze("segre:1x2", 1);
  CHECK(run.overall == "rejected");
  CHECK_FALSE(run.clifford.built);
  CHECK(run.clifford.status == "secant_fills");
  CHECK(run.secant.secant_fills);
  CHECK(run.secant.landsberg_S ==
        static_cast<long>(run.n - run.secant.delta));
  for (const auto& [name, check] : run.checks) {
    CAPTURE(name);
    CHECK(check.pass);
  }
}

TEST_CASE("a non-defective curve is rejected as delta zero") {
  const TempChartFile file("lqel_test_cubic.chart", "1 2\nt1\nt1^2\nt1^3\n");
  const AnalysisRun run = analyze(file.path.string(), 1);
  CHECK_FALSE(run.catalog_entry);
  CHECK(run.overall == "rejected");
  CHECK(run.clifford.status == "delta_zero");
  CHECK(run.dim_Z_projection == 1);
  CHECK(run.checks.count("dim_z_oracle_agrees") == 0);
}

TEST_CASE("raw charts run through the same pipeline") {
  const TempChartFile file("lqel_test_quadric.chart", "2 1\nt1\nt2\nt1*t2\n");
  const AnalysisRun run = analyze(file.path.string(), 2);
  CHECK_FALSE(run.catalog_entry);
  CHECK(run.n == 2);
  CHECK(run.a == 1);
  CHECK(run.secant.delta == 2);
  // a quadric surface: its secant variety fills projective three-space
  CHECK(run.secant.secant_fills);
  CHECK(run.overall == "rejected");
  CHECK(run.checks.count("delta_matches_catalog") == 0);
}

TEST_CASE("a cone chart analyzes cleanly with a degenerate structure form") {
  const TempChartFile file("lqel_test_cone.chart",
                           "3 3\nt1\nt2\nt3\nt1^2\nt1*t2\nt2^2\n");
  const AnalysisRun run = analyze(file.path.string(), 1);
  CHECK_FALSE(run.catalog_entry);
  CHECK(run.secant.delta == 2);
  CHECK(run.dim_Z_projection == 1);
  REQUIRE(run.clifford.built);
  CHECK(run.clifford.q_det == "0");
  CHECK_FALSE(run.clifford.q_nondegenerate);
  CHECK(run.clifford.p == 1);
  CHECK(run.clifford.multiplicity == 1);
  // nondegeneracy is a catalog expectation, not a requirement on raw charts
  CHECK(run.checks.count("q_nondegenerate") == 0);
  CHECK(run.checks.at("multiplicity_consistent").pass);
  CHECK(run.checks.at("divisibility").pass);
  CHECK(run.overall == "ok");
}

TEST_CASE("unknown ids and malformed reports raise input errors") {
  CHECK_THROWS_AS(analyze("nosuch:thing", 1), input_error);
  CHECK_THROWS_AS(parse_structured("not json at all"), input_error);
  CHECK_THROWS_AS(parse_structured("{}"), input_error);
  CHECK_THROWS_AS(parse_structured(R"({"a": "three"})"), input_error);
  // a full report with one field of the wrong type
  const std::string good =
      emit_report(analyze("veronese:2", 1), ReportFormat::Structured);
  std::string bad = good;
  const auto pos = bad.find("\"n\": 2");
  REQUIRE(pos != std::string::npos);
  bad.replace(pos, 6, "\"n\": -2");
  CHECK_THROWS_AS(parse_structured(bad), input_error);
}

TEST_CASE("table report carries rejection details") {
  const std::string table =
      emit_report(analyze("grassmann:2,5", 1), ReportFormat::Table);
  CHECK(table.find("secant_fills") != std::string::npos);
  CHECK(table.find("rejected") != std::string::npos);
  CHECK(table.find("fills the ambient space") != std::string::npos);
}
