#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "lqel/clifford.hpp"
#include "lqel/secant.hpp"
#include "lqel/varieties.hpp"

namespace lqel {

struct CheckResult {
  bool pass{false};
  std::string detail;
};

struct CliffordSummary {
  bool built{false};
  std::string status{"ok"};  // "ok" or a reject code id
  std::string status_message;
  std::size_t dim_K{0}, dim_W{0}, p{1}, multiplicity{0};
  std::string chirality{"n/a"};
  std::size_t relation_checks{0};
  std::size_t relation_residuals{0};
  bool relations_ok{false};
  bool q_crosscheck{false};
  bool q_nondegenerate{false};
  std::string q_det{"0"};
  Matrix q;
};

// Everything one invariant run produces. Identical (catalog_id, seed)
// give byte-identical structured serializations; wall-clock timings are
// therefore kept out of the canonical form.
struct AnalysisRun {
  std::string catalog_id;
  std::uint64_t seed{0};
  bool catalog_entry{false};
  std::size_t n{0}, a{0};
  SecantReport secant;
  std::size_t dim_Z_projection{0};
  CliffordSummary clifford;
  std::map<std::string, CheckResult> checks;
  std::map<std::string, double> timings_ms;
  std::string overall{"ok"};  // "ok" | "rejected" | "breach"
};

// Resolve the id (catalog id, projected id, or path to a raw chart file)
// and run the full pipeline with a single generator seeded as given.
AnalysisRun analyze(const std::string& id_or_path, std::uint64_t seed);

enum class ReportFormat { Table, Structured };

std::string emit_report(const AnalysisRun& run, ReportFormat format);

// Inverse of the structured format; emit(parse(emit(run))) == emit(run).
AnalysisRun parse_structured(const std::string& text);

// The acceptance suite: one PASS/FAIL line per criterion on `out`.
// `seeds` is clamped up to the criteria minimums. Returns all-pass.
bool run_acceptance(std::size_t seeds, std::ostream& out);

}  // namespace lqel
