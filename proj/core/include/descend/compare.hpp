#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <descend/solver.hpp>

namespace descend {

// Mutual lattice order of two invariants, embedded into a common
// comparison domain. LT means the first value is strictly stronger
// (strictly below), GT strictly weaker, UN incomparable.
enum class Ordering { EQ, LT, GT, UN };

const char *ordering_text(Ordering o);

Ordering classify(const Value &v1, DomainId d1, const Value &v2, DomainId d2);

struct WpRow {
  NodeId node;
  Ordering cls;
};

struct ComparisonReport {
  std::string dom1;
  std::string dom2;
  // Per-program widening-point rows; aggregated reports keep one entry
  // per input program.
  struct PerProgram {
    std::string name;
    std::vector<WpRow> rows;
    std::array<std::size_t, 4> counts() const;
  };
  std::vector<PerProgram> programs;
  double time1_seconds = 0;
  double time2_seconds = 0;
  std::optional<double> delta_eq; // vs. an optional baseline report

  std::size_t total_wps() const;
  std::array<std::size_t, 4> counts() const;       // EQ, LT, GT, UN
  std::array<double, 4> percentages() const;       // of total_wps
  double eq_percent() const { return percentages()[0]; }
};

// Runs both configurations on one control-flow graph (hence one
// widening-point set; differing overrides are a configuration error)
// and classifies the final invariants at every widening point.
ComparisonReport compare_runs(const Cfg &cfg, const std::string &program_name,
                              const AnalysisConfig &config1,
                              const AnalysisConfig &config2);

// Sums per-program rows into corpus totals; percentages recompute from
// the summed counts.
ComparisonReport aggregate(std::span<const ComparisonReport> reports);

std::string render_report(const ComparisonReport &r);
std::string report_to_json(const ComparisonReport &r);

} // namespace descend
