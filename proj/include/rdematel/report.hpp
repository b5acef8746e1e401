#pragma once

// Analysis reports: running a bundle end to end, rendering result tables,
// the influence graph and the structured report, and reconciling a run
// against the published reference tables.

#include <string>
#include <vector>

#include "rdematel/network.hpp"
#include "rdematel/reference.hpp"
#include "rdematel/rough_dematel.hpp"
#include "rdematel/study.hpp"

namespace rdematel {

/// Everything needed to reproduce a run bit-for-bit from the same bundle.
struct ReportConfig {
  TauStrategy tau = TauStrategy::MaxTotalSum;
  CrispEnvelope envelope = CrispEnvelope::Separate;
  CrispifyMode crispify = CrispifyMode::Midpoint;
  ThresholdRule threshold = ThresholdRule::mean_sigma(1.0);
  /// Count diagonal entries in the threshold statistics and as edges.
  bool include_diagonal = false;
};

enum class DeviationStatus { Pass, Fail, NotComparable };
std::string_view to_string(DeviationStatus s);

struct DeviationEntry {
  std::string table;
  std::string cell;
  double reference = 0;
  double computed = 0;
  double difference = 0;  // |reference - computed|
  double tolerance = 0;
  DeviationStatus status = DeviationStatus::Pass;
  std::string note;
};

struct AnalysisReport {
  ReportConfig config;
  std::vector<CriterionMeta> criteria;
  std::size_t expert_count = 0;  // 0 when the bundle supplied the group matrix
  RoughAnalysis<double> analysis;
  Matrix<double> influence;  // crisp total-influence matrix
  InfluenceNetwork<double> network;
  std::vector<CausalPoint<double>> causal;
  std::vector<DeviationEntry> deviations;
};

/// Runs the rough pipeline, crispifies the total matrix, thresholds it and
/// collects the causal-diagram points.
AnalysisReport run_analysis(const StudyBundle& bundle, const ReportConfig& config);

struct LedgerTolerances {
  double group = 5e-4;
  double normalized = 5e-4;
  double total = 2e-3;
  double sums = 1e-3;
  double table3 = 1e-3;
  double table4 = 1e-3;
};

/// One entry per comparable published cell. The printed interval sums are
/// compared with their labels swapped (printed x = column sums). The crisp
/// conversion of those sums does not yield the printed crisp scores, so
/// those cells are reported as not comparable rather than failed.
std::vector<DeviationEntry> deviation_ledger(const RoughAnalysis<double>& computed,
                                             const PaperReference& reference,
                                             const LedgerTolerances& tol = {});

/// True iff no comparable entry failed.
bool ledger_passes(const std::vector<DeviationEntry>& ledger);

/// Fixed 4-decimal rendering, ties to even, no negative zero.
std::string format_fixed4(double v);

std::string render_results_csv(const AnalysisReport& r);
/// criterion,X,Y,X+Y,X-Y
std::string render_table3_csv(const AnalysisReport& r);
/// criterion,omega,W,rank
std::string render_table4_csv(const AnalysisReport& r);
std::string render_causal_csv(const AnalysisReport& r);
std::string render_ledger_csv(const std::vector<DeviationEntry>& ledger);
/// Full-precision structured report.
std::string render_report_json(const AnalysisReport& r);

/// Graphviz digraph: nodes and edges sorted by criterion id, edge strength
/// in the `weight` attribute.
std::string render_graph_dot(const InfluenceNetwork<double>& network,
                             const std::vector<std::string>& ids);

}  // namespace rdematel
