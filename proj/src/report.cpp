#include "rdematel/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "json.hpp"

namespace rdematel {

using Json = nlohmann::ordered_json;

std::string_view to_string(DeviationStatus s) {
  switch (s) {
    case DeviationStatus::Pass: return "pass";
    case DeviationStatus::Fail: return "fail";
    case DeviationStatus::NotComparable: return "not-comparable";
  }
  return "fail";
}

AnalysisReport run_analysis(const StudyBundle& bundle, const ReportConfig& config) {
  AnalysisReport r;
  r.config = config;
  r.criteria = bundle.criteria;
  r.expert_count = bundle.aggregate_mode() ? 0 : bundle.matrices.size();
  r.analysis = analyze_rough(group_matrix(bundle), AnalysisConfig{config.tau, config.envelope});
  r.influence = crispify_total(r.analysis.total, config.crispify);
  double q = threshold(r.influence, config.threshold, config.include_diagonal);
  r.network = extract_network(r.influence, q, config.include_diagonal);
  r.causal = causal_diagram(r.analysis.criteria);
  return r;
}

namespace {

class LedgerBuilder {
 public:
  void compare(std::string table, std::string cell, double reference, double computed,
               double tol, std::string note = {}) {
    DeviationEntry e{std::move(table), std::move(cell), reference, computed,
                     std::abs(reference - computed), tol, DeviationStatus::Pass, std::move(note)};
    e.status = e.difference <= tol ? DeviationStatus::Pass : DeviationStatus::Fail;
    entries_.push_back(std::move(e));
  }
  void not_comparable(std::string table, std::string cell, double reference, double computed,
                      std::string note) {
    entries_.push_back({std::move(table), std::move(cell), reference, computed,
                        std::abs(reference - computed), 0.0, DeviationStatus::NotComparable,
                        std::move(note)});
  }
  std::vector<DeviationEntry> take() { return std::move(entries_); }

 private:
  std::vector<DeviationEntry> entries_;
};

std::string pair_cell(const std::vector<std::string>& ids, Eigen::Index i, Eigen::Index j,
                      const char* bound) {
  return "(" + ids[static_cast<std::size_t>(i)] + "," + ids[static_cast<std::size_t>(j)] + ")" +
         bound;
}

void compare_rough_offdiag(LedgerBuilder& lb, const char* table, const std::vector<std::string>& ids,
                           const RoughMatrix<double>& ref, const RoughMatrix<double>& got,
                           double tol) {
  for (Eigen::Index i = 0; i < ref.size(); ++i) {
    for (Eigen::Index j = 0; j < ref.size(); ++j) {
      if (i == j) continue;
      lb.compare(table, pair_cell(ids, i, j, ".lower"), ref.lower()(i, j), got.lower()(i, j), tol);
      lb.compare(table, pair_cell(ids, i, j, ".upper"), ref.upper()(i, j), got.upper()(i, j), tol);
    }
  }
}

}  // namespace

std::vector<DeviationEntry> deviation_ledger(const RoughAnalysis<double>& computed,
                                             const PaperReference& ref,
                                             const LedgerTolerances& tol) {
  const auto& ids = ref.ids;
  const auto n = static_cast<Eigen::Index>(ids.size());
  if (computed.group.size() != n) throw ShapeError("analysis size differs from reference tables");
  LedgerBuilder lb;

  compare_rough_offdiag(lb, "A2", ids, ref.group, computed.group, tol.group);
  compare_rough_offdiag(lb, "A3", ids, ref.normalized, computed.normalized, tol.normalized);

  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      lb.compare("A4", pair_cell(ids, i, j, ".lower"), ref.total_lower(i, j),
                 computed.total.lower()(i, j), tol.total);
    }
  }

  // Printed x are column sums of the total matrix and printed y row sums.
  const auto& rows = computed.scores.row_sums;
  const auto& cols = computed.scores.col_sums;
  const std::string swap_note = "printed x compared with column sums, y with row sums";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (const auto& x = ref.sums_x[i]) {
      lb.compare("A5", "x(" + ids[i] + ").lower", x->lower(), cols[i].lower(), tol.sums, swap_note);
      lb.compare("A5", "x(" + ids[i] + ").upper", x->upper(), cols[i].upper(), tol.sums, swap_note);
    }
    if (const auto& y = ref.sums_y[i]) {
      lb.compare("A5", "y(" + ids[i] + ").lower", y->lower(), rows[i].lower(), tol.sums, swap_note);
      lb.compare("A5", "y(" + ids[i] + ").upper", y->upper(), rows[i].upper(), tol.sums, swap_note);
    }
  }

  // Crisp scores: the interval-to-crisp conversion of the printed sums lands
  // near 1.0-1.3, not the printed 2.8-3.6; the intermediate is unrecoverable.
  const std::string crisp_note =
      "crisp conversion of the interval sums does not produce the printed crisp scores";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto k = static_cast<Eigen::Index>(i);
    lb.not_comparable("T3", "X(" + ids[i] + ")", ref.crisp_x[k], computed.scores.crisp_received[k],
                      crisp_note);
    lb.not_comparable("T3", "Y(" + ids[i] + ")", ref.crisp_y[k], computed.scores.crisp_given[k],
                      crisp_note);
  }

  // Internal consistency of the printed crisp scores and their weights.
  auto from_print = score_criteria<double>(ref.crisp_x, ref.crisp_y);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto k = static_cast<Eigen::Index>(i);
    const auto& c = from_print[i];
    lb.compare("T3", "X+Y(" + ids[i] + ")", ref.prominence[k], c.prominence, tol.table3,
               "from printed X and Y");
    lb.compare("T3", "X-Y(" + ids[i] + ")", ref.relation[k], c.relation, tol.table3,
               "from printed X and Y");
    lb.compare("T4", "omega(" + ids[i] + ")", ref.importance[k], c.importance, tol.table4,
               "from printed X and Y");
    lb.compare("T4", "W(" + ids[i] + ")", ref.weight[k], c.weight, tol.table4,
               "from printed X and Y");
    lb.compare("T4", "rank(" + ids[i] + ")", ref.rank[i], c.rank, 0.0, "from printed X and Y");
  }
  return lb.take();
}

bool ledger_passes(const std::vector<DeviationEntry>& ledger) {
  return std::none_of(ledger.begin(), ledger.end(),
                      [](const auto& e) { return e.status == DeviationStatus::Fail; });
}

std::string format_fixed4(double v) {
  char buf[64];
  // glibc rounds the exact binary value, ties to even
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += "\"\"";
    else q.push_back(ch);
  }
  return q + "\"";
}

std::string full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json matrix_json(const Matrix<double>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rough_json(const RoughMatrix<double>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.size(); ++j) row.push_back({m.lower()(i, j), m.upper()(i, j)});
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::string& id_of(const AnalysisReport& r, std::size_t i) { return r.criteria[i].id; }

}  // namespace

std::string render_results_csv(const AnalysisReport& r) {
  std::string out = "criterion,X,Y,X+Y,X-Y,omega,W,rank,group\n";
  for (std::size_t i = 0; i < r.analysis.criteria.size(); ++i) {
    const auto& c = r.analysis.criteria[i];
    out += csv_field(id_of(r, i)) + ',' + format_fixed4(c.given) + ',' +
           format_fixed4(c.received) + ',' + format_fixed4(c.prominence) + ',' +
           format_fixed4(c.relation) + ',' + format_fixed4(c.importance) + ',' +
           format_fixed4(c.weight) + ',' + std::to_string(c.rank) + ',' +
           std::string(to_string(c.group)) + '\n';
  }
  return out;
}

std::string render_table3_csv(const AnalysisReport& r) {
  std::string out = "criterion,X,Y,X+Y,X-Y\n";
  for (std::size_t i = 0; i < r.analysis.criteria.size(); ++i) {
    const auto& c = r.analysis.criteria[i];
    out += csv_field(id_of(r, i)) + ',' + format_fixed4(c.given) + ',' +
           format_fixed4(c.received) + ',' + format_fixed4(c.prominence) + ',' +
           format_fixed4(c.relation) + '\n';
  }
  return out;
}

std::string render_table4_csv(const AnalysisReport& r) {
  std::string out = "criterion,omega,W,rank\n";
  for (std::size_t i = 0; i < r.analysis.criteria.size(); ++i) {
    const auto& c = r.analysis.criteria[i];
    out += csv_field(id_of(r, i)) + ',' + format_fixed4(c.importance) + ',' +
           format_fixed4(c.weight) + ',' + std::to_string(c.rank) + '\n';
  }
  return out;
}

std::string render_causal_csv(const AnalysisReport& r) {
  std::string out = "criterion,prominence,relation,group\n";
  for (const auto& p : r.causal) {
    out += csv_field(id_of(r, static_cast<std::size_t>(p.criterion))) + ',' +
           format_fixed4(p.prominence) + ',' + format_fixed4(p.relation) + ',' +
           std::string(to_string(p.group)) + '\n';
  }
  return out;
}

std::string render_ledger_csv(const std::vector<DeviationEntry>& ledger) {
  std::string out = "table,cell,reference,computed,difference,tolerance,status,note\n";
  for (const auto& e : ledger) {
    out += csv_field(e.table) + ',' + csv_field(e.cell) + ',' + full(e.reference) + ',' +
           full(e.computed) + ',' + full(e.difference) + ',' + full(e.tolerance) + ',' +
           std::string(to_string(e.status)) + ',' + csv_field(e.note) + '\n';
  }
  return out;
}

std::string render_report_json(const AnalysisReport& r) {
  const auto& a = r.analysis;
  Json doc;
  doc["config"] = {{"tau", to_string(r.config.tau)},
                   {"envelope", to_string(r.config.envelope)},
                   {"crispify", to_string(r.config.crispify)},
                   {"threshold", r.config.threshold.to_string()},
                   {"include_diagonal", r.config.include_diagonal}};
  doc["experts"] = r.expert_count;
  doc["tau_value"] = a.tau;
  doc["threshold_value"] = r.network.threshold;
  doc["rank_ties"] = a.rank_ties;

  Json results = Json::array();
  for (std::size_t i = 0; i < a.criteria.size(); ++i) {
    const auto& c = a.criteria[i];
    results.push_back({{"id", id_of(r, i)},
                       {"X", c.given},
                       {"Y", c.received},
                       {"prominence", c.prominence},
                       {"relation", c.relation},
                       {"omega", c.importance},
                       {"W", c.weight},
                       {"rank", c.rank},
                       {"group", to_string(c.group)}});
  }
  doc["results"] = std::move(results);

  Json sums = Json::array();
  for (std::size_t i = 0; i < a.scores.row_sums.size(); ++i) {
    sums.push_back({{"id", id_of(r, i)},
                    {"row_sum", {a.scores.row_sums[i].lower(), a.scores.row_sums[i].upper()}},
                    {"col_sum", {a.scores.col_sums[i].lower(), a.scores.col_sums[i].upper()}}});
  }
  doc["interval_sums"] = std::move(sums);
  doc["group_matrix"] = rough_json(a.group);
  doc["normalized_matrix"] = rough_json(a.normalized);
  doc["total_matrix"] = rough_json(a.total);
  doc["influence_matrix"] = matrix_json(r.influence);

  Json edges = Json::array();
  for (const auto& e : r.network.edges) {
    edges.push_back({{"source", id_of(r, static_cast<std::size_t>(e.source))},
                     {"target", id_of(r, static_cast<std::size_t>(e.target))},
                     {"strength", e.strength}});
  }
  Json nodes = Json::array();
  for (const auto& c : r.criteria) nodes.push_back(c.id);
  doc["network"] = {{"threshold", r.network.threshold}, {"nodes", nodes}, {"edges", edges}};

  Json causal = Json::array();
  for (const auto& p : r.causal) {
    causal.push_back({{"id", id_of(r, static_cast<std::size_t>(p.criterion))},
                      {"prominence", p.prominence},
                      {"relation", p.relation},
                      {"group", to_string(p.group)}});
  }
  doc["causal_diagram"] = std::move(causal);

  if (!r.deviations.empty()) {
    Json dev = Json::array();
    for (const auto& e : r.deviations) {
      dev.push_back({{"table", e.table},
                     {"cell", e.cell},
                     {"reference", e.reference},
                     {"computed", e.computed},
                     {"difference", e.difference},
                     {"tolerance", e.tolerance},
                     {"status", to_string(e.status)},
                     {"note", e.note}});
    }
    doc["deviations"] = std::move(dev);
  }
  return doc.dump(2, ' ', false) + "\n";
}

std::string render_graph_dot(const InfluenceNetwork<double>& network,
                             const std::vector<std::string>& ids) {
  if (static_cast<Eigen::Index>(ids.size()) != network.node_count) {
    throw ShapeError("graph rendering needs one id per node");
  }
  auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') q.push_back('\\');
      q.push_back(ch);
    }
    return q + "\"";
  };

  std::vector<std::size_t> order(ids.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });

  auto edges = network.edges;
  std::stable_sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
    const auto& sa = ids[static_cast<std::size_t>(a.source)];
    const auto& sb = ids[static_cast<std::size_t>(b.source)];
    if (sa != sb) return sa < sb;
    return ids[static_cast<std::size_t>(a.target)] < ids[static_cast<std::size_t>(b.target)];
  });

  std::string out = "digraph influence {\n";
  out += "  // threshold " + format_fixed4(network.threshold) + "\n";
  for (auto i : order) out += "  " + quoted(ids[i]) + ";\n";
  for (const auto& e : edges) {
    out += "  " + quoted(ids[static_cast<std::size_t>(e.source)]) + " -> " +
           quoted(ids[static_cast<std::size_t>(e.target)]) +
           " [weight=" + format_fixed4(e.strength) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace rdematel
