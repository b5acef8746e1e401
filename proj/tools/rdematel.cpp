// rdematel: command-line driver for rough DEMATEL studies.
//
// Exit codes: 0 success, 2 validation or analysis failure, 3 I/O failure.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rdematel/reference.hpp"
#include "rdematel/report.hpp"
#include "rdematel/study.hpp"
#include "rdematel/synth.hpp"

namespace fs = std::filesystem;
using namespace rdematel;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kIo = 3;

struct AnalysisFlags {
  std::string tau;
  std::string crispify;
  std::string threshold;
  std::string envelope;
  bool include_diagonal = false;
};

void add_analysis_flags(CLI::App* cmd, AnalysisFlags& f) {
  cmd->add_option("--tau", f.tau, "normalization: max-total-sum | max-upper-sum")
      ->envname("RDEMATEL_TAU");
  cmd->add_option("--crispify", f.crispify, "total matrix to crisp: midpoint | global-crisp")
      ->envname("RDEMATEL_CRISPIFY");
  cmd->add_option("--threshold", f.threshold, "mean-sigma:<k> | fixed:<q>")
      ->envname("RDEMATEL_THRESHOLD");
  cmd->add_option("--envelope", f.envelope, "crisp score envelope: separate | joint")
      ->envname("RDEMATEL_ENVELOPE");
  cmd->add_flag("--include-diagonal", f.include_diagonal,
                "count diagonal entries in threshold statistics and as edges")
      ->envname("RDEMATEL_INCLUDE_DIAGONAL");
}

/// Flags (and their environment variables) override bundle defaults, which
/// override built-in defaults.
ReportConfig resolve_config(const AnalysisFlags& f, const BundleDefaults& d) {
  auto pick = [](const std::string& flag, const std::optional<std::string>& bundle,
                 const char* builtin) -> std::string {
    if (!flag.empty()) return flag;
    if (bundle) return *bundle;
    return builtin;
  };
  ReportConfig c;
  c.tau = parse_tau_strategy(pick(f.tau, d.tau, "max-total-sum"));
  c.crispify = parse_crispify_mode(pick(f.crispify, d.crispify, "midpoint"));
  c.threshold = ThresholdRule::parse(pick(f.threshold, d.threshold, "mean-sigma:1"));
  c.envelope = parse_crisp_envelope(f.envelope.empty() ? "separate" : f.envelope);
  c.include_diagonal = f.include_diagonal;
  return c;
}

void print_config(const ReportConfig& c, double tau, double q) {
  std::cout << "config: tau=" << to_string(c.tau) << " envelope=" << to_string(c.envelope)
            << " crispify=" << to_string(c.crispify) << " threshold=" << c.threshold.to_string()
            << " include-diagonal=" << (c.include_diagonal ? "yes" : "no") << "\n"
            << "tau value: " << format_fixed4(tau) << "\n"
            << "threshold q: " << format_fixed4(q) << "\n";
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir + "': " + ec.message());
}

void write_report_files(const AnalysisReport& r, const std::string& dir) {
  ensure_dir(dir);
  const auto ids = [&] {
    std::vector<std::string> v;
    for (const auto& c : r.criteria) v.push_back(c.id);
    return v;
  }();
  write_file(dir + "/results.csv", render_results_csv(r));
  write_file(dir + "/table3.csv", render_table3_csv(r));
  write_file(dir + "/table4.csv", render_table4_csv(r));
  write_file(dir + "/causal.csv", render_causal_csv(r));
  write_file(dir + "/network.dot", render_graph_dot(r.network, ids));
  write_file(dir + "/report.json", render_report_json(r));
  if (!r.deviations.empty()) write_file(dir + "/ledger.csv", render_ledger_csv(r.deviations));
}

void print_diagnostics(const ValidationError& e) {
  for (const auto& d : e.diagnostics()) std::cerr << "  " << d.to_string() << "\n";
}

int cmd_validate(const std::string& path) {
  auto text = read_file(path);
  if (fs::path(path).extension() == ".csv") {
    auto m = parse_expert_csv(text, fs::path(path).stem().string());
    std::cout << path << ": valid expert matrix, " << m.size() << " criteria\n";
    return kOk;
  }
  auto b = parse_study_bundle(text);
  std::cout << path << ": valid bundle, " << b.criteria.size() << " criteria, "
            << b.respondents.size() << " respondents, "
            << (b.aggregate_mode() ? "aggregate mode" : "raw mode") << "\n";
  return kOk;
}

int cmd_analyze(const std::string& path, const AnalysisFlags& flags, const std::string& out) {
  auto bundle = load_study_bundle(path);
  auto config = resolve_config(flags, bundle.defaults);
  auto report = run_analysis(bundle, config);
  print_config(config, report.analysis.tau, report.network.threshold);
  std::cout << render_results_csv(report);
  if (report.analysis.rank_ties) {
    std::cout << "note: equal importance values; ties ranked by input order\n";
  }
  write_report_files(report, out);
  std::cout << "wrote report to " << out << "\n";
  return kOk;
}

int cmd_graph(const std::string& path, const AnalysisFlags& flags, const std::string& out) {
  auto bundle = load_study_bundle(path);
  auto report = run_analysis(bundle, resolve_config(flags, bundle.defaults));
  auto dot = render_graph_dot(report.network, bundle.criterion_ids());
  if (out.empty()) {
    std::cout << dot;
  } else {
    write_file(out, dot);
  }
  return kOk;
}

int cmd_reproduce(const std::string& fixture, const AnalysisFlags& flags, const std::string& out) {
  auto bundle = load_study_bundle(fixture);
  auto config = resolve_config(flags, bundle.defaults);
  auto report = run_analysis(bundle, config);
  report.deviations = deviation_ledger(report.analysis, paper_reference());
  print_config(config, report.analysis.tau, report.network.threshold);

  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& e : report.deviations) {
    switch (e.status) {
      case DeviationStatus::Pass: ++pass; break;
      case DeviationStatus::Fail: ++fail; break;
      case DeviationStatus::NotComparable: ++skipped; break;
    }
  }
  for (const auto& e : report.deviations) {
    if (e.status == DeviationStatus::Fail) {
      std::cout << "FAIL " << e.table << " " << e.cell << ": reference " << e.reference
                << " computed " << e.computed << " (|diff| " << e.difference << " > "
                << e.tolerance << ")\n";
    }
  }
  std::cout << render_table4_csv(report);
  std::cout << "ledger: " << pass << " pass, " << fail << " fail, " << skipped
            << " not-comparable (crisp scores from interval sums)\n";
  if (!out.empty()) {
    write_report_files(report, out);
    std::cout << "wrote report and ledger to " << out << "\n";
  }
  return ledger_passes(report.deviations) ? kOk : kInvalid;
}

int cmd_synth(const SynthOptions& opts, const std::string& out) {
  auto text = write_bundle(synthesize_bundle(opts));
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rough DEMATEL analysis of expert influence judgments"};
  app.require_subcommand(1);

  std::string bundle_path, out, analyze_out;
  AnalysisFlags flags;

  auto* validate = app.add_subcommand("validate", "check a study bundle or expert CSV");
  validate->add_option("bundle", bundle_path, "bundle (.json) or expert matrix (.csv)")->required();

  auto* analyze = app.add_subcommand("analyze", "run the full analysis and write reports");
  analyze->add_option("bundle", bundle_path)->required();
  add_analysis_flags(analyze, flags);
  analyze->add_option("--out", analyze_out, "output directory")
      ->envname("RDEMATEL_OUT")
      ->default_val("rdematel-out");

  auto* graph = app.add_subcommand("graph", "print the thresholded influence graph (DOT)");
  graph->add_option("bundle", bundle_path)->required();
  add_analysis_flags(graph, flags);
  graph->add_option("--out", out, "write to file instead of stdout");

  std::string fixture = std::string(RDEMATEL_DATA_DIR) + "/paper_study.json";
  auto* reproduce = app.add_subcommand("reproduce-paper",
                                       "rerun the published study and reconcile against its tables");
  add_analysis_flags(reproduce, flags);
  reproduce->add_option("--fixture", fixture, "reference study bundle")
      ->envname("RDEMATEL_FIXTURE");
  reproduce->add_option("--out", out, "output directory for report and ledger")
      ->envname("RDEMATEL_OUT");

  SynthOptions synth_opts;
  auto* synth = app.add_subcommand("synth", "generate a random raw-mode bundle");
  synth->add_option("--criteria", synth_opts.criteria)->envname("RDEMATEL_CRITERIA")->required();
  synth->add_option("--experts", synth_opts.experts)->envname("RDEMATEL_EXPERTS")->required();
  synth->add_option("--seed", synth_opts.seed)->envname("RDEMATEL_SEED")->required();
  synth->add_flag("--unanimous", synth_opts.unanimous, "every expert submits the same matrix");
  synth->add_option("--out", out, "write to file instead of stdout");

  auto* fixture_cmd = app.add_subcommand("fixture", "write the built-in reference study bundle");
  fixture_cmd->add_option("--out", out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*validate) return cmd_validate(bundle_path);
    if (*analyze) return cmd_analyze(bundle_path, flags, analyze_out);
    if (*graph) return cmd_graph(bundle_path, flags, out);
    if (*reproduce) return cmd_reproduce(fixture, flags, out);
    if (*synth) return cmd_synth(synth_opts, out);
    if (*fixture_cmd) {
      auto text = write_bundle(paper_study_bundle());
      if (out.empty()) std::cout << text;
      else write_file(out, text);
      return kOk;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.diagnostics().size() << " problem(s)\n";
    print_diagnostics(e);
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << "analysis failed: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
