#pragma once

// Study bundles: criteria, respondents, and either the raw expert matrices
// or a precomputed rough group matrix, plus the expert-matrix CSV format.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdematel/network.hpp"
#include "rdematel/rough_dematel.hpp"

namespace rdematel {

enum class Category { Internal, External, Custom };
enum class Role { Practitioner, Academic };

std::string_view to_string(Category c);
std::string_view to_string(Role r);

struct CriterionMeta {
  std::string id;
  std::string name;
  Category category = Category::Custom;
  std::string description;

  friend bool operator==(const CriterionMeta&, const CriterionMeta&) = default;
};

struct RespondentMeta {
  std::string id;
  Role role = Role::Practitioner;
  std::string description;

  friend bool operator==(const RespondentMeta&, const RespondentMeta&) = default;
};

/// Analysis settings a bundle may carry; command-line flags and environment
/// variables take precedence.
struct BundleDefaults {
  std::optional<std::string> tau;
  std::optional<std::string> crispify;
  std::optional<std::string> threshold;

  bool empty() const { return !tau && !crispify && !threshold; }
  friend bool operator==(const BundleDefaults&, const BundleDefaults&) = default;
};

struct StudyBundle {
  Scale scale;
  std::vector<CriterionMeta> criteria;
  std::vector<RespondentMeta> respondents;
  /// Raw mode: one matrix per respondent, in document order.
  std::vector<ExpertMatrix> matrices;
  /// Aggregate mode: the group matrix is supplied directly.
  std::optional<RoughMatrix<double>> rough_group;
  BundleDefaults defaults;

  bool aggregate_mode() const { return rough_group.has_value(); }
  std::vector<std::string> criterion_ids() const;

  friend bool operator==(const StudyBundle& a, const StudyBundle& b);
};

/// Parses and cross-validates a bundle document. Every problem found is
/// reported in one ValidationError.
StudyBundle parse_study_bundle(std::string_view text);

/// Same as parse_study_bundle but returns the diagnostics instead of
/// throwing. Exactly one of the two members is populated.
struct BundleParseResult {
  std::optional<StudyBundle> bundle;
  std::vector<Diagnostic> diagnostics;
};
BundleParseResult try_parse_study_bundle(std::string_view text);

/// Deterministic serialization; parse(write(b)) == b.
std::string write_bundle(const StudyBundle& bundle);

/// Reads an expert matrix CSV: a header row of criterion ids (optionally
/// preceded by a corner cell), then one `<row-id>,<v1>,...,<vn>` row per
/// criterion. Problems are reported with 1-based line/column coordinates.
ExpertMatrix parse_expert_csv(std::string_view text, std::string expert_id = "expert",
                              Scale scale = {});
std::string write_expert_csv(const ExpertMatrix& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);
StudyBundle load_study_bundle(const std::string& path);

/// The bundle's rough group matrix: the supplied one in aggregate mode,
/// otherwise aggregated from the raw matrices.
RoughMatrix<double> group_matrix(const StudyBundle& bundle);

/// Splits one CSV record into fields (RFC 4180 quoting).
std::vector<std::string> split_csv_record(std::string_view line);
/// Text with CRLF / CR line endings converted to LF.
std::string normalize_newlines(std::string_view text);

}  // namespace rdematel
