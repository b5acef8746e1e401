#pragma once

// Published reference data for the food-bank blockchain-adoption study:
// seven barriers (I1-I4 internal, E1-E3 external) rated by 21 respondents.
// Values are as printed (4 decimals), with typographical slips corrected:
// "17305" read as 1.7305 and decimal commas read as points.

#include <optional>
#include <string>
#include <vector>

#include "rdematel/rough_dematel.hpp"
#include "rdematel/study.hpp"

namespace rdematel {

struct PaperReference {
  std::vector<std::string> ids;

  /// First respondent's direct-relation matrix.
  Eigen::MatrixXi expert1;
  /// Rough group direct-relation matrix (input to the reproduction run).
  RoughMatrix<double> group;
  /// Normalized rough group matrix.
  RoughMatrix<double> normalized;
  /// Lower bounds of the rough total-relation matrix (uppers not printed).
  Matrix<double> total_lower;

  /// Interval sums as printed. The printed "x" column equals the column
  /// sums of the total-relation grid and "y" its row sums, i.e. the labels
  /// are swapped relative to x = row sums. Missing rows are nullopt.
  std::vector<std::optional<RoughNumber>> sums_x;
  std::vector<std::optional<RoughNumber>> sums_y;

  /// Crisp row/column scores, prominence and relation.
  Vector<double> crisp_x, crisp_y, prominence, relation;

  /// Importance, normalized weight and rank.
  Vector<double> importance, weight;
  std::vector<int> rank;
};

const PaperReference& paper_reference();

/// The study as an aggregate-mode bundle (criteria, respondents, rough
/// group matrix). Shipped on disk as data/paper_study.json.
StudyBundle paper_study_bundle();

/// The first respondent's matrix as an expert matrix with criterion ids.
ExpertMatrix paper_expert1();

}  // namespace rdematel
