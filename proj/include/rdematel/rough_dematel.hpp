#pragma once

// Rough DEMATEL pipeline:
//   expert matrices -> per-pair judgment multisets -> rough group matrix
//   -> normalized rough matrix -> rough total-relation matrix
//   -> interval row/column sums -> crisp prominence and relation
//   -> importance weights, ranks, cause/effect groups.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rdematel/crisp.hpp"
#include "rdematel/rough.hpp"

namespace rdematel {

/// How the rough group matrix is scaled before the total-relation step.
enum class TauStrategy {
  /// Largest row sum of upper bounds.
  MaxUpperSum,
  /// Largest row sum of lower plus upper bounds.
  MaxTotalSum,
};

/// Envelope used when converting interval row/column sums to crisp values.
enum class CrispEnvelope {
  /// Row sums against the row-sum envelope, column sums against their own.
  Separate,
  /// Both lists against the envelope of their union.
  Joint,
};

inline std::string_view to_string(TauStrategy s) {
  return s == TauStrategy::MaxUpperSum ? "max-upper-sum" : "max-total-sum";
}
inline std::string_view to_string(CrispEnvelope e) {
  return e == CrispEnvelope::Separate ? "separate" : "joint";
}
inline TauStrategy parse_tau_strategy(std::string_view s) {
  if (s == "max-upper-sum") return TauStrategy::MaxUpperSum;
  if (s == "max-total-sum") return TauStrategy::MaxTotalSum;
  throw InvalidArgument("unknown tau strategy '" + std::string(s) + "'");
}
inline CrispEnvelope parse_crisp_envelope(std::string_view s) {
  if (s == "separate") return CrispEnvelope::Separate;
  if (s == "joint") return CrispEnvelope::Joint;
  throw InvalidArgument("unknown crisp envelope '" + std::string(s) + "'");
}

/// One expert's direct-relation judgments. `criteria` names the row/column
/// order when known; an empty list means "same order as everyone else".
struct ExpertMatrix {
  std::string expert_id;
  std::vector<std::string> criteria;
  Eigen::MatrixXi judgments;

  Eigen::Index size() const { return judgments.rows(); }
};

/// Throws unless the matrix is square, has a zero diagonal and every entry
/// lies on the scale.
inline void validate_expert_matrix(const ExpertMatrix& e, Scale scale = {}) {
  const auto& j = e.judgments;
  if (j.rows() != j.cols()) {
    throw ShapeError("expert '" + e.expert_id + "' matrix is not square");
  }
  if (!e.criteria.empty() && static_cast<Eigen::Index>(e.criteria.size()) != j.rows()) {
    throw ShapeError("expert '" + e.expert_id + "' criterion list does not match matrix size");
  }
  for (Eigen::Index r = 0; r < j.rows(); ++r) {
    for (Eigen::Index c = 0; c < j.cols(); ++c) {
      const auto where = "expert '" + e.expert_id + "' cell (" + std::to_string(r) +
                         ", " + std::to_string(c) + ")";
      if (r == c && j(r, c) != 0) throw InvalidArgument(where + ": diagonal must be 0");
      if (!scale.contains(j(r, c))) {
        throw InvalidArgument(where + ": value " + std::to_string(j(r, c)) +
                              " outside scale");
      }
    }
  }
}

/// Judgment multisets for every ordered criterion pair. Diagonal cells are
/// the fixed set {0}.
class GroupJudgments {
 public:
  GroupJudgments(Eigen::Index n, std::size_t experts, std::vector<JudgmentSet> cells)
      : n_(n), experts_(experts), cells_(std::move(cells)) {}

  Eigen::Index size() const { return n_; }
  std::size_t expert_count() const { return experts_; }
  const JudgmentSet& cell(Eigen::Index i, Eigen::Index j) const {
    return cells_[static_cast<std::size_t>(i * n_ + j)];
  }

 private:
  Eigen::Index n_;
  std::size_t experts_;
  std::vector<JudgmentSet> cells_;
};

/// Gathers every expert's judgment for each pair. Needs at least two
/// experts; with one, use the crisp method instead.
inline GroupJudgments collect_group(std::span<const ExpertMatrix> experts, Scale scale = {}) {
  if (experts.size() < 2) {
    throw InsufficientExperts("rough aggregation needs at least 2 experts, got " +
                              std::to_string(experts.size()) +
                              "; use crisp DEMATEL for a single expert");
  }
  const auto n = experts.front().size();
  const auto& order = experts.front().criteria;
  for (const auto& e : experts) {
    if (e.judgments.rows() != n || e.judgments.cols() != n) {
      throw ShapeError("expert '" + e.expert_id + "' matrix dimension differs from '" +
                       experts.front().expert_id + "'");
    }
    if (!order.empty() && !e.criteria.empty() && e.criteria != order) {
      throw ShapeError("expert '" + e.expert_id + "' uses a different criterion order");
    }
    validate_expert_matrix(e, scale);
  }

  std::vector<JudgmentSet> cells;
  cells.reserve(static_cast<std::size_t>(n * n));
  std::vector<int> values(experts.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) {
        cells.emplace_back(std::vector<int>{0}, Scale{0, std::max(0, scale.max)});
        continue;
      }
      for (std::size_t k = 0; k < experts.size(); ++k) values[k] = experts[k].judgments(i, j);
      cells.emplace_back(values, scale);
    }
  }
  return {n, experts.size(), std::move(cells)};
}

inline GroupJudgments collect_group(const std::vector<ExpertMatrix>& experts, Scale scale = {}) {
  return collect_group(std::span<const ExpertMatrix>(experts), scale);
}

/// Square matrix of rough numbers stored as a pair of bound matrices.
template <typename Scalar>
class RoughMatrix {
 public:
  RoughMatrix() = default;
  RoughMatrix(Matrix<Scalar> lower, Matrix<Scalar> upper)
      : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.rows() != lower_.cols() || lower_.rows() != upper_.rows() ||
        lower_.cols() != upper_.cols()) {
      throw ShapeError("rough matrix bounds must be square and equally sized");
    }
    if ((lower_.array() > upper_.array()).any()) {
      throw IntervalOrder("rough matrix entry with lower > upper");
    }
  }
  static RoughMatrix zero(Eigen::Index n) {
    return {Matrix<Scalar>::Zero(n, n), Matrix<Scalar>::Zero(n, n)};
  }
  /// Every entry a point interval.
  static RoughMatrix degenerate(const Matrix<Scalar>& m) { return {m, m}; }

  Eigen::Index size() const { return lower_.rows(); }
  const Matrix<Scalar>& lower() const { return lower_; }
  const Matrix<Scalar>& upper() const { return upper_; }
  Rough<Scalar> operator()(Eigen::Index i, Eigen::Index j) const {
    return {lower_(i, j), upper_(i, j)};
  }

  friend bool operator==(const RoughMatrix& a, const RoughMatrix& b) {
    return a.lower_ == b.lower_ && a.upper_ == b.upper_;
  }

 private:
  Matrix<Scalar> lower_;
  Matrix<Scalar> upper_;
};

/// Every judgment in a cell becomes a rough number against the cell's
/// multiset; the cell's value is the average of those rough numbers.
template <typename Scalar = double>
RoughMatrix<Scalar> rough_group_matrix(const GroupJudgments& g) {
  const auto n = g.size();
  Matrix<Scalar> lo = Matrix<Scalar>::Zero(n, n);
  Matrix<Scalar> hi = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      auto avg = average_rough(rough_sequence<Scalar>(g.cell(i, j)));
      lo(i, j) = avg.lower();
      hi(i, j) = avg.upper();
    }
  }
  return {std::move(lo), std::move(hi)};
}

template <typename Scalar>
Scalar rough_tau(const RoughMatrix<Scalar>& r, TauStrategy strategy) {
  Vector<Scalar> sums = r.upper().rowwise().sum();
  if (strategy == TauStrategy::MaxTotalSum) sums += r.lower().rowwise().sum();
  Scalar tau = sums.size() ? sums.maxCoeff() : Scalar(0);
  if (!(tau > Scalar(0))) throw DegenerateInput("rough group matrix is all zero");
  return tau;
}

template <typename Scalar>
RoughMatrix<Scalar> normalize_rough(const RoughMatrix<Scalar>& r, Scalar tau) {
  if (!(tau > Scalar(0))) throw InvalidArgument("normalizing factor must be positive");
  return {r.lower() / tau, r.upper() / tau};
}

template <typename Scalar>
RoughMatrix<Scalar> normalize_rough(const RoughMatrix<Scalar>& r, TauStrategy strategy) {
  return normalize_rough(r, rough_tau(r, strategy));
}

/// Applies the crisp total-relation closure to each bound separately.
template <typename Scalar>
RoughMatrix<Scalar> rough_total_relation(const RoughMatrix<Scalar>& rn) {
  Matrix<Scalar> lo, hi;
  try {
    lo = total_relation_crisp(rn.lower());
  } catch (const SingularMatrix& e) {
    throw SingularMatrix(std::string("lower-bound matrix: ") + e.what(), e.pivot_index());
  }
  try {
    hi = total_relation_crisp(rn.upper());
  } catch (const SingularMatrix& e) {
    throw SingularMatrix(std::string("upper-bound matrix: ") + e.what(), e.pivot_index());
  }
  return {std::move(lo), std::move(hi)};
}

template <typename Scalar>
struct RoughScores {
  std::vector<Rough<Scalar>> row_sums;  // X_i, influence given
  std::vector<Rough<Scalar>> col_sums;  // Y_j, influence received
  Vector<Scalar> crisp_given;           // x_i
  Vector<Scalar> crisp_received;        // y_i
};

namespace detail {
template <typename Scalar>
Vector<Scalar> to_vector(const std::vector<Scalar>& v) {
  Vector<Scalar> out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}
}  // namespace detail

template <typename Scalar>
RoughScores<Scalar> rough_sums(const RoughMatrix<Scalar>& t,
                               CrispEnvelope envelope = CrispEnvelope::Separate) {
  const auto n = t.size();
  Vector<Scalar> row_lo = t.lower().rowwise().sum();
  Vector<Scalar> row_hi = t.upper().rowwise().sum();
  Vector<Scalar> col_lo = t.lower().colwise().sum().transpose();
  Vector<Scalar> col_hi = t.upper().colwise().sum().transpose();

  RoughScores<Scalar> s;
  for (Eigen::Index i = 0; i < n; ++i) {
    s.row_sums.emplace_back(row_lo[i], row_hi[i]);
    s.col_sums.emplace_back(col_lo[i], col_hi[i]);
  }
  if (envelope == CrispEnvelope::Separate) {
    s.crisp_given = detail::to_vector(crisp_convert(s.row_sums));
    s.crisp_received = detail::to_vector(crisp_convert(s.col_sums));
  } else {
    auto joint = s.row_sums;
    joint.insert(joint.end(), s.col_sums.begin(), s.col_sums.end());
    auto crisp = detail::to_vector(crisp_convert(joint));
    s.crisp_given = crisp.head(n);
    s.crisp_received = crisp.tail(n);
  }
  return s;
}

template <typename Scalar>
struct ProminenceRelation {
  Vector<Scalar> prominence;  // m_i = x_i + y_i
  Vector<Scalar> relation;    // n_i = x_i - y_i
};

template <typename Scalar>
ProminenceRelation<Scalar> prominence_relation(const Vector<Scalar>& given,
                                               const Vector<Scalar>& received) {
  if (given.size() != received.size()) throw ShapeError("row and column score lengths differ");
  return {given + received, given - received};
}

template <typename Scalar>
ProminenceRelation<Scalar> prominence_relation(const RoughScores<Scalar>& s) {
  return prominence_relation<Scalar>(s.crisp_given, s.crisp_received);
}

template <typename Scalar>
struct Weights {
  Vector<Scalar> importance;  // omega_i
  Vector<Scalar> weight;      // W_i, sums to 1
  std::vector<int> rank;      // 1 = most important
  bool has_ties = false;
};

/// omega_i = |(m_i, n_i)|, normalized to sum to one. Equal importance ranks
/// by input order and sets `has_ties`.
template <typename Scalar>
Weights<Scalar> weights(const ProminenceRelation<Scalar>& pr) {
  const auto n = pr.prominence.size();
  if (n == 0) throw InvalidArgument("no criteria to weight");
  if (pr.relation.size() != n) throw ShapeError("prominence and relation lengths differ");

  Weights<Scalar> w;
  w.importance = (pr.prominence.array().square() + pr.relation.array().square()).sqrt();
  const Scalar total = w.importance.sum();
  if (!(total > Scalar(0))) throw DegenerateInput("all criteria have zero importance");
  w.weight = w.importance / total;

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return w.importance[a] > w.importance[b];
  });
  w.rank.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    w.rank[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos) + 1;
    if (pos > 0 && w.importance[order[pos]] == w.importance[order[pos - 1]]) w.has_ties = true;
  }
  return w;
}

enum class Group { Cause, Effect, Neutral };

inline std::string_view to_string(Group g) {
  switch (g) {
    case Group::Cause: return "cause";
    case Group::Effect: return "effect";
    case Group::Neutral: return "neutral";
  }
  return "neutral";
}

/// Positive relation drives the system (cause), negative is driven (effect).
template <typename Scalar>
Group classify(Scalar relation) {
  if (relation > Scalar(0)) return Group::Cause;
  if (relation < Scalar(0)) return Group::Effect;
  return Group::Neutral;
}

template <typename Scalar>
std::vector<Group> classify(const Vector<Scalar>& relation) {
  std::vector<Group> out;
  out.reserve(static_cast<std::size_t>(relation.size()));
  for (Eigen::Index i = 0; i < relation.size(); ++i) out.push_back(classify(relation[i]));
  return out;
}

struct AnalysisConfig {
  TauStrategy tau = TauStrategy::MaxTotalSum;
  CrispEnvelope envelope = CrispEnvelope::Separate;
};

/// Result row for one criterion.
template <typename Scalar>
struct CriterionResult {
  Scalar given;       // crisp x_i
  Scalar received;    // crisp y_i
  Scalar prominence;  // m_i
  Scalar relation;    // n_i
  Scalar importance;  // omega_i
  Scalar weight;      // W_i
  int rank;
  Group group;
};

template <typename Scalar>
struct RoughAnalysis {
  AnalysisConfig config;
  RoughMatrix<Scalar> group;
  Scalar tau{};
  RoughMatrix<Scalar> normalized;
  RoughMatrix<Scalar> total;
  RoughScores<Scalar> scores;
  std::vector<CriterionResult<Scalar>> criteria;
  bool rank_ties = false;
};

/// Weights, ranks and groups from crisp row/column scores.
template <typename Scalar>
std::vector<CriterionResult<Scalar>> score_criteria(const Vector<Scalar>& given,
                                                    const Vector<Scalar>& received,
                                                    bool* ties = nullptr) {
  auto pr = prominence_relation<Scalar>(given, received);
  auto w = weights(pr);
  std::vector<CriterionResult<Scalar>> out;
  for (Eigen::Index i = 0; i < given.size(); ++i) {
    out.push_back({given[i], received[i], pr.prominence[i], pr.relation[i],
                   w.importance[i], w.weight[i], w.rank[static_cast<std::size_t>(i)],
                   classify(pr.relation[i])});
  }
  if (ties) *ties = w.has_ties;
  return out;
}

/// Runs everything downstream of the rough group matrix.
template <typename Scalar>
RoughAnalysis<Scalar> analyze_rough(const RoughMatrix<Scalar>& group, AnalysisConfig config = {}) {
  if (group.size() < 2) throw InvalidArgument("DEMATEL needs at least 2 criteria");
  RoughAnalysis<Scalar> a;
  a.config = config;
  a.group = group;
  a.tau = rough_tau(group, config.tau);
  a.normalized = normalize_rough(group, a.tau);
  a.total = rough_total_relation(a.normalized);
  a.scores = rough_sums(a.total, config.envelope);
  a.criteria = score_criteria<Scalar>(a.scores.crisp_given, a.scores.crisp_received, &a.rank_ties);
  return a;
}

template <typename Scalar = double>
RoughAnalysis<Scalar> analyze_experts(std::span<const ExpertMatrix> experts,
                                      AnalysisConfig config = {}, Scale scale = {}) {
  return analyze_rough(rough_group_matrix<Scalar>(collect_group(experts, scale)), config);
}

}  // namespace rdematel
