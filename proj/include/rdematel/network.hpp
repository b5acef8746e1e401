#pragma once

// Crisp total-influence matrix, significance threshold, and the
// thresholded influence network / causal diagram data.

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "rdematel/rough_dematel.hpp"

namespace rdematel {

enum class CrispifyMode {
  /// (t_lower + t_upper) / 2 per entry.
  Midpoint,
  /// The interval-list crisp conversion applied over all n*n entries at once.
  GlobalCrisp,
};

inline std::string_view to_string(CrispifyMode m) {
  return m == CrispifyMode::Midpoint ? "midpoint" : "global-crisp";
}
inline CrispifyMode parse_crispify_mode(std::string_view s) {
  if (s == "midpoint") return CrispifyMode::Midpoint;
  if (s == "global-crisp") return CrispifyMode::GlobalCrisp;
  throw InvalidArgument("unknown crispify mode '" + std::string(s) + "'");
}

template <typename Scalar>
Matrix<Scalar> crispify_total(const RoughMatrix<Scalar>& t,
                              CrispifyMode mode = CrispifyMode::Midpoint) {
  const auto n = t.size();
  if (mode == CrispifyMode::Midpoint) return (t.lower() + t.upper()) / Scalar(2);

  std::vector<Rough<Scalar>> entries;
  entries.reserve(static_cast<std::size_t>(n * n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) entries.push_back(t(i, j));
  auto crisp = crisp_convert(entries);
  Matrix<Scalar> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = crisp[static_cast<std::size_t>(i * n + j)];
  return out;
}

/// Threshold rule: either mean + k * sigma over the matrix entries
/// (population sigma), or a fixed value.
struct ThresholdRule {
  enum class Kind { MeanSigma, Fixed } kind = Kind::MeanSigma;
  double value = 1.0;  // k for MeanSigma, q for Fixed

  static ThresholdRule mean_sigma(double k = 1.0) { return {Kind::MeanSigma, k}; }
  static ThresholdRule fixed(double q) { return {Kind::Fixed, q}; }

  /// "mean-sigma:<k>" or "fixed:<q>"; a bare "mean-sigma" means k = 1.
  static ThresholdRule parse(std::string_view text);
  std::string to_string() const;
};

inline ThresholdRule ThresholdRule::parse(std::string_view text) {
  auto colon = text.find(':');
  auto head = text.substr(0, colon);
  double v = 1.0;
  if (colon != std::string_view::npos) {
    std::string tail(text.substr(colon + 1));
    std::size_t used = 0;
    try {
      v = std::stod(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tail.size() || !std::isfinite(v)) {
      throw InvalidArgument("bad threshold value in '" + std::string(text) + "'");
    }
  }
  if (head == "mean-sigma") return mean_sigma(v);
  if (head == "fixed") {
    if (colon == std::string_view::npos) {
      throw InvalidArgument("fixed threshold needs a value, e.g. fixed:0.5");
    }
    return fixed(v);
  }
  throw InvalidArgument("unknown threshold mode '" + std::string(text) + "'");
}

inline std::string ThresholdRule::to_string() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s:%.17g", kind == Kind::MeanSigma ? "mean-sigma" : "fixed",
                value);
  return buf;
}

template <typename Scalar>
struct EntryStats {
  Scalar mean;
  Scalar sigma;  // population
};

template <typename Scalar>
EntryStats<Scalar> entry_stats(const Matrix<Scalar>& tstar, bool include_diagonal = false) {
  std::vector<Scalar> xs;
  for (Eigen::Index i = 0; i < tstar.rows(); ++i)
    for (Eigen::Index j = 0; j < tstar.cols(); ++j)
      if (include_diagonal || i != j) xs.push_back(tstar(i, j));
  if (xs.empty()) throw InvalidArgument("no entries for threshold statistics");
  Scalar sum{0};
  for (auto x : xs) sum += x;
  Scalar mean = sum / static_cast<Scalar>(xs.size());
  Scalar ss{0};
  for (auto x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / static_cast<Scalar>(xs.size()))};
}

template <typename Scalar>
Scalar threshold(const Matrix<Scalar>& tstar, const ThresholdRule& rule,
                 bool include_diagonal = false) {
  if (tstar.rows() != tstar.cols()) throw ShapeError("influence matrix is not square");
  if (tstar.rows() < 2) throw InvalidArgument("threshold needs at least 2 criteria");
  if (rule.kind == ThresholdRule::Kind::Fixed) {
    if (rule.value < 0) throw InvalidArgument("fixed threshold must be nonnegative");
    return static_cast<Scalar>(rule.value);
  }
  auto st = entry_stats(tstar, include_diagonal);
  return st.mean + static_cast<Scalar>(rule.value) * st.sigma;
}

template <typename Scalar>
struct Edge {
  Eigen::Index source;
  Eigen::Index target;
  Scalar strength;

  friend bool operator==(const Edge&, const Edge&) = default;
};

template <typename Scalar>
struct InfluenceNetwork {
  Eigen::Index node_count = 0;
  Scalar threshold{};
  std::vector<Edge<Scalar>> edges;  // row-major order
  /// Diagonal entries at or above the threshold; only collected, never
  /// turned into edges unless requested.
  std::vector<Edge<Scalar>> self_loops;
};

/// Keeps edge i -> j iff tstar(i, j) >= q.
template <typename Scalar>
InfluenceNetwork<Scalar> extract_network(const Matrix<Scalar>& tstar, Scalar q,
                                         bool include_self_loops = false) {
  InfluenceNetwork<Scalar> net;
  net.node_count = tstar.rows();
  net.threshold = q;
  for (Eigen::Index i = 0; i < tstar.rows(); ++i) {
    for (Eigen::Index j = 0; j < tstar.cols(); ++j) {
      if (!(tstar(i, j) >= q)) continue;
      Edge<Scalar> e{i, j, tstar(i, j)};
      if (i != j) {
        net.edges.push_back(e);
      } else {
        net.self_loops.push_back(e);
        if (include_self_loops) net.edges.push_back(e);
      }
    }
  }
  return net;
}

template <typename Scalar>
struct CausalPoint {
  Eigen::Index criterion;
  Scalar prominence;
  Scalar relation;
  Group group;
};

template <typename Scalar>
std::vector<CausalPoint<Scalar>> causal_diagram(const std::vector<CriterionResult<Scalar>>& results) {
  std::vector<CausalPoint<Scalar>> pts;
  pts.reserve(results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    pts.push_back({static_cast<Eigen::Index>(i), r.prominence, r.relation, r.group});
  }
  return pts;
}

}  // namespace rdematel
