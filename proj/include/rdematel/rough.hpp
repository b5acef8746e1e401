#pragma once

// Rough numbers: interval summaries of a judgment relative to the whole
// group's judgment multiset, plus the interval arithmetic and the
// rough-to-crisp conversion used downstream.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rdematel/errors.hpp"

namespace rdematel {

/// Inclusive judgment scale. The default is the five-level Likert scale
/// (no, low, medium, high, very high influence).
struct Scale {
  int min = 0;
  int max = 4;

  bool contains(int v) const { return v >= min && v <= max; }
  friend bool operator==(const Scale&, const Scale&) = default;
};

/// A single expert's influence score for one ordered criterion pair.
class Judgment {
 public:
  explicit Judgment(int value, Scale scale = {}) : value_(value) {
    if (!scale.contains(value)) {
      throw InvalidArgument("judgment " + std::to_string(value) +
                            " outside scale [" + std::to_string(scale.min) +
                            ", " + std::to_string(scale.max) + "]");
    }
  }

  int value() const { return value_; }
  friend auto operator<=>(const Judgment&, const Judgment&) = default;

 private:
  int value_;
};

/// Non-empty multiset of judgments for one criterion pair, kept sorted.
class JudgmentSet {
 public:
  explicit JudgmentSet(std::vector<int> values, Scale scale = {})
      : values_(std::move(values)) {
    if (values_.empty()) throw InvalidArgument("empty judgment set");
    for (int v : values_) Judgment(v, scale);
    std::sort(values_.begin(), values_.end());
  }

  std::span<const int> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  int min() const { return values_.front(); }
  int max() const { return values_.back(); }
  bool contains(int k) const {
    return std::binary_search(values_.begin(), values_.end(), k);
  }

  friend bool operator==(const JudgmentSet&, const JudgmentSet&) = default;

 private:
  JudgmentSet() = default;
  std::vector<int> values_;
  friend JudgmentSet lower_approximation(const JudgmentSet&, int);
  friend JudgmentSet upper_approximation(const JudgmentSet&, int);
};

/// Closed interval [lower, upper] with lower <= upper.
template <typename Scalar>
class Rough {
 public:
  Rough() = default;
  explicit Rough(Scalar point) : lower_(point), upper_(point) {}
  Rough(Scalar lower, Scalar upper) : lower_(lower), upper_(upper) {
    if (!(lower <= upper)) {
      throw IntervalOrder("rough number with lower > upper");
    }
  }

  Scalar lower() const { return lower_; }
  Scalar upper() const { return upper_; }
  /// Width of the boundary region.
  Scalar width() const { return upper_ - lower_; }
  Scalar midpoint() const { return (lower_ + upper_) / Scalar(2); }
  bool is_point() const { return lower_ == upper_; }

  friend bool operator==(const Rough&, const Rough&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Rough& r) {
    return os << '[' << r.lower_ << ", " << r.upper_ << ']';
  }

 private:
  Scalar lower_{0};
  Scalar upper_{0};
};

using RoughNumber = Rough<double>;

/// Elements <= k, duplicates retained. Throws if k is not in the set.
inline JudgmentSet lower_approximation(const JudgmentSet& set, int k) {
  if (!set.contains(k)) {
    throw InvalidArgument("judgment " + std::to_string(k) +
                          " is not a member of the set");
  }
  JudgmentSet out;
  auto end = std::upper_bound(set.values_.begin(), set.values_.end(), k);
  out.values_.assign(set.values_.begin(), end);
  return out;
}

/// Elements >= k, duplicates retained. Throws if k is not in the set.
inline JudgmentSet upper_approximation(const JudgmentSet& set, int k) {
  if (!set.contains(k)) {
    throw InvalidArgument("judgment " + std::to_string(k) +
                          " is not a member of the set");
  }
  JudgmentSet out;
  auto begin = std::lower_bound(set.values_.begin(), set.values_.end(), k);
  out.values_.assign(begin, set.values_.end());
  return out;
}

namespace detail {
template <typename Scalar>
Scalar mean(std::span<const int> values) {
  Scalar sum = std::accumulate(values.begin(), values.end(), Scalar(0));
  return sum / static_cast<Scalar>(values.size());
}
}  // namespace detail

/// Rough number of judgment k: multiset means of its lower and upper
/// approximations.
template <typename Scalar = double>
Rough<Scalar> rough_bounds(const JudgmentSet& set, int k) {
  auto lo = lower_approximation(set, k);
  auto hi = upper_approximation(set, k);
  return {detail::mean<Scalar>(lo.values()), detail::mean<Scalar>(hi.values())};
}

/// Rough number of every judgment in the set, in sorted order.
template <typename Scalar = double>
std::vector<Rough<Scalar>> rough_sequence(const JudgmentSet& set) {
  std::vector<Rough<Scalar>> seq;
  seq.reserve(set.size());
  for (int k : set.values()) seq.push_back(rough_bounds<Scalar>(set, k));
  return seq;
}

template <typename Scalar>
Rough<Scalar> average_rough(std::span<const Rough<Scalar>> seq) {
  if (seq.empty()) throw InvalidArgument("average of empty rough sequence");
  Scalar lo{0}, hi{0};
  for (const auto& r : seq) {
    lo += r.lower();
    hi += r.upper();
  }
  auto m = static_cast<Scalar>(seq.size());
  return {lo / m, hi / m};
}

template <typename Scalar>
Rough<Scalar> average_rough(const std::vector<Rough<Scalar>>& seq) {
  return average_rough(std::span<const Rough<Scalar>>(seq));
}

// Componentwise arithmetic: lower with lower, upper with upper.

template <typename Scalar>
Rough<Scalar> operator+(const Rough<Scalar>& a, const Rough<Scalar>& b) {
  return {a.lower() + b.lower(), a.upper() + b.upper()};
}

template <typename Scalar>
Rough<Scalar> operator-(const Rough<Scalar>& a, const Rough<Scalar>& b) {
  Scalar lo = a.lower() - b.lower();
  Scalar hi = a.upper() - b.upper();
  if (lo > hi) throw IntervalOrder("rough subtraction yields lower > upper");
  return {lo, hi};
}

template <typename Scalar>
Rough<Scalar> operator*(const Rough<Scalar>& a, const Rough<Scalar>& b) {
  Scalar lo = a.lower() * b.lower();
  Scalar hi = a.upper() * b.upper();
  if (lo > hi) throw IntervalOrder("rough product yields lower > upper");
  return {lo, hi};
}

template <typename Scalar>
Rough<Scalar> operator/(const Rough<Scalar>& a, const Rough<Scalar>& b) {
  if (b.lower() == Scalar(0) || b.upper() == Scalar(0)) {
    throw DivisionByZero("rough division by an interval with a zero bound");
  }
  if ((b.lower() < Scalar(0)) != (b.upper() < Scalar(0))) {
    throw InvalidArgument("rough divisor bounds differ in sign");
  }
  Scalar lo = a.lower() / b.lower();
  Scalar hi = a.upper() / b.upper();
  if (lo > hi) throw IntervalOrder("rough quotient yields lower > upper");
  return {lo, hi};
}

/// Scalar multiple. A negative factor flips the bounds, which violates
/// interval order unless the interval is a point.
template <typename Scalar>
Rough<Scalar> operator*(Scalar mu, const Rough<Scalar>& a) {
  Scalar lo = mu * a.lower();
  Scalar hi = mu * a.upper();
  if (lo > hi) throw IntervalOrder("rough scaling yields lower > upper");
  return {lo, hi};
}

template <typename Scalar>
Rough<Scalar> rough_add(const Rough<Scalar>& a, const Rough<Scalar>& b) { return a + b; }
template <typename Scalar>
Rough<Scalar> rough_sub(const Rough<Scalar>& a, const Rough<Scalar>& b) { return a - b; }
template <typename Scalar>
Rough<Scalar> rough_mul(const Rough<Scalar>& a, const Rough<Scalar>& b) { return a * b; }
template <typename Scalar>
Rough<Scalar> rough_div(const Rough<Scalar>& a, const Rough<Scalar>& b) { return a / b; }
template <typename Scalar>
Rough<Scalar> rough_scale(Scalar mu, const Rough<Scalar>& a) { return mu * a; }

/// Converts a list of rough intervals to crisp values against the list's
/// common envelope [min lower, max upper]: normalize each bound into the
/// envelope, blend them into a single position, and map back.
///
/// When the envelope has zero width every interval is the same point and
/// that point is returned for each entry.
template <typename Scalar>
std::vector<Scalar> crisp_convert(std::span<const Rough<Scalar>> intervals) {
  if (intervals.empty()) throw InvalidArgument("crisp conversion of empty list");
  Scalar lo_min = intervals.front().lower();
  Scalar hi_max = intervals.front().upper();
  for (const auto& r : intervals) {
    lo_min = std::min(lo_min, r.lower());
    hi_max = std::max(hi_max, r.upper());
  }
  const Scalar delta = hi_max - lo_min;

  std::vector<Scalar> out;
  out.reserve(intervals.size());
  if (delta == Scalar(0)) {
    out.assign(intervals.size(), lo_min);
    return out;
  }
  for (const auto& r : intervals) {
    Scalar nl = (r.lower() - lo_min) / delta;
    Scalar nu = (r.upper() - lo_min) / delta;
    Scalar alpha = (nl * (Scalar(1) - nl) + nu * nu) / (Scalar(1) - nl + nu);
    out.push_back(lo_min + alpha * delta);
  }
  return out;
}

template <typename Scalar>
std::vector<Scalar> crisp_convert(const std::vector<Rough<Scalar>>& intervals) {
  return crisp_convert(std::span<const Rough<Scalar>>(intervals));
}

}  // namespace rdematel
