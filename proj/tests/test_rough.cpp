#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rdematel/rough.hpp"

using namespace rdematel;

namespace {

constexpr double kExact = 1e-9;

// Brute-force oracle: scan the unsorted multiset directly.
std::pair<double, double> brute_bounds(const std::vector<int>& xs, int k) {
  double lo_sum = 0, hi_sum = 0;
  int lo_n = 0, hi_n = 0;
  for (int x : xs) {
    if (x <= k) {
      lo_sum += x;
      ++lo_n;
    }
    if (x >= k) {
      hi_sum += x;
      ++hi_n;
    }
  }
  return {lo_sum / lo_n, hi_sum / hi_n};
}

std::vector<int> values_of(const JudgmentSet& s) { return {s.values().begin(), s.values().end()}; }

}  // namespace

TEST_CASE("judgment scale") {
  CHECK(Judgment(0).value() == 0);
  CHECK(Judgment(4).value() == 4);
  CHECK_THROWS_AS(Judgment(5), InvalidArgument);
  CHECK_THROWS_AS(Judgment(-1), InvalidArgument);
  CHECK(Judgment(9, Scale{1, 9}).value() == 9);
  CHECK_THROWS_AS(JudgmentSet(std::vector<int>{}), InvalidArgument);
  CHECK_THROWS_AS(JudgmentSet({1, 7}), InvalidArgument);
}

TEST_CASE("lower approximation") {
  CHECK(values_of(lower_approximation(JudgmentSet({0, 1, 1, 3}), 1)) == std::vector<int>{0, 1, 1});
  CHECK(values_of(lower_approximation(JudgmentSet({2, 2, 2}), 2)) == std::vector<int>{2, 2, 2});
  CHECK(values_of(lower_approximation(JudgmentSet({0, 4}), 0)) == std::vector<int>{0});
  CHECK_THROWS_AS(lower_approximation(JudgmentSet({0, 4}), 2), InvalidArgument);
}

TEST_CASE("upper approximation") {
  CHECK(values_of(upper_approximation(JudgmentSet({0, 1, 1, 3}), 1)) == std::vector<int>{1, 1, 3});
  CHECK(values_of(upper_approximation(JudgmentSet({2, 2, 2}), 2)) == std::vector<int>{2, 2, 2});
  CHECK(values_of(upper_approximation(JudgmentSet({0, 4}), 4)) == std::vector<int>{4});
  CHECK_THROWS_AS(upper_approximation(JudgmentSet({0, 4}), 3), InvalidArgument);
}

TEST_CASE("rough bounds") {
  JudgmentSet s({3, 1, 0, 1});
  auto r1 = rough_bounds(s, 1);
  CHECK(r1.lower() == doctest::Approx(2.0 / 3).epsilon(kExact));
  CHECK(r1.upper() == doctest::Approx(5.0 / 3).epsilon(kExact));
  auto r3 = rough_bounds(s, 3);
  CHECK(r3.lower() == doctest::Approx(1.25));
  CHECK(r3.upper() == doctest::Approx(3.0));
  auto unanimous = rough_bounds(JudgmentSet({2, 2, 2, 2}), 2);
  CHECK(unanimous.lower() == 2.0);
  CHECK(unanimous.upper() == 2.0);
  CHECK_THROWS_AS(rough_bounds(s, 2), InvalidArgument);
}

TEST_CASE("rough bounds match the enumeration oracle on random multisets") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> len(1, 12), val(0, 4);
    std::vector<int> xs(static_cast<std::size_t>(len(rng)));
    for (auto& x : xs) x = val(rng);
    JudgmentSet set(xs);
    for (int k : xs) {
      auto r = rough_bounds(set, k);
      auto [lo, hi] = brute_bounds(xs, k);
      REQUIRE(r.lower() == lo);
      REQUIRE(r.upper() == hi);
      CHECK(r.lower() <= k);
      CHECK(k <= r.upper());
      CHECK(set.min() <= r.lower());
      CHECK(r.upper() <= set.max());
    }
    // endpoint laws
    CHECK(rough_bounds(set, set.min()).lower() == set.min());
    CHECK(rough_bounds(set, set.max()).upper() == set.max());
    // monotone in k
    auto seq = rough_sequence(set);
    for (std::size_t i = 1; i < seq.size(); ++i) {
      CHECK(seq[i - 1].lower() <= seq[i].lower());
      CHECK(seq[i - 1].upper() <= seq[i].upper());
    }
  }
}

TEST_CASE("average rough") {
  std::vector<RoughNumber> two{{1, 2}, {3, 4}};
  CHECK(average_rough(two) == RoughNumber(2, 3));
  std::vector<RoughNumber> one{RoughNumber(1.5)};
  CHECK(average_rough(one) == RoughNumber(1.5, 1.5));
  std::vector<RoughNumber> printed{{0.6667, 1.6667}, {0.6667, 1.6667}, {1.25, 3.0}, {0.3333, 1.25}};
  auto avg = average_rough(printed);
  CHECK(avg.lower() == doctest::Approx(0.7292).epsilon(1e-4));
  CHECK(avg.upper() == doctest::Approx(1.8959).epsilon(1e-4));
  CHECK_THROWS_AS(average_rough(std::vector<RoughNumber>{}), InvalidArgument);
}

TEST_CASE("interval arithmetic") {
  RoughNumber a(1, 2), b(3, 4);
  CHECK(a + b == RoughNumber(4, 6));
  CHECK(rough_add(a, b) == RoughNumber(4, 6));
  CHECK(2.0 * RoughNumber(1, 3) == RoughNumber(2, 6));
  CHECK(rough_scale(2.0, RoughNumber(1, 3)) == RoughNumber(2, 6));
  CHECK(RoughNumber(2, 6) / RoughNumber(1, 2) == RoughNumber(2, 3));
  CHECK(rough_mul(RoughNumber(1, 2), RoughNumber(2, 3)) == RoughNumber(2, 6));
  CHECK(rough_sub(RoughNumber(3, 5), RoughNumber(1, 2)) == RoughNumber(2, 3));

  CHECK_THROWS_AS(RoughNumber(2, 1), IntervalOrder);
  CHECK_THROWS_AS(RoughNumber(1, 2) - RoughNumber(0, 5), IntervalOrder);
  CHECK_THROWS_AS(RoughNumber(1, 2) / RoughNumber(0, 2), DivisionByZero);
  CHECK_THROWS_AS(RoughNumber(1, 2) / RoughNumber(-1, 1), InvalidArgument);
  CHECK_THROWS_AS(RoughNumber(-3, 1) * RoughNumber(-2, 1), IntervalOrder);
  CHECK_THROWS_AS(-1.0 * RoughNumber(1, 2), IntervalOrder);
  CHECK(RoughNumber(1, 3).width() == 2.0);
}

TEST_CASE("crisp conversion") {
  std::vector<RoughNumber> xs{{0, 1}, {1, 2}};
  auto c = crisp_convert(xs);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == doctest::Approx(1.0 / 3).epsilon(kExact));
  CHECK(c[1] == doctest::Approx(5.0 / 3).epsilon(kExact));

  std::vector<RoughNumber> same{RoughNumber(0.7), RoughNumber(0.7)};
  CHECK(crisp_convert(same) == std::vector<double>{0.7, 0.7});
  CHECK_THROWS_AS(crisp_convert(std::vector<RoughNumber>{}), InvalidArgument);
}

TEST_CASE("crisp conversion of the printed x sums") {
  // Frozen from an independent spreadsheet-style evaluation (numpy) of the
  // normalize / blend / denormalize steps on the seven printed intervals.
  std::vector<RoughNumber> xs{{0.5243, 2.0035}, {0.5092, 1.9446}, {0.4806, 1.9093},
                              {0.4120, 1.8356}, {0.3808, 1.7241}, {0.4599, 1.7803},
                              {0.4284, 1.8735}};
  const double expected[] = {1.29811535, 1.24321083, 1.19626099, 1.09185861,
                             0.98917994, 1.0877753,  1.13154257};
  auto c = crisp_convert(xs);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(c[i] == doctest::Approx(expected[i]).epsilon(1e-7));
}

TEST_CASE("crisp conversion properties") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RoughNumber> xs;
    for (int i = 0; i < 6; ++i) {
      double a = u(rng), b = u(rng);
      xs.emplace_back(std::min(a, b), std::max(a, b));
    }
    auto c = crisp_convert(xs);
    double lo = xs[0].lower(), hi = xs[0].upper();
    for (const auto& x : xs) {
      lo = std::min(lo, x.lower());
      hi = std::max(hi, x.upper());
    }
    for (double v : c) {
      CHECK(v >= lo - 1e-12);
      CHECK(v <= hi + 1e-12);
    }
    // permutation equivariance
    auto rev = xs;
    std::reverse(rev.begin(), rev.end());
    auto crev = crisp_convert(rev);
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(crev[xs.size() - 1 - i] == c[i]);

    // point intervals keep their order and value
    std::vector<RoughNumber> pts;
    for (int i = 0; i < 6; ++i) pts.emplace_back(u(rng));
    auto cp = crisp_convert(pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(cp[i] == doctest::Approx(pts[i].lower()).epsilon(1e-12));
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (pts[i].lower() < pts[j].lower()) CHECK(cp[i] <= cp[j]);
      }
    }
  }
}
