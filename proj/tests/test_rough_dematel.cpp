#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "rdematel/crisp.hpp"
#include "rdematel/reference.hpp"
#include "rdematel/rough_dematel.hpp"

using namespace rdematel;

namespace {

std::vector<std::string> ids_for(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("C" + std::to_string(i + 1));
  return ids;
}

ExpertMatrix expert(std::string id, const Eigen::MatrixXi& j) {
  return {std::move(id), ids_for(static_cast<int>(j.rows())), j};
}

Eigen::MatrixXi random_judgments(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> v(0, 4);
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m(i, j) = v(rng);
  if (m.sum() == 0) m(0, 1) = 1;
  return m;
}

Eigen::MatrixXi invertible_judgments(int n, std::mt19937& rng) {
  for (;;) {
    auto j = random_judgments(n, rng);
    try {
      crisp_dematel(Matrix<double>(j.cast<double>()));
      return j;
    } catch (const SingularMatrix&) {
    }
  }
}

std::vector<ExpertMatrix> random_panel(int n, int m, std::mt19937& rng) {
  std::vector<ExpertMatrix> out;
  for (int k = 0; k < m; ++k) out.push_back(expert("E" + std::to_string(k), random_judgments(n, rng)));
  return out;
}

double max_abs(const Matrix<double>& a) { return a.cwiseAbs().maxCoeff(); }

bool ordered(const RoughMatrix<double>& r) { return (r.lower().array() <= r.upper().array()).all(); }

}  // namespace

TEST_CASE("collecting judgments per cell") {
  Eigen::MatrixXi a(2, 2), b(2, 2);
  a << 0, 2, 3, 0;
  b << 0, 4, 3, 0;
  std::vector<ExpertMatrix> panel{expert("a", a), expert("b", b)};
  auto g = collect_group(panel);
  CHECK(g.size() == 2);
  CHECK(g.expert_count() == 2);
  CHECK(std::vector<int>(g.cell(0, 1).values().begin(), g.cell(0, 1).values().end()) ==
        std::vector<int>{2, 4});
  CHECK(g.cell(1, 0).size() == 2);

  auto r = rough_group_matrix(g);
  CHECK(r(0, 1) == RoughNumber(2.5, 3.5));
  CHECK(r(1, 0) == RoughNumber(3.0, 3.0));
  CHECK(r(0, 0) == RoughNumber(0.0, 0.0));

  std::vector<ExpertMatrix> one{expert("a", a)};
  CHECK_THROWS_AS(collect_group(one), InsufficientExperts);
  CHECK_THROWS_AS(collect_group(std::vector<ExpertMatrix>{}), InsufficientExperts);

  Eigen::MatrixXi c = Eigen::MatrixXi::Zero(3, 3);
  std::vector<ExpertMatrix> shapes{expert("a", a), expert("c", c)};
  CHECK_THROWS_AS(collect_group(shapes), ShapeError);

  auto renamed = expert("b", b);
  renamed.criteria = {"C2", "C1"};
  std::vector<ExpertMatrix> order{expert("a", a), renamed};
  CHECK_THROWS_AS(collect_group(order), ShapeError);

  Eigen::MatrixXi diag = a;
  diag(1, 1) = 1;
  std::vector<ExpertMatrix> bad_diag{expert("a", a), expert("d", diag)};
  CHECK_THROWS_AS(collect_group(bad_diag), InvalidArgument);
}

TEST_CASE("a panel of 21 experts") {
  std::mt19937 rng(21);
  auto panel = random_panel(7, 21, rng);
  auto g = collect_group(panel);
  CHECK(g.expert_count() == 21);
  CHECK(g.cell(2, 5).size() == 21);
  CHECK(g.cell(3, 3).size() == 1);
}

TEST_CASE("normalizing factor of the published group matrix") {
  const auto& ref = paper_reference();
  CHECK(rough_tau(ref.group, TauStrategy::MaxTotalSum) == doctest::Approx(28.2619).epsilon(1e-6));
  CHECK(rough_tau(ref.group, TauStrategy::MaxUpperSum) == doctest::Approx(18.9857).epsilon(1e-6));
  CHECK_THROWS_AS(rough_tau(RoughMatrix<double>::zero(3), TauStrategy::MaxTotalSum), DegenerateInput);
}

TEST_CASE("normalized group matrix matches the printed one") {
  const auto& ref = paper_reference();
  auto rn = normalize_rough(ref.group, TauStrategy::MaxTotalSum);
  CHECK(rn(0, 1).lower() == doctest::Approx(0.0643).epsilon(1e-3));
  CHECK(rn(0, 1).upper() == doctest::Approx(0.1153).epsilon(1e-3));
  CHECK(rn(1, 0).lower() == doctest::Approx(0.0638).epsilon(1e-3));
  CHECK(max_abs(rn.lower() - ref.normalized.lower()) < 5e-5);
  CHECK(max_abs(rn.upper() - ref.normalized.upper()) < 5e-5);

  auto upper_only = normalize_rough(ref.group, TauStrategy::MaxUpperSum);
  CHECK(upper_only(0, 1).lower() == doctest::Approx(0.0958).epsilon(1e-3));
  CHECK(upper_only(0, 1).upper() == doctest::Approx(0.1717).epsilon(1e-3));
}

TEST_CASE("total relation of the printed normalized matrix") {
  const auto& ref = paper_reference();
  auto t = rough_total_relation(ref.normalized);
  CHECK(t(0, 1).lower() == doctest::Approx(0.0870).epsilon(1e-3));
  CHECK(max_abs(t.lower() - ref.total_lower) < 2e-4);
  CHECK(ordered(t));
}

TEST_CASE("interval sums of the printed total matrix") {
  const auto& ref = paper_reference();
  Vector<double> col = ref.total_lower.colwise().sum().transpose();
  Vector<double> row = ref.total_lower.rowwise().sum();
  // The printed x column carries the column sums and y the row sums.
  for (Eigen::Index i = 0; i < 6; ++i) {
    const auto k = static_cast<std::size_t>(i);
    CHECK(col[i] == doctest::Approx(ref.sums_x[k]->lower()).epsilon(2e-3));
    CHECK(row[i] == doctest::Approx(ref.sums_y[k]->lower()).epsilon(2e-3));
  }
}

TEST_CASE("prominence, relation and weights from the printed crisp scores") {
  const auto& ref = paper_reference();
  auto pr = prominence_relation<double>(ref.crisp_x, ref.crisp_y);
  for (Eigen::Index i = 0; i < 7; ++i) {
    CHECK(pr.prominence[i] == doctest::Approx(ref.prominence[i]).epsilon(1e-3));
    CHECK(std::abs(pr.relation[i] - ref.relation[i]) < 1e-3);
  }
  auto w = weights(pr);
  CHECK(w.importance[0] == doctest::Approx(7.04725).epsilon(1e-5));
  CHECK(w.weight[0] == doctest::Approx(0.15467).epsilon(1e-3));
  CHECK(w.weight.sum() == doctest::Approx(1.0));
  CHECK(w.rank == ref.rank);
  CHECK_FALSE(w.has_ties);
}

TEST_CASE("cause and effect groups") {
  const auto& ref = paper_reference();
  auto pr = prominence_relation<double>(ref.crisp_x, ref.crisp_y);
  auto groups = classify(pr.relation);
  const std::vector<Group> expected{Group::Cause,  Group::Cause,  Group::Cause, Group::Effect,
                                    Group::Effect, Group::Effect, Group::Effect};
  CHECK(groups == expected);
  CHECK(classify(0.0) == Group::Neutral);
  CHECK(to_string(Group::Neutral) == "neutral");
}

TEST_CASE("unanimous experts reduce to crisp DEMATEL") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 7;
    auto j = invertible_judgments(n, rng);
    std::vector<ExpertMatrix> panel{expert("a", j), expert("b", j), expert("c", j)};
    auto a = analyze_experts(panel, {TauStrategy::MaxUpperSum, CrispEnvelope::Separate});
    auto c = crisp_dematel(Matrix<double>(j.cast<double>()));

    CHECK(a.group.lower() == a.group.upper());
    CHECK(max_abs(a.total.lower() - c.total) < 1e-12);
    CHECK(max_abs(a.total.upper() - c.total) < 1e-12);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& r = a.criteria[static_cast<std::size_t>(i)];
      CHECK(r.given == doctest::Approx(c.scores.given[i]).epsilon(1e-10));
      CHECK(r.received == doctest::Approx(c.scores.received[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("pipeline properties on random panels") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + trial % 6;
    const int m = 2 + trial % 5;
    auto panel = random_panel(n, m, rng);
    auto a = analyze_experts(panel);

    CHECK(ordered(a.group));
    CHECK(ordered(a.normalized));
    CHECK(ordered(a.total));
    for (const auto& s : a.scores.row_sums) CHECK(s.lower() <= s.upper());
    for (const auto& s : a.scores.col_sums) CHECK(s.lower() <= s.upper());
    double wsum = 0;
    for (const auto& r : a.criteria) wsum += r.weight;
    CHECK(wsum == doctest::Approx(1.0));

    // expert order does not matter at all
    auto shuffled = panel;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto b = analyze_experts(shuffled);
    CHECK(b.total == a.total);
    for (std::size_t i = 0; i < a.criteria.size(); ++i) {
      CHECK(b.criteria[i].importance == a.criteria[i].importance);
      CHECK(b.criteria[i].rank == a.criteria[i].rank);
    }

    // duplicating every expert leaves the group matrix unchanged
    auto doubled = panel;
    doubled.insert(doubled.end(), panel.begin(), panel.end());
    auto d = analyze_experts(doubled);
    CHECK(max_abs(d.group.lower() - a.group.lower()) < 1e-12);
    CHECK(max_abs(d.group.upper() - a.group.upper()) < 1e-12);

    // relabeling criteria permutes every output the same way
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    auto permuted = panel;
    for (auto& e : permuted) {
      Eigen::MatrixXi j(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) j(r, c) = e.judgments(p[r], p[c]);
      e.judgments = j;
    }
    auto pa = analyze_experts(permuted);
    for (int i = 0; i < n; ++i) {
      const auto& x = pa.criteria[static_cast<std::size_t>(i)];
      const auto& y = a.criteria[static_cast<std::size_t>(p[i])];
      CHECK(x.importance == doctest::Approx(y.importance).epsilon(1e-12));
      CHECK(x.relation == doctest::Approx(y.relation).epsilon(1e-9));
    }
  }
}

TEST_CASE("equal importance is flagged") {
  Eigen::MatrixXi j = Eigen::MatrixXi::Constant(4, 4, 2);
  j.diagonal().setZero();
  std::vector<ExpertMatrix> panel{expert("a", j), expert("b", j)};
  auto a = analyze_experts(panel);
  CHECK(a.rank_ties);
  std::vector<int> ranks;
  for (const auto& r : a.criteria) ranks.push_back(r.rank);
  CHECK(ranks == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("degenerate inputs") {
  Eigen::MatrixXi zero = Eigen::MatrixXi::Zero(3, 3);
  std::vector<ExpertMatrix> silent{expert("a", zero), expert("b", zero)};
  CHECK_THROWS_AS(analyze_experts(silent), DegenerateInput);

  CHECK_THROWS_AS(analyze_rough(RoughMatrix<double>::zero(1)), InvalidArgument);
  CHECK(parse_tau_strategy("max-upper-sum") == TauStrategy::MaxUpperSum);
  CHECK_THROWS_AS(parse_tau_strategy("max"), InvalidArgument);
}
