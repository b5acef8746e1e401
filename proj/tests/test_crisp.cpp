#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "rdematel/crisp.hpp"
#include "rdematel/reference.hpp"

using namespace rdematel;

namespace {

double max_abs(const Matrix<double>& a) { return a.cwiseAbs().maxCoeff(); }

Matrix<double> random_direct(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> v(0, 4);
  Matrix<double> z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = i == j ? 0 : v(rng);
  if (z.sum() == 0) z(0, 1) = 1;
  // equal row sums can make I - D singular
  for (Eigen::Index i = 0; i < n; ++i) z(i, (i + 1) % n) += 0.1 * static_cast<double>(i);
  return z;
}

Matrix<double> permute(const Matrix<double>& m, const std::vector<int>& p) {
  Matrix<double> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(p[i], p[j]);
  return out;
}

}  // namespace

TEST_CASE("averaging expert matrices") {
  Matrix<double> a(2, 2), b(2, 2);
  a << 0, 2, 4, 0;
  b << 0, 4, 0, 0;
  std::vector<Matrix<double>> ms{a, b};
  Matrix<double> expected(2, 2);
  expected << 0, 3, 2, 0;
  CHECK(average_expert_matrices(ms) == expected);

  std::vector<Matrix<double>> one{paper_reference().expert1.cast<double>()};
  CHECK(average_expert_matrices(one) == one.front());
  CHECK_THROWS_AS(average_expert_matrices(std::vector<Matrix<double>>{}), InvalidArgument);
  std::vector<Matrix<double>> mismatched{a, Matrix<double>::Zero(3, 3)};
  CHECK_THROWS_AS(average_expert_matrices(mismatched), ShapeError);
}

TEST_CASE("normalization by the largest row sum") {
  Matrix<double> z = paper_reference().expert1.cast<double>();
  Vector<double> rows = z.rowwise().sum();
  CHECK(rows == (Vector<double>(7) << 12, 7, 11, 13, 11, 12, 11).finished());
  CHECK(normalization_factor(z) == doctest::Approx(1.0 / 13));
  CHECK(normalize_crisp(z).rowwise().sum().maxCoeff() == doctest::Approx(1.0));

  Matrix<double> small(2, 2);
  small << 0, 2, 1, 0;
  Matrix<double> expected(2, 2);
  expected << 0, 1, 0.5, 0;
  CHECK(max_abs(normalize_crisp(small) - expected) < 1e-15);

  CHECK_THROWS_AS(normalize_crisp(Matrix<double>::Zero(3, 3)), DegenerateInput);
  Matrix<double> diag = small;
  diag(0, 0) = 1;
  CHECK_THROWS_AS(normalize_crisp(diag), InvalidArgument);
  Matrix<double> neg = small;
  neg(0, 1) = -1;
  CHECK_THROWS_AS(normalize_crisp(neg), InvalidArgument);
}

TEST_CASE("total relation") {
  Matrix<double> d(2, 2);
  d << 0, 1, 0.5, 0;
  Matrix<double> expected(2, 2);
  expected << 1, 2, 1, 1;
  auto t = total_relation_crisp(d);
  CHECK(max_abs(t - expected) < 1e-12);

  auto s = crisp_scores(t);
  CHECK(s.given[0] == doctest::Approx(3));
  CHECK(s.given[1] == doctest::Approx(2));
  CHECK(s.received[0] == doctest::Approx(2));
  CHECK(s.received[1] == doctest::Approx(3));
  CHECK(s.prominence()[0] == doctest::Approx(5));
  CHECK(s.relation()[0] == doctest::Approx(1));

  CHECK(total_relation_crisp(Matrix<double>::Zero(3, 3)) == Matrix<double>::Zero(3, 3));

  Matrix<double> swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK_THROWS_AS(total_relation_crisp(swap), SingularMatrix);
}

TEST_CASE("total relation agrees with the truncated power series") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 7;
    // keep the spectral radius well below 1 so 60 terms converge
    Matrix<double> d = normalize_crisp(random_direct(n, rng)) * 0.6;
    Matrix<double> series = Matrix<double>::Zero(n, n);
    Matrix<double> power = d;
    for (int k = 0; k < 60; ++k) {
      series += power;
      power = power * d;
    }
    CHECK(max_abs(total_relation_crisp(d) - series) < 1e-9);
  }
}

TEST_CASE("crisp pipeline properties") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 8;
    Matrix<double> z = random_direct(n, rng);
    auto a = crisp_dematel(z);

    CHECK(a.scores.given.sum() == doctest::Approx(a.scores.received.sum()).epsilon(1e-12));
    CHECK((a.total.array() >= -1e-15).all());

    auto scaled = crisp_dematel(Matrix<double>(z * 3.5));
    CHECK(max_abs(scaled.total - a.total) < 1e-12);

    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    auto permuted = crisp_dematel(permute(z, p));
    CHECK(max_abs(permuted.total - permute(a.total, p)) < 1e-12);
  }
}
