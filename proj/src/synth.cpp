#include "rdematel/synth.hpp"

#include <random>

namespace rdematel {

namespace {

Eigen::MatrixXi random_matrix(int n, Scale scale, std::mt19937_64& rng) {
  // Drawn by hand from raw engine output so the sequence does not depend on
  // the standard library's distribution implementation.
  const auto span = static_cast<std::uint64_t>(scale.max - scale.min + 1);
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) m(i, j) = scale.min + static_cast<int>(rng() % span);
    }
  }
  return m;
}

}  // namespace

StudyBundle synthesize_bundle(const SynthOptions& opts) {
  if (opts.criteria < 1) throw InvalidArgument("synthetic study needs at least 1 criterion");
  if (opts.experts < 1) throw InvalidArgument("synthetic study needs at least 1 expert");

  StudyBundle b;
  b.scale = opts.scale;
  for (int i = 0; i < opts.criteria; ++i) {
    auto id = "C" + std::to_string(i + 1);
    b.criteria.push_back({id, "Criterion " + std::to_string(i + 1), Category::Custom, ""});
  }
  std::mt19937_64 rng(opts.seed);
  Eigen::MatrixXi shared = random_matrix(opts.criteria, opts.scale, rng);
  for (int k = 0; k < opts.experts; ++k) {
    auto id = "R" + std::to_string(k + 1);
    b.respondents.push_back({id, k % 2 ? Role::Academic : Role::Practitioner, "synthetic"});
    ExpertMatrix m;
    m.expert_id = id;
    m.criteria = b.criterion_ids();
    m.judgments = opts.unanimous ? shared : random_matrix(opts.criteria, opts.scale, rng);
    b.matrices.push_back(std::move(m));
  }
  return b;
}

}  // namespace rdematel
