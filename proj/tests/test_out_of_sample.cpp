#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "wfr/clusterer.hpp"
#include "wfr/datasets.hpp"

using namespace wfr;

namespace {

ModelState line_model() {
  const Dataset train(3, 1, {0, 1, 3});
  FitOptions opts;
  opts.k = 1;
  opts.threshold = 0.5;
  return fit(train, opts).model;
}

FitResult moons_fit() {
  GeneratorSpec spec;
  spec.family = Family::two_moons;
  spec.n = 200;
  spec.noise = 0.05;
  spec.seed = 3;
  FitOptions opts;
  opts.threshold = 0.6;
  return fit(generate(spec).points, opts);
}

}  // namespace

TEST_CASE("point between training neighbors") {
  const auto model = line_model();
  CHECK(model.labels == Labels{0, 0, 1});
  // Raw 0.7115 is above r_max, so the normalized score clips to 1.
  const auto a = predict_detailed(model, std::vector<double>{0.5});
  REQUIRE(a.size() == 1);
  CHECK(a[0].label == 0);
  CHECK(a[0].neighbor == 0);
  CHECK(a[0].score == 1.0);
}

TEST_CASE("duplicate of a training point takes its label") {
  const auto fitted = moons_fit();
  for (std::size_t i = 0; i < fitted.model.training.size(); i += 17) {
    const auto row = fitted.model.training.row(i);
    const auto a = predict_detailed(fitted.model, row);
    CHECK(a[0].score == 1.0);
    CHECK(a[0].label == fitted.labels[i]);
  }
}

TEST_CASE("far away points are outliers") {
  const auto model = line_model();
  const auto a = predict_detailed(model, std::vector<double>{1000.0});
  CHECK(a[0].label == kOutlier);
  CHECK(a[0].score == 0.0);
  CHECK(a[0].neighbor == 2);
}

TEST_CASE("predicting the training set reproduces non-outlier labels") {
  for (auto backend : {KnnBackend::kdtree, KnnBackend::brute}) {
    const auto fitted = moons_fit();
    const auto pred = predict(fitted.model, fitted.model.training, backend);
    for (std::size_t i = 0; i < pred.size(); ++i)
      if (fitted.labels[i] != kOutlier) CHECK(pred[i] == fitted.labels[i]);
  }
}

TEST_CASE("predicted labels come from the training labels") {
  const auto fitted = moons_fit();
  std::set<int> allowed(fitted.labels.begin(), fitted.labels.end());
  allowed.insert(kOutlier);
  std::mt19937_64 rng(61);
  const Dataset test = testing::random_dataset(rng, 300, 2, false);
  const auto first = predict(fitted.model, test);
  for (int l : first) CHECK(allowed.count(l) == 1);
  CHECK(predict(fitted.model, test, KnnBackend::brute) == first);
  CHECK(predict(fitted.model, test) == first);
  for (const auto& a : predict_detailed(fitted.model, test.values())) {
    CHECK(a.score >= 0.0);
    CHECK(a.score <= 1.0);
  }
}

TEST_CASE("training outliers pass their outlier status on") {
  auto model = line_model();
  model.labels = {0, 0, kOutlier};
  CHECK(predict(model, std::vector<double>{3.0}) == Labels{kOutlier});
  CHECK(predict(model, std::vector<double>{0.0}) == Labels{0});
}

TEST_CASE("cosine scores below the training minimum clip to zero") {
  const Dataset train(4, 2, {1, 0, 1, 0.1, 0, 1, 0.1, 1});
  FitOptions opts;
  opts.resemblance.kind = ResemblanceKind::cosine;
  opts.k = 1;
  opts.threshold = 0.5;
  const auto model = fit(train, opts).model;
  const auto a = predict_detailed(model, std::vector<double>{-1.0, -1.0});
  CHECK(a[0].score == 0.0);
  CHECK(a[0].label == kOutlier);
}

TEST_CASE("input validation") {
  const auto model = line_model();
  CHECK(predict(model, std::vector<double>{}).empty());
  CHECK_THROWS_AS(predict(model, Dataset(1, 2, {0, 0})), InvalidArgument);
  CHECK_THROWS_AS(predict(model, std::vector<double>{0.0, std::nan("")}), InvalidArgument);
  auto broken = model;
  broken.labels.pop_back();
  CHECK_THROWS_AS(predict(broken, std::vector<double>{0.0}), InvalidArgument);
}
