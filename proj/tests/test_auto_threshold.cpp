#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "wfr/auto_threshold.hpp"
#include "wfr/datasets.hpp"
#include "wfr/evaluation.hpp"

using namespace wfr;

TEST_CASE("separation score examples") {
  const Dataset pair(2, 1, {0, 3});
  const auto pn = knn_brute(pair, 1);
  CHECK(separation_score(pn, Labels{0, 0}, 1e-8) == 1.0);
  CHECK(separation_score(pn, Labels{0, 1}, 1e-8) == 0.0);

  const Dataset line(3, 1, {0, 1, 5});
  // 1 - (1/(4+eps)) / (2/(1+eps) + 1/(4+eps)), eps = 1e-8; 8/9 as eps -> 0.
  CHECK(separation_score(knn_brute(line, 1), Labels{0, 0, 1}, 1e-8) ==
        doctest::Approx(0.8888888881481481).epsilon(1e-12));
  // Outliers count as their own label.
  CHECK(separation_score(pn, Labels{kOutlier, 0}, 1e-8) == 0.0);
  CHECK_THROWS_AS(separation_score(pn, Labels{0}, 1e-8), InvalidArgument);
}

TEST_CASE("size score examples") {
  CHECK(size_score(Labels(10, 0), 0.05, 2.0) == 1.0);
  Labels halves(10, 0);
  std::fill(halves.begin() + 5, halves.end(), 1);
  CHECK(size_score(halves, 0.05, 2.0) == 1.0);

  Labels skewed(100, 0);
  skewed[99] = 1;
  // ((1 + 0.2) / 2) * exp(-2 * 0.2401)
  CHECK(size_score(skewed, 0.05, 2.0) == doctest::Approx(0.3711957885015735).epsilon(1e-12));

  CHECK_THROWS_AS(size_score(Labels(4, kOutlier), 0.05, 2.0), InvalidArgument);
}

TEST_CASE("size score uses the total count including outliers") {
  // Two clusters of 4 and 4 outliers: f = (0.4, 0.4)
  Labels labels{0, 0, 0, 0, 1, 1, 1, 1, -1, -1};
  CHECK(size_score(labels, 0.5, 2.0) == doctest::Approx(0.8));
}

TEST_CASE("scores agree with brute-force oracles and stay in [0,1]") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 3 + rng() % 60;
    const std::size_t k = 1 + rng() % std::min<std::size_t>(n - 1, 8);
    const Dataset data = testing::random_dataset(rng, n, 2, t % 3 == 0);
    Labels labels = testing::random_labels(rng, n, 4, t % 2 == 0);
    labels[0] = 0;
    const double s1 = separation_score(knn_brute(data, k), labels, 1e-8);
    CHECK(std::abs(s1 - testing::brute_separation_score(data, k, labels, 1e-8)) <= 1e-10);
    CHECK(s1 >= 0.0);
    CHECK(s1 <= 1.0);
    const double s2 = size_score(labels, 0.05, 2.0);
    CHECK(std::abs(s2 - testing::brute_size_score(labels, 0.05, 2.0)) <= 1e-10);
    CHECK(s2 >= 0.0);
    CHECK(s2 <= 1.0);
  }
}

TEST_CASE("threshold grid") {
  const auto grid = threshold_grid(0.01);
  CHECK(grid.size() == 101);
  CHECK(grid.front() == 1.0);
  CHECK(grid.back() == 0.0);
  CHECK(grid[31] == 0.69);
  CHECK(std::adjacent_find(grid.begin(), grid.end(), std::less_equal<>()) == grid.end());

  CHECK(threshold_grid(0.03).size() == 34);
  CHECK(threshold_grid(0.25).size() == 5);
  CHECK_THROWS_AS(threshold_grid(0.0), InvalidArgument);
  CHECK_THROWS_AS(threshold_grid(1.0), InvalidArgument);
}

TEST_CASE("best candidate is order independent and prefers larger tau on ties") {
  ThresholdDiagnostics diag{
      {0.9, 5, 0.5, 0.5, 1.0}, {0.7, 3, 0.9, 0.8, 1.7}, {0.6, 2, 0.9, 0.8, 1.7}, {0.2, 1, 1.0, 1.0, 2.0}};
  CHECK(best_candidate(diag).tau == 0.7);
  CHECK(best_candidate(diag, true).tau == 0.2);

  std::mt19937_64 rng(59);
  for (int t = 0; t < 20; ++t) {
    std::shuffle(diag.begin(), diag.end(), rng);
    CHECK(best_candidate(diag).tau == 0.7);
    CHECK(best_candidate(diag, true).tau == 0.2);
  }

  const ThresholdDiagnostics single{{1.0, 1, 1.0, 1.0, 2.0}, {0.5, 1, 1.0, 1.0, 2.0}};
  CHECK(best_candidate(single).tau == 1.0);
}

TEST_CASE("degenerate scores select tau = 1") {
  const Dataset same(4, 2, {1, 1, 1, 1, 1, 1, 1, 1});
  const auto nbrs = knn_brute(same, 2);
  const auto r = build_resemblance_matrix(same, nbrs, {});
  const auto sel = select_threshold(r, nbrs, 0.01, {}, {});
  CHECK(sel.tau == 1.0);
  CHECK(sel.diagnostics.size() == 101);
  for (const auto& c : sel.diagnostics) CHECK(c.total == sel.diagnostics.front().total);
}

TEST_CASE("two well separated blobs select exactly two clusters") {
  GeneratorSpec spec;
  spec.family = Family::gaussian_blobs;
  spec.n = 200;
  spec.seed = 7;
  spec.blobs = {{{0.0, 0.0}, {1.0, 0.0, 0.0, 1.0}}, {{20.0, 0.0}, {1.0, 0.0, 0.0, 1.0}}};
  const auto gen = generate(spec);
  const auto nbrs = knn_kdtree(gen.points, 10);
  const auto r = build_resemblance_matrix(gen.points, nbrs, {});
  const auto sel = select_threshold(r, nbrs, 0.01, {}, {});

  CHECK(sel.diagnostics.size() == 101);
  for (std::size_t i = 0; i < sel.diagnostics.size(); ++i) {
    const auto& c = sel.diagnostics[i];
    CHECK(c.s1 >= 0.0);
    CHECK(c.s1 <= 1.0);
    CHECK(c.s2 >= 0.0);
    CHECK(c.s2 <= 1.0);
    CHECK(c.total == c.s1 + c.s2);
    if (i > 0) CHECK(c.tau < sel.diagnostics[i - 1].tau);
  }
  const Labels labels = search_families(r, sel.tau, {});
  CHECK(summarize(labels).num_clusters == 2);
  CHECK(adjusted_rand_index(labels, gen.truth) == 1.0);
}

TEST_CASE("single-cluster guard") {
  // Three tight groups on a line, linked by the kNN pattern: the one-cluster
  // labeling has the top raw score, but the guard keeps a split when one exists.
  const Dataset data(9, 1, {0, 0.1, 0.2, 5, 5.1, 5.2, 10, 10.1, 10.2});
  const auto nbrs = knn_brute(data, 3);
  const auto r = build_resemblance_matrix(data, nbrs, {});
  const auto guarded = select_threshold(r, nbrs, 0.01, {}, {});
  const auto literal = select_threshold(r, nbrs, 0.01, {}, {0.05, 2.0, 1e-8, true});
  CHECK(summarize(search_families(r, literal.tau, {})).num_clusters == 1);
  const auto labels = search_families(r, guarded.tau, {});
  CHECK(labels == Labels{0, 0, 0, 1, 1, 1, 2, 2, 2});
}

TEST_CASE("diagnostics CSV") {
  std::ostringstream out;
  write_diagnostics_csv(out, {{0.69, 2, 0.5, 0.25, 0.75}});
  CHECK(out.str() == "tau,num_clusters,s1,s2,total\n0.69,2,0.5,0.25,0.75\n");
}
