#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "wfr/csv.hpp"
#include "wfr/datasets.hpp"
#include "wfr/evaluation.hpp"

using namespace wfr;

namespace {

GeneratedData make(Family family, std::size_t n, double noise, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.family = family;
  spec.n = n;
  spec.noise = noise;
  spec.seed = seed;
  return generate(spec);
}

}  // namespace

TEST_CASE("noise-free moons lie on their arcs") {
  const auto g = make(Family::two_moons, 101, 0.0, 1);
  CHECK(g.points.size() == 101);
  CHECK(g.points.dim() == 2);
  const auto s = summarize(g.truth);
  CHECK(s.sizes == std::vector<std::size_t>{51, 50});
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    const double x = g.points[i][0];
    const double y = g.points[i][1];
    if (g.truth[i] == 0) {
      CHECK(std::abs(std::hypot(x, y) - 1.0) < 1e-9);
      CHECK(y >= -1e-12);
    } else {
      CHECK(std::abs(std::hypot(x - 1.0, y - 0.5) - 1.0) < 1e-9);
      CHECK(y <= 0.5 + 1e-12);
    }
  }
}

TEST_CASE("noise-free circles have two radii") {
  const auto g = make(Family::two_circles, 200, 0.0, 1);
  std::vector<double> radius(2, -1.0);
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    const double r = std::hypot(g.points[i][0], g.points[i][1]);
    auto& ref = radius[static_cast<std::size_t>(g.truth[i])];
    if (ref < 0) ref = r;
    CHECK(std::abs(r - ref) < 1e-12);
  }
  CHECK(radius[0] != doctest::Approx(radius[1]));
}

TEST_CASE("noise-free spirals are point-symmetric arms") {
  const auto g = make(Family::two_spirals, 100, 0.0, 1);
  CHECK(summarize(g.truth).sizes == std::vector<std::size_t>{50, 50});
  for (std::size_t i = 0; i < 50; ++i) {
    CHECK(g.points[i][0] == doctest::Approx(-g.points[i + 50][0]));
    CHECK(g.points[i][1] == doctest::Approx(-g.points[i + 50][1]));
  }
}

TEST_CASE("generation is deterministic in the seed") {
  for (auto family : {Family::two_spirals, Family::two_circles, Family::two_moons,
                      Family::gaussian_blobs}) {
    const auto a = make(family, 120, 0.1, 9);
    const auto b = make(family, 120, 0.1, 9);
    CHECK(a.points == b.points);
    CHECK(a.truth == b.truth);
    CHECK_FALSE(make(family, 120, 0.1, 10).points == a.points);
  }
}

TEST_CASE("default blobs have three groups") {
  const auto g = make(Family::gaussian_blobs, 300, 0.0, 42);
  CHECK(summarize(g.truth).sizes == std::vector<std::size_t>{100, 100, 100});
}

TEST_CASE("zero-covariance blobs at one mean coincide") {
  GeneratorSpec spec;
  spec.family = Family::gaussian_blobs;
  spec.n = 10;
  spec.blobs = {{{1.0, 2.0}, {0, 0, 0, 0}}, {{1.0, 2.0}, {0, 0, 0, 0}}};
  const auto g = generate(spec);
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    CHECK(g.points[i][0] == 1.0);
    CHECK(g.points[i][1] == 2.0);
  }
}

TEST_CASE("blob samples follow the requested covariance") {
  GeneratorSpec spec;
  spec.family = Family::gaussian_blobs;
  spec.n = 20000;
  spec.seed = 5;
  spec.blobs = {{{0.0, 0.0}, {2.0, 0.6, 0.6, 0.5}}};
  const auto g = generate(spec);
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    sxx += g.points[i][0] * g.points[i][0];
    sxy += g.points[i][0] * g.points[i][1];
    syy += g.points[i][1] * g.points[i][1];
  }
  const double n = static_cast<double>(g.points.size());
  CHECK(sxx / n == doctest::Approx(2.0).epsilon(0.05));
  CHECK(sxy / n == doctest::Approx(0.6).epsilon(0.08));
  CHECK(syy / n == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("generator argument errors") {
  CHECK_THROWS_AS(make(Family::two_moons, 1, 0.0, 0), InvalidArgument);
  CHECK_THROWS_AS(make(Family::two_moons, 10, -0.1, 0), InvalidArgument);
  GeneratorSpec spec;
  spec.family = Family::gaussian_blobs;
  spec.blobs = {{{0.0, 0.0}, {1.0, 0.5, 0.0, 1.0}}};
  CHECK_THROWS_AS(generate(spec), InvalidArgument);
  spec.blobs = {{{0.0, 0.0}, {1.0, 2.0, 2.0, 1.0}}};
  CHECK_THROWS_AS(generate(spec), InvalidArgument);
  spec.blobs = {{{0.0, 0.0}, {1.0, 0.0, 0.0}}};
  CHECK_THROWS_AS(generate(spec), InvalidArgument);
  CHECK_THROWS_AS(parse_family("spirals"), InvalidArgument);
  CHECK(parse_family("two_spirals") == Family::two_spirals);
}

TEST_CASE("CSV round trip is bitwise exact") {
  std::mt19937_64 rng(67);
  std::normal_distribution<double> normal(0.0, 1e3);
  std::vector<double> values(150);
  for (auto& v : values) v = normal(rng) * std::pow(10.0, static_cast<int>(rng() % 20) - 10);
  const Dataset data(50, 3, values);
  std::stringstream buf;
  write_points_csv(buf, data);
  const auto table = parse_points_csv(buf);
  CHECK(table.points == data);
  CHECK_FALSE(table.labels.has_value());
  CHECK(table.header == std::vector<std::string>{"x0", "x1", "x2"});
}

TEST_CASE("CSV parsing") {
  SUBCASE("headerless") {
    std::istringstream in("1,2\n3,4.5\n");
    const auto t = parse_points_csv(in);
    CHECK(t.points == Dataset(2, 2, {1, 2, 3, 4.5}));
    CHECK(t.header.empty());
  }
  SUBCASE("header with label column") {
    std::istringstream in("x,y,label\n1,2,0\n3,4,-1\n");
    const auto t = parse_points_csv(in);
    CHECK(t.points == Dataset(2, 2, {1, 2, 3, 4}));
    REQUIRE(t.labels.has_value());
    CHECK(*t.labels == Labels{0, -1});
  }
  SUBCASE("ragged row names its line") {
    std::istringstream in("x,y\n1,2\n3\n");
    CHECK_THROWS_WITH_AS(parse_points_csv(in), doctest::Contains("line 3"), InvalidArgument);
  }
  SUBCASE("non-numeric cell names its line") {
    std::istringstream in("1,2\n3,abc\n");
    CHECK_THROWS_WITH_AS(parse_points_csv(in), doctest::Contains("line 2"), InvalidArgument);
  }
  SUBCASE("empty input") {
    std::istringstream in("x,y\n");
    CHECK_THROWS_AS(parse_points_csv(in), InvalidArgument);
  }
  SUBCASE("CRLF and blank trailing line") {
    std::istringstream in("1,2\r\n3,4\r\n\r\n");
    CHECK(parse_points_csv(in).points == Dataset(2, 2, {1, 2, 3, 4}));
  }
}

TEST_CASE("labels CSV") {
  std::stringstream buf;
  write_labels_csv(buf, Labels{0, 1, -1});
  CHECK(buf.str() == "label\n0\n1\n-1\n");
  CHECK(parse_labels_csv(buf) == Labels{0, 1, -1});

  std::istringstream with_points("x0,x1,label\n0.5,1,3\n2,2,4\n");
  CHECK(parse_labels_csv(with_points) == Labels{3, 4});

  std::istringstream bare("2\n7\n");
  CHECK(parse_labels_csv(bare) == Labels{2, 7});

  std::istringstream wide("1,2\n3,4\n");
  CHECK_THROWS_AS(parse_labels_csv(wide), InvalidArgument);
}

TEST_CASE("CSV files") {
  const auto dir = std::filesystem::temp_directory_path() / "wfr_test_datasets";
  std::filesystem::create_directories(dir);
  const auto g = make(Family::two_moons, 40, 0.05, 2);
  write_points_csv(dir / "m.csv", g.points, g.truth);
  const auto t = read_points_csv(dir / "m.csv");
  CHECK(t.points == g.points);
  CHECK(*t.labels == g.truth);
  CHECK(read_labels_csv(dir / "m.csv") == g.truth);
  CHECK_THROWS(read_points_csv(dir / "missing.csv"));
  std::filesystem::remove_all(dir);
}
