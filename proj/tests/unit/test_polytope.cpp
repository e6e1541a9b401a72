#include <doctest.h>

#include <cmath>

#include "extremal/error.hpp"
#include "extremal/polytope.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using namespace extremal;

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(64, 4) == 635376);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("square and diamond vertices") {
  const SymmetricPolytope square(2, {1, 0, 0, 1});
  std::vector<std::vector<double>> seen;
  const auto st = square.for_each_vertex(1e-9, [&](std::span<const double> x) {
    seen.emplace_back(x.begin(), x.end());
  });
  CHECK(st.subsets == 1);
  CHECK(st.feasible == 2);
  REQUIRE(seen.size() == 2);
  CHECK(seen[0] == std::vector<double>{1, 1});
  CHECK(seen[1] == std::vector<double>{1, -1});
  CHECK(square.candidate_count() == 2);

  const SymmetricPolytope diamond(2, {1, 1, 1, -1});
  double far = 0;
  diamond.for_each_vertex(1e-9, [&](std::span<const double> x) {
    far = std::max(far, std::hypot(x[0], x[1]));
  });
  CHECK(far == doctest::Approx(1.0));
  CHECK(diamond.gauge(std::vector<double>{0.5, 0.25}) == doctest::Approx(0.75));
}

TEST_CASE("vertex sweep matches Cramer's rule enumeration") {
  gen::Gen g(31);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + t % 2;
    const auto f = g.norm(ScalarField::Real, n);
    const auto ball = SymmetricPolytope::unit_ball(f);
    double lib = 0, ref = 0;
    ball.for_each_vertex(1e-9, [&](std::span<const double> x) {
      double s = 0;
      for (double v : x) s += v * v;
      lib = std::max(lib, std::sqrt(s));
    });
    for (const auto& x : oracle::vertices(oracle::real_rows(f))) {
      double s = 0;
      for (double v : x) s += v * v;
      ref = std::max(ref, std::sqrt(s));
    }
    CHECK(lib == doctest::Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("edge walk maximizes linear functionals exactly") {
  gen::Gen g(32);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 3;
    const auto f = g.norm(ScalarField::Real, n);
    const auto ball = SymmetricPolytope::unit_ball(f);
    std::vector<double> w(n);
    for (double& x : w) x = g.normal();
    const auto res = ball.maximize_linear(w);
    CHECK(ball.gauge(res.x) <= 1.0 + 1e-9);
    double best = -INFINITY;
    ball.for_each_vertex(1e-9, [&](std::span<const double> x) {
      double s = 0;
      for (std::size_t j = 0; j < n; ++j) s += w[j] * x[j];
      best = std::max(best, std::abs(s));
    });
    CHECK(res.value == doctest::Approx(best).epsilon(1e-10));
  }
}

TEST_CASE("edge walk survives degenerate vertices") {
  // Cube with redundant facets through every vertex.
  std::vector<double> rows{1, 0, 0, 0, 1, 0, 0, 0, 1};
  for (double a : {1.0, -1.0})
    for (double b : {1.0, -1.0}) {
      rows.insert(rows.end(), {a / 3, b / 3, 1.0 / 3});
    }
  const SymmetricPolytope p(3, rows);
  for (const auto& w : std::vector<std::vector<double>>{{1, 1, 1}, {1, -2, 0.5}, {0, 0, 1}}) {
    const auto res = p.maximize_linear(w);
    CHECK(res.value == doctest::Approx(std::abs(w[0]) + std::abs(w[1]) + std::abs(w[2])));
  }
}

TEST_CASE("edge walk rejects unbounded polytopes") {
  const SymmetricPolytope slab(2, {1, 0});
  CHECK_THROWS_AS(slab.maximize_linear(std::vector<double>{0, 1}), SolverError);
}

TEST_CASE("vertex_near snaps to the vertex of the active face") {
  const SymmetricPolytope square(2, {1, 0, 0, 1});
  const auto v = square.vertex_near(std::vector<double>{0.999999999, -1.0}, 1e-7, 1e-9);
  REQUIRE(v);
  CHECK((*v)[0] == doctest::Approx(1.0));
  CHECK((*v)[1] == doctest::Approx(-1.0));
}

TEST_CASE("unit_ball needs a real norm") {
  const NormSpec f(ScalarField::Complex, 1, {Vector::complex({{1, 0}})});
  CHECK_THROWS_AS(SymmetricPolytope::unit_ball(f), InvalidArgument);
}
