#include <doctest.h>

#include <cmath>

#include "extremal/error.hpp"
#include "extremal/norms.hpp"
#include "extremal/random.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using namespace extremal;
using C = std::complex<double>;

namespace {

NormSpec linf2() {
  return NormSpec(ScalarField::Real, 2, {Vector::real({1, 0}), Vector::real({0, 1})});
}

}  // namespace

TEST_CASE("NormSpec validation") {
  CHECK_THROWS_AS(NormSpec(ScalarField::Real, 2, {}), InvalidArgument);
  CHECK_THROWS_AS(NormSpec(ScalarField::Real, 2, {Vector::real({0, 0})}), InvalidArgument);
  CHECK_THROWS_AS(NormSpec(ScalarField::Real, 2, {Vector::real({1, 0, 0})}), InvalidArgument);
  CHECK_THROWS_AS(NormSpec(ScalarField::Real, 1, {Vector::complex({C(1, 0)})}), InvalidArgument);
}

TEST_CASE("evaluate on known norms") {
  const auto f = linf2();
  CHECK(evaluate(f, Vector::real({1, -2})) == 2.0);
  CHECK(evaluate(f, Vector::real({0, 0})) == 0.0);
  CHECK(evaluate(f, Vector::real({1, 1}) * (1 / std::sqrt(2.0))) ==
        doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  const NormSpec g(ScalarField::Complex, 2, {Vector::complex({C(1, 0), C(0, 1)})});
  // <(1, 1), (1, i)> = 1 + conj(i) = 1 - i
  CHECK(evaluate(g, Vector::complex({C(1, 0), C(1, 0)})) == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(evaluate(f, Vector::real({1})), InvalidArgument);
}

TEST_CASE("norm axioms hold on generated norms") {
  gen::Gen g(21);
  for (int t = 0; t < 100; ++t) {
    const auto field = t % 3 == 0 ? ScalarField::Complex : ScalarField::Real;
    const std::size_t n = g.size(1, 4);
    const auto f = g.norm(field, n);
    const auto support = oracle::support_of(f);
    const auto a = g.vec(field, n);
    const auto b = g.vec(field, n);
    const double fa = evaluate(f, a);
    CHECK(fa == doctest::Approx(oracle::norm_value(support, oracle::cvec(a))).epsilon(1e-14));
    CHECK(fa > 0.0);
    CHECK(evaluate(f, a + b) <= fa + evaluate(f, b) + 1e-12 * (1 + fa));
    const C lam = field == ScalarField::Complex ? C(g.normal(), g.normal()) : C(g.normal(), 0);
    CHECK(evaluate(f, a * lam) == doctest::Approx(std::abs(lam) * fa).epsilon(1e-12));
  }
}

TEST_CASE("dual witness takes the lowest index on ties") {
  const NormSpec f(ScalarField::Real, 2,
                   {Vector::real({0, 1}), Vector::real({1, 0}), Vector::real({0, -1})});
  CHECK(dual_witness_index(f, Vector::real({1, 1})) == 0);
  CHECK(dual_witness_index(f, Vector::real({0, -3})) == 0);
  CHECK(dual_witness_index(f, Vector::real({2, 1})) == 1);
  CHECK(dual_witness(f, Vector::real({2, 1})) == Vector::real({1, 0}));
  CHECK_THROWS_AS(dual_witness(f, Vector::real({0, 0})), InvalidArgument);
}

TEST_CASE("is_norm detects seminorms with the right kernel") {
  const NormSpec semi(ScalarField::Real, 3, {Vector::real({1, 0, 0}), Vector::real({2, 0, 0}),
                                             Vector::real({0, 1, 1})});
  const auto check = is_norm(semi);
  CHECK_FALSE(check.is_norm);
  REQUIRE(check.kernel.dim() == 1);
  for (const auto& u : semi.support()) CHECK(std::abs(inner(check.kernel.basis()[0], u)) < 1e-12);
  CHECK_THROWS_AS(require_norm(semi), InvalidArgument);
  CHECK(is_norm(linf2()).is_norm);

  gen::Gen g(22);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = g.size(1, 5);
    const std::size_t m = g.size(1, 2 * n);
    std::vector<Vector> us;
    for (std::size_t i = 0; i < m; ++i) {
      us.push_back(i >= 2 && g.uniform(0, 1) < 0.3 ? us[0] + us[1] * 3.0
                                                    : g.vec(ScalarField::Real, n));
    }
    const NormSpec f(ScalarField::Real, n, us);
    const std::size_t r = oracle::rank(oracle::as_rows(us));
    CHECK(is_norm(f).is_norm == (r == n));
    CHECK(is_norm(f).kernel.dim() == n - r);
  }
}

TEST_CASE("lint_duplicates reports collinear support vectors") {
  const NormSpec f(ScalarField::Real, 2, {Vector::real({1, 0}), Vector::real({0, 1}),
                                          Vector::real({-3, 0})});
  const auto d = lint_duplicates(f);
  REQUIRE(d.size() == 1);
  CHECK(d[0] == std::pair<std::size_t, std::size_t>{0, 2});
  const NormSpec g(ScalarField::Complex, 2, {Vector::complex({C(1, 0), C(1, 1)}),
                                             Vector::complex({C(0, 1), C(-1, 1)})});
  CHECK(lint_duplicates(g).size() == 1);
  CHECK(lint_duplicates(linf2()).empty());
}

TEST_CASE("restriction agrees with the parent on the subspace") {
  gen::Gen g(23);
  for (int t = 0; t < 50; ++t) {
    const auto field = t % 2 ? ScalarField::Complex : ScalarField::Real;
    const std::size_t n = g.size(2, 4);
    const auto f = g.norm(field, n);
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < g.size(1, n - 1); ++i) gens.push_back(g.vec(field, n));
    const auto s = gram_schmidt(field, n, gens);
    const auto r = restrict(f, s);
    const auto coords_norm = r.in_coordinates();
    CHECK(coords_norm.dim() == s.dim());
    for (int k = 0; k < 10; ++k) {
      const auto v = project(g.vec(field, n), s);
      const double fv = evaluate(f, v);
      CHECK(r.evaluate(v) == doctest::Approx(fv).epsilon(1e-12));
      const Vector c(field, coordinates_in(v, s));
      CHECK(evaluate(coords_norm, c) == doctest::Approx(fv).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(restrict(linf2(), Subspace(ScalarField::Real, 2)), InvalidArgument);
  CHECK_THROWS_AS(restrict(linf2(), Subspace::whole(ScalarField::Real, 3)), InvalidArgument);
}

TEST_CASE("quotient of a seminorm is faithful") {
  const NormSpec semi(ScalarField::Real, 3, {Vector::real({1, 1, 0}), Vector::real({1, -1, 0})});
  const auto q = quotient(semi);
  CHECK(q.subspace().dim() == 2);
  gen::Gen g(24);
  for (int t = 0; t < 50; ++t) {
    const auto v = g.vec(ScalarField::Real, 3);
    CHECK(q.evaluate(v) == doctest::Approx(evaluate(semi, v)).epsilon(1e-12));
  }
  CHECK(is_norm(q.in_coordinates()).is_norm);
}

TEST_CASE("library random generator is reproducible and spans") {
  Rng a(5), b(5);
  for (int i = 0; i < 20; ++i) CHECK(a.normal() == b.normal());
  CHECK(Rng::kName == "mt19937_64+box-muller/v1");
  Rng c(0);
  const double u = c.uniform();
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
  Rng r(7);
  for (int t = 0; t < 50; ++t) {
    const auto f = random_norm(r, ScalarField::Real, 3, 3);
    CHECK(is_norm(f).is_norm);
    CHECK(norm2(random_unit(r, ScalarField::Complex, 3)) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(random_norm(r, ScalarField::Real, 3, 2), InvalidArgument);
}
