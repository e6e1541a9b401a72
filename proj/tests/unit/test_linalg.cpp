#include <doctest.h>

#include <cmath>

#include "extremal/error.hpp"
#include "extremal/linalg.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using namespace extremal;
using C = std::complex<double>;

TEST_CASE("vector construction validates entries") {
  CHECK_THROWS_AS(Vector(ScalarField::Real, {C(1.0, 0.5)}), InvalidArgument);
  CHECK_THROWS_AS(Vector::real({1.0, NAN}), InvalidArgument);
  CHECK_THROWS_AS(Vector::real({INFINITY}), InvalidArgument);
  CHECK_NOTHROW(Vector::complex({C(1.0, 0.5)}));
  CHECK(Vector::zeros(ScalarField::Real, 3).is_zero());
  CHECK(Vector::unit(ScalarField::Real, 3, 1) == Vector::real({0, 1, 0}));
}

TEST_CASE("arithmetic rejects mixed spaces") {
  CHECK_THROWS_AS(Vector::real({1, 2}) + Vector::real({1, 2, 3}), InvalidArgument);
  CHECK_THROWS_AS(Vector::real({1}) + Vector::complex({C(1, 0)}), InvalidArgument);
  CHECK_THROWS_AS(Vector::real({1}) * C(0, 1), InvalidArgument);
  CHECK_THROWS_AS(inner(Vector::real({1, 2}), Vector::real({1})), InvalidArgument);
}

TEST_CASE("inner product is linear in the first argument, conjugate-linear in the second") {
  gen::Gen g(11);
  for (int t = 0; t < 50; ++t) {
    const auto a = g.vec(ScalarField::Complex, 3);
    const auto b = g.vec(ScalarField::Complex, 3);
    const C lam(g.normal(), g.normal());
    CHECK(std::abs(inner(a * lam, b) - lam * inner(a, b)) < 1e-12 * (1 + std::abs(lam)) * 10);
    CHECK(std::abs(inner(a, b * lam) - std::conj(lam) * inner(a, b)) < 1e-11 * (1 + std::abs(lam)));
    CHECK(std::abs(inner(a, b) - std::conj(inner(b, a))) < 1e-12);
  }
}

TEST_CASE("norm2 and normalize") {
  CHECK(norm2(Vector::real({3, 4})) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(norm2(Vector::complex({C(3, 4)})) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(norm2(Vector::real({3e200, 4e200})) == doctest::Approx(5e200));
  CHECK(norm2(Vector::real({3e-200, 4e-200})) == doctest::Approx(5e-200));
  CHECK_THROWS_AS(normalize(Vector::zeros(ScalarField::Real, 2)), InvalidArgument);
  CHECK(norm2(normalize(Vector::real({1e-300, 0}))) == doctest::Approx(1.0));
}

TEST_CASE("canonicalize fixes the phase of the largest coordinate") {
  CHECK(canonicalize(Vector::real({-1, 0})) == Vector::real({1, 0}));
  const auto c = canonicalize(Vector::complex({C(0, 1), C(0, 0)}));
  CHECK(std::abs(c[0] - C(1, 0)) < 1e-15);
  CHECK(c[0].imag() == 0.0);

  gen::Gen g(12);
  for (int t = 0; t < 100; ++t) {
    const auto v = g.vec(t % 2 ? ScalarField::Complex : ScalarField::Real, 1 + t % 4);
    const auto c1 = canonicalize(v);
    CHECK(canonicalize(c1) == c1);
    // c1 = alpha v with |alpha| = 1
    const C alpha = inner(c1, v) / std::pow(norm2(v), 2);
    CHECK(std::abs(std::abs(alpha) - 1.0) < 1e-12);
    CHECK(norm2(c1 - v * alpha) < 1e-12 * norm2(v));
  }
}

TEST_CASE("lex_less with tolerance") {
  CHECK(lex_less(Vector::real({0, 1}), Vector::real({1, 0})));
  CHECK_FALSE(lex_less(Vector::real({1, 0}), Vector::real({0, 1})));
  CHECK_FALSE(lex_less(Vector::real({1, 0}), Vector::real({1 + 1e-12, 0})));
  CHECK(lex_less(Vector::real({1, 0}), Vector::real({1 + 1e-12, 1})));
}

TEST_CASE("subspace rejects non-orthonormal bases") {
  CHECK_THROWS_AS(Subspace(ScalarField::Real, 2, {Vector::real({1, 0}), Vector::real({1, 1e-6})}),
                  InvalidArgument);
  CHECK_THROWS_AS(Subspace(ScalarField::Real, 2, {Vector::real({2, 0})}), InvalidArgument);
  CHECK(Subspace::whole(ScalarField::Complex, 3).dim() == 3);
}

namespace {

void check_orthonormal(const Subspace& s, double tol) {
  const auto& q = s.basis();
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      CHECK(std::abs(inner(q[i], q[j]) - (i == j ? 1.0 : 0.0)) < tol);
}

}  // namespace

TEST_CASE("gram_schmidt drops dependent vectors") {
  const std::vector<Vector> vs{Vector::real({1, 0, 0}), Vector::real({2, 0, 0}),
                               Vector::real({0, 1, 0})};
  const auto s = gram_schmidt(vs);
  CHECK(s.dim() == 2);
  check_orthonormal(s, 1e-15);
  CHECK_THROWS_AS(gram_schmidt(std::vector<Vector>{Vector::real({1}), Vector::real({1, 0})}),
                  InvalidArgument);
}

TEST_CASE("gram_schmidt property: orthonormal, rank matches elimination, span preserved") {
  gen::Gen g(13);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = g.size(1, 6);
    const std::size_t m = g.size(1, 8);
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < m; ++i) {
      if (i > 0 && g.uniform(0, 1) < 0.3) {
        vs.push_back(vs[i - 1] * 2.5 + vs[0] * -1.0);  // dependent
      } else {
        vs.push_back(g.vec(ScalarField::Real, n));
      }
    }
    const auto s = gram_schmidt(ScalarField::Real, n, vs);
    check_orthonormal(s, 1e-12);
    CHECK(s.dim() == oracle::rank(oracle::as_rows(vs), 1e-9));
    for (const auto& v : vs) CHECK(norm2(v - project(v, s)) <= 1e-10 * std::max(1.0, norm2(v)));
  }
}

TEST_CASE("gram_schmidt stays orthonormal on nearly parallel input") {
  for (double eps : {1e-4, 1e-6, 1e-8}) {
    const std::vector<Vector> vs{Vector::real({1, 0, 0}), Vector::real({1, eps, 0}),
                                 Vector::real({1, eps, eps})};
    const auto s = gram_schmidt(vs);
    CHECK(s.dim() == 3);
    check_orthonormal(s, 1e-12);
  }
  // Hilbert-like columns.
  std::vector<Vector> h;
  for (int i = 0; i < 5; ++i) {
    std::vector<double> r;
    for (int j = 0; j < 5; ++j) r.push_back(1.0 / (i + j + 1));
    h.push_back(Vector::real(r));
  }
  const auto s = gram_schmidt(h);
  CHECK(s.dim() == 5);
  check_orthonormal(s, 1e-12);
}

TEST_CASE("gram_schmidt in C^n") {
  gen::Gen g(14);
  for (int t = 0; t < 50; ++t) {
    std::vector<Vector> vs;
    for (int i = 0; i < 3; ++i) vs.push_back(g.vec(ScalarField::Complex, 4));
    vs.push_back(vs[0] * C(0, 2) + vs[1] * C(1, -1));
    const auto s = gram_schmidt(vs);
    CHECK(s.dim() == 3);
    check_orthonormal(s, 1e-12);
  }
}

TEST_CASE("orthogonal complement and coordinates") {
  gen::Gen g(15);
  for (int t = 0; t < 50; ++t) {
    const auto field = t % 2 ? ScalarField::Complex : ScalarField::Real;
    const std::size_t n = g.size(2, 5);
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < g.size(0, n); ++i) vs.push_back(g.vec(field, n));
    const auto s = gram_schmidt(field, n, vs);
    const auto c = orthogonal_complement(s);
    CHECK(s.dim() + c.dim() == n);
    for (const auto& a : s.basis())
      for (const auto& b : c.basis()) CHECK(std::abs(inner(a, b)) < 1e-12);
    const auto v = g.vec(field, n);
    CHECK(norm2(v - project(v, s) - project(v, c)) < 1e-12 * norm2(v) * 10);
    if (!s.is_trivial()) {
      const auto p = project(v, s);
      const auto coords = coordinates_in(p, s);
      CHECK(norm2(from_coordinates(coords, s) - p) < 1e-12 * (1 + norm2(p)));
    }
  }
}

TEST_CASE("solve_dense") {
  std::vector<double> b{1, 2};
  CHECK(solve_dense({2, 0, 0, 4}, b, 2));
  CHECK(b[0] == doctest::Approx(0.5));
  CHECK(b[1] == doctest::Approx(0.5));
  std::vector<double> c{1, 1};
  CHECK_FALSE(solve_dense({1, 2, 2, 4}, c, 2));
}
