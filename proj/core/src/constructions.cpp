#include "extremal/constructions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "extremal/error.hpp"
#include "extremal/verify.hpp"

namespace extremal {

namespace {

ExtremalBasis standard_basis(const NormSpec& f, BasisKind kind) {
  ExtremalBasis b;
  b.kind = kind;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    b.vectors.push_back(Vector::unit(ScalarField::Real, f.dim(), i));
    b.values.push_back(evaluate(f, b.vectors.back()));
  }
  return b;
}

Vector real_vector(const std::vector<double>& x) { return Vector::real(std::span<const double>(x)); }

}  // namespace

ConstructionOutput build_min_construction(std::size_t n, double s) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (!(s >= kMinFamilySmallestS && s < 1.0)) {
    throw InvalidArgument("s must lie in [1e-4, 1)");
  }
  const double near = 1.0 / (s * (2.0 * s + 1.0));
  const double far = 1.0 / (s * s * (2.0 * s + 1.0));

  std::vector<std::vector<double>> level{std::vector<double>(n, 0.0)};
  level[0][n - 1] = 1.0;
  std::vector<double> v(n, 0.0);
  v[n - 1] = 1.0;

  for (std::size_t i = n - 1; i >= 1; --i) {
    const std::size_t e = i - 1;
    std::vector<std::vector<double>> plus, minus;
    for (const auto& u : level) {
      double d = 0.0;
      for (std::size_t k = 0; k < n; ++k) d += v[k] * u[k];
      (d >= 0.0 ? plus : minus).push_back(u);
    }
    const auto shifted = [&](const std::vector<double>& u, double factor) {
      std::vector<double> w(n);
      for (std::size_t k = 0; k < n; ++k) w[k] = factor * u[k];
      w[e] += 1.0;
      return w;
    };
    std::vector<std::vector<double>> next;
    for (const auto& u : plus) next.push_back(shifted(u, near));
    for (const auto& u : plus) next.push_back(shifted(u, -far));
    for (const auto& u : minus) next.push_back(shifted(u, -near));
    for (const auto& u : minus) next.push_back(shifted(u, far));
    level = std::move(next);

    for (double& x : v) x *= 2.0 * s * s;
    v[e] += 1.0;
  }

  std::vector<Vector> support;
  for (const auto& u : level) support.push_back(real_vector(u));
  NormSpec f(ScalarField::Real, n, std::move(support));
  ExtremalBasis b = standard_basis(f, BasisKind::Minimal);
  return {std::move(f), std::move(b), real_vector(v), std::nullopt, MinFamilyParams{n, s}};
}

double predicted_max_ratio(std::size_t n, double c, double alpha) {
  const double sh = std::sin(alpha / 2.0);
  const double x = 2.0 * c * sh * sh;
  double sum = 0.0;
  double term = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += term;
    term *= x;
  }
  return sum;
}

double min_family_ratio_n2(double s) { return (2.0 * s + 3.0) / (4.0 * s + 1.0); }

ConstructionOutput build_max_construction(std::size_t n, double c, double alpha) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (!(c > 0.0 && c < 1.0)) throw InvalidArgument("c must lie in (0, 1)");
  if (!(alpha > 0.0 && alpha <= std::numbers::pi - kMaxFamilyAlphaGuard)) {
    throw InvalidArgument("alpha must lie in (0, pi - 1e-6]");
  }
  const double sa = std::sin(alpha);
  const double ca = std::cos(alpha);

  std::vector<Vector> support;
  for (std::size_t k = 0; k < n; ++k) {
    // u'_{k+1} for 0-based k, scaled by c^k.
    std::vector<double> u(n, 0.0);
    for (std::size_t j = 0; j < k; ++j) u[j] = std::pow(sa, static_cast<double>(j)) * ca;
    u[k] = std::pow(sa, static_cast<double>(k));
    const double scale = std::pow(c, static_cast<double>(k));
    for (double& x : u) x *= scale;
    support.push_back(real_vector(u));
  }
  std::vector<double> w(n);
  const double t = std::tan(alpha / 2.0);
  for (std::size_t i = 0; i < n; ++i) w[i] = std::pow(t, static_cast<double>(i));

  NormSpec f(ScalarField::Real, n, std::move(support));
  ExtremalBasis b = standard_basis(f, BasisKind::Maximal);
  return {std::move(f), std::move(b), real_vector(w), predicted_max_ratio(n, c, alpha),
          MaxFamilyParams{n, c, alpha}};
}

ConstructionCheck verify_construction(const ConstructionOutput& out, BasisKind mode,
                                      const SphereOptOptions& opts) {
  if (mode == BasisKind::External) throw InvalidArgument("mode must be minimal or maximal");
  ConstructionCheck rep;
  const std::size_t n = out.norm.dim();
  rep.bound = theorem_bound(n);
  rep.predicted_ratio = out.predicted_ratio;
  const auto fail = [&](std::string why) {
    rep.ok = false;
    rep.failures.push_back(std::move(why));
  };

  try {
    rep.recomputed = mode == BasisKind::Minimal ? minimal_basis(out.norm, opts)
                                                : maximal_basis(out.norm);
    rep.basis_equivalent = are_equivalent(rep.recomputed, out.expected_basis).equivalent;
    if (!rep.basis_equivalent) fail("recomputed basis is not equivalent to the expected one");
  } catch (const SolverError& e) {
    fail(std::string("basis computation failed: ") + e.what());
  }

  rep.measured_ratio = witness_ratio(out.norm, out.expected_basis, out.witness).ratio;
  if (out.predicted_ratio && mode == BasisKind::Maximal &&
      rep.measured_ratio < *out.predicted_ratio - 1e-9) {
    fail("measured ratio falls below the predicted value");
  }
  if (rep.measured_ratio > rep.bound + 1e-6) fail("measured ratio exceeds 2^n - 1");
  return rep;
}

}  // namespace extremal
