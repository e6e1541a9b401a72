#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "extremal/linalg.hpp"
#include "extremal/norms.hpp"
#include "extremal/random.hpp"

namespace extremal {

enum class SphereMethod { Analytic, Multistart, Grid };
enum class OptMode { Min, Max };

std::string_view to_string(SphereMethod m);
std::string_view to_string(OptMode m);

struct SphereOptResult {
  /// Unit vector in the query subspace, canonicalized (largest-modulus
  /// coordinate real and positive).
  Vector argopt;
  /// evaluate(f, argopt).
  double value = 0.0;
  SphereMethod method = SphereMethod::Analytic;
  std::size_t starts_used = 0;
  bool converged = false;
  /// Real case only: the exhaustive vertex sweep ran, so the minimum is exact
  /// up to rounding.
  bool vertex_certified = false;
  std::uint64_t seed = 0;
};

struct SphereOptOptions {
  std::uint64_t seed = Rng::kDefaultSeed;
  std::size_t random_starts = 64;
  /// Real fields only: projected subgradient iterations per start; step k
  /// has length step0 / k (radians, roughly).
  std::size_t iterations = 500;
  double step0 = 0.5;
  double activity_tol = 1e-7;
  /// Relative value agreement that counts two starts as the same optimum.
  double agreement_tol = 1e-9;
  /// Real subspaces: when the exhaustive vertex sweep of the restricted unit
  /// ball needs at most this many solves, every vertex direction is added
  /// as a start. 0 disables.
  std::uint64_t max_vertex_candidates = 200000;
};

/// Max of f over the unit sphere of s. Exact: the maximum is ||P_s u*|| for
/// the support vector u* with the longest projection (lowest index on ties)
/// and is attained at P_s u* / ||P_s u*||.
/// Throws InvalidArgument when s is trivial or f vanishes on s.
SphereOptResult max_on_sphere(const NormSpec& f, const Subspace& s);

/// Min of f over the unit sphere of s from seeded multiple starts. Real
/// fields use projected subgradient descent with an active-set polish;
/// complex fields use an SQP descent on the squared moduli followed by a
/// KKT polish. Not globally certified in general (see
/// SphereOptResult::vertex_certified).
/// Throws InvalidArgument when s is trivial or f is degenerate on s, and
/// SolverError on non-finite intermediate values.
SphereOptResult min_on_sphere(const NormSpec& f, const Subspace& s,
                              const SphereOptOptions& opts = {});

/// Exhaustive angular grid over the unit sphere of s (real dimension of s at
/// most 4) with `resolution` points in total (up to rounding), followed by a
/// derivative-free local polish. Independent of the analytic and multistart
/// paths; intended as a test oracle.
SphereOptResult grid_oracle(const NormSpec& f, const Subspace& s, OptMode mode,
                            std::size_t resolution);

}  // namespace extremal
