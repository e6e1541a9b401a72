#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "extremal/basis.hpp"
#include "extremal/norms.hpp"
#include "extremal/sphere_opt.hpp"

namespace extremal {

struct MinFamilyParams {
  std::size_t n = 0;
  double s = 0.0;
};

struct MaxFamilyParams {
  std::size_t n = 0;
  double c = 0.0;
  double alpha = 0.0;
};

using FamilyParams = std::variant<MinFamilyParams, MaxFamilyParams>;

/// A real norm together with the extremal basis it is built around and a
/// witness vector whose ratio comes close to 2^n - 1.
struct ConstructionOutput {
  NormSpec norm;
  ExtremalBasis expected_basis;
  Vector witness;
  std::optional<double> predicted_ratio;
  FamilyParams params;
};

inline constexpr double kMinFamilySmallestS = 1e-4;
inline constexpr double kMaxFamilyAlphaGuard = 1e-6;

/// Family whose f-minimal basis is (e_1, ..., e_n). Starting from
/// U_n = {e_n}, level i-1 maps u in U_i (split by the sign of <v_i, u>) to
///   e_{i-1} + u / (s(2s+1)),  e_{i-1} - u / (s^2(2s+1))   if <v_i, u> >= 0
///   e_{i-1} - u / (s(2s+1)),  e_{i-1} + u / (s^2(2s+1))   otherwise,
/// and v_{i-1} = e_{i-1} + 2 s^2 v_i. |U_1| = 2^(n-1). Requires n >= 1 and
/// 1e-4 <= s < 1.
ConstructionOutput build_min_construction(std::size_t n, double s);

/// Family whose f-maximal basis is (e_1, ..., e_n) with values
/// c^(i-1) sin^(i-1) alpha. Requires n >= 1, 0 < c < 1 and
/// 0 < alpha <= pi - 1e-6.
ConstructionOutput build_max_construction(std::size_t n, double c, double alpha);

/// sum_{i=1}^n 2^(i-1) (c sin^2(alpha/2))^(i-1).
double predicted_max_ratio(std::size_t n, double c, double alpha);

/// (2s + 3) / (4s + 1): the n = 2 min-family witness ratio.
double min_family_ratio_n2(double s);

struct ConstructionCheck {
  bool ok = true;
  bool basis_equivalent = false;
  double measured_ratio = 0.0;
  std::optional<double> predicted_ratio;
  double bound = 0.0;
  ExtremalBasis recomputed;
  std::vector<std::string> failures;
};

/// Recomputes the extremal basis of out.norm (minimal or maximal per
/// `mode`), compares it with expected_basis, measures the witness ratio and
/// checks it against the predicted value (max family) and 2^n - 1.
/// Failures are collected, not thrown; a solver failure counts as one.
ConstructionCheck verify_construction(const ConstructionOutput& out, BasisKind mode,
                                      const SphereOptOptions& opts = {});

}  // namespace extremal
