#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extremal/basis.hpp"
#include "extremal/linalg.hpp"
#include "extremal/norms.hpp"
#include "extremal/random.hpp"

namespace extremal {

/// Named numeric tolerances shared by the checks. All must be positive.
struct Tolerances {
  /// Slack on ratio <= bound.
  double ratio = 1e-6;
  /// Per-constraint feasibility slack in vertex enumeration.
  double feasibility = 1e-9;
  /// Additive slack of the lower-side check, scaled by max(1, f(v)).
  double lower = 1e-9;
  /// Multiplicative slack of the equivalence bounds.
  double bounds = 1e-9;
  /// Basis equivalence distance.
  double equivalence = 1e-8;
  /// Values at or below this count as zero in the inversion premises.
  double zero = 1e-12;
  /// Relative agreement between sphere minimization starts (see SphereOptOptions).
  double agreement = 1e-9;

  /// Throws InvalidArgument for an unknown name or a non-positive value.
  void set(std::string_view name, double value);
  std::vector<std::pair<std::string, double>> entries() const;
};

/// 2^n - 1.
double theorem_bound(std::size_t n);

/// Sum_i |<v, b_i>| * values[i].
double weighted_l1(const NormSpec& f, const ExtremalBasis& b, const Vector& v);

enum class RatioMethod { VertexEnum, MultistartAscent, WitnessOnly };
std::string_view to_string(RatioMethod m);

struct RatioReport {
  double ratio = 0.0;
  /// Maximizer, scaled so that f(witness) = 1.
  Vector witness;
  RatioMethod method = RatioMethod::WitnessOnly;
  double bound = 0.0;
  bool satisfied = false;
  /// Vertices visited or ascent starts run.
  std::uint64_t work = 0;
  std::uint64_t seed = 0;
};

struct RatioOptions {
  enum class Force { Auto, VertexEnum, Ascent };
  Force force = Force::Auto;
  std::uint64_t seed = Rng::kDefaultSeed;
  std::size_t random_starts = 32;
  /// Cap on C(2|U|, n) for vertex enumeration.
  std::uint64_t max_vertex_subsets = 1000000;
  Tolerances tol;
};

/// Sup over v != 0 of weighted_l1(f, B, v) / f(v). Exact vertex enumeration
/// for real f with n <= 4, |U| <= 64 and C(2|U|, n) within the cap;
/// seeded multi-start ascent otherwise (an exact edge walk per sign pattern
/// for real f, alternating phase ascent for complex f). Forcing VertexEnum on a complex
/// norm throws InvalidArgument.
RatioReport upper_ratio(const NormSpec& f, const ExtremalBasis& b, const RatioOptions& opts = {});

/// The ratio at one given vector (method WitnessOnly).
RatioReport witness_ratio(const NormSpec& f, const ExtremalBasis& b, const Vector& v,
                          const Tolerances& tol = {});

struct LowerSideReport {
  bool passed = true;
  std::optional<Vector> counterexample;
  std::size_t checked = 0;
  /// min over checked v of weighted_l1(v) - f(v), relative to max(1, f(v)).
  double worst_margin = 0.0;
};

/// f(v) <= weighted_l1(f, B, v) + tol * max(1, f(v)) on the support
/// directions, the basis vectors and `samples` seeded Gaussian vectors.
LowerSideReport lower_side_check(const NormSpec& f, const ExtremalBasis& b, std::size_t samples,
                                 std::uint64_t seed = Rng::kDefaultSeed,
                                 const Tolerances& tol = {});

enum class PropertyKind { Pf, HPf };
std::string_view to_string(PropertyKind p);

struct PropertyReport {
  PropertyKind property = PropertyKind::Pf;
  std::vector<double> constants;
  bool holds = true;
  /// Scaled so f = 1; violates c f(v) >= weighted_l1(v) by more than 1e-9.
  std::optional<Vector> counterexample;
  /// 0-based first index of the failing suffix (HPf only).
  std::optional<std::size_t> suffix;
  /// Measured ratio per suffix (one entry for Pf).
  std::vector<double> ratios;
  std::vector<RatioMethod> methods;
};

PropertyReport check_Pf(const NormSpec& f, const ExtremalBasis& e, double c,
                        const RatioOptions& opts = {});

/// Requires cs.size() == n and values non-decreasing (relative 1e-9);
/// throws InvalidArgument otherwise. Suffix i is checked on f restricted
/// to span(e_i, ..., e_n) in orthonormal coordinates.
PropertyReport check_HPf(const NormSpec& f, const ExtremalBasis& e, const std::vector<double>& cs,
                         const RatioOptions& opts = {});

/// (2^n - 1, 2^(n-1) - 1, ..., 1).
std::vector<double> maximal_hp_constants(std::size_t n);

struct HpConstants {
  std::optional<std::vector<double>> b;
  std::optional<std::vector<double>> e;
};

struct EquivalenceRow {
  double fb = 0.0;
  double fe = 0.0;
  double ratio = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool ok = true;
};

struct EquivalenceBounds {
  BasisKind kind_b = BasisKind::External;
  BasisKind kind_e = BasisKind::External;
  std::vector<EquivalenceRow> rows;
  bool all_ok = true;
};

/// r_i = f(b_i) / f(e_i) on the ascending views of both bases, with
///   upper_i = sqrt(i)            if B is minimal, sqrt(i) * cB_i otherwise
///   lower_i = 1 / sqrt(i)        if E is minimal, 1 / (sqrt(i) * cE_i) otherwise
/// where c_i = 2^(n-i+1) - 1 for maximal bases and external bases need
/// supplied hereditary constants (InvalidArgument otherwise).
EquivalenceBounds equivalence_ratios(const NormSpec& f, const ExtremalBasis& b,
                                     const ExtremalBasis& e, const HpConstants& hp = {},
                                     const Tolerances& tol = {});

struct InversionReport {
  bool premises_ok = false;
  std::string premise_failure;
  double c = 1.0;
  double c1 = 1.0;
  /// Smallest admissible alpha (>= 1); meaningful when premises_ok.
  double alpha = 1.0;
  /// Measured P_f ratio of B.
  double b_ratio = 0.0;
  /// alpha * c^2 * c1 and the P_f check of E against it.
  double constant = 0.0;
  std::optional<PropertyReport> conclusion;
};

/// Checks the premises (B satisfies P_f(c1), c >= 1, f(e_i)/c <= f(b_i) <=
/// c f(e_i)), computes alpha = max(1, max_{i != j} |<b_i,e_j>| / |<e_i,b_j>|)
/// and then P_f(alpha c^2 c1) for E. Indices are paired as given. Premise
/// failures are reported, not thrown.
InversionReport check_inversion(const NormSpec& f, const ExtremalBasis& b, const ExtremalBasis& e,
                                double c, double c1, const RatioOptions& opts = {});

}  // namespace extremal
