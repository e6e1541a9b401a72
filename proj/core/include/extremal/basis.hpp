#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "extremal/error.hpp"
#include "extremal/linalg.hpp"
#include "extremal/norms.hpp"
#include "extremal/sphere_opt.hpp"

namespace extremal {

enum class BasisKind { Minimal, Maximal, External };

std::string_view to_string(BasisKind kind);
/// Accepts "minimal"/"min", "maximal"/"max", "external".
BasisKind basis_kind_from_string(std::string_view s);

struct StepProvenance {
  SphereMethod method = SphereMethod::Analytic;
  std::size_t starts_used = 0;
  bool converged = true;
  bool vertex_certified = false;
  std::uint64_t seed = 0;
};

/// Ordered orthonormal basis b_1..b_n together with f(b_i).
struct ExtremalBasis {
  BasisKind kind = BasisKind::External;
  std::vector<Vector> vectors;
  std::vector<double> values;
  /// One entry per greedy step; empty for external bases.
  std::vector<StepProvenance> provenance;

  std::size_t dim() const { return vectors.size(); }
  ScalarField field() const {
    return vectors.empty() ? ScalarField::Real : vectors.front().field();
  }
};

inline constexpr double kBasisOrthonormalTol = 1e-10;

/// Wraps an externally supplied orthonormal basis; values are evaluated.
/// Throws InvalidArgument when the vectors are not an orthonormal basis of
/// f's space within kBasisOrthonormalTol.
ExtremalBasis make_external(const NormSpec& f, std::vector<Vector> vectors);

/// Throws InvalidArgument unless B is an orthonormal basis of F^n with one
/// value per vector.
void require_basis_of(const ExtremalBasis& b, ScalarField field, std::size_t dim);

/// Raised when a minimization step does not converge; carries the vectors
/// found before the failing step.
class NonConvergenceError : public SolverError {
 public:
  NonConvergenceError(const std::string& what, ExtremalBasis partial)
      : SolverError(what), partial_(std::move(partial)) {}
  const ExtremalBasis& partial() const { return partial_; }

 private:
  ExtremalBasis partial_;
};

/// Greedy f-minimal basis: b_k minimizes f on the unit sphere of the
/// orthogonal complement of b_1..b_{k-1}. Step k uses seed opts.seed + k.
/// Ties go to the lexicographically smallest canonical argmin.
/// Throws InvalidArgument for a seminorm, NonConvergenceError when a step
/// does not converge.
ExtremalBasis minimal_basis(const NormSpec& f, const SphereOptOptions& opts = {});

/// Greedy f-maximal basis using the exact sphere maximum at every step;
/// ties go to the lowest support index.
ExtremalBasis maximal_basis(const NormSpec& f);

/// Multiplies every vector by the unit scalar that makes its
/// largest-modulus coordinate real and positive.
ExtremalBasis canonicalize(const ExtremalBasis& b);

struct EquivalenceReport {
  bool equivalent = false;
  /// alpha_i = <e_i, b_i> / |<e_i, b_i>|, present when equivalent.
  std::optional<std::vector<Scalar>> phases;
};

/// b_i and e_i collinear for every i: ||e_i - alpha_i b_i|| <= tol with
/// |alpha_i| = 1. Order matters.
EquivalenceReport are_equivalent(const ExtremalBasis& b, const ExtremalBasis& e,
                                 double tol = 1e-8);

/// The basis rearranged so that values are non-decreasing: minimal bases
/// as is, maximal bases reversed, external bases stably sorted.
ExtremalBasis ascending_view(const ExtremalBasis& b);

/// Minimal bases from several seeds, keeping one representative of each
/// equivalence class in first-seen order.
std::vector<ExtremalBasis> distinct_minimal_bases(const NormSpec& f,
                                                  std::span<const std::uint64_t> seeds,
                                                  const SphereOptOptions& base = {});

}  // namespace extremal
