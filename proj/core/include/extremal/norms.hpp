#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "extremal/linalg.hpp"

namespace extremal {

/// A finitely-generated norm f(v) = max_{u in U} |<v, u>| on F^n.
class NormSpec {
 public:
  /// Throws InvalidArgument when `support` is empty or contains a zero
  /// vector or a vector of the wrong field/dimension.
  NormSpec(ScalarField field, std::size_t dim, std::vector<Vector> support);

  ScalarField field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Vector>& support() const { return support_; }

  friend bool operator==(const NormSpec&, const NormSpec&) = default;

 private:
  ScalarField field_;
  std::size_t dim_;
  std::vector<Vector> support_;
};

double evaluate(const NormSpec& f, const Vector& v);

/// Index of the support vector attaining f(v); lowest index on ties.
std::size_t dual_witness_index(const NormSpec& f, const Vector& v);
/// Support vector attaining f(v). Throws InvalidArgument for v = 0.
Vector dual_witness(const NormSpec& f, const Vector& v);

struct NormCheck {
  bool is_norm = false;
  /// Orthonormal basis of U^perp; trivial exactly when is_norm.
  Subspace kernel;
};

/// f is a norm iff span(U) is the whole space.
NormCheck is_norm(const NormSpec& f);

/// Throws InvalidArgument with the dimension of U^perp when f is only a
/// seminorm.
void require_norm(const NormSpec& f);

/// Pairs (i, j), i < j, of support vectors that agree in direction up to a
/// unit scalar, i.e. whose angular distance is below `angle_tol`.
std::vector<std::pair<std::size_t, std::size_t>> lint_duplicates(
    const NormSpec& f, double angle_tol = 1e-10);

/// f restricted to a subspace s. Evaluating through the projected support
/// agrees with the parent on vectors of s.
class RestrictedNorm {
 public:
  const NormSpec& parent() const { return parent_; }
  const Subspace& subspace() const { return subspace_; }
  const std::vector<Vector>& projected_support() const { return projected_; }

  /// max |<v, p_u>| over the projected support; v must lie in the
  /// ambient space (its component off the subspace is ignored).
  double evaluate(const Vector& v) const;

  /// The same norm written in the orthonormal coordinates of the subspace:
  /// a NormSpec on F^k with support vectors (<u, q_1>, ..., <u, q_k>).
  /// Support vectors orthogonal to the subspace are dropped.
  NormSpec in_coordinates() const;

 private:
  friend RestrictedNorm restrict(const NormSpec& f, const Subspace& s);
  RestrictedNorm(NormSpec parent, Subspace s, std::vector<Vector> projected)
      : parent_(std::move(parent)), subspace_(std::move(s)),
        projected_(std::move(projected)) {}

  NormSpec parent_;
  Subspace subspace_;
  std::vector<Vector> projected_;
};

/// Throws InvalidArgument for a trivial subspace or a field/dimension
/// mismatch.
RestrictedNorm restrict(const NormSpec& f, const Subspace& s);

/// Permissive handling of a seminorm: f restricted to span(U), the
/// orthogonal complement of U^perp. f(v) equals the quotient value at the
/// projection of v.
RestrictedNorm quotient(const NormSpec& f);

}  // namespace extremal
