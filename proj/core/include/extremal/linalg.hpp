#pragma once

// Dense linear algebra over R^n and C^n at the scale this library works in
// (n <= 8). The inner product is linear in the first argument and
// conjugate-linear in the second.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace extremal {

enum class ScalarField { Real, Complex };

using Scalar = std::complex<double>;

std::string_view to_string(ScalarField field);

/// A coordinate vector tagged with its ground field. Complex scalars are
/// stored as (re, im) pairs; a Real vector always has zero imaginary parts.
class Vector {
 public:
  Vector() = default;

  /// Throws InvalidArgument on non-finite entries, or on a nonzero
  /// imaginary part when `field` is Real.
  Vector(ScalarField field, std::vector<Scalar> coords);

  static Vector real(std::initializer_list<double> xs);
  static Vector real(std::span<const double> xs);
  static Vector complex(std::initializer_list<Scalar> xs);
  static Vector zeros(ScalarField field, std::size_t dim);
  /// i-th standard basis vector.
  static Vector unit(ScalarField field, std::size_t dim, std::size_t i);

  ScalarField field() const { return field_; }
  std::size_t dim() const { return coords_.size(); }
  std::span<const Scalar> coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;

  Vector operator+(const Vector& other) const;
  Vector operator-(const Vector& other) const;
  Vector operator-() const;
  /// Scaling by a complex scalar is rejected for Real vectors unless the
  /// scalar is real.
  Vector operator*(Scalar lambda) const;
  Vector operator*(double lambda) const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  ScalarField field_ = ScalarField::Real;
  std::vector<Scalar> coords_;
};

inline Vector operator*(double lambda, const Vector& v) { return v * lambda; }
inline Vector operator*(Scalar lambda, const Vector& v) { return v * lambda; }

/// Throws InvalidArgument unless `u` and `v` share field and dimension.
void require_compatible(const Vector& u, const Vector& v);

Scalar inner(const Vector& u, const Vector& v);
double norm2(const Vector& v);
/// Throws InvalidArgument for the zero vector.
Vector normalize(const Vector& v);

/// v times the unit scalar that makes its largest-modulus coordinate real
/// and positive. The first coordinate within a relative 1e-9 of the largest
/// modulus is used, so the choice is stable under rounding. Idempotent.
Vector canonicalize(const Vector& v);

/// Lexicographic order on (re, im) of each coordinate; coordinates closer
/// than `tol` compare equal.
bool lex_less(const Vector& a, const Vector& b, double tol = 1e-9);

/// An orthonormal list of vectors; an empty list is the trivial subspace.
class Subspace {
 public:
  /// Trivial subspace of the given ambient space.
  Subspace(ScalarField field, std::size_t ambient_dim);
  /// Throws InvalidArgument when |<b_i, b_j> - delta_ij| > 1e-12.
  Subspace(ScalarField field, std::size_t ambient_dim, std::vector<Vector> basis);

  static Subspace whole(ScalarField field, std::size_t ambient_dim);
  /// Orthonormal basis of span(vs) via gram_schmidt.
  static Subspace span(ScalarField field, std::size_t ambient_dim,
                       std::span<const Vector> vs);

  ScalarField field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_trivial() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }

 private:
  ScalarField field_;
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
};

inline constexpr double kOrthonormalTol = 1e-12;
inline constexpr double kRankDropTol = 1e-10;

/// Modified Gram-Schmidt with one re-orthogonalization pass. A vector is
/// dropped when its residual is below kRankDropTol * max(1, |input|).
/// Every vector in `vs` must have the given field and dimension.
Subspace gram_schmidt(ScalarField field, std::size_t ambient_dim,
                      std::span<const Vector> vs);
/// Convenience overload; `vs` must be nonempty.
Subspace gram_schmidt(std::span<const Vector> vs);

Subspace orthogonal_complement(const Subspace& s);

Vector project(const Vector& v, const Subspace& s);

/// Coordinates <v, q_j> of v in the orthonormal basis of s.
std::vector<Scalar> coordinates_in(const Vector& v, const Subspace& s);
/// Sum_j c_j q_j.
Vector from_coordinates(std::span<const Scalar> c, const Subspace& s);

/// Small dense solve A x = b with partial pivoting, row-major n x n.
/// Returns false when a pivot falls below `pivot_tol` times the largest
/// entry of A.
bool solve_dense(std::vector<double> a, std::vector<double>& b, std::size_t n,
                 double pivot_tol = 1e-13);

}  // namespace extremal
