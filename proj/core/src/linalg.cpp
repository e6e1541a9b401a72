#include "extremal/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "extremal/error.hpp"

namespace extremal {

std::string_view to_string(ScalarField field) {
  return field == ScalarField::Real ? "R" : "C";
}

Vector::Vector(ScalarField field, std::vector<Scalar> coords)
    : field_(field), coords_(std::move(coords)) {
  for (const auto& x : coords_) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      throw InvalidArgument("vector has a non-finite entry");
    }
    if (field_ == ScalarField::Real && x.imag() != 0.0) {
      throw InvalidArgument("real vector has a nonzero imaginary part");
    }
  }
}

Vector Vector::real(std::initializer_list<double> xs) {
  return real(std::span<const double>(xs.begin(), xs.size()));
}

Vector Vector::real(std::span<const double> xs) {
  std::vector<Scalar> c(xs.begin(), xs.end());
  return Vector(ScalarField::Real, std::move(c));
}

Vector Vector::complex(std::initializer_list<Scalar> xs) {
  return Vector(ScalarField::Complex, std::vector<Scalar>(xs));
}

Vector Vector::zeros(ScalarField field, std::size_t dim) {
  return Vector(field, std::vector<Scalar>(dim));
}

Vector Vector::unit(ScalarField field, std::size_t dim, std::size_t i) {
  std::vector<Scalar> c(dim);
  c.at(i) = 1.0;
  return Vector(field, std::move(c));
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Scalar& x) { return x == Scalar{}; });
}

Vector Vector::operator+(const Vector& other) const {
  require_compatible(*this, other);
  std::vector<Scalar> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return Vector(field_, std::move(c));
}

Vector Vector::operator-(const Vector& other) const {
  require_compatible(*this, other);
  std::vector<Scalar> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coords_[i];
  return Vector(field_, std::move(c));
}

Vector Vector::operator-() const { return *this * -1.0; }

Vector Vector::operator*(Scalar lambda) const {
  if (field_ == ScalarField::Real && lambda.imag() != 0.0) {
    throw InvalidArgument("complex scalar applied to a real vector");
  }
  std::vector<Scalar> c(coords_);
  for (auto& x : c) x *= lambda;
  return Vector(field_, std::move(c));
}

Vector Vector::operator*(double lambda) const { return *this * Scalar(lambda); }

void require_compatible(const Vector& u, const Vector& v) {
  if (u.field() != v.field()) {
    throw InvalidArgument("mixed-field operation");
  }
  if (u.dim() != v.dim()) {
    throw InvalidArgument("dimension mismatch: " + std::to_string(u.dim()) +
                          " vs " + std::to_string(v.dim()));
  }
}

Scalar inner(const Vector& u, const Vector& v) {
  require_compatible(u, v);
  Scalar acc{};
  for (std::size_t i = 0; i < u.dim(); ++i) acc += u[i] * std::conj(v[i]);
  return acc;
}

double norm2(const Vector& v) {
  // Scaled accumulation keeps |v| finite for large entries.
  double scale = 0.0;
  for (const auto& x : v.coords()) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (const auto& x : v.coords()) acc += std::norm(x / scale);
  return scale * std::sqrt(acc);
}

Vector normalize(const Vector& v) {
  const double len = norm2(v);
  if (len == 0.0) throw InvalidArgument("cannot normalize the zero vector");
  return v * (1.0 / len);
}

Vector canonicalize(const Vector& v) {
  double mmax = 0.0;
  for (const auto& x : v.coords()) mmax = std::max(mmax, std::abs(x));
  if (mmax == 0.0) return v;
  std::size_t pick = 0;
  while (std::abs(v[pick]) < mmax * (1.0 - 1e-9)) ++pick;
  const Scalar phase = std::conj(v[pick]) / std::abs(v[pick]);
  std::vector<Scalar> c(v.coords().begin(), v.coords().end());
  for (auto& x : c) x *= phase;
  c[pick] = std::abs(v[pick]);
  if (v.field() == ScalarField::Real) {
    for (auto& x : c) x = x.real();
  }
  return Vector(v.field(), std::move(c));
}

bool lex_less(const Vector& a, const Vector& b, double tol) {
  require_compatible(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i].real() < b[i].real() - tol) return true;
    if (a[i].real() > b[i].real() + tol) return false;
    if (a[i].imag() < b[i].imag() - tol) return true;
    if (a[i].imag() > b[i].imag() + tol) return false;
  }
  return false;
}

Subspace::Subspace(ScalarField field, std::size_t ambient_dim)
    : field_(field), ambient_dim_(ambient_dim) {}

Subspace::Subspace(ScalarField field, std::size_t ambient_dim,
                   std::vector<Vector> basis)
    : field_(field), ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  if (basis_.size() > ambient_dim_) {
    throw InvalidArgument("subspace basis larger than the ambient dimension");
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].field() != field_ || basis_[i].dim() != ambient_dim_) {
      throw InvalidArgument("subspace basis vector has wrong field or dimension");
    }
    for (std::size_t j = i; j < basis_.size(); ++j) {
      const Scalar g = inner(basis_[i], basis_[j]);
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(g - expected) > kOrthonormalTol) {
        throw InvalidArgument("subspace basis is not orthonormal");
      }
    }
  }
}

Subspace Subspace::whole(ScalarField field, std::size_t ambient_dim) {
  std::vector<Vector> basis;
  basis.reserve(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    basis.push_back(Vector::unit(field, ambient_dim, i));
  }
  return Subspace(field, ambient_dim, std::move(basis));
}

Subspace Subspace::span(ScalarField field, std::size_t ambient_dim,
                        std::span<const Vector> vs) {
  return gram_schmidt(field, ambient_dim, vs);
}

namespace {

// Removes the components of r along q (one MGS sweep).
void sweep(std::vector<Scalar>& r, const std::vector<std::vector<Scalar>>& q) {
  for (const auto& qj : q) {
    Scalar c{};
    for (std::size_t i = 0; i < r.size(); ++i) c += r[i] * std::conj(qj[i]);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * qj[i];
  }
}

double raw_norm(const std::vector<Scalar>& r) {
  double acc = 0.0;
  for (const auto& x : r) acc += std::norm(x);
  return std::sqrt(acc);
}

std::vector<Scalar> to_raw(const Vector& v) {
  return {v.coords().begin(), v.coords().end()};
}

Vector from_raw(ScalarField field, std::vector<Scalar> r) {
  if (field == ScalarField::Real) {
    for (auto& x : r) x = x.real();
  }
  return Vector(field, std::move(r));
}

}  // namespace

Subspace gram_schmidt(ScalarField field, std::size_t ambient_dim,
                      std::span<const Vector> vs) {
  std::vector<std::vector<Scalar>> q;
  for (const auto& v : vs) {
    if (v.field() != field || v.dim() != ambient_dim) {
      throw InvalidArgument("gram_schmidt: vector has wrong field or dimension");
    }
    if (q.size() == ambient_dim) break;
    const double scale = std::max(1.0, norm2(v));
    auto r = to_raw(v);
    sweep(r, q);
    sweep(r, q);
    const double len = raw_norm(r);
    if (len <= kRankDropTol * scale) continue;
    for (auto& x : r) x /= len;
    q.push_back(std::move(r));
  }
  std::vector<Vector> basis;
  basis.reserve(q.size());
  for (auto& r : q) basis.push_back(from_raw(field, std::move(r)));
  return Subspace(field, ambient_dim, std::move(basis));
}

Subspace gram_schmidt(std::span<const Vector> vs) {
  if (vs.empty()) throw InvalidArgument("gram_schmidt: empty input needs a field");
  return gram_schmidt(vs.front().field(), vs.front().dim(), vs);
}

Subspace orthogonal_complement(const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  std::vector<std::vector<Scalar>> q;
  for (const auto& b : s.basis()) q.push_back(to_raw(b));

  // Greedily adds the standard basis vector with the largest residual, which
  // keeps each normalization well conditioned.
  std::vector<Vector> out;
  std::vector<bool> used(n, false);
  while (q.size() < n) {
    std::size_t best = n;
    double best_len = -1.0;
    std::vector<Scalar> best_r;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      std::vector<Scalar> r(n);
      r[j] = 1.0;
      sweep(r, q);
      sweep(r, q);
      const double len = raw_norm(r);
      if (len > best_len) {
        best_len = len;
        best = j;
        best_r = std::move(r);
      }
    }
    if (best == n || best_len <= kRankDropTol) break;
    used[best] = true;
    for (auto& x : best_r) x /= best_len;
    q.push_back(best_r);
    out.push_back(from_raw(s.field(), std::move(best_r)));
  }
  return Subspace(s.field(), n, std::move(out));
}

Vector project(const Vector& v, const Subspace& s) {
  if (v.field() != s.field() || v.dim() != s.ambient_dim()) {
    throw InvalidArgument("project: vector does not live in the subspace's space");
  }
  return from_coordinates(coordinates_in(v, s), s);
}

std::vector<Scalar> coordinates_in(const Vector& v, const Subspace& s) {
  std::vector<Scalar> c;
  c.reserve(s.dim());
  for (const auto& q : s.basis()) c.push_back(inner(v, q));
  return c;
}

Vector from_coordinates(std::span<const Scalar> c, const Subspace& s) {
  if (c.size() != s.dim()) throw InvalidArgument("coordinate count mismatch");
  std::vector<Scalar> acc(s.ambient_dim());
  for (std::size_t j = 0; j < c.size(); ++j) {
    const auto q = s.basis()[j].coords();
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c[j] * q[i];
  }
  return from_raw(s.field(), std::move(acc));
}

bool solve_dense(std::vector<double> a, std::vector<double>& b, std::size_t n,
                 double pivot_tol) {
  double amax = 0.0;
  for (double x : a) amax = std::max(amax, std::abs(x));
  if (amax == 0.0) return false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    }
    if (std::abs(a[piv * n + col]) <= pivot_tol * amax) return false;
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[col * n + k], a[piv * n + k]);
      std::swap(b[col], b[piv]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double m = a[r * n + col] / a[col * n + col];
      if (m == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) a[r * n + k] -= m * a[col * n + k];
      b[r] -= m * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= a[i * n + k] * b[k];
    b[i] = acc / a[i * n + i];
  }
  return true;
}

}  // namespace extremal
