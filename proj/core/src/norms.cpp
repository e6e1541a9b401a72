#include "extremal/norms.hpp"

#include <cmath>
#include <string>

#include "extremal/error.hpp"

namespace extremal {

NormSpec::NormSpec(ScalarField field, std::size_t dim, std::vector<Vector> support)
    : field_(field), dim_(dim), support_(std::move(support)) {
  if (dim_ == 0) throw InvalidArgument("norm dimension must be at least 1");
  if (support_.empty()) throw InvalidArgument("norm support set is empty");
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const auto& u = support_[i];
    if (u.field() != field_ || u.dim() != dim_) {
      throw InvalidArgument("support vector " + std::to_string(i) +
                            " has wrong field or dimension");
    }
    if (u.is_zero()) {
      throw InvalidArgument("support vector " + std::to_string(i) + " is zero");
    }
  }
}

namespace {

void require_same_space(const NormSpec& f, const Vector& v) {
  if (v.field() != f.field()) throw InvalidArgument("mixed-field operation");
  if (v.dim() != f.dim()) {
    throw InvalidArgument("dimension mismatch: norm on dimension " +
                          std::to_string(f.dim()) + ", vector of dimension " +
                          std::to_string(v.dim()));
  }
}

}  // namespace

double evaluate(const NormSpec& f, const Vector& v) {
  require_same_space(f, v);
  double best = 0.0;
  for (const auto& u : f.support()) best = std::max(best, std::abs(inner(v, u)));
  return best;
}

std::size_t dual_witness_index(const NormSpec& f, const Vector& v) {
  require_same_space(f, v);
  if (v.is_zero()) throw InvalidArgument("dual_witness of the zero vector");
  std::size_t arg = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < f.support().size(); ++i) {
    const double x = std::abs(inner(v, f.support()[i]));
    if (x > best) {
      best = x;
      arg = i;
    }
  }
  return arg;
}

Vector dual_witness(const NormSpec& f, const Vector& v) {
  return f.support()[dual_witness_index(f, v)];
}

NormCheck is_norm(const NormSpec& f) {
  const Subspace span_u = gram_schmidt(f.field(), f.dim(), f.support());
  Subspace kernel = orthogonal_complement(span_u);
  const bool full = span_u.dim() == f.dim();
  return NormCheck{full, std::move(kernel)};
}

void require_norm(const NormSpec& f) {
  const auto check = is_norm(f);
  if (!check.is_norm) {
    throw InvalidArgument("support does not span the space (seminorm, U^perp has dimension " +
                          std::to_string(check.kernel.dim()) + ")");
  }
}

std::vector<std::pair<std::size_t, std::size_t>> lint_duplicates(const NormSpec& f,
                                                                 double angle_tol) {
  std::vector<Vector> dirs;
  dirs.reserve(f.support().size());
  for (const auto& u : f.support()) dirs.push_back(normalize(u));
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      // Align the phase of j with i, then measure the chordal distance,
      // which matches the angle to first order and stays accurate near 0.
      const Scalar g = inner(dirs[i], dirs[j]);
      const double m = std::abs(g);
      if (m == 0.0) continue;
      const Vector aligned = dirs[j] * (g / m);
      if (norm2(dirs[i] - aligned) < angle_tol) out.emplace_back(i, j);
    }
  }
  return out;
}

double RestrictedNorm::evaluate(const Vector& v) const {
  if (v.field() != subspace_.field() || v.dim() != subspace_.ambient_dim()) {
    throw InvalidArgument("restricted norm: vector outside the ambient space");
  }
  double best = 0.0;
  for (const auto& p : projected_) best = std::max(best, std::abs(inner(v, p)));
  return best;
}

NormSpec RestrictedNorm::in_coordinates() const {
  std::vector<Vector> coords;
  for (const auto& u : parent_.support()) {
    Vector c(subspace_.field(), coordinates_in(u, subspace_));
    if (norm2(c) <= kRankDropTol * std::max(1.0, norm2(u))) continue;
    coords.push_back(std::move(c));
  }
  if (coords.empty()) {
    throw InvalidArgument("norm vanishes on the subspace");
  }
  return NormSpec(subspace_.field(), subspace_.dim(), std::move(coords));
}

RestrictedNorm restrict(const NormSpec& f, const Subspace& s) {
  if (s.is_trivial()) throw InvalidArgument("cannot restrict to the trivial subspace");
  if (s.field() != f.field() || s.ambient_dim() != f.dim()) {
    throw InvalidArgument("subspace lives in a different space than the norm");
  }
  std::vector<Vector> projected;
  projected.reserve(f.support().size());
  for (const auto& u : f.support()) projected.push_back(project(u, s));
  return RestrictedNorm(f, s, std::move(projected));
}

RestrictedNorm quotient(const NormSpec& f) {
  return restrict(f, gram_schmidt(f.field(), f.dim(), f.support()));
}

}  // namespace extremal
