#include "extremal/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace extremal {

std::string_view to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::Minimal: return "minimal";
    case BasisKind::Maximal: return "maximal";
    case BasisKind::External: return "external";
  }
  return "?";
}

BasisKind basis_kind_from_string(std::string_view s) {
  if (s == "minimal" || s == "min") return BasisKind::Minimal;
  if (s == "maximal" || s == "max") return BasisKind::Maximal;
  if (s == "external") return BasisKind::External;
  throw InvalidArgument("unknown basis kind '" + std::string(s) + "'");
}

void require_basis_of(const ExtremalBasis& b, ScalarField field, std::size_t dim) {
  if (b.vectors.size() != dim) {
    throw InvalidArgument("basis has " + std::to_string(b.vectors.size()) +
                          " vectors, expected " + std::to_string(dim));
  }
  if (b.values.size() != b.vectors.size()) {
    throw InvalidArgument("basis needs one value per vector");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (b.vectors[i].field() != field || b.vectors[i].dim() != dim) {
      throw InvalidArgument("basis vector has wrong field or dimension");
    }
    for (std::size_t j = i; j < dim; ++j) {
      const Scalar g = inner(b.vectors[i], b.vectors[j]);
      if (std::abs(g - (i == j ? 1.0 : 0.0)) > kBasisOrthonormalTol) {
        throw InvalidArgument("basis is not orthonormal");
      }
    }
  }
}

ExtremalBasis make_external(const NormSpec& f, std::vector<Vector> vectors) {
  ExtremalBasis b;
  b.kind = BasisKind::External;
  for (const auto& v : vectors) {
    if (v.field() != f.field() || v.dim() != f.dim()) {
      throw InvalidArgument("basis vector does not live in the norm's space");
    }
    b.values.push_back(evaluate(f, v));
  }
  b.vectors = std::move(vectors);
  require_basis_of(b, f.field(), f.dim());
  return b;
}

namespace {

Subspace complement_of(const NormSpec& f, const std::vector<Vector>& chosen) {
  return orthogonal_complement(gram_schmidt(f.field(), f.dim(), chosen));
}

}  // namespace

ExtremalBasis minimal_basis(const NormSpec& f, const SphereOptOptions& opts) {
  require_norm(f);
  ExtremalBasis b;
  b.kind = BasisKind::Minimal;
  for (std::size_t k = 0; k < f.dim(); ++k) {
    const Subspace s = complement_of(f, b.vectors);
    SphereOptOptions step = opts;
    step.seed = opts.seed + k;
    const SphereOptResult r = min_on_sphere(f, s, step);
    if (!r.converged) {
      throw NonConvergenceError("minimization did not converge at step " +
                                    std::to_string(k + 1),
                                b);
    }
    b.vectors.push_back(r.argopt);
    b.values.push_back(r.value);
    b.provenance.push_back({r.method, r.starts_used, r.converged, r.vertex_certified, r.seed});
  }
  return b;
}

ExtremalBasis maximal_basis(const NormSpec& f) {
  require_norm(f);
  ExtremalBasis b;
  b.kind = BasisKind::Maximal;
  for (std::size_t k = 0; k < f.dim(); ++k) {
    const SphereOptResult r = max_on_sphere(f, complement_of(f, b.vectors));
    b.vectors.push_back(r.argopt);
    b.values.push_back(r.value);
    b.provenance.push_back({r.method, r.starts_used, r.converged, false, 0});
  }
  return b;
}

ExtremalBasis canonicalize(const ExtremalBasis& b) {
  ExtremalBasis out = b;
  for (auto& v : out.vectors) v = canonicalize(v);
  return out;
}

EquivalenceReport are_equivalent(const ExtremalBasis& b, const ExtremalBasis& e, double tol) {
  if (b.dim() != e.dim()) throw InvalidArgument("bases have different sizes");
  std::vector<Scalar> phases;
  phases.reserve(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    require_compatible(b.vectors[i], e.vectors[i]);
    const Scalar g = inner(e.vectors[i], b.vectors[i]);
    const double m = std::abs(g);
    if (m < 1e-12) return {};
    const Scalar alpha = g / m;
    if (norm2(e.vectors[i] - b.vectors[i] * alpha) > tol) return {};
    phases.push_back(alpha);
  }
  return {true, std::move(phases)};
}

ExtremalBasis ascending_view(const ExtremalBasis& b) {
  ExtremalBasis out;
  out.kind = b.kind;
  std::vector<std::size_t> order(b.dim());
  std::iota(order.begin(), order.end(), std::size_t{0});
  switch (b.kind) {
    case BasisKind::Minimal:
      break;
    case BasisKind::Maximal:
      std::reverse(order.begin(), order.end());
      break;
    case BasisKind::External:
      std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
        return b.values[p] < b.values[q];
      });
      break;
  }
  for (std::size_t i : order) {
    out.vectors.push_back(b.vectors[i]);
    out.values.push_back(b.values[i]);
    if (i < b.provenance.size()) out.provenance.push_back(b.provenance[i]);
  }
  return out;
}

std::vector<ExtremalBasis> distinct_minimal_bases(const NormSpec& f,
                                                  std::span<const std::uint64_t> seeds,
                                                  const SphereOptOptions& base) {
  std::vector<ExtremalBasis> found;
  for (const std::uint64_t seed : seeds) {
    SphereOptOptions opts = base;
    opts.seed = seed;
    ExtremalBasis b = minimal_basis(f, opts);
    const bool seen = std::any_of(found.begin(), found.end(), [&](const ExtremalBasis& x) {
      return are_equivalent(x, b).equivalent;
    });
    if (!seen) found.push_back(std::move(b));
  }
  return found;
}

}  // namespace extremal
