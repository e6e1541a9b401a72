#include "extremal/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "extremal/error.hpp"

namespace extremal {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Vector random_gaussian(Rng& rng, ScalarField field, std::size_t dim) {
  std::vector<Scalar> c(dim);
  for (auto& x : c) {
    const double re = rng.normal();
    const double im = field == ScalarField::Complex ? rng.normal() : 0.0;
    x = Scalar(re, im);
  }
  return Vector(field, std::move(c));
}

Vector random_unit(Rng& rng, ScalarField field, std::size_t dim) {
  for (;;) {
    Vector v = random_gaussian(rng, field, dim);
    if (norm2(v) > 1e-8) return normalize(v);
  }
}

Vector random_unit_in(Rng& rng, const Subspace& s) {
  if (s.is_trivial()) throw InvalidArgument("random_unit_in: trivial subspace");
  const Vector c = random_unit(rng, s.field(), s.dim());
  return normalize(from_coordinates(c.coords(), s));
}

NormSpec random_norm(Rng& rng, ScalarField field, std::size_t dim, std::size_t supports) {
  if (dim == 0) throw InvalidArgument("random_norm: dimension must be at least 1");
  if (supports < dim) {
    throw InvalidArgument("random_norm: need at least as many supports as the dimension");
  }
  for (;;) {
    std::vector<Vector> u;
    u.reserve(supports);
    for (std::size_t i = 0; i < supports; ++i) u.push_back(random_gaussian(rng, field, dim));
    bool nonzero = true;
    for (const auto& x : u) nonzero = nonzero && !x.is_zero();
    if (!nonzero) continue;
    NormSpec f(field, dim, std::move(u));
    if (is_norm(f).is_norm) return f;
  }
}

}  // namespace extremal
