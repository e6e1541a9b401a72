#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "extremal/linalg.hpp"
#include "extremal/norms.hpp"

namespace extremal {

/// Seeded generator with a platform-independent normal transform
/// (Box-Muller over 53-bit uniforms), so streams are reproducible across
/// standard libraries.
class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64+box-muller/v1";
  static constexpr std::uint64_t kDefaultSeed = 0x5eedba5e5eedba5eULL;

  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform();
  double normal();
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Entries drawn i.i.d. standard normal (real and imaginary parts
/// independently for complex vectors).
Vector random_gaussian(Rng& rng, ScalarField field, std::size_t dim);
Vector random_unit(Rng& rng, ScalarField field, std::size_t dim);
Vector random_unit_in(Rng& rng, const Subspace& s);

/// Random norm with `supports` Gaussian support vectors; redraws until the
/// support spans the space. Requires supports >= dim.
NormSpec random_norm(Rng& rng, ScalarField field, std::size_t dim, std::size_t supports);

}  // namespace extremal
