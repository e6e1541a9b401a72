#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "extremal/random.hpp"

namespace extremal::detail {

inline void normalize_in_place(std::vector<double>& y) {
  double len = 0.0;
  for (double t : y) len += t * t;
  len = std::sqrt(len);
  for (double& t : y) t /= len;
}

/// Compass search on the unit sphere of R^d: tries y + t*dir for the
/// coordinate directions and a few seeded random ones (both signs), keeps
/// any improvement, halves t when a full pass fails. Returns the final
/// point; `value` receives its objective.
inline std::vector<double> sphere_compass_search(
    const std::function<double(std::span<const double>)>& objective, std::vector<double> y,
    double step, double min_step, bool maximize, std::uint64_t seed, double& value,
    std::size_t max_evals = 200000) {
  const std::size_t d = y.size();
  normalize_in_place(y);
  value = objective(y);
  if (d < 2) return y;

  Rng rng(seed);
  const auto better = [maximize](double cand, double cur) {
    return maximize ? cand > cur : cand < cur;
  };
  std::vector<std::vector<double>> dirs;
  std::size_t evals = 1;
  std::vector<double> trial(d);
  while (step >= min_step && evals < max_evals) {
    dirs.clear();
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<double> e(d, 0.0);
      e[i] = 1.0;
      dirs.push_back(e);
    }
    for (std::size_t r = 0; r < 2 * d; ++r) {
      std::vector<double> e(d);
      for (double& t : e) t = rng.normal();
      normalize_in_place(e);
      dirs.push_back(std::move(e));
    }
    bool improved = false;
    for (const auto& e : dirs) {
      for (double sgn : {1.0, -1.0}) {
        for (std::size_t i = 0; i < d; ++i) trial[i] = y[i] + sgn * step * e[i];
        normalize_in_place(trial);
        const double v = objective(trial);
        ++evals;
        if (better(v, value)) {
          value = v;
          y = trial;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return y;
}

}  // namespace extremal::detail
