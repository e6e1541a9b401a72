#pragma once
// Reference computations written independently of the library: plain
// arrays, Cramer's rule, brute-force sweeps. Only for tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

#include "extremal/linalg.hpp"
#include "extremal/norms.hpp"

namespace oracle {

using Mat = std::vector<std::vector<double>>;
using CVec = std::vector<std::complex<double>>;

inline Mat real_rows(const extremal::NormSpec& f) {
  Mat rows;
  for (const auto& u : f.support()) {
    std::vector<double> r;
    for (const auto& x : u.coords()) r.push_back(x.real());
    rows.push_back(r);
  }
  return rows;
}

inline CVec cvec(const extremal::Vector& v) { return CVec(v.coords().begin(), v.coords().end()); }

// max_u |sum_k x_k conj(u_k)|
inline double norm_value(const std::vector<CVec>& support, const CVec& x) {
  double best = 0.0;
  for (const auto& u : support) {
    std::complex<double> s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * std::conj(u[k]);
    best = std::max(best, std::abs(s));
  }
  return best;
}

inline std::vector<CVec> support_of(const extremal::NormSpec& f) {
  std::vector<CVec> s;
  for (const auto& u : f.support()) s.push_back(cvec(u));
  return s;
}

inline double det2(double a, double b, double c, double d) { return a * d - b * c; }

inline double det3(const Mat& m) {
  return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
         m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
         m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

// Every vertex of {x : |<a_r, x>| <= 1} in R^2 or R^3 by Cramer's rule.
inline std::vector<std::vector<double>> vertices(const Mat& rows, double tol = 1e-9) {
  const std::size_t n = rows.front().size();
  std::vector<std::vector<double>> out;
  const auto feasible = [&](const std::vector<double>& x) {
    for (const auto& a : rows) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += a[k] * x[k];
      if (std::abs(s) > 1.0 + tol) return false;
    }
    return true;
  };
  const std::size_t m = rows.size();
  if (n == 2) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const auto& a = rows[i];
        const auto& b = rows[j];
        const double d = det2(a[0], a[1], b[0], b[1]);
        if (std::abs(d) < 1e-12) continue;
        for (double si : {1.0, -1.0})
          for (double sj : {1.0, -1.0}) {
            std::vector<double> x{det2(si, a[1], sj, b[1]) / d, det2(a[0], si, b[0], sj) / d};
            if (feasible(x)) out.push_back(x);
          }
      }
  } else if (n == 3) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k) {
          const Mat a{rows[i], rows[j], rows[k]};
          const double d = det3(a);
          if (std::abs(d) < 1e-12) continue;
          for (int mask = 0; mask < 8; ++mask) {
            const double s[3] = {mask & 1 ? -1.0 : 1.0, mask & 2 ? -1.0 : 1.0,
                                 mask & 4 ? -1.0 : 1.0};
            std::vector<double> x(3);
            for (int c = 0; c < 3; ++c) {
              Mat t = a;
              for (int r = 0; r < 3; ++r) t[r][c] = s[r];
              x[c] = det3(t) / d;
            }
            if (feasible(x)) out.push_back(x);
          }
        }
  }
  return out;
}

// min of f on the Euclidean sphere = 1 / max_{f(x) <= 1} |x|.
inline double min_on_sphere(const extremal::NormSpec& f) {
  double best = 0.0;
  for (const auto& x : vertices(real_rows(f))) {
    double s = 0.0;
    for (double t : x) s += t * t;
    best = std::max(best, std::sqrt(s));
  }
  return 1.0 / best;
}

inline double max_on_sphere(const extremal::NormSpec& f) {
  double best = 0.0;
  for (const auto& u : f.support()) {
    double s = 0.0;
    for (const auto& x : u.coords()) s += std::norm(x);
    best = std::max(best, std::sqrt(s));
  }
  return best;
}

// sup over x of sum_i |<x, b_i>| values_i / f(x), by vertex enumeration.
inline double ratio(const extremal::NormSpec& f, const std::vector<extremal::Vector>& basis,
                    const std::vector<double>& values) {
  const auto support = support_of(f);
  double best = 0.0;
  for (const auto& v : vertices(real_rows(f))) {
    CVec x(v.begin(), v.end());
    double g = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::complex<double> s = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * std::conj(basis[i][k]);
      g += std::abs(s) * values[i];
    }
    best = std::max(best, g / norm_value(support, x));
  }
  return best;
}

// Min/max of f over the unit sphere of R^2 on a uniform angle grid.
inline double sweep_2d(const extremal::NormSpec& f, std::size_t steps, bool maximize) {
  const auto support = support_of(f);
  double best = maximize ? 0.0 : INFINITY;
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = std::numbers::pi * static_cast<double>(i) / static_cast<double>(steps);
    const double v = norm_value(support, {std::cos(t), std::sin(t)});
    best = maximize ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

// Min of f over the unit sphere of C^2, parametrized as
// (cos t, e^{i p} sin t) up to a global phase.
inline double sweep_c2_min(const extremal::NormSpec& f, std::size_t steps) {
  const auto support = support_of(f);
  double best = INFINITY;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = 0.5 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(steps);
    for (std::size_t j = 0; j < 2 * steps; ++j) {
      const double p = std::numbers::pi * static_cast<double>(j) / static_cast<double>(steps);
      best = std::min(best, norm_value(support, {std::cos(t), std::polar(std::sin(t), p)}));
    }
  }
  return best;
}

// Rank of a real matrix (rows) by Gaussian elimination with full pivot
// search per column.
inline std::size_t rank(Mat a, double tol = 1e-9) {
  if (a.empty()) return 0;
  const std::size_t m = a.size();
  const std::size_t n = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    for (std::size_t i = r + 1; i < m; ++i)
      if (std::abs(a[i][c]) > std::abs(a[piv][c])) piv = i;
    if (std::abs(a[piv][c]) <= tol) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      const double f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

inline Mat as_rows(const std::vector<extremal::Vector>& vs) {
  Mat m;
  for (const auto& v : vs) {
    std::vector<double> r;
    for (const auto& x : v.coords()) r.push_back(x.real());
    m.push_back(r);
  }
  return m;
}

}  // namespace oracle
