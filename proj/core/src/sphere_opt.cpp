#include "extremal/sphere_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>
#include <type_traits>

#include "extremal/error.hpp"
#include "extremal/polytope.hpp"
#include "local_search.hpp"
#include "minimax.hpp"

namespace extremal {

std::string_view to_string(SphereMethod m) {
  switch (m) {
    case SphereMethod::Analytic: return "analytic";
    case SphereMethod::Multistart: return "multistart";
    case SphereMethod::Grid: return "grid";
  }
  return "?";
}

std::string_view to_string(OptMode m) { return m == OptMode::Min ? "min" : "max"; }

namespace {

void require_subspace_of(const NormSpec& f, const Subspace& s) {
  if (s.is_trivial()) throw InvalidArgument("optimization over the trivial subspace");
  if (s.field() != f.field() || s.ambient_dim() != f.dim()) {
    throw InvalidArgument("subspace lives in a different space than the norm");
  }
}

inline double conj_of(double x) { return x; }
inline Scalar conj_of(const Scalar& x) { return std::conj(x); }
inline double re(double x) { return x; }
inline double re(const Scalar& x) { return x.real(); }

// The restricted norm in subspace coordinates: row r is (<u_r, q_1>, ...).
// With v = sum_j c_j q_j, <v, u_r> = sum_j c_j conj(row_r[j]).
template <class T>
struct CoordRows {
  std::size_t m = 0;
  std::size_t k = 0;
  std::vector<T> a;

  const T* row(std::size_t r) const { return a.data() + r * k; }

  T dot(const std::vector<T>& c, std::size_t r) const {
    const T* ar = row(r);
    T acc{};
    for (std::size_t j = 0; j < k; ++j) acc += c[j] * conj_of(ar[j]);
    return acc;
  }

  double gauge(const std::vector<T>& c, std::size_t* arg = nullptr, T* z_out = nullptr) const {
    double best = -1.0;
    for (std::size_t r = 0; r < m; ++r) {
      const T z = dot(c, r);
      const double mag = std::abs(z);
      if (mag > best) {
        best = mag;
        if (arg) *arg = r;
        if (z_out) *z_out = z;
      }
    }
    return best;
  }
};

template <class T>
CoordRows<T> coord_rows(const NormSpec& g) {
  CoordRows<T> rows;
  rows.m = g.support().size();
  rows.k = g.dim();
  rows.a.reserve(rows.m * rows.k);
  for (const auto& u : g.support()) {
    for (const auto& x : u.coords()) {
      if constexpr (std::is_same_v<T, double>) {
        rows.a.push_back(x.real());
      } else {
        rows.a.push_back(x);
      }
    }
  }
  return rows;
}

template <class T>
double vec_norm(const std::vector<T>& c) {
  double acc = 0.0;
  for (const auto& x : c) acc += std::norm(x);
  return std::sqrt(acc);
}

template <class T>
bool normalize_vec(std::vector<T>& c) {
  const double len = vec_norm(c);
  if (!(len > 0.0) || !std::isfinite(len)) return false;
  for (auto& x : c) x /= len;
  return true;
}

// Projected subgradient descent on the unit sphere; returns the best iterate.
template <class T>
std::vector<T> subgradient_descent(const CoordRows<T>& rows, std::vector<T> c,
                                   std::size_t iterations, double step0, double& best_value) {
  const std::size_t k = rows.k;
  std::vector<T> best = c;
  best_value = rows.gauge(c);
  std::vector<T> g(k);
  for (std::size_t it = 1; it <= iterations; ++it) {
    std::size_t r = 0;
    T z{};
    const double val = rows.gauge(c, &r, &z);
    if (!std::isfinite(val)) throw SolverError("non-finite value in subgradient descent");
    if (val < best_value) {
      best_value = val;
      best = c;
    }
    const double mag = std::abs(z);
    if (mag == 0.0) break;
    const T phase = z / mag;
    const T* ar = rows.row(r);
    for (std::size_t j = 0; j < k; ++j) g[j] = phase * ar[j];
    // Tangential part: g - Re<g, c> c.
    double radial = 0.0;
    for (std::size_t j = 0; j < k; ++j) radial += re(g[j] * conj_of(c[j]));
    for (std::size_t j = 0; j < k; ++j) g[j] -= radial * c[j];
    const double gn = vec_norm(g);
    if (gn < 1e-15 * std::max(1.0, val)) break;
    const double step = step0 / static_cast<double>(it);
    for (std::size_t j = 0; j < k; ++j) c[j] -= (step / gn) * g[j];
    if (!normalize_vec(c)) break;
  }
  return best;
}

template <class T>
std::vector<double> to_real_params(const std::vector<T>& c) {
  if constexpr (std::is_same_v<T, double>) {
    return c;
  } else {
    std::vector<double> y;
    y.reserve(2 * c.size());
    for (const auto& x : c) {
      y.push_back(x.real());
      y.push_back(x.imag());
    }
    return y;
  }
}

template <class T>
std::vector<T> from_real_params(std::span<const double> y) {
  if constexpr (std::is_same_v<T, double>) {
    return {y.begin(), y.end()};
  } else {
    std::vector<T> c(y.size() / 2);
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = T(y[2 * j], y[2 * j + 1]);
    return c;
  }
}

template <class T>
std::vector<T> polish(const CoordRows<T>& rows, const SymmetricPolytope* ball,
                      std::vector<T> c, double& value, const SphereOptOptions& opts) {
  if constexpr (std::is_same_v<T, double>) {
    for (std::size_t round = 0; round <= rows.k; ++round) {
      const auto x = ball->vertex_near(c, opts.activity_tol, 1e-9);
      if (!x) break;
      std::vector<double> cand = *x;
      if (!normalize_vec(cand)) break;
      const double v = rows.gauge(cand);
      if (!(v < value)) break;
      value = v;
      c = std::move(cand);
    }
    return c;
  } else {
    const auto solver = detail::QuadMinimax::from_complex(rows.m, rows.k, rows.a.data());
    auto y = to_real_params(c);
    solver.descend(y, detail::QuadMinimax::Domain::Sphere);
    solver.polish_sphere(y);
    auto polished = from_real_params<T>(y);
    const double v = rows.gauge(polished);
    if (v < value) {
      value = v;
      c = std::move(polished);
    }
    return c;
  }
}

template <class T>
struct MinOutcome {
  std::vector<std::vector<T>> near_best;
  double best = 0.0;
  std::size_t starts = 0;
  std::size_t agreeing = 0;
  bool certified = false;
};

template <class T>
MinOutcome<T> minimize_coords(const CoordRows<T>& rows, const SphereOptOptions& opts) {
  const std::size_t k = rows.k;
  MinOutcome<T> out;
  out.best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, std::vector<T>>> cands;

  const auto prune = [&] {
    const double cut = out.best * (1.0 + opts.agreement_tol);
    std::erase_if(cands, [cut](const auto& p) { return p.first > cut; });
  };
  const auto offer = [&](std::vector<T> c, double v) {
    if (!std::isfinite(v)) throw SolverError("non-finite value in sphere minimization");
    ++out.starts;
    if (v <= out.best * (1.0 + opts.agreement_tol)) cands.emplace_back(v, std::move(c));
    if (v < out.best) out.best = v;
    if (cands.size() > 4096) prune();
  };

  std::optional<SymmetricPolytope> ball;
  if constexpr (std::is_same_v<T, double>) {
    ball.emplace(k, rows.a);
    if (opts.max_vertex_candidates > 0 &&
        ball->candidate_count() <= opts.max_vertex_candidates) {
      ball->for_each_vertex(1e-9, [&](std::span<const double> x) {
        std::vector<double> c(x.begin(), x.end());
        if (!normalize_vec(c)) return;
        offer(c, rows.gauge(c));
      });
      out.certified = true;
    }
  }
  const SymmetricPolytope* ball_ptr = ball ? &*ball : nullptr;

  std::vector<std::vector<T>> starts;
  for (std::size_t r = 0; r < rows.m; ++r) {
    std::vector<T> c(rows.row(r), rows.row(r) + k);
    if (normalize_vec(c)) starts.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < rows.m; ++i) {
    for (std::size_t j = i + 1; j < rows.m; ++j) {
      std::vector<T> c(k);
      for (std::size_t t = 0; t < k; ++t) c[t] = rows.row(i)[t] - rows.row(j)[t];
      if (vec_norm(c) <= 1e-12 * std::max(1.0, vec_norm(std::vector<T>(rows.row(i), rows.row(i) + k)))) {
        continue;
      }
      if (normalize_vec(c)) starts.push_back(std::move(c));
    }
  }
  Rng rng(opts.seed);
  const ScalarField field =
      std::is_same_v<T, double> ? ScalarField::Real : ScalarField::Complex;
  for (std::size_t r = 0; r < opts.random_starts; ++r) {
    const Vector u = random_unit(rng, field, k);
    std::vector<T> c(k);
    for (std::size_t j = 0; j < k; ++j) {
      if constexpr (std::is_same_v<T, double>) {
        c[j] = u[j].real();
      } else {
        c[j] = u[j];
      }
    }
    starts.push_back(std::move(c));
  }

  for (auto& c0 : starts) {
    double v = 0.0;
    std::vector<T> c;
    if constexpr (std::is_same_v<T, double>) {
      c = subgradient_descent(rows, std::move(c0), opts.iterations, opts.step0, v);
    } else {
      // The complex polish is a full local solver on its own.
      c = std::move(c0);
      v = rows.gauge(c);
    }
    c = polish(rows, ball_ptr, std::move(c), v, opts);
    offer(std::move(c), v);
  }

  prune();
  for (auto& p : cands) out.near_best.push_back(std::move(p.second));
  out.agreeing = out.near_best.size();
  return out;
}

template <class T>
Vector to_ambient(const std::vector<T>& c, const Subspace& s) {
  std::vector<Scalar> cs(c.begin(), c.end());
  return canonicalize(normalize(from_coordinates(cs, s)));
}

template <class T>
SphereOptResult min_with(const NormSpec& f, const Subspace& s, const NormSpec& g,
                         const SphereOptOptions& opts) {
  const auto rows = coord_rows<T>(g);
  auto outcome = minimize_coords(rows, opts);
  if (outcome.near_best.empty()) throw SolverError("sphere minimization found no candidate");

  Vector best = to_ambient(outcome.near_best.front(), s);
  for (std::size_t i = 1; i < outcome.near_best.size(); ++i) {
    Vector cand = to_ambient(outcome.near_best[i], s);
    if (lex_less(cand, best)) best = std::move(cand);
  }
  SphereOptResult res;
  res.value = evaluate(f, best);
  res.argopt = std::move(best);
  res.method = SphereMethod::Multistart;
  res.starts_used = outcome.starts;
  res.vertex_certified = outcome.certified;
  res.converged = outcome.certified || outcome.agreeing >= 2;
  res.seed = opts.seed;
  return res;
}

}  // namespace

SphereOptResult max_on_sphere(const NormSpec& f, const Subspace& s) {
  require_subspace_of(f, s);
  std::size_t arg = 0;
  double best = -1.0;
  std::vector<Vector> proj;
  proj.reserve(f.support().size());
  for (std::size_t i = 0; i < f.support().size(); ++i) {
    proj.push_back(project(f.support()[i], s));
    const double len = norm2(proj.back());
    if (len > best * (1.0 + 1e-12)) {
      best = len;
      arg = i;
    }
  }
  if (!(best > 0.0)) throw InvalidArgument("norm vanishes on the subspace");
  SphereOptResult res;
  res.argopt = canonicalize(normalize(proj[arg]));
  res.value = evaluate(f, res.argopt);
  res.method = SphereMethod::Analytic;
  res.starts_used = 0;
  res.converged = true;
  return res;
}

SphereOptResult min_on_sphere(const NormSpec& f, const Subspace& s,
                              const SphereOptOptions& opts) {
  require_subspace_of(f, s);
  const NormSpec g = restrict(f, s).in_coordinates();
  if (!is_norm(g).is_norm) {
    throw InvalidArgument("norm is degenerate on the subspace (seminorm leak)");
  }
  if (s.dim() == 1) {
    // The unit sphere of a line is a circle of phases on which f is constant.
    SphereOptResult res;
    res.argopt = canonicalize(s.basis().front());
    res.value = evaluate(f, res.argopt);
    res.method = SphereMethod::Multistart;
    res.starts_used = 1;
    res.converged = true;
    res.vertex_certified = f.field() == ScalarField::Real;
    res.seed = opts.seed;
    return res;
  }
  if (f.field() == ScalarField::Real) return min_with<double>(f, s, g, opts);
  return min_with<Scalar>(f, s, g, opts);
}

namespace {

// Points of a half-sphere grid in R^d (d <= 4); f(-v) = f(v) so one of each
// antipodal pair suffices.
template <class Visit>
double for_each_grid_point(std::size_t d, std::size_t resolution, Visit&& visit) {
  constexpr double pi = std::numbers::pi;
  std::vector<double> y(d);
  switch (d) {
    case 1:
      y[0] = 1.0;
      visit(y);
      return pi;
    case 2: {
      const std::size_t n = std::max<std::size_t>(resolution, 2);
      for (std::size_t i = 0; i < n; ++i) {
        const double t = pi * static_cast<double>(i) / static_cast<double>(n);
        y[0] = std::cos(t);
        y[1] = std::sin(t);
        visit(y);
      }
      return pi / static_cast<double>(n);
    }
    case 3: {
      const auto m = static_cast<std::size_t>(
          std::max(3.0, std::ceil(std::sqrt(static_cast<double>(resolution)))));
      for (std::size_t a = 0; a < m; ++a) {
        const double th = pi * static_cast<double>(a) / static_cast<double>(m - 1);
        for (std::size_t b = 0; b < m; ++b) {
          const double ph = pi * static_cast<double>(b) / static_cast<double>(m);
          y[0] = std::cos(th);
          y[1] = std::sin(th) * std::cos(ph);
          y[2] = std::sin(th) * std::sin(ph);
          visit(y);
        }
      }
      return pi / static_cast<double>(m - 1);
    }
    case 4: {
      const auto m = static_cast<std::size_t>(
          std::max(3.0, std::ceil(std::cbrt(static_cast<double>(resolution)))));
      for (std::size_t a = 0; a < m; ++a) {
        const double ps = pi * static_cast<double>(a) / static_cast<double>(m - 1);
        for (std::size_t b = 0; b < m; ++b) {
          const double th = pi * static_cast<double>(b) / static_cast<double>(m - 1);
          for (std::size_t c = 0; c < m; ++c) {
            const double ph = pi * static_cast<double>(c) / static_cast<double>(m);
            y[0] = std::cos(ps);
            y[1] = std::sin(ps) * std::cos(th);
            y[2] = std::sin(ps) * std::sin(th) * std::cos(ph);
            y[3] = std::sin(ps) * std::sin(th) * std::sin(ph);
            visit(y);
          }
        }
      }
      return pi / static_cast<double>(m - 1);
    }
    default:
      throw InvalidArgument("grid oracle supports subspaces of real dimension <= 4");
  }
}

}  // namespace

SphereOptResult grid_oracle(const NormSpec& f, const Subspace& s, OptMode mode,
                            std::size_t resolution) {
  require_subspace_of(f, s);
  const bool cplx = f.field() == ScalarField::Complex;
  const std::size_t k = s.dim();
  const std::size_t d = cplx ? 2 * k : k;
  if (d > 4) throw InvalidArgument("grid oracle supports subspaces of real dimension <= 4");
  if (resolution == 0) throw InvalidArgument("grid resolution must be positive");

  const std::size_t n = f.dim();
  const auto& basis = s.basis();
  const auto& support = f.support();
  std::vector<Scalar> v(n);
  // Evaluates f directly on the ambient vector sum_j c_j q_j.
  const auto objective = [&](std::span<const double> y) {
    std::fill(v.begin(), v.end(), Scalar{});
    for (std::size_t j = 0; j < k; ++j) {
      const Scalar c = cplx ? Scalar(y[2 * j], y[2 * j + 1]) : Scalar(y[j]);
      const auto q = basis[j].coords();
      for (std::size_t i = 0; i < n; ++i) v[i] += c * q[i];
    }
    double best = 0.0;
    for (const auto& u : support) {
      Scalar acc{};
      const auto uc = u.coords();
      for (std::size_t i = 0; i < n; ++i) acc += v[i] * std::conj(uc[i]);
      best = std::max(best, std::abs(acc));
    }
    return best;
  };

  const bool maximize = mode == OptMode::Max;
  std::vector<double> best_y;
  double best_val = maximize ? -1.0 : std::numeric_limits<double>::infinity();
  const double spacing = for_each_grid_point(d, resolution, [&](const std::vector<double>& y) {
    const double val = objective(y);
    if (maximize ? val > best_val : val < best_val) {
      best_val = val;
      best_y = y;
    }
  });

  double polished = best_val;
  const auto y = detail::sphere_compass_search(objective, best_y, spacing, 1e-14, maximize,
                                               0xc0ffee ^ resolution, polished);

  std::vector<Scalar> c(k);
  for (std::size_t j = 0; j < k; ++j) c[j] = cplx ? Scalar(y[2 * j], y[2 * j + 1]) : Scalar(y[j]);
  SphereOptResult res;
  res.argopt = canonicalize(normalize(from_coordinates(c, s)));
  res.value = evaluate(f, res.argopt);
  res.method = SphereMethod::Grid;
  res.starts_used = 1;
  res.converged = true;
  return res;
}

}  // namespace extremal
