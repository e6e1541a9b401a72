#include "extremal/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "extremal/error.hpp"
#include "extremal/polytope.hpp"
#include "minimax.hpp"

namespace extremal {

void Tolerances::set(std::string_view name, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidArgument("tolerance '" + std::string(name) + "' must be positive");
  }
  if (name == "ratio") ratio = value;
  else if (name == "feasibility") feasibility = value;
  else if (name == "lower") lower = value;
  else if (name == "bounds") bounds = value;
  else if (name == "equivalence") equivalence = value;
  else if (name == "zero") zero = value;
  else if (name == "agreement") agreement = value;
  else throw InvalidArgument("unknown tolerance '" + std::string(name) + "'");
}

std::vector<std::pair<std::string, double>> Tolerances::entries() const {
  return {{"ratio", ratio},   {"feasibility", feasibility}, {"lower", lower},
          {"bounds", bounds}, {"equivalence", equivalence}, {"zero", zero},
          {"agreement", agreement}};
}

double theorem_bound(std::size_t n) { return std::ldexp(1.0, static_cast<int>(n)) - 1.0; }

std::string_view to_string(RatioMethod m) {
  switch (m) {
    case RatioMethod::VertexEnum: return "vertex-enum";
    case RatioMethod::MultistartAscent: return "multistart-ascent";
    case RatioMethod::WitnessOnly: return "witness-only";
  }
  return "?";
}

std::string_view to_string(PropertyKind p) { return p == PropertyKind::Pf ? "Pf" : "HPf"; }

namespace {

void require_basis_for(const NormSpec& f, const ExtremalBasis& b) {
  require_basis_of(b, f.field(), f.dim());
}

// Flat complex evaluation of f and the weighted sum on raw coordinates.
struct RatioKernel {
  std::size_t n;
  bool complex;
  std::vector<Scalar> support;  // conj(u), row-major
  std::vector<Scalar> basis;    // conj(b), row-major
  std::vector<double> values;

  RatioKernel(const NormSpec& f, const ExtremalBasis& b)
      : n(f.dim()), complex(f.field() == ScalarField::Complex), values(b.values) {
    for (const auto& u : f.support())
      for (const auto& x : u.coords()) support.push_back(std::conj(x));
    for (const auto& v : b.vectors)
      for (const auto& x : v.coords()) basis.push_back(std::conj(x));
  }

  std::vector<Scalar> point(std::span<const double> y) const {
    std::vector<Scalar> z(n);
    for (std::size_t k = 0; k < n; ++k) z[k] = complex ? Scalar(y[2 * k], y[2 * k + 1]) : y[k];
    return z;
  }

  static double dot_abs(const Scalar* row, const std::vector<Scalar>& z) {
    Scalar s = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) s += z[k] * row[k];
    return std::abs(s);
  }

  double ratio(std::span<const double> y) const {
    const auto z = point(y);
    double fv = 0.0;
    for (std::size_t r = 0; r * n < support.size(); ++r)
      fv = std::max(fv, dot_abs(support.data() + r * n, z));
    double g = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) g += dot_abs(basis.data() + i * n, z) * values[i];
    return fv > 0.0 ? g / fv : 0.0;
  }

  std::vector<double> params(const Vector& v) const {
    std::vector<double> y;
    for (const auto& x : v.coords()) {
      y.push_back(x.real());
      if (complex) y.push_back(x.imag());
    }
    return y;
  }

  Vector vector(std::span<const double> y) const {
    return Vector(complex ? ScalarField::Complex : ScalarField::Real, point(y));
  }
};

RatioReport finish(const NormSpec& f, const ExtremalBasis& b, const Vector& raw,
                   RatioMethod method, const Tolerances& tol) {
  RatioReport r;
  const double fv = evaluate(f, raw);
  if (!(fv > 0.0)) throw SolverError("ratio witness has zero norm");
  r.witness = canonicalize(raw * (1.0 / fv));
  r.ratio = weighted_l1(f, b, r.witness) / evaluate(f, r.witness);
  r.method = method;
  r.bound = theorem_bound(f.dim());
  r.satisfied = r.ratio <= r.bound + tol.ratio;
  return r;
}

bool vertex_enum_applies(const NormSpec& f, const RatioOptions& opts) {
  if (f.field() != ScalarField::Real) return false;
  const std::size_t m = f.support().size();
  return f.dim() <= 4 && m <= 64 && binomial(2 * m, f.dim()) <= opts.max_vertex_subsets;
}

RatioReport by_vertices(const NormSpec& f, const ExtremalBasis& b, const RatioOptions& opts) {
  const SymmetricPolytope ball = SymmetricPolytope::unit_ball(f);
  const RatioKernel k(f, b);
  double best = -1.0;
  std::vector<double> arg;
  const auto stats = ball.for_each_vertex(opts.tol.feasibility, [&](std::span<const double> x) {
    const double r = k.ratio(x);
    if (r > best) {
      best = r;
      arg.assign(x.begin(), x.end());
    }
  });
  if (arg.empty()) throw SolverError("vertex enumeration found no vertex");
  RatioReport r = finish(f, b, Vector::real(arg), RatioMethod::VertexEnum, opts.tol);
  r.work = stats.feasible;
  return r;
}

// Real norms: sup of the weighted sum over the unit ball equals the max over
// sign patterns of the linear functional sum_i sigma_i values_i b_i, so an
// edge walk per pattern is exact.
RatioReport by_edge_walk(const NormSpec& f, const ExtremalBasis& b, const RatioOptions& opts) {
  const SymmetricPolytope ball = SymmetricPolytope::unit_ball(f);
  const RatioKernel k(f, b);
  const std::size_t n = f.dim();
  double best = -1.0;
  std::vector<double> arg;
  std::vector<double> w(n);
  const std::uint64_t patterns = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    std::fill(w.begin(), w.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double sigma = i > 0 && ((mask >> (i - 1)) & 1U) ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n; ++j) w[j] += sigma * b.values[i] * b.vectors[i][j].real();
    }
    const auto lm = ball.maximize_linear(w);
    const double r = k.ratio(lm.x);
    if (r > best) {
      best = r;
      arg = lm.x;
    }
  }
  RatioReport r = finish(f, b, Vector::real(arg), RatioMethod::MultistartAscent, opts.tol);
  r.work = patterns;
  r.seed = opts.seed;
  return r;
}

// Complex norms: alternate between the phases phi_i = phase <v, b_i> and the
// convex problem max Re<v, w> / f(v) with w = sum_i values_i phi_i b_i, solved
// as min f on the hyperplane Re<v, w> = 1. The ratio never decreases along
// the way; starts are the sign patterns plus seeded random phases.
RatioReport by_phase_ascent(const NormSpec& f, const ExtremalBasis& b, const RatioOptions& opts) {
  const RatioKernel k(f, b);
  const std::size_t n = f.dim();
  const std::size_t m = f.support().size();
  const bool complex = f.field() == ScalarField::Complex;
  detail::QuadMinimax solver;
  if (complex) {
    std::vector<Scalar> rows;
    for (const auto& u : f.support()) rows.insert(rows.end(), u.coords().begin(), u.coords().end());
    solver = detail::QuadMinimax::from_complex(m, n, rows.data());
  } else {
    std::vector<double> rows;
    for (const auto& u : f.support())
      for (const auto& x : u.coords()) rows.push_back(x.real());
    solver = detail::QuadMinimax::from_real(m, n, rows.data());
  }

  std::vector<std::vector<Scalar>> starts;
  if (n <= 8) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      std::vector<Scalar> phi(n, 1.0);
      for (std::size_t i = 1; i < n; ++i) {
        if ((mask >> (i - 1)) & 1U) phi[i] = -1.0;
      }
      starts.push_back(std::move(phi));
    }
  }
  Rng rng(opts.seed);
  for (std::size_t s = 0; s < opts.random_starts; ++s) {
    std::vector<Scalar> phi(n, 1.0);
    for (std::size_t i = 1; i < n; ++i) {
      phi[i] = complex ? std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform())
                       : Scalar(rng.uniform() < 0.5 ? -1.0 : 1.0);
    }
    starts.push_back(std::move(phi));
  }

  const std::size_t d = solver.dim();
  double best = -1.0;
  std::vector<double> arg;
  std::vector<double> a(d), y(d);
  const auto phases_of = [&](const std::vector<double>& yy, std::vector<Scalar>& phi) {
    const auto v = k.point(yy);
    for (std::size_t i = 0; i < n; ++i) {
      Scalar z = 0.0;
      for (std::size_t j = 0; j < n; ++j) z += v[j] * k.basis[i * n + j];
      if (std::abs(z) > 0.0) phi[i] = z / std::abs(z);
    }
  };
  const auto climb = [&](std::vector<Scalar> phi) {
    double prev = -1.0;
    bool fresh = true;
    for (int it = 0; it < 100; ++it) {
      std::fill(a.begin(), a.end(), 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const Scalar w = b.values[i] * phi[i] * b.vectors[i][j];
          if (complex) {
            a[2 * j] += w.real();
            a[2 * j + 1] += w.imag();
          } else {
            a[j] += w.real();
          }
        }
      }
      double aa = 0.0, ay = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        aa += a[i] * a[i];
        ay += a[i] * y[i];
      }
      if (!(aa > 0.0)) break;
      if (fresh || !(ay > 0.0)) {
        for (std::size_t i = 0; i < d; ++i) y[i] = a[i] / aa;
      } else {
        for (double& t : y) t /= ay;
      }
      fresh = false;
      solver.descend(y, detail::QuadMinimax::Domain::Hyperplane, a);
      const double r = k.ratio(y);
      if (r > best) {
        best = r;
        arg = y;
      }
      if (!(r > prev * (1.0 + 1e-13))) break;
      prev = r;
      phases_of(y, phi);
    }
  };
  for (auto& phi : starts) climb(std::move(phi));

  // The ratio can peak in very narrow phase windows; perturb the best phases
  // with shrinking spread.
  if (complex && !arg.empty() && n > 1) {
    double spread = 0.3;
    for (std::size_t s = 0; s < opts.random_starts; ++s) {
      std::vector<Scalar> phi(n, 1.0);
      phases_of(arg, phi);
      for (std::size_t i = 1; i < n; ++i) phi[i] *= std::polar(1.0, spread * rng.normal());
      climb(std::move(phi));
      spread = std::max(spread * 0.7, 1e-6);
    }
  }
  if (arg.empty()) throw SolverError("phase ascent found no witness");
  RatioReport r = finish(f, b, k.vector(arg), RatioMethod::MultistartAscent, opts.tol);
  r.work = starts.size();
  r.seed = opts.seed;
  return r;
}

RatioReport by_ascent(const NormSpec& f, const ExtremalBasis& b, const RatioOptions& opts) {
  if (f.field() == ScalarField::Real && f.dim() <= 16) return by_edge_walk(f, b, opts);
  return by_phase_ascent(f, b, opts);
}

}  // namespace

double weighted_l1(const NormSpec& f, const ExtremalBasis& b, const Vector& v) {
  if (v.field() != f.field() || v.dim() != f.dim()) {
    throw InvalidArgument("vector does not live in the norm's space");
  }
  if (b.vectors.size() != f.dim() || b.values.size() != b.vectors.size()) {
    throw InvalidArgument("basis size does not match the norm's dimension");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < b.vectors.size(); ++i) {
    sum += std::abs(inner(v, b.vectors[i])) * b.values[i];
  }
  return sum;
}

RatioReport upper_ratio(const NormSpec& f, const ExtremalBasis& b, const RatioOptions& opts) {
  require_norm(f);
  require_basis_for(f, b);
  switch (opts.force) {
    case RatioOptions::Force::VertexEnum:
      if (f.field() != ScalarField::Real) {
        throw InvalidArgument("vertex enumeration needs a real norm");
      }
      return by_vertices(f, b, opts);
    case RatioOptions::Force::Ascent:
      return by_ascent(f, b, opts);
    case RatioOptions::Force::Auto:
      break;
  }
  return vertex_enum_applies(f, opts) ? by_vertices(f, b, opts) : by_ascent(f, b, opts);
}

RatioReport witness_ratio(const NormSpec& f, const ExtremalBasis& b, const Vector& v,
                          const Tolerances& tol) {
  require_basis_for(f, b);
  if (v.is_zero()) throw InvalidArgument("witness must be nonzero");
  return finish(f, b, v, RatioMethod::WitnessOnly, tol);
}

LowerSideReport lower_side_check(const NormSpec& f, const ExtremalBasis& b, std::size_t samples,
                                 std::uint64_t seed, const Tolerances& tol) {
  require_basis_for(f, b);
  LowerSideReport rep;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  const auto check = [&](const Vector& v) {
    const double fv = evaluate(f, v);
    const double margin = (weighted_l1(f, b, v) - fv) / std::max(1.0, fv);
    ++rep.checked;
    rep.worst_margin = std::min(rep.worst_margin, margin);
    if (margin < -tol.lower && rep.passed) {
      rep.passed = false;
      rep.counterexample = v;
    }
  };
  for (const auto& u : f.support()) check(u);
  for (const auto& v : b.vectors) check(v);
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) check(random_gaussian(rng, f.field(), f.dim()));
  return rep;
}

PropertyReport check_Pf(const NormSpec& f, const ExtremalBasis& e, double c,
                        const RatioOptions& opts) {
  PropertyReport rep;
  rep.property = PropertyKind::Pf;
  rep.constants = {c};
  const RatioReport r = upper_ratio(f, e, opts);
  rep.ratios = {r.ratio};
  rep.methods = {r.method};
  rep.holds = r.ratio <= c + opts.tol.ratio;
  if (!rep.holds) rep.counterexample = r.witness;
  return rep;
}

PropertyReport check_HPf(const NormSpec& f, const ExtremalBasis& e, const std::vector<double>& cs,
                         const RatioOptions& opts) {
  require_norm(f);
  require_basis_for(f, e);
  const std::size_t n = f.dim();
  if (cs.size() != n) throw InvalidArgument("need one constant per basis vector");
  for (std::size_t i = 1; i < n; ++i) {
    if (e.values[i] < e.values[i - 1] * (1.0 - 1e-9)) {
      throw InvalidArgument("basis is not ordered by non-decreasing norm");
    }
  }
  PropertyReport rep;
  rep.property = PropertyKind::HPf;
  rep.constants = cs;
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<Vector> tail(e.vectors.begin() + static_cast<std::ptrdiff_t>(i),
                                   e.vectors.end());
    const Subspace sub = gram_schmidt(f.field(), n, tail);
    if (sub.dim() != n - i) throw SolverError("suffix span lost rank");
    const NormSpec g = restrict(f, sub).in_coordinates();
    ExtremalBasis local;
    local.kind = BasisKind::External;
    for (std::size_t j = i; j < n; ++j) {
      local.vectors.emplace_back(f.field(), coordinates_in(e.vectors[j], sub));
      local.values.push_back(e.values[j]);
    }
    const RatioReport r = upper_ratio(g, local, opts);
    rep.ratios.push_back(r.ratio);
    rep.methods.push_back(r.method);
    if (rep.holds && r.ratio > cs[i] + opts.tol.ratio) {
      rep.holds = false;
      rep.suffix = i;
      const Vector v = from_coordinates(r.witness.coords(), sub);
      rep.counterexample = canonicalize(v * (1.0 / evaluate(f, v)));
    }
  }
  return rep;
}

std::vector<double> maximal_hp_constants(std::size_t n) {
  std::vector<double> cs;
  for (std::size_t i = 0; i < n; ++i) cs.push_back(theorem_bound(n - i));
  return cs;
}

EquivalenceBounds equivalence_ratios(const NormSpec& f, const ExtremalBasis& b,
                                     const ExtremalBasis& e, const HpConstants& hp,
                                     const Tolerances& tol) {
  require_basis_for(f, b);
  require_basis_for(f, e);
  const std::size_t n = f.dim();
  const auto constants = [&](const ExtremalBasis& x,
                             const std::optional<std::vector<double>>& given,
                             const char* which) -> std::vector<double> {
    if (given) {
      if (given->size() != n) throw InvalidArgument("need one constant per basis vector");
      return *given;
    }
    switch (x.kind) {
      case BasisKind::Minimal: return std::vector<double>(n, 1.0);
      case BasisKind::Maximal: return maximal_hp_constants(n);
      case BasisKind::External: break;
    }
    throw InvalidArgument(std::string("external basis ") + which +
                          " needs hereditary constants");
  };
  const std::vector<double> cb =
      b.kind == BasisKind::Minimal ? std::vector<double>(n, 1.0) : constants(b, hp.b, "B");
  const std::vector<double> ce =
      e.kind == BasisKind::Minimal ? std::vector<double>(n, 1.0) : constants(e, hp.e, "E");

  const ExtremalBasis bs = ascending_view(b);
  const ExtremalBasis es = ascending_view(e);
  EquivalenceBounds rep;
  rep.kind_b = b.kind;
  rep.kind_e = e.kind;
  for (std::size_t i = 0; i < n; ++i) {
    const double root = std::sqrt(static_cast<double>(i + 1));
    EquivalenceRow row;
    row.fb = bs.values[i];
    row.fe = es.values[i];
    row.ratio = row.fb / row.fe;
    row.upper = root * cb[i];
    row.lower = 1.0 / (root * ce[i]);
    row.ok = row.ratio <= row.upper * (1.0 + tol.bounds) &&
             row.ratio >= row.lower * (1.0 - tol.bounds);
    rep.all_ok = rep.all_ok && row.ok;
    rep.rows.push_back(row);
  }
  return rep;
}

InversionReport check_inversion(const NormSpec& f, const ExtremalBasis& b, const ExtremalBasis& e,
                                double c, double c1, const RatioOptions& opts) {
  require_norm(f);
  require_basis_for(f, b);
  require_basis_for(f, e);
  const std::size_t n = f.dim();
  const Tolerances& tol = opts.tol;
  InversionReport rep;
  rep.c = c;
  rep.c1 = c1;
  const auto fail = [&](std::string why) {
    rep.premises_ok = false;
    rep.premise_failure = std::move(why);
    return rep;
  };
  if (!(c >= 1.0)) return fail("c must be at least 1");

  rep.b_ratio = upper_ratio(f, b, opts).ratio;
  if (rep.b_ratio > c1 + tol.ratio) return fail("B does not satisfy P_f(c1)");

  for (std::size_t i = 0; i < n; ++i) {
    const double fb = b.values[i];
    const double fe = e.values[i];
    if (fe / c > fb * (1.0 + tol.bounds) || fb > c * fe * (1.0 + tol.bounds)) {
      return fail("f(b_" + std::to_string(i + 1) + ") is not within a factor c of f(e_" +
                  std::to_string(i + 1) + ")");
    }
  }

  double alpha = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double x = std::abs(inner(e.vectors[i], b.vectors[j]));
      const double y = std::abs(inner(b.vectors[i], e.vectors[j]));
      if (x <= tol.zero) {
        if (y > tol.zero) {
          return fail("<e_" + std::to_string(i + 1) + ",b_" + std::to_string(j + 1) +
                      "> vanishes while <b_" + std::to_string(i + 1) + ",e_" +
                      std::to_string(j + 1) + "> does not");
        }
        continue;
      }
      alpha = std::max(alpha, y / x);
    }
  }
  rep.premises_ok = true;
  rep.alpha = alpha;
  rep.constant = alpha * c * c * c1;
  rep.conclusion = check_Pf(f, e, rep.constant, opts);
  return rep;
}

}  // namespace extremal
