#include "extremal/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "extremal/error.hpp"

namespace extremal {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (acc > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    acc = acc * num / i;
  }
  return acc;
}

namespace {

// LU with partial pivoting for the k x k systems of the sweep, reused across
// sign patterns.
class SmallLu {
 public:
  bool factor(std::vector<double> a, std::size_t n) {
    n_ = n;
    lu_ = std::move(a);
    perm_.resize(n);
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    double amax = 0.0;
    for (double x : lu_) amax = std::max(amax, std::abs(x));
    if (amax == 0.0) return false;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < n; ++r) {
        if (std::abs(lu_[r * n + col]) > std::abs(lu_[piv * n + col])) piv = r;
      }
      if (std::abs(lu_[piv * n + col]) <= 1e-12 * amax) return false;
      if (piv != col) {
        for (std::size_t k = 0; k < n; ++k) std::swap(lu_[col * n + k], lu_[piv * n + k]);
        std::swap(perm_[col], perm_[piv]);
      }
      for (std::size_t r = col + 1; r < n; ++r) {
        const double m = lu_[r * n + col] / lu_[col * n + col];
        lu_[r * n + col] = m;
        for (std::size_t k = col + 1; k < n; ++k) lu_[r * n + k] -= m * lu_[col * n + k];
      }
    }
    return true;
  }

  void solve(std::span<const double> b, std::span<double> x) const {
    const std::size_t n = n_;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = b[perm_[i]];
      for (std::size_t k = 0; k < i; ++k) acc -= lu_[i * n + k] * x[k];
      x[i] = acc;
    }
    for (std::size_t i = n; i-- > 0;) {
      double acc = x[i];
      for (std::size_t k = i + 1; k < n; ++k) acc -= lu_[i * n + k] * x[k];
      x[i] = acc / lu_[i * n + i];
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> lu_;
  std::vector<std::size_t> perm_;
};

// Solve plus one step of iterative refinement against the original matrix.
void refined_solve(const SmallLu& lu, std::span<const double> a, std::span<const double> b,
                   std::span<double> x, std::size_t n) {
  lu.solve(b, x);
  std::vector<double> r(n), d(n);
  for (std::size_t i = 0; i < n; ++i) {
    long double acc = b[i];
    for (std::size_t k = 0; k < n; ++k) acc -= static_cast<long double>(a[i * n + k]) * x[k];
    r[i] = static_cast<double>(acc);
  }
  lu.solve(r, d);
  for (std::size_t i = 0; i < n; ++i) x[i] += d[i];
}

}  // namespace

SymmetricPolytope::SymmetricPolytope(std::size_t dim, std::vector<double> rows)
    : dim_(dim), rows_(std::move(rows)) {
  if (dim_ == 0) throw InvalidArgument("polytope dimension must be at least 1");
  if (rows_.size() % dim_ != 0) throw InvalidArgument("polytope rows are ragged");
}

SymmetricPolytope SymmetricPolytope::unit_ball(const NormSpec& f) {
  if (f.field() != ScalarField::Real) {
    throw InvalidArgument("vertex enumeration needs a real norm");
  }
  std::vector<double> rows;
  rows.reserve(f.support().size() * f.dim());
  for (const auto& u : f.support()) {
    for (const auto& x : u.coords()) rows.push_back(x.real());
  }
  return SymmetricPolytope(f.dim(), std::move(rows));
}

double SymmetricPolytope::gauge(std::span<const double> x) const {
  double best = 0.0;
  for (std::size_t r = 0; r < rows(); ++r) {
    const auto a = row(r);
    double acc = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) acc += a[j] * x[j];
    best = std::max(best, std::abs(acc));
  }
  return best;
}

std::uint64_t SymmetricPolytope::candidate_count() const {
  const std::uint64_t subsets = binomial(rows(), dim_);
  const std::uint64_t signs = std::uint64_t{1} << (dim_ - 1);
  if (subsets > std::numeric_limits<std::uint64_t>::max() / signs) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return subsets * signs;
}

SymmetricPolytope::Stats SymmetricPolytope::for_each_vertex(
    double feas_tol, const std::function<void(std::span<const double>)>& visit) const {
  Stats stats;
  const std::size_t k = dim_;
  const std::size_t m = rows();
  if (m < k) return stats;

  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<double> a(k * k), sigma(k), x(k);
  SmallLu lu;
  const std::size_t patterns = std::size_t{1} << (k - 1);

  for (;;) {
    ++stats.subsets;
    for (std::size_t i = 0; i < k; ++i) {
      const auto src = row(idx[i]);
      std::copy(src.begin(), src.end(), a.begin() + static_cast<std::ptrdiff_t>(i * k));
    }
    if (lu.factor(a, k)) {
      for (std::size_t mask = 0; mask < patterns; ++mask) {
        sigma[0] = 1.0;
        for (std::size_t i = 1; i < k; ++i) sigma[i] = (mask >> (i - 1)) & 1U ? -1.0 : 1.0;
        refined_solve(lu, a, sigma, x, k);
        ++stats.solves;
        if (gauge(x) <= 1.0 + feas_tol) {
          ++stats.feasible;
          visit(x);
        }
      }
    }
    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return stats;
}

std::optional<std::vector<double>> SymmetricPolytope::vertex_near(
    std::span<const double> x, double activity_tol, double feas_tol) const {
  const std::size_t k = dim_;
  const std::size_t m = rows();
  std::vector<double> z(m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto a = row(r);
    double acc = 0.0;
    for (std::size_t j = 0; j < k; ++j) acc += a[j] * x[j];
    z[r] = acc;
  }
  const double g = *std::max_element(z.begin(), z.end(), [](double p, double q) {
    return std::abs(p) < std::abs(q);
  });
  const double level = std::abs(g) * (1.0 - activity_tol);

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
    const bool ap = std::abs(z[p]) >= level;
    const bool aq = std::abs(z[q]) >= level;
    if (ap != aq) return ap;
    if (ap) return false;  // keep index order inside the active set
    return std::abs(z[p]) > std::abs(z[q]);
  });

  // Greedy independent selection via Gram-Schmidt on the candidate rows.
  std::vector<std::vector<double>> q;
  std::vector<std::size_t> chosen;
  for (std::size_t r : order) {
    if (chosen.size() == k) break;
    const auto a = row(r);
    std::vector<double> v(a.begin(), a.end());
    double scale = 0.0;
    for (double t : v) scale += t * t;
    scale = std::sqrt(scale);
    if (scale == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& qj : q) {
        double c = 0.0;
        for (std::size_t j = 0; j < k; ++j) c += v[j] * qj[j];
        for (std::size_t j = 0; j < k; ++j) v[j] -= c * qj[j];
      }
    }
    double len = 0.0;
    for (double t : v) len += t * t;
    len = std::sqrt(len);
    if (len <= 1e-9 * scale) continue;
    for (double& t : v) t /= len;
    q.push_back(std::move(v));
    chosen.push_back(r);
  }
  if (chosen.size() < k) return std::nullopt;

  std::vector<double> a(k * k), sigma(k), out(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto src = row(chosen[i]);
    std::copy(src.begin(), src.end(), a.begin() + static_cast<std::ptrdiff_t>(i * k));
    sigma[i] = z[chosen[i]] < 0.0 ? -1.0 : 1.0;
  }
  SmallLu lu;
  if (!lu.factor(a, k)) return std::nullopt;
  refined_solve(lu, a, sigma, out, k);
  if (!(gauge(out) <= 1.0 + feas_tol)) return std::nullopt;
  return out;
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) acc += a[j] * b[j];
  return acc;
}

double length(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace

// Constraint id c stands for sign(c) * <a_{c/2}, x> <= 1, sign(c) = +1 for
// even c and -1 for odd c.
SymmetricPolytope::LinearMax SymmetricPolytope::maximize_linear(std::span<const double> w) const {
  const std::size_t k = dim_;
  const std::size_t ids = 2 * rows();
  const auto sgn = [](std::size_t c) { return c % 2 == 0 ? 1.0 : -1.0; };
  const auto slope = [&](std::size_t c, std::span<const double> d) {
    return sgn(c) * dot(row(c / 2), d);
  };
  LinearMax out;
  std::vector<double> x(k, 0.0), d(k);
  std::vector<std::size_t> active;
  std::vector<bool> is_active(ids, false);

  // Step to the first constraint hit along d; ties go to the lowest id.
  const auto step = [&](std::span<const double> dir) -> std::optional<std::size_t> {
    const double dlen = length(dir);
    std::optional<std::size_t> hit;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < ids; ++c) {
      if (is_active[c]) continue;
      const double sl = slope(c, dir);
      if (sl <= 1e-12 * length(row(c / 2)) * dlen) continue;
      const double t = std::max(0.0, (1.0 - sgn(c) * dot(row(c / 2), x)) / sl);
      if (t < best * (1.0 - 1e-12) || !hit) {
        best = t;
        hit = c;
      }
    }
    if (hit) {
      for (std::size_t j = 0; j < k; ++j) x[j] += best * dir[j];
    }
    return hit;
  };

  // Phase one: walk from the origin to a vertex without losing objective.
  std::vector<std::vector<double>> q;
  const double wlen = length(w);
  while (active.size() < k) {
    const auto project_out = [&](std::vector<double> v) {
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& qj : q) {
          const double c = dot(v, qj);
          for (std::size_t j = 0; j < k; ++j) v[j] -= c * qj[j];
        }
      }
      return v;
    };
    d = project_out(std::vector<double>(w.begin(), w.end()));
    if (length(d) <= 1e-12 * wlen || wlen == 0.0) {
      double best = -1.0;
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<double> e(k, 0.0);
        e[i] = 1.0;
        auto r = project_out(e);
        if (length(r) > best * (1.0 + 1e-12)) {
          best = length(r);
          d = std::move(r);
        }
      }
    }
    const auto hit = step(d);
    if (!hit) throw SolverError("polytope is unbounded");
    active.push_back(*hit);
    is_active[*hit] = true;
    std::vector<double> a(row(*hit / 2).begin(), row(*hit / 2).end());
    a = project_out(a);
    const double len = length(a);
    for (double& t : a) t /= len;
    q.push_back(std::move(a));
  }

  // Phase two: simplex pivots between adjacent vertices.
  std::vector<double> m(k * k), mt(k * k), lambda(k), ones(k, 1.0), rhs(k);
  SmallLu lu, lut;
  const std::size_t max_pivots = 100000;
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) {
      const auto a = row(active[i] / 2);
      for (std::size_t j = 0; j < k; ++j) {
        m[i * k + j] = sgn(active[i]) * a[j];
        mt[j * k + i] = m[i * k + j];
      }
    }
    if (!lu.factor(m, k) || !lut.factor(mt, k)) throw SolverError("singular active set");
    refined_solve(lu, m, ones, x, k);
    refined_solve(lut, mt, w, lambda, k);
    double lmax = 0.0;
    for (double l : lambda) lmax = std::max(lmax, std::abs(l));
    std::optional<std::size_t> leave;
    for (std::size_t i = 0; i < k; ++i) {
      if (lambda[i] < -1e-12 * lmax && (!leave || active[i] < active[*leave])) leave = i;
    }
    if (!leave) break;
    if (++out.pivots > max_pivots) throw SolverError("edge walk did not terminate");
    std::fill(rhs.begin(), rhs.end(), 0.0);
    rhs[*leave] = -1.0;
    refined_solve(lu, m, rhs, d, k);
    const auto hit = step(d);
    if (!hit) throw SolverError("polytope is unbounded");
    is_active[active[*leave]] = false;
    active[*leave] = *hit;
    is_active[*hit] = true;
  }
  out.value = dot(w, x);
  out.x = std::move(x);
  return out;
}

}  // namespace extremal
