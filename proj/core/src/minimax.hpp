#pragma once

// Minimax of quadratic pieces g_r(y) = (p_r.y)^2 + (q_r.y)^2 in R^d, over the
// unit sphere or over an affine hyperplane a.y = 1. A complex row u in C^k
// becomes p = (Re u, Im u) and q = (-Im u, Re u) interleaved, so that
// g_r = |<x, u>|^2 for x = y_0 + i y_1, ...; real rows have q = 0.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

namespace extremal::detail {

class QuadMinimax {
 public:
  enum class Domain { Sphere, Hyperplane };

  QuadMinimax() = default;

  // rows: m rows of k coefficients; <x, u_r> = sum_j x_j conj(u_rj).
  static QuadMinimax from_complex(std::size_t m, std::size_t k, const std::complex<double>* rows) {
    QuadMinimax s;
    s.m_ = m;
    s.d_ = 2 * k;
    s.p_.assign(m * s.d_, 0.0);
    s.q_.assign(m * s.d_, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t j = 0; j < k; ++j) {
        const auto u = rows[r * k + j];
        s.p_[r * s.d_ + 2 * j] = u.real();
        s.p_[r * s.d_ + 2 * j + 1] = u.imag();
        s.q_[r * s.d_ + 2 * j] = -u.imag();
        s.q_[r * s.d_ + 2 * j + 1] = u.real();
      }
    }
    s.init_scale();
    return s;
  }

  static QuadMinimax from_real(std::size_t m, std::size_t k, const double* rows) {
    QuadMinimax s;
    s.m_ = m;
    s.d_ = k;
    s.p_.assign(rows, rows + m * k);
    s.q_.assign(m * k, 0.0);
    s.real_ = true;
    s.init_scale();
    return s;
  }

  std::size_t dim() const { return d_; }

  std::vector<double> pieces(const std::vector<double>& y) const {
    std::vector<double> g(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      const double a = dot(&p_[r * d_], y.data());
      const double b = real_ ? 0.0 : dot(&q_[r * d_], y.data());
      g[r] = a * a + b * b;
    }
    return g;
  }

  double top(const std::vector<double>& y) const {
    const auto g = pieces(y);
    return *std::max_element(g.begin(), g.end());
  }

  // SQP-type descent. Each step minimizes max_r (g_r + G_r.s) + s.H.s / 2
  // over the tangent space, with G_r the tangential gradients and H the
  // tangential Hessian of the Lagrangian (previous multipliers) shifted by
  // rho I; the subproblem is solved through its dual, a concave QP on the
  // simplex. Returns max_r g_r at the final y. For the hyperplane, y must
  // satisfy a.y = 1 on entry.
  double descend(std::vector<double>& y, Domain dom, const std::vector<double>& a = {},
                 std::size_t max_steps = 200) const {
    const std::size_t d = d_;
    std::vector<double> normal;
    if (dom == Domain::Sphere) {
      if (!normalize(y)) return top(y);
    } else {
      normal = a;
      if (!normalize(normal)) return top(y);
    }
    std::vector<double> g = pieces(y);
    double cur = *std::max_element(g.begin(), g.end());
    double rho = 1e-14 * scale_;
    std::vector<double> grads(m_ * d), lam(m_, 0.0), dir(d), trial(d), hmat(d * d),
        hinv_g(m_ * d), q(m_ * m_), lag(d * d), nl, evec, eval;
    lam[argmax(g)] = 1.0;
    for (std::size_t step = 0; step < max_steps; ++step) {
      const std::vector<double>& n = dom == Domain::Sphere ? y : normal;
      for (std::size_t r = 0; r < m_; ++r) {
        const double* p = &p_[r * d];
        const double* qq = &q_[r * d];
        const double pa = dot(p, y.data());
        const double qa = real_ ? 0.0 : dot(qq, y.data());
        double* gr = &grads[r * d];
        for (std::size_t i = 0; i < d; ++i) gr[i] = 2.0 * (pa * p[i] + qa * qq[i]);
        const double radial = dot(gr, n.data());
        for (std::size_t i = 0; i < d; ++i) gr[i] -= radial * n[i];
      }
      double t = 0.0;
      std::fill(lag.begin(), lag.end(), 0.0);
      for (std::size_t r = 0; r < m_; ++r) {
        if (lam[r] == 0.0) continue;
        t += lam[r] * g[r];
        const double* p = &p_[r * d];
        const double* qq = &q_[r * d];
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = 0; j < d; ++j) {
            lag[i * d + j] += 2.0 * lam[r] * (p[i] * p[j] + qq[i] * qq[j]);
          }
        }
      }
      if (dom == Domain::Sphere) {
        for (std::size_t i = 0; i < d; ++i) lag[i * d + i] -= 2.0 * t;
      }
      project_tangent(lag, n);
      // Model Hessian: lag with its eigenvalues replaced by their absolute
      // values, floored relative to the largest.
      std::vector<double> model_h = lag;
      sym_eigen(model_h, evec, eval, d);
      double emax = 0.0;
      for (double e : eval) emax = std::max(emax, std::abs(e));
      const double floor = std::max(1e-10 * emax, 1e-300);
      std::fill(model_h.begin(), model_h.end(), 0.0);
      for (std::size_t k = 0; k < d; ++k) {
        const double e = std::max(std::abs(eval[k]), floor);
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = 0; j < d; ++j) model_h[i * d + j] += e * evec[i * d + k] * evec[j * d + k];
        }
      }

      bool accepted = false;
      for (int tries = 0; tries < 60 && !accepted; ++tries) {
        hmat = model_h;
        for (std::size_t i = 0; i < d; ++i) hmat[i * d + i] += rho;
        if (!cholesky(hmat, d)) {
          rho = std::max(4.0 * rho, 1e-12 * scale_);
          continue;
        }
        for (std::size_t r = 0; r < m_; ++r) {
          std::copy(&grads[r * d], &grads[r * d] + d, &hinv_g[r * d]);
          cholesky_apply(hmat, &hinv_g[r * d], d);
        }
        for (std::size_t r = 0; r < m_; ++r) {
          for (std::size_t c = 0; c <= r; ++c) {
            const double v = dot(&grads[r * d], &hinv_g[c * d]);
            q[r * m_ + c] = q[c * m_ + r] = v;
          }
        }
        dual_qp(g, cur, q, nl);
        std::fill(dir.begin(), dir.end(), 0.0);
        for (std::size_t r = 0; r < m_; ++r) {
          if (nl[r] == 0.0) continue;
          for (std::size_t i = 0; i < d; ++i) dir[i] -= nl[r] * hinv_g[r * d + i];
        }
        double model = -std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < m_; ++r) model = std::max(model, g[r] + dot(&grads[r * d], dir.data()));
        double curv = 0.0;
        for (std::size_t i = 0; i < d; ++i) curv += dir[i] * dot(&lag[i * d], dir.data());
        const double predicted = cur - model - 0.5 * curv;
        if (!(predicted > 1e-16 * cur)) return cur;
        for (std::size_t i = 0; i < d; ++i) trial[i] = y[i] + dir[i];
        if (dom == Domain::Sphere && !normalize(trial)) return cur;
        const auto gt = pieces(trial);
        const double tt = *std::max_element(gt.begin(), gt.end());
        if (cur - tt >= 0.1 * predicted) {
          y = trial;
          g = gt;
          cur = tt;
          lam = nl;
          rho = std::max(rho * 0.25, 1e-14 * scale_);
          accepted = true;
        } else {
          rho = std::max(4.0 * rho, 1e-12 * scale_);
        }
      }
      if (!accepted) break;
    }
    return cur;
  }

  // Sphere only: Levenberg-Marquardt on the equalized stationarity system
  //   sum_A lam_a P_a y = t y,  g_a(y) = t (a in A),  |y| = 1,  sum lam = 1
  // for nested active sets A around y. Replaces y when max g drops.
  void polish_sphere(std::vector<double>& y) const {
    if (!normalize(y)) return;
    const auto g = pieces(y);
    const double best0 = *std::max_element(g.begin(), g.end());
    double best = best0;
    std::vector<std::size_t> last;
    for (double rel : {1e-1, 1e-2, 1e-3, 1e-4, 1e-6, 1e-8}) {
      std::vector<std::size_t> act;
      for (std::size_t r = 0; r < m_; ++r) {
        if (g[r] >= best0 * (1.0 - rel)) act.push_back(r);
      }
      if (act == last || act.size() >= d_) continue;
      last = act;
      std::vector<double> z = y;
      if (!kkt_solve(act, z) || !normalize(z)) continue;
      const double v = top(z);
      if (v < best) {
        best = v;
        y = std::move(z);
      }
    }
  }

  static bool normalize(std::vector<double>& y) {
    double len = 0.0;
    for (double t : y) len += t * t;
    len = std::sqrt(len);
    if (!(len > 0.0) || !std::isfinite(len)) return false;
    for (double& t : y) t /= len;
    return true;
  }

 private:
  void init_scale() {
    scale_ = 0.0;
    for (std::size_t r = 0; r < m_; ++r) {
      scale_ = std::max(scale_, 2.0 * dot(&p_[r * d_], &p_[r * d_]));
    }
    if (!(scale_ > 0.0)) scale_ = 1.0;
  }

  double dot(const double* a, const double* b) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < d_; ++i) acc += a[i] * b[i];
    return acc;
  }

  static std::size_t argmax(const std::vector<double>& g) {
    return static_cast<std::size_t>(std::max_element(g.begin(), g.end()) - g.begin());
  }

  // argmax over the simplex of sum lam_r (g_r - top) - lam.Q.lam / 2 by a
  // primal active-set method.
  void dual_qp(const std::vector<double>& g, double top, const std::vector<double>& q,
               std::vector<double>& lam) const {
    std::vector<double> b(m_);
    double trace = 0.0;
    for (std::size_t r = 0; r < m_; ++r) {
      b[r] = g[r] - top;
      trace += q[r * m_ + r];
    }
    const double ridge = 1e-13 * std::max(trace, 1e-300);
    std::vector<std::size_t> support{argmax(g)};
    lam.assign(m_, 0.0);
    lam[support[0]] = 1.0;
    std::vector<double> grad(m_);
    for (std::size_t major = 0; major < 4 * m_ + 20; ++major) {
      for (std::size_t r = 0; r < m_; ++r) {
        double acc = -b[r];
        for (std::size_t s : support) acc += q[r * m_ + s] * lam[s];
        grad[r] = acc;
      }
      double nu = 0.0;
      for (std::size_t s : support) nu += lam[s] * grad[s];
      std::size_t enter = m_;
      double worst = nu - 1e-14 * (std::abs(nu) + std::sqrt(trace) + std::abs(top));
      for (std::size_t r = 0; r < m_; ++r) {
        if (lam[r] == 0.0 && grad[r] < worst &&
            std::find(support.begin(), support.end(), r) == support.end()) {
          worst = grad[r];
          enter = r;
        }
      }
      if (enter == m_) return;
      support.push_back(enter);
      // Minor cycle: affine minimizer on the support, clipped back into the simplex.
      for (std::size_t minor = 0; minor < support.size() + 1; ++minor) {
        const std::size_t k = support.size();
        std::vector<double> a((k + 1) * (k + 1), 0.0), rhs(k + 1);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) a[i * (k + 1) + j] = q[support[i] * m_ + support[j]];
          a[i * (k + 1) + i] += ridge;
          a[i * (k + 1) + k] = 1.0;
          a[k * (k + 1) + i] = 1.0;
          rhs[i] = b[support[i]];
        }
        rhs[k] = 1.0;
        if (!gauss_solve(a, rhs, k + 1)) return steepest(g, lam);
        double theta = 1.0;
        for (std::size_t i = 0; i < k; ++i) {
          const double cur = lam[support[i]];
          if (rhs[i] < 0.0 && cur - rhs[i] > 0.0) theta = std::min(theta, cur / (cur - rhs[i]));
        }
        for (std::size_t i = 0; i < k; ++i) {
          double& l = lam[support[i]];
          l += theta * (rhs[i] - l);
          if (l < 1e-300) l = 0.0;
        }
        if (theta == 1.0) break;
        std::erase_if(support, [&lam](std::size_t s) { return lam[s] <= 0.0; });
      }
      std::erase_if(support, [&lam](std::size_t s) { return lam[s] <= 0.0; });
      double sum = 0.0;
      for (std::size_t s : support) sum += lam[s];
      if (!(sum > 0.0)) return steepest(g, lam);
      for (std::size_t s : support) lam[s] /= sum;
    }
  }

  void steepest(const std::vector<double>& g, std::vector<double>& lam) const {
    lam.assign(m_, 0.0);
    lam[argmax(g)] = 1.0;
  }

  // h <- (I - n n^T) h (I - n n^T) for a unit n.
  static void project_tangent(std::vector<double>& h, const std::vector<double>& n) {
    const std::size_t d = n.size();
    std::vector<double> hn(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) hn[i] += h[i * d + j] * n[j];
    }
    double nhn = 0.0;
    for (std::size_t i = 0; i < d; ++i) nhn += n[i] * hn[i];
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        h[i * d + j] += -hn[i] * n[j] - n[i] * hn[j] + nhn * n[i] * n[j];
      }
    }
  }

  std::vector<double> kkt_residual(const std::vector<std::size_t>& act,
                                   const std::vector<double>& z) const {
    const std::size_t na = act.size();
    const double t = z[d_ + na];
    std::vector<double> res(d_ + na + 2, 0.0);
    double lsum = 0.0;
    for (std::size_t i = 0; i < na; ++i) {
      const double* p = &p_[act[i] * d_];
      const double* q = &q_[act[i] * d_];
      const double a = dot(p, z.data()), b = dot(q, z.data()), lam = z[d_ + i];
      for (std::size_t j = 0; j < d_; ++j) res[j] += lam * (a * p[j] + b * q[j]);
      res[d_ + i] = a * a + b * b - t;
      lsum += lam;
    }
    double yy = 0.0;
    for (std::size_t j = 0; j < d_; ++j) {
      res[j] -= t * z[j];
      yy += z[j] * z[j];
    }
    res[d_ + na] = yy - 1.0;
    res[d_ + na + 1] = lsum - 1.0;
    return res;
  }

  bool kkt_solve(const std::vector<std::size_t>& act, std::vector<double>& y) const {
    const std::size_t na = act.size();
    const std::size_t nu = d_ + na + 1;
    const std::size_t ne = d_ + na + 2;
    std::vector<double> z(y);
    const auto g0 = pieces(y);
    double t0 = 0.0;
    for (std::size_t a : act) t0 = std::max(t0, g0[a]);
    for (std::size_t i = 0; i < na; ++i) z.push_back(1.0 / static_cast<double>(na));
    z.push_back(t0);
    const double scale = std::max(t0, 1e-300);
    const auto sq = [](const std::vector<double>& v) {
      double acc = 0.0;
      for (double x : v) acc += x * x;
      return acc;
    };
    auto res = kkt_residual(act, z);
    double cost = sq(res);
    double mu = 1e-3;
    std::vector<double> jac(ne * nu), jtj(nu * nu), rhs(nu);
    for (int it = 0; it < 100 && cost > 1e-30 * scale * scale; ++it) {
      std::fill(jac.begin(), jac.end(), 0.0);
      const double t = z[d_ + na];
      for (std::size_t i = 0; i < na; ++i) {
        const double* p = &p_[act[i] * d_];
        const double* q = &q_[act[i] * d_];
        const double a = dot(p, z.data()), b = dot(q, z.data()), lam = z[d_ + i];
        for (std::size_t r = 0; r < d_; ++r) {
          for (std::size_t c = 0; c < d_; ++c) jac[r * nu + c] += lam * (p[r] * p[c] + q[r] * q[c]);
          jac[r * nu + d_ + i] = a * p[r] + b * q[r];
          jac[(d_ + i) * nu + r] = 2.0 * (a * p[r] + b * q[r]);
        }
        jac[(d_ + i) * nu + d_ + na] = -1.0;
        jac[(d_ + na + 1) * nu + d_ + i] = 1.0;
      }
      for (std::size_t r = 0; r < d_; ++r) {
        jac[r * nu + r] -= t;
        jac[r * nu + d_ + na] = -z[r];
        jac[(d_ + na) * nu + r] = 2.0 * z[r];
      }
      for (std::size_t a = 0; a < nu; ++a) {
        double acc = 0.0;
        for (std::size_t e = 0; e < ne; ++e) acc += jac[e * nu + a] * res[e];
        rhs[a] = -acc;
        for (std::size_t b = 0; b <= a; ++b) {
          double s = 0.0;
          for (std::size_t e = 0; e < ne; ++e) s += jac[e * nu + a] * jac[e * nu + b];
          jtj[a * nu + b] = jtj[b * nu + a] = s;
        }
      }
      bool stepped = false;
      for (int tries = 0; tries < 30 && !stepped; ++tries) {
        std::vector<double> mat = jtj;
        for (std::size_t a = 0; a < nu; ++a) mat[a * nu + a] += mu * std::max(jtj[a * nu + a], 1e-12);
        std::vector<double> delta = rhs;
        if (!cholesky(mat, nu)) {
          mu *= 10.0;
          continue;
        }
        cholesky_apply(mat, delta.data(), nu);
        std::vector<double> trial = z;
        for (std::size_t a = 0; a < nu; ++a) trial[a] += delta[a];
        auto tres = kkt_residual(act, trial);
        const double tcost = sq(tres);
        if (std::isfinite(tcost) && tcost < cost) {
          z = std::move(trial);
          res = std::move(tres);
          cost = tcost;
          mu = std::max(mu / 10.0, 1e-15);
          stepped = true;
        } else {
          mu *= 10.0;
        }
      }
      if (!stepped) break;
    }
    if (!(cost <= 1e-20 * scale * scale)) return false;
    y.assign(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(d_));
    return true;
  }

  // In-place lower Cholesky factor; false when not positive definite.
  // Cyclic Jacobi: a (symmetric, destroyed) -> eigenvalues in val, columns of vec.
  static void sym_eigen(std::vector<double>& a, std::vector<double>& vec, std::vector<double>& val,
                        std::size_t n) {
    vec.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) vec[i * n + i] = 1.0;
    for (int sweep = 0; sweep < 60; ++sweep) {
      double off = 0.0, diag = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        diag += a[i * n + i] * a[i * n + i];
        for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
      }
      if (off <= 1e-30 * diag || off == 0.0) break;
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          const double apq = a[p * n + q];
          if (apq == 0.0) continue;
          const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
          const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
          for (std::size_t k = 0; k < n; ++k) {
            const double akp = a[k * n + p], akq = a[k * n + q];
            a[k * n + p] = c * akp - s * akq;
            a[k * n + q] = s * akp + c * akq;
          }
          for (std::size_t k = 0; k < n; ++k) {
            const double apk = a[p * n + k], aqk = a[q * n + k];
            a[p * n + k] = c * apk - s * aqk;
            a[q * n + k] = s * apk + c * aqk;
          }
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = vec[k * n + p], vkq = vec[k * n + q];
            vec[k * n + p] = c * vkp - s * vkq;
            vec[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
    val.resize(n);
    for (std::size_t i = 0; i < n; ++i) val[i] = a[i * n + i];
  }

  static bool cholesky(std::vector<double>& a, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = a[j * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= a[j * n + k] * a[j * n + k];
      if (!(s > 0.0)) return false;
      const double l = std::sqrt(s);
      a[j * n + j] = l;
      for (std::size_t i = j + 1; i < n; ++i) {
        double t = a[i * n + j];
        for (std::size_t k = 0; k < j; ++k) t -= a[i * n + k] * a[j * n + k];
        a[i * n + j] = t / l;
      }
    }
    return true;
  }

  static void cholesky_apply(const std::vector<double>& l, double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      double t = b[i];
      for (std::size_t k = 0; k < i; ++k) t -= l[i * n + k] * b[k];
      b[i] = t / l[i * n + i];
    }
    for (std::size_t i = n; i-- > 0;) {
      double t = b[i];
      for (std::size_t k = i + 1; k < n; ++k) t -= l[k * n + i] * b[k];
      b[i] = t / l[i * n + i];
    }
  }

  static bool gauss_solve(std::vector<double>& a, std::vector<double>& b, std::size_t n) {
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < n; ++r) {
        if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
      }
      if (!(std::abs(a[piv * n + c]) > 0.0)) return false;
      if (piv != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
        std::swap(b[c], b[piv]);
      }
      for (std::size_t r = c + 1; r < n; ++r) {
        const double f = a[r * n + c] / a[c * n + c];
        if (f == 0.0) continue;
        for (std::size_t j = c; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
        b[r] -= f * b[c];
      }
    }
    for (std::size_t r = n; r-- > 0;) {
      double acc = b[r];
      for (std::size_t j = r + 1; j < n; ++j) acc -= a[r * n + j] * b[j];
      b[r] = acc / a[r * n + r];
    }
    return std::all_of(b.begin(), b.end(), [](double x) { return std::isfinite(x); });
  }

  std::size_t m_ = 0;
  std::size_t d_ = 0;
  bool real_ = false;
  double scale_ = 1.0;
  std::vector<double> p_, q_;
};

}  // namespace extremal::detail
