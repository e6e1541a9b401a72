#pragma once

// Vertex enumeration for the real centrally symmetric polytope
//   P = { x in R^k : |<a_r, x>| <= 1 for every row a_r },
// i.e. the unit ball of a real finitely-generated norm.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "extremal/norms.hpp"

namespace extremal {

class SymmetricPolytope {
 public:
  /// `rows` is row-major, rows.size() == count * dim.
  SymmetricPolytope(std::size_t dim, std::vector<double> rows);
  /// Unit ball of a real norm. Throws InvalidArgument for a complex norm.
  static SymmetricPolytope unit_ball(const NormSpec& f);

  std::size_t dim() const { return dim_; }
  std::size_t rows() const { return rows_.size() / dim_; }
  std::span<const double> row(std::size_t r) const {
    return {rows_.data() + r * dim_, dim_};
  }

  /// max_r |<a_r, x>|, the gauge of x.
  double gauge(std::span<const double> x) const;

  /// Number of vertex candidates an exhaustive sweep would solve:
  /// C(rows, dim) * 2^(dim-1), saturating at UINT64_MAX.
  std::uint64_t candidate_count() const;

  struct Stats {
    std::uint64_t subsets = 0;
    std::uint64_t solves = 0;
    std::uint64_t feasible = 0;
  };

  /// Visits every vertex once per antipodal pair: for each dim-subset of
  /// rows with a nonsingular matrix and each sign pattern with a leading
  /// +1, solves A x = sigma and reports x when gauge(x) <= 1 + feas_tol.
  Stats for_each_vertex(double feas_tol,
                        const std::function<void(std::span<const double>)>& visit) const;

  /// Active-set step: ranks rows by |<a_r, x>| (rows within `activity_tol`
  /// of the gauge first), greedily picks dim independent ones and returns
  /// the vertex with the signs observed at x, if it is feasible.
  std::optional<std::vector<double>> vertex_near(std::span<const double> x,
                                                 double activity_tol,
                                                 double feas_tol) const;

  struct LinearMax {
    std::vector<double> x;
    double value = 0.0;
    std::size_t pivots = 0;
  };
  /// max <w, x> over the polytope by an edge walk from the origin: first
  /// to a vertex, then along improving edges (Bland's rule, so degenerate
  /// vertices cannot cycle). Throws SolverError when the polytope is
  /// unbounded in direction w or the walk does not terminate.
  LinearMax maximize_linear(std::span<const double> w) const;

 private:
  std::size_t dim_;
  std::vector<double> rows_;
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace extremal
