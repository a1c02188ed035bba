#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "toughspec/graph.hpp"
#include "toughspec/jacobi.hpp"

namespace toughspec {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Scalar = double>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar = double>
struct SpectralResult {
  Scalar radius{0};
  std::size_t iterations = 0;
  /// Infinity norm of A x - radius x at termination (max over components).
  Scalar residual{0};
  /// Unit Perron vector; present only for connected graphs.
  std::optional<Vector<Scalar>> perron;
};

struct PowerOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 1'000'000;
  /// Iterate on A + shift I so that the -rho eigenvalue of a bipartite
  /// component does not cancel the Perron direction.
  double shift = 1.0;
};

namespace detail {

template <typename Scalar>
Eigen::SparseMatrix<Scalar> component_adjacency(const Graph& g, const VertexSet& vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  std::vector<Eigen::Triplet<Scalar>> entries;
  for (Vertex v : vertices)
    for (Vertex w : g.neighbors(v)) entries.emplace_back(local[v], local[w], Scalar(1));
  const auto k = static_cast<Eigen::Index>(vertices.size());
  Eigen::SparseMatrix<Scalar> a(k, k);
  a.setFromTriplets(entries.begin(), entries.end());
  return a;
}

}  // namespace detail

/// Largest adjacency eigenvalue by shifted power iteration from the all-ones
/// vector. The estimate is the Rayleigh quotient; iteration stops once the
/// residual infinity norm is at most `opts.tolerance`. Disconnected graphs are
/// handled per component and the maximum is reported.
template <typename Scalar = double>
SpectralResult<Scalar> spectral_radius(const Graph& g, const PowerOptions& opts = {}) {
  if (g.order() < 1) throw std::invalid_argument("spectral radius of the empty graph");
  if (!(opts.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  using std::sqrt;

  SpectralResult<Scalar> result;
  const auto comps = g.components();
  for (const auto& comp : comps) {
    if (comp.size() == 1) continue;
    const auto a = detail::component_adjacency<Scalar>(g, comp);
    Vector<Scalar> x = Vector<Scalar>::Ones(a.rows());
    x /= sqrt(Scalar(a.rows()));
    Vector<Scalar> ax(a.rows());
    Scalar rho(0), residual(0);
    std::size_t it = 0;
    for (;; ++it) {
      ax.noalias() = a * x;
      rho = x.dot(ax);
      residual = (ax - rho * x).template lpNorm<Eigen::Infinity>();
      if (residual <= Scalar(opts.tolerance)) break;
      if (it >= opts.max_iterations)
        throw ConvergenceError("power iteration did not reach tolerance within " +
                               std::to_string(opts.max_iterations) + " iterations");
      x = ax + Scalar(opts.shift) * x;
      x.normalize();
    }
    result.iterations = std::max(result.iterations, it);
    result.residual = std::max(result.residual, residual);
    result.radius = std::max(result.radius, rho);
    if (comps.size() == 1) result.perron = x;
  }
  if (comps.size() == 1 && g.order() == 1) result.perron = Vector<Scalar>::Ones(1);
  return result;
}

template <typename Scalar = double>
SpectralResult<Scalar> spectral_radius(const Graph& g, double tolerance) {
  PowerOptions opts;
  opts.tolerance = tolerance;
  return spectral_radius<Scalar>(g, opts);
}

/// All adjacency eigenvalues, nonincreasing, by cyclic Jacobi.
std::vector<double> full_spectrum(const Graph& g, int dense_cap = 1000);

/// Largest |lambda| after removing one copy of the largest eigenvalue.
double second_largest_absolute_eigenvalue(const Graph& g);

}  // namespace toughspec
