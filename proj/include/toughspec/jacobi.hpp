#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/Dense>

namespace toughspec {

struct JacobiOptions {
  int max_sweeps = 100;
  /// An off-diagonal entry is flushed to zero instead of rotated once it falls
  /// below `tolerance` times the mean magnitude of its two diagonal entries.
  double tolerance = 2.2e-16;
};

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// returned in nonincreasing order. Only the lower triangle is read.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> jacobi_eigenvalues(
    const Eigen::MatrixBase<Derived>& input, const JacobiOptions& opts = {}) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  using std::sqrt;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  if (input.rows() != input.cols()) throw std::invalid_argument("matrix is not square");
  const Eigen::Index n = input.rows();
  Matrix a = input.template selfadjointView<Eigen::Lower>();

  const Scalar eps(opts.tolerance);
  const Scalar floor = eps * eps * a.norm();

  bool rotated = true;
  int sweep = 0;
  for (; rotated && sweep < opts.max_sweeps; ++sweep) {
    rotated = false;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        if (abs(apq) <= floor || abs(apq) <= eps * (abs(a(p, p)) + abs(a(q, q))) / Scalar(2)) {
          a(p, q) = a(q, p) = Scalar(0);
          continue;
        }
        rotated = true;
        // Rotation annihilating a(p,q): t = tan(phi), the smaller root.
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) /
                         (abs(theta) + sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar s = t * c;

        auto colp = a.col(p);
        auto colq = a.col(q);
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = colp(k), akq = colq(k);
          colp(k) = c * akp - s * akq;
          colq(k) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = Scalar(0);
      }
    }
  }
  if (rotated) throw std::runtime_error("Jacobi iteration did not converge");

  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> evals = a.diagonal();
  std::sort(evals.data(), evals.data() + n, std::greater<Scalar>());
  return evals;
}

}  // namespace toughspec
