#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toughspec/graph.hpp"

namespace toughspec {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Small square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int k) : k_(k), cells_(static_cast<std::size_t>(k) * k) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(int k);

  int rows() const { return k_; }
  Rational& operator()(int i, int j) { return cells_[static_cast<std::size_t>(i) * k_ + j]; }
  const Rational& operator()(int i, int j) const {
    return cells_[static_cast<std::size_t>(i) * k_ + j];
  }
  Rational trace() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int k_ = 0;
  std::vector<Rational> cells_;
};

/// Quotient of the adjacency matrix with respect to a vertex partition:
/// cell (i, j) is the average number of class-j neighbors over class i.
struct QuotientMatrix {
  RationalMatrix cells;
  std::vector<VertexSet> partition;
  /// Every vertex of class i has exactly cells(i, j) neighbors in class j.
  bool equitable = false;
};

/// Throws GraphError if the classes are empty, overlap, or miss a vertex.
QuotientMatrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& partition);

/// Monic polynomial with exact rational coefficients, lowest degree first.
struct CharPoly {
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational operator()(const Rational& x) const;
  long double operator()(long double x) const;
  long double derivative(long double x) const;
  std::string to_string() const;
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// det(xI - M) by the Faddeev-LeVerrier recurrence in exact arithmetic.
CharPoly char_poly(const RationalMatrix& m);
CharPoly char_poly(const QuotientMatrix& q);

/// Largest real root, located by exact-sign bisection on a downward scan from
/// max(hint_hi, Fujiwara root bound) toward hint_lo and polished by Newton steps.
/// Throws std::domain_error when no sign change is found in that range.
double largest_real_root(const CharPoly& p, double hint_lo, double hint_hi);

}  // namespace toughspec
