#include "toughspec/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace toughspec {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : RationalMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != k_) throw std::invalid_argument("matrix is not square");
    int j = 0;
    for (const auto& c : row) (*this)(i, j++) = c;
    ++i;
  }
}

RationalMatrix RationalMatrix::identity(int k) {
  RationalMatrix m(k);
  for (int i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < k_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.k_ != b.k_) throw std::invalid_argument("matrix size mismatch");
  RationalMatrix c(a.k_);
  for (int i = 0; i < a.k_; ++i)
    for (int l = 0; l < a.k_; ++l) {
      if (a(i, l) == 0) continue;
      for (int j = 0; j < a.k_; ++j) c(i, j) += a(i, l) * b(l, j);
    }
  return c;
}

QuotientMatrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& partition) {
  const int k = static_cast<int>(partition.size());
  std::vector<int> cls(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < k; ++i) {
    if (partition[i].empty()) throw GraphError("partition class " + std::to_string(i) + " is empty");
    for (Vertex v : partition[i]) {
      if (v < 0 || v >= g.order()) throw GraphError("partition vertex out of range");
      if (cls[v] != -1) throw GraphError("vertex " + std::to_string(v) + " is in two classes");
      cls[v] = i;
    }
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (cls[v] == -1) throw GraphError("vertex " + std::to_string(v) + " is in no class");

  QuotientMatrix q{RationalMatrix(k), partition, true};
  std::vector<long long> row(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    std::vector<long long> sums(static_cast<std::size_t>(k), 0), first;
    for (Vertex v : partition[i]) {
      std::fill(row.begin(), row.end(), 0);
      for (Vertex w : g.neighbors(v)) ++row[cls[w]];
      if (first.empty()) first = row;
      else if (row != first) q.equitable = false;
      for (int j = 0; j < k; ++j) sums[j] += row[j];
    }
    for (int j = 0; j < k; ++j)
      q.cells(i, j) = Rational(sums[j], static_cast<long long>(partition[i].size()));
  }
  return q;
}

Rational CharPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long double CharPoly::operator()(long double x) const {
  long double acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + it->convert_to<long double>();
  return acc;
}

long double CharPoly::derivative(long double x) const {
  long double acc = 0;
  for (int i = degree(); i >= 1; --i) acc = acc * x + i * coeffs[i].convert_to<long double>();
  return acc;
}

std::string CharPoly::to_string() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs[i];
    if (c == 0 && i != degree()) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    const bool unit = (mag == 1 && i > 0);
    if (!unit) out += mag.str();
    if (i > 0) out += std::string(unit ? "" : "*") + "x" + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out.empty() ? "0" : out;
}

CharPoly char_poly(const RationalMatrix& a) {
  const int n = a.rows();
  CharPoly p;
  p.coeffs.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  p.coeffs[n] = 1;
  RationalMatrix m(n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    for (int i = 0; i < n; ++i) m(i, i) += p.coeffs[n - k + 1];
    p.coeffs[n - k] = -(a * m).trace() / k;
  }
  return p;
}

CharPoly char_poly(const QuotientMatrix& q) { return char_poly(q.cells); }

double largest_real_root(const CharPoly& p, double hint_lo, double hint_hi) {
  const int d = p.degree();
  if (d < 1) throw std::domain_error("constant polynomial has no roots");
  if (p.coeffs[d] != 1) throw std::domain_error("polynomial is not monic");
  if (d == 1) return (-p.coeffs[0]).convert_to<double>();

  // Fujiwara: every root satisfies |x| <= 2 max_k |a_{d-k}|^{1/k}.
  long double bound = 0;
  for (int k = 1; k <= d; ++k) {
    const long double a = std::fabs(p.coeffs[d - k].convert_to<long double>());
    bound = std::max(bound, std::pow(a, 1.0L / k));
  }
  const long double upper = std::max<long double>(hint_hi, 2 * bound + 1);
  const long double lower = std::min<long double>(hint_lo, upper);

  constexpr int kSteps = 4096;
  const long double step = (upper - lower) / kSteps;
  auto sign = [&](double x) { return p(Rational(x)).sign(); };

  double hi = static_cast<double>(upper), lo = hi;
  bool found = false;
  for (int s = 1; s <= kSteps; ++s) {
    const double x = static_cast<double>(upper - s * step);
    if (p(static_cast<long double>(x)) <= 0 && sign(x) <= 0) {
      lo = x;
      found = true;
      break;
    }
    hi = x;
  }
  if (!found) throw std::domain_error("no sign change of the polynomial in the scanned range");
  if (sign(lo) == 0) return lo;
  while (sign(hi) <= 0 && hi < upper) hi = static_cast<double>(std::min<long double>(hi + step, upper));

  // Invariant: p(lo) < 0 < p(hi), exact signs.
  for (int it = 0; it < 200; ++it) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const int s = sign(mid);
    if (s == 0) return mid;
    (s < 0 ? lo : hi) = mid;
  }
  long double x = lo + (static_cast<long double>(hi) - lo) / 2;
  for (int it = 0; it < 3; ++it) {
    const long double dp = p.derivative(x);
    if (dp == 0) break;
    const long double next = x - p(x) / dp;
    if (next < lo || next > hi) break;
    x = next;
  }
  return static_cast<double>(x);
}

}  // namespace toughspec
