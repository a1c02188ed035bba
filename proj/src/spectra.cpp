#include "toughspec/spectra.hpp"

namespace toughspec {

std::vector<double> full_spectrum(const Graph& g, int dense_cap) {
  if (g.order() < 1) throw std::invalid_argument("spectrum of the empty graph");
  if (g.order() > dense_cap)
    throw std::invalid_argument("graph order " + std::to_string(g.order()) +
                                " exceeds the dense eigensolver cap " + std::to_string(dense_cap));
  const Vector<double> evals = jacobi_eigenvalues(g.adjacency_matrix<double>());
  return {evals.data(), evals.data() + evals.size()};
}

double second_largest_absolute_eigenvalue(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("need at least two vertices");
  const auto spectrum = full_spectrum(g);
  double lambda = 0;
  for (std::size_t i = 1; i < spectrum.size(); ++i) lambda = std::max(lambda, std::abs(spectrum[i]));
  return lambda;
}

}  // namespace toughspec
