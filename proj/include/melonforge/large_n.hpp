#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "melonforge/bubble.hpp"
#include "melonforge/rational.hpp"
#include "melonforge/series.hpp"

namespace melonforge {

struct Coupling {
  double t = 0;
  int num_vertices = 4;  // V_r, even
};

struct CovarianceSolution {
  double value = 1;
  double residual = 0;
  int iterations = 0;
};

/// Root of C = 1 + sum_r (V_r/2) t_r C^{V_r/2} reached by Newton from C = 1.
/// Throws OutsideBranch when the residual stops decreasing and NoConvergence
/// when `max_iterations` is exhausted (the message carries the last iterate).
CovarianceSolution solve_covariance(const std::vector<Coupling>& couplings, double tol = 1e-14,
                                    int max_iterations = 100);

/// Formal solution of the same equation, one variable t_r per entry of
/// `vertex_counts`, truncated at total degree `order`.
SeriesPoly covariance_series(const std::vector<int>& vertex_counts, int order);

struct GaussianLeading {
  std::uint64_t count = 0;  // number of dominant single-bubble pairings
  double value = 0;         // count * C^{V/2}
};

GaussianLeading gaussian_expectation_leading(const Bubble& b, double covariance, int cap = 9);

struct CrosscheckReport {
  int order = 0;
  int sign = 1;                      // series variable = sign * coupling
  std::vector<Rational> enumerated;  // (-1)^k (labeled dominant graphs) / k!
  std::vector<Rational> series;      // covariance coefficients
  std::optional<int> first_mismatch;
  bool agree() const { return !first_mismatch; }
};

/// Enumerates the connected 2-point graphs made of a marked two-vertex
/// bubble and k <= order copies of `b`, keeps those with delta = d, and
/// compares the labeled counts against covariance_series. Throws NotGm,
/// NotTotallyUnbalanced, CapExceeded.
CrosscheckReport universality_crosscheck(const Bubble& b, int order, int cap = 10);

}  // namespace melonforge
