#include "melonforge/large_n.hpp"

#include <cmath>
#include <sstream>

#include "melonforge/error.hpp"
#include "melonforge/feynman.hpp"
#include "melonforge/gm.hpp"

namespace melonforge {

CovarianceSolution solve_covariance(const std::vector<Coupling>& couplings, double tol, int max_iterations) {
  for (const auto& k : couplings) {
    if (k.num_vertices < 2 || k.num_vertices % 2 != 0)
      throw Error(Errc::InvalidArgument, "bubble sizes must be even and at least 2");
  }
  auto eval = [&](double c) {
    double f = c - 1, df = 1;
    for (const auto& k : couplings) {
      const int h = k.num_vertices / 2;
      f -= h * k.t * std::pow(c, h);
      df -= h * h * k.t * std::pow(c, h - 1);
    }
    return std::pair{f, df};
  };
  CovarianceSolution sol;
  double c = 1;
  auto [f, df] = eval(c);
  double previous = std::abs(f);
  for (int it = 0; it < max_iterations; ++it) {
    sol.value = c;
    sol.residual = std::abs(f);
    sol.iterations = it;
    if (sol.residual <= tol) return sol;
    if (df == 0) throw Error(Errc::OutsideBranch, "vanishing derivative at C = " + std::to_string(c));
    c -= f / df;
    std::tie(f, df) = eval(c);
    if (!std::isfinite(f) || std::abs(f) > previous) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "residual grew from " << previous << " to " << std::abs(f) << " at C = " << c;
      throw Error(Errc::OutsideBranch, msg.str());
    }
    previous = std::abs(f);
  }
  std::ostringstream msg;
  msg.precision(17);
  msg << "last iterate C = " << c << ", residual " << std::abs(f);
  throw Error(Errc::NoConvergence, msg.str());
}

SeriesPoly covariance_series(const std::vector<int>& vertex_counts, int order) {
  const int n = static_cast<int>(vertex_counts.size());
  if (n == 0) return SeriesPoly::constant(1, order, 1);
  for (int v : vertex_counts) {
    if (v < 2 || v % 2 != 0) throw Error(Errc::InvalidArgument, "bubble sizes must be even and at least 2");
  }
  const SeriesPoly one = SeriesPoly::constant(n, order, 1);
  SeriesPoly c = one;
  // every pass fixes one more total degree
  for (int it = 0; it < order; ++it) {
    SeriesPoly next = one;
    for (int r = 0; r < n; ++r) {
      const int h = vertex_counts[r] / 2;
      next = next + SeriesPoly::variable(n, order, r) * c.pow(h) * Rational(h);
    }
    c = next;
  }
  return c;
}

GaussianLeading gaussian_expectation_leading(const Bubble& b, double covariance, int cap) {
  GaussianLeading out;
  out.count = dominant_pairings(b, cap).size();
  out.value = static_cast<double>(out.count) * std::pow(covariance, b.num_vertices() / 2);
  return out;
}

CrosscheckReport universality_crosscheck(const Bubble& b, int order, int cap) {
  const auto cert = recognize_gm(b);
  if (!cert) throw Error(Errc::NotGm, "bubble is not generalized melonic");
  if (!is_totally_unbalanced(*cert)) throw Error(Errc::NotTotallyUnbalanced, "bubble has a balanced insertion");
  if (order < 0) throw Error(Errc::InvalidArgument, "negative order");
  const Rational s = scaling_coefficient(*cert);
  const int d = b.d();
  auto marked = std::make_shared<const Bubble>(Bubble::two_vertex(d));
  auto shared = std::make_shared<const Bubble>(b);

  CrosscheckReport report;
  report.order = order;
  Integer factorial = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) factorial *= k;
    std::vector<BubbleCopy> copies{{0, marked}};
    for (int j = 0; j < k; ++j) copies.push_back({1, shared});
    std::uint64_t count = 0;
    const Rational target = Rational(d) - s * k;
    enumerate(std::move(copies), EnumerationOptions{true, cap}, [&](const FeynmanGraph& g) {
      if (Rational(total_bicolored_cycles(g)) == target) ++count;
    });
    Rational coefficient(Integer(count), factorial);
    if (k % 2 == 1) coefficient = -coefficient;
    report.enumerated.push_back(coefficient);
  }
  const SeriesPoly series = covariance_series({b.num_vertices()}, order);
  for (int k = 0; k <= order; ++k) report.series.push_back(series.coefficient(k));
  if (order >= 1 && report.series[1] != 0 && report.enumerated[1] == -report.series[1]) report.sign = -1;
  Rational sign_power = 1;
  for (int k = 0; k <= order; ++k) {
    if (report.enumerated[k] != sign_power * report.series[k]) {
      report.first_mismatch = k;
      break;
    }
    sign_power *= report.sign;
  }
  return report;
}

}  // namespace melonforge
