#pragma once

#include <map>
#include <string>
#include <vector>

#include "melonforge/rational.hpp"

namespace melonforge {

/// Multivariate power series with exact rational coefficients, truncated at
/// total degree `order`.
class SeriesPoly {
 public:
  using Exponent = std::vector<int>;

  SeriesPoly(int num_vars, int order);
  static SeriesPoly constant(int num_vars, int order, const Rational& value);
  static SeriesPoly variable(int num_vars, int order, int index);

  int num_vars() const noexcept { return num_vars_; }
  int order() const noexcept { return order_; }
  const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
  Rational coefficient(const Exponent& e) const;
  /// Coefficient of t^k for a single-variable series.
  Rational coefficient(int k) const { return coefficient(Exponent{k}); }
  void add_term(const Exponent& e, const Rational& value);

  SeriesPoly operator+(const SeriesPoly& o) const;
  SeriesPoly operator-(const SeriesPoly& o) const;
  SeriesPoly operator*(const SeriesPoly& o) const;
  SeriesPoly operator*(const Rational& k) const;
  SeriesPoly pow(int k) const;
  double evaluate(const std::vector<double>& t) const;

  friend bool operator==(const SeriesPoly& a, const SeriesPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const SeriesPoly& o) const;

  int num_vars_;
  int order_;
  std::map<Exponent, Rational> terms_;
};

}  // namespace melonforge
