#include "melonforge/series.hpp"

#include <cmath>
#include <numeric>

#include "melonforge/error.hpp"

namespace melonforge {

namespace {

int degree(const SeriesPoly::Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

SeriesPoly::SeriesPoly(int num_vars, int order) : num_vars_(num_vars), order_(order) {
  if (num_vars < 1 || order < 0) throw Error(Errc::InvalidArgument, "series needs at least one variable and order >= 0");
}

SeriesPoly SeriesPoly::constant(int num_vars, int order, const Rational& value) {
  SeriesPoly s(num_vars, order);
  s.add_term(Exponent(num_vars, 0), value);
  return s;
}

SeriesPoly SeriesPoly::variable(int num_vars, int order, int index) {
  SeriesPoly s(num_vars, order);
  Exponent e(num_vars, 0);
  e.at(index) = 1;
  s.add_term(e, 1);
  return s;
}

Rational SeriesPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SeriesPoly::add_term(const Exponent& e, const Rational& value) {
  if (static_cast<int>(e.size()) != num_vars_) throw Error(Errc::InvalidArgument, "exponent has the wrong number of variables");
  if (degree(e) > order_ || value == 0) return;
  Rational& slot = terms_[e];
  slot += value;
  if (slot == 0) terms_.erase(e);
}

void SeriesPoly::check_compatible(const SeriesPoly& o) const {
  if (num_vars_ != o.num_vars_) throw Error(Errc::InvalidArgument, "series in different numbers of variables");
}

SeriesPoly SeriesPoly::operator+(const SeriesPoly& o) const {
  check_compatible(o);
  SeriesPoly out(num_vars_, std::min(order_, o.order_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

SeriesPoly SeriesPoly::operator-(const SeriesPoly& o) const { return *this + o * Rational(-1); }

SeriesPoly SeriesPoly::operator*(const SeriesPoly& o) const {
  check_compatible(o);
  SeriesPoly out(num_vars_, std::min(order_, o.order_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponent e(num_vars_);
      for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SeriesPoly SeriesPoly::operator*(const Rational& k) const {
  SeriesPoly out(num_vars_, order_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * k);
  return out;
}

SeriesPoly SeriesPoly::pow(int k) const {
  if (k < 0) throw Error(Errc::InvalidArgument, "negative power of a series");
  SeriesPoly out = constant(num_vars_, order_, 1);
  SeriesPoly base = *this;
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

double SeriesPoly::evaluate(const std::vector<double>& t) const {
  if (static_cast<int>(t.size()) != num_vars_) throw Error(Errc::InvalidArgument, "wrong number of values for the series variables");
  double sum = 0;
  for (const auto& [e, c] : terms_) {
    double term = to_double(c);
    for (int i = 0; i < num_vars_; ++i) term *= std::pow(t[i], e[i]);
    sum += term;
  }
  return sum;
}

}  // namespace melonforge
