#include "melonforge/matrix_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "melonforge/error.hpp"
#include "melonforge/gluing.hpp"
#include "melonforge/gm.hpp"

namespace melonforge {

TreeModel TreeModel::from_tree(const PlaneTree& t) {
  validate_plane_tree(t);
  if (t.num_edges() < 1) throw Error(Errc::InvalidArgument, "the tree needs at least one edge");
  TreeModel tm;
  tm.tree = t;
  tm.d = t.d;
  tm.num_vertices = t.bubble_size();
  const auto cert = recognize_gm(boundary(from_plane_tree(t)));
  if (!cert) throw Error(Errc::NotGm, "boundary of the tree is not generalized melonic");
  tm.s = scaling_coefficient(*cert);
  tm.epsilon.assign(t.num_halfedges(), 1);
  tm.epsilon[0] = -1;
  return tm;
}

bool TreeModel::totally_unbalanced() const {
  return std::all_of(tree.edges.begin(), tree.edges.end(), [&](const PlaneTreeEdge& e) { return 2 * e.colors.size() < d; });
}

std::vector<int> subtree_edges(const PlaneTree& t, int halfedge) {
  const auto vertex = halfedge_vertex(t);
  const auto edge = halfedge_edge(t);
  const auto partner = halfedge_partner(t);
  std::vector<int> out{edge.at(halfedge)};
  std::vector<int> stack{partner[halfedge]};  // half-edges entering the subtree
  while (!stack.empty()) {
    const int h = stack.back();
    stack.pop_back();
    for (int g : t.vertices[vertex[h]].halfedges) {
      if (g == h) continue;
      out.push_back(edge[g]);
      stack.push_back(partner[g]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Rational edge_weight(const TreeModel& tm) {
  return Rational(tm.d) + Rational(2) * tm.s / Rational(tm.num_vertices - 2);
}

// tau = t^{2/(V-2)} = t^{1/E}
double tau_of(const TreeModel& tm, double t) {
  const int e = tm.tree.num_edges();
  if (t >= 0) return std::pow(t, 1.0 / e);
  if (e % 2 == 0) throw Error(Errc::InvalidArgument, "negative t has no real root t^(1/E) for an even number of edges");
  return -std::pow(-t, 1.0 / e);
}

}  // namespace

EtaAssignment eta_exponents(const TreeModel& tm) {
  const Rational weight = edge_weight(tm);
  EtaAssignment out;
  for (int h = 0; h < tm.tree.num_halfedges(); ++h) {
    const auto sub = subtree_edges(tm.tree, h);
    Rational colors = 0;
    for (int e : sub) colors += tm.tree.edges[e].colors.size();
    out.eta.push_back(weight * static_cast<int>(sub.size()) - colors);
  }
  return out;
}

EtaCheck check_eta(const TreeModel& tm, const EtaAssignment& eta) {
  EtaCheck out;
  const Rational weight = edge_weight(tm);
  for (const auto& e : tm.tree.edges)
    if (eta.eta.at(e.h1) + eta.eta.at(e.h2) != weight - e.colors.size()) out.edge_constraints = false;
  for (const auto& v : tm.tree.vertices) {
    Rational sum = 0;
    for (int h : v.halfedges) sum += eta.eta.at(h);
    if (sum != 0) out.vertex_constraints = false;
  }
  return out;
}

double potential_eval(const TreeModel& tm, const std::vector<double>& y, double t) {
  if (static_cast<int>(y.size()) != tm.tree.num_halfedges())
    throw Error(Errc::InvalidArgument, "one value per half-edge expected");
  double quadratic = 0;
  for (const auto& e : tm.tree.edges) quadratic += y[e.h1] * y[e.h2];
  double vertex_sum = 0;
  for (const auto& v : tm.tree.vertices) {
    double p = 1;
    for (int h : ccw_from_marked(v)) p *= tm.epsilon[h] * y[h];
    vertex_sum += p;
  }
  const double arg = 1 - vertex_sum;
  if (!(arg > 0)) throw Error(Errc::LogDomain, "argument of the logarithm is " + std::to_string(arg));
  if (t == 0) {
    if (quadratic == 0) return std::log(arg);
    return quadratic > 0 ? HUGE_VAL : -HUGE_VAL;
  }
  const double tau = tau_of(tm, t);
  return quadratic / tau + std::log(arg);
}

GradientReport potential_gradient(const TreeModel& tm, const std::vector<double>& y, double t, double step) {
  GradientReport out;
  std::vector<double> probe = y;
  double sq = 0, largest = -1;
  for (std::size_t h = 0; h < y.size(); ++h) {
    probe[h] = y[h] + step;
    const double up = potential_eval(tm, probe, t);
    probe[h] = y[h] - step;
    const double down = potential_eval(tm, probe, t);
    probe[h] = y[h];
    const double g = (up - down) / (2 * step);
    out.gradient.push_back(g);
    sq += g * g;
    if (std::abs(g) > largest) {
      largest = std::abs(g);
      out.worst = static_cast<int>(h);
    }
  }
  out.norm = std::sqrt(sq);
  return out;
}

double solve_saddle_w(double t, int num_vertices, SaddleEquation equation, double tol) {
  const int h = num_vertices / 2;
  const double k = equation == SaddleEquation::Consistent ? h : 1;
  double w = 1;
  for (int it = 0; it < 100; ++it) {
    const double f = w - 1 + k * t * std::pow(w, h);
    const double df = 1 + k * h * t * std::pow(w, h - 1);
    const double next = w - f / df;
    if (!std::isfinite(next)) break;
    if (std::abs(next - w) <= tol * std::max(1.0, std::abs(w))) return next;
    w = next;
  }
  std::ostringstream msg;
  msg.precision(17);
  msg << "W iteration did not settle, last iterate " << w;
  throw Error(Errc::NoConvergence, msg.str());
}

std::vector<double> saddle_y(const TreeModel& tm, double t, double w) {
  const double tau = t == 0 ? 0 : tau_of(tm, t);
  std::vector<double> y;
  for (int h = 0; h < tm.tree.num_halfedges(); ++h) {
    const auto sub = subtree_edges(tm.tree, h);
    int sign = tm.epsilon[h];
    for (int e : sub) sign *= tm.epsilon[tm.tree.edges[e].h1] * tm.epsilon[tm.tree.edges[e].h2];
    y.push_back(sign * std::pow(tau * w, static_cast<int>(sub.size())));
  }
  return y;
}

SaddleSolution saddle_point(const TreeModel& tm, double t, const SaddleOptions& options) {
  if (!tm.totally_unbalanced()) throw Error(Errc::NotTotallyUnbalanced, "saddle point needs |C_e| < d/2 on every edge");
  SaddleSolution sol;
  sol.w = solve_saddle_w(t, tm.num_vertices, options.equation);
  sol.y = saddle_y(tm, t, sol.w);
  if (t == 0) return sol;  // free theory: y = 0 is forced by the infinite quadratic weight
  const auto grad = potential_gradient(tm, sol.y, t, options.step);
  sol.gradient_norm = grad.norm;
  sol.worst = grad.worst;
  if (options.throw_on_gradient && grad.norm > options.tol) {
    std::ostringstream msg;
    msg << "gradient norm " << grad.norm << ", worst half-edge " << grad.worst << " with component "
        << grad.gradient[grad.worst];
    throw Error(Errc::GradientTooLarge, msg.str());
  }
  return sol;
}

namespace {

struct CornerLayout {
  std::vector<int> before, after;  // block index of the corners around each half-edge
  int blocks = 1;
};

CornerLayout corner_layout(const PlaneTree& t) {
  CornerLayout out;
  out.before.assign(t.num_halfedges(), 0);
  out.after.assign(t.num_halfedges(), 0);
  for (const auto& v : t.vertices) {
    const int k = static_cast<int>(v.halfedges.size());
    std::vector<int> block(k, 0);
    for (int i = 0; i < k; ++i)
      if (i != v.marked_corner) block[i] = out.blocks++;
    for (int i = 0; i < k; ++i) {
      out.before[v.halfedges[i]] = block[(i + k - 1) % k];
      out.after[v.halfedges[i]] = block[i];
    }
  }
  return out;
}

}  // namespace

Eigen::MatrixXd corner_block_matrix(const PlaneTree& t, const Eigen::MatrixXd& y0,
                                    const std::vector<Eigen::MatrixXd>& yh) {
  const int n = static_cast<int>(y0.rows());
  const auto layout = corner_layout(t);
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(layout.blocks * n, layout.blocks * n);
  p.topLeftCorner(n, n) = y0;
  for (int h = 0; h < t.num_halfedges(); ++h) p.block(layout.before[h] * n, layout.after[h] * n, n, n) += yh.at(h);
  return p;
}

Eigen::MatrixXd compact_form(const PlaneTree& t, const Eigen::MatrixXd& y0, const std::vector<Eigen::MatrixXd>& yh,
                             bool signed_form) {
  Eigen::MatrixXd out = y0;
  for (const auto& v : t.vertices) {
    Eigen::MatrixXd prod = Eigen::MatrixXd::Identity(y0.rows(), y0.cols());
    for (int h : ccw_from_marked(v)) prod = prod * yh.at(h);
    const bool negative = signed_form && v.halfedges.size() % 2 == 0;
    out += negative ? Eigen::MatrixXd(-prod) : prod;
  }
  return out;
}

DeterminantReport determinant_lemma_check(const PlaneTree& t, int n, int trials, std::uint64_t seed) {
  validate_plane_tree(t);
  if (n < 1) throw Error(Errc::InvalidArgument, "matrix size must be positive");
  DeterminantReport report;
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  for (int k = 0; k < trials; ++k) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(k)};
    std::mt19937_64 rng(seq);
    auto draw = [&] {
      Eigen::MatrixXd m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = uniform(rng);
      m.diagonal().array() += 0.5;
      return m;
    };
    for (int attempt = 0;; ++attempt) {
      if (attempt == 100) throw Error(Errc::SingularDiagnostic, "no well-conditioned draw in 100 attempts");
      const Eigen::MatrixXd y0 = draw();
      std::vector<Eigen::MatrixXd> yh;
      for (int h = 0; h < t.num_halfedges(); ++h) yh.push_back(draw());
      const double block = corner_block_matrix(t, y0, yh).determinant();
      const double compact = compact_form(t, y0, yh, true).determinant();
      const double plain = compact_form(t, y0, yh, false).determinant();
      if (std::abs(compact) < 1e-6 || std::abs(block) < 1e-6) {
        ++report.redraws;
        continue;
      }
      auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); };
      report.max_relative_error = std::max(report.max_relative_error, rel(block, compact));
      report.max_relative_error_unsigned = std::max(report.max_relative_error_unsigned, rel(block, plain));
      break;
    }
    ++report.trials;
  }
  return report;
}

HsResult hs_scalar_check(std::complex<double> z1, std::complex<double> z2, double radius) {
  using boost::math::quadrature::gauss_kronrod;
  constexpr int angular = 96;
  // angular average by the trapezoid rule, exact for the periodic integrand
  auto ring = [&](double r, std::complex<double> a, std::complex<double> b) {
    std::complex<double> sum = 0;
    for (int j = 0; j < angular; ++j) {
      const double theta = 2 * std::numbers::pi * j / angular;
      const std::complex<double> z = std::polar(r, theta);
      sum += std::exp(-r * r - z * a + std::conj(z) * b);
    }
    return sum * (2 * std::numbers::pi / angular) * r;
  };
  auto integrate = [&](std::complex<double> a, std::complex<double> b) {
    double err_re = 0, err_im = 0;
    const double re = gauss_kronrod<double, 61>::integrate(
        [&](double r) { return ring(r, a, b).real(); }, 0.0, radius, 5, 1e-13, &err_re);
    const double im = gauss_kronrod<double, 61>::integrate(
        [&](double r) { return ring(r, a, b).imag(); }, 0.0, radius, 5, 1e-13, &err_im);
    if (!std::isfinite(re) || !std::isfinite(im) || err_re > 1e-9 || err_im > 1e-9) {
      throw Error(Errc::QuadratureDiverged, "radial quadrature error estimate " + std::to_string(std::max(err_re, err_im)));
    }
    return std::complex<double>(re, im) / std::numbers::pi;
  };
  HsResult out;
  out.lhs = integrate(z1, z2) / integrate(0.0, 0.0);
  out.rhs = std::exp(-z1 * z2);
  out.err = std::abs(out.lhs - out.rhs);
  return out;
}

std::vector<LogTerm> expand_log_interaction(const TreeModel& tm, int order) {
  const int letters = static_cast<int>(tm.tree.vertices.size());
  if (order > 8) throw Error(Errc::OrderCap, "order " + std::to_string(order) + " exceeds 8");
  if (letters > 26) throw Error(Errc::OrderCap, "more than 26 vertex symbols");
  double words = 0;
  for (int k = 1; k <= order; ++k) words += std::pow(letters, k);
  if (words > 5e6) throw Error(Errc::OrderCap, "too many words to expand");
  std::vector<LogTerm> out;
  for (int k = 1; k <= order; ++k) {
    std::vector<int> digits(k, 0);
    std::set<std::string> classes;
    while (true) {
      std::string w;
      for (int x : digits) w.push_back(static_cast<char>('a' + x));
      // representative: lexicographically least rotation
      std::string least = w;
      std::set<std::string> rotations{w};
      for (int r = 1; r < k; ++r) {
        std::string rot = w.substr(r) + w.substr(0, r);
        rotations.insert(rot);
        least = std::min(least, rot);
      }
      if (least == w && classes.insert(w).second)
        out.push_back({w, Rational(1, k), static_cast<int>(rotations.size())});
      int i = k - 1;
      while (i >= 0 && digits[i] == letters - 1) digits[i--] = 0;
      if (i < 0) break;
      ++digits[i];
    }
  }
  return out;
}

double evaluate_log_terms(const std::vector<LogTerm>& terms, const std::vector<Eigen::MatrixXd>& symbols) {
  double sum = 0;
  for (const auto& term : terms) {
    Eigen::MatrixXd prod = Eigen::MatrixXd::Identity(symbols.at(0).rows(), symbols.at(0).cols());
    for (char c : term.word) prod = prod * symbols.at(c - 'a');
    sum += to_double(term.coefficient) * term.multiplicity * prod.trace();
  }
  return sum;
}

std::vector<Eigen::MatrixXd> vertex_symbols(const TreeModel& tm, const std::vector<Eigen::MatrixXd>& edge_matrices) {
  std::vector<Eigen::MatrixXd> x(tm.tree.num_halfedges());
  for (int e = 0; e < tm.tree.num_edges(); ++e) {
    x[tm.tree.edges[e].h1] = edge_matrices.at(e);
    x[tm.tree.edges[e].h2] = edge_matrices.at(e).transpose();
  }
  std::vector<Eigen::MatrixXd> out;
  for (const auto& v : tm.tree.vertices) {
    Eigen::MatrixXd prod = Eigen::MatrixXd::Identity(x[0].rows(), x[0].cols());
    for (int h : ccw_from_marked(v)) prod = prod * (tm.epsilon[h] * x[h]);
    out.push_back(prod);
  }
  return out;
}

LogExpansionReport log_expansion_check(const TreeModel& tm, int order, int trials, std::uint64_t seed, double radius) {
  const auto terms = expand_log_interaction(tm, order);
  LogExpansionReport report;
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  for (int k = 0; k < trials; ++k) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(k)};
    std::mt19937_64 rng(seq);
    std::vector<Eigen::MatrixXd> edges;
    for (int e = 0; e < tm.tree.num_edges(); ++e) {
      Eigen::MatrixXd m(2, 2);
      for (int i = 0; i < 4; ++i) m(i / 2, i % 2) = uniform(rng);
      edges.push_back(m);
    }
    std::vector<Eigen::MatrixXd> symbols;
    Eigen::MatrixXd a;
    double norm = 0;
    for (int shrink = 0; shrink < 200; ++shrink) {
      symbols = vertex_symbols(tm, edges);
      a = Eigen::MatrixXd::Zero(2, 2);
      for (const auto& s : symbols) a += s;
      norm = Eigen::JacobiSVD<Eigen::MatrixXd>(a).singularValues()(0);
      // stay close to the radius so the truncation is actually exercised
      if (norm <= radius && norm > 0.5 * radius) break;
      const double factor = norm > radius ? 0.9 : 1.05;
      for (auto& m : edges) m *= factor;
    }
    const double exact = -std::log((Eigen::MatrixXd::Identity(2, 2) - a).determinant());
    const double approx = evaluate_log_terms(terms, symbols);
    double bound = 0;
    for (int j = order + 1; j < order + 200; ++j) bound += 2 * std::pow(norm, j) / j;
    const double error = std::abs(exact - approx);
    report.max_error = std::max(report.max_error, error);
    report.max_ratio = std::max(report.max_ratio, error / (bound + 1e-15));
    report.norm = std::max(report.norm, norm);
    ++report.trials;
  }
  return report;
}

}  // namespace melonforge
