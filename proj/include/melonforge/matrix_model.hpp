#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "melonforge/plane_tree.hpp"
#include "melonforge/rational.hpp"

namespace melonforge {

/// A plane tree of quartics with its bubble data and signs eps_h whose
/// product is -1 (the -1 sits on half-edge 0).
struct TreeModel {
  PlaneTree tree;
  int d = 0;
  int num_vertices = 0;  // V of the bubble, 2E + 2
  Rational s;
  std::vector<int> epsilon;

  static TreeModel from_tree(const PlaneTree& t);
  bool totally_unbalanced() const;
};

/// Edges of the subtree T_h: the edge of h together with everything hanging
/// off the other end of that edge.
std::vector<int> subtree_edges(const PlaneTree& t, int halfedge);

struct EtaAssignment {
  std::vector<Rational> eta;  // per half-edge
};

/// eta_h = (d + 2s/(V-2)) E(T_h) - sum over e in T_h of |C_e|.
EtaAssignment eta_exponents(const TreeModel& tm);

struct EtaCheck {
  bool edge_constraints = true;    // eta_h + eta_h' = d + 2s/(V-2) - |C_e|
  bool vertex_constraints = true;  // sum of eta_h around a vertex is 0
};
EtaCheck check_eta(const TreeModel& tm, const EtaAssignment& eta);

/// t^{-2/(V-2)} sum_e y_h1 y_h2 + ln(1 - sum_v prod_h eps_h y_h). Throws
/// LogDomain.
double potential_eval(const TreeModel& tm, const std::vector<double>& y, double t);

struct GradientReport {
  std::vector<double> gradient;
  double norm = 0;  // Euclidean
  int worst = -1;   // half-edge with the largest component
};

/// Central finite differences of potential_eval.
GradientReport potential_gradient(const TreeModel& tm, const std::vector<double>& y, double t, double step = 1e-6);

enum class SaddleEquation {
  Consistent,  // W = 1 - (V/2) t W^{V/2}, the stationarity condition of the potential
  AsStated,    // W = 1 - t W^{V/2}
};

/// Root of the chosen W equation on the branch W(0) = 1, by Newton.
double solve_saddle_w(double t, int num_vertices, SaddleEquation equation = SaddleEquation::Consistent,
                      double tol = 1e-15);

/// y_h = (1/eps_h) (prod over e in T_h of eps_e) (t^{2/(V-2)} W)^{E(T_h)}.
std::vector<double> saddle_y(const TreeModel& tm, double t, double w);

struct SaddleOptions {
  double tol = 1e-8;
  double step = 1e-6;
  SaddleEquation equation = SaddleEquation::Consistent;
  bool throw_on_gradient = true;
};

struct SaddleSolution {
  double w = 1;
  std::vector<double> y;
  double gradient_norm = 0;
  int worst = -1;
};

/// Throws NotTotallyUnbalanced, NoConvergence, GradientTooLarge.
SaddleSolution saddle_point(const TreeModel& tm, double t, const SaddleOptions& options = {});

/// Corner-indexed block matrix: the marked corners together form block 0,
/// unmarked corners get their own block with an identity on the diagonal,
/// and Y_h sits at (corner before h, corner after h).
Eigen::MatrixXd corner_block_matrix(const PlaneTree& t, const Eigen::MatrixXd& y0,
                                    const std::vector<Eigen::MatrixXd>& yh);
/// Y_0 + sum_v sign_v prod_h Y_h over the half-edges around v counter-clockwise
/// from the marked corner; sign_v = (-1)^{deg v - 1} when `signed_form`, else 1.
Eigen::MatrixXd compact_form(const PlaneTree& t, const Eigen::MatrixXd& y0, const std::vector<Eigen::MatrixXd>& yh,
                             bool signed_form = true);

struct DeterminantReport {
  double max_relative_error = 0;           // against the signed compact form
  double max_relative_error_unsigned = 0;  // against the form without vertex signs
  int trials = 0;
  int redraws = 0;
};

/// Random n x n matrices, entries uniform in [-1, 1] plus a diagonal shift.
/// Trial k uses a generator seeded by (seed, k). Throws SingularDiagnostic.
DeterminantReport determinant_lemma_check(const PlaneTree& t, int n, int trials, std::uint64_t seed);

struct HsResult {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double err = 0;
};

/// (1/pi) int exp(-z zbar - z Z1 + zbar Z2) d^2z over a disk of the given
/// radius, normalized by the same quadrature at Z1 = Z2 = 0, against
/// exp(-Z1 Z2). Throws QuadratureDiverged.
HsResult hs_scalar_check(std::complex<double> z1, std::complex<double> z2, double radius = 8.0);

/// One term of -tr ln(1 - A), A = sum of the vertex symbols: the word
/// stands for the trace of its product; `multiplicity` words of the same
/// cyclic class share it.
struct LogTerm {
  std::string word;
  Rational coefficient;
  int multiplicity = 1;
};

/// All cyclic classes of words of length 1..order over the letters a, b, ...
/// (one per tree vertex), each with coefficient 1/length. Throws OrderCap.
std::vector<LogTerm> expand_log_interaction(const TreeModel& tm, int order);

/// Sum of coefficient * multiplicity * tr(word) with letter i -> symbols[i].
double evaluate_log_terms(const std::vector<LogTerm>& terms, const std::vector<Eigen::MatrixXd>& symbols);

/// Vertex symbols prod_h eps_h X_h with X_{h2} = X_{h1}^T.
std::vector<Eigen::MatrixXd> vertex_symbols(const TreeModel& tm, const std::vector<Eigen::MatrixXd>& edge_matrices);

struct LogExpansionReport {
  double max_error = 0;
  double max_ratio = 0;  // error divided by the truncation bound
  double norm = 0;       // largest operator norm of A used
  int trials = 0;
};

/// Compares the truncated expansion with -ln det(1 - A) for random 2 x 2
/// edge matrices scaled until ||A|| <= radius. The truncation bound is
/// 2 sum_{k > order} ||A||^k / k.
LogExpansionReport log_expansion_check(const TreeModel& tm, int order, int trials, std::uint64_t seed,
                                       double radius = 0.1);

}  // namespace melonforge
