// Runs the acceptance criteria. Usage: acceptance [--criterion N]...
// Prints one PASS/FAIL line per criterion; exits non-zero if any failed.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "melonforge/decorated_map.hpp"
#include "melonforge/error.hpp"
#include "melonforge/feynman.hpp"
#include "melonforge/generators.hpp"
#include "melonforge/gluing.hpp"
#include "melonforge/gm.hpp"
#include "melonforge/intermediate_field.hpp"
#include "melonforge/large_n.hpp"
#include "melonforge/matrix_model.hpp"

using namespace melonforge;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(3) << x;
  return s.str();
}

// every multiset of `k` admissible quartics, as indices into all_admissible(d)
void for_each_quartic_multiset(int d, int k, const std::function<void(const std::vector<BubbleCopy>&)>& f) {
  const auto sets = ColorSet::all_admissible(d);
  std::vector<std::shared_ptr<const Bubble>> bubbles;
  for (const auto& c : sets) bubbles.push_back(std::make_shared<const Bubble>(quartic(d, c)));
  std::vector<int> pick(k, 0);
  while (true) {
    std::vector<BubbleCopy> copies;
    for (int r : pick) copies.push_back({r, bubbles[r]});
    f(copies);
    int i = k - 1;
    while (i >= 0 && pick[i] == static_cast<int>(sets.size()) - 1) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[i];
  }
}

Outcome criterion_1() {
  const Bubble b = fixtures::worked_example();
  const auto cert = recognize_gm(b);
  if (!cert) return {false, "worked example not recognized"};
  const bool multiset = cert->multiset == fixtures::worked_example_multiset();
  const bool replays = replay(*cert) == b;
  std::string sets;
  for (const auto& [c, n] : cert->multiset)
    for (int k = 0; k < n; ++k) sets += c.to_string();
  return {multiset && replays, "V=" + std::to_string(b.num_vertices()) + " multiset " + sets +
                                   (replays ? ", replay reproduces the bubble" : ", replay differs")};
}

Outcome criterion_2() {
  std::mt19937_64 rng(2024);
  int bubbles = 0, orders = 0, backtracked = 0, failures = 0;
  for (; bubbles < 240; ++bubbles) {
    const int d = 3 + bubbles % 4;
    const int V = 4 + 2 * (bubbles % 5);
    const auto sample = random_gm_bubble(rng, d, V);
    const auto reference = recognize_gm(sample.bubble);
    if (!reference) {
      ++failures;
      continue;
    }
    for (int k = 0; k < 20; ++k) {
      const auto cert = recognize_gm(sample.bubble, [&](const std::vector<Bidipole>& v) {
        return std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng);
      });
      ++orders;
      if (!cert || cert->multiset != reference->multiset || cert->pairing != reference->pairing) ++failures;
    }
    if (V <= 10) {
      const auto full = recognize_gm_backtracking(sample.bubble, 10);
      ++backtracked;
      if (!full || full->multiset != reference->multiset || full->pairing != reference->pairing) ++failures;
    }
  }
  return {failures == 0, std::to_string(bubbles) + " bubbles, " + std::to_string(orders) + " greedy orders, " +
                             std::to_string(backtracked) + " backtracking runs, " + std::to_string(failures) +
                             " disagreements"};
}

Outcome criterion_3() {
  int checked = 0, bad = 0;
  for (int d = 3; d <= 6; ++d) {
    for (const auto& c : ColorSet::all_admissible(d)) {
      const auto cert = recognize_gm(quartic(d, c));
      ++checked;
      if (!cert || scaling_coefficient(*cert) != c.size() - d) ++bad;
    }
  }
  const auto melonic = recognize_gm(fixtures::melonic_six());
  const Rational s = melonic ? scaling_coefficient(*melonic) : Rational(0);
  // -2(d-1) at d = 3
  const bool melonic_ok = melonic && s == -2 * (3 - 1);
  return {bad == 0 && melonic_ok,
          std::to_string(checked) + " quartics, melonic d=3 V=6 gives s=" + to_string(s)};
}

Outcome criterion_4() {
  std::size_t graphs = 0, bad = 0;
  auto check = [&](const FeynmanGraph& g) {
    const DecoratedMap m = j_quartic(g);
    for (Color c = 1; c <= g.d(); ++c)
      if (bicolored_cycles(g, c) != faces_of_color(m, c)) {
        ++bad;
        break;
      }
    ++graphs;
  };
  for (int d : {3, 4})
    for (int k = 1; k <= 4; ++k)
      for_each_quartic_multiset(d, k, [&](const std::vector<BubbleCopy>& copies) { enumerate(copies, {}, check); });
  const std::size_t exhaustive = graphs;
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) check(random_quartic_graph(rng, 3 + i % 4, 5 + i % 6));
  return {bad == 0, std::to_string(exhaustive) + " exhaustive + 500 random graphs, " + std::to_string(bad) +
                        " mismatches"};
}

Outcome criterion_5() {
  std::size_t graphs = 0, dominant = 0, bad = 0;
  for (int d : {3, 4}) {
    for (int k = 1; k <= 4; ++k) {
      for_each_quartic_multiset(d, k, [&](const std::vector<BubbleCopy>& copies) {
        int scaling = 0;
        for (const auto& c : copies) scaling += quartic_layout(*c.bubble).first.size() - d;
        enumerate(copies, {}, [&](const FeynmanGraph& g) {
          const bool max_degree = total_bicolored_cycles(g) + scaling == d;
          const bool conditions = classify_dominant(j_quartic(g)).dominant;
          dominant += max_degree;
          bad += max_degree != conditions;
          ++graphs;
        });
      });
    }
  }
  return {bad == 0, std::to_string(graphs) + " graphs, " + std::to_string(dominant) + " with delta=d, " +
                        std::to_string(bad) + " disagreements"};
}

Outcome criterion_6() {
  std::vector<GmCertificate> certs{fixtures::worked_example_certificate()};
  std::mt19937_64 rng(6);
  for (int i = 0; certs.size() < 24; ++i) certs.push_back(random_gm_bubble(rng, 3 + i % 4, 4 + 2 * (i % 5)).certificate);
  int bad = 0, worked_b2 = 0;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const Bubble b = replay(certs[i]);
    const int d = b.d(), V = b.num_vertices();
    for (int copies = 1; copies <= 5; ++copies) {
      const FeynmanGraph g = tree_family(b, certs[i], copies);
      const int expected = (d * (V - 2) / 2 - weighted_insertion_count(certs[i])) * copies + d;
      const int got = total_bicolored_cycles(g);
      if (got != expected || fixtures::oracle_total_cycles(g) != expected) ++bad;
      if (i == 0 && copies == 2) worked_b2 = got;
    }
  }
  return {bad == 0, std::to_string(certs.size()) + " bubbles x b=1..5, worked example b=2 gives " +
                        std::to_string(worked_b2) + " cycles"};
}

Outcome criterion_7() {
  std::mt19937_64 rng(7);
  int bad = 0;
  const int total = 60;
  for (int i = 0; i < total; ++i) {
    const auto sample = random_gm_bubble(rng, 5, 4 + 2 * (i % 4), 2);
    if (!is_totally_unbalanced(sample.certificate)) return {false, "generator produced a balanced set"};
    const auto pairings = dominant_pairings(sample.bubble);
    if (pairings.size() != 1 || pairings[0] != pairing_as_matching(sample.bubble, sample.certificate.pairing)) ++bad;
  }
  return {bad == 0, std::to_string(total) + " bubbles (d=5, V<=10), " + std::to_string(bad) + " without a unique canonical maximizer"};
}

Outcome criterion_8() {
  const auto report = universality_crosscheck(quartic(3, ColorSet(3, {1})), 3);
  std::string e, s;
  for (const auto& q : report.enumerated) e += to_string(q) + " ";
  for (const auto& q : report.series) s += to_string(q) + " ";
  const bool expected = report.series == std::vector<Rational>{1, 2, 8, 40};
  return {report.agree() && expected, "enumerated " + e + "| series " + s + "| sign " + std::to_string(report.sign)};
}

Outcome criterion_9() {
  std::mt19937_64 rng(9);
  double worst = 0;
  int redraws = 0;
  for (int i = 0; i < 200; ++i) {
    const PlaneTree t = random_plane_tree(rng, 3 + i % 4, 1 + i % 6);
    const auto r = determinant_lemma_check(t, 1 + i % 4, 1, 1000 + i);
    worst = std::max(worst, r.max_relative_error);
    redraws += r.redraws;
  }
  return {worst <= 1e-9, "200 instances, max relative error " + fmt(worst) + ", redraws " + std::to_string(redraws)};
}

Outcome criterion_10() {
  std::mt19937_64 rng(10);
  int bad = 0;
  for (int i = 0; i < 120; ++i) {
    const TreeModel tm = TreeModel::from_tree(random_plane_tree(rng, 3 + i % 5, 1 + i % 8));
    const auto r = check_eta(tm, eta_exponents(tm));
    bad += !(r.edge_constraints && r.vertex_constraints);
  }
  const TreeModel path = TreeModel::from_tree(
      PlaneTree{3, {{{0}, 0}, {{1, 2}, 1}, {{3}, 0}}, {{0, 1, ColorSet(3, {1})}, {2, 3, ColorSet(3, {2})}}});
  const auto eta = eta_exponents(path);
  const bool zero = std::all_of(eta.eta.begin(), eta.eta.end(), [](const Rational& q) { return q == 0; });
  return {bad == 0 && zero, "120 random trees, " + std::to_string(bad) + " violations; melonic path eta " +
                                (zero ? "all zero" : "non-zero")};
}

Outcome criterion_11() {
  std::vector<std::pair<TreeModel, double>> cases;
  cases.emplace_back(TreeModel::from_tree(PlaneTree{
                         3, {{{0}, 0}, {{1, 2}, 1}, {{3}, 0}}, {{0, 1, ColorSet(3, {1})}, {2, 3, ColorSet(3, {2})}}}),
                     0.02);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) cases.emplace_back(TreeModel::from_tree(random_plane_tree(rng, 5, 1 + i % 4, 2)), 0.01);

  // the point as stated: W from W = 1 - t W^{V/2}
  double stated_gradient = 0, stated_residual = 0;
  // the stationary point: W from W = 1 - (V/2) t W^{V/2}
  double consistent_gradient = 0, branch_gap = 0;
  for (const auto& [tm, t] : cases) {
    SaddleOptions stated;
    stated.equation = SaddleEquation::AsStated;
    stated.throw_on_gradient = false;
    const auto a = saddle_point(tm, t, stated);
    stated_gradient = std::max(stated_gradient, a.gradient_norm);
    stated_residual = std::max(stated_residual, std::abs(a.w - 1 + t * std::pow(a.w, tm.num_vertices / 2)));

    SaddleOptions consistent;
    consistent.throw_on_gradient = false;
    const auto b = saddle_point(tm, t, consistent);
    consistent_gradient = std::max(consistent_gradient, b.gradient_norm);
    branch_gap = std::max(branch_gap, std::abs(b.w - solve_covariance({{-t, tm.num_vertices}}).value));
  }
  const bool pass = stated_gradient <= 1e-8 && stated_residual <= 1e-12;
  return {pass, "21 trees; stated W: residual " + fmt(stated_residual) + ", max gradient " + fmt(stated_gradient) +
                    "; W from W=1-(V/2)tW^{V/2}: max gradient " + fmt(consistent_gradient) +
                    ", gap to covariance at -t " + fmt(branch_gap)};
}

Outcome criterion_12() {
  std::vector<std::complex<double>> z;
  for (int j = 0; j < 5; ++j) z.push_back(std::polar(0.5 * j / 4.0, 2 * M_PI * j / 5.0 + 0.3));
  double worst = 0;
  for (const auto& z1 : z)
    for (const auto& z2 : z) worst = std::max(worst, hs_scalar_check(z1, z2).err);
  return {worst <= 1e-6, "25 pairs, max error " + fmt(worst)};
}

Outcome criterion_13() {
  std::vector<TreeModel> models{TreeModel::from_tree(
      PlaneTree{3, {{{0}, 0}, {{1, 2}, 1}, {{3}, 0}}, {{0, 1, ColorSet(3, {1})}, {2, 3, ColorSet(3, {2})}}})};
  std::mt19937_64 rng(13);
  for (int i = 0; i < 5; ++i) models.push_back(TreeModel::from_tree(random_plane_tree(rng, 4, 1 + i % 3)));
  double worst_ratio = 0, worst_norm = 0;
  int runs = 0;
  for (const auto& tm : models) {
    for (int order = 1; order <= 6; ++order) {
      const auto r = log_expansion_check(tm, order, 10, 100 * order + runs);
      worst_ratio = std::max(worst_ratio, r.max_ratio);
      worst_norm = std::max(worst_norm, r.norm);
      ++runs;
    }
  }
  return {worst_ratio <= 1 && worst_norm <= 0.1,
          std::to_string(runs * 10) + " instantiations, orders 1-6, largest error/bound " + fmt(worst_ratio) +
              ", largest ||A|| " + fmt(worst_norm)};
}

const std::vector<std::pair<std::string, Outcome (*)()>> kCriteria{
    {"GM recognition of the worked example", criterion_1},
    {"confluence of removal orders", criterion_2},
    {"scaling coefficients", criterion_3},
    {"bicolored cycles equal map faces", criterion_4},
    {"quartic dominance conditions", criterion_5},
    {"tree family cycle formula", criterion_6},
    {"unique dominant pairing", criterion_7},
    {"Gaussian cross-check", criterion_8},
    {"determinant lemma", criterion_9},
    {"rescaling exponents", criterion_10},
    {"saddle point", criterion_11},
    {"scalar Hubbard-Stratonovich identity", criterion_12},
    {"log expansion against ln det", criterion_13},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      selected.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 64;
    }
  }
  if (selected.empty())
    for (int n = 1; n <= static_cast<int>(kCriteria.size()); ++n) selected.push_back(n);

  int failed = 0;
  for (int n : selected) {
    if (n < 1 || n > static_cast<int>(kCriteria.size())) {
      std::cerr << "no criterion " << n << '\n';
      return 64;
    }
    const auto& [name, run] = kCriteria[n - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << std::setw(2) << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << name << " -- "
              << o.detail << " (" << std::fixed << std::setprecision(2) << secs << " s)" << std::defaultfloat
              << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
