#pragma once

// Shared test fixtures and independent oracles. The oracles deliberately use
// different algorithms from the library code they check.

#include <numeric>
#include <set>
#include <vector>

#include "melonforge/bubble.hpp"
#include "melonforge/feynman.hpp"
#include "melonforge/gm.hpp"
#include "melonforge/plane_tree.hpp"
#include "melonforge/rational.hpp"

namespace fixtures {

using namespace melonforge;

// d=4 bubble on 14 vertices built from the insertion sets
// {4},{1,2},{4},{1,4},{1,3},{1}. The insertion vertices are our own choice.
inline GmCertificate worked_example_certificate() {
  const int d = 4;
  std::vector<InsertionStep> steps{
      {0, ColorSet(d, {4}), 2, 3},     {3, ColorSet(d, {1, 2}), 4, 5}, {4, ColorSet(d, {4}), 6, 7},
      {1, ColorSet(d, {1, 4}), 8, 9}, {7, ColorSet(d, {1, 3}), 10, 11}, {9, ColorSet(d, {1}), 12, 13},
  };
  return make_certificate(d, 0, 1, std::move(steps));
}

inline Bubble worked_example() { return replay(worked_example_certificate()); }

inline std::map<ColorSet, int> worked_example_multiset() {
  const int d = 4;
  return {{ColorSet(d, {4}), 2}, {ColorSet(d, {1, 2}), 1}, {ColorSet(d, {1, 4}), 1}, {ColorSet(d, {1, 3}), 1},
          {ColorSet(d, {1}), 1}};
}

// Melonic d=3 bubble on 6 vertices: two {1}-type insertions.
inline Bubble melonic_six() {
  const int d = 3;
  return replay(make_certificate(d, 0, 1, {{0, ColorSet(d, {1}), 2, 3}, {2, ColorSet(d, {2}), 4, 5}}));
}

// The bipartite K_{3,3} with a proper 3-coloring.
inline Bubble k33() {
  RawBubble raw{3, {0, 1, 2}, {3, 4, 5}, {}};
  for (int c = 1; c <= 3; ++c)
    for (int i = 0; i < 3; ++i) raw.edges.push_back({c, i, 3 + (i + c) % 3});
  return Bubble::validate(raw);
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) { p[find(a)] = find(b); }
  int count() {
    std::set<int> roots;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) roots.insert(find(i));
    return static_cast<int>(roots.size());
  }
};

// Components of the 2-regular graph formed by color-0 and color-c edges.
inline int oracle_cycles(const FeynmanGraph& g, Color c) {
  const int n = g.num_whites();
  Dsu dsu(2 * n);
  for (int w = 0; w < n; ++w) {
    dsu.join(w, n + g.black_of_white()[w]);
    dsu.join(w, n + g.color_neighbor_of_white(w, c));
  }
  return dsu.count();
}

inline int oracle_total_cycles(const FeynmanGraph& g) {
  int sum = 0;
  for (Color c = 1; c <= g.d(); ++c) sum += oracle_cycles(g, c);
  return sum;
}

inline bool oracle_connected(const FeynmanGraph& g) {
  Dsu dsu(g.num_copies());
  for (int w = 0; w < g.num_whites(); ++w) dsu.join(g.copy_of_white(w), g.copy_of_black(g.black_of_white()[w]));
  return dsu.count() == 1;
}

// Vertices with exactly two distinct neighbors, found from the edge list.
inline int oracle_bidipole_count(const Bubble& b) {
  std::map<VertexId, std::set<VertexId>> nbrs;
  for (const auto& e : b.edges()) {
    nbrs[e.w].insert(e.b);
    nbrs[e.b].insert(e.w);
  }
  int count = 0;
  for (const auto& [v, s] : nbrs) count += s.size() == 2;
  return count;
}

// [t^n] of C solving C = 1 + h t C^h, by Lagrange inversion:
// h^n / n * binom(h n, n - 1).
inline Rational lagrange_coefficient(int h, int n) {
  if (n == 0) return 1;
  Integer binom = 1;
  for (int i = 0; i < n - 1; ++i) binom = binom * (h * n - i) / (i + 1);
  Integer power = 1;
  for (int i = 0; i < n; ++i) power *= h;
  return Rational(power * binom, Integer(n));
}

}  // namespace fixtures
