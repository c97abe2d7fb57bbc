#include "melonforge/generators.hpp"

#include <algorithm>
#include <numeric>

#include "melonforge/error.hpp"

namespace melonforge {

namespace {

int uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<int>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

}  // namespace

ColorSet random_color_set(std::mt19937_64& rng, int d, int max_size) {
  if (max_size <= 0) max_size = d / 2;
  std::vector<ColorSet> pool;
  for (const auto& c : ColorSet::all_admissible(d))
    if (c.size() <= max_size) pool.push_back(c);
  if (pool.empty()) throw Error(Errc::InvalidArgument, "no admissible color set of the requested size");
  return pool[uniform_index(rng, pool.size())];
}

GmSample random_gm_bubble(std::mt19937_64& rng, int d, int num_vertices, int max_size) {
  if (num_vertices < 2 || num_vertices % 2 != 0) throw Error(Errc::InvalidArgument, "bubble size must be even and >= 2");
  std::vector<InsertionStep> steps;
  VertexId next = 2;
  for (int k = 0; k < (num_vertices - 2) / 2; ++k) {
    const VertexId at = uniform_index(rng, static_cast<std::size_t>(next));
    steps.push_back({at, random_color_set(rng, d, max_size), next, next + 1});
    next += 2;
  }
  GmCertificate cert = make_certificate(d, 0, 1, std::move(steps));
  Bubble b = replay(cert);
  return {std::move(b), std::move(cert)};
}

PlaneTree random_plane_tree(std::mt19937_64& rng, int d, int num_edges, int max_size) {
  if (num_edges < 1) throw Error(Errc::InvalidArgument, "a random tree needs at least one edge");
  PlaneTree t;
  t.d = d;
  t.vertices.push_back({{0}, 0});
  t.vertices.push_back({{1}, 0});
  t.edges.push_back({0, 1, random_color_set(rng, d, max_size)});
  for (int e = 1; e < num_edges; ++e) {
    const int v = uniform_index(rng, t.vertices.size());
    // randomize which end of the new edge is the parent side
    const bool flip = std::bernoulli_distribution(0.5)(rng);
    const int parent_h = flip ? 2 * e + 1 : 2 * e;
    const int child_h = flip ? 2 * e : 2 * e + 1;
    auto& hs = t.vertices[v].halfedges;
    hs.insert(hs.begin() + uniform_index(rng, hs.size() + 1), parent_h);
    t.vertices.push_back({{child_h}, 0});
    t.edges.push_back({std::min(parent_h, child_h), std::max(parent_h, child_h), random_color_set(rng, d, max_size)});
  }
  for (auto& v : t.vertices) v.marked_corner = uniform_index(rng, v.halfedges.size());
  return t;
}

FeynmanGraph random_quartic_graph(std::mt19937_64& rng, int d, int copies, bool connected) {
  const auto admissible = ColorSet::all_admissible(d);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<BubbleCopy> list;
    for (int j = 0; j < copies; ++j) {
      const int r = uniform_index(rng, admissible.size());
      list.push_back({r, std::make_shared<const Bubble>(quartic(d, admissible[r]))});
    }
    std::vector<int> m(2 * copies);
    std::iota(m.begin(), m.end(), 0);
    std::shuffle(m.begin(), m.end(), rng);
    FeynmanGraph g(std::move(list), std::move(m));
    if (!connected || g.connected()) return g;
  }
  throw Error(Errc::InvalidArgument, "could not draw a connected graph");
}

}  // namespace melonforge
