#include "melonforge/decorated_map.hpp"

#include <algorithm>
#include <map>

#include "graph_util.hpp"
#include "melonforge/error.hpp"

namespace melonforge {

namespace {

struct Incidence {
  std::vector<int> vertex_of;  // per half-edge
  std::vector<int> partner;    // per half-edge
  std::vector<int> edge_of;    // per half-edge
};

Incidence incidence(const DecoratedMap& m) {
  const int H = 2 * m.num_edges();
  Incidence inc{std::vector<int>(H, -1), std::vector<int>(H, -1), std::vector<int>(H, -1)};
  for (int v = 0; v < m.num_vertices(); ++v)
    for (int h : m.rotation[v]) inc.vertex_of[h] = v;
  for (int e = 0; e < m.num_edges(); ++e) {
    inc.partner[m.edges[e].h1] = m.edges[e].h2;
    inc.partner[m.edges[e].h2] = m.edges[e].h1;
    inc.edge_of[m.edges[e].h1] = inc.edge_of[m.edges[e].h2] = e;
  }
  return inc;
}

struct SubmapFaces {
  int faces = 0;
  std::vector<int> per_component_vertices, per_component_edges, per_component_faces;
};

// Face structure of the submap formed by the kept edges and all vertices.
SubmapFaces submap_faces(const DecoratedMap& m, const std::vector<bool>& keep, bool with_components) {
  const Incidence inc = incidence(m);
  const int H = 2 * m.num_edges();
  std::vector<int> next(H, -1);
  int isolated = 0;
  for (const auto& rot : m.rotation) {
    std::vector<int> kept;
    for (int h : rot)
      if (keep[inc.edge_of[h]]) kept.push_back(h);
    if (kept.empty()) ++isolated;
    for (std::size_t i = 0; i < kept.size(); ++i) next[kept[i]] = kept[(i + 1) % kept.size()];
  }
  SubmapFaces out;
  std::vector<int> face(H, -1);
  int faces = 0;
  for (int h = 0; h < H; ++h) {
    if (!keep[inc.edge_of[h]] || face[h] >= 0) continue;
    int x = h;
    while (face[x] < 0) {
      face[x] = faces;
      x = next[inc.partner[x]];
    }
    ++faces;
  }
  out.faces = faces + isolated;
  if (!with_components) return out;

  const int V = m.num_vertices();
  detail::UnionFind uf(V);
  for (int e = 0; e < m.num_edges(); ++e)
    if (keep[e]) uf.unite(inc.vertex_of[m.edges[e].h1], inc.vertex_of[m.edges[e].h2]);
  std::map<int, int> comp;
  for (int v = 0; v < V; ++v) comp.emplace(uf.find(v), static_cast<int>(comp.size()));
  const int K = static_cast<int>(comp.size());
  out.per_component_vertices.assign(K, 0);
  out.per_component_edges.assign(K, 0);
  out.per_component_faces.assign(K, 0);
  for (int v = 0; v < V; ++v) out.per_component_vertices[comp[uf.find(v)]]++;
  for (int e = 0; e < m.num_edges(); ++e)
    if (keep[e]) out.per_component_edges[comp[uf.find(inc.vertex_of[m.edges[e].h1])]]++;
  std::vector<bool> counted(faces, false);
  for (int h = 0; h < H; ++h) {
    if (face[h] < 0 || counted[face[h]]) continue;
    counted[face[h]] = true;
    out.per_component_faces[comp[uf.find(inc.vertex_of[h])]]++;
  }
  for (int v = 0; v < V; ++v) {
    const bool bare = std::none_of(m.rotation[v].begin(), m.rotation[v].end(),
                                   [&](int h) { return keep[inc.edge_of[h]]; });
    if (bare) out.per_component_faces[comp[uf.find(v)]]++;
  }
  return out;
}

std::vector<int> genera(const SubmapFaces& f) {
  std::vector<int> out;
  for (std::size_t k = 0; k < f.per_component_vertices.size(); ++k) {
    const int chi = f.per_component_vertices[k] - f.per_component_edges[k] + f.per_component_faces[k];
    out.push_back((2 - chi) / 2);
  }
  return out;
}

detail::Multigraph skeleton(const DecoratedMap& m) {
  const Incidence inc = incidence(m);
  detail::Multigraph g;
  g.n = m.num_vertices();
  for (const auto& e : m.edges) g.edges.push_back({inc.vertex_of[e.h1], inc.vertex_of[e.h2]});
  return g;
}

}  // namespace

void validate_map(const DecoratedMap& m) {
  const int H = 2 * m.num_edges();
  std::vector<int> in_edge(H, 0), in_vertex(H, 0);
  for (const auto& e : m.edges) {
    for (int h : {e.h1, e.h2}) {
      if (h < 0 || h >= H) throw Error(Errc::InvalidMap, "half-edge id " + std::to_string(h) + " out of range");
      if (in_edge[h]++) throw Error(Errc::InvalidMap, "half-edge " + std::to_string(h) + " belongs to two edges");
    }
    if (e.colors.d() != m.d) throw Error(Errc::InvalidMap, "edge color set " + e.colors.to_string() + " has the wrong d");
  }
  for (int v = 0; v < m.num_vertices(); ++v) {
    for (int h : m.rotation[v]) {
      if (h < 0 || h >= H) throw Error(Errc::InvalidMap, "half-edge id " + std::to_string(h) + " out of range");
      if (in_vertex[h]++) throw Error(Errc::InvalidMap, "half-edge " + std::to_string(h) + " attached twice");
    }
  }
  for (int h = 0; h < H; ++h)
    if (!in_vertex[h]) throw Error(Errc::InvalidMap, "half-edge " + std::to_string(h) + " is not attached to a vertex");
  if (!m.marked_corners.empty()) {
    if (static_cast<int>(m.marked_corners.size()) != m.num_vertices())
      throw Error(Errc::InvalidMap, "marked corners must be given for every vertex or none");
    for (int v = 0; v < m.num_vertices(); ++v) {
      const int k = std::max<int>(1, static_cast<int>(m.rotation[v].size()));
      if (m.marked_corners[v] < 0 || m.marked_corners[v] >= k)
        throw Error(Errc::InvalidMap, "vertex " + std::to_string(v) + " has an out-of-range marked corner");
    }
  }
  if (m.num_vertices() == 0) throw Error(Errc::InvalidMap, "a map needs at least one vertex");
}

bool is_connected(const DecoratedMap& m) {
  const auto g = skeleton(m);
  detail::UnionFind uf(g.n);
  int parts = g.n;
  for (const auto& [u, v] : g.edges)
    if (uf.unite(u, v)) --parts;
  return parts == 1;
}

int faces_of_color(const DecoratedMap& m, Color c) {
  std::vector<bool> keep(m.num_edges());
  for (int e = 0; e < m.num_edges(); ++e) keep[e] = m.edges[e].colors.contains(c);
  return submap_faces(m, keep, false).faces;
}

int total_faces(const DecoratedMap& m) {
  int total = 0;
  for (Color c = 1; c <= m.d; ++c) total += faces_of_color(m, c);
  return total;
}

int map_delta(const DecoratedMap& m) {
  int delta = total_faces(m);
  for (const auto& e : m.edges) delta += e.colors.size() - m.d;
  return delta;
}

std::vector<int> component_genera(const DecoratedMap& m) {
  return genera(submap_faces(m, std::vector<bool>(m.num_edges(), true), true));
}

bool is_planar(const DecoratedMap& m) {
  const auto g = component_genera(m);
  return std::all_of(g.begin(), g.end(), [](int x) { return x == 0; });
}

DecoratedMap edge_submap(const DecoratedMap& m, const std::vector<bool>& keep) {
  std::vector<int> new_id(2 * m.num_edges(), -1);
  DecoratedMap out;
  out.d = m.d;
  for (int e = 0; e < m.num_edges(); ++e) {
    if (!keep[e]) continue;
    const int k = out.num_edges();
    new_id[m.edges[e].h1] = 2 * k;
    new_id[m.edges[e].h2] = 2 * k + 1;
    out.edges.push_back({2 * k, 2 * k + 1, m.edges[e].colors});
  }
  for (const auto& rot : m.rotation) {
    std::vector<int> r;
    for (int h : rot)
      if (new_id[h] >= 0) r.push_back(new_id[h]);
    out.rotation.push_back(std::move(r));
  }
  return out;
}

DecoratedMap induced_submap(const DecoratedMap& m, const std::vector<bool>& keep) {
  DecoratedMap all = edge_submap(m, keep);
  DecoratedMap out;
  out.d = m.d;
  out.edges = all.edges;
  for (auto& r : all.rotation)
    if (!r.empty()) out.rotation.push_back(std::move(r));
  if (out.rotation.empty()) out.rotation.push_back({});
  return out;
}

std::vector<bool> bridges(const DecoratedMap& m) { return detail::blocks_and_bridges(skeleton(m)).bridge; }

std::vector<int> edge_blocks(const DecoratedMap& m) { return detail::blocks_and_bridges(skeleton(m)).block; }

DominanceReport classify_dominant(const DecoratedMap& m) {
  DominanceReport r;
  auto fail = [&r](int k, std::string why) {
    r.dominant = false;
    r.failed_condition = k;
    r.detail = std::move(why);
    return r;
  };
  if (!is_planar(m)) return fail(1, "the map is not planar");
  const auto blocks = detail::blocks_and_bridges(skeleton(m));
  for (int e = 0; e < m.num_edges(); ++e) {
    const auto& C = m.edges[e].colors;
    if (2 * C.size() < m.d && !blocks.bridge[e])
      return fail(2, "edge " + std::to_string(e) + " with color set " + C.to_string() + " is not a bridge");
  }
  std::map<ColorSet, std::vector<bool>> by_set;
  for (int e = 0; e < m.num_edges(); ++e) {
    auto& keep = by_set.try_emplace(m.edges[e].colors, std::vector<bool>(m.num_edges(), false)).first->second;
    keep[e] = true;
  }
  for (const auto& [C, keep] : by_set) {
    const auto g = genera(submap_faces(m, keep, true));
    if (std::any_of(g.begin(), g.end(), [](int x) { return x != 0; }))
      return fail(3, "the submap of color set " + C.to_string() + " is not planar");
  }
  std::map<int, ColorSet> block_set;
  for (int e = 0; e < m.num_edges(); ++e) {
    auto [it, fresh] = block_set.emplace(blocks.block[e], m.edges[e].colors);
    if (!fresh && it->second != m.edges[e].colors)
      return fail(4, "color sets " + it->second.to_string() + " and " + m.edges[e].colors.to_string() +
                         " share a cycle");
  }
  return r;
}

DecoratedMap unhook(const DecoratedMap& m, int edge, int end) {
  if (edge < 0 || edge >= m.num_edges() || (end != 0 && end != 1))
    throw Error(Errc::InvalidArgument, "no end " + std::to_string(end) + " of edge " + std::to_string(edge));
  if (bridges(m)[edge]) throw Error(Errc::EdgeIsBridge, "edge " + std::to_string(edge) + " is a bridge");
  const int h = end == 0 ? m.edges[edge].h1 : m.edges[edge].h2;
  DecoratedMap out = m;
  for (int v = 0; v < out.num_vertices(); ++v) {
    auto& rot = out.rotation[v];
    auto it = std::find(rot.begin(), rot.end(), h);
    if (it == rot.end()) continue;
    const int p = static_cast<int>(it - rot.begin());
    rot.erase(it);
    if (!out.marked_corners.empty()) {
      int& mc = out.marked_corners[v];
      const int k = static_cast<int>(rot.size());
      if (k == 0) mc = 0;
      else if (p <= mc) mc = ((mc - 1) % k + k) % k;
    }
    break;
  }
  out.rotation.push_back({h});
  if (!out.marked_corners.empty()) out.marked_corners.push_back(0);
  return out;
}

DecoratedMap map_from_plane_tree(const PlaneTree& t) {
  DecoratedMap m;
  m.d = t.d;
  for (const auto& v : t.vertices) {
    m.rotation.push_back(v.halfedges);
    m.marked_corners.push_back(v.marked_corner);
  }
  for (const auto& e : t.edges) m.edges.push_back({e.h1, e.h2, e.colors});
  return m;
}

DecoratedMap normalized(const DecoratedMap& m) {
  DecoratedMap out = m;
  out.marked_corners.clear();
  for (auto& rot : out.rotation)
    if (!rot.empty()) std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
  std::sort(out.rotation.begin(), out.rotation.end());
  return out;
}

bool same_map(const DecoratedMap& a, const DecoratedMap& b) {
  const auto na = normalized(a), nb = normalized(b);
  return na.d == nb.d && na.rotation == nb.rotation && na.edges == nb.edges;
}

}  // namespace melonforge
