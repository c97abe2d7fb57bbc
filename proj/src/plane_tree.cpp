#include "melonforge/plane_tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "melonforge/error.hpp"

namespace melonforge {

void validate_plane_tree(const PlaneTree& t) {
  const int E = t.num_edges();
  if (E == 0) throw Error(Errc::NotAPlaneTree, "a plane tree needs at least one edge");
  if (static_cast<int>(t.vertices.size()) != E + 1) {
    throw Error(Errc::NotAPlaneTree, std::to_string(t.vertices.size()) + " vertices and " +
                                         std::to_string(E) + " edges cannot form a tree");
  }
  const int H = 2 * E;
  std::vector<int> edge_seen(H, 0), vertex_seen(H, 0);
  for (int j = 0; j < E; ++j) {
    const auto& e = t.edges[j];
    for (int h : {e.h1, e.h2}) {
      if (h < 0 || h >= H) throw Error(Errc::NotAPlaneTree, "half-edge id " + std::to_string(h) + " out of range");
      if (edge_seen[h]++) throw Error(Errc::NotAPlaneTree, "half-edge " + std::to_string(h) + " used by two edges");
    }
    if (e.colors.d() != t.d) {
      throw Error(Errc::InvalidColorCount, "edge " + std::to_string(j) + " has a color set for d=" +
                                               std::to_string(e.colors.d()));
    }
  }
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    const auto& vx = t.vertices[v];
    if (vx.halfedges.empty()) throw Error(Errc::NotAPlaneTree, "vertex " + std::to_string(v) + " is isolated");
    if (vx.marked_corner < 0 || vx.marked_corner >= static_cast<int>(vx.halfedges.size())) {
      throw Error(Errc::NotAPlaneTree, "vertex " + std::to_string(v) + " has marked corner " +
                                           std::to_string(vx.marked_corner) + " out of range");
    }
    for (int h : vx.halfedges) {
      if (h < 0 || h >= H) throw Error(Errc::NotAPlaneTree, "half-edge id " + std::to_string(h) + " out of range");
      if (vertex_seen[h]++) throw Error(Errc::NotAPlaneTree, "half-edge " + std::to_string(h) + " attached twice");
    }
  }
  for (int h = 0; h < H; ++h) {
    if (!vertex_seen[h]) throw Error(Errc::NotAPlaneTree, "half-edge " + std::to_string(h) + " is not attached");
  }
  // connectivity (with E = V - 1 this also rules out cycles)
  const auto hv = halfedge_vertex(t);
  const int V = E + 1;
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : t.edges) {
    const int a = find(hv[e.h1]), b = find(hv[e.h2]);
    if (a == b) throw Error(Errc::NotAPlaneTree, "edge (" + std::to_string(e.h1) + "," + std::to_string(e.h2) + ") closes a cycle");
    parent[a] = b;
  }
}

std::vector<int> halfedge_vertex(const PlaneTree& t) {
  std::vector<int> out(t.num_halfedges(), -1);
  for (std::size_t v = 0; v < t.vertices.size(); ++v)
    for (int h : t.vertices[v].halfedges) out.at(h) = static_cast<int>(v);
  return out;
}

std::vector<int> halfedge_edge(const PlaneTree& t) {
  std::vector<int> out(t.num_halfedges(), -1);
  for (int j = 0; j < t.num_edges(); ++j) {
    out.at(t.edges[j].h1) = j;
    out.at(t.edges[j].h2) = j;
  }
  return out;
}

std::vector<int> halfedge_partner(const PlaneTree& t) {
  std::vector<int> out(t.num_halfedges(), -1);
  for (const auto& e : t.edges) {
    out.at(e.h1) = e.h2;
    out.at(e.h2) = e.h1;
  }
  return out;
}

std::vector<int> ccw_from_marked(const PlaneTreeVertex& v) {
  const int k = static_cast<int>(v.halfedges.size());
  std::vector<int> out;
  out.reserve(k);
  for (int i = 1; i <= k; ++i) out.push_back(v.halfedges[(v.marked_corner + i) % k]);
  return out;
}

PlaneTree normalized(const PlaneTree& t) {
  PlaneTree out = t;
  for (auto& v : out.vertices) {
    v.halfedges = ccw_from_marked(v);
    v.marked_corner = static_cast<int>(v.halfedges.size()) - 1;
  }
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const PlaneTreeVertex& a, const PlaneTreeVertex& b) { return a.halfedges < b.halfedges; });
  return out;
}

bool same_plane_tree(const PlaneTree& a, const PlaneTree& b) {
  const PlaneTree na = normalized(a), nb = normalized(b);
  return na.d == nb.d && na.vertices == nb.vertices && na.edges == nb.edges;
}

}  // namespace melonforge
