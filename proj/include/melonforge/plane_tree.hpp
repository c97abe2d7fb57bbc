#pragma once

#include <vector>

#include "melonforge/color_set.hpp"

namespace melonforge {

/// Corner i of a vertex lies between halfedges[i] and halfedges[i + 1]
/// (cyclically), following the counter-clockwise order.
struct PlaneTreeVertex {
  std::vector<int> halfedges;
  int marked_corner = 0;
  friend bool operator==(const PlaneTreeVertex&, const PlaneTreeVertex&) = default;
};

struct PlaneTreeEdge {
  int h1;
  int h2;
  ColorSet colors;
  friend bool operator==(const PlaneTreeEdge&, const PlaneTreeEdge&) = default;
};

/// A plane tree with one marked corner per vertex and a color set per edge.
/// Half-edge ids are 0..2E-1.
struct PlaneTree {
  int d = 0;
  std::vector<PlaneTreeVertex> vertices;
  std::vector<PlaneTreeEdge> edges;

  int num_edges() const noexcept { return static_cast<int>(edges.size()); }
  int num_halfedges() const noexcept { return 2 * num_edges(); }
  /// Number of free vertices of the corresponding gluing graph, 2E + 2.
  int bubble_size() const noexcept { return 2 * num_edges() + 2; }

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

/// Throws NotAPlaneTree unless the data describe a tree with consistent
/// half-edges and marked corners.
void validate_plane_tree(const PlaneTree& t);

/// Vertex index of each half-edge.
std::vector<int> halfedge_vertex(const PlaneTree& t);
/// Edge index of each half-edge.
std::vector<int> halfedge_edge(const PlaneTree& t);
/// The other half-edge of the same edge.
std::vector<int> halfedge_partner(const PlaneTree& t);

/// Rotates every vertex so that its marked corner is the last one and sorts
/// vertices by their first half-edge.
PlaneTree normalized(const PlaneTree& t);
bool same_plane_tree(const PlaneTree& a, const PlaneTree& b);

/// Half-edges around vertex v in counter-clockwise order starting right
/// after the marked corner.
std::vector<int> ccw_from_marked(const PlaneTreeVertex& v);

}  // namespace melonforge
