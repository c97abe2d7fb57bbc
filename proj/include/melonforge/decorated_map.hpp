#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "melonforge/color_set.hpp"
#include "melonforge/plane_tree.hpp"
#include "melonforge/rational.hpp"

namespace melonforge {

struct MapEdge {
  int h1;
  int h2;
  ColorSet colors;
  friend bool operator==(const MapEdge&, const MapEdge&) = default;
};

/// A combinatorial map given by the counter-clockwise order of half-edges
/// around each vertex, with a color set on every edge. Half-edge ids are
/// 0..2E-1. Marked corners are optional (empty means none).
struct DecoratedMap {
  int d = 0;
  std::vector<std::vector<int>> rotation;
  std::vector<MapEdge> edges;
  std::vector<int> marked_corners;

  int num_vertices() const noexcept { return static_cast<int>(rotation.size()); }
  int num_edges() const noexcept { return static_cast<int>(edges.size()); }
};

/// Throws InvalidMap on inconsistent half-edges or color sets.
void validate_map(const DecoratedMap& m);
bool is_connected(const DecoratedMap& m);

/// Faces of the submap keeping the edges whose color set contains c;
/// vertices left isolated count one face each.
int faces_of_color(const DecoratedMap& m, Color c);
/// Sum of faces_of_color over c = 1..d.
int total_faces(const DecoratedMap& m);
/// Large-N degree with quartic scalings |C| - d:
/// sum_c F_c + sum_e (|C_e| - d).
int map_delta(const DecoratedMap& m);

/// Genus of every connected component, as an ordinary map.
std::vector<int> component_genera(const DecoratedMap& m);
bool is_planar(const DecoratedMap& m);

/// Keeps the edges selected by `keep` (indexed like m.edges) and all vertices.
DecoratedMap edge_submap(const DecoratedMap& m, const std::vector<bool>& keep);
/// Keeps the selected edges and only the vertices they touch; with no edge
/// selected the result is a single bare vertex.
DecoratedMap induced_submap(const DecoratedMap& m, const std::vector<bool>& keep);

std::vector<bool> bridges(const DecoratedMap& m);
/// Biconnected block of every edge; self-loops form their own block.
std::vector<int> edge_blocks(const DecoratedMap& m);

struct DominanceReport {
  bool dominant = true;
  int failed_condition = 0;  // 0 when dominant, else 1..4
  std::string detail;
};

/// The four conditions characterizing maximal quartic maps, checked in order:
/// 1 planar, 2 edges with |C| < d/2 are bridges, 3 every M_C planar,
/// 4 every biconnected block carries a single color set.
DominanceReport classify_dominant(const DecoratedMap& m);

/// Detaches half-edge h1 (end 0) or h2 (end 1) of edge e and hangs it on a
/// new leaf vertex. Throws EdgeIsBridge.
DecoratedMap unhook(const DecoratedMap& m, int edge, int end);

/// The plane tree seen as a map with its marked corners.
DecoratedMap map_from_plane_tree(const PlaneTree& t);

/// Rotates each vertex to start at its smallest half-edge and sorts vertices.
DecoratedMap normalized(const DecoratedMap& m);
bool same_map(const DecoratedMap& a, const DecoratedMap& b);

}  // namespace melonforge
