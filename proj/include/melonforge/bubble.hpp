#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "melonforge/color_set.hpp"

namespace melonforge {

using VertexId = int;

struct ColoredEdge {
  Color c;
  VertexId w;
  VertexId b;
  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Unchecked graph data as read from input.
struct RawBubble {
  int d = 0;
  std::vector<VertexId> whites;
  std::vector<VertexId> blacks;
  std::vector<ColoredEdge> edges;
};

/// A connected, bipartite, d-regular graph with a proper edge coloring by
/// {1..d}. Vertex ids are stable integers chosen by the caller; internally
/// vertices are indexed densely, whites (sorted by id) first.
class Bubble {
 public:
  static Bubble validate(const RawBubble& raw);
  /// The bubble with one white and one black vertex joined by all d colors.
  static Bubble two_vertex(int d, VertexId white = 0, VertexId black = 1);

  int d() const noexcept { return d_; }
  int num_vertices() const noexcept { return static_cast<int>(ids_.size()); }
  int num_whites() const noexcept { return num_whites_; }
  std::vector<VertexId> whites() const;
  std::vector<VertexId> blacks() const;
  /// Sorted by (color, white, black).
  std::vector<ColoredEdge> edges() const;
  RawBubble raw() const;
  VertexId max_id() const noexcept;

  bool has_vertex(VertexId v) const noexcept { return find_index(v) >= 0; }
  bool is_white(VertexId v) const;
  VertexId neighbor(VertexId v, Color c) const;
  /// Bit c-1 set when a and b are joined by color c.
  std::uint32_t colors_between(VertexId a, VertexId b) const;

  // Dense-index view used by the algorithms.
  int index_of(VertexId v) const;
  VertexId id_at(int index) const { return ids_[index]; }
  bool white_at(int index) const noexcept { return index < num_whites_; }
  int neighbor_index(int index, Color c) const { return adj_[index * d_ + (c - 1)]; }

  /// Same vertex ids and same colored edges.
  friend bool operator==(const Bubble& a, const Bubble& b) {
    return a.d_ == b.d_ && a.num_whites_ == b.num_whites_ && a.ids_ == b.ids_ && a.adj_ == b.adj_;
  }

 private:
  Bubble() = default;
  int find_index(VertexId v) const noexcept;

  int d_ = 0;
  int num_whites_ = 0;
  std::vector<VertexId> ids_;
  std::vector<int> adj_;
};

/// The 4-vertex bubble Q_C with vertex ids 0 (white), 1 (black), 2 (white),
/// 3 (black): 0-1 and 2-3 are joined by the complement of C, 0-3 and 2-1 by C.
Bubble quartic(int d, const ColorSet& colors);

/// Three vertices v, vbar, w where vbar is joined to w by the colors of C and
/// to v by the complement.
struct Bidipole {
  VertexId v;
  VertexId vbar;
  VertexId w;
  ColorSet colors;
  friend bool operator==(const Bidipole&, const Bidipole&) = default;
};

/// Replaces x by a C-bidipole. x keeps its id and plays the role of w; the new
/// vertex v takes over the C-colored edges of x. Fresh ids default to
/// max_id()+1 (v) and max_id()+2 (vbar).
Bubble insert_bidipole(const Bubble& b, VertexId x, const ColorSet& colors);
Bubble insert_bidipole(const Bubble& b, VertexId x, const ColorSet& colors, VertexId new_v,
                       VertexId new_vbar);

/// Every bidipole, ordered by (w, C, vbar).
std::vector<Bidipole> find_bidipoles(const Bubble& b);

/// Inverse of insert_bidipole: v and vbar disappear, w keeps its id.
Bubble remove_bidipole(const Bubble& b, const Bidipole& dipole);

/// Color- and bipartition-preserving isomorphism test.
bool iso_check(const Bubble& a, const Bubble& b, int size_limit = 4096);

/// Vertices of the bubble in a form convenient for messages: "w3" / "b7".
std::string vertex_label(const Bubble& b, VertexId v);

}  // namespace melonforge
