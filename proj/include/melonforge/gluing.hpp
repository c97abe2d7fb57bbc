#pragma once

#include <array>
#include <vector>

#include "melonforge/bubble.hpp"
#include "melonforge/gm.hpp"
#include "melonforge/plane_tree.hpp"

namespace melonforge {

/// A quartic bubble with vertices laid out as in quartic(): w0, b0, w1, b1.
/// w0-b0 and w1-b1 are the canonical pairs (joined by the complement of C).
struct QuarticNode {
  ColorSet colors;
  std::array<VertexId, 4> vertices;
  friend bool operator==(const QuarticNode&, const QuarticNode&) = default;
};

/// Quartic bubbles joined by dashed lines, each dashed line given as
/// (white, black).
struct GluingGraph {
  int d = 0;
  std::vector<QuarticNode> quartics;
  std::vector<VertexPair> dashed;

  std::vector<VertexId> free_vertices() const;
  int num_free() const { return static_cast<int>(free_vertices().size()); }
};

/// Checks ids, colors and that every vertex carries at most one dashed line.
void validate_gluing(const GluingGraph& g);

/// Contracts every dashed line.
Bubble boundary(const GluingGraph& g);

/// Connected and every dashed line is an edge-cut.
bool is_tree_gluing(const GluingGraph& g);

/// A tree of quartics whose boundary is exactly b (same vertex ids), built
/// from the insertion sequence of the certificate.
GluingGraph decompose(const Bubble& b, const GmCertificate& cert);

/// Quartic j becomes edge j with half-edges 2j (pair w0,b0) and 2j+1 (pair
/// w1,b1); dashed lines become unmarked corners.
PlaneTree to_plane_tree(const GluingGraph& g);
/// Inverse of to_plane_tree; quartic j gets vertex ids 4j..4j+3.
GluingGraph from_plane_tree(const PlaneTree& t);

/// Renames vertices of quartic j to 4j..4j+3 and sorts dashed lines.
GluingGraph relabeled(const GluingGraph& g);
/// Equal after relabeled().
bool same_gluing(const GluingGraph& a, const GluingGraph& b);

}  // namespace melonforge
