#pragma once

#include "melonforge/decorated_map.hpp"
#include "melonforge/feynman.hpp"

namespace melonforge {

/// Intermediate-field map of a Feynman graph whose bubbles are all quartic.
/// Copy j becomes edge j with half-edge 2j for the canonical pair of its
/// first white vertex and 2j+1 for the other pair; vertices are the cycles
/// alternating canonical pairs and color-0 edges. Throws NonQuarticBubble.
DecoratedMap j_quartic(const FeynmanGraph& g);

/// Inverse of j_quartic: edge j becomes quartic(d, C_j) with ids 0..3, h1 the
/// pair (0,1), h2 the pair (2,3). Interaction ids index
/// ColorSet::all_admissible(d).
FeynmanGraph j_quartic_inverse(const DecoratedMap& m);

/// Color set and canonical pairs of a 4-vertex bubble, as
/// (C, {w0, partner(w0), w1, partner(w1)}).
std::pair<ColorSet, std::array<VertexId, 4>> quartic_layout(const Bubble& b);

}  // namespace melonforge
