#pragma once

#include <random>

#include "melonforge/feynman.hpp"
#include "melonforge/gm.hpp"
#include "melonforge/plane_tree.hpp"

namespace melonforge {

/// Uniform admissible color set with |C| <= max_size (0 means d/2).
ColorSet random_color_set(std::mt19937_64& rng, int d, int max_size = 0);

struct GmSample {
  Bubble bubble;
  GmCertificate certificate;
};

/// Replays (V-2)/2 random insertions at uniformly chosen vertices.
GmSample random_gm_bubble(std::mt19937_64& rng, int d, int num_vertices, int max_size = 0);

/// Grows a tree by attaching leaves at random positions of random vertices,
/// then marks a random corner at every vertex.
PlaneTree random_plane_tree(std::mt19937_64& rng, int d, int num_edges, int max_size = 0);

/// Random quartic bubbles with a uniformly random matching, redrawn until
/// connected when requested.
FeynmanGraph random_quartic_graph(std::mt19937_64& rng, int d, int copies, bool connected = true);

}  // namespace melonforge
