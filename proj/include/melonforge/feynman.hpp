#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "melonforge/bubble.hpp"
#include "melonforge/gluing.hpp"
#include "melonforge/gm.hpp"
#include "melonforge/rational.hpp"

namespace melonforge {

struct BubbleCopy {
  int interaction = 0;
  std::shared_ptr<const Bubble> bubble;
};

/// A vertex of a Feynman graph: bubble copy index and vertex id in that copy.
struct VertexRef {
  int copy;
  VertexId id;
  friend bool operator==(const VertexRef&, const VertexRef&) = default;
  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

/// Bubble copies plus a perfect color-0 matching between their white and
/// black vertices. Whites and blacks are numbered globally: copy by copy,
/// each copy in increasing id order.
class FeynmanGraph {
 public:
  /// `black_of_white[i]` is the global black matched to global white i.
  FeynmanGraph(std::vector<BubbleCopy> copies, std::vector<int> black_of_white);
  static FeynmanGraph from_pairs(std::vector<BubbleCopy> copies,
                                 const std::vector<std::pair<VertexRef, VertexRef>>& pairs);

  int d() const noexcept { return d_; }
  int num_copies() const noexcept { return static_cast<int>(copies_.size()); }
  const std::vector<BubbleCopy>& copies() const noexcept { return copies_; }
  int num_whites() const noexcept { return static_cast<int>(black_of_white_.size()); }

  VertexRef white(int global) const;
  VertexRef black(int global) const;
  int global_white(const VertexRef& v) const;
  int global_black(const VertexRef& v) const;

  const std::vector<int>& black_of_white() const noexcept { return black_of_white_; }
  const std::vector<int>& white_of_black() const noexcept { return white_of_black_; }
  /// Global black joined to global white w by color c (1..d).
  int color_neighbor_of_white(int w, Color c) const { return white_nbr_[w * d_ + c - 1]; }
  int color_neighbor_of_black(int b, Color c) const { return black_nbr_[b * d_ + c - 1]; }
  int copy_of_white(int w) const { return white_copy_[w]; }
  int copy_of_black(int b) const { return black_copy_[b]; }

  /// Matching as ((copy, white id), (copy, black id)) pairs.
  std::vector<std::pair<VertexRef, VertexRef>> matching_pairs() const;
  /// Number of copies of each interaction.
  std::map<int, int> interaction_counts() const;
  bool connected() const;

  /// Replaces the matching in place (used by the enumerator).
  void set_matching(std::span<const int> black_of_white);

 private:
  void build_tables();

  int d_ = 0;
  std::vector<BubbleCopy> copies_;
  std::vector<int> white_base_, black_base_;
  std::vector<int> white_copy_, black_copy_;
  std::vector<int> white_nbr_, black_nbr_;
  std::vector<int> black_of_white_, white_of_black_;
};

/// Cycles alternating color 0 and color c.
int bicolored_cycles(const FeynmanGraph& g, Color c);
/// Sum over c = 1..d of bicolored_cycles.
int total_bicolored_cycles(const FeynmanGraph& g);

struct Amplitude {
  Rational n_exponent;
  std::map<int, int> coupling_powers;
};

/// delta(G) = sum_c L_0c + sum_r s_r b_r. Throws MissingScaling.
Amplitude delta(const FeynmanGraph& g, const std::map<int, Rational>& scalings);

struct EnumerationOptions {
  bool connected_only = true;
  int cap = 9;  // maximal number of white vertices
};

/// Copies of each (bubble, count) entry get interaction id = entry index.
std::vector<BubbleCopy> make_copies(const std::vector<std::pair<Bubble, int>>& bubbles);

/// Visits every perfect matching once, in lexicographic order of the black
/// targets of the whites. The graph passed to the visitor is reused between
/// calls. Throws CapExceeded.
void enumerate(const std::vector<std::pair<Bubble, int>>& bubbles, const EnumerationOptions& options,
               const std::function<void(const FeynmanGraph&)>& visit);
void enumerate(std::vector<BubbleCopy> copies, const EnumerationOptions& options,
               const std::function<void(const FeynmanGraph&)>& visit);

/// Number of visited graphs for each value of sum_c L_0c, computed on up to
/// `threads` workers that split the matchings by the target of the first white.
std::map<int, std::size_t> cycle_histogram(std::vector<BubbleCopy> copies, const EnumerationOptions& options,
                                           int threads = 1);

struct GmaxResult {
  Rational delta_max;
  std::vector<FeynmanGraph> graphs;
  std::size_t examined = 0;
};

/// Graphs attaining the largest delta.
GmaxResult gmax_filter(const std::vector<FeynmanGraph>& graphs, const std::map<int, Rational>& scalings);
GmaxResult gmax(const std::vector<std::pair<Bubble, int>>& bubbles, const std::map<int, Rational>& scalings,
                const EnumerationOptions& options = {});

/// Single-bubble pairings maximizing the number of bicolored cycles, each as
/// black_of_white over the bubble's sorted whites and blacks.
std::vector<std::vector<int>> dominant_pairings(const Bubble& b, int cap = 9);
/// The pairing of a bubble as black_of_white over sorted whites / blacks.
std::vector<int> pairing_as_matching(const Bubble& b, const std::vector<VertexPair>& pairs);

/// b copies of a GM bubble, each matched by its canonical pairing, chained by
/// exchanging the partners of one color-0 edge of the first copy with the
/// base pair edge of each further copy.
FeynmanGraph tree_family(const Bubble& b, const GmCertificate& cert, int copies);

enum class TwoCutStatus { Maximal2Cut, TwoCutOnly, Neither };

/// Whether the marked copy has a pairing whose pairs are joined by a color-0
/// edge or by two color-0 edges forming a 2-edge-cut, and whether such a
/// pairing is dominant for the bubble alone.
TwoCutStatus maximal_2cut_check(const FeynmanGraph& g, int marked_copy);

/// Copies of quartic trees H_r joined by external dashed lines between their
/// free vertices.
struct GluedFeynmanGraph {
  int d = 0;
  std::vector<int> interactions;
  std::vector<GluingGraph> copies;
  std::vector<std::pair<VertexRef, VertexRef>> external;  // (white, black)
};

/// Every quartic of every copy as a separate bubble; internal and external
/// dashed lines both become color-0 edges.
FeynmanGraph as_quartic_graph(const GluedFeynmanGraph& g);
/// Contracts the internal dashed lines of every copy.
FeynmanGraph surjection_S(const GluedFeynmanGraph& g);
/// Replaces each bubble copy by a gluing graph whose boundary is that
/// bubble (same vertex ids).
GluedFeynmanGraph lift(const FeynmanGraph& g, const std::vector<GluingGraph>& h_of_copy);

}  // namespace melonforge
