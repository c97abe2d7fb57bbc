#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "melonforge/decorated_map.hpp"
#include "melonforge/error.hpp"
#include "melonforge/generators.hpp"
#include "melonforge/intermediate_field.hpp"

using namespace melonforge;

namespace {

DecoratedMap loop(int d, const ColorSet& c) { return DecoratedMap{d, {{0, 1}}, {{0, 1, c}}, {}}; }

DecoratedMap two_cycle(int d, const ColorSet& a, const ColorSet& b) {
  return DecoratedMap{d, {{0, 2}, {1, 3}}, {{0, 1, a}, {2, 3, b}}, {}};
}

}  // namespace

TEST_SUITE("maps") {
  TEST_CASE("face counts") {
    const DecoratedMap point{3, {{}}, {}, {}};
    CHECK(total_faces(point) == 3);
    const DecoratedMap l = loop(3, ColorSet(3, {1}));
    CHECK(faces_of_color(l, 1) == 2);
    CHECK(faces_of_color(l, 2) == 1);
    CHECK(faces_of_color(l, 3) == 1);
    CHECK(is_planar(l));
    // a one-vertex map with two interleaved loops is a torus
    const DecoratedMap torus{3, {{0, 2, 1, 3}}, {{0, 1, ColorSet(3, {1})}, {2, 3, ColorSet(3, {1})}}, {}};
    CHECK(component_genera(torus) == std::vector<int>{1});
    CHECK_FALSE(is_planar(torus));
  }

  TEST_CASE("plane trees: faces from the color sets") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
      const int d = 3 + trial % 4;
      const PlaneTree t = random_plane_tree(rng, d, 1 + trial % 6);
      const DecoratedMap m = map_from_plane_tree(t);
      int expected = d;
      for (const auto& e : t.edges) expected += d - e.colors.size();
      CHECK(total_faces(m) == expected);
      CHECK(map_delta(m) == d);
      CHECK(classify_dominant(m).dominant);
    }
  }

  TEST_CASE("unhooking") {
    const DecoratedMap l = loop(3, ColorSet(3, {1}));
    const DecoratedMap u = unhook(l, 0, 0);
    CHECK(u.num_vertices() == 2);
    CHECK(map_delta(l) == 2);
    CHECK(map_delta(u) == 3);
    const DecoratedMap balanced = loop(4, ColorSet(4, {1, 2}));
    CHECK(map_delta(unhook(balanced, 0, 1)) >= map_delta(balanced));
    try {
      unhook(u, 0, 0);
      FAIL("bridge accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::EdgeIsBridge);
    }
  }

  TEST_CASE("unhooking never lowers the degree") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      const DecoratedMap m = j_quartic(random_quartic_graph(rng, 3 + trial % 3, 1 + trial % 5));
      const auto br = bridges(m);
      for (int e = 0; e < m.num_edges(); ++e) {
        if (br[e]) continue;
        for (int end = 0; end < 2; ++end) {
          const DecoratedMap u = unhook(m, e, end);
          if (2 * m.edges[e].colors.size() < m.d) {
            CHECK(map_delta(u) > map_delta(m));
          } else {
            CHECK(map_delta(u) >= map_delta(m));
          }
        }
      }
    }
  }

  TEST_CASE("dominance conditions on small examples") {
    const DecoratedMap same = two_cycle(4, ColorSet(4, {1, 2}), ColorSet(4, {1, 2}));
    CHECK(map_delta(same) == 4);
    CHECK(classify_dominant(same).dominant);
    const DecoratedMap mixed = two_cycle(4, ColorSet(4, {1, 2}), ColorSet(4, {1, 3}));
    CHECK(map_delta(mixed) < 4);
    const auto report = classify_dominant(mixed);
    CHECK_FALSE(report.dominant);
    CHECK(report.failed_condition == 4);
    const DecoratedMap unbalanced_cycle = two_cycle(4, ColorSet(4, {1}), ColorSet(4, {1}));
    CHECK(classify_dominant(unbalanced_cycle).failed_condition == 2);
  }

  TEST_CASE("intermediate field map keeps bicolored cycles as faces") {
    // one quartic closed by its canonical pairs
    const Bubble q = quartic(3, ColorSet(3, {1}));
    const auto cq = *recognize_gm(q);
    const FeynmanGraph g({{0, std::make_shared<const Bubble>(q)}}, pairing_as_matching(q, cq.pairing));
    const DecoratedMap m = j_quartic(g);
    CHECK(m.num_edges() == 1);
    for (Color c = 1; c <= 3; ++c) CHECK(faces_of_color(m, c) == bicolored_cycles(g, c));

    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 500; ++trial) {
      const FeynmanGraph r = random_quartic_graph(rng, 3 + trial % 4, 1 + trial % 6, trial % 3 != 0);
      const DecoratedMap mr = j_quartic(r);
      CHECK(mr.num_edges() == r.num_copies());
      for (Color c = 1; c <= r.d(); ++c) CHECK(faces_of_color(mr, c) == fixtures::oracle_cycles(r, c));
      const FeynmanGraph back = j_quartic_inverse(mr);
      CHECK(back.black_of_white() == r.black_of_white());
      for (int k = 0; k < r.num_copies(); ++k) CHECK(back.copies()[k].interaction == r.copies()[k].interaction);
      CHECK(same_map(j_quartic(back), mr));
      CHECK(is_connected(mr) == r.connected());
    }
    CHECK_THROWS_AS(j_quartic(FeynmanGraph({{0, std::make_shared<const Bubble>(fixtures::melonic_six())}}, {0, 1, 2})),
                    Error);
  }

  TEST_CASE("dominance classification agrees with the degree on two and three quartics") {
    for (int d : {3, 4}) {
      const auto sets = ColorSet::all_admissible(d);
      for (int k = 1; k <= 3; ++k) {
        std::vector<int> pick(k, 0);
        while (true) {
          std::vector<BubbleCopy> copies;
          for (int r : pick) copies.push_back({r, std::make_shared<const Bubble>(quartic(d, sets[r]))});
          enumerate(copies, {}, [&](const FeynmanGraph& g) {
            const DecoratedMap m = j_quartic(g);
            CHECK(classify_dominant(m).dominant == (map_delta(m) == d));
          });
          int i = k - 1;
          while (i >= 0 && pick[i] == static_cast<int>(sets.size()) - 1) --i;
          if (i < 0) break;
          ++pick[i];
          for (int j = i + 1; j < k; ++j) pick[j] = pick[i];
        }
      }
    }
  }

  TEST_CASE("connected submaps have at least the degree of the map") {
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 80; ++trial) {
      const DecoratedMap m = j_quartic(random_quartic_graph(rng, 3 + trial % 2, 2 + trial % 3));
      const int E = m.num_edges();
      for (int mask = 1; mask < (1 << E); ++mask) {
        std::vector<bool> keep(E);
        for (int e = 0; e < E; ++e) keep[e] = (mask >> e) & 1;
        const DecoratedMap sub = induced_submap(m, keep);
        if (!is_connected(sub)) continue;
        CHECK(map_delta(m) <= map_delta(sub));
      }
    }
  }
}
