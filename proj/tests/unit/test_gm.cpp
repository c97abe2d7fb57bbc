#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "melonforge/error.hpp"
#include "melonforge/feynman.hpp"
#include "melonforge/generators.hpp"
#include "melonforge/gm.hpp"

using namespace melonforge;

TEST_SUITE("gm") {
  TEST_CASE("worked example multiset") {
    const Bubble b = fixtures::worked_example();
    CHECK(b.num_vertices() == 14);
    const auto cert = recognize_gm(b);
    REQUIRE(cert);
    CHECK(cert->multiset == fixtures::worked_example_multiset());
    CHECK(replay(*cert) == b);
    CHECK_FALSE(is_totally_unbalanced(*cert));
    // 1+2+1+2+2+1 = 9 colors over 6 insertions, d (V-2)/2 = 24
    CHECK(weighted_insertion_count(*cert) == 9);
    CHECK(scaling_coefficient(*cert) == -15);
  }

  TEST_CASE("two-vertex bubble has an empty certificate") {
    const auto cert = recognize_gm(Bubble::two_vertex(4));
    REQUIRE(cert);
    CHECK(cert->sequence.empty());
    CHECK(cert->multiset.empty());
    CHECK(cert->pairing == std::vector<VertexPair>{{0, 1}});
    CHECK(scaling_coefficient(*cert) == 0);
  }

  TEST_CASE("K33 is not generalized melonic") {
    CHECK_FALSE(recognize_gm(fixtures::k33()));
    CHECK_FALSE(recognize_gm_backtracking(fixtures::k33()));
  }

  TEST_CASE("canonical pairing of quartics") {
    // Q_{1} at d=3: the couples joined by {2,3}
    const auto c1 = recognize_gm(quartic(3, ColorSet(3, {1})));
    REQUIRE(c1);
    const Bubble q1 = quartic(3, ColorSet(3, {1}));
    for (const auto& [w, b] : c1->pairing) CHECK(q1.colors_between(w, b) == 0b110);
    // Q_{1,2} at d=4: the couples not joined by color 1
    const Bubble q12 = quartic(4, ColorSet(4, {1, 2}));
    const auto c12 = recognize_gm(q12);
    REQUIRE(c12);
    CHECK(c12->pairing.size() == 2);
    for (const auto& [w, b] : c12->pairing) CHECK(q12.colors_between(w, b) == 0b1100);
  }

  TEST_CASE("scaling coefficients") {
    for (int d = 3; d <= 6; ++d) {
      for (const auto& c : ColorSet::all_admissible(d)) {
        const auto cert = recognize_gm(quartic(d, c));
        REQUIRE(cert);
        CHECK(scaling_coefficient(*cert) == c.size() - d);
        CHECK(scaling_coefficient(*cert, d, 4) == c.size() - d);
      }
    }
    const auto melonic = recognize_gm(fixtures::melonic_six());
    REQUIRE(melonic);
    CHECK(scaling_coefficient(*melonic) == -4);
    CHECK(is_totally_unbalanced(*melonic));
    CHECK_THROWS_AS(scaling_coefficient(*melonic, 3, 8), Error);
  }

  TEST_CASE("pairing properties on random bubbles") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      const int d = 3 + trial % 4;
      const auto sample = random_gm_bubble(rng, d, 2 + 2 * (1 + trial % 5));
      const Bubble& b = sample.bubble;
      const auto cert = recognize_gm(b);
      REQUIRE(cert);
      CHECK(cert->multiset == sample.certificate.multiset);
      CHECK(cert->pairing == sample.certificate.pairing);
      int total = 0;
      for (const auto& [c, n] : cert->multiset) total += n;
      CHECK(total == b.num_vertices() / 2 - 1);
      std::set<VertexId> seen;
      for (const auto& [w, k] : cert->pairing) {
        CHECK(b.is_white(w));
        CHECK_FALSE(b.is_white(k));
        seen.insert(w);
        seen.insert(k);
      }
      CHECK(static_cast<int>(seen.size()) == b.num_vertices());
      const auto dominant = dominant_pairings(b);
      CHECK(std::find(dominant.begin(), dominant.end(), pairing_as_matching(b, cert->pairing)) != dominant.end());
    }
  }

  TEST_CASE("greedy recognition agrees with backtracking and with every removal order") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
      const auto sample = random_gm_bubble(rng, 3 + trial % 3, 8);
      const auto greedy = recognize_gm(sample.bubble);
      const auto full = recognize_gm_backtracking(sample.bubble);
      REQUIRE(greedy);
      REQUIRE(full);
      CHECK(greedy->multiset == full->multiset);
      CHECK(greedy->pairing == full->pairing);
      for (const auto& c : all_removal_certificates(sample.bubble, 200)) {
        CHECK(c.multiset == greedy->multiset);
        CHECK(c.pairing == greedy->pairing);
        CHECK(replay(c) == sample.bubble);
      }
    }
  }

  TEST_CASE("chooser variants") {
    const Bubble b = fixtures::worked_example();
    const auto last = recognize_gm(b, [](const std::vector<Bidipole>& v) { return v.size() - 1; });
    REQUIRE(last);
    CHECK(last->multiset == fixtures::worked_example_multiset());
    CHECK(replay(*last) == b);
  }

  TEST_CASE("backtracking size limit") {
    CHECK_THROWS_AS(recognize_gm_backtracking(fixtures::worked_example(), 12), Error);
  }
}
