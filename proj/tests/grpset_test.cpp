/** @file grpset_test.cpp
 *  @brief Unit and randomized property tests for eventually periodic Z-sets.
 */

#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "gdyn/grpset.hpp"

using gdyn::GrpSet;
using Int = GrpSet::Int;

namespace {

// A reference model: membership callback, checked on a wide range.
using Model = std::function<bool(Int)>;

void check_matches(const GrpSet& s, const Model& m, Int radius = 64) {
  for (Int n = -radius; n <= radius; ++n) {
    INFO("n = " << n << " set = " << s.to_string());
    REQUIRE(s.contains(n) == m(n));
  }
}

GrpSet random_set(std::mt19937& rng) {
  std::uniform_int_distribution<Int> pd(1, 4), wd(0, 6), vd(-8, 8);
  Int p = pd(rng);
  Int lo = vd(rng);
  size_t wlen = static_cast<size_t>(wd(rng));
  std::vector<bool> window(wlen);
  std::set<Int> l, r;
  std::bernoulli_distribution coin(0.4);
  for (size_t i = 0; i < wlen; ++i) window[i] = coin(rng);
  for (Int q = 0; q < p; ++q) {
    if (coin(rng)) l.insert(q);
    if (coin(rng)) r.insert(q);
  }
  return GrpSet::make(p, lo, window, l, r);
}

}  // namespace

TEST_CASE("basic constructors") {
  REQUIRE(GrpSet().empty());
  REQUIRE(GrpSet::all().contains(-1000000));
  REQUIRE(GrpSet::all().syndetic_in_z());
  REQUIRE(!GrpSet::singleton(3).syndetic_in_z());
  check_matches(GrpSet::singleton(3), [](Int n) { return n == 3; });
  check_matches(GrpSet::subgroup(3), [](Int n) { return n % 3 == 0; });
  check_matches(GrpSet::from(5), [](Int n) { return n >= 5; });
  check_matches(GrpSet::up_to(-2), [](Int n) { return n <= -2; });
  check_matches(GrpSet::from_elements({-4, 0, 7}),
                [](Int n) { return n == -4 || n == 0 || n == 7; });
}

TEST_CASE("normal form uniqueness on aliased constructions") {
  // Same set built three different ways must compare equal.
  GrpSet a = GrpSet::subgroup(2);
  GrpSet b = GrpSet::make(4, -2, {true, false, true, false, true},
                          {0, 2}, {0, 2});
  GrpSet c = GrpSet::all().intersect(GrpSet::subgroup(2));
  REQUIRE(a == b);
  REQUIRE(a == c);

  // Crossover sets keep their crossover position.
  GrpSet evens_then_odds =
      GrpSet::subgroup(2).intersect(GrpSet::up_to(4)).unite(
          GrpSet::subgroup(2).translate(1).intersect(GrpSet::from(5)));
  check_matches(evens_then_odds, [](Int n) {
    return n <= 4 ? n % 2 == 0 : (n % 2 + 2) % 2 == 1;
  });
  GrpSet same = GrpSet::make(
      2, 3, {false, true, true},
      {0}, {1});
  check_matches(same, [](Int n) {
    return n <= 4 ? n % 2 == 0 : (n % 2 + 2) % 2 == 1;
  });
  REQUIRE(evens_then_odds == same);
}

TEST_CASE("subgroup recognition") {
  REQUIRE(GrpSet::subgroup(1).is_subgroup());
  REQUIRE(GrpSet::subgroup(5).is_subgroup());
  REQUIRE(GrpSet::singleton(0).is_subgroup());
  REQUIRE(!GrpSet::singleton(1).is_subgroup());
  REQUIRE(!GrpSet::from(0).is_subgroup());
  REQUIRE(!GrpSet::subgroup(3).translate(1).is_subgroup());
}

TEST_CASE("boolean algebra against the model, randomized") {
  std::mt19937 rng(20260826);
  for (int trial = 0; trial < 300; ++trial) {
    GrpSet a = random_set(rng), b = random_set(rng);
    Model ma = [a](Int n) { return a.contains(n); };
    Model mb = [b](Int n) { return b.contains(n); };
    check_matches(a.unite(b), [&](Int n) { return ma(n) || mb(n); });
    check_matches(a.intersect(b), [&](Int n) { return ma(n) && mb(n); });
    check_matches(a.subtract(b), [&](Int n) { return ma(n) && !mb(n); });
    check_matches(a.complement(), [&](Int n) { return !ma(n); });
    check_matches(a.negate(), [&](Int n) { return ma(-n); });
    check_matches(a.translate(5), [&](Int n) { return ma(n - 5); });
    check_matches(a.translate(-3), [&](Int n) { return ma(n + 3); });

    // De Morgan and double complement, as normal-form equalities.
    REQUIRE(a.complement().complement() == a);
    REQUIRE(a.unite(b).complement() == a.complement().intersect(b.complement()));
    REQUIRE(a.subtract(b) == a.intersect(b.complement()));

    // Normal form: rebuilding from sampled content gives the same object.
    REQUIRE(a.unite(b) == b.unite(a));
  }
}

TEST_CASE("minkowski sum, randomized against brute force") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    GrpSet a = random_set(rng), b = random_set(rng);
    GrpSet s = a.sum(b);
    // Brute-force membership over a modest range: n in A+B iff some a0 in
    // [-R, R] with a0 in A and n - a0 in B.  R chosen past both windows and
    // several periods, so if a witness exists at all, one exists in range.
    Int r = 80;
    for (Int n = -40; n <= 40; ++n) {
      bool expect = false;
      for (Int a0 = -r; a0 <= r && !expect; ++a0)
        expect = a.contains(a0) && b.contains(n - a0);
      INFO("n=" << n << " A=" << a.to_string() << " B=" << b.to_string()
                << " S=" << s.to_string());
      REQUIRE(s.contains(n) == expect);
    }
  }
  // Identities: S + {0} = S, dZ + dZ = dZ.
  REQUIRE(GrpSet::subgroup(3).sum(GrpSet::subgroup(3)) == GrpSet::subgroup(3));
  REQUIRE(GrpSet::from(2).sum(GrpSet::singleton(0)) == GrpSet::from(2));
  REQUIRE(GrpSet::from(0).sum(GrpSet::up_to(0)) == GrpSet::all());
}

TEST_CASE("syndeticity and finiteness") {
  REQUIRE(GrpSet::subgroup(7).syndetic_in_z());
  REQUIRE(!GrpSet::from(0).syndetic_in_z());
  REQUIRE(!GrpSet::from_elements({1, 2, 3}).syndetic_in_z());
  REQUIRE(GrpSet::from_elements({1, 2, 3}).is_finite());
  REQUIRE(!GrpSet::subgroup(2).is_finite());
  REQUIRE(GrpSet::all().subtract(GrpSet::singleton(0)).syndetic_in_z());
}
