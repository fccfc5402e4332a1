/** @file realset_test.cpp
 *  @brief Unit and randomized property tests for the flavored cell algebra.
 */

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "gdyn/realset.hpp"

using namespace gdyn;

namespace {

RealSet RS(std::initializer_list<Cell> cs) { return RealSet::from_cells(cs); }

ExtPoint ninf() { return ExtPoint::neg_inf(); }
ExtPoint pinf() { return ExtPoint::pos_inf(); }

// Exact probe points: rationals k/2 and irrationals k/2 + sqrt2/8 in [-4,4].
std::vector<Point> probes() {
  std::vector<Point> ps;
  for (int k = -8; k <= 8; ++k) {
    ps.emplace_back(Rat(k, 2));
    ps.emplace_back(Rat(k, 2), Rat(1, 8));
    ps.emplace_back(Rat(k, 2), Rat(-1, 8));
  }
  ps.emplace_back(Rat(0), Rat(1));  // sqrt2 itself
  return ps;
}

void check_same(const RealSet& s, const std::function<bool(const Point&)>& m) {
  for (const Point& p : probes()) {
    INFO("p = " << p.str() << " set = " << s.str());
    REQUIRE(s.contains(p) == m(p));
  }
}

Point rnd_endpoint(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 2), irr(0, 3);
  Rat a(num(rng), den(rng));
  if (irr(rng) == 0) return Point(a, Rat(1, 2));
  return Point(a);
}

Cell rnd_cell(std::mt19937& rng) {
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> fl(0, 2), unb(0, 9);
  Point a = rnd_endpoint(rng), b = rnd_endpoint(rng);
  if (b < a) std::swap(a, b);
  ExtPoint lo(a), hi(b);
  if (unb(rng) == 0) lo = ExtPoint::neg_inf();
  if (unb(rng) == 1) hi = ExtPoint::pos_inf();
  return cell(lo, hi, coin(rng), coin(rng), static_cast<Flavor>(fl(rng)));
}

RealSet rnd_set(std::mt19937& rng, int max_cells = 3) {
  std::uniform_int_distribution<int> nc(0, max_cells);
  std::vector<Cell> cs;
  int n = nc(rng);
  for (int i = 0; i < n; ++i) cs.push_back(rnd_cell(rng));
  return RealSet::from_cells(cs);
}

}  // namespace

TEST_CASE("normalization merges touching pieces into one cell") {
  // (0,1) u (1,2] u {1}  ==  (0,2]
  RealSet a = RS({open_cell(ExtPoint(Point(0)), ExtPoint(Point(1))),
                  cell(ExtPoint(Point(1)), ExtPoint(Point(2)), false, true),
                  point_cell(Point(1))});
  RealSet b = RS({cell(ExtPoint(Point(0)), ExtPoint(Point(2)), false, true)});
  REQUIRE(a == b);
  REQUIRE(a.cells().size() == 1);

  // Rationals of (0,1) plus irrationals of (0,1) give the full interval.
  RealSet rat = RS({open_cell(ExtPoint(Point(0)), ExtPoint(Point(1)),
                              Flavor::RatOnly)});
  RealSet irr = RS({open_cell(ExtPoint(Point(0)), ExtPoint(Point(1)),
                              Flavor::IrrOnly)});
  REQUIRE(rat.unite(irr) ==
          RS({open_cell(ExtPoint(Point(0)), ExtPoint(Point(1)))}));

  // Degenerate cells vanish.
  REQUIRE(RS({open_cell(ExtPoint(Point(1)), ExtPoint(Point(1)))}).empty());
  // A rationals-only singleton at an irrational point is empty.
  Cell c = point_cell(Point::sqrt2());
  c.flavor = Flavor::RatOnly;
  REQUIRE(RS({c}).empty());
}

TEST_CASE("membership, ordering and sqrt2 arithmetic") {
  Point s2 = Point::sqrt2();
  REQUIRE(Point(1) < s2);
  REQUIRE(s2 < Point(Rat(3, 2)));
  REQUIRE(s2 * s2 == Point(2));
  REQUIRE(!s2.is_rational());
  REQUIRE(Point::parse("3/2") == Point(Rat(3, 2)));
  REQUIRE(Point::parse("1-1/2*sqrt2") == Point(Rat(1), Rat(-1, 2)));
  REQUIRE(Point::parse("-1+2*sqrt2") == Point(Rat(-1), Rat(2)));
  REQUIRE(ExtPoint::parse("-inf") == ninf());
  REQUIRE(Point::parse(Point(Rat(-1, 3), Rat(2, 7)).str()) ==
          Point(Rat(-1, 3), Rat(2, 7)));

  RealSet q01 = RS({open_cell(ExtPoint(Point(0)), ExtPoint(Point(2)),
                              Flavor::RatOnly)});
  REQUIRE(q01.contains(Point(1)));
  REQUIRE(!q01.contains(s2));
  REQUIRE(q01.complement().contains(s2));
}

TEST_CASE("closure and interior, frozen values") {
  RealSet q = RS({open_cell(ExtPoint(Point(0)), ExtPoint(Point(1)),
                            Flavor::RatOnly)});
  REQUIRE(q.closure() == RS({closed_cell(Point(0), Point(1))}));
  REQUIRE(q.interior().empty());

  RealSet irr = RS({open_cell(ExtPoint(Point(0)), ExtPoint(Point(1)),
                              Flavor::IrrOnly)});
  REQUIRE(irr.interior().empty());
  REQUIRE(irr.closure() == RS({closed_cell(Point(0), Point(1))}));

  RealSet half = RS({cell(ExtPoint(Point(0)), ExtPoint(Point(1)), true, false)});
  REQUIRE(half.closure() == RS({closed_cell(Point(0), Point(1))}));
  REQUIRE(half.interior() ==
          RS({open_cell(ExtPoint(Point(0)), ExtPoint(Point(1)))}));

  // Density relative to a punctured-line carrier.
  RealSet rx = RealSet::whole_line().subtract(RealSet::single(Point(0)));
  RealSet pos = RS({open_cell(ExtPoint(Point(0)), pinf())});
  REQUIRE(!pos.is_dense_in(rx));
  REQUIRE(q.unite(irr).is_dense_in(RS({closed_cell(Point(0), Point(1))})));
  REQUIRE(RS({open_cell(ninf(), pinf(), Flavor::RatOnly)})
              .is_dense_in(RealSet::whole_line()));
}

TEST_CASE("compactness") {
  REQUIRE(RS({closed_cell(Point(0), Point(1))}).is_compact());
  REQUIRE(RealSet::single(Point(5)).is_compact());
  REQUIRE(RealSet::empty_set().is_compact());
  REQUIRE(!RS({open_cell(ExtPoint(Point(0)), ExtPoint(Point(1)))}).is_compact());
  REQUIRE(!RS({closed_cell(Point(0), Point(1), Flavor::RatOnly)}).is_compact());
  REQUIRE(!RS({open_cell(ExtPoint(Point(0)), pinf())}).is_compact());
  REQUIRE(RS({closed_cell(Point(0), Point(1))})
              .unite(RealSet::single(Point(3)))
              .is_compact());
}

TEST_CASE("boolean algebra against pointwise model, randomized") {
  std::mt19937 rng(20260826);
  for (int trial = 0; trial < 250; ++trial) {
    RealSet a = rnd_set(rng), b = rnd_set(rng);
    auto ma = [&](const Point& p) { return a.contains(p); };
    auto mb = [&](const Point& p) { return b.contains(p); };
    check_same(a.unite(b), [&](const Point& p) { return ma(p) || mb(p); });
    check_same(a.intersect(b), [&](const Point& p) { return ma(p) && mb(p); });
    check_same(a.subtract(b), [&](const Point& p) { return ma(p) && !mb(p); });
    check_same(a.complement(), [&](const Point& p) { return !ma(p); });

    REQUIRE(a.complement().complement() == a);
    REQUIRE(a.unite(b).complement() ==
            a.complement().intersect(b.complement()));
    REQUIRE(a.unite(b) == b.unite(a));
    REQUIRE(a.subset_of(a.unite(b)));
    // Distributivity.
    RealSet c = rnd_set(rng);
    REQUIRE(a.intersect(b.unite(c)) ==
            a.intersect(b).unite(a.intersect(c)));
  }
}

TEST_CASE("normal form uniqueness: rebuilding from own cells is identity") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    RealSet a = rnd_set(rng, 4);
    REQUIRE(RealSet::from_cells(a.cells()) == a);
    // Splitting a cell artificially and re-normalizing restores the form.
    std::vector<Cell> split;
    for (const Cell& c : a.cells()) {
      if (!c.is_singleton() && c.lo.finite() && c.hi.finite()) {
        Point mid = (c.lo.value() + c.hi.value()) * Rat(1, 2);
        split.push_back(cell(c.lo, ExtPoint(mid), c.lo_closed, false, c.flavor));
        Cell rest = cell(ExtPoint(mid), c.hi, true, c.hi_closed, c.flavor);
        if (!flavor_admits(c.flavor, mid)) rest.lo_closed = false;
        if (flavor_admits(c.flavor, mid)) {
          split.push_back(rest);
        } else {
          rest.lo_closed = false;
          split.push_back(rest);
        }
      } else {
        split.push_back(c);
      }
    }
    REQUIRE(RealSet::from_cells(split) == a);
  }
}

TEST_CASE("closure/interior duality and Kuratowski bound") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    RealSet a = rnd_set(rng, 3);
    REQUIRE(a.interior() == a.complement().closure().complement());
    REQUIRE(a.subset_of(a.closure()));
    REQUIRE(a.interior().subset_of(a));
    REQUIRE(a.closure().closure() == a.closure());
    REQUIRE(a.interior().interior() == a.interior());

    // Kuratowski: closure/complement generate at most 14 distinct sets.
    std::set<RealSet> seen;
    std::vector<RealSet> frontier{a};
    seen.insert(a);
    for (int step = 0; step < 16 && !frontier.empty(); ++step) {
      std::vector<RealSet> next;
      for (const RealSet& s : frontier)
        for (RealSet t : {s.closure(), s.complement()})
          if (seen.insert(t).second) next.push_back(t);
      frontier = next;
    }
    REQUIRE(seen.size() <= 14);
  }
}
