/**
 * @file dynamics_test.cpp
 * @brief Dynamical deciders over block groupoid actions: point
 *        classification, limit sets, recurrence, minimal sets, the
 *        transitivity hierarchy and mixing, checked against hand-computed
 *        reference values.
 */
#include <catch2/catch_amalgamated.hpp>

#include "gdyn/dynamics.hpp"

using namespace gdyn;

namespace {

RealSet interval(long long a, long long b) {
    return RealSet::from_cells({open_cell(ExtPoint(Point(a)), ExtPoint(Point(b)))});
}
RealSet cinterval(long long a, long long b) {
    return RealSet::from_cells({closed_cell(Point(a), Point(b))});
}
RealSet ray_le(long long a) {
    return RealSet::from_cells(
        {cell(ExtPoint::neg_inf(), ExtPoint(Point(a)), false, true, Flavor::Full)});
}
RealSet ray_gt(long long a) {
    return RealSet::from_cells({open_cell(ExtPoint(Point(a)), ExtPoint::pos_inf())});
}

SymPoint rp(long long x) { return SymPoint(Point(x)); }
SymPoint rp(long long n, long long d) { return SymPoint(Point(Rat(n, d))); }

/// Diag(R) u [-1,1]^2: one compact block, everything else fixed.
BlockGroupoid interval_equivalence() {
    return BlockGroupoid::equivalence(Space::real_line(), {SymSet(cinterval(-1, 1))});
}

/// The sub-family {(x,y,n) : x,y > 0 or n = 0} of ((-inf,0] u (0,inf))^2 x Z.
BlockGroupoid half_line_action() {
    BlockGroupoid g(Space::real_line());
    g.has_z = true;
    g.blocks.push_back({SymSet(ray_gt(0)), GrpSet::all()});
    g.blocks.push_back({SymSet(ray_le(0)), GrpSet::singleton(0)});
    g.validate();
    return g;
}

/// The full product ((-inf,0] u (0,inf))^2 x Z.
BlockGroupoid half_line_full() {
    return BlockGroupoid::equivalence(Space::real_line(),
                                      {SymSet(ray_gt(0)), SymSet(ray_le(0))})
        .product_with_z();
}

} // namespace

TEST_CASE("periodicity ladder for the interval equivalence with a free Z part") {
    CanonicalAction act(interval_equivalence().product_with_z());

    SymSet fix = act.point_class_set(PointClass::Fix);
    SymSet expected_fix = SymSet(ray_le(-1).subtract(RealSet::single(Point(-1))))
                              .unite(SymSet(ray_gt(1)));
    REQUIRE(fix == expected_fix);

    REQUIRE(act.point_class_set(PointClass::Per) == act.carrier());
    REQUIRE(act.point_class_set(PointClass::WPer) == act.carrier());
    REQUIRE(act.point_class_set(PointClass::AlPer) == act.carrier());

    PointFlags inside = act.classify_point(rp(0));
    CHECK(inside.fixed == Verdict::Fails);
    CHECK(inside.periodic == Verdict::Holds);
    CHECK(inside.almost_periodic == Verdict::Holds);
    CHECK(inside.weakly_periodic == Verdict::Holds);
    CHECK(inside.compact_orbit == Verdict::Holds);

    PointFlags outside = act.classify_point(rp(5));
    CHECK(outside.fixed == Verdict::Holds);
    CHECK(outside.periodic == Verdict::Holds);
    CHECK(outside.weakly_periodic == Verdict::Holds);
}

TEST_CASE("half-line action: non-wandering, recurrent and limit sets") {
    CanonicalAction act(half_line_action());
    REQUIRE(act.strongly_noncompact());

    SymSet nw = act.point_class_set(PointClass::NW);
    REQUIRE(nw == SymSet(RealSet::single(Point(0)).unite(ray_gt(0))));

    SymSet rec = act.point_class_set(PointClass::Rec);
    REQUIRE(rec == SymSet(ray_gt(0)));
    // the recurrent set is not closed
    REQUIRE_FALSE(rec.is_closed_in(act.carrier()));

    SymSet l1 = act.limit_set(rp(1));
    REQUIRE(l1 == SymSet(RealSet::single(Point(0)).unite(ray_gt(0))));
    REQUIRE(act.limit_set(rp(-1)).empty());
    REQUIRE(act.limit_set(rp(0)).empty());

    // the limit set of 1 is NOT invariant here (the groupoid is not open)
    REQUIRE_FALSE(act.is_invariant(l1));

    // for the full product groupoid every point is non-wandering and the
    // limit set is the closed orbit
    CanonicalAction full(half_line_full());
    REQUIRE(full.point_class_set(PointClass::NW) == full.carrier());
    REQUIRE(full.limit_set(rp(-3)) == SymSet(ray_le(0)));
    REQUIRE(full.limit_set(rp(3)) == SymSet(ray_gt(0)).closure_in(full.carrier()));
    // orbit closure = orbit u limit set
    REQUIRE(full.orbit_closure(rp(3)) ==
            full.orbit(rp(3)).unite(full.limit_set(rp(3))));
}

TEST_CASE("pair groupoid over the integers has empty limit sets") {
    BlockGroupoid g = BlockGroupoid::pair_groupoid(Space::z_line());
    CanonicalAction act(g);
    REQUIRE(act.strongly_noncompact());
    REQUIRE(act.limit_set(SymPoint(GrpSet::Int(7))).empty());
    REQUIRE(act.point_class_set(PointClass::NW).empty());
    PointFlags f = act.classify_point(SymPoint(GrpSet::Int(0)));
    CHECK(f.recurrent == Verdict::Fails);
    CHECK(f.periodic == Verdict::Fails); // the orbit Z is not compact
    CHECK(f.weakly_transitive == Verdict::Holds);
}

TEST_CASE("compact pair groupoid: almost periodic everywhere, recurrence gated") {
    BlockGroupoid g = BlockGroupoid::pair_groupoid(
        Space::real_subspace(cinterval(0, 1)));
    CanonicalAction act(g);
    REQUIRE_FALSE(act.strongly_noncompact());
    PointFlags f = act.classify_point(rp(1, 2));
    CHECK(f.periodic == Verdict::Holds);
    CHECK(f.almost_periodic == Verdict::Holds);
    CHECK(f.weakly_periodic == Verdict::Fails);
    CHECK(f.recurrent == Verdict::NotApplicable);
    CHECK(f.nonwandering == Verdict::NotApplicable);
    REQUIRE(act.point_class_set(PointClass::AlPer) == act.carrier());

    TransitivityProfile t = act.transitivity_profile();
    CHECK(t.transitive.v == Verdict::Holds);
    CHECK(t.pointwise_transitive.v == Verdict::Holds);
    CHECK(t.prop_iv.v == Verdict::Holds);

    MixingProfile m = act.mixing_profile();
    CHECK(m.weak.v == Verdict::Fails);   // the unit space has two points
    CHECK(m.strong.v == Verdict::Holds); // the whole arrow set is compact
}

TEST_CASE("syndetic arrow families in a fibre") {
    CanonicalAction act(interval_equivalence());
    const BlockGroupoid& g = act.groupoid();
    SymPoint p = rp(0);
    // the stabilizer of a block point is syndetic iff the block is compact
    REQUIRE(act.syndetic_in_fiber(g.stabilizer(p), p) == Verdict::Holds);
    // returns into a one-sided neighbourhood still cover the compact block
    ArrowSet thin = g.recurrence_set(SymSet(RealSet::single(Point(0))),
                                     SymSet(interval(0, 1)));
    REQUIRE(act.syndetic_in_fiber(thin, p) == Verdict::Holds);
    // with a free Z coordinate, a family with trivial integer part has
    // unbounded gaps in the fibre subgroup
    CanonicalAction actz(interval_equivalence().product_with_z());
    REQUIRE(actz.syndetic_in_fiber(thin, p) == Verdict::Fails);
    // in a non-compact block no family is syndetic
    CanonicalAction half(half_line_action());
    SymPoint q = rp(2);
    REQUIRE(half.syndetic_in_fiber(half.groupoid().stabilizer(q), q) ==
            Verdict::Fails);
    REQUIRE(half.syndetic_in_fiber(ArrowSet(), q) == Verdict::Fails);
}

TEST_CASE("minimal sets of the interval equivalence") {
    CanonicalAction act(interval_equivalence());
    SymSet m = SymSet(cinterval(-1, 1));
    REQUIRE(act.is_minimal(m) == Verdict::Holds);
    REQUIRE(act.is_minimal(SymSet(cinterval(0, 1))) == Verdict::Fails); // not invariant
    REQUIRE(act.is_minimal(SymSet(interval(-1, 1))) == Verdict::Fails); // not closed
    bool found = false;
    for (const auto& s : act.minimal_sets())
        if (s == m) found = true;
    REQUIRE(found);
    // fixed points give singleton minimal sets, so the action is semisimple
    REQUIRE(act.is_semisimple() == Verdict::Holds);

    // the half-line action is NOT semisimple: the invariant closure of a
    // negative point is a non-minimal closed invariant set
    CanonicalAction half(half_line_action());
    REQUIRE(half.is_semisimple() == Verdict::Fails);
}

TEST_CASE("transitivity hierarchy on the half-line action") {
    CanonicalAction act(half_line_action());
    TransitivityProfile t = act.transitivity_profile();
    CHECK(t.transitive.v == Verdict::Fails);
    CHECK(t.pointwise_transitive.v == Verdict::Fails);
    // the invariant closure of any positive point is all of R
    CHECK(t.weakly_pointwise_transitive.v == Verdict::Holds);
    CHECK(t.prop_i_prime.v == Verdict::Holds);
    CHECK(t.prop_i.v == Verdict::Holds);
    CHECK(t.prop_ii.v == Verdict::Fails);  // (0,inf) is open invariant, not dense
    CHECK(t.prop_iii.v == Verdict::Fails);
    CHECK(t.prop_iv.v == Verdict::Fails);  // (0,inf) neither dense nor nowhere dense
}

TEST_CASE("transitivity hierarchy on transitive and scattered actions") {
    // the pair groupoid over R satisfies the whole ladder
    CanonicalAction pr(BlockGroupoid::pair_groupoid(Space::real_line()));
    TransitivityProfile tp = pr.transitivity_profile();
    CHECK(tp.transitive.v == Verdict::Holds);
    CHECK(tp.pointwise_transitive.v == Verdict::Holds);
    CHECK(tp.weakly_pointwise_transitive.v == Verdict::Holds);
    CHECK(tp.prop_i_prime.v == Verdict::Holds);
    CHECK(tp.prop_ii.v == Verdict::Holds);
    CHECK(tp.prop_iii.v == Verdict::Holds);
    CHECK(tp.prop_iv.v == Verdict::Holds);

    // the trivial groupoid over R fails everything: disjoint pockets of
    // fixed points are open and invariant
    CanonicalAction tr(BlockGroupoid::trivial(Space::real_line()));
    TransitivityProfile tt = tr.transitivity_profile();
    CHECK(tt.transitive.v == Verdict::Fails);
    CHECK(tt.weakly_pointwise_transitive.v == Verdict::Fails);
    CHECK(tt.prop_i_prime.v == Verdict::Fails);
    CHECK(tt.prop_ii.v == Verdict::Fails);
    CHECK(tt.prop_iii.v == Verdict::Fails);
    CHECK(tt.prop_iv.v == Verdict::Fails);

    // two compact blocks: two disjoint open invariant neighbourhoods exist
    BlockGroupoid two = BlockGroupoid::equivalence(
        Space::real_line(), {SymSet(cinterval(0, 1)), SymSet(cinterval(2, 3))});
    TransitivityProfile t2 = CanonicalAction(two).transitivity_profile();
    CHECK(t2.prop_i_prime.v == Verdict::Fails);

    // interval equivalence: residual pockets on both sides are separable
    TransitivityProfile ti =
        CanonicalAction(interval_equivalence()).transitivity_profile();
    CHECK(ti.prop_i_prime.v == Verdict::Fails);
    CHECK(ti.prop_iv.v == Verdict::Fails); // [-1,1] neither dense nor nwd
}

TEST_CASE("mixing profiles") {
    // Z acting on a one-point space: both mixing properties hold
    CanonicalAction zg(BlockGroupoid::z_group(rp(0)));
    MixingProfile mz = zg.mixing_profile();
    CHECK(mz.weak.v == Verdict::Holds);
    CHECK(mz.strong.v == Verdict::Holds);

    // pair groupoid over R: more than one point kills weak mixing, and the
    // recurrence-set complements are unbounded, killing strong mixing
    CanonicalAction pr(BlockGroupoid::pair_groupoid(Space::real_line()));
    MixingProfile mp = pr.mixing_profile();
    CHECK(mp.weak.v == Verdict::Fails);
    CHECK(mp.strong.v == Verdict::Fails);

    // half-line action: not weakly mixing either
    MixingProfile mh = CanonicalAction(half_line_action()).mixing_profile();
    CHECK(mh.weak.v == Verdict::Fails);
}

TEST_CASE("germs, orbit closures and invariant closures are consistent") {
    CanonicalAction act(half_line_action());
    SymSet gm = act.germ_at(rp(0));
    REQUIRE(gm.contains(rp(0)));
    REQUIRE(gm.is_open_in(act.carrier()));

    // invariant closure of a positive point sweeps the whole line
    REQUIRE(act.invariant_closure(SymSet(RealSet::single(Point(2)))) == act.carrier());
    // invariant closure of a negative point stays in the closed half line
    REQUIRE(act.invariant_closure(SymSet(RealSet::single(Point(-2)))) ==
            SymSet(ray_le(0)));

    // saturation of a neighbourhood of 0 under the interval equivalence
    CanonicalAction iv(interval_equivalence());
    REQUIRE(iv.saturate(SymSet(interval(-1, 1).intersect(cinterval(0, 0))
                                   .unite(interval(0, 1)))) ==
            SymSet(cinterval(-1, 1)));
}
