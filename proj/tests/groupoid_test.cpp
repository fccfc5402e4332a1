/**
 * @file groupoid_test.cpp
 * @brief Tests for the symbolic set layer (SymSet, refinement, arrow sets)
 *        and the block-groupoid representation.
 */
#include <catch2/catch_amalgamated.hpp>

#include "gdyn/block_groupoid.hpp"

using namespace gdyn;

namespace {

SymSet interval(long long a, long long b) {
    return SymSet(RealSet::from_cells({open_cell(ExtPoint(Point(a)), ExtPoint(Point(b)))}));
}
SymSet cinterval(long long a, long long b) {
    return SymSet(RealSet::from_cells({closed_cell(Point(a), Point(b))}));
}
SymSet ratio_interval(const Rat& a, const Rat& b) {
    return SymSet(RealSet::from_cells({open_cell(ExtPoint(Point(a)), ExtPoint(Point(b)))}));
}

} // namespace

TEST_CASE("symset basics and mixed-kind guard") {
    SymSet r = interval(0, 1);
    SymSet z = SymSet(GrpSet::from_elements({0, 1, 2}));
    REQUIRE(r.kind() == SpaceKind::RealLine);
    REQUIRE(z.kind() == SpaceKind::ZLine);
    REQUIRE_THROWS_AS(r.unite(z), std::logic_error);
    REQUIRE(z.is_compact());
    REQUIRE_FALSE(SymSet(GrpSet::subgroup(2)).is_compact());
    // Discrete topology on the integer line: everything is clopen.
    SymSet evens = SymSet(GrpSet::subgroup(2));
    REQUIRE(evens.closure_in(SymSet(GrpSet::all())) == evens);
    REQUIRE(evens.is_open_in(SymSet(GrpSet::all())));
    REQUIRE(evens.is_nowhere_dense_in(SymSet(GrpSet::all())) == false);
    REQUIRE(SymSet(GrpSet::empty_set()).is_nowhere_dense_in(SymSet(GrpSet::all())));
}

TEST_CASE("exact in-between representatives") {
    // Narrow gap with an irrational endpoint.
    ExtPoint a{Point::sqrt2()};
    ExtPoint b{Point(Rat(142, 100))};
    Point q = rational_between(a, b);
    REQUIRE(q.sqrt2_part() == 0);
    REQUIRE(ExtPoint(q) > a);
    REQUIRE(ExtPoint(q) < b);
    Point ir = irrational_between(a, b);
    REQUIRE(ir.sqrt2_part() != 0);
    REQUIRE(ExtPoint(ir) > a);
    REQUIRE(ExtPoint(ir) < b);
    // Unbounded gaps.
    Point q2 = rational_between(ExtPoint::neg_inf(), ExtPoint(Point(-1000000)));
    REQUIRE(ExtPoint(q2) < ExtPoint(Point(-1000000)));
    Point ir2 = irrational_between(ExtPoint(Point(7)), ExtPoint::pos_inf());
    REQUIRE(ExtPoint(ir2) > ExtPoint(Point(7)));
}

TEST_CASE("refinement partitions the carrier") {
    Space sp = Space::real_subspace(RealSet::from_cells(
        {closed_cell(Point(-3), Point(3))}));
    std::vector<SymSet> gens;
    gens.push_back(cinterval(-1, 1));
    gens.push_back(SymSet(RealSet::from_cells(
        {open_cell(ExtPoint(Point(0)), ExtPoint(Point(2)), Flavor::RatOnly)})));
    auto pieces = refine(sp, gens);
    REQUIRE(!pieces.empty());
    SymSet total = SymSet(RealSet());
    for (size_t i = 0; i < pieces.size(); ++i) {
        REQUIRE_FALSE(pieces[i].set.empty());
        REQUIRE(pieces[i].set.contains(pieces[i].rep));
        REQUIRE(pieces[i].set.subset_of(sp.carrier));
        for (size_t j = i + 1; j < pieces.size(); ++j)
            REQUIRE_FALSE(pieces[i].set.meets(pieces[j].set));
        total = total.unite(pieces[i].set);
    }
    REQUIRE(total == sp.carrier);
    // Each generator must be a union of pieces.
    for (const auto& g : gens) {
        SymSet acc = SymSet(RealSet());
        for (const auto& pc : pieces)
            if (pc.set.subset_of(g)) acc = acc.unite(pc.set);
        REQUIRE(acc == g.intersect(sp.carrier));
    }
}

TEST_CASE("refinement on the integer line") {
    Space sp = Space::z_line();
    std::vector<SymSet> gens{SymSet(GrpSet::subgroup(3)), SymSet(GrpSet::from(5))};
    auto pieces = refine(sp, gens);
    SymSet total = SymSet(GrpSet::empty_set());
    for (size_t i = 0; i < pieces.size(); ++i) {
        REQUIRE(pieces[i].set.contains(pieces[i].rep));
        for (size_t j = i + 1; j < pieces.size(); ++j)
            REQUIRE_FALSE(pieces[i].set.meets(pieces[j].set));
        total = total.unite(pieces[i].set);
    }
    REQUIRE(total == sp.carrier);
    for (const auto& g : gens) {
        SymSet acc = SymSet(GrpSet::empty_set());
        for (const auto& pc : pieces)
            if (pc.set.subset_of(g)) acc = acc.unite(pc.set);
        REQUIRE(acc == g);
    }
}

TEST_CASE("arrow set algebra") {
    Space sp = Space::real_line();
    SymSet a = cinterval(-1, 1);
    SymSet b = interval(2, 3);
    GrpSet z0 = GrpSet::singleton(0);

    ArrowSet r1 = ArrowSet::rect(a, b, GrpSet::singleton(5));
    ArrowSet r2 = ArrowSet::rect(b, a, GrpSet::singleton(-5));
    // Composition glues matching middle sets and adds the z parts.
    ArrowSet c = r1.compose(r2);
    REQUIRE(c.contains(SymPoint(Point(0)), SymPoint(Point(0)), 0));
    REQUIRE_FALSE(c.contains(SymPoint(Point(0)), SymPoint(Point(0)), 5));
    // Inversion swaps the legs and negates z.
    REQUIRE(r1.invert().contains(SymPoint(Point(Rat(5, 2))), SymPoint(Point(0)), -5));
    // Equivalence relation arrows are idempotent under composition.
    ArrowSet eq = ArrowSet::rect(a, a, z0).unite(ArrowSet::diag(b, z0));
    REQUIRE(eq.compose(eq).equals(eq, sp));
    REQUIRE(eq.invert().equals(eq, sp));
    // Subtracting a rectangle from a rectangle stays in the class.
    ArrowSet cut = ArrowSet::rect(a, a, z0)
                       .subtract(ArrowSet::rect(cinterval(0, 1), a, z0), sp);
    REQUIRE(cut.contains(SymPoint(Point(Rat(-1, 2))), SymPoint(Point(0)), 0));
    REQUIRE_FALSE(cut.contains(SymPoint(Point(Rat(1, 2))), SymPoint(Point(0)), 0));
    // Removing the diagonal of a genuine rectangle is not representable.
    REQUIRE_THROWS_AS(
        ArrowSet::rect(a, a, z0).subtract(ArrowSet::diag(a, z0), sp),
        UnrepresentableArrowSet);
    // But removing a corner singleton diagonal is fine.
    SymSet pt = SymSet(RealSet::single(Point(1)));
    ArrowSet ok = ArrowSet::rect(pt, pt, z0).subtract(ArrowSet::diag(pt, z0), sp);
    REQUIRE(ok.empty());
}

TEST_CASE("arrow set projections and closure") {
    SymSet a = interval(0, 1);
    ArrowSet r = ArrowSet::rect(a, interval(2, 3), GrpSet::from(0));
    REQUIRE(r.range_proj() == a);
    REQUIRE_FALSE(r.bounded());
    ArrowSet cl = r.closure();
    REQUIRE(cl.contains(SymPoint(Point(0)), SymPoint(Point(2)), 17));
}

TEST_CASE("single-block equivalence groupoid over the line") {
    // One equivalence class [-1,1], identities elsewhere.
    BlockGroupoid g = BlockGroupoid::equivalence(
        Space::real_line(), {cinterval(-1, 1)});

    SECTION("saturation and invariance") {
        SymSet u = ratio_interval(Rat(-1, 2), Rat(1, 2));
        REQUIRE(g.saturate(u) == cinterval(-1, 1));
        REQUIRE(g.is_invariant(cinterval(-1, 1)));
        REQUIRE_FALSE(g.is_invariant(u));
        REQUIRE(g.invariant_closure(ratio_interval(Rat(0), Rat(1, 4))) ==
                cinterval(-1, 1));
        // A set away from the block just closes up.
        REQUIRE(g.invariant_closure(interval(5, 6)) == cinterval(5, 6));
    }
    SECTION("the arrow set is not open") {
        auto rep = g.openness();
        REQUIRE_FALSE(rep.open);
    }
    SECTION("orbits and stabilizers") {
        REQUIRE(g.orbit(SymPoint(Point(0))) == cinterval(-1, 1));
        REQUIRE(g.orbit(SymPoint(Point(4))) == SymSet(RealSet::single(Point(4))));
        REQUIRE(g.stabilizer(SymPoint(Point(4)))
                    .contains(SymPoint(Point(4)), SymPoint(Point(4)), 0));
        REQUIRE_FALSE(g.is_strongly_noncompact());
    }
    SECTION("recurrence sets") {
        ArrowSet rec = g.recurrence_set(interval(-2, 0), interval(0, 2));
        // Arrows move points of the block into the block.
        REQUIRE(rec.contains(SymPoint(Point(Rat(1, 2))),
                             SymPoint(Point(Rat(-1, 2))), 0));
        // Identity arrows over the overlap outside the block.
        REQUIRE_FALSE(rec.contains(SymPoint(Point(Rat(3, 2))),
                                   SymPoint(Point(Rat(3, 2))), 0));
        ArrowSet rec2 = g.recurrence_set(interval(1, 2), interval(1, 2));
        REQUIRE(rec2.contains(SymPoint(Point(Rat(3, 2))),
                              SymPoint(Point(Rat(3, 2))), 0));
    }
    SECTION("product with the integers") {
        BlockGroupoid gz = g.product_with_z();
        REQUIRE(gz.is_strongly_noncompact());
        REQUIRE(gz.arrows().contains(SymPoint(Point(0)),
                                     SymPoint(Point(1)), 42));
        REQUIRE(gz.arrows().contains(SymPoint(Point(9)),
                                     SymPoint(Point(9)), -3));
        REQUIRE_FALSE(gz.arrows().contains(SymPoint(Point(9)),
                                           SymPoint(Point(8)), 0));
    }
    SECTION("restriction") {
        BlockGroupoid h = g.restrict_to(interval(0, 5));
        REQUIRE(h.base.carrier == interval(0, 5));
        REQUIRE(h.blocks.size() == 1);
        REQUIRE(h.blocks[0].set ==
                SymSet(RealSet::from_cells({cell(ExtPoint(Point(0)), ExtPoint(Point(1)),
                                                 false, true)})));
    }
}

TEST_CASE("pair groupoid and trivial groupoid") {
    BlockGroupoid pair = BlockGroupoid::pair_groupoid(
        Space::real_subspace(RealSet::from_cells({closed_cell(Point(0), Point(1))})));
    REQUIRE(pair.openness().open);
    REQUIRE(pair.residual().empty());
    REQUIRE(pair.saturate(SymSet(RealSet::single(Point(Rat(1, 2))))) ==
            pair.base.carrier);
    REQUIRE_FALSE(pair.is_strongly_noncompact());

    BlockGroupoid triv = BlockGroupoid::trivial(Space::real_line());
    REQUIRE(triv.openness().open == false); // diagonal of a non-discrete space
    REQUIRE(triv.saturate(interval(0, 1)) == interval(0, 1));

    BlockGroupoid zg = BlockGroupoid::z_group(SymPoint(Point(0)));
    REQUIRE(zg.is_strongly_noncompact());
    REQUIRE(zg.arrows().contains(SymPoint(Point(0)), SymPoint(Point(0)), -7));
}

TEST_CASE("wide subgroupoids are checked") {
    BlockGroupoid g = BlockGroupoid::pair_groupoid(
        Space::real_subspace(RealSet::from_cells({closed_cell(Point(0), Point(4))})));
    // Splitting the single class into two classes is a wide subgroupoid.
    std::vector<Block> nb;
    nb.push_back(Block{SymSet(RealSet::from_cells({closed_cell(Point(0), Point(2))})),
                       GrpSet::singleton(0)});
    nb.push_back(Block{SymSet(RealSet::from_cells(
                           {cell(ExtPoint(Point(2)), ExtPoint(Point(4)), false, true)})),
                       GrpSet::singleton(0)});
    BlockGroupoid h = g.wide_subgroupoid(nb, GrpSet::singleton(0));
    REQUIRE(h.blocks.size() == 2);
    // Blocks sticking outside the parent are rejected.
    std::vector<Block> bad;
    bad.push_back(Block{cinterval(0, 9), GrpSet::singleton(0)});
    REQUIRE_THROWS(g.wide_subgroupoid(bad, GrpSet::singleton(0)));
    // Overlapping blocks are rejected by validation.
    std::vector<Block> ovl;
    ovl.push_back(Block{cinterval(0, 2), GrpSet::singleton(0)});
    ovl.push_back(Block{cinterval(1, 3), GrpSet::singleton(0)});
    REQUIRE_THROWS(g.wide_subgroupoid(ovl, GrpSet::singleton(0)));
}

TEST_CASE("relative compactness of arrow subsets") {
    BlockGroupoid pair = BlockGroupoid::pair_groupoid(
        Space::real_subspace(RealSet::from_cells({closed_cell(Point(0), Point(1))})));
    SymSet half = SymSet(RealSet::from_cells(
        {open_cell(ExtPoint(Point(0)), ExtPoint(Point(Rat(1, 2))))}));
    REQUIRE(pair.is_relatively_compact(
        ArrowSet::rect(half, half, GrpSet::singleton(0))));
    BlockGroupoid open_pair = BlockGroupoid::pair_groupoid(
        Space::real_subspace(RealSet::from_cells(
            {open_cell(ExtPoint(Point(0)), ExtPoint(Point(1)))})));
    // Closure escapes the open carrier: not relatively compact.
    REQUIRE_FALSE(open_pair.is_relatively_compact(
        ArrowSet::rect(half, half, GrpSet::singleton(0))));
    // Unbounded z part is never relatively compact.
    REQUIRE_FALSE(pair.is_relatively_compact(
        ArrowSet::rect(half, half, GrpSet::all())));
}

TEST_CASE("canonical open family") {
    BlockGroupoid g = BlockGroupoid::equivalence(
        Space::real_line(), {cinterval(-1, 1)});
    auto opens = g.canonical_opens();
    REQUIRE(!opens.empty());
    bool has_carrier = false;
    for (const auto& u : opens) {
        REQUIRE_FALSE(u.empty());
        REQUIRE(u.is_open_in(g.base.carrier));
        if (u == g.base.carrier) has_carrier = true;
    }
    REQUIRE(has_carrier);
    // Some open set separates the inside of the block from the outside.
    bool inside_only = false;
    for (const auto& u : opens)
        if (u.subset_of(interval(-1, 1)) && !u.empty()) inside_only = true;
    REQUIRE(inside_only);
}
