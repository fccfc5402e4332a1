/**
 * @file oracle_test.cpp
 * @brief Sanity checks for the finite/hybrid instance types and the
 *        brute-force evaluator.
 */
#include <catch2/catch_amalgamated.hpp>

#include "gdyn/oracle.hpp"

using namespace gdyn;
using Mask = FiniteSpace::Mask;

TEST_CASE("finite space basics") {
    FiniteSpace d = FiniteSpace::discrete(3);
    CHECK(d.hausdorff());
    CHECK(d.is_open(0b101));
    CHECK(d.closure(0b001) == 0b001);

    // Sierpinski-like: 0 <= 1, so up(0) = {0,1}
    std::vector<bool> leq(4, false);
    leq[0 * 2 + 0] = leq[1 * 2 + 1] = true;
    leq[0 * 2 + 1] = true;
    FiniteSpace s = FiniteSpace::from_preorder(2, leq);
    CHECK_FALSE(s.hausdorff());
    CHECK(s.is_open(0b10));       // {1} open
    CHECK_FALSE(s.is_open(0b01)); // {0} not open
    CHECK(s.closure(0b10) == 0b11);
    CHECK(s.dense(0b10));
    CHECK(s.nowhere_dense(0b01));
}

TEST_CASE("pair groupoid recurrence sets are rectangles") {
    auto g = HybridGroupoid::pair_groupoid(FiniteSpace::discrete(3));
    Oracle o(HybridAction::canonical(g));
    HybridArrows r = o.rec(0b011, 0b110); // M = {0,1}, N = {1,2}
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            bool expect = (x == 1 || x == 2) && (y == 0 || y == 1);
            CHECK(r.at(x, y).empty() == !expect);
            if (expect) CHECK(r.at(x, y) == GrpSet::singleton(0));
        }
    CHECK(o.transitive());
    CHECK(o.prop_iv());
    CHECK_FALSE(o.weakly_mixing()); // more than one unit
}

TEST_CASE("trivial groupoid: everything is fixed") {
    auto g = HybridGroupoid::trivial(FiniteSpace::discrete(3));
    Oracle o(HybridAction::canonical(g));
    for (int s = 0; s < 3; ++s) {
        CHECK(o.fixed(s));
        CHECK(o.periodic(s));
        CHECK_FALSE(o.weakly_periodic(s));
    }
    CHECK_FALSE(o.prop_i_prime());
    CHECK_FALSE(o.strongly_noncompact());
}

TEST_CASE("single-unit integer group: syndeticity and mixing") {
    auto g = HybridGroupoid::trivial(FiniteSpace::discrete(1)).product_with_z();
    Oracle o(HybridAction::canonical(g));
    CHECK(o.strongly_noncompact());

    HybridArrows evens = HybridArrows::none(1);
    evens.at(0, 0) = GrpSet::subgroup(2);
    CHECK(o.syndetic_in_fiber(evens, 0));

    HybridArrows finite_part = HybridArrows::none(1);
    finite_part.at(0, 0) = GrpSet::from_elements({-1, 0, 5});
    CHECK_FALSE(o.syndetic_in_fiber(finite_part, 0));

    HybridArrows tail = HybridArrows::none(1);
    tail.at(0, 0) = GrpSet::from(10); // a one-sided tail misses the other end
    CHECK_FALSE(o.syndetic_in_fiber(tail, 0));
    tail.at(0, 0) = GrpSet::from(10).unite(GrpSet::up_to(-10)); // both tails
    CHECK(o.syndetic_in_fiber(tail, 0));

    CHECK(o.weakly_mixing());
    CHECK(o.strongly_mixing());
    CHECK(o.recurrent(0));
    CHECK(o.periodic(0));
}

TEST_CASE("deaconu-renault of a 3-cycle") {
    auto g = HybridGroupoid::deaconu_renault({1, 2, 0});
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            CHECK(g.zat(x, y) ==
                  GrpSet::subgroup(3).translate(((y - x) % 3 + 3) % 3));
    Oracle o(HybridAction::canonical(g));
    CHECK(o.strongly_noncompact());
    for (int s = 0; s < 3; ++s) {
        CHECK(o.periodic(s));
        CHECK(o.weakly_periodic(s));
        CHECK(o.recurrent(s));
    }
    CHECK(o.transitive());
}

TEST_CASE("deaconu-renault of a tail into a fixed point") {
    auto g = HybridGroupoid::deaconu_renault({1, 1});
    CHECK(g.zat(0, 0) == GrpSet::all());
    CHECK(g.zat(1, 1) == GrpSet::all());
    CHECK(g.zat(0, 1) == GrpSet::all());
    Oracle o(HybridAction::canonical(g));
    CHECK(o.orbit(0) == 0b11);
}

TEST_CASE("rotation extension acts consistently") {
    auto g = HybridGroupoid::pair_groupoid(FiniteSpace::discrete(2)).product_with_z();
    auto a = HybridAction::rotation_extension(g, 3, 1, {0, 2});
    Oracle o(a);
    // arrow (0,1,n) moves fiber positions by -2 + n mod 3
    CHECK(a.act(0, 1, 2, 1 * 3 + 0) == 0 * 3 + 0);
    CHECK(a.act(0, 1, 0, 1 * 3 + 0) == 0 * 3 + 1);
    // stabilizer of a point: n with delta-shift 0 mod 3 inside the isotropy z = Z
    CHECK(o.stabilizer_z(0) == GrpSet::subgroup(3));
    CHECK(o.periodic(0));
    CHECK(o.transitive());
    // crossed product groupoid is a valid hybrid groupoid over Sigma
    HybridGroupoid cp = o.action_groupoid();
    CHECK(cp.X.n == 6);
    CHECK(cp.zat(0, 0) == GrpSet::subgroup(3));
}

TEST_CASE("instance generation is deterministic and valid") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        FiniteInstance a = gen_instance(seed);
        FiniteInstance b = gen_instance(seed);
        CHECK(a.family == b.family);
        CHECK(a.action.sigma.n == b.action.sigma.n);
        CHECK(a.action.g.z == b.action.g.z);
        CHECK(a.action.table == b.action.table);
        Oracle o(a.action); // validates all axioms
        CHECK(o.units() >= 2);
    }
}
