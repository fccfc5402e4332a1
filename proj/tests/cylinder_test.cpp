/**
 * @file cylinder_test.cpp
 * @brief The two-layer transitive action and its non-transitive canonical
 *        factor.
 */
#include <catch2/catch_amalgamated.hpp>

#include "gdyn/cylinder.hpp"

using namespace gdyn;

namespace {
RealSet interval(long long a, long long b) {
    return RealSet::from_cells({open_cell(ExtPoint(Point(a)), ExtPoint(Point(b)))});
}
} // namespace

TEST_CASE("two-layer set algebra") {
    CylSet whole = CylSet::whole();
    CHECK(whole.dense());
    CHECK(whole.closure() == whole);
    CHECK(whole.interior() == whole);

    // the base layer is closed with empty interior
    CylSet base = CylSet::base_layer(RealSet::whole_line());
    CHECK(base.closure() == base);
    CHECK(base.interior().empty());
    CHECK(base.nowhere_dense());
    CHECK_FALSE(base.dense());

    // the fiber layer is dense but has non-trivial closure
    CylSet fib = CylSet::fiber_layer();
    CHECK(fib.closure() == whole);
    CHECK(fib.dense());

    // a fiber strip over an interval at finitely many heights is not dense
    CylSet strip{RealSet(), interval(0, 1), GrpSet::from_elements({0, 1, 2})};
    CHECK_FALSE(strip.dense());
    // its closure stays off the base layer (no accumulation at height 0)
    CHECK(strip.closure().base.empty());
    // with all heights it deposits [0,1] onto the base layer
    CylSet tall{RealSet(), interval(0, 1), GrpSet::all()};
    CHECK(tall.closure().base == interval(0, 1).closure());

    // an invariant base set of irrationals is nowhere dense up here
    RealSet irr01 = RealSet::from_cells(
        {cell(ExtPoint(Point(0)), ExtPoint(Point(1)), false, false, Flavor::IrrOnly)});
    CHECK(CylSet::base_layer(irr01).nowhere_dense());
}

TEST_CASE("transitive action over a non-transitive factor") {
    CylinderAction up;
    CHECK(up.prop_iv().v == Verdict::Holds);
    CHECK(up.prop_iii().v == Verdict::Holds);
    CHECK(up.pointwise_transitive().v == Verdict::Holds);

    // the canonical factor on the line fails topological transitivity: an
    // irrational band is invariant, neither dense nor nowhere dense
    CanonicalAction down = up.factor();
    TransitivityProfile t = down.transitivity_profile();
    CHECK(t.prop_iv.v == Verdict::Fails);
    CHECK(t.pointwise_transitive.v == Verdict::Holds);
    CHECK(t.prop_iii.v == Verdict::Holds);

    // the acting groupoid is not open
    CHECK_FALSE(down.groupoid().openness().open);
}

TEST_CASE("continuous-factor variant degrades gracefully") {
    CylinderAction lit(true);
    CHECK(lit.prop_iv().v == Verdict::Unknown);
    CHECK(lit.pointwise_transitive().v == Verdict::Unknown);
    // the factor analysis is unaffected
    CHECK(lit.factor().transitivity_profile().prop_iv.v == Verdict::Fails);
}
