/**
 * @file crosscheck_test.cpp
 * @brief Agreement between the symbolic deciders and exhaustive reference
 *        evaluation on instances that live in both worlds.
 */
#include <catch2/catch_amalgamated.hpp>

#include "gdyn/crosscheck.hpp"

using namespace gdyn;

TEST_CASE("every decision procedure agrees with the reference evaluator") {
    int encodable = 0, total_items = 0, unknown_items = 0;
    std::uint64_t seed = 1;
    std::vector<std::string> bad;
    while (encodable < 500) {
        FiniteInstance inst = gen_instance(seed);
        ++seed;
        AgreementReport rep;
        try {
            rep = cross_check(inst);
        } catch (const NotEncodable&) {
            continue;
        }
        ++encodable;
        total_items += (int)rep.items.size();
        unknown_items += rep.unknowns();
        if (rep.disagreements() > 0)
            for (const auto& it : rep.items)
                if (it.status == AgreeStatus::Disagree && bad.size() < 12)
                    bad.push_back("seed " + std::to_string(rep.seed) + " [" +
                                  rep.family + "] " + it.predicate + ": " +
                                  it.symbolic + " vs " + it.reference);
    }
    for (const auto& b : bad) { INFO(b); }
    CHECK(bad.empty());
    REQUIRE(total_items > 0);
    // decided-vs-Unknown rate must stay within the documented budget
    CHECK(unknown_items * 10 <= total_items);
}

TEST_CASE("non-encodable instances are rejected, not mis-encoded") {
    int rejected = 0;
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        FiniteInstance inst = gen_instance(seed);
        if (inst.block_type && inst.action.g.X.hausdorff() &&
            inst.action.sigma.n == inst.action.g.X.n)
            continue;
        CHECK_THROWS_AS(cross_check(inst), NotEncodable);
        ++rejected;
    }
    CHECK(rejected > 0);
}

TEST_CASE("a hand-built five-point interval-block instance agrees") {
    // discrete carrier {-2,...,2} with one block {-1,0,1}: groupoid-level
    // predicates agree with enumeration
    FiniteInstance inst;
    inst.seed = 0;
    inst.family = "hand";
    std::vector<int> ids = {0, 1, 1, 1, 2};
    HybridGroupoid g = HybridGroupoid::equivalence(FiniteSpace::discrete(5), ids);
    inst.action = HybridAction::canonical(g);
    inst.hausdorff = true;
    inst.block_type = true;
    inst.block_id = ids;
    inst.block_z.assign(5, GrpSet::singleton(0));
    AgreementReport rep = cross_check(inst);
    CHECK(rep.disagreements() == 0);
    // openness agrees and the instance is open (discrete block relation)
    bool found = false;
    for (const auto& it : rep.items)
        if (it.predicate == "openness") {
            found = true;
            CHECK(it.symbolic == it.reference);
        }
    CHECK(found);
}
