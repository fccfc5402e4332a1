/** @file catalog.hpp
 *  @brief Executable fixtures: named actions bundled with expected values.
 *
 *  Every fixture carries a deterministic construction recipe, a JSON
 *  rendering of the constructed instance, and a table of expected checks.
 *  Running a fixture evaluates each check and compares the canonical
 *  string rendering of the actual value against the expected one; the
 *  catalog contract is: zero mismatches, and no check may return
 *  "unknown" unless its expected value is "unknown" (the only fixture
 *  with documented unknowns is the continuous-group cylinder variant).
 *  Checks flagged as witness data re-verify a Fails/NotOpen verdict
 *  through independent set-algebra computations.
 */
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gdyn/cylinder.hpp"
#include "gdyn/dynamics.hpp"
#include "gdyn/oracle.hpp"
#include "gdyn/partial.hpp"
#include "gdyn/serialize.hpp"

namespace gdyn {

struct UnknownFixture : std::runtime_error {
    explicit UnknownFixture(const std::string& name)
        : std::runtime_error("unknown fixture: " + name) {}
};

struct FixtureCheck {
    std::string query;
    std::string expected;
    bool witness_data = false;           ///< machine-checkable witness
    std::function<std::string()> eval;   ///< canonical actual value
};

struct Fixture {
    std::string name;
    std::string summary;
    std::function<Json()> instance;                          ///< wire form
    std::function<std::optional<BlockGroupoid>()> block;     ///< if symbolic
    std::vector<FixtureCheck> checks;
};

struct CheckOutcome {
    std::string query, expected, actual;
    bool witness_data = false;
    bool ok = false;        ///< actual matches expected
    bool unknown = false;   ///< actual is unknown against a decided expected
};

struct FixtureReport {
    std::string name;
    std::vector<CheckOutcome> checks;
    int mismatches = 0;
    int unknowns = 0;
};

namespace detail_catalog {

inline Point pt(long long n) { return Point(Rat(n)); }
inline Point pt(long long p, long long q) { return Point(Rat(p) / Rat(q)); }
inline ExtPoint fin(Point p) { return ExtPoint(std::move(p)); }
inline ExtPoint ninf() { return ExtPoint::neg_inf(); }
inline ExtPoint pinf() { return ExtPoint::pos_inf(); }

inline RealSet iv(ExtPoint lo, ExtPoint hi, bool lc = false, bool hc = false,
                  Flavor f = Flavor::Full) {
    return RealSet::from_cells({cell(std::move(lo), std::move(hi), lc, hc, f)});
}
inline RealSet sing(long long n) { return RealSet::single(pt(n)); }

inline std::string tf(bool b) { return b ? "true" : "false"; }
inline std::string openness_str(const BlockGroupoid& g) {
    return g.openness().open ? "open" : "not-open";
}
inline std::string set_str(const SymSet& s) {
    return s.empty() ? "empty" : s.str();
}
inline std::string mask_str(FiniteSpace::Mask m, int n) {
    std::string out = "{";
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) out += (out.size() > 1 ? "," : "") + std::to_string(i);
    return out + "}";
}

/// Shared lazily-computed transitivity profile for one fixture's checks.
struct LazyProfile {
    std::shared_ptr<CanonicalAction> act;
    std::shared_ptr<std::optional<TransitivityProfile>> cache =
        std::make_shared<std::optional<TransitivityProfile>>();
    const TransitivityProfile& get() const {
        if (!cache->has_value()) *cache = act->transitivity_profile();
        return **cache;
    }
};

inline Json block_instance_json(const std::string& recipe, const BlockGroupoid& g) {
    return Json{{"recipe", recipe}, {"groupoid", to_json(g)}};
}

} // namespace detail_catalog

// ---- fixture constructions --------------------------------------------------

namespace detail_catalog {

/// One compact equivalence class [-1,1] on the real line; its saturation
/// of small opens around the block is the closed block, which is not
/// open, so the groupoid is not open.
inline Fixture make_tutosh() {
    BlockGroupoid g = BlockGroupoid::equivalence(
        Space::real_line(), {SymSet(iv(fin(pt(-1)), fin(pt(1)), true, true))});
    auto act = std::make_shared<CanonicalAction>(g);
    Fixture f;
    f.name = "tutosh";
    f.summary = "equivalence with one compact class [-1,1] on R; not open";
    f.instance = [g] { return block_instance_json("equivalence", g); };
    f.block = [g]() -> std::optional<BlockGroupoid> { return g; };
    SymSet u = SymSet(iv(fin(pt(-1, 2)), fin(pt(1, 2))));
    SymSet sat_expected = SymSet(iv(fin(pt(-1)), fin(pt(1)), true, true));
    f.checks.push_back({"openness", "not-open", true,
                        [g] { return openness_str(g); }});
    f.checks.push_back({"saturate((-1/2,1/2))", sat_expected.str(), true,
                        [act, u] { return act->saturate(u).str(); }});
    f.checks.push_back({"saturate((-1/2,1/2)).is_open", "false", true,
                        [act, u] {
                            return tf(act->saturate(u).is_open_in(act->carrier()));
                        }});
    f.checks.push_back({"point_class_set(fixed)",
                        iv(ninf(), fin(pt(-1))).unite(iv(fin(pt(1)), pinf())).str(),
                        false,
                        [act] { return set_str(act->point_class_set(PointClass::Fix)); }});
    return f;
}

/// Two dense-ish interleaved classes on the punctured line: every
/// nonempty open invariant set is dense (ii), but the recurrence set of
/// (2,inf) into (-inf,-2) is empty, so (iii) and (iv) fail.
inline Fixture make_valioso() {
    RealSet rx = RealSet::whole_line().subtract(sing(0));
    RealSet x1 = sing(-1).unite(iv(fin(pt(0)), fin(pt(1))))
                     .unite(iv(fin(pt(1)), pinf()));
    RealSet x2 = iv(ninf(), fin(pt(-1))).unite(iv(fin(pt(-1)), fin(pt(0))))
                     .unite(sing(1));
    BlockGroupoid g = BlockGroupoid::equivalence(Space::real_subspace(rx),
                                                 {SymSet(x1), SymSet(x2)});
    auto act = std::make_shared<CanonicalAction>(g);
    LazyProfile prof{act};
    Fixture f;
    f.name = "valioso";
    f.summary = "two interleaved classes on R\\{0}: (ii) holds, (iii)/(iv) fail";
    f.instance = [g] { return block_instance_json("equivalence", g); };
    f.block = [g]() -> std::optional<BlockGroupoid> { return g; };
    f.checks.push_back({"openness", "not-open", false,
                        [g] { return openness_str(g); }});
    f.checks.push_back({"profile.prop_ii", "holds", false,
                        [prof] { return verdict_str(prof.get().prop_ii.v); }});
    f.checks.push_back({"profile.prop_iii", "fails", false,
                        [prof] { return verdict_str(prof.get().prop_iii.v); }});
    f.checks.push_back({"profile.prop_iv", "fails", false,
                        [prof] { return verdict_str(prof.get().prop_iv.v); }});
    SymSet u = SymSet(iv(fin(pt(2)), pinf()));
    SymSet v = SymSet(iv(ninf(), fin(pt(-2))));
    f.checks.push_back({"recurrence_set((2,inf),(-inf,-2)).empty", "true", true,
                        [act, u, v] { return tf(act->recurrence_set(u, v).empty()); }});
    SymSet oc_expected = SymSet(sing(-1).unite(iv(fin(pt(0)), pinf())));
    f.checks.push_back({"orbit_closure(2)", oc_expected.str(), false,
                        [act] { return act->orbit_closure(SymPoint(pt(2))).str(); }});
    f.checks.push_back({"orbit_closure(2).is_invariant", "false", true,
                        [act] {
                            return tf(act->is_invariant(
                                act->orbit_closure(SymPoint(pt(2)))));
                        }});
    f.checks.push_back({"invariant_closure(sigma)==carrier on all pieces", "true",
                        false, [act] {
                            for (const auto& pc : act->pieces()) {
                                SymSet c = act->invariant_closure(
                                    SymSet::make_singleton(SpaceKind::RealLine, pc.rep));
                                if (!(c == act->carrier())) return std::string("false");
                            }
                            return std::string("true");
                        }});
    return f;
}

/// Adds a compact class [2,3]: no two disjoint open invariant sets (i'),
/// but the open invariant set avoiding [2,3] is not dense, so (ii) fails.
inline Fixture make_valioso2() {
    RealSet rx = RealSet::whole_line().subtract(sing(0));
    RealSet y1 = sing(-1).unite(iv(fin(pt(0)), fin(pt(1))))
                     .unite(iv(fin(pt(1)), fin(pt(2))))
                     .unite(iv(fin(pt(3)), pinf()));
    RealSet x2 = iv(ninf(), fin(pt(-1))).unite(iv(fin(pt(-1)), fin(pt(0))))
                     .unite(sing(1));
    RealSet y3 = iv(fin(pt(2)), fin(pt(3)), true, true);
    BlockGroupoid g = BlockGroupoid::equivalence(
        Space::real_subspace(rx), {SymSet(y1), SymSet(x2), SymSet(y3)});
    auto act = std::make_shared<CanonicalAction>(g);
    LazyProfile prof{act};
    Fixture f;
    f.name = "valioso2";
    f.summary = "three classes with a compact one: (i') holds, (ii) fails";
    f.instance = [g] { return block_instance_json("equivalence", g); };
    f.block = [g]() -> std::optional<BlockGroupoid> { return g; };
    f.checks.push_back({"openness", "not-open", false,
                        [g] { return openness_str(g); }});
    f.checks.push_back({"profile.prop_i_prime", "holds", false,
                        [prof] { return verdict_str(prof.get().prop_i_prime.v); }});
    f.checks.push_back({"profile.prop_ii", "fails", false,
                        [prof] { return verdict_str(prof.get().prop_ii.v); }});
    SymSet w = SymSet(iv(ninf(), fin(pt(0)))
                          .unite(iv(fin(pt(0)), fin(pt(2))))
                          .unite(iv(fin(pt(3)), pinf())));
    f.checks.push_back({"witness (-inf,0)u(0,2)u(3,inf): open+invariant+not-dense",
                        "true", true, [act, w] {
                            return tf(w.is_open_in(act->carrier()) &&
                                      act->is_invariant(w) &&
                                      !w.is_dense_in(act->carrier()));
                        }});
    SymSet cmp = SymSet(iv(fin(pt(2)), fin(pt(3)), true, true));
    f.checks.push_back({"invariant_closure table: [2,3] on the compact class, "
                        "carrier elsewhere",
                        "true", false, [act, cmp] {
                            for (const auto& pc : act->pieces()) {
                                SymSet c = act->invariant_closure(
                                    SymSet::make_singleton(SpaceKind::RealLine, pc.rep));
                                SymSet want = pc.set.subset_of(cmp) ? cmp : act->carrier();
                                if (!(c == want)) return std::string("false");
                            }
                            return std::string("true");
                        }});
    return f;
}

/// A single dense class (the rationals) on the line: a dense orbit
/// exists, but the irrational part of any interval is invariant and
/// neither dense nor nowhere dense, so (iv) fails.
inline Fixture make_valioso3() {
    RealSet q = iv(ninf(), pinf(), false, false, Flavor::RatOnly);
    BlockGroupoid g = BlockGroupoid::equivalence(Space::real_line(), {SymSet(q)});
    auto act = std::make_shared<CanonicalAction>(g);
    LazyProfile prof{act};
    Fixture f;
    f.name = "valioso3";
    f.summary = "the rationals as one class: pointwise transitive, (iv) fails";
    f.instance = [g] { return block_instance_json("equivalence", g); };
    f.block = [g]() -> std::optional<BlockGroupoid> { return g; };
    f.checks.push_back({"profile.pointwise_transitive", "holds", false,
                        [prof] {
                            return verdict_str(prof.get().pointwise_transitive.v);
                        }});
    f.checks.push_back({"profile.prop_iii", "holds", false,
                        [prof] { return verdict_str(prof.get().prop_iii.v); }});
    f.checks.push_back({"profile.prop_iv", "fails", false,
                        [prof] { return verdict_str(prof.get().prop_iv.v); }});
    SymSet wit = SymSet(iv(fin(pt(0)), fin(pt(1)), false, false, Flavor::IrrOnly));
    f.checks.push_back({"witness (0,1) irrationals: invariant, neither dense "
                        "nor nowhere dense",
                        "true", true, [act, wit] {
                            return tf(act->is_invariant(wit) &&
                                      !wit.is_dense_in(act->carrier()) &&
                                      !wit.is_nowhere_dense_in(act->carrier()));
                        }});
    f.checks.push_back({"invariant_closure table: carrier on rational points, "
                        "singleton on irrational points",
                        "true", false, [act] {
                            SymSet ql = SymSet(iv(ninf(), pinf(), false, false,
                                                  Flavor::RatOnly));
                            for (const auto& pc : act->pieces()) {
                                SymSet c = act->invariant_closure(
                                    SymSet::make_singleton(SpaceKind::RealLine, pc.rep));
                                SymSet want = pc.set.subset_of(ql)
                                    ? act->carrier()
                                    : SymSet::make_singleton(SpaceKind::RealLine, pc.rep);
                                if (!(c == want)) return std::string("false");
                            }
                            return std::string("true");
                        }});
    return f;
}

/// The two-layer cylinder: topologically transitive upstairs, and the
/// canonical factor through the anchor loses (iv).  The exact variant
/// uses the integer group factor; the literal variant keeps a continuous
/// group factor and documents its upstream verdicts as unknown.
inline Fixture make_valioso4(bool literal) {
    CylinderAction up(literal);
    auto factor = std::make_shared<CanonicalAction>(up.factor());
    LazyProfile prof{factor};
    Fixture f;
    f.name = literal ? "valioso4_literal" : "valioso4";
    f.summary = literal
        ? "two-layer cylinder, continuous group factor (upstream unknowns "
          "documented); factor loses topological transitivity"
        : "two-layer cylinder, integer group factor: (iv) holds upstairs "
          "and fails for the canonical factor";
    f.instance = [literal, up] {
        return Json{{"recipe", "cylinder"},
                    {"group_factor", literal ? "R" : "Z"},
                    {"factor_groupoid", to_json(up.groupoid())}};
    };
    f.block = [up]() -> std::optional<BlockGroupoid> { return up.groupoid(); };
    std::string topv = literal ? "unknown" : "holds";
    f.checks.push_back({"upstream.prop_iv", topv, false,
                        [up] { return verdict_str(up.prop_iv().v); }});
    f.checks.push_back({"upstream.prop_iii", topv, false,
                        [up] { return verdict_str(up.prop_iii().v); }});
    f.checks.push_back({"upstream.pointwise_transitive", topv, false,
                        [up] { return verdict_str(up.pointwise_transitive().v); }});
    f.checks.push_back({"factor.prop_iv", "fails", false,
                        [prof] { return verdict_str(prof.get().prop_iv.v); }});
    f.checks.push_back({"factor.pointwise_transitive", "holds", false,
                        [prof] {
                            return verdict_str(prof.get().pointwise_transitive.v);
                        }});
    f.checks.push_back({"factor.groupoid.openness", "not-open", false,
                        [up] { return openness_str(up.groupoid()); }});
    if (!literal) {
        f.checks.push_back({"fiber orbit closure == whole space", "true", true,
                            [up] {
                                return tf(up.fiber_orbit().closure() ==
                                          CylSet::whole());
                            }});
        f.checks.push_back({"base layer is nowhere dense", "true", true,
                            [] {
                                return tf(CylSet::base_layer(RealSet::whole_line())
                                              .nowhere_dense());
                            }});
    }
    return f;
}

/// The pair groupoid of the integers: strongly non-compact, with empty
/// limit sets everywhere.
inline Fixture make_bor1() {
    BlockGroupoid g = BlockGroupoid::pair_groupoid(Space::z_line());
    auto act = std::make_shared<CanonicalAction>(g);
    Fixture f;
    f.name = "bor1";
    f.summary = "pair groupoid of Z: all limit sets are empty";
    f.instance = [g] { return block_instance_json("pair_groupoid", g); };
    f.block = [g]() -> std::optional<BlockGroupoid> { return g; };
    f.checks.push_back({"strongly_noncompact", "true", false,
                        [act] { return tf(act->strongly_noncompact()); }});
    f.checks.push_back({"limit_set(0)", "empty", false,
                        [act] { return set_str(act->limit_set(SymPoint(GrpSet::Int{0}))); }});
    f.checks.push_back({"limit_set(5)", "empty", false,
                        [act] { return set_str(act->limit_set(SymPoint(GrpSet::Int{5}))); }});
    f.checks.push_back({"point_class_set(nonwandering)", "empty", false,
                        [act] { return set_str(act->point_class_set(PointClass::NW)); }});
    return f;
}

/// The half-line partition crossed with Z: all limit sets equal the
/// orbit closures, and the limit set of a positive point is not
/// invariant.
inline BlockGroupoid bor3_groupoid() {
    RealSet left = iv(ninf(), fin(pt(0)), false, true);
    RealSet right = iv(fin(pt(0)), pinf());
    return BlockGroupoid::equivalence(Space::real_line(),
                                      {SymSet(left), SymSet(right)})
        .product_with_z();
}

inline Fixture make_bor3() {
    BlockGroupoid g = bor3_groupoid();
    auto act = std::make_shared<CanonicalAction>(g);
    Fixture f;
    f.name = "bor3";
    f.summary = "half-line partition x Z: limit sets are orbit closures; "
                "the limit set of 1 is [0,inf), which is not invariant";
    f.instance = [g] { return block_instance_json("equivalence x Z", g); };
    f.block = [g]() -> std::optional<BlockGroupoid> { return g; };
    SymSet lim1 = SymSet(iv(fin(pt(0)), pinf(), true, false));
    SymSet limneg = SymSet(iv(ninf(), fin(pt(0)), false, true));
    f.checks.push_back({"limit_set(1)", lim1.str(), false,
                        [act] { return set_str(act->limit_set(SymPoint(pt(1)))); }});
    f.checks.push_back({"limit_set(1).is_invariant", "false", true,
                        [act, lim1] { return tf(act->is_invariant(lim1)); }});
    f.checks.push_back({"limit_set(-1)", limneg.str(), false,
                        [act] { return set_str(act->limit_set(SymPoint(pt(-1)))); }});
    f.checks.push_back({"openness", "not-open", false,
                        [g] { return openness_str(g); }});
    f.checks.push_back({"limit_set == orbit_closure on all pieces", "true", false,
                        [act] {
                            for (const auto& pc : act->pieces())
                                if (!(act->limit_set(pc.rep) ==
                                      act->orbit_closure(pc.rep)))
                                    return std::string("false");
                            return std::string("true");
                        }});
    return f;
}

/// One compact class [-1,1] crossed with Z: the fixed points are exactly
/// the residual units, and every point is periodic, weakly periodic and
/// almost periodic.
inline Fixture make_maidevreme() {
    BlockGroupoid g = BlockGroupoid::equivalence(
                          Space::real_line(),
                          {SymSet(iv(fin(pt(-1)), fin(pt(1)), true, true))})
                          .product_with_z();
    auto act = std::make_shared<CanonicalAction>(g);
    Fixture f;
    f.name = "maidevreme";
    f.summary = "compact class [-1,1] x Z: fixed set (-inf,-1)u(1,inf); "
                "periodic = weakly periodic = almost periodic = R";
    f.instance = [g] { return block_instance_json("equivalence x Z", g); };
    f.block = [g]() -> std::optional<BlockGroupoid> { return g; };
    std::string whole = SymSet(RealSet::whole_line()).str();
    f.checks.push_back({"point_class_set(fixed)",
                        iv(ninf(), fin(pt(-1))).unite(iv(fin(pt(1)), pinf())).str(),
                        false,
                        [act] { return set_str(act->point_class_set(PointClass::Fix)); }});
    f.checks.push_back({"point_class_set(periodic)", whole, false,
                        [act] { return set_str(act->point_class_set(PointClass::Per)); }});
    f.checks.push_back({"point_class_set(weakly_periodic)", whole, false,
                        [act] { return set_str(act->point_class_set(PointClass::WPer)); }});
    f.checks.push_back({"point_class_set(almost_periodic)", whole, false,
                        [act] { return set_str(act->point_class_set(PointClass::AlPer)); }});
    f.checks.push_back({"classify(0): periodic/weakly_periodic/almost_periodic",
                        "holds/holds/holds", false, [act] {
                            PointFlags pf = act->classify_point(SymPoint(pt(0)));
                            return std::string(verdict_str(pf.periodic)) + "/" +
                                   verdict_str(pf.weakly_periodic) + "/" +
                                   verdict_str(pf.almost_periodic);
                        }});
    return f;
}

/// A wide subgroupoid of the bor3 groupoid that keeps the integer
/// coordinate only over the positive half-line: the non-wandering set
/// shrinks to [0,inf) (not invariant), and the recurrent set (0,inf) is
/// not closed.
inline Fixture make_zuvertaj() {
    BlockGroupoid theta1 = bor3_groupoid();
    RealSet left = iv(ninf(), fin(pt(0)), false, true);
    RealSet right = iv(fin(pt(0)), pinf());
    BlockGroupoid theta2 = theta1.wide_subgroupoid(
        {Block{SymSet(left), GrpSet::singleton(0)},
         Block{SymSet(right), GrpSet::all()}},
        GrpSet::singleton(0));
    auto a1 = std::make_shared<CanonicalAction>(theta1);
    auto a2 = std::make_shared<CanonicalAction>(theta2);
    Fixture f;
    f.name = "zuvertaj";
    f.summary = "wide subgroupoid of bor3 keeping Z only over (0,inf): "
                "nw set [0,inf) not invariant, rec set (0,inf) not closed";
    f.instance = [theta2] {
        return block_instance_json("wide_subgroupoid of bor3", theta2);
    };
    f.block = [theta2]() -> std::optional<BlockGroupoid> { return theta2; };
    SymSet nw2 = SymSet(iv(fin(pt(0)), pinf(), true, false));
    SymSet rec2 = SymSet(iv(fin(pt(0)), pinf()));
    f.checks.push_back({"theta1.point_class_set(nonwandering)",
                        SymSet(RealSet::whole_line()).str(), false,
                        [a1] { return set_str(a1->point_class_set(PointClass::NW)); }});
    f.checks.push_back({"theta2.point_class_set(nonwandering)", nw2.str(), false,
                        [a2] { return set_str(a2->point_class_set(PointClass::NW)); }});
    f.checks.push_back({"theta2.nonwandering_set.is_invariant", "false", true,
                        [a2, nw2] { return tf(a2->is_invariant(nw2)); }});
    f.checks.push_back({"theta2.point_class_set(recurrent)", rec2.str(), false,
                        [a2] { return set_str(a2->point_class_set(PointClass::Rec)); }});
    f.checks.push_back({"theta2.recurrent_set.is_closed", "false", true,
                        [a2, rec2] {
                            return tf(rec2.is_closed_in(a2->carrier()));
                        }});
    f.checks.push_back({"theta2.limit_set(1)", nw2.str(), false,
                        [a2] { return set_str(a2->limit_set(SymPoint(pt(1)))); }});
    f.checks.push_back({"theta2.limit_set(-1)", "empty", false,
                        [a2] { return set_str(a2->limit_set(SymPoint(pt(-1)))); }});
    return f;
}

/// The pair groupoid of a compact interval: not strongly non-compact,
/// and every point is almost periodic.
inline Fixture make_cocoselu() {
    RealSet unit = iv(fin(pt(0)), fin(pt(1)), true, true);
    BlockGroupoid g = BlockGroupoid::pair_groupoid(Space::real_subspace(unit));
    auto act = std::make_shared<CanonicalAction>(g);
    Fixture f;
    f.name = "cocoselu";
    f.summary = "pair groupoid of [0,1]: every point almost periodic";
    f.instance = [g] { return block_instance_json("pair_groupoid", g); };
    f.block = [g]() -> std::optional<BlockGroupoid> { return g; };
    std::string whole = SymSet(unit).str();
    f.checks.push_back({"strongly_noncompact", "false", false,
                        [act] { return tf(act->strongly_noncompact()); }});
    f.checks.push_back({"point_class_set(almost_periodic)", whole, false,
                        [act] { return set_str(act->point_class_set(PointClass::AlPer)); }});
    f.checks.push_back({"point_class_set(periodic)", whole, false,
                        [act] { return set_str(act->point_class_set(PointClass::Per)); }});
    return f;
}

/// Deaconu-Renault groupoid of a map with one 3-cycle: every unit is
/// periodic and weakly periodic, with isotropy 3Z on the cycle.
inline Fixture make_dr_cycle() {
    std::vector<int> nu{1, 2, 0};
    HybridGroupoid g = HybridGroupoid::deaconu_renault(nu);
    auto o = std::make_shared<Oracle>(HybridAction::canonical(g));
    Fixture f;
    f.name = "dr_cycle";
    f.summary = "Deaconu-Renault groupoid of the 3-cycle 0->1->2->0";
    f.instance = [nu] {
        return Json{{"recipe", "deaconu_renault"}, {"nu", nu}};
    };
    f.block = []() -> std::optional<BlockGroupoid> { return std::nullopt; };
    f.checks.push_back({"isotropy z(0,0)", GrpSet::subgroup(3).to_string(), false,
                        [o] { return o->groupoid().zat(0, 0).to_string(); }});
    f.checks.push_back({"periodic set", "{0,1,2}", false,
                        [o] { return mask_str(o->per_set(), o->units()); }});
    f.checks.push_back({"weakly periodic set", "{0,1,2}", false,
                        [o] { return mask_str(o->wper_set(), o->units()); }});
    f.checks.push_back({"periodic iff some iterates collide", "true", false,
                        [o, nu] {
                            for (int x = 0; x < (int)nu.size(); ++x) {
                                std::vector<int> it{x};
                                bool collide = false;
                                for (int k = 0; k < (int)nu.size() + 1 && !collide; ++k) {
                                    it.push_back(nu[it.back()]);
                                    for (size_t a = 0; a + 1 < it.size(); ++a)
                                        if (it[a] == it.back()) collide = true;
                                }
                                bool per = (o->per_set() >> x) & 1;
                                if (per != collide) return std::string("false");
                            }
                            return std::string("true");
                        }});
    return f;
}

/// Deaconu-Renault groupoid of a map with a tail into a fixed point:
/// iterates of every unit collide, so every unit is (weakly) periodic.
inline Fixture make_dr_tail() {
    std::vector<int> nu{1, 1};
    HybridGroupoid g = HybridGroupoid::deaconu_renault(nu);
    auto o = std::make_shared<Oracle>(HybridAction::canonical(g));
    Fixture f;
    f.name = "dr_tail";
    f.summary = "Deaconu-Renault groupoid of 0->1, 1->1 (tail into a fixed point)";
    f.instance = [nu] {
        return Json{{"recipe", "deaconu_renault"}, {"nu", nu}};
    };
    f.block = []() -> std::optional<BlockGroupoid> { return std::nullopt; };
    f.checks.push_back({"isotropy z(0,0) == Z", "true", false,
                        [o] { return tf(o->groupoid().zat(0, 0) == GrpSet::all()); }});
    f.checks.push_back({"periodic set", "{0,1}", false,
                        [o] { return mask_str(o->per_set(), o->units()); }});
    f.checks.push_back({"periodic set == weakly periodic set", "true", false,
                        [o] { return tf(o->per_set() == o->wper_set()); }});
    return f;
}

/// Pull-back of a transitive equivalence relation along a two-to-one
/// map: orbits upstairs are exactly the preimages of orbits downstairs.
inline Fixture make_pullback_double() {
    FiniteSpace base = FiniteSpace::discrete(2);
    HybridGroupoid gb = HybridGroupoid::equivalence(base, {0, 0});
    FiniteSpace omega = FiniteSpace::discrete(4);
    std::vector<int> h{0, 0, 1, 1};
    HybridGroupoid gp = gb.pullback(omega, h);
    auto ob = std::make_shared<Oracle>(HybridAction::canonical(gb));
    auto op = std::make_shared<Oracle>(HybridAction::canonical(gp));
    Fixture f;
    f.name = "pullback_double";
    f.summary = "pull-back of the full relation on 2 points along a "
                "two-to-one map from 4 points";
    f.instance = [h] {
        return Json{{"recipe", "pullback"},
                    {"base", "pair relation on 2 discrete points"},
                    {"h", h}};
    };
    f.block = []() -> std::optional<BlockGroupoid> { return std::nullopt; };
    f.checks.push_back({"transitive", "true", false,
                        [op] { return tf(op->transitive()); }});
    f.checks.push_back({"orbit(w) == preimage of orbit(h(w)) for all w",
                        "true", true, [ob, op, h] {
                            for (int w = 0; w < 4; ++w) {
                                FiniteSpace::Mask down = ob->orbit(h[w]);
                                FiniteSpace::Mask want = 0;
                                for (int u = 0; u < 4; ++u)
                                    if ((down >> h[u]) & 1) want |= FiniteSpace::Mask{1} << u;
                                if (op->orbit(w) != want) return std::string("false");
                            }
                            return std::string("true");
                        }});
    return f;
}

/// Partial integer translation on (0,10): its recurrence sets agree with
/// the global translation's for data inside the domain, and are
/// symmetric under inversion.
inline Fixture make_partial_interval() {
    RealSet dom = iv(fin(pt(0)), fin(pt(10)));
    auto pz = std::make_shared<PartialZTranslation>(dom);
    Fixture f;
    f.name = "partial_interval";
    f.summary = "partial Z-translation on (0,10): restriction identity for "
                "recurrence sets";
    f.instance = [dom] {
        return Json{{"recipe", "partial_translation"}, {"domain", to_json(dom)}};
    };
    f.block = []() -> std::optional<BlockGroupoid> { return std::nullopt; };
    RealSet s12 = iv(fin(pt(1)), fin(pt(2)));
    RealSet s89 = iv(fin(pt(8)), fin(pt(9)));
    RealSet c13 = iv(fin(pt(1)), fin(pt(3)), true, true);
    f.checks.push_back({"rec((1,2),(8,9))", GrpSet::singleton(7).to_string(), false,
                        [pz, s12, s89] { return pz->rec(s12, s89).to_string(); }});
    f.checks.push_back({"rec([1,3],[1,3])",
                        GrpSet::from_elements({-2, -1, 0, 1, 2}).to_string(), false,
                        [pz, c13] { return pz->rec(c13, c13).to_string(); }});
    f.checks.push_back({"rec == global rec for data inside the domain", "true",
                        false, [pz, s12, s89, c13] {
                            std::vector<std::pair<RealSet, RealSet>> pairs{
                                {s12, s89}, {s89, s12}, {c13, c13}, {s12, c13}};
                            for (const auto& [s, t] : pairs)
                                if (pz->rec(s, t) != rec_translation(s, t))
                                    return std::string("false");
                            return std::string("true");
                        }});
    f.checks.push_back({"rec(S,T).negate() == rec(T,S)", "true", false,
                        [pz, s12, s89] {
                            return tf(pz->rec(s12, s89).negate() == pz->rec(s89, s12));
                        }});
    f.checks.push_back({"domain_of(3)", iv(fin(pt(0)), fin(pt(7))).str(), false,
                        [pz] { return pz->domain_of(3).str(); }});
    return f;
}

inline const std::vector<Fixture>& registry() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> out;
        out.push_back(make_tutosh());
        out.push_back(make_valioso());
        out.push_back(make_valioso2());
        out.push_back(make_valioso3());
        out.push_back(make_valioso4(false));
        out.push_back(make_valioso4(true));
        out.push_back(make_bor1());
        out.push_back(make_bor3());
        out.push_back(make_maidevreme());
        out.push_back(make_zuvertaj());
        out.push_back(make_cocoselu());
        out.push_back(make_dr_cycle());
        out.push_back(make_dr_tail());
        out.push_back(make_pullback_double());
        out.push_back(make_partial_interval());
        return out;
    }();
    return fixtures;
}

} // namespace detail_catalog

// ---- public catalog API -----------------------------------------------------

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const Fixture& f : detail_catalog::registry()) out.push_back(f.name);
    return out;
}

inline const Fixture& catalog_fixture(const std::string& name) {
    for (const Fixture& f : detail_catalog::registry())
        if (f.name == name) return f;
    throw UnknownFixture(name);
}

inline FixtureReport run_fixture(const Fixture& f) {
    FixtureReport rep;
    rep.name = f.name;
    for (const FixtureCheck& c : f.checks) {
        CheckOutcome o;
        o.query = c.query;
        o.expected = c.expected;
        o.witness_data = c.witness_data;
        try {
            o.actual = c.eval();
        } catch (const std::exception& e) {
            o.actual = std::string("error: ") + e.what();
        }
        o.ok = (o.actual == o.expected);
        o.unknown = (o.actual == "unknown" && o.expected != "unknown");
        if (!o.ok) ++rep.mismatches;
        if (o.unknown) ++rep.unknowns;
        rep.checks.push_back(std::move(o));
    }
    return rep;
}

inline std::vector<FixtureReport> catalog_verify_all() {
    std::vector<FixtureReport> out;
    for (const Fixture& f : detail_catalog::registry())
        out.push_back(run_fixture(f));
    return out;
}

inline Json to_json(const CheckOutcome& o) {
    return Json{{"query", o.query},
                {"expected", o.expected},
                {"actual", o.actual},
                {"witness_data", o.witness_data},
                {"ok", o.ok},
                {"unknown", o.unknown}};
}

inline Json to_json(const FixtureReport& r) {
    Json checks = Json::array();
    for (const CheckOutcome& o : r.checks) checks.push_back(to_json(o));
    return Json{{"name", r.name},
                {"mismatches", r.mismatches},
                {"unknowns", r.unknowns},
                {"checks", std::move(checks)}};
}

/// The full wire form of one fixture: recipe payload plus expected table.
inline Json fixture_json(const Fixture& f) {
    Json expected = Json::array();
    for (const FixtureCheck& c : f.checks)
        expected.push_back(Json{{"query", c.query},
                                {"expected", c.expected},
                                {"witness_data", c.witness_data}});
    return Json{{"name", f.name},
                {"summary", f.summary},
                {"instance", f.instance()},
                {"expected", std::move(expected)}};
}

} // namespace gdyn
