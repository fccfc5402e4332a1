/**
 * @file morphism_test.cpp
 * @brief Homomorphism verification, transfer audits, the crossed-product
 *        correspondence round trip, and minimal-set lifting.
 */
#include <catch2/catch_amalgamated.hpp>

#include "gdyn/morphism.hpp"
#include "gdyn/suites.hpp"

using namespace gdyn;
using Mask = FiniteSpace::Mask;

namespace {

/// Semantic equality of two actions of the same groupoid on the same space:
/// identical act maps over every realized residue of a common period.
bool same_action(const HybridAction& a, const HybridAction& b) {
    if (a.g.X.up != b.g.X.up || a.g.z != b.g.z) return false;
    if (a.sigma.up != b.sigma.up || a.anchor != b.anchor) return false;
    int lp = std::lcm(a.period, b.period);
    int nx = a.g.X.n;
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < nx; ++y) {
            if (a.g.zat(x, y).empty()) continue;
            for (int n0 = 0; n0 < lp; ++n0) {
                GrpSet cls = a.g.zat(x, y).intersect(
                    GrpSet::subgroup(lp).translate(n0));
                if (cls.empty()) continue;
                GrpSet::Int n = cls.any_element();
                for (int s = 0; s < a.sigma.n; ++s) {
                    if (a.anchor[s] != y) continue;
                    if (a.act(x, y, n, s) != b.act(x, y, n, s)) return false;
                }
            }
        }
    return true;
}

int count_violated(const std::vector<AuditItem>& items,
                   std::vector<std::string>* names = nullptr) {
    int v = 0;
    for (const auto& it : items)
        if (it.status == AuditStatus::Violated) {
            ++v;
            if (names) names->push_back(it.statement);
        }
    return v;
}

} // namespace

TEST_CASE("anchor factor is a verified epimorphism") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        FiniteInstance inst = gen_instance(seed);
        FiniteActionMap m = rho_factor(inst.action);
        CHECK_FALSE(check_homomorphism(m, true).has_value());
        // the factor target is the canonical action
        CHECK(m.target.sigma.up == inst.action.g.X.up);
    }
}

TEST_CASE("broken maps are rejected with a witness") {
    FiniteInstance inst = gen_instance(7);
    FiniteActionMap m = rho_factor(inst.action);

    SECTION("wrong anchor") {
        if (inst.action.g.X.n >= 2) {
            FiniteActionMap bad = m;
            bad.f[0] = (bad.f[0] + 1) % inst.action.g.X.n;
            auto w = check_homomorphism(bad, false);
            REQUIRE(w.has_value());
        }
    }
    SECTION("different groupoid") {
        FiniteActionMap bad = m;
        bad.target = HybridAction::canonical(
            HybridGroupoid::pair_groupoid(FiniteSpace::discrete(inst.action.g.X.n)));
        if (!(bad.target.g.z == inst.action.g.z))
            CHECK_THROWS_AS(check_homomorphism(bad, false), GroupoidMismatch);
    }
    SECTION("non-equivariant fiber shuffle") {
        // a rotation extension quotient with a twisted (wrong) point map
        detail::InducedBundle b = detail::make_induced_bundle(3);
        FiniteActionMap q{b.theta, b.theta_quot, b.f};
        REQUIRE_FALSE(check_homomorphism(q, true).has_value());
        if (b.theta_quot.period > 1) {
            int m2 = b.theta.sigma.n / b.theta.g.X.n;
            int mq = b.theta_quot.sigma.n / b.theta.g.X.n;
            FiniteActionMap bad = q;
            // collapse fibers by a non-equivariant rule instead
            for (int s = 0; s < b.theta.sigma.n; ++s)
                bad.f[s] = (s / m2) * mq; // everything to fiber position 0
            auto w = check_homomorphism(bad, true);
            CHECK(w.has_value());
        }
    }
}

TEST_CASE("transfer audit confirms on quotient maps") {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        detail::InducedBundle b = detail::make_induced_bundle(seed);
        FiniteActionMap m{b.theta, b.theta_quot, b.f};
        std::vector<std::string> names;
        int v = count_violated(transfer_audit(m), &names);
        INFO("seed " << seed);
        for (const auto& n : names) INFO("violated: " << n);
        CHECK(v == 0);
        ++checked;
    }
    CHECK(checked == 25);
}

TEST_CASE("transfer audit confirms on anchor factors") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        FiniteInstance inst = gen_instance(seed);
        std::vector<std::string> names;
        int v = count_violated(transfer_audit(rho_factor(inst.action)), &names);
        INFO("seed " << seed);
        for (const auto& n : names) INFO("violated: " << n);
        CHECK(v == 0);
    }
}

TEST_CASE("crossed product round trip recovers the extension") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        detail::InducedBundle b = detail::make_induced_bundle(seed);
        FiniteActionMap m{b.theta, b.theta_quot, b.f};

        HybridAction ind = induced_action(m);
        CHECK(same_action(ind, b.induced));

        FiniteActionMap back = extension_from_action(ind, m.target);
        CHECK(back.f == m.f);
        CHECK(same_action(back.source, m.source));

        // feeding a non-crossed-product action is rejected (when the
        // quotient fiber is trivial the crossed product coincides with the
        // base groupoid, and the call legitimately succeeds)
        if (b.theta_quot.sigma.n != b.theta.g.X.n)
            CHECK_THROWS_AS(extension_from_action(b.theta, m.target),
                            NotAnActionGroupoid);
    }
}

TEST_CASE("minimal sets lift through epimorphisms") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        detail::InducedBundle b = detail::make_induced_bundle(seed);
        FiniteActionMap m{b.theta, b.theta_quot, b.f};
        Oracle os(m.source), ot(m.target);
        for (Mask mp : ot.minimal_sets()) {
            Mask lift = minimal_lift(m, mp);
            CHECK(os.is_minimal(lift));
            Mask img = 0, pre = 0;
            for (int s = 0; s < os.sigma().n; ++s) {
                if ((lift >> s) & 1) img |= Mask{1} << m.f[s];
                if ((mp >> m.f[s]) & 1) pre |= Mask{1} << s;
            }
            CHECK(img == mp);
            CHECK((lift & ~pre) == 0);
        }
        CHECK_THROWS_AS(minimal_lift(m, Mask{0}), std::invalid_argument);
    }
}
