/**
 * @file oracle.hpp
 * @brief Independent reference semantics on finite/hybrid instances.
 *
 * Every predicate here is a direct transcription of its definition,
 * evaluated by exhaustive enumeration; integer parts are handled with exact
 * eventually-periodic arithmetic, never by truncation without a stated
 * correctness bound.  This module deliberately depends only on the set
 * algebra and the finite instance types, so its answers are independent of
 * the symbolic decision procedures and can be used to cross-check them.
 */
#pragma once

#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdyn/finite.hpp"
#include "gdyn/grpset.hpp"

namespace gdyn {

/// Raised when the windowed syndeticity decision would need a larger bound
/// than configured (does not occur for generated instances).
struct OracleUndecided : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Brute-force evaluator for an action of a hybrid groupoid on a finite
/// total space.  Predicates quantified over open sets use the minimal open
/// neighborhoods: every such predicate below is monotone (or anti-monotone)
/// in the open sets involved, so the minimal neighborhoods decide.
class Oracle {
  public:
    using Mask = FiniteSpace::Mask;

    explicit Oracle(HybridAction a) : act_(std::move(a)) { act_.validate(); }

    const HybridAction& action() const { return act_; }
    const HybridGroupoid& groupoid() const { return act_.g; }
    const FiniteSpace& sigma() const { return act_.sigma; }
    int units() const { return act_.g.X.n; }
    Mask all_points() const { return act_.sigma.all(); }

    /// All arrows of the groupoid, as an arrow subset.
    HybridArrows full_arrows() const {
        HybridArrows a = HybridArrows::none(units());
        a.z = act_.g.z;
        return a;
    }

    /// The integers n in z(x,y) whose arrow maps s onto t (a union of
    /// residue classes modulo the fiber period, intersected with z(x,y)).
    GrpSet matching(int x, int y, int s, int t) const {
        if (act_.anchor[s] != y || act_.anchor[t] != x) return GrpSet::empty_set();
        if (act_.g.zat(x, y).empty()) return GrpSet::empty_set();
        GrpSet classes = GrpSet::empty_set();
        for (int n0 : act_.residues(x, y))
            if (act_.act(x, y, n0, s) == t)
                classes = classes.unite(GrpSet::subgroup(act_.period).translate(n0));
        return classes.intersect(act_.g.zat(x, y));
    }

    /// The recurrence set {xi | (xi . M) meets N}, as an arrow subset.
    HybridArrows rec(Mask M, Mask N) const {
        HybridArrows r = HybridArrows::none(units());
        for (int s = 0; s < act_.sigma.n; ++s) {
            if (!((M >> s) & 1)) continue;
            for (int t = 0; t < act_.sigma.n; ++t) {
                if (!((N >> t) & 1)) continue;
                int y = act_.anchor[s], x = act_.anchor[t];
                r.at(x, y) = r.at(x, y).unite(matching(x, y, s, t));
            }
        }
        return r;
    }

    Mask point(int s) const { return Mask{1} << s; }

    // ---- orbits and invariance --------------------------------------------

    Mask saturate(Mask M) const {
        Mask cur = M;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int s = 0; s < act_.sigma.n; ++s) {
                if (!((cur >> s) & 1)) continue;
                int y = act_.anchor[s];
                for (int x = 0; x < units(); ++x) {
                    const GrpSet& zs = act_.g.zat(x, y);
                    if (zs.empty()) continue;
                    for (int n0 = 0; n0 < act_.period; ++n0) {
                        GrpSet cls = zs.intersect(
                            GrpSet::subgroup(act_.period).translate(n0));
                        if (cls.empty()) continue;
                        int t = act_.act(x, y, cls.any_element(), s);
                        if (!((cur >> t) & 1)) {
                            cur |= Mask{1} << t;
                            grew = true;
                        }
                    }
                }
            }
        }
        return cur;
    }

    Mask orbit(int s) const { return saturate(point(s)); }
    bool invariant(Mask M) const { return saturate(M) == M; }

    /// Smallest closed invariant superset (alternate closure and saturation
    /// to the fixpoint; both operators are monotone and extensive).
    Mask invariant_closure(Mask M) const {
        Mask cur = M;
        for (;;) {
            Mask next = saturate(act_.sigma.closure(cur));
            if (next == cur) return cur;
            cur = next;
        }
    }

    /// All invariant subsets (exactly the unions of orbits).
    std::vector<Mask> invariant_sets() const {
        std::vector<Mask> orbits;
        Mask seen = 0;
        for (int s = 0; s < act_.sigma.n; ++s) {
            if ((seen >> s) & 1) continue;
            Mask o = orbit(s);
            seen |= o;
            orbits.push_back(o);
        }
        std::vector<Mask> out;
        size_t k = orbits.size();
        if (k > 20) throw OracleUndecided("too many orbits to enumerate");
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
            Mask m = 0;
            for (size_t i = 0; i < k; ++i)
                if ((pick >> i) & 1) m |= orbits[i];
            out.push_back(m);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // ---- compactness and syndeticity --------------------------------------

    /// A subset of the arrow space is relatively compact iff it is finite
    /// (the integer coordinate is discrete, the pair part is finite).
    static bool relatively_compact(const HybridArrows& a) { return a.finite(); }

    /// Is the d-fibre over every unit non-compact?
    bool strongly_noncompact() const {
        for (int x = 0; x < units(); ++x) {
            bool inf = false;
            for (int y = 0; y < units(); ++y)
                if (!act_.g.zat(y, x).is_finite()) inf = true;
            if (!inf) return false;
        }
        return true;
    }

    /**
     * Syndeticity of A inside the d-fibre over x: some compact (= finite)
     * K with K A covering the fibre.  Decided exactly by testing
     * K_B = {arrows with |z| <= B}: if any finite K works, one with window
     * B works, because shifting a large witness by the common period of
     * the eventually periodic sets involved yields a smaller witness.
     * B = 2*(largest window radius) + 2*lcm(periods) + 4.
     */
    bool syndetic_in_fiber(const HybridArrows& A, int x) const {
        // A must live inside the fibre
        for (int a = 0; a < units(); ++a)
            for (int b = 0; b < units(); ++b)
                if (b != x && !A.at(a, b).empty())
                    throw std::invalid_argument("syndetic: A escapes the fibre");
        bool empty = true;
        for (int a = 0; a < units(); ++a)
            if (!A.at(a, x).empty()) empty = false;
        if (empty) {
            for (int a = 0; a < units(); ++a)
                if (!act_.g.zat(a, x).empty()) return false;
            return true; // empty fibre is covered vacuously
        }
        long long maxwin = 0, lcmp = 1;
        auto absorb = [&](const GrpSet& s) {
            if (s.empty()) return;
            maxwin = std::max({maxwin, std::llabs(s.window_lo()), std::llabs(s.window_hi())});
            long long p = std::max<long long>(1, s.period());
            lcmp = std::lcm(lcmp, p);
            if (lcmp > 100000) throw OracleUndecided("syndetic bound overflow");
        };
        for (int a = 0; a < units(); ++a) {
            absorb(act_.g.zat(a, x));
            absorb(A.at(a, x));
            for (int y = 0; y < units(); ++y) absorb(act_.g.zat(a, y));
        }
        long long B = 2 * maxwin + 2 * lcmp + 4;
        for (int a = 0; a < units(); ++a) {
            const GrpSet& target = act_.g.zat(a, x);
            if (target.empty()) continue;
            GrpSet covered = GrpSet::empty_set();
            for (int y = 0; y < units(); ++y) {
                if (A.at(y, x).empty()) continue;
                auto win = act_.g.zat(a, y).elements_in(-B, B);
                if (win.empty()) continue;
                covered = covered.unite(GrpSet::from_elements(win).sum(A.at(y, x)));
            }
            if (!target.subset_of(covered)) return false;
        }
        return true;
    }

    // ---- point classes -----------------------------------------------------

    bool fixed(int s) const { return orbit(s) == point(s); }
    GrpSet stabilizer_z(int s) const {
        int x = act_.anchor[s];
        return rec(point(s), point(s)).at(x, x);
    }
    bool periodic(int s) const {
        return syndetic_in_fiber(rec(point(s), point(s)), act_.anchor[s]);
    }
    bool weakly_periodic(int s) const {
        return !relatively_compact(rec(point(s), point(s)));
    }
    bool almost_periodic(int s) const {
        return syndetic_in_fiber(rec(point(s), act_.sigma.up[s]), act_.anchor[s]);
    }
    bool recurrent(int s) const {
        return !relatively_compact(rec(point(s), act_.sigma.up[s]));
    }
    bool nonwandering(int s) const {
        return !relatively_compact(rec(act_.sigma.up[s], act_.sigma.up[s]));
    }
    Mask limit_set(int s) const {
        Mask out = 0;
        for (int t = 0; t < act_.sigma.n; ++t)
            if (!relatively_compact(rec(point(s), act_.sigma.up[t])))
                out |= Mask{1} << t;
        return out;
    }

    // ---- minimality --------------------------------------------------------

    bool is_minimal(Mask M) const {
        if (M == 0 || !act_.sigma.is_closed(M) || !invariant(M)) return false;
        for (Mask c : invariant_sets())
            if (c != 0 && c != M && (c & ~M) == 0 && act_.sigma.is_closed(c))
                return false;
        return true;
    }
    std::vector<Mask> minimal_sets() const {
        std::vector<Mask> out;
        for (Mask c : invariant_sets())
            if (c != 0 && act_.sigma.is_closed(c) && is_minimal(c)) out.push_back(c);
        return out;
    }

    // ---- transitivity ------------------------------------------------------

    bool transitive() const {
        return act_.sigma.n > 0 && orbit(0) == all_points();
    }
    bool pointwise_transitive() const {
        for (int s = 0; s < act_.sigma.n; ++s)
            if (act_.sigma.dense(orbit(s))) return true;
        return false;
    }
    bool weakly_pointwise_transitive() const {
        for (int s = 0; s < act_.sigma.n; ++s)
            if (invariant_closure(point(s)) == all_points()) return true;
        return false;
    }
    /// Sigma is not the union of two proper closed invariant subsets.
    bool prop_i() const {
        for (Mask c : invariant_sets()) {
            if (c == all_points() || !act_.sigma.is_closed(c)) continue;
            Mask d = invariant_closure(all_points() & ~c);
            if (d != all_points()) return false;
        }
        return true;
    }
    /// Any two non-void open invariant subsets intersect.
    bool prop_i_prime() const {
        std::vector<Mask> opens_inv;
        for (Mask c : invariant_sets())
            if (c != 0 && act_.sigma.is_open(c)) opens_inv.push_back(c);
        for (size_t i = 0; i < opens_inv.size(); ++i)
            for (size_t j = i + 1; j < opens_inv.size(); ++j)
                if ((opens_inv[i] & opens_inv[j]) == 0) return false;
        return true;
    }
    /// Every non-void open invariant subset is dense.
    bool prop_ii() const {
        for (Mask c : invariant_sets())
            if (c != 0 && act_.sigma.is_open(c) && !act_.sigma.dense(c)) return false;
        return true;
    }
    /// Recurrent transitivity: every pair of non-void opens has a non-void
    /// recurrence set (monotone, so minimal neighborhoods decide).
    bool prop_iii() const {
        for (int s = 0; s < act_.sigma.n; ++s)
            for (int t = 0; t < act_.sigma.n; ++t)
                if (rec(act_.sigma.up[s], act_.sigma.up[t]).empty()) return false;
        return true;
    }
    /// Topological transitivity: every invariant subset is dense or
    /// nowhere dense.
    bool prop_iv() const {
        for (Mask c : invariant_sets())
            if (!act_.sigma.dense(c) && !act_.sigma.nowhere_dense(c)) return false;
        return true;
    }

    // ---- mixing ------------------------------------------------------------

    bool weakly_mixing() const {
        int n = act_.sigma.n;
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                HybridArrows r1 = rec(act_.sigma.up[s], act_.sigma.up[t]);
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v)
                        if (r1.intersect(rec(act_.sigma.up[u], act_.sigma.up[v])).empty())
                            return false;
            }
        return true;
    }
    bool strongly_mixing() const {
        HybridArrows full = full_arrows();
        for (int s = 0; s < act_.sigma.n; ++s)
            for (int t = 0; t < act_.sigma.n; ++t)
                if (!relatively_compact(
                        full.subtract(rec(act_.sigma.up[s], act_.sigma.up[t]))))
                    return false;
        return true;
    }

    Mask fix_set() const { return collect([&](int s) { return fixed(s); }); }
    Mask per_set() const { return collect([&](int s) { return periodic(s); }); }
    Mask wper_set() const { return collect([&](int s) { return weakly_periodic(s); }); }
    Mask alper_set() const { return collect([&](int s) { return almost_periodic(s); }); }
    Mask rec_set() const { return collect([&](int s) { return recurrent(s); }); }
    Mask nw_set() const { return collect([&](int s) { return nonwandering(s); }); }

    // ---- derived constructions --------------------------------------------

    /// The action (crossed-product) groupoid over the total space: the
    /// arrow set between points t and s collects the integers of arrows
    /// carrying s onto t.
    HybridGroupoid action_groupoid() const {
        HybridGroupoid g;
        g.X = act_.sigma;
        int m = act_.sigma.n;
        g.z.assign(m * m, GrpSet::empty_set());
        for (int s = 0; s < m; ++s)
            for (int t = 0; t < m; ++t)
                g.zat(t, s) = matching(act_.anchor[t], act_.anchor[s], s, t);
        g.validate();
        return g;
    }

  private:
    template <class F> Mask collect(F f) const {
        Mask out = 0;
        for (int s = 0; s < act_.sigma.n; ++s)
            if (f(s)) out |= Mask{1} << s;
        return out;
    }

    HybridAction act_;
};

/**
 * Is the domain map of the groupoid open?  It suffices to check the images
 * of the basic opens up(x) x up(y) x {n}; arrows with |n| beyond the common
 * window repeat (by eventual periodicity) a membership pattern already seen
 * inside the band window + lcm(periods) + 1.
 */
inline bool groupoid_open(const HybridGroupoid& g) {
    long long maxwin = 0, lcmp = 1;
    for (const auto& s : g.z) {
        if (s.empty()) continue;
        maxwin = std::max({maxwin, std::llabs(s.window_lo()), std::llabs(s.window_hi())});
        lcmp = std::lcm(lcmp, std::max<long long>(1, s.period()));
        if (lcmp > 100000) throw OracleUndecided("openness bound overflow");
    }
    long long B = maxwin + lcmp + 1;
    for (int x = 0; x < g.X.n; ++x)
        for (int y = 0; y < g.X.n; ++y)
            for (long long n : g.zat(x, y).elements_in(-B, B)) {
                FiniteSpace::Mask img = 0;
                for (int yy = 0; yy < g.X.n; ++yy) {
                    if (!((g.X.up[y] >> yy) & 1)) continue;
                    for (int xx = 0; xx < g.X.n; ++xx)
                        if (((g.X.up[x] >> xx) & 1) && g.zat(xx, yy).contains(n))
                            img |= FiniteSpace::Mask{1} << yy;
                }
                if (!g.X.is_open(img)) return false;
            }
    return true;
}

// ---- random instance generation -------------------------------------------

struct OracleParams {
    int max_units = 4;     ///< unit-space size cap
    int max_fiber = 3;     ///< rotation extension fiber cap
    bool allow_z = true;   ///< permit non-trivial integer parts
    bool force_discrete = false;
};

struct FiniteInstance {
    std::uint64_t seed = 0;
    std::string family;
    HybridAction action;
    bool hausdorff = false;
    bool strongly_noncompact = false;
    /// Set when the groupoid is constant on the classes of a partition, so
    /// the instance is also encodable symbolically.
    bool block_type = false;
    std::vector<int> block_id;
    std::vector<GrpSet> block_z;
};

/// Deterministic random instance: same seed, same instance.
inline FiniteInstance gen_instance(std::uint64_t seed, const OracleParams& p = {}) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull);
    auto pick = [&](int lo, int hi) {
        return lo + (int)(rng() % (std::uint64_t)(hi - lo + 1));
    };
    FiniteInstance inst;
    inst.seed = seed;
    int n = pick(2, p.max_units);

    // base topology: discrete or a random preorder
    FiniteSpace sp;
    if (p.force_discrete || pick(0, 2) == 0) {
        sp = FiniteSpace::discrete(n);
    } else {
        std::vector<bool> leq(n * n, false);
        for (int i = 0; i < n; ++i) leq[i * n + i] = true;
        int extra = pick(0, n);
        for (int e = 0; e < extra; ++e) leq[pick(0, n - 1) * n + pick(0, n - 1)] = true;
        sp = FiniteSpace::from_preorder(n, leq);
    }

    int fam = pick(0, p.allow_z ? 4 : 0);
    HybridGroupoid g;
    switch (fam) {
        case 0: { // plain equivalence relation
            inst.family = "equivalence";
            std::vector<int> ids(n);
            for (int i = 0; i < n; ++i) ids[i] = pick(0, std::max(0, n / 2));
            g = HybridGroupoid::equivalence(sp, ids);
            inst.block_type = true;
            inst.block_id = ids;
            inst.block_z.assign(n, GrpSet::singleton(0));
            break;
        }
        case 1: { // equivalence, full integer group on every class
            inst.family = "equivalence_z";
            std::vector<int> ids(n);
            for (int i = 0; i < n; ++i) ids[i] = pick(0, std::max(0, n / 2));
            g = HybridGroupoid::equivalence(sp, ids).product_with_z();
            inst.block_type = true;
            inst.block_id = ids;
            inst.block_z.assign(n, GrpSet::all());
            break;
        }
        case 2: { // equivalence with a subgroup per class
            inst.family = "equivalence_subgroup";
            std::vector<int> ids(n);
            for (int i = 0; i < n; ++i) ids[i] = pick(0, std::max(0, n / 2));
            std::vector<GrpSet> zs(n, GrpSet::singleton(0));
            std::vector<GrpSet> per_class(n, GrpSet::singleton(0));
            for (int c = 0; c < n; ++c) {
                int d = pick(0, 3);
                per_class[c] = d == 0 ? GrpSet::singleton(0) : GrpSet::subgroup(d);
            }
            g = HybridGroupoid::equivalence(sp, ids);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (!g.zat(x, y).empty()) g.zat(x, y) = per_class[ids[x]];
            for (int x = 0; x < n; ++x) zs[x] = per_class[ids[x]];
            g.validate();
            inst.block_type = true;
            inst.block_id = ids;
            inst.block_z = zs;
            break;
        }
        case 3: { // Deaconu-Renault of a random self-map (discrete base)
            inst.family = "deaconu_renault";
            std::vector<int> nu(n);
            for (int i = 0; i < n; ++i) nu[i] = pick(0, n - 1);
            g = HybridGroupoid::deaconu_renault(nu);
            break;
        }
        default: { // pull-back of a smaller equivalence along a surjection
            inst.family = "pullback";
            int m = std::max(2, n - 1);
            std::vector<int> ids(m);
            for (int i = 0; i < m; ++i) ids[i] = pick(0, std::max(0, m / 2));
            HybridGroupoid base = HybridGroupoid::equivalence(FiniteSpace::discrete(m), ids);
            if (pick(0, 1) == 1) base = base.product_with_z();
            std::vector<int> h(n);
            for (int i = 0; i < m; ++i) h[i] = i; // keep it surjective
            for (int i = m; i < n; ++i) h[i] = pick(0, m - 1);
            FiniteSpace omega = p.force_discrete ? FiniteSpace::discrete(n) : sp;
            g = base.pullback(omega, h);
            break;
        }
    }

    // action: canonical, or a rotation extension when the instance stays small
    int fiber = pick(1, p.max_fiber);
    if (fiber > 1 && g.X.n * fiber <= 16 && pick(0, 1) == 1) {
        std::vector<int> delta(g.X.n);
        for (int& d : delta) d = pick(0, fiber - 1);
        inst.action = HybridAction::rotation_extension(g, fiber, pick(0, fiber), delta);
        inst.family += "+rotation";
    } else {
        inst.action = HybridAction::canonical(g);
    }
    inst.hausdorff = inst.action.sigma.hausdorff();
    inst.strongly_noncompact = Oracle(inst.action).strongly_noncompact();
    return inst;
}

} // namespace gdyn
