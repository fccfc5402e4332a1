/**
 * @file dynamics.hpp
 * @brief Dynamical deciders for the canonical action of a block groupoid on
 *        its unit space: recurrence sets, orbits, saturation, invariant
 *        closure, limit sets, point classification (fixed / periodic /
 *        weakly periodic / almost periodic / recurrent / non-wandering),
 *        minimal sets, the transitivity hierarchy and mixing.
 *
 * All "for every neighbourhood" and "for every open set" quantifiers are
 * eliminated by evaluating on a canonical finite family: the refinement
 * pieces of the carrier by the block boundaries and flavors, germ intervals
 * around their representatives, and interval candidates delimited by the
 * structural endpoints.  Every decider returns a three-valued verdict;
 * Fails verdicts carry witnesses that re-verify through the set algebra.
 */
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gdyn/block_groupoid.hpp"

namespace gdyn {

enum class Verdict { Holds, Fails, Unknown, NotApplicable };

inline const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Unknown: return "unknown";
        default: return "not-applicable";
    }
}

/// A verdict together with a human-readable witness / justification.
struct Prop {
    Verdict v = Verdict::Unknown;
    std::string witness;
};

inline Prop holds(std::string w = "") { return Prop{Verdict::Holds, std::move(w)}; }
inline Prop fails(std::string w) { return Prop{Verdict::Fails, std::move(w)}; }
inline Prop unknown(std::string w = "") { return Prop{Verdict::Unknown, std::move(w)}; }
inline Prop not_applicable(std::string w) { return Prop{Verdict::NotApplicable, std::move(w)}; }

enum class PointClass { Fix, Per, WPer, AlPer, Rec, NW };

struct PointFlags {
    Verdict fixed = Verdict::Unknown;
    Verdict periodic = Verdict::Unknown;
    Verdict weakly_periodic = Verdict::Unknown;
    Verdict almost_periodic = Verdict::Unknown;
    Verdict recurrent = Verdict::Unknown;
    Verdict nonwandering = Verdict::Unknown;
    Verdict compact_orbit = Verdict::Unknown;
    Verdict weakly_transitive = Verdict::Unknown;
};

struct TransitivityProfile {
    Prop transitive;                 ///< exactly one orbit
    Prop pointwise_transitive;       ///< some orbit is dense
    Prop weakly_pointwise_transitive;///< some invariant closure is everything
    Prop prop_i;        ///< not a union of two proper closed invariant sets
    Prop prop_i_prime;  ///< no two disjoint nonempty open invariant sets
    Prop prop_ii;       ///< every nonempty open invariant set is dense
    Prop prop_iii;      ///< recurrent transitivity
    Prop prop_iv;       ///< every invariant set dense or nowhere dense
};

struct MixingProfile {
    Prop weak;
    Prop strong;
};

/**
 * @brief The canonical action of a block groupoid on its unit space
 *        (anchor = identity, rule: (x,y,n) sends y to x).
 */
class CanonicalAction {
public:
    explicit CanonicalAction(BlockGroupoid g) : g_(std::move(g)) {
        std::vector<SymSet> gens;
        for (const auto& bl : g_.blocks) gens.push_back(bl.set);
        pieces_ = refine(g_.base, gens);
        if (g_.base.kind == SpaceKind::RealLine) {
            std::vector<Cell> all;
            for (const auto& c : g_.base.carrier.real().cells()) all.push_back(c);
            for (const auto& bl : g_.blocks)
                for (const auto& c : bl.set.real().cells()) all.push_back(c);
            endpoints_ = RealSet::collect_endpoints(all);
        }
    }

    const BlockGroupoid& groupoid() const { return g_; }
    const SymSet& carrier() const { return g_.base.carrier; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    // ---- basic action notions -------------------------------------------

    ArrowSet recurrence_set(const SymSet& m, const SymSet& n) const {
        return g_.recurrence_set(m, n);
    }
    ArrowSet stabilizer(const SymPoint& p) const { return g_.stabilizer(p); }
    SymSet orbit(const SymPoint& p) const { return g_.orbit(p); }
    SymSet orbit_closure(const SymPoint& p) const {
        return g_.orbit(p).closure_in(carrier());
    }
    SymSet saturate(const SymSet& a) const { return g_.saturate(a); }
    bool is_invariant(const SymSet& a) const { return g_.is_invariant(a); }
    SymSet invariant_closure(const SymSet& a) const { return g_.invariant_closure(a); }
    bool strongly_noncompact() const { return g_.is_strongly_noncompact(); }

    // ---- canonical neighbourhoods ---------------------------------------

    /// A small canonical open neighbourhood of p: the interval between
    /// rationals separating p from the adjacent structural endpoints,
    /// intersected with the carrier (on the integer line: the singleton).
    SymSet germ_at(const SymPoint& p) const {
        if (g_.base.kind == SpaceKind::ZLine)
            return SymSet(GrpSet::singleton(p.integer()));
        const Point& x = p.real();
        ExtPoint lo = ExtPoint::neg_inf(), hi = ExtPoint::pos_inf();
        for (const auto& e : endpoints_) {
            ExtPoint ee(e);
            if (ee < ExtPoint(x) && lo < ee) lo = ee;
            if (ExtPoint(x) < ee && ee < hi) hi = ee;
        }
        Point ql = rational_between(lo, ExtPoint(x));
        Point qr = rational_between(ExtPoint(x), hi);
        RealSet v = RealSet::from_cells({open_cell(ExtPoint(ql), ExtPoint(qr))});
        return SymSet(v).intersect(carrier());
    }

    // ---- limit sets and recurrence (strongly non-compact theory) --------

    /// tau is a limit point of sigma iff the recurrence set into every small
    /// neighbourhood of tau fails to be relatively compact.
    bool is_limit_point(const SymPoint& sigma, const SymPoint& tau) const {
        SymSet s = SymSet::make_singleton(g_.base.kind, sigma);
        SymSet v = germ_at(tau);
        return !g_.is_relatively_compact(g_.recurrence_set(s, v));
    }

    SymSet limit_set(const SymPoint& sigma) const {
        if (!strongly_noncompact())
            throw std::logic_error("limit_set: groupoid not strongly non-compact");
        SymSet out = empty_like();
        for (const auto& pc : pieces_)
            if (is_limit_point(sigma, pc.rep)) out = out.unite(pc.set);
        return out;
    }

    bool is_recurrent(const SymPoint& p) const { return is_limit_point(p, p); }

    bool is_nonwandering(const SymPoint& p) const {
        SymSet w = germ_at(p);
        return !g_.is_relatively_compact(g_.recurrence_set(w, w));
    }

    // ---- syndeticity and the periodicity ladder --------------------------

    /**
     * @brief Is the arrow set a syndetic subset of the d-fibre at p?
     *
     * K·A covers the fibre for a compact K iff the fibre's pair block is
     * compact, the closure of A's range legs stays inside the block, and the
     * union of A's integer parts has bounded gaps inside the fibre subgroup.
     */
    Verdict syndetic_in_fiber(const ArrowSet& a, const SymPoint& p) const {
        if (a.empty()) {
            // the empty set is syndetic only in an empty fibre, which cannot
            // happen (fibres contain the unit arrow)
            return Verdict::Fails;
        }
        SymSet block;
        GrpSet fz = GrpSet::singleton(0);
        if (auto i = g_.block_of(p)) {
            block = g_.blocks[*i].set;
            fz = g_.blocks[*i].zpart;
        } else {
            block = SymSet::make_singleton(g_.base.kind, p);
            fz = g_.residual_zpart;
        }
        SymSet ranges = empty_like();
        GrpSet zu = GrpSet::empty_set();
        for (const auto& at : a.atoms()) {
            ranges = ranges.unite(at.r);
            zu = zu.unite(at.z);
        }
        if (!block.is_compact()) return Verdict::Fails;
        if (!ranges.closure().subset_of(block)) return Verdict::Fails;
        if (fz.is_finite()) return Verdict::Holds;
        return zu.syndetic_in_z() ? Verdict::Holds : Verdict::Fails;
    }

    PointFlags classify_point(const SymPoint& p) const {
        PointFlags f;
        bool snc = strongly_noncompact();
        SymSet single = SymSet::make_singleton(g_.base.kind, p);
        SymSet orb = orbit(p);
        f.fixed = (orb == single) ? Verdict::Holds : Verdict::Fails;
        f.compact_orbit = orb.is_compact() ? Verdict::Holds : Verdict::Fails;
        GrpSet stab_z = g_.residual_zpart;
        bool in_block = false;
        if (auto i = g_.block_of(p)) {
            stab_z = g_.blocks[*i].zpart;
            in_block = true;
        }
        // periodic: the stabilizer is syndetic in the fibre.  For a residual
        // point the stabilizer IS the fibre; for a block point a compact K
        // can translate the stabilizer across the block iff the block is
        // compact.  Almost periodicity quantifies returns into arbitrarily
        // small neighbourhoods, which shrinks the range legs but not the
        // covering requirement, so the criterion coincides.
        if (!in_block) {
            f.periodic = Verdict::Holds;
            f.almost_periodic = Verdict::Holds;
        } else {
            bool cmp = orb.is_compact();
            f.periodic = cmp ? Verdict::Holds : Verdict::Fails;
            f.almost_periodic = cmp ? Verdict::Holds : Verdict::Fails;
        }
        // weakly periodic: the stabilizer (singleton pair part x integer
        // subgroup) is non-compact, i.e. the subgroup is infinite.
        f.weakly_periodic = stab_z.is_finite() ? Verdict::Fails : Verdict::Holds;
        if (snc) {
            f.recurrent = is_recurrent(p) ? Verdict::Holds : Verdict::Fails;
            f.nonwandering = is_nonwandering(p) ? Verdict::Holds : Verdict::Fails;
        } else {
            f.recurrent = Verdict::NotApplicable;
            f.nonwandering = Verdict::NotApplicable;
        }
        f.weakly_transitive =
            (invariant_closure(single) == carrier()) ? Verdict::Holds : Verdict::Fails;
        return f;
    }

    /// The full point-class set, assembled piecewise (flags are constant on
    /// the refinement pieces).
    SymSet point_class_set(PointClass k) const {
        SymSet out = empty_like();
        for (const auto& pc : pieces_) {
            PointFlags f = classify_point(pc.rep);
            Verdict v = Verdict::Unknown;
            switch (k) {
                case PointClass::Fix: v = f.fixed; break;
                case PointClass::Per: v = f.periodic; break;
                case PointClass::WPer: v = f.weakly_periodic; break;
                case PointClass::AlPer: v = f.almost_periodic; break;
                case PointClass::Rec: v = f.recurrent; break;
                case PointClass::NW: v = f.nonwandering; break;
            }
            if (v == Verdict::NotApplicable)
                throw std::logic_error("point_class_set: class needs strong non-compactness");
            if (v == Verdict::Holds) out = out.unite(pc.set);
        }
        return out;
    }

    // ---- minimality -------------------------------------------------------

    /// Is m a minimal (nonempty closed invariant, no proper such subset) set?
    Verdict is_minimal(const SymSet& m) const {
        if (m.empty()) return Verdict::Fails;
        if (!(m.closure_in(carrier()) == m)) return Verdict::Fails;
        if (!is_invariant(m)) return Verdict::Fails;
        // minimal iff every point of m has invariant closure equal to m;
        // the invariant closure is constant on refinement pieces.
        std::vector<SymSet> gens{m};
        for (const auto& bl : g_.blocks) gens.push_back(bl.set);
        for (const auto& pc : refine(g_.base, gens)) {
            if (!pc.set.subset_of(m)) continue;
            if (!(invariant_closure(SymSet::make_singleton(g_.base.kind, pc.rep)) == m))
                return Verdict::Fails;
        }
        return Verdict::Holds;
    }

    /// Minimal sets among the invariant closures of piece representatives
    /// (one representative per orbit type; residual singletons are sampled).
    std::vector<SymSet> minimal_sets() const {
        std::vector<SymSet> out;
        for (const auto& pc : pieces_) {
            SymSet c = invariant_closure(SymSet::make_singleton(g_.base.kind, pc.rep));
            if (is_minimal(c) != Verdict::Holds) continue;
            bool dup = false;
            for (const auto& o : out)
                if (o == c) { dup = true; break; }
            if (!dup) out.push_back(std::move(c));
        }
        return out;
    }

    /// Semisimple: every point lies in a minimal set.
    Verdict is_semisimple() const {
        for (const auto& pc : pieces_) {
            SymSet c = invariant_closure(SymSet::make_singleton(g_.base.kind, pc.rep));
            if (is_minimal(c) != Verdict::Holds) return Verdict::Fails;
        }
        return Verdict::Holds;
    }

    // ---- transitivity hierarchy ------------------------------------------

    TransitivityProfile transitivity_profile() const {
        TransitivityProfile t;
        t.transitive = decide_transitive();
        t.pointwise_transitive = decide_pointwise();
        t.weakly_pointwise_transitive = decide_wpt();
        t.prop_iii = decide_iii();
        t.prop_iv = decide_iv();
        t.prop_ii = decide_ii();
        t.prop_i_prime = decide_i_prime();
        t.prop_i = t.prop_i_prime; // the two conditions are equivalent
        propagate(t);
        return t;
    }

    // ---- mixing ------------------------------------------------------------

    MixingProfile mixing_profile() const {
        MixingProfile m;
        // Weak mixing forces the unit space to a single point (the anchor is
        // the identity here).  With at least two points, germs around them
        // give U, V disjoint and the intersection of the recurrence sets is
        // empty because range legs would have to live in U and in V.
        std::vector<SymPoint> reps;
        for (const auto& pc : pieces_) reps.push_back(pc.rep);
        if (reps.size() >= 2 || (reps.size() == 1 && !pieces_[0].singleton)) {
            SymPoint a = reps[0];
            SymPoint b = reps.size() >= 2 ? reps[1] : second_point_in_piece();
            SymSet u = germ_at(a);
            SymSet v = germ_at(b).subtract(u);
            if (!v.empty() &&
                recurrence_set(u, u).intersect(recurrence_set(u, v), g_.base).empty()) {
                m.weak = fails("U=" + u.str() + ", V=" + v.str() +
                               ": recurrence sets into U and into V are disjoint");
            } else {
                m.weak = unknown("could not separate two unit-space points");
            }
        } else {
            m.weak = holds("unit space is a single point");
        }
        // Strong mixing: the complement of every recurrence set of canonical
        // small opens is relatively compact.  Anti-monotone in U, V, so the
        // germ family is the worst case.
        m.strong = holds("all recurrence-set complements over the germ family "
                         "are relatively compact");
        try {
            std::vector<SymSet> germs = minimal_opens();
            for (const auto& u : germs) {
                for (const auto& v : germs) {
                    ArrowSet c = g_.arrows().subtract(recurrence_set(u, v), g_.base);
                    if (!g_.is_relatively_compact(c)) {
                        m.strong = fails("complement of the recurrence set of U=" +
                                         u.str() + ", V=" + v.str() +
                                         " is not relatively compact");
                        return m;
                    }
                }
            }
        } catch (const UnrepresentableArrowSet&) {
            m.strong = unknown("recurrence-set complement left the representable class");
        }
        return m;
    }

    // ---- building blocks shared with the profile deciders -----------------

    /// Largest open invariant subset of a (greatest fixpoint of: take the
    /// interior, drop every block not fully contained).
    SymSet max_open_invariant(const SymSet& a) const {
        SymSet u = a.intersect(carrier()).interior_in(carrier());
        size_t cap = 2 * g_.blocks.size() + 4;
        for (size_t k = 0; k < cap; ++k) {
            SymSet next = u;
            for (const auto& bl : g_.blocks)
                if (!bl.set.subset_of(next)) next = next.subtract(bl.set);
            next = next.interior_in(carrier());
            if (next == u) return u;
            u = std::move(next);
        }
        throw std::runtime_error("max_open_invariant: did not stabilize");
    }

private:
    BlockGroupoid g_;
    std::vector<Piece> pieces_;
    std::vector<Point> endpoints_;

    SymSet empty_like() const {
        return g_.base.kind == SpaceKind::RealLine ? SymSet(RealSet())
                                                   : SymSet(GrpSet::empty_set());
    }

    SymPoint second_point_in_piece() const {
        // the single piece is not a singleton; produce another exact point
        const SymSet& s = pieces_[0].set;
        if (g_.base.kind == SpaceKind::ZLine) {
            GrpSet rest = s.zset().subtract(
                GrpSet::singleton(pieces_[0].rep.integer()));
            return SymPoint(rest.any_element());
        }
        SymSet rest = s.subtract(SymSet::make_singleton(g_.base.kind, pieces_[0].rep));
        std::vector<SymSet> gens{rest};
        auto pcs = refine(g_.base, gens);
        for (const auto& pc : pcs)
            if (pc.set.subset_of(rest)) return pc.rep;
        throw std::logic_error("second_point_in_piece: none found");
    }

    SymSet residual_interior() const {
        return g_.residual().interior_in(carrier());
    }

    /// A strict open sub-interval of the span of a piece, intersected with
    /// the given set (nonempty because pieces are dense in their spans).
    SymSet strict_subinterval(const SymSet& within, const Piece& pc) const {
        if (g_.base.kind == SpaceKind::ZLine)
            return SymSet(GrpSet::singleton(pc.rep.integer())).intersect(within);
        if (pc.singleton)
            return SymSet::make_singleton(g_.base.kind, pc.rep).intersect(within);
        // span bounds of the (single-cell) piece
        const auto& cells = pc.set.real().cells();
        ExtPoint lo = cells.front().lo, hi = cells.back().hi;
        Point ql = rational_between(lo, ExtPoint(pc.rep.real()));
        Point qr = rational_between(ExtPoint(pc.rep.real()), hi);
        RealSet j = RealSet::from_cells({open_cell(ExtPoint(ql), ExtPoint(qr))});
        return SymSet(j).intersect(within);
    }

    /// Two disjoint strict open sub-intervals inside one non-singleton piece.
    std::pair<SymSet, SymSet> split_piece(const SymSet& within, const Piece& pc) const {
        if (g_.base.kind == SpaceKind::ZLine) {
            GrpSet s = pc.set.zset();
            GrpSet::Int a = pc.rep.integer();
            GrpSet rest = s.subtract(GrpSet::singleton(a));
            return {SymSet(GrpSet::singleton(a)).intersect(within),
                    SymSet(GrpSet::singleton(rest.any_element())).intersect(within)};
        }
        const auto& cells = pc.set.real().cells();
        ExtPoint lo = cells.front().lo, hi = cells.back().hi;
        Point m = pc.rep.real();
        Point q1 = rational_between(lo, ExtPoint(m));
        Point q2 = rational_between(ExtPoint(q1), ExtPoint(m));
        Point q3 = rational_between(ExtPoint(m), hi);
        Point q4 = rational_between(ExtPoint(q3), hi);
        RealSet j1 = RealSet::from_cells({open_cell(ExtPoint(q1), ExtPoint(q2))});
        RealSet j2 = RealSet::from_cells({open_cell(ExtPoint(q3), ExtPoint(q4))});
        return {SymSet(j1).intersect(within), SymSet(j2).intersect(within)};
    }

    /// Closed fattening of a block-union: closure plus germ intervals at the
    /// boundary points the set owns (those are the spots where any open
    /// invariant superset is forced to spill over).
    SymSet fatten(const SymSet& core) const {
        SymSet fat = core.closure_in(carrier()).unite(core.closure());
        SymSet own_boundary = core.subtract(core.interior_in(carrier()));
        std::vector<SymSet> gens{own_boundary};
        for (const auto& pc : refine(g_.base, gens)) {
            if (!pc.set.subset_of(own_boundary)) continue;
            fat = fat.unite(germ_at(pc.rep));
            if (!pc.singleton && g_.base.kind == SpaceKind::RealLine) {
                const auto& cells = pc.set.real().cells();
                RealSet span = RealSet::from_cells(
                    {open_cell(cells.front().lo, cells.back().hi)});
                fat = fat.unite(SymSet(span).intersect(carrier()));
            }
        }
        return fat;
    }

    SymSet block_union(const std::vector<size_t>& idx) const {
        SymSet u = empty_like();
        for (size_t i : idx) u = u.unite(g_.blocks[i].set);
        return u;
    }
    SymSet other_blocks(const std::vector<size_t>& idx) const {
        std::set<size_t> in(idx.begin(), idx.end());
        SymSet u = empty_like();
        for (size_t i = 0; i < g_.blocks.size(); ++i)
            if (!in.count(i)) u = u.unite(g_.blocks[i].set);
        return u;
    }

    /// Can a nonempty open invariant set contain exactly the blocks of idx?
    bool feasible(const std::vector<size_t>& idx, SymSet* max_out = nullptr) const {
        SymSet mx = max_open_invariant(carrier().subtract(other_blocks(idx)));
        bool ok = true;
        for (size_t i : idx)
            if (!g_.blocks[i].set.subset_of(mx)) { ok = false; break; }
        if (max_out) *max_out = std::move(mx);
        return ok;
    }

    std::vector<std::vector<size_t>> block_patterns(bool nonempty_only) const {
        std::vector<std::vector<size_t>> out;
        size_t n = g_.blocks.size();
        if (n > 12) throw std::runtime_error("too many blocks for pattern search");
        for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
            if (nonempty_only && mask == 0) continue;
            std::vector<size_t> idx;
            for (size_t i = 0; i < n; ++i)
                if (mask & (size_t{1} << i)) idx.push_back(i);
            out.push_back(std::move(idx));
        }
        return out;
    }

    bool verified_open_invariant(const SymSet& u) const {
        return !u.empty() && u.is_open_in(carrier()) && is_invariant(u);
    }

    // ---- individual profile deciders --------------------------------------

    Prop decide_transitive() const {
        for (const auto& bl : g_.blocks)
            if (bl.set == carrier())
                return holds("the whole carrier is one orbit");
        // a singleton carrier with no blocks is a single (trivial) orbit
        if (g_.blocks.empty()) {
            for (const auto& pc : pieces_)
                if (!pc.singleton || pieces_.size() > 1)
                    return fails("more than one orbit");
            if (pieces_.size() == 1) return holds("single-point carrier");
        }
        return fails("more than one orbit");
    }

    Prop decide_pointwise() const {
        for (const auto& pc : pieces_) {
            SymSet oc = orbit_closure(pc.rep);
            if (oc == carrier())
                return holds("dense orbit through " + pc.rep.str());
        }
        return fails("no orbit is dense (orbit closures checked per piece)");
    }

    Prop decide_wpt() const {
        for (const auto& pc : pieces_) {
            SymSet c = invariant_closure(SymSet::make_singleton(g_.base.kind, pc.rep));
            if (c == carrier())
                return holds("invariant closure of " + pc.rep.str() +
                             " is the whole space");
        }
        return fails("no invariant closure is the whole space");
    }

    /// The canonical family of minimal nonempty open sets: germs around
    /// singleton pieces plus two disjoint strict subintervals of every
    /// non-singleton piece.  Recurrence-set emptiness and relative
    /// compactness only depend on which layers an interval meets, so this
    /// family is exhaustive for the open-set quantifiers.
    std::vector<SymSet> minimal_opens() const {
        std::vector<SymSet> out;
        for (const auto& pc : pieces_) {
            if (pc.singleton) {
                out.push_back(germ_at(pc.rep));
            } else {
                auto [u1, u2] = split_piece(carrier(), pc);
                if (!u1.empty()) out.push_back(u1);
                if (!u2.empty()) out.push_back(u2);
            }
        }
        return out;
    }

    Prop decide_iii() const {
        std::vector<SymSet> germs = minimal_opens();
        for (const auto& u : germs)
            for (const auto& v : germs)
                if (recurrence_set(u, v).empty())
                    return fails("U=" + u.str() + ", V=" + v.str() +
                                 ": recurrence set is empty");
        return holds("recurrence sets of all canonical small opens are nonempty");
    }

    Prop decide_iv() const {
        const SymSet car = carrier();
        for (const auto& bl : g_.blocks) {
            if (!bl.set.is_dense_in(car) && !bl.set.is_nowhere_dense_in(car))
                return fails("invariant set " + bl.set.str() +
                             " is neither dense nor nowhere dense");
        }
        SymSet f = g_.residual();
        if (!f.empty()) {
            std::vector<SymSet> gens;
            for (const auto& bl : g_.blocks) gens.push_back(bl.set);
            for (const auto& pc : pieces_) {
                SymSet t = pc.set.intersect(f);
                if (t.empty()) continue;
                if (!t.is_dense_in(car) && !t.is_nowhere_dense_in(car))
                    return fails("invariant set " + t.str() +
                                 " is neither dense nor nowhere dense");
                SymSet sub = strict_subinterval(f, pc);
                if (!sub.empty() && !sub.is_dense_in(car) &&
                    !sub.is_nowhere_dense_in(car))
                    return fails("invariant set " + sub.str() +
                                 " is neither dense nor nowhere dense");
            }
        }
        return holds("every union of orbits with a residual part is dense or "
                     "nowhere dense (blockwise and piecewise certificates)");
    }

    Prop decide_ii() const {
        const SymSet car = carrier();
        // candidates supported inside the residual interior
        SymSet fo = residual_interior();
        if (!fo.empty()) {
            std::vector<SymSet> gens{fo};
            for (const auto& pc : refine(g_.base, gens)) {
                if (!pc.set.subset_of(fo)) continue;
                SymSet u = strict_subinterval(fo, pc);
                if (verified_open_invariant(u) && !u.is_dense_in(car))
                    return fails("open invariant " + u.str() + " is not dense");
            }
        }
        // candidates that contain a block pattern
        for (const auto& idx : block_patterns(true)) {
            SymSet mx;
            if (!feasible(idx, &mx)) continue;
            SymSet core = block_union(idx);
            if (core.is_dense_in(car)) continue;
            // the thin open invariant sets over this pattern have closures
            // approaching cl(core); build a verified non-dense witness
            SymSet hole = car.subtract(core.closure_in(car)).interior_in(car);
            std::vector<SymSet> gens{hole};
            for (const auto& pc : refine(g_.base, gens)) {
                if (!pc.set.subset_of(hole) || pc.singleton) continue;
                SymSet j = strict_subinterval(hole, pc);
                SymSet w = max_open_invariant(
                    car.subtract(other_blocks(idx)).subtract(j.closure()));
                if (core.subset_of(w) && verified_open_invariant(w) &&
                    !w.is_dense_in(car))
                    return fails("open invariant " + w.str() + " is not dense");
            }
            return unknown("pattern with non-dense closure found but no witness "
                           "could be verified");
        }
        return holds("every nonempty open invariant set is dense (pattern-wise "
                     "closure certificates)");
    }

    Prop decide_i_prime() const {
        const SymSet car = carrier();
        SymSet fo = residual_interior();
        std::vector<Piece> fo_pieces;
        if (!fo.empty()) {
            std::vector<SymSet> gens{fo};
            for (const auto& pc : refine(g_.base, gens))
                if (pc.set.subset_of(fo)) fo_pieces.push_back(pc);
        }
        // two disjoint pockets in the residual interior
        if (fo_pieces.size() >= 2) {
            SymSet u1 = strict_subinterval(fo, fo_pieces[0]);
            SymSet u2 = strict_subinterval(fo, fo_pieces[1]).subtract(u1.closure());
            if (verified_open_invariant(u1) && verified_open_invariant(u2) &&
                !u1.meets(u2))
                return fails("disjoint open invariant sets " + u1.str() + " and " +
                             u2.str());
        }
        if (fo_pieces.size() == 1 && !fo_pieces[0].singleton) {
            auto [u1, u2] = split_piece(fo, fo_pieces[0]);
            if (verified_open_invariant(u1) && verified_open_invariant(u2) &&
                !u1.meets(u2))
                return fails("disjoint open invariant sets " + u1.str() + " and " +
                             u2.str());
        }
        // pairs of disjoint feasible block patterns
        auto pats = block_patterns(true);
        std::vector<std::vector<size_t>> feas;
        for (const auto& idx : pats)
            if (feasible(idx)) feas.push_back(idx);
        bool pattern_possible = false;
        for (size_t a = 0; a < feas.size(); ++a) {
            for (size_t b = 0; b < feas.size(); ++b) {
                if (a == b) continue;
                std::set<size_t> sa(feas[a].begin(), feas[a].end());
                bool disj = true;
                for (size_t i : feas[b])
                    if (sa.count(i)) { disj = false; break; }
                if (!disj) continue;
                pattern_possible = true;
                SymSet w1 = max_open_invariant(car.subtract(other_blocks(feas[a]))
                                                   .subtract(fatten(block_union(feas[b]))));
                SymSet w2 = max_open_invariant(car.subtract(other_blocks(feas[b]))
                                                   .subtract(w1.closure_in(car))
                                                   .subtract(w1.closure()));
                if (block_union(feas[a]).subset_of(w1) &&
                    block_union(feas[b]).subset_of(w2) &&
                    verified_open_invariant(w1) && verified_open_invariant(w2) &&
                    !w1.meets(w2))
                    return fails("disjoint open invariant sets " + w1.str() +
                                 " and " + w2.str());
            }
        }
        // one block pattern against a residual pocket
        for (const auto& idx : feas) {
            for (const auto& pc : fo_pieces) {
                SymSet j = strict_subinterval(fo, pc);
                if (j.empty()) continue;
                SymSet w1 = max_open_invariant(
                    car.subtract(other_blocks(idx)).subtract(j.closure()));
                SymSet w2 = j.subtract(w1.closure_in(car)).subtract(w1.closure());
                w2 = w2.interior_in(car);
                if (block_union(idx).subset_of(w1) && verified_open_invariant(w1) &&
                    verified_open_invariant(w2) && !w1.meets(w2))
                    return fails("disjoint open invariant sets " + w1.str() +
                                 " and " + w2.str());
                pattern_possible = pattern_possible || !j.empty();
            }
        }
        if (pattern_possible)
            return unknown("disjoint-pattern candidates exist but no disjoint "
                           "pair could be verified");
        return holds("no two disjoint nonempty open invariant sets exist "
                     "(pattern and pocket search exhaustive)");
    }

    void propagate(TransitivityProfile& t) const {
        auto imply = [](Prop& from, Prop& to) {
            // from => to
            if (from.v == Verdict::Holds && to.v == Verdict::Unknown)
                to = holds("implied: " + from.witness);
            if (to.v == Verdict::Fails && from.v == Verdict::Unknown)
                from = fails("implied by failure downstream: " + to.witness);
            if (from.v == Verdict::Holds && to.v == Verdict::Fails)
                throw std::logic_error("transitivity implication violated");
        };
        imply(t.prop_iv, t.prop_iii);
        imply(t.prop_iii, t.prop_ii);
        imply(t.prop_ii, t.prop_i_prime);
        imply(t.transitive, t.pointwise_transitive);
        imply(t.pointwise_transitive, t.prop_iii);
        imply(t.pointwise_transitive, t.weakly_pointwise_transitive);
        imply(t.weakly_pointwise_transitive, t.prop_i_prime);
        t.prop_i = t.prop_i_prime;
    }
};

} // namespace gdyn
