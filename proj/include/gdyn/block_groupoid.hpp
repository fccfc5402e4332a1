/**
 * @file block_groupoid.hpp
 * @brief Groupoids over a one-dimensional unit space, represented as a
 *        finite family of equivalence blocks with integer fibre parts.
 *
 * A BlockGroupoid describes a groupoid whose unit space is a subspace of the
 * real line (or of the integers) and whose arrow set decomposes as
 *
 *     arrows = U_i  (B_i x B_i) x Z_i   u   Diag(residual) x Z_0
 *
 * where the B_i are pairwise disjoint blocks, each Z_i is a subgroup dZ of the
 * integers, and the residual part carries a diagonal with its own subgroup.
 * This class is closed under the constructions used throughout the library:
 * equivalence relations, pair groupoids, products with Z, restrictions to
 * invariant subsets and wide subgroupoids.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdyn/arrowset.hpp"
#include "gdyn/refine.hpp"
#include "gdyn/symset.hpp"

namespace gdyn {

/// One equivalence block together with the subgroup of Z attached to it.
struct Block {
    SymSet set;     ///< nonempty subset of the carrier
    GrpSet zpart;   ///< subgroup dZ (d >= 0) attached to the block
};

class BlockGroupoid {
public:
    Space base;
    std::vector<Block> blocks;
    GrpSet residual_zpart = GrpSet::singleton(0); ///< subgroup on the diagonal part
    bool has_z = false;  ///< true when arrows carry a meaningful Z coordinate

    BlockGroupoid() : base(Space::real_line()) {}
    explicit BlockGroupoid(Space b) : base(std::move(b)) {}

    /// Equivalence relation whose classes are the given blocks (plus the
    /// diagonal on the rest of the carrier).
    static BlockGroupoid equivalence(Space b, std::vector<SymSet> cls) {
        BlockGroupoid g(std::move(b));
        for (auto& c : cls) {
            if (c.empty()) continue;
            g.blocks.push_back(Block{std::move(c), GrpSet::singleton(0)});
        }
        g.validate();
        return g;
    }

    /// Pair groupoid: everything is one block.
    static BlockGroupoid pair_groupoid(Space b) {
        std::vector<SymSet> one{b.carrier};
        return equivalence(std::move(b), std::move(one));
    }

    /// Trivial (unit) groupoid: only identity arrows.
    static BlockGroupoid trivial(Space b) {
        BlockGroupoid g(std::move(b));
        g.validate();
        return g;
    }

    /// The group Z viewed as a groupoid over a single unit.
    static BlockGroupoid z_group(const SymPoint& unit) {
        Space b = unit.is_real() ? Space::real_subspace(RealSet::from_cells({point_cell(unit.real())}))
                                 : Space::z_subspace(GrpSet::singleton(unit.integer()));
        BlockGroupoid g(std::move(b));
        g.blocks.push_back(Block{g.base.carrier, GrpSet::all()});
        g.has_z = true;
        g.residual_zpart = GrpSet::all();
        g.validate();
        return g;
    }

    /// Direct product with the group Z: every arrow acquires a free integer
    /// coordinate.
    BlockGroupoid product_with_z() const {
        BlockGroupoid g = *this;
        g.has_z = true;
        for (auto& bl : g.blocks) bl.zpart = GrpSet::all();
        g.residual_zpart = GrpSet::all();
        g.validate();
        return g;
    }

    /// Restriction (reduction) to a subset A of the carrier: keeps the arrows
    /// with both ends in A.  This is again a block groupoid.
    BlockGroupoid restrict_to(const SymSet& a) const {
        BlockGroupoid g(Space{base.kind, base.carrier.intersect(a)});
        g.has_z = has_z;
        g.residual_zpart = residual_zpart;
        for (const auto& bl : blocks) {
            SymSet cut = bl.set.intersect(a);
            if (cut.empty()) continue;
            g.blocks.push_back(Block{std::move(cut), bl.zpart});
        }
        g.validate();
        return g;
    }

    /// Wide subgroupoid: same unit space, a sub-family of arrows.  The caller
    /// provides the new blocks and residual subgroup; containment in the
    /// present groupoid and closure under composition are checked.
    BlockGroupoid wide_subgroupoid(std::vector<Block> nb, GrpSet new_residual) const {
        BlockGroupoid g(base);
        g.has_z = has_z;
        g.blocks = std::move(nb);
        g.residual_zpart = std::move(new_residual);
        g.validate();
        if (!g.arrows().subset_of(arrows(), base))
            throw std::invalid_argument("wide_subgroupoid: arrows not contained in parent");
        return g;
    }

    /// Structural sanity checks: blocks are nonempty, pairwise disjoint
    /// subsets of the carrier, and all Z parts are subgroups containing 0.
    void validate() const {
        for (size_t i = 0; i < blocks.size(); ++i) {
            if (blocks[i].set.empty())
                throw std::invalid_argument("block_groupoid: empty block");
            if (!blocks[i].set.subset_of(base.carrier))
                throw std::invalid_argument("block_groupoid: block outside carrier");
            if (!blocks[i].zpart.is_subgroup())
                throw std::invalid_argument("block_groupoid: block zpart not a subgroup");
            for (size_t j = i + 1; j < blocks.size(); ++j)
                if (blocks[i].set.meets(blocks[j].set))
                    throw std::invalid_argument("block_groupoid: overlapping blocks");
        }
        if (!residual_zpart.is_subgroup())
            throw std::invalid_argument("block_groupoid: residual zpart not a subgroup");
        if (!has_z) {
            auto z0 = GrpSet::singleton(0);
            if (residual_zpart != z0)
                throw std::invalid_argument("block_groupoid: z coordinate present but has_z false");
            for (const auto& bl : blocks)
                if (bl.zpart != z0)
                    throw std::invalid_argument("block_groupoid: z coordinate present but has_z false");
        }
    }

    /// Part of the carrier not covered by any block (diagonal-only units).
    SymSet residual() const {
        SymSet r = base.carrier;
        for (const auto& bl : blocks) r = r.subtract(bl.set);
        return r;
    }

    /// The full arrow set.
    ArrowSet arrows() const {
        std::vector<ArrowAtom> atoms;
        for (const auto& bl : blocks)
            atoms.push_back(ArrowAtom{false, bl.set, bl.set, bl.zpart});
        SymSet res = residual();
        if (!res.empty())
            atoms.push_back(ArrowAtom{true, res, res, residual_zpart});
        return ArrowSet(std::move(atoms));
    }

    /// Index of the block containing p, if any.
    std::optional<size_t> block_of(const SymPoint& p) const {
        for (size_t i = 0; i < blocks.size(); ++i)
            if (blocks[i].set.contains(p)) return i;
        return std::nullopt;
    }

    /// Orbit of a point under the canonical action on the unit space.
    SymSet orbit(const SymPoint& p) const {
        if (auto i = block_of(p)) return blocks[*i].set;
        return SymSet::make_singleton(base.kind, p);
    }

    /// Stabilizer arrows of a point (for the canonical action).
    ArrowSet stabilizer(const SymPoint& p) const {
        SymSet s = SymSet::make_singleton(base.kind, p);
        if (auto i = block_of(p))
            return ArrowSet::rect(s, s, blocks[*i].zpart);
        return ArrowSet::rect(s, s, residual_zpart);
    }

    /// Arrows with source in m (the d-fibre over m).
    ArrowSet d_fiber_set(const SymSet& m) const {
        std::vector<ArrowAtom> atoms;
        for (const auto& bl : blocks) {
            SymSet cut = bl.set.intersect(m);
            if (!cut.empty())
                atoms.push_back(ArrowAtom{false, bl.set, std::move(cut), bl.zpart});
        }
        SymSet res = residual().intersect(m);
        if (!res.empty())
            atoms.push_back(ArrowAtom{true, res, res, residual_zpart});
        return ArrowSet(std::move(atoms));
    }

    /// Recurrence set of the canonical action: the arrows sending a point of
    /// m into n, i.e. { xi : d(xi) in m, r(xi) in n }.
    ArrowSet recurrence_set(const SymSet& m, const SymSet& n) const {
        std::vector<ArrowAtom> atoms;
        for (const auto& bl : blocks) {
            SymSet dm = bl.set.intersect(m);
            SymSet rn = bl.set.intersect(n);
            if (!dm.empty() && !rn.empty())
                atoms.push_back(ArrowAtom{false, std::move(rn), std::move(dm), bl.zpart});
        }
        SymSet res = residual().intersect(m).intersect(n);
        if (!res.empty())
            atoms.push_back(ArrowAtom{true, res, res, residual_zpart});
        return ArrowSet(std::move(atoms));
    }

    /// Saturation: union of the orbits of all points of m.
    SymSet saturate(const SymSet& m) const {
        SymSet out = m.intersect(base.carrier);
        for (const auto& bl : blocks)
            if (bl.set.meets(out)) out = out.unite(bl.set);
        return out;
    }

    /// Smallest invariant closed set containing m: alternate saturation and
    /// relative closure until stable.  The iteration count is bounded because
    /// each round either absorbs a new block or stabilizes.
    SymSet invariant_closure(const SymSet& m) const {
        SymSet cur = m.intersect(base.carrier);
        size_t cap = blocks.size() + 8;
        for (size_t k = 0; k < cap; ++k) {
            SymSet next = saturate(cur).closure_in(base.carrier);
            next = saturate(next);
            if (next == cur) return cur;
            cur = std::move(next);
        }
        throw std::runtime_error("invariant_closure: did not stabilize");
    }

    /// Whether a set is invariant (a union of orbits).
    bool is_invariant(const SymSet& m) const {
        return saturate(m) == m.intersect(base.carrier);
    }

    /// Strong non-compactness: every d-fibre is non-compact.
    bool is_strongly_noncompact() const {
        for (const auto& bl : blocks)
            if (bl.set.is_compact() && bl.zpart.is_finite()) return false;
        SymSet res = residual();
        if (!res.empty() && residual_zpart.is_finite()) return false;
        return true;
    }

    /// Relative compactness of an arrow subset inside this groupoid: bounded
    /// and with (ambient) closure contained in the arrow set.  May throw
    /// UnrepresentableArrowSet for exotic cuts; callers report Unknown then.
    bool is_relatively_compact(const ArrowSet& a) const {
        if (!a.bounded()) return false;
        // The subset test runs in the ambient line so that closure points
        // falling outside the carrier are detected as escapes.
        Space amb = base.kind == SpaceKind::RealLine ? Space::real_line()
                                                     : Space::z_line();
        return a.closure().subset_of(arrows(), amb);
    }

    /**
     * @brief Openness of the groupoid as a subset of carrier x carrier x Z.
     *
     * The arrow set is open iff every block is open in the carrier and, when
     * the residual diagonal touches the closure of a block, that contact
     * cannot be separated.  For our representation the precise criterion is:
     * each block is relatively open, and no residual point lies in the
     * closure of a block (a diagonal through such a point has rectangle
     * neighbourhoods leaking outside the diagonal).  Conversely diagonal
     * atoms over relatively open residual pieces are fine only when the
     * residual is itself open and isolated from the blocks.
     */
    struct OpennessReport {
        bool open = true;
        std::string reason;      ///< human-readable witness when not open
    };

    OpennessReport openness() const {
        OpennessReport rep;
        for (const auto& bl : blocks) {
            if (!bl.set.is_open_in(base.carrier)) {
                rep.open = false;
                rep.reason = "block " + bl.set.str() + " is not open in the carrier";
                return rep;
            }
        }
        SymSet res = residual();
        if (!res.empty()) {
            // A diagonal point has no rectangle neighbourhood inside the
            // diagonal unless it is isolated in the carrier; the residual part
            // is open in the product only where the carrier is discrete.
            if (base.kind == SpaceKind::RealLine) {
                bool all_isolated = true;
                for (const auto& c : res.real().cells())
                    if (!c.is_singleton()) { all_isolated = false; break; }
                if (all_isolated) {
                    for (const auto& c : res.real().cells()) {
                        RealSet pt = RealSet::from_cells({c});
                        RealSet rest = base.carrier.real().subtract(pt);
                        if (rest.closure().intersect(pt) == pt) { all_isolated = false; break; }
                    }
                }
                if (!all_isolated) {
                    rep.open = false;
                    rep.reason = "diagonal part over " + res.str() +
                                 " has no open rectangle neighbourhood";
                    return rep;
                }
            }
        }
        return rep;
    }

    /**
     * @brief A canonical family of relatively open subsets of the carrier.
     *
     * The family is fine enough to witness all the open-set quantifiers used
     * by the dynamical deciders: intervals delimited by the structural
     * endpoints (block and carrier endpoints), strict rational sub-intervals
     * of every gap, and small germ intervals around each endpoint.  On the
     * integer line it consists of the singletons and tails of the refinement.
     */
    std::vector<SymSet> canonical_opens(const std::vector<SymSet>& extra = {}) const {
        std::vector<SymSet> out;
        auto push = [&](SymSet s) {
            s = s.interior_in(base.carrier);
            if (s.empty()) return;
            for (const auto& o : out)
                if (o == s) return;
            out.push_back(std::move(s));
        };
        if (base.kind == SpaceKind::ZLine) {
            std::vector<SymSet> gens{base.carrier};
            for (const auto& bl : blocks) gens.push_back(bl.set);
            for (const auto& e : extra) gens.push_back(e);
            for (const auto& pc : refine(base, gens)) push(pc.set);
            push(base.carrier);
            return out;
        }
        std::vector<Cell> all;
        auto add_cells = [&](const SymSet& s) {
            for (const auto& c : s.real().cells()) all.push_back(c);
        };
        add_cells(base.carrier);
        for (const auto& bl : blocks) add_cells(bl.set);
        for (const auto& e : extra) add_cells(e);
        std::vector<Point> eps = RealSet::collect_endpoints(all);
        std::vector<ExtPoint> bounds;
        bounds.push_back(ExtPoint::neg_inf());
        for (const auto& e : eps) bounds.push_back(ExtPoint(e));
        bounds.push_back(ExtPoint::pos_inf());
        auto interval = [&](const ExtPoint& a, const ExtPoint& b) -> RealSet {
            if (!(a < b)) return RealSet();
            Cell c;
            c.lo = a; c.hi = b; c.lo_closed = false; c.hi_closed = false;
            c.flavor = Flavor::Full;
            return RealSet::from_cells({c});
        };
        // Intervals between any two structural bounds.
        for (size_t i = 0; i < bounds.size(); ++i)
            for (size_t j = i + 1; j < bounds.size(); ++j)
                push(SymSet(interval(bounds[i], bounds[j])));
        // Strict rational sub-intervals of each gap, and germs at endpoints.
        for (size_t i = 0; i + 1 < bounds.size(); ++i) {
            const ExtPoint& a = bounds[i];
            const ExtPoint& b = bounds[i + 1];
            if (!(a < b)) continue;
            Point q1 = rational_between(a, b);
            Point q2 = rational_between(ExtPoint(q1), b);
            push(SymSet(interval(ExtPoint(q1), ExtPoint(q2))));
            push(SymSet(interval(a, ExtPoint(q1))));
            push(SymSet(interval(ExtPoint(q1), b)));
        }
        // Germ intervals straddling each finite endpoint.
        for (size_t i = 1; i + 1 < bounds.size(); ++i) {
            Point ql = rational_between(bounds[i - 1], bounds[i]);
            Point qr = rational_between(bounds[i], bounds[i + 1]);
            push(SymSet(interval(ExtPoint(ql), ExtPoint(qr))));
        }
        push(base.carrier);
        return out;
    }

    std::string str() const {
        std::string s = "groupoid over " + base.carrier.str();
        for (const auto& bl : blocks) {
            s += "; block " + bl.set.str();
            if (has_z) s += " x " + bl.zpart.to_string();
        }
        SymSet res = residual();
        if (!res.empty()) {
            s += "; diag " + res.str();
            if (has_z) s += " x " + residual_zpart.to_string();
        }
        return s;
    }
};

} // namespace gdyn
