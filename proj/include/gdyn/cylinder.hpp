/**
 * @file cylinder.hpp
 * @brief A two-layer total space over the line on which the rational-block
 *        groupoid acts topologically transitively, although its canonical
 *        factor on the line is not.
 *
 * The total space is
 *
 *     Sigma = (R x {0})  u  (Q x E),    E = {e_k : k in Z},
 *
 * embedded in the plane, where E is a discrete copy of Z accumulating
 * exactly at 0 in both directions.  The acting groupoid has arrows
 * (x, y, n) with x, y rational or x = y, n an integer (n = 0 on the
 * diagonal part is not required here: every unit keeps isotropy Z); the
 * arrow (x, y, n) maps (y, e_k) to (x, e_{k+n}) and (y, 0) to (x, 0).
 *
 * Subsets are represented in product form  B x {0}  u  Q x E(K)  with B a
 * set of reals, Q a set of rationals and K a set of integer heights; the
 * class contains every orbit and everything the decision procedures below
 * quantify over, and its closure/interior operators are exact.
 */
#pragma once

#include "gdyn/block_groupoid.hpp"
#include "gdyn/dynamics.hpp"

namespace gdyn {

/// A product-form subset of the two-layer space.
struct CylSet {
    RealSet base;    ///< first coordinates on the h = 0 layer
    RealSet fq;      ///< first coordinates of the fiber part (rationals)
    GrpSet heights;  ///< integer height indices of the fiber part

    static RealSet rat_line() {
        return RealSet::from_cells({cell(ExtPoint::neg_inf(), ExtPoint::pos_inf(),
                                         false, false, Flavor::RatOnly)});
    }

    static CylSet whole() {
        return CylSet{RealSet::whole_line(), rat_line(), GrpSet::all()};
    }
    static CylSet base_layer(RealSet b) {
        return CylSet{std::move(b), RealSet(), GrpSet::empty_set()};
    }
    static CylSet fiber_layer() {
        return CylSet{RealSet(), rat_line(), GrpSet::all()};
    }

    CylSet normalized() const {
        CylSet s = *this;
        s.fq = s.fq.intersect(rat_line());
        if (s.fq.empty() || s.heights.empty()) {
            s.fq = RealSet();
            s.heights = GrpSet::empty_set();
        }
        return s;
    }

    bool operator==(const CylSet& o) const {
        CylSet a = normalized(), b = o.normalized();
        return a.base == b.base && a.fq == b.fq && a.heights == b.heights;
    }

    /// Closure in the two-layer space.  At a fixed height the fiber part
    /// closes inside the rationals; the heights accumulate exactly at 0, so
    /// an infinite height set deposits the closure of the fiber shadow onto
    /// the base layer.
    CylSet closure() const {
        CylSet s = normalized();
        CylSet out;
        out.base = s.base.closure();
        if (!s.heights.is_finite()) out.base = out.base.unite(s.fq.closure());
        out.fq = s.fq.closure().intersect(rat_line());
        out.heights = s.heights;
        return out.normalized();
    }

    /// Interior in the two-layer space.  A base point is interior only if a
    /// full two-sided tail of heights lies in the set above a rational
    /// neighborhood; a fiber point only needs room inside its own height.
    CylSet interior() const {
        CylSet s = normalized();
        CylSet out;
        bool cofinite_heights = GrpSet::all().subtract(s.heights).is_finite();
        if (cofinite_heights) {
            RealSet rational_hole = rat_line().subtract(s.fq).closure();
            out.base = s.base.interior_in(RealSet::whole_line())
                           .subtract(rational_hole);
        } else {
            out.base = RealSet();
        }
        out.fq = s.fq.interior_in(rat_line());
        out.heights = s.heights;
        return out.normalized();
    }

    bool empty() const {
        CylSet s = normalized();
        return s.base.empty() && s.fq.empty();
    }
    bool dense() const { return closure() == whole(); }
    bool nowhere_dense() const { return closure().interior().empty(); }
};

/**
 * The two-layer action itself.  The first template of verdicts is exact for
 * the integer group factor; with `real_factor` set, the construction keeps
 * the original continuous group factor and the upstairs verdicts degrade to
 * Unknown (the orbit analysis downstairs is unaffected, since invariant
 * sets of the canonical action do not see the isotropy groups).
 */
class CylinderAction {
  public:
    explicit CylinderAction(bool real_factor = false)
        : real_factor_(real_factor) {}

    bool real_factor() const { return real_factor_; }

    /// The acting groupoid: one block of all rationals carrying the whole
    /// group, and residual units keeping the full isotropy group.
    BlockGroupoid groupoid() const {
        BlockGroupoid g(Space::real_line());
        g.has_z = true;
        g.blocks.push_back(Block{SymSet(CylSet::rat_line()), GrpSet::all()});
        g.residual_zpart = GrpSet::all();
        g.validate();
        return g;
    }

    /// The canonical factor of the action, through the anchor.
    CanonicalAction factor() const { return CanonicalAction(groupoid()); }

    /// Orbits: the whole fiber layer is one orbit, the rational base points
    /// form one orbit, and every irrational base point is fixed.
    CylSet fiber_orbit() const { return CylSet::fiber_layer(); }
    CylSet rational_base_orbit() const {
        return CylSet::base_layer(CylSet::rat_line());
    }

    /**
     * Topological transitivity (every invariant set dense or nowhere
     * dense), decided exactly: an invariant set is a union of orbits; any
     * union containing the fiber orbit contains a dense set, and any union
     * avoiding it lies inside the base layer, so the two computed
     * certificates below cover every case.
     */
    Prop prop_iv() const {
        if (real_factor_)
            return unknown("continuous group factor: upstairs verdicts are "
                           "outside the exact integer arithmetic class");
        if (!(fiber_orbit().closure() == CylSet::whole()))
            return fails("fiber orbit is not dense");
        if (!CylSet::base_layer(RealSet::whole_line()).nowhere_dense())
            return fails("base layer is not nowhere dense");
        return holds("every invariant set either contains the dense fiber "
                     "orbit or lies in the nowhere dense base layer");
    }

    /// A dense orbit exists (the fiber layer), so the action is pointwise
    /// transitive; with the continuous factor the argument is the same but
    /// is reported Unknown for consistency of the exactness contract.
    Prop pointwise_transitive() const {
        if (real_factor_)
            return unknown("continuous group factor: upstairs verdicts are "
                           "outside the exact integer arithmetic class");
        if (fiber_orbit().closure() == CylSet::whole())
            return holds("the fiber orbit is dense");
        return fails("no dense orbit found");
    }

    /// Recurrent transitivity, inherited from topological transitivity.
    Prop prop_iii() const {
        Prop iv = prop_iv();
        if (iv.v == Verdict::Holds)
            return holds("implied by topological transitivity");
        return iv;
    }

  private:
    bool real_factor_;
};

} // namespace gdyn
