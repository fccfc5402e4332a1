/** @file refine.hpp
 *  @brief Canonical refinement of a carrier into atoms with representatives.
 *
 *  Given finitely many generator sets in a space, the carrier splits into
 *  finitely many disjoint "pieces" on which every generator is constant:
 *  on the real line these are the endpoint singletons and the rational /
 *  irrational layers of the open gaps between consecutive endpoints; on
 *  the integer line they are the explicit window points and the residue
 *  classes of the two periodic tails.  Every decision procedure in the
 *  dynamics layer quantifies over these pieces, with an exact
 *  representative point for each piece.
 */

#ifndef GDYN_REFINE_HPP_
#define GDYN_REFINE_HPP_

#include <vector>

#include "gdyn/symset.hpp"

namespace gdyn {

struct Piece {
  SymSet set;     ///< nonempty subset of the carrier
  SymPoint rep;   ///< an exact point of the piece
  bool singleton = false;
};

/// Refine `space.carrier` over the generators (all subsets of the carrier
/// or of the ambient line); generators need not be disjoint.
inline std::vector<Piece> refine(const Space& space,
                                 const std::vector<SymSet>& gens) {
  std::vector<Piece> out;
  if (space.kind == SpaceKind::RealLine) {
    std::vector<Cell> all;
    for (const SymSet& g : gens)
      for (const Cell& c : g.real().cells()) all.push_back(c);
    for (const Cell& c : space.carrier.real().cells()) all.push_back(c);
    std::vector<Point> e = RealSet::collect_endpoints(all);
    auto add = [&](RealSet piece, SymPoint rep, bool single) {
      piece = piece.intersect(space.carrier.real());
      if (piece.empty()) return;
      out.push_back(Piece{SymSet(piece), rep, single});
    };
    size_t n = e.size();
    for (size_t g = 0; g <= n; ++g) {
      ExtPoint lo = g == 0 ? ExtPoint::neg_inf() : ExtPoint(e[g - 1]);
      ExtPoint hi = g == n ? ExtPoint::pos_inf() : ExtPoint(e[g]);
      RealSet rat = RealSet::from_cells({open_cell(lo, hi, Flavor::RatOnly)});
      RealSet irr = RealSet::from_cells({open_cell(lo, hi, Flavor::IrrOnly)});
      add(rat, SymPoint(Point(rational_between(lo, hi))), false);
      add(irr, SymPoint(irrational_between(lo, hi)), false);
      if (g < n) add(RealSet::single(e[g]), SymPoint(e[g]), true);
    }
  } else {
    GrpSet::Int lo = 0, hi = -1, p = 1;
    auto widen = [&](const GrpSet& s) {
      lo = std::min(lo, s.window_lo());
      hi = std::max(hi, s.window_hi());
      p = std::lcm(p, s.period());
    };
    widen(space.carrier.zset());
    for (const SymSet& g : gens) widen(g.zset());
    const GrpSet& carrier = space.carrier.zset();
    for (GrpSet::Int n = lo; n <= hi; ++n)
      if (carrier.contains(n))
        out.push_back(Piece{SymSet(GrpSet::singleton(n)), SymPoint(n), true});
    for (GrpSet::Int r = 0; r < p; ++r) {
      // Left tail residue class {n < lo : n = r mod p} and its right twin.
      GrpSet cls = GrpSet::subgroup(p == 0 ? 1 : p).translate(r);
      GrpSet left = cls.intersect(GrpSet::up_to(lo - 1)).intersect(carrier);
      GrpSet right = cls.intersect(GrpSet::from(hi + 1)).intersect(carrier);
      if (!left.empty())
        out.push_back(Piece{SymSet(left), SymPoint(left.any_element()), false});
      if (!right.empty())
        out.push_back(
            Piece{SymSet(right), SymPoint(right.any_element()), false});
    }
  }
  return out;
}

}  // namespace gdyn

#endif  // GDYN_REFINE_HPP_
