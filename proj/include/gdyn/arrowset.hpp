/** @file arrowset.hpp
 *  @brief Finite unions of rectangular / diagonal arrow blocks over Z-fibres.
 *
 *  An ArrowSet denotes a subset of X x X x Z (arrows (x, y, n) with range
 *  x and source y; the Z coordinate is absent semantically when the
 *  groupoid has trivial group factor, encoded as fibre {0}).  It is a
 *  finite union of atoms
 *
 *      Rect(A, B) x S  =  {(x, y, n) : x in A, y in B, n in S}
 *      Diag(A)    x S  =  {(x, x, n) : x in A,         n in S}
 *
 *  with A, B carrier sets and S a GrpSet.  This class is closed under
 *  union, intersection, composition and inversion; subtraction stays in
 *  the class unless it would cut a diagonal out of a genuine rectangle,
 *  in which case UnrepresentableArrowSet is raised (the callers translate
 *  this into an Unknown verdict).  Equality is decided by refining both
 *  operands over a common piece grid.
 */

#ifndef GDYN_ARROWSET_HPP_
#define GDYN_ARROWSET_HPP_

#include <map>
#include <vector>

#include "gdyn/refine.hpp"
#include "gdyn/symset.hpp"

namespace gdyn {

struct ArrowAtom {
  bool diag = false;
  SymSet r;       ///< range-side set (for Diag: the diagonal set)
  SymSet d;       ///< source-side set (ignored for Diag)
  GrpSet z;

  bool empty() const {
    return z.empty() || r.empty() || (!diag && d.empty());
  }
};

class ArrowSet {
 public:
  ArrowSet() = default;
  explicit ArrowSet(std::vector<ArrowAtom> atoms) {
    for (ArrowAtom& a : atoms)
      if (!a.empty()) atoms_.push_back(std::move(a));
  }

  static ArrowSet rect(SymSet a, SymSet b, GrpSet z) {
    return ArrowSet({ArrowAtom{false, std::move(a), std::move(b),
                               std::move(z)}});
  }
  static ArrowSet diag(SymSet a, GrpSet z) {
    SymSet b = a;
    return ArrowSet({ArrowAtom{true, std::move(a), std::move(b), std::move(z)}});
  }

  const std::vector<ArrowAtom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }

  bool contains(const SymPoint& x, const SymPoint& y, GrpSet::Int n) const {
    for (const ArrowAtom& a : atoms_) {
      if (!a.z.contains(n)) continue;
      if (a.diag) {
        if (x == y && a.r.contains(x)) return true;
      } else if (a.r.contains(x) && a.d.contains(y)) {
        return true;
      }
    }
    return false;
  }

  ArrowSet unite(const ArrowSet& o) const {
    std::vector<ArrowAtom> v = atoms_;
    v.insert(v.end(), o.atoms_.begin(), o.atoms_.end());
    return ArrowSet(std::move(v));
  }

  /// Pointwise composition {xi . eta : composable pairs}.
  ArrowSet compose(const ArrowSet& o) const {
    std::vector<ArrowAtom> v;
    for (const ArrowAtom& a : atoms_) {
      for (const ArrowAtom& b : o.atoms_) {
        GrpSet z = a.z.sum(b.z);
        if (a.diag && b.diag) {
          SymSet m = a.r.intersect(b.r);
          v.push_back(ArrowAtom{true, m, m, z});
        } else if (a.diag) {
          // (x,x,n)(x,y,m): x must lie in b's range side
          SymSet m = a.r.intersect(b.r);
          v.push_back(ArrowAtom{false, m, b.d, z});
        } else if (b.diag) {
          // (x,y,n)(y,y,m): source stays y, so the product is
          // Rect(a.r, a.d n b.r) with summed fibre.
          SymSet m = a.d.intersect(b.r);
          v.push_back(ArrowAtom{false, a.r, m, z});
        } else if (a.d.meets(b.r)) {
          v.push_back(ArrowAtom{false, a.r, b.d, z});
        }
      }
    }
    return ArrowSet(std::move(v));
  }

  ArrowSet invert() const {
    std::vector<ArrowAtom> v;
    for (const ArrowAtom& a : atoms_) {
      if (a.diag)
        v.push_back(ArrowAtom{true, a.r, a.r, a.z.negate()});
      else
        v.push_back(ArrowAtom{false, a.d, a.r, a.z.negate()});
    }
    return ArrowSet(std::move(v));
  }

  ArrowSet closure() const {
    std::vector<ArrowAtom> v;
    for (const ArrowAtom& a : atoms_)
      v.push_back(ArrowAtom{a.diag, a.r.closure(), a.d.closure(), a.z});
    return ArrowSet(std::move(v));
  }

  /// Everything bounded: pair parts bounded, Z-fibres finite.
  bool bounded() const {
    for (const ArrowAtom& a : atoms_)
      if (!a.r.bounded() || !a.d.bounded() || !a.z.is_finite()) return false;
    return true;
  }

  // ---- grid form: canonical refinement over pieces ----

  struct Grid {
    std::vector<Piece> pieces;
    std::map<std::pair<size_t, size_t>, GrpSet> rects;  // full rectangles
    std::map<size_t, GrpSet> extra_diag;  // diagonal beyond rects (non-singleton
                                          // pieces) or all diagonal (singletons)

    /// Z-fibre of the full diagonal over piece i.
    GrpSet total_diag(size_t i) const {
      GrpSet z;
      auto it = rects.find({i, i});
      if (it != rects.end()) z = it->second;
      auto ed = extra_diag.find(i);
      if (ed != extra_diag.end()) z = z.unite(ed->second);
      return z;
    }
  };

  /// Pieces generated by all first/second coordinate sets of both operands.
  static std::vector<Piece> common_pieces(const Space& sp, const ArrowSet& a,
                                          const ArrowSet& b) {
    std::vector<SymSet> gens;
    for (const ArrowSet* s : {&a, &b})
      for (const ArrowAtom& at : s->atoms_) {
        gens.push_back(at.r);
        if (!at.diag) gens.push_back(at.d);
      }
    return refine(sp, gens);
  }

  Grid to_grid(const std::vector<Piece>& pieces) const {
    Grid g;
    g.pieces = pieces;
    for (size_t i = 0; i < pieces.size(); ++i) {
      for (size_t j = 0; j < pieces.size(); ++j) {
        GrpSet z;
        for (const ArrowAtom& a : atoms_)
          if (!a.diag && pieces[i].set.subset_of(a.r) &&
              pieces[j].set.subset_of(a.d))
            z = z.unite(a.z);
        if (!z.empty()) g.rects[{i, j}] = z;
      }
      GrpSet dz;
      for (const ArrowAtom& a : atoms_)
        if (a.diag && pieces[i].set.subset_of(a.r)) dz = dz.unite(a.z);
      auto it = g.rects.find({i, i});
      GrpSet rz = it == g.rects.end() ? GrpSet() : it->second;
      if (pieces[i].singleton) {
        // A singleton rectangle IS its diagonal: merge for canonicity.
        GrpSet total = dz.unite(rz);
        g.rects.erase({i, i});
        if (!total.empty()) g.extra_diag[i] = total;
      } else {
        GrpSet extra = dz.subtract(rz);
        if (!extra.empty()) g.extra_diag[i] = extra;
      }
    }
    return g;
  }

  static ArrowSet from_grid(const Grid& g) {
    std::vector<ArrowAtom> v;
    for (const auto& [ij, z] : g.rects)
      v.push_back(ArrowAtom{false, g.pieces[ij.first].set,
                            g.pieces[ij.second].set, z});
    for (const auto& [i, z] : g.extra_diag)
      v.push_back(ArrowAtom{true, g.pieces[i].set, g.pieces[i].set, z});
    return ArrowSet(std::move(v));
  }

  bool equals(const ArrowSet& o, const Space& sp) const {
    std::vector<Piece> p = common_pieces(sp, *this, o);
    Grid ga = to_grid(p), gb = o.to_grid(p);
    return ga.rects == gb.rects && ga.extra_diag == gb.extra_diag;
  }

  ArrowSet intersect(const ArrowSet& o, const Space& sp) const {
    std::vector<Piece> p = common_pieces(sp, *this, o);
    Grid ga = to_grid(p), gb = o.to_grid(p);
    Grid g;
    g.pieces = p;
    for (const auto& [ij, z] : ga.rects) {
      auto it = gb.rects.find(ij);
      if (it == gb.rects.end()) continue;
      GrpSet m = z.intersect(it->second);
      if (!m.empty()) g.rects[ij] = m;
    }
    for (size_t i = 0; i < p.size(); ++i) {
      GrpSet ta = ga.total_diag(i), tb = gb.total_diag(i);
      GrpSet td = ta.intersect(tb);
      auto it = g.rects.find({i, i});
      GrpSet rz = it == g.rects.end() ? GrpSet() : it->second;
      GrpSet extra = td.subtract(rz);
      if (!extra.empty()) g.extra_diag[i] = extra;
    }
    return from_grid(g);
  }

  /// Set difference; raises UnrepresentableArrowSet if the result would be
  /// a rectangle with a diagonal strip removed.
  ArrowSet subtract(const ArrowSet& o, const Space& sp) const {
    std::vector<Piece> p = common_pieces(sp, *this, o);
    Grid ga = to_grid(p), gb = o.to_grid(p);
    Grid g;
    g.pieces = p;
    for (const auto& [ij, z] : ga.rects) {
      auto it = gb.rects.find(ij);
      GrpSet m = it == gb.rects.end() ? z : z.subtract(it->second);
      auto ed = gb.extra_diag.find(ij.first);
      if (ij.first == ij.second && ed != gb.extra_diag.end() &&
          !m.intersect(ed->second).empty())
        throw UnrepresentableArrowSet(
            "subtraction cuts a diagonal out of a rectangle");
      if (!m.empty()) g.rects[ij] = m;
    }
    for (size_t i = 0; i < p.size(); ++i) {
      GrpSet td = ga.total_diag(i).subtract(gb.total_diag(i));
      auto it = g.rects.find({i, i});
      GrpSet rz = it == g.rects.end() ? GrpSet() : it->second;
      GrpSet extra = td.subtract(rz);
      if (!extra.empty()) g.extra_diag[i] = extra;
    }
    return from_grid(g);
  }

  bool subset_of(const ArrowSet& o, const Space& sp) const {
    return subtract(o, sp).empty();
  }

  /// Source-side and range-side projections.
  SymSet source_proj() const {
    SymSet s = atoms_.empty() ? SymSet(RealSet()) : empty_like(atoms_[0].r);
    for (const ArrowAtom& a : atoms_) s = s.unite(a.diag ? a.r : a.d);
    return s;
  }
  SymSet range_proj() const {
    SymSet s = atoms_.empty() ? SymSet(RealSet()) : empty_like(atoms_[0].r);
    for (const ArrowAtom& a : atoms_) s = s.unite(a.r);
    return s;
  }
  /// Union of all Z-fibres.
  GrpSet z_proj() const {
    GrpSet z;
    for (const ArrowAtom& a : atoms_) z = z.unite(a.z);
    return z;
  }

  std::string str() const {
    if (atoms_.empty()) return "{}";
    std::string s;
    for (const ArrowAtom& a : atoms_) {
      if (!s.empty()) s += " u ";
      if (a.diag)
        s += "Diag(" + a.r.str() + ")";
      else
        s += "Rect(" + a.r.str() + " x " + a.d.str() + ")";
      s += "*" + a.z.to_string();
    }
    return s;
  }

 private:
  static SymSet empty_like(const SymSet& s) {
    return s.kind() == SpaceKind::RealLine ? SymSet(RealSet())
                                           : SymSet(GrpSet());
  }

  std::vector<ArrowAtom> atoms_;
};

}  // namespace gdyn

#endif  // GDYN_ARROWSET_HPP_
