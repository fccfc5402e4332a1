/** @file realset.hpp
 *  @brief Exact set algebra for flavored cell subsets of the real line.
 *
 *  A RealSet is a finite union of "cells": intervals over Q(sqrt 2) with
 *  open/closed ends and a flavor restricting the interval to all of its
 *  points (Full), its rational points only (RatOnly) or its irrational
 *  points only (IrrOnly).  The class is closed under the Boolean
 *  operations and under closure/interior, every set has a unique normal
 *  form (so operator== is semantic equality), and emptiness, density,
 *  compactness and point membership are decidable.
 *
 *  All operations work by refining the participating sets over their
 *  combined endpoint set into "atoms" (singleton endpoints and the open
 *  intervals between consecutive endpoints, each split into a rational
 *  and an irrational layer), evaluating pointwise on atoms, and
 *  re-merging maximal runs.  Flavored layers are dense in their span, so
 *  every topological question we ask is constant on atoms.
 */

#ifndef GDYN_REALSET_HPP_
#define GDYN_REALSET_HPP_

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdyn/point.hpp"

namespace gdyn {

enum class Flavor { Full, RatOnly, IrrOnly };

inline std::string flavor_str(Flavor f) {
  switch (f) {
    case Flavor::Full: return "full";
    case Flavor::RatOnly: return "rat";
    case Flavor::IrrOnly: return "irr";
  }
  return "?";
}
inline Flavor flavor_parse(const std::string& s) {
  if (s == "full") return Flavor::Full;
  if (s == "rat") return Flavor::RatOnly;
  if (s == "irr") return Flavor::IrrOnly;
  throw std::invalid_argument("bad flavor: " + s);
}

/// Whether a flavor admits a concrete point.
inline bool flavor_admits(Flavor f, const Point& p) {
  if (f == Flavor::Full) return true;
  return (f == Flavor::RatOnly) == p.is_rational();
}

struct Cell {
  ExtPoint lo, hi;
  bool lo_closed = false, hi_closed = false;
  Flavor flavor = Flavor::Full;

  bool operator==(const Cell& o) const = default;

  bool is_singleton() const {
    return lo.finite() && hi.finite() && lo == hi;
  }
  bool contains(const Point& p) const {
    if (!flavor_admits(flavor, p)) return false;
    ExtPoint e(p);
    if (e < lo || (e == lo && !lo_closed)) return false;
    if (e > hi || (e == hi && !hi_closed)) return false;
    return true;
  }
  std::string str() const {
    if (is_singleton()) return "{" + lo.str() + "}";
    std::string s = (lo_closed ? "[" : "(") + lo.str() + "," + hi.str() +
                    (hi_closed ? "]" : ")");
    if (flavor != Flavor::Full) s += "_" + flavor_str(flavor);
    return s;
  }
};

/// Convenience cell constructors.
inline Cell cell(ExtPoint lo, ExtPoint hi, bool lc, bool hc,
                 Flavor f = Flavor::Full) {
  return Cell{lo, hi, lc, hc, f};
}
inline Cell open_cell(ExtPoint lo, ExtPoint hi, Flavor f = Flavor::Full) {
  return Cell{lo, hi, false, false, f};
}
inline Cell closed_cell(Point lo, Point hi, Flavor f = Flavor::Full) {
  return Cell{ExtPoint(lo), ExtPoint(hi), true, true, f};
}
inline Cell point_cell(Point p) {
  return Cell{ExtPoint(p), ExtPoint(p), true, true, Flavor::Full};
}

class RealSet {
 public:
  /// An atom-level valuation: rational layer / irrational layer of each
  /// open interval between endpoints, plus each endpoint singleton.
  struct Valuation {
    std::vector<Point> endpoints;        // sorted, distinct
    std::vector<bool> point_in;          // size n
    std::vector<bool> rat_in, irr_in;    // size n+1 (gaps, incl. unbounded)
  };

  RealSet() = default;

  static RealSet empty_set() { return RealSet(); }
  static RealSet whole_line() {
    return from_cells({open_cell(ExtPoint::neg_inf(), ExtPoint::pos_inf())});
  }
  static RealSet single(const Point& p) { return from_cells({point_cell(p)}); }

  static RealSet from_cells(const std::vector<Cell>& cells) {
    std::vector<Point> e = collect_endpoints(cells);
    Valuation v = evaluate(cells, e);
    RealSet s;
    s.cells_ = rebuild(v);
    return s;
  }

  const std::vector<Cell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }
  bool operator==(const RealSet& o) const { return cells_ == o.cells_; }
  bool operator!=(const RealSet& o) const { return !(*this == o); }
  bool operator<(const RealSet& o) const {  // arbitrary total order
    auto key = [](const Cell& c) {
      return std::tuple(c.lo, c.hi, c.lo_closed, c.hi_closed, (int)c.flavor);
    };
    return std::lexicographical_compare(
        cells_.begin(), cells_.end(), o.cells_.begin(), o.cells_.end(),
        [&](const Cell& a, const Cell& b) { return key(a) < key(b); });
  }

  bool contains(const Point& p) const {
    for (const Cell& c : cells_)
      if (c.contains(p)) return true;
    return false;
  }

  RealSet unite(const RealSet& o) const {
    return combine(o, [](bool a, bool b) { return a || b; });
  }
  RealSet intersect(const RealSet& o) const {
    return combine(o, [](bool a, bool b) { return a && b; });
  }
  RealSet subtract(const RealSet& o) const {
    return combine(o, [](bool a, bool b) { return a && !b; });
  }
  RealSet complement() const { return whole_line().subtract(*this); }
  bool subset_of(const RealSet& o) const { return subtract(o).empty(); }
  bool meets(const RealSet& o) const { return !intersect(o).empty(); }

  /// Closure in R.  A flavored layer is dense in its span, so any cell
  /// with nonempty interior span closes to the full closed interval.
  RealSet closure() const {
    std::vector<Cell> out;
    for (Cell c : cells_) {
      if (!c.is_singleton()) {
        c.flavor = Flavor::Full;
        if (c.lo.finite()) c.lo_closed = true;
        if (c.hi.finite()) c.hi_closed = true;
      }
      out.push_back(c);
    }
    return from_cells(out);
  }

  /// Interior in R.
  RealSet interior() const { return complement().closure().complement(); }

  /// Relative (subspace) notions with respect to a carrier set.
  RealSet closure_in(const RealSet& carrier) const {
    return closure().intersect(carrier);
  }
  RealSet interior_in(const RealSet& carrier) const {
    return carrier.subtract(carrier.subtract(*this).closure());
  }
  bool is_open_in(const RealSet& carrier) const {
    return *this == interior_in(carrier);
  }
  bool is_closed_in(const RealSet& carrier) const {
    return *this == closure_in(carrier);
  }
  bool is_dense_in(const RealSet& carrier) const {
    return closure_in(carrier) == carrier;
  }
  bool is_nowhere_dense_in(const RealSet& carrier) const {
    return closure_in(carrier).interior_in(carrier).empty();
  }

  bool bounded() const {
    return cells_.empty() ||
           (cells_.front().lo.finite() && cells_.back().hi.finite());
  }

  /// Compact as a subspace of R: closed in R and bounded.  (Flavored
  /// layers are never closed, so they are excluded automatically.)
  bool is_compact() const { return bounded() && *this == closure(); }

  /// Boundary relative to a carrier.
  RealSet boundary_in(const RealSet& carrier) const {
    return closure_in(carrier).subtract(interior_in(carrier));
  }

  /// All finite endpoints occurring in the normal form, sorted.
  std::vector<Point> endpoints() const { return collect_endpoints(cells_); }

  std::string str() const {
    if (cells_.empty()) return "{}";
    std::string s;
    for (const Cell& c : cells_) s += (s.empty() ? "" : " u ") + c.str();
    return s;
  }

  // ---- atomization machinery (shared with the decision procedures) ----

  static std::vector<Point> collect_endpoints(const std::vector<Cell>& cells) {
    std::vector<Point> e;
    for (const Cell& c : cells) {
      if (c.lo.finite()) e.push_back(c.lo.value());
      if (c.hi.finite()) e.push_back(c.hi.value());
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
  }

  /// Evaluate coverage of every atom over the given endpoint set (which
  /// must contain all endpoints of `cells`).
  static Valuation evaluate(const std::vector<Cell>& cells,
                            const std::vector<Point>& endpoints) {
    size_t n = endpoints.size();
    Valuation v;
    v.endpoints = endpoints;
    v.point_in.assign(n, false);
    v.rat_in.assign(n + 1, false);
    v.irr_in.assign(n + 1, false);
    auto gap_lo = [&](size_t g) {
      return g == 0 ? ExtPoint::neg_inf() : ExtPoint(endpoints[g - 1]);
    };
    auto gap_hi = [&](size_t g) {
      return g == n ? ExtPoint::pos_inf() : ExtPoint(endpoints[g]);
    };
    for (const Cell& c : cells) {
      for (size_t i = 0; i < n; ++i)
        if (c.contains(endpoints[i])) v.point_in[i] = true;
      for (size_t g = 0; g <= n; ++g) {
        // The open gap (gap_lo, gap_hi) is covered iff it sits inside the
        // span of c (refinement guarantees all-or-nothing).
        if (c.lo <= gap_lo(g) && gap_hi(g) <= c.hi &&
            !(c.is_singleton())) {
          if (c.flavor != Flavor::IrrOnly) v.rat_in[g] = true;
          if (c.flavor != Flavor::RatOnly) v.irr_in[g] = true;
        }
      }
    }
    return v;
  }

  /// Re-merge an atom valuation into the canonical minimal cell list.
  /// A run of covered atoms is merged through an endpoint exactly when
  /// both adjacent gaps carry the same flavor and the endpoint's own
  /// membership matches what that flavor admits there; otherwise the run
  /// closes (attaching the endpoint to its left when possible, which
  /// makes the output deterministic, hence canonical).
  static std::vector<Cell> rebuild(const Valuation& v) {
    size_t n = v.endpoints.size();
    std::vector<Cell> out;
    std::optional<Cell> cur;  // invariant: live only while inside a run
    auto gap_flavor = [&](size_t g) -> std::optional<Flavor> {
      if (v.rat_in[g] && v.irr_in[g]) return Flavor::Full;
      if (v.rat_in[g]) return Flavor::RatOnly;
      if (v.irr_in[g]) return Flavor::IrrOnly;
      return std::nullopt;
    };
    for (size_t g = 0; g <= n; ++g) {
      std::optional<Flavor> f = gap_flavor(g);
      ExtPoint lo = g == 0 ? ExtPoint::neg_inf() : ExtPoint(v.endpoints[g - 1]);
      ExtPoint hi = g == n ? ExtPoint::pos_inf() : ExtPoint(v.endpoints[g]);
      if (f) {
        if (!cur) cur = open_cell(lo, hi, *f);
        cur->hi = hi;
        cur->hi_closed = false;
      }
      if (g == n) break;
      const Point& e = v.endpoints[g];
      bool pin = v.point_in[g];
      std::optional<Flavor> fn = gap_flavor(g + 1);
      if (cur && fn && *fn == cur->flavor && pin == flavor_admits(*fn, e))
        continue;  // run continues through e
      if (cur) {
        if (pin && flavor_admits(cur->flavor, e)) {
          cur->hi_closed = true;  // attach e on the left
          pin = false;
        }
        out.push_back(*cur);
        cur.reset();
      }
      if (pin && fn && flavor_admits(*fn, e)) {
        // e opens the next run with a closed left end; its hi is filled in
        // when the next gap is processed.
        cur = cell(ExtPoint(e), ExtPoint(e), true, false, *fn);
      } else if (pin) {
        out.push_back(point_cell(e));
      }
    }
    if (cur) out.push_back(*cur);
    return out;
  }

 private:

  template <class F>
  RealSet combine(const RealSet& o, F op) const {
    std::vector<Point> e = collect_endpoints(cells_);
    std::vector<Point> e2 = collect_endpoints(o.cells_);
    e.insert(e.end(), e2.begin(), e2.end());
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    Valuation va = evaluate(cells_, e), vb = evaluate(o.cells_, e);
    Valuation v;
    v.endpoints = e;
    size_t n = e.size();
    v.point_in.resize(n);
    v.rat_in.resize(n + 1);
    v.irr_in.resize(n + 1);
    for (size_t i = 0; i < n; ++i)
      v.point_in[i] = op(va.point_in[i], vb.point_in[i]);
    for (size_t g = 0; g <= n; ++g) {
      v.rat_in[g] = op(va.rat_in[g], vb.rat_in[g]);
      v.irr_in[g] = op(va.irr_in[g], vb.irr_in[g]);
    }
    RealSet s;
    s.cells_ = rebuild(v);
    return s;
  }

  std::vector<Cell> cells_;
};

}  // namespace gdyn

#endif  // GDYN_REALSET_HPP_
