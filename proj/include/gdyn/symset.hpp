/** @file symset.hpp
 *  @brief Carrier spaces of the symbolic world and sets within them.
 *
 *  Two carrier kinds are supported: the real line (subsets are flavored
 *  cell unions, RealSet) and the integer line with the discrete topology
 *  (subsets are eventually periodic sets, GrpSet).  SymSet wraps the two
 *  behind one interface so the groupoid/dynamics layers can be written
 *  once.  A Space is a carrier kind plus the ambient carrier set; all
 *  relative topology is taken in the carrier subspace.
 */

#ifndef GDYN_SYMSET_HPP_
#define GDYN_SYMSET_HPP_

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gdyn/grpset.hpp"
#include "gdyn/realset.hpp"

namespace gdyn {

/// Raised when a construction leaves the representable class.
struct UnrepresentableArrowSet : std::runtime_error {
  explicit UnrepresentableArrowSet(const std::string& what)
      : std::runtime_error(what) {}
};

enum class SpaceKind { RealLine, ZLine };

/// A point of either carrier.
class SymPoint {
 public:
  SymPoint() : v_(Point()) {}
  explicit SymPoint(Point p) : v_(std::move(p)) {}
  explicit SymPoint(GrpSet::Int n) : v_(n) {}
  bool is_real() const { return std::holds_alternative<Point>(v_); }
  const Point& real() const { return std::get<Point>(v_); }
  GrpSet::Int integer() const { return std::get<GrpSet::Int>(v_); }
  bool operator==(const SymPoint& o) const { return v_ == o.v_; }
  std::string str() const {
    return is_real() ? real().str() : std::to_string(integer());
  }

 private:
  std::variant<Point, GrpSet::Int> v_;
};

class SymSet {
 public:
  SymSet() : v_(RealSet()) {}
  SymSet(RealSet s) : v_(std::move(s)) {}  // NOLINT
  SymSet(GrpSet s) : v_(std::move(s)) {}   // NOLINT

  static SymSet make_singleton(SpaceKind k, const SymPoint& p) {
    if (k == SpaceKind::RealLine)
      return SymSet(RealSet::from_cells({point_cell(p.real())}));
    return SymSet(GrpSet::singleton(p.integer()));
  }

  SpaceKind kind() const {
    return std::holds_alternative<RealSet>(v_) ? SpaceKind::RealLine
                                               : SpaceKind::ZLine;
  }
  const RealSet& real() const { return std::get<RealSet>(v_); }
  const GrpSet& zset() const { return std::get<GrpSet>(v_); }

  bool empty() const {
    return kind() == SpaceKind::RealLine ? real().empty() : zset().empty();
  }
  bool operator==(const SymSet& o) const { return v_ == o.v_; }
  bool operator!=(const SymSet& o) const { return !(*this == o); }
  bool operator<(const SymSet& o) const { return v_ < o.v_; }

  SymSet unite(const SymSet& o) const {
    return apply2(o, [](auto& a, auto& b) { return a.unite(b); });
  }
  SymSet intersect(const SymSet& o) const {
    return apply2(o, [](auto& a, auto& b) { return a.intersect(b); });
  }
  SymSet subtract(const SymSet& o) const {
    return apply2(o, [](auto& a, auto& b) { return a.subtract(b); });
  }
  bool subset_of(const SymSet& o) const { return subtract(o).empty(); }
  bool meets(const SymSet& o) const { return !intersect(o).empty(); }

  bool contains(const SymPoint& p) const {
    if (kind() == SpaceKind::RealLine) return real().contains(p.real());
    return zset().contains(p.integer());
  }

  /// Closure in the ambient line (Z carries the discrete topology).
  SymSet closure() const {
    if (kind() == SpaceKind::RealLine) return SymSet(real().closure());
    return *this;
  }
  SymSet closure_in(const SymSet& carrier) const {
    return closure().intersect(carrier);
  }
  SymSet interior_in(const SymSet& carrier) const {
    if (kind() == SpaceKind::ZLine) return intersect(carrier);
    return SymSet(real().interior_in(carrier.real()));
  }
  bool is_open_in(const SymSet& carrier) const {
    return intersect(carrier) == interior_in(carrier);
  }
  bool is_closed_in(const SymSet& carrier) const {
    return intersect(carrier) == closure_in(carrier);
  }
  bool is_dense_in(const SymSet& carrier) const {
    return closure_in(carrier) == carrier;
  }
  bool is_nowhere_dense_in(const SymSet& carrier) const {
    return closure_in(carrier).interior_in(carrier).empty();
  }

  bool is_compact() const {
    if (kind() == SpaceKind::RealLine) return real().is_compact();
    return zset().is_finite();
  }
  bool bounded() const {
    if (kind() == SpaceKind::RealLine) return real().bounded();
    return zset().is_finite();
  }

  std::string str() const {
    return kind() == SpaceKind::RealLine ? real().str() : zset().to_string();
  }

 private:
  template <class F>
  SymSet apply2(const SymSet& o, F f) const {
    if (kind() != o.kind())
      throw std::logic_error("SymSet: mixed carrier kinds");
    if (kind() == SpaceKind::RealLine) return SymSet(f(real(), o.real()));
    return SymSet(f(zset(), o.zset()));
  }

  std::variant<RealSet, GrpSet> v_;
};

/// A carrier space: kind plus ambient carrier set.
struct Space {
  SpaceKind kind = SpaceKind::RealLine;
  SymSet carrier = SymSet(RealSet::whole_line());

  static Space real_line() { return Space{}; }
  static Space real_subspace(RealSet s) {
    return Space{SpaceKind::RealLine, SymSet(std::move(s))};
  }
  static Space z_line() {
    return Space{SpaceKind::ZLine, SymSet(GrpSet::all())};
  }
  static Space z_subspace(GrpSet s) {
    return Space{SpaceKind::ZLine, SymSet(std::move(s))};
  }
  bool operator==(const Space& o) const = default;
};

// ---------------------------------------------------------------------
// Exact representative points.
// ---------------------------------------------------------------------

/// Rational lower/upper bounds for a Q(sqrt2) point, via sqrt2 convergents
/// p/q with p^2 - 2 q^2 = +-1 (alternately below and above sqrt2).
inline void rational_bounds(const Point& x, Rat& lo, Rat& hi, int level) {
  Rat p = 1, q = 1;  // 1/1 < sqrt2
  Rat below = 1, above = Rat(3) / 2;
  for (int i = 0; i < level; ++i) {
    Rat np = p + 2 * q, nq = p + q;
    p = np;
    q = nq;
    Rat c = p / q;
    if (c * c < 2) below = c; else above = c;
  }
  const Rat& b = x.sqrt2_part();
  if (b >= 0) {
    lo = x.rat_part() + b * below;
    hi = x.rat_part() + b * above;
  } else {
    lo = x.rat_part() + b * above;
    hi = x.rat_part() + b * below;
  }
}

/// An exact rational strictly between a and b (a < b; infinities allowed).
inline Rat rational_between(const ExtPoint& a, const ExtPoint& b) {
  if (!a.finite() && !b.finite()) return 0;
  for (int level = 2;; ++level) {
    Rat alo = 0, ahi = 0, blo = 0, bhi = 0;
    if (a.finite()) rational_bounds(a.value(), alo, ahi, level);
    if (b.finite()) rational_bounds(b.value(), blo, bhi, level);
    if (!a.finite()) {
      if (b.value().is_rational()) return b.value().rat_part() - 1;
      return blo - 1;
    }
    if (!b.finite()) {
      if (a.value().is_rational()) return a.value().rat_part() + 1;
      return ahi + 1;
    }
    // Strictly separate the two approximation intervals, then take a
    // rational in the cleared middle gap; verify exactly.
    Rat cand = (ahi + blo) / 2;
    Point c(cand);
    if (a.value() < c && c < b.value()) return cand;
    if (level > 64)
      throw std::logic_error("rational_between: no separation found");
  }
}

/// An exact irrational (in Q(sqrt2) \ Q) strictly between a and b.
inline Point irrational_between(const ExtPoint& a, const ExtPoint& b) {
  Rat q = rational_between(a, b);
  // Find delta > 0 rational with q + delta*sqrt2 < b.
  if (!b.finite()) return Point(q, 1);
  Rat gap = rational_between(ExtPoint(Point(q)), b) - q;  // 0 < gap, q+gap < b
  Rat delta = gap / 2;  // delta*sqrt2 < gap since sqrt2 < 2
  Point c(q, delta);
  if (!(ExtPoint(c) < b)) throw std::logic_error("irrational_between failed");
  return c;
}

}  // namespace gdyn

#endif  // GDYN_SYMSET_HPP_
