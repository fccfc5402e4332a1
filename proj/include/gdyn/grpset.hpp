/** @file grpset.hpp
 *  @brief Exactly represented, two-sided eventually periodic subsets of Z.
 *
 *  A GrpSet is a subset S of Z that is eventually periodic in both
 *  directions: there are a period p >= 1 and a finite window [lo, hi]
 *  such that membership of n < lo depends only on n mod p (the "left
 *  tail" residues), membership of n > hi likewise (the "right tail"
 *  residues), and membership inside the window is listed explicitly.
 *
 *  The class of such sets is closed under union, intersection,
 *  complement, negation, translation and Minkowski sum, and membership,
 *  emptiness, finiteness and syndeticity (bounded gaps in Z) are all
 *  decidable.  Every GrpSet is kept in a canonical normal form (minimal
 *  period, minimal window), so operator== is semantic equality.
 */

#ifndef GDYN_GRPSET_HPP_
#define GDYN_GRPSET_HPP_

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdyn {

class GrpSet {
 public:
  using Int = std::int64_t;

  /// The empty set.
  GrpSet() : period_(1), lo_(0), hi_(-1) {}

  /// The whole group Z.
  static GrpSet all() {
    GrpSet s;
    s.left_ = {0};
    s.right_ = {0};
    return s;
  }
  static GrpSet empty_set() { return GrpSet(); }

  /// The singleton {n}.
  static GrpSet singleton(Int n) { return from_elements({n}); }

  /// A finite set given by an explicit element list.
  static GrpSet from_elements(std::vector<Int> elems) {
    GrpSet s;
    if (elems.empty()) return s;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    s.lo_ = elems.front();
    s.hi_ = elems.back();
    s.window_.assign(static_cast<size_t>(s.hi_ - s.lo_ + 1), false);
    for (Int e : elems) s.window_[static_cast<size_t>(e - s.lo_)] = true;
    s.canonicalize();
    return s;
  }

  /// The subgroup dZ (d >= 1); d == 0 yields {0}.
  static GrpSet subgroup(Int d) {
    if (d == 0) return singleton(0);
    if (d < 0) d = -d;
    GrpSet s;
    s.period_ = d;
    s.lo_ = 0;
    s.hi_ = -1;
    s.left_ = {0};
    s.right_ = {0};
    s.canonicalize();
    return s;
  }

  /// The one-sided progressions {n : n >= a} and {n : n <= a}.
  static GrpSet from(Int a) {
    GrpSet s;
    s.period_ = 1;
    s.lo_ = a;
    s.hi_ = a;
    s.window_ = {true};
    s.right_ = {0};
    s.canonicalize();
    return s;
  }
  static GrpSet up_to(Int a) { return from(-a).negate(); }

  /// General constructor from period, explicit window and tail residues.
  static GrpSet make(Int period, Int lo, const std::vector<bool>& window,
                     const std::set<Int>& left_res,
                     const std::set<Int>& right_res) {
    if (period < 1) throw std::invalid_argument("GrpSet: period must be >= 1");
    GrpSet s;
    s.period_ = period;
    s.lo_ = lo;
    s.hi_ = lo + static_cast<Int>(window.size()) - 1;
    s.window_ = window;
    for (Int r : left_res) s.left_.insert(mod(r, period));
    for (Int r : right_res) s.right_.insert(mod(r, period));
    s.canonicalize();
    return s;
  }

  bool contains(Int n) const {
    if (n < lo_) return left_.count(mod(n, period_)) != 0;
    if (n > hi_) return right_.count(mod(n, period_)) != 0;
    return window_[static_cast<size_t>(n - lo_)];
  }

  bool empty() const {
    if (!left_.empty() || !right_.empty()) return false;
    for (bool b : window_)
      if (b) return false;
    return true;
  }

  bool is_finite() const { return left_.empty() && right_.empty(); }

  /// Bounded gaps in the ambient group Z (two-sided syndeticity).
  bool syndetic_in_z() const { return !left_.empty() && !right_.empty(); }

  /// True iff S is a subgroup of Z ({0} or dZ).
  bool is_subgroup() const {
    if (!contains(0)) return false;
    if (is_finite()) return *this == singleton(0);
    // An infinite subgroup of Z is dZ where d is its least positive element.
    for (Int d = 1; d <= period_ * 2 + hi_ - lo_ + 2; ++d)
      if (contains(d)) return *this == subgroup(d);
    return false;
  }

  GrpSet unite(const GrpSet& o) const {
    return combine(o, [](bool a, bool b) { return a || b; });
  }
  GrpSet intersect(const GrpSet& o) const {
    return combine(o, [](bool a, bool b) { return a && b; });
  }
  GrpSet subtract(const GrpSet& o) const {
    return combine(o, [](bool a, bool b) { return a && !b; });
  }

  GrpSet complement() const {
    GrpSet s(*this);
    for (size_t i = 0; i < s.window_.size(); ++i) s.window_[i] = !s.window_[i];
    s.left_ = residue_complement(s.left_, s.period_);
    s.right_ = residue_complement(s.right_, s.period_);
    s.canonicalize();
    return s;
  }

  /// {-n : n in S}.
  GrpSet negate() const {
    GrpSet s;
    s.period_ = period_;
    s.lo_ = -hi_;
    s.hi_ = -lo_;
    s.window_.assign(window_.rbegin(), window_.rend());
    for (Int r : left_) s.right_.insert(mod(-r, period_));
    for (Int r : right_) s.left_.insert(mod(-r, period_));
    // Note: an empty window reverses to an empty window whose lo/hi still
    // encode the (negated) crossover position; canonicalize() re-minimizes.
    s.canonicalize();
    return s;
  }

  /// {n + t : n in S}.
  GrpSet translate(Int t) const {
    GrpSet s(*this);
    s.lo_ += t;
    s.hi_ += t;
    std::set<Int> l, r;
    for (Int x : s.left_) l.insert(mod(x + t, s.period_));
    for (Int x : s.right_) r.insert(mod(x + t, s.period_));
    s.left_ = std::move(l);
    s.right_ = std::move(r);
    s.canonicalize();
    return s;
  }

  /// Minkowski sum {a + b : a in S, b in T}; exact.
  GrpSet sum(const GrpSet& o) const {
    if (empty() || o.empty()) return GrpSet();
    Int p = std::lcm(period_, o.period_);
    Int span = (hi_ - lo_ + 1) + (o.hi_ - o.lo_ + 1);
    Int radius = std::max({std::abs(lo_), std::abs(hi_), std::abs(o.lo_),
                           std::abs(o.hi_), Int(1)});
    for (int attempt = 0; attempt < 12; ++attempt) {
      Int b = 2 * radius + span + 4 * p;
      GrpSet r = sampled_sum(o, p, b);
      if (r.verified_) return r;
      radius *= 2;
    }
    throw std::logic_error("GrpSet::sum: period verification failed");
  }

  bool operator==(const GrpSet& o) const {
    return period_ == o.period_ && lo_ == o.lo_ && hi_ == o.hi_ &&
           window_ == o.window_ && left_ == o.left_ && right_ == o.right_;
  }
  bool operator!=(const GrpSet& o) const { return !(*this == o); }
  bool operator<(const GrpSet& o) const {  // arbitrary total order
    auto key = [](const GrpSet& s) {
      return std::tuple(s.period_, s.lo_, s.hi_, s.window_,
                        std::vector<Int>(s.left_.begin(), s.left_.end()),
                        std::vector<Int>(s.right_.begin(), s.right_.end()));
    };
    return key(*this) < key(o);
  }

  bool subset_of(const GrpSet& o) const { return subtract(o).empty(); }

  Int period() const { return period_; }
  Int window_lo() const { return lo_; }
  Int window_hi() const { return hi_; }
  const std::set<Int>& left_residues() const { return left_; }
  const std::set<Int>& right_residues() const { return right_; }

  /// Elements of S inside [a, b] in increasing order.
  std::vector<Int> elements_in(Int a, Int b) const {
    std::vector<Int> out;
    for (Int n = a; n <= b; ++n)
      if (contains(n)) out.push_back(n);
    return out;
  }

  /// Some element of a nonempty set.
  Int any_element() const {
    assert(!empty());
    for (Int n = lo_; n <= hi_; ++n)
      if (window_[static_cast<size_t>(n - lo_)]) return n;
    if (!right_.empty())
      return hi_ + 1 + mod(*right_.begin() - (hi_ + 1), period_);
    return lo_ - 1 - mod(lo_ - 1 - *left_.begin(), period_);
  }

  /// Number of elements; only valid for finite sets.
  Int size_finite() const {
    assert(is_finite());
    Int c = 0;
    for (bool b : window_) c += b ? 1 : 0;
    return c;
  }

  /// Compact human-readable rendering, e.g. "all", "{}", "{0,3} u 2Z>=10".
  std::string to_string() const {
    if (empty()) return "{}";
    if (*this == all()) return "Z";
    std::string out;
    if (!left_.empty()) {
      out += "(..<" + std::to_string(lo_) + " : mod " +
             std::to_string(period_) + " in " + render_res(left_) + ")";
    }
    std::string w;
    for (Int n = lo_; n <= hi_; ++n)
      if (window_[static_cast<size_t>(n - lo_)])
        w += (w.empty() ? "" : ",") + std::to_string(n);
    if (!w.empty()) out += (out.empty() ? "" : " u ") + ("{" + w + "}");
    if (!right_.empty()) {
      out += (out.empty() ? "" : " u ");
      out += "(>" + std::to_string(hi_) + " : mod " + std::to_string(period_) +
             " in " + render_res(right_) + ")";
    }
    return out;
  }

 private:
  static Int mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
  }

  static std::set<Int> residue_complement(const std::set<Int>& rs, Int p) {
    std::set<Int> out;
    for (Int r = 0; r < p; ++r)
      if (!rs.count(r)) out.insert(r);
    return out;
  }

  static std::string render_res(const std::set<Int>& rs) {
    std::string out = "{";
    for (Int r : rs) out += std::to_string(r) + ",";
    if (out.back() == ',') out.pop_back();
    return out + "}";
  }

  template <class F>
  GrpSet combine(const GrpSet& o, F op) const {
    Int p = std::lcm(period_, o.period_);
    Int lo = std::min(lo_, o.lo_) - p;  // margin so tails are pure on both
    Int hi = std::max(hi_, o.hi_) + p;
    GrpSet s;
    s.period_ = p;
    s.lo_ = lo;
    s.hi_ = hi;
    s.window_.resize(static_cast<size_t>(hi - lo + 1));
    for (Int n = lo; n <= hi; ++n)
      s.window_[static_cast<size_t>(n - lo)] = op(contains(n), o.contains(n));
    for (Int r = 0; r < p; ++r) {
      // Representatives deep inside each tail; membership there is per-residue.
      Int ln = lo - p + mod(r - (lo - p), p);
      Int rn = hi + 1 + mod(r - (hi + 1), p);
      if (op(contains(ln), o.contains(ln))) s.left_.insert(r);
      if (op(contains(rn), o.contains(rn))) s.right_.insert(r);
    }
    s.canonicalize();
    return s;
  }

  /// Evaluate the Minkowski sum pointwise on [-b, b] and close it up with
  /// period-p tails, verifying the claimed periodicity over three periods.
  GrpSet sampled_sum(const GrpSet& o, Int p, Int b) const {
    auto member = [&](Int n) {
      // n in S+T  iff  (n - S) meets T.
      return !negate().translate(n).intersect(o).empty();
    };
    GrpSet s;
    s.period_ = p;
    s.lo_ = -b;
    s.hi_ = b;
    s.window_.resize(static_cast<size_t>(2 * b + 1));
    for (Int n = -b; n <= b; ++n)
      s.window_[static_cast<size_t>(n + b)] = member(n);
    s.verified_ = true;
    for (Int n = b - 3 * p + 1; n <= b - p; ++n)
      if (s.window_[static_cast<size_t>(n + b)] !=
          s.window_[static_cast<size_t>(n + p + b)])
        s.verified_ = false;
    for (Int n = -b + p; n <= -b + 3 * p - 1; ++n)
      if (s.window_[static_cast<size_t>(n + b)] !=
          s.window_[static_cast<size_t>(n - p + b)])
        s.verified_ = false;
    if (!s.verified_) return s;
    // Tail residues are read off the outermost verified period.
    for (Int n = -b; n < -b + p; ++n)
      if (s.window_[static_cast<size_t>(n + b)]) s.left_.insert(mod(n, p));
    for (Int n = b - p + 1; n <= b; ++n)
      if (s.window_[static_cast<size_t>(n + b)]) s.right_.insert(mod(n, p));
    s.canonicalize();
    s.verified_ = true;
    return s;
  }

  void canonicalize() {
    // 1. Minimal period representing both tail residue patterns.
    for (Int q = 1; q <= period_; ++q) {
      if (period_ % q != 0) continue;
      if (residues_reduce(left_, period_, q) &&
          residues_reduce(right_, period_, q)) {
        std::set<Int> l, r;
        for (Int x : left_) l.insert(x % q);
        for (Int x : right_) r.insert(x % q);
        left_ = std::move(l);
        right_ = std::move(r);
        period_ = q;
        break;
      }
    }
    // 2. Shrink the window while its border agrees with the tail pattern.
    while (lo_ <= hi_) {
      bool b = window_.front();
      if (b != (left_.count(mod(lo_, period_)) != 0)) break;
      window_.erase(window_.begin());
      ++lo_;
    }
    while (lo_ <= hi_) {
      bool b = window_.back();
      if (b != (right_.count(mod(hi_, period_)) != 0)) break;
      window_.pop_back();
      --hi_;
    }
    if (lo_ > hi_) {
      window_.clear();
      if (left_ == right_) {
        // Fully periodic (or empty): pin the window origin for uniqueness.
        lo_ = 0;
        hi_ = -1;
        if (left_.empty()) period_ = 1;
      } else {
        // Pure crossover between two distinct periodic patterns at lo_.
        // Slide the crossover down as far as the patterns agree, so the
        // position is the unique minimal one.
        while ((left_.count(mod(lo_ - 1, period_)) != 0) ==
               (right_.count(mod(lo_ - 1, period_)) != 0))
          --lo_;
        hi_ = lo_ - 1;
      }
    }
  }

  static bool residues_reduce(const std::set<Int>& rs, Int p, Int q) {
    // True iff rs (mod p) is a union of residue classes mod q, q | p.
    for (Int r = 0; r < p; ++r) {
      bool in = rs.count(r) != 0;
      bool in_q = rs.count(r % q) != 0;
      // class of r mod q must be uniform: compare with canonical rep
      bool rep = false;
      for (Int x = r % q; x < p; x += q)
        if (rs.count(x)) { rep = true; break; }
      bool all = true;
      for (Int x = r % q; x < p; x += q)
        if (!rs.count(x)) { all = false; break; }
      (void)in;
      (void)in_q;
      if (rep && !all) return false;
    }
    return true;
  }

  Int period_;               ///< tail period p >= 1
  Int lo_, hi_;              ///< explicit window [lo, hi] (empty if lo > hi)
  std::vector<bool> window_; ///< membership on the window
  std::set<Int> left_;       ///< residues mod p for n < lo
  std::set<Int> right_;      ///< residues mod p for n > hi
  bool verified_ = true;     ///< internal: periodicity check for sums
};

}  // namespace gdyn

#endif  // GDYN_GRPSET_HPP_
