/** @file point.hpp
 *  @brief Exact points of the real line drawn from the field Q(sqrt 2).
 *
 *  A Point is a + b*sqrt(2) with rational a, b.  The subfield Q(sqrt 2)
 *  is totally ordered with decidable comparison, closed under the affine
 *  maps we need, and contains both rational and irrational numbers, so a
 *  single exact representation supports "rationals only" / "irrationals
 *  only" set flavors with concrete witnesses on both sides.
 *
 *  ExtPoint extends Point with the two infinities for interval bounds.
 */

#ifndef GDYN_POINT_HPP_
#define GDYN_POINT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace gdyn {

using Rat = boost::multiprecision::cpp_rational;

/// Sign of a rational as -1/0/+1.
inline int sgn(const Rat& r) { return r.sign(); }

class Point {
 public:
  Point() : a_(0), b_(0) {}
  Point(long long n) : a_(n), b_(0) {}  // NOLINT: implicit by design
  Point(Rat a) : a_(std::move(a)), b_(0) {}  // NOLINT
  Point(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static Point sqrt2() { return Point(Rat(0), Rat(1)); }

  const Rat& rat_part() const { return a_; }
  const Rat& sqrt2_part() const { return b_; }

  bool is_rational() const { return b_ == 0; }

  Point operator+(const Point& o) const { return Point(a_ + o.a_, b_ + o.b_); }
  Point operator-(const Point& o) const { return Point(a_ - o.a_, b_ - o.b_); }
  Point operator-() const { return Point(-a_, -b_); }
  Point operator*(const Rat& c) const { return Point(a_ * c, b_ * c); }
  Point operator*(const Point& o) const {
    return Point(a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
  }

  /// Sign of a + b*sqrt(2), decided exactly.
  int sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with 2 b^2; sign follows the larger side.
    Rat a2 = a_ * a_, b22 = 2 * b_ * b_;
    if (a2 == b22) return 0;  // only possible at a = b = 0, kept for safety
    return a2 > b22 ? sa : sb;
  }

  std::strong_ordering operator<=>(const Point& o) const {
    int s = (*this - o).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  bool operator==(const Point& o) const { return a_ == o.a_ && b_ == o.b_; }

  /// Wire rendering: "p/q" for rationals, "a+b*sqrt2" otherwise.
  std::string str() const {
    if (is_rational()) return rat_str(a_);
    if (b_ > 0) return rat_str(a_) + "+" + rat_str(b_) + "*sqrt2";
    return rat_str(a_) + "-" + rat_str(-b_) + "*sqrt2";
  }

  static std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
  }

  /// Parse "p/q", "a+b*sqrt2" or "a-b*sqrt2" (also bare "sqrt2" terms).
  static Point parse(const std::string& text);

 private:
  Rat a_, b_;
};

inline Point Point::parse(const std::string& text) {
  auto parse_rat = [](const std::string& s) -> Rat {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    return Rat(s);
  };
  // Split at a '+'/'-' that is not the leading sign.
  size_t split = std::string::npos;
  for (size_t i = 1; i < text.size(); ++i)
    if (text[i] == '+' || text[i] == '-') { split = i; break; }
  size_t st = text.find("sqrt2");
  if (st == std::string::npos) return Point(parse_rat(text));
  std::string head = (split == std::string::npos) ? "" : text.substr(0, split);
  std::string tail = (split == std::string::npos) ? text : text.substr(split);
  // tail looks like "[+-]b*sqrt2", "[+-]sqrt2" or "sqrt2"
  Rat sign = 1;
  if (!tail.empty() && (tail[0] == '+' || tail[0] == '-')) {
    if (tail[0] == '-') sign = -1;
    tail = tail.substr(1);
  }
  size_t star = tail.find("*sqrt2");
  Rat b;
  if (star != std::string::npos)
    b = parse_rat(tail.substr(0, star));
  else if (tail == "sqrt2")
    b = 1;
  else
    throw std::invalid_argument("bad sqrt2 literal: " + text);
  Rat a = head.empty() ? Rat(0) : parse_rat(head);
  return Point(a, sign * b);
}

/// A point of the extended real line [-inf, +inf].
class ExtPoint {
 public:
  enum Kind { NegInf = -1, Finite = 0, PosInf = 1 };

  ExtPoint() : kind_(Finite) {}
  ExtPoint(Point p) : kind_(Finite), p_(std::move(p)) {}  // NOLINT
  static ExtPoint neg_inf() { ExtPoint e; e.kind_ = NegInf; return e; }
  static ExtPoint pos_inf() { ExtPoint e; e.kind_ = PosInf; return e; }

  bool finite() const { return kind_ == Finite; }
  Kind kind() const { return kind_; }
  const Point& value() const { return p_; }

  std::strong_ordering operator<=>(const ExtPoint& o) const {
    if (kind_ != o.kind_) return kind_ <=> o.kind_;
    if (kind_ != Finite) return std::strong_ordering::equal;
    return p_ <=> o.p_;
  }
  bool operator==(const ExtPoint& o) const {
    return kind_ == o.kind_ && (kind_ != Finite || p_ == o.p_);
  }

  std::string str() const {
    if (kind_ == NegInf) return "-inf";
    if (kind_ == PosInf) return "inf";
    return p_.str();
  }

  static ExtPoint parse(const std::string& s) {
    if (s == "-inf") return neg_inf();
    if (s == "inf" || s == "+inf") return pos_inf();
    return ExtPoint(Point::parse(s));
  }

 private:
  Kind kind_;
  Point p_;
};

}  // namespace gdyn

#endif  // GDYN_POINT_HPP_
