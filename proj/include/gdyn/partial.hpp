/**
 * @file partial.hpp
 * @brief Partial actions of the integers by translation on a bounded open
 *        subset of the line, with exact recurrence sets.
 *
 * The translation by n is defined on Y cap (Y - n) and maps it onto
 * Y cap (Y + n); this is always a partial action.  For bounded data the
 * recurrence sets are finite and computed exactly.
 */
#pragma once

#include <stdexcept>

#include "gdyn/symset.hpp"

namespace gdyn {

/// Translate a set of reals by an integer (flavors are preserved, since
/// integer translation maps rationals to rationals).
inline RealSet translate(const RealSet& s, GrpSet::Int n) {
    Point d((long long)n);
    std::vector<Cell> out;
    for (Cell c : s.cells()) {
        if (c.lo.finite()) c.lo = ExtPoint(c.lo.value() + d);
        if (c.hi.finite()) c.hi = ExtPoint(c.hi.value() + d);
        out.push_back(c);
    }
    return RealSet::from_cells(out);
}

namespace detail_partial {
inline long long rat_floor(const Rat& r) {
    using boost::multiprecision::cpp_int;
    cpp_int num = numerator(r), den = denominator(r);
    cpp_int q = num / den;
    if (num < 0 && q * den != num) --q;
    return (long long)q;
}
/// A safe integer lower/upper bound of the finite endpoints of a set.
inline void int_bounds(const RealSet& s, long long& lo, long long& hi) {
    bool first = true;
    for (const Cell& c : s.cells())
        for (const ExtPoint* e : {&c.lo, &c.hi}) {
            if (!e->finite()) continue;
            Rat l, h;
            rational_bounds(e->value(), l, h, 24);
            long long a = rat_floor(l), b = rat_floor(h) + 1;
            lo = first ? a : std::min(lo, a);
            hi = first ? b : std::max(hi, b);
            first = false;
        }
    if (first) lo = hi = 0;
}
} // namespace detail_partial

/// The set {n : (S + n) cap T nonempty} for bounded S and T, exactly.
inline GrpSet rec_translation(const RealSet& S, const RealSet& T) {
    if (S.empty() || T.empty()) return GrpSet::empty_set();
    if (!S.bounded() || !T.bounded())
        throw UnrepresentableArrowSet("rec_translation: unbounded data");
    long long slo, shi, tlo, thi;
    detail_partial::int_bounds(S, slo, shi);
    detail_partial::int_bounds(T, tlo, thi);
    std::vector<GrpSet::Int> hits;
    for (long long n = tlo - shi - 1; n <= thi - slo + 1; ++n)
        if (!translate(S, n).intersect(T).empty()) hits.push_back(n);
    return GrpSet::from_elements(hits);
}

/// The integers acting by translation on a bounded open subset of the line.
struct PartialZTranslation {
    RealSet domain;

    explicit PartialZTranslation(RealSet y) : domain(std::move(y)) {
        if (!domain.is_open_in(RealSet::whole_line()))
            throw std::invalid_argument("partial translation: domain not open");
        if (!domain.bounded())
            throw UnrepresentableArrowSet("partial translation: unbounded domain");
    }

    /// Domain of the translation by n inside Y: Y cap (Y - n).
    RealSet domain_of(GrpSet::Int n) const {
        return domain.intersect(translate(domain, -n));
    }

    /// Exact recurrence set of the partial action:
    /// {n : beta_n(S cap dom beta_n) cap T nonempty}.
    GrpSet rec(const RealSet& S, const RealSet& T) const {
        if (S.empty() || T.empty()) return GrpSet::empty_set();
        long long lo, hi;
        detail_partial::int_bounds(domain, lo, hi);
        std::vector<GrpSet::Int> hits;
        for (long long n = lo - hi - 1; n <= hi - lo + 1; ++n) {
            RealSet moved = translate(S.intersect(domain_of(n)), n);
            if (!moved.intersect(T).intersect(domain).empty()) hits.push_back(n);
        }
        return GrpSet::from_elements(hits);
    }
};

} // namespace gdyn
