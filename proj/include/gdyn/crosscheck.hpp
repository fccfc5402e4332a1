/**
 * @file crosscheck.hpp
 * @brief Symbolic-versus-reference agreement on instances that live in both
 *        worlds: a block-structured finite instance with discrete unit
 *        space encodes as a block groupoid over an integer carrier, and
 *        every decision procedure must agree with exhaustive evaluation.
 */
#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdyn/dynamics.hpp"
#include "gdyn/oracle.hpp"

namespace gdyn {

struct NotEncodable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class AgreeStatus { Agree, Disagree, UnknownLogged };

struct AgreeItem {
    std::string predicate;
    std::string symbolic;
    std::string reference;
    AgreeStatus status = AgreeStatus::Agree;
};

struct AgreementReport {
    std::uint64_t seed = 0;
    std::string family;
    bool encodable = false;
    std::vector<AgreeItem> items;

    int disagreements() const {
        int k = 0;
        for (const auto& it : items)
            if (it.status == AgreeStatus::Disagree) ++k;
        return k;
    }
    int unknowns() const {
        int k = 0;
        for (const auto& it : items)
            if (it.status == AgreeStatus::UnknownLogged) ++k;
        return k;
    }
};

/// Encode a block-structured instance over a discrete unit space as a
/// block groupoid on the integer carrier {0, ..., n-1}.
inline BlockGroupoid encode_block_instance(const FiniteInstance& inst) {
    const HybridGroupoid& g = inst.action.g;
    if (!inst.block_type)
        throw NotEncodable("groupoid is not constant on a block partition");
    if (!g.X.hausdorff())
        throw NotEncodable("symbolic integer carriers are discrete");
    if (inst.action.sigma.n != g.X.n)
        throw NotEncodable("only canonical actions are encodable");
    int n = g.X.n;
    std::vector<GrpSet::Int> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = i;
    BlockGroupoid bg(Space::z_subspace(GrpSet::from_elements(pts)));
    int classes = 1 + *std::max_element(inst.block_id.begin(), inst.block_id.end());
    bool any_z = false;
    for (int c = 0; c < classes; ++c) {
        std::vector<GrpSet::Int> members;
        GrpSet z = GrpSet::singleton(0);
        for (int i = 0; i < n; ++i)
            if (inst.block_id[i] == c) {
                members.push_back(i);
                z = inst.block_z[i];
            }
        if (members.empty()) continue;
        if (!(z == GrpSet::singleton(0))) any_z = true;
        bg.blocks.push_back(Block{SymSet(GrpSet::from_elements(members)), z});
    }
    bg.has_z = any_z;
    if (!any_z)
        for (auto& bl : bg.blocks) bl.zpart = GrpSet::singleton(0);
    bg.validate();
    return bg;
}

namespace detail_cross {

inline std::string mask_str(FiniteSpace::Mask m, int n) {
    std::string s = "{";
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) s += (s.size() > 1 ? "," : "") + std::to_string(i);
    return s + "}";
}

inline SymSet mask_to_sym(FiniteSpace::Mask m, int n) {
    std::vector<GrpSet::Int> pts;
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) pts.push_back(i);
    return SymSet(GrpSet::from_elements(pts));
}

/// The integer part an arrow set attaches to the ordered pair (x, y).
inline GrpSet arrowset_at(const ArrowSet& a, int x, int y) {
    GrpSet out = GrpSet::empty_set();
    SymPoint px{GrpSet::Int(x)}, py{GrpSet::Int(y)};
    for (const ArrowAtom& at : a.atoms()) {
        if (at.diag) {
            if (x == y && at.r.contains(px)) out = out.unite(at.z);
        } else if (at.r.contains(px) && at.d.contains(py)) {
            out = out.unite(at.z);
        }
    }
    return out;
}

inline const char* vstr(Verdict v) { return verdict_str(v); }

inline void tally(AgreementReport& rep, const std::string& pred, bool sym,
                  bool ref) {
    rep.items.push_back({pred, sym ? "Holds" : "Fails", ref ? "Holds" : "Fails",
                         sym == ref ? AgreeStatus::Agree : AgreeStatus::Disagree});
}

inline void tally_verdict(AgreementReport& rep, const std::string& pred,
                          Verdict sym, bool ref) {
    if (sym == Verdict::Unknown || sym == Verdict::NotApplicable) {
        rep.items.push_back({pred, vstr(sym), ref ? "Holds" : "Fails",
                             AgreeStatus::UnknownLogged});
        return;
    }
    tally(rep, pred, sym == Verdict::Holds, ref);
}

inline void tally_eq(AgreementReport& rep, const std::string& pred,
                     const std::string& sym, const std::string& ref, bool eq) {
    rep.items.push_back(
        {pred, sym, ref, eq ? AgreeStatus::Agree : AgreeStatus::Disagree});
}

} // namespace detail_cross

/// Compare every decision procedure on one encodable instance.  Rec-set
/// sampling uses the given auxiliary seed deterministically.
inline AgreementReport cross_check(const FiniteInstance& inst,
                                   std::uint64_t aux_seed = 0x5E3D) {
    using namespace detail_cross;
    using Mask = FiniteSpace::Mask;
    AgreementReport rep;
    rep.seed = inst.seed;
    rep.family = inst.family;

    BlockGroupoid bg = encode_block_instance(inst); // may throw NotEncodable
    rep.encodable = true;
    CanonicalAction sym(bg);
    Oracle ref(inst.action);
    int n = inst.action.g.X.n;
    Mask all = ref.all_points();

    // groupoid-level predicates
    tally(rep, "openness", bg.openness().open, groupoid_open(inst.action.g));
    tally(rep, "strongly_noncompact", bg.is_strongly_noncompact(),
          ref.strongly_noncompact());

    // orbits, saturation, invariant closure per unit
    for (int x = 0; x < n; ++x) {
        SymPoint p{GrpSet::Int(x)};
        tally_eq(rep, "orbit@" + std::to_string(x), sym.orbit(p).str(),
                 mask_str(ref.orbit(x), n),
                 sym.orbit(p) == mask_to_sym(ref.orbit(x), n));
        SymSet ic = sym.invariant_closure(SymSet::make_singleton(SpaceKind::ZLine, p));
        Mask rc = ref.invariant_closure(Mask{1} << x);
        tally_eq(rep, "invariant_closure@" + std::to_string(x), ic.str(),
                 mask_str(rc, n), ic == mask_to_sym(rc, n));
    }

    // recurrence sets on sampled rectangles
    std::mt19937_64 rng(inst.seed ^ aux_seed);
    for (int t = 0; t < 4; ++t) {
        Mask M = (Mask)(rng() & all), N = (Mask)(rng() & all);
        if (!M) M = all;
        if (!N) N = all;
        ArrowSet sa = sym.recurrence_set(mask_to_sym(M, n), mask_to_sym(N, n));
        HybridArrows ra = ref.rec(M, N);
        bool eq = true;
        for (int x = 0; x < n && eq; ++x)
            for (int y = 0; y < n && eq; ++y)
                if (!(arrowset_at(sa, x, y) == ra.at(x, y))) eq = false;
        tally_eq(rep, "recurrence_set#" + std::to_string(t),
                 mask_str(M, n) + "->" + mask_str(N, n), eq ? "match" : "differs",
                 eq);
    }

    // point classes
    bool snc = ref.strongly_noncompact();
    for (int x = 0; x < n; ++x) {
        SymPoint p{GrpSet::Int(x)};
        PointFlags f = sym.classify_point(p);
        std::string at = "@" + std::to_string(x);
        tally_verdict(rep, "fixed" + at, f.fixed, ref.fixed(x));
        if (snc) {
            tally_verdict(rep, "periodic" + at, f.periodic, ref.periodic(x));
            tally_verdict(rep, "weakly_periodic" + at, f.weakly_periodic,
                          ref.weakly_periodic(x));
            tally_verdict(rep, "almost_periodic" + at, f.almost_periodic,
                          ref.almost_periodic(x));
            tally_verdict(rep, "recurrent" + at, f.recurrent, ref.recurrent(x));
            tally_verdict(rep, "nonwandering" + at, f.nonwandering,
                          ref.nonwandering(x));
            SymSet ls = sym.limit_set(p);
            Mask rl = ref.limit_set(x);
            tally_eq(rep, "limit_set" + at, ls.str(), mask_str(rl, n),
                     ls == mask_to_sym(rl, n));
        }
    }

    // transitivity and mixing
    TransitivityProfile tp = sym.transitivity_profile();
    tally_verdict(rep, "transitive", tp.transitive.v, ref.transitive());
    tally_verdict(rep, "pointwise_transitive", tp.pointwise_transitive.v,
                  ref.pointwise_transitive());
    tally_verdict(rep, "weakly_pointwise_transitive",
                  tp.weakly_pointwise_transitive.v,
                  ref.weakly_pointwise_transitive());
    tally_verdict(rep, "prop_i_prime", tp.prop_i_prime.v, ref.prop_i_prime());
    tally_verdict(rep, "prop_ii", tp.prop_ii.v, ref.prop_ii());
    tally_verdict(rep, "prop_iii_recurrent_transitivity", tp.prop_iii.v,
                  ref.prop_iii());
    tally_verdict(rep, "prop_iv_topological_transitivity", tp.prop_iv.v,
                  ref.prop_iv());
    MixingProfile mp = sym.mixing_profile();
    tally_verdict(rep, "weakly_mixing", mp.weak.v, ref.weakly_mixing());
    tally_verdict(rep, "strongly_mixing", mp.strong.v, ref.strongly_mixing());

    // minimal sets, as unordered families
    {
        std::vector<SymSet> ms = sym.minimal_sets();
        std::vector<Mask> rm = ref.minimal_sets();
        bool eq = ms.size() == rm.size();
        for (const auto& m : ms) {
            bool found = false;
            for (Mask r : rm)
                if (m == mask_to_sym(r, n)) found = true;
            if (!found) eq = false;
        }
        tally_eq(rep, "minimal_sets", std::to_string(ms.size()) + " sets",
                 std::to_string(rm.size()) + " sets", eq);
    }
    return rep;
}

} // namespace gdyn
