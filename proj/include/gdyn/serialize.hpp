/** @file serialize.hpp
 *  @brief JSON wire format for the set algebra and groupoid types.
 *
 *  Rationals are encoded as "p/q" strings, quadratic irrationals as
 *  "a+b*sqrt2", and the infinities as "-inf"/"inf".  Real sets travel as
 *  {"dim":1,"cells":[...]}, integer sets as period/window/tail objects,
 *  block groupoids as {"kind":"block","base":...,"blocks":[...]}.  The
 *  same schemas serve the CLI `--input` files, the catalog fixtures and
 *  the failure/replay artifacts.  Decoding validates shape and raises
 *  SchemaError; sets are clipped to the ambient carrier unless strict
 *  mode is requested.
 */
#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gdyn/block_groupoid.hpp"
#include "gdyn/dynamics.hpp"

namespace gdyn {

using Json = nlohmann::ordered_json;

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail_ser {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline std::string str_field(const Json& j, const char* key) {
    const Json& f = field(j, key);
    if (!f.is_string()) throw SchemaError(std::string(key) + ": expected string");
    return f.get<std::string>();
}

inline bool bool_field(const Json& j, const char* key) {
    const Json& f = field(j, key);
    if (!f.is_boolean()) throw SchemaError(std::string(key) + ": expected bool");
    return f.get<bool>();
}

} // namespace detail_ser

// ---- extended points and cells ---------------------------------------------

inline Json to_json(const ExtPoint& p) { return p.str(); }

inline ExtPoint extpoint_from_json(const Json& j) {
    if (!j.is_string()) throw SchemaError("endpoint: expected string");
    try {
        return ExtPoint::parse(j.get<std::string>());
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception& e) {
        throw SchemaError(std::string("endpoint: ") + e.what());
    }
}

inline Json to_json(const Cell& c) {
    return Json{{"lo", c.lo.str()},
                {"hi", c.hi.str()},
                {"lo_closed", c.lo_closed},
                {"hi_closed", c.hi_closed},
                {"flavor", flavor_str(c.flavor)}};
}

inline Cell cell_from_json(const Json& j) {
    Cell c;
    c.lo = extpoint_from_json(detail_ser::field(j, "lo"));
    c.hi = extpoint_from_json(detail_ser::field(j, "hi"));
    c.lo_closed = detail_ser::bool_field(j, "lo_closed");
    c.hi_closed = detail_ser::bool_field(j, "hi_closed");
    try {
        c.flavor = flavor_parse(detail_ser::str_field(j, "flavor"));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    if (c.hi < c.lo) throw SchemaError("cell: hi < lo");
    return c;
}

inline Json to_json(const RealSet& s) {
    Json cells = Json::array();
    for (const Cell& c : s.cells()) cells.push_back(to_json(c));
    return Json{{"dim", 1}, {"cells", std::move(cells)}};
}

inline RealSet realset_from_json(const Json& j) {
    const Json& cells = detail_ser::field(j, "cells");
    if (!cells.is_array()) throw SchemaError("cells: expected array");
    std::vector<Cell> out;
    for (const Json& cj : cells) out.push_back(cell_from_json(cj));
    return RealSet::from_cells(out);
}

// ---- integer sets -----------------------------------------------------------

inline Json to_json(const GrpSet& s) {
    if (s.empty()) return "empty";
    if (s == GrpSet::all()) return "all";
    Json win = Json::array();
    for (GrpSet::Int n = s.window_lo(); n <= s.window_hi(); ++n)
        win.push_back(s.contains(n) ? 1 : 0);
    Json left = Json::array(), right = Json::array();
    for (GrpSet::Int r : s.left_residues()) left.push_back(r);
    for (GrpSet::Int r : s.right_residues()) right.push_back(r);
    return Json{{"period", s.period()},
                {"window_lo", s.window_lo()},
                {"window", std::move(win)},
                {"left", std::move(left)},
                {"right", std::move(right)}};
}

inline GrpSet grpset_from_json(const Json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "empty") return GrpSet::empty_set();
        if (s == "all") return GrpSet::all();
        throw SchemaError("integer set: unknown literal '" + s + "'");
    }
    GrpSet::Int period = detail_ser::field(j, "period").get<GrpSet::Int>();
    GrpSet::Int lo = detail_ser::field(j, "window_lo").get<GrpSet::Int>();
    const Json& wj = detail_ser::field(j, "window");
    if (!wj.is_array()) throw SchemaError("integer set: window must be an array");
    std::vector<bool> window;
    for (const Json& b : wj) window.push_back(b.get<int>() != 0);
    std::set<GrpSet::Int> left, right;
    for (const Json& r : detail_ser::field(j, "left")) left.insert(r.get<GrpSet::Int>());
    for (const Json& r : detail_ser::field(j, "right")) right.insert(r.get<GrpSet::Int>());
    if (period < 1) throw SchemaError("integer set: period must be positive");
    return GrpSet::make(period, lo, window, left, right);
}

// ---- mixed carriers ---------------------------------------------------------

inline Json to_json(const SymSet& s) {
    if (s.kind() == SpaceKind::RealLine)
        return Json{{"carrier", "real"}, {"set", to_json(s.real())}};
    return Json{{"carrier", "z"}, {"set", to_json(s.zset())}};
}

inline SymSet symset_from_json(const Json& j) {
    std::string k = detail_ser::str_field(j, "carrier");
    if (k == "real") return SymSet(realset_from_json(detail_ser::field(j, "set")));
    if (k == "z") return SymSet(grpset_from_json(detail_ser::field(j, "set")));
    throw SchemaError("set: unknown carrier kind '" + k + "'");
}

inline Json to_json(const Space& sp) {
    return Json{{"kind", sp.kind == SpaceKind::RealLine ? "real" : "z"},
                {"carrier", to_json(sp.carrier)}};
}

inline Space space_from_json(const Json& j) {
    std::string k = detail_ser::str_field(j, "kind");
    SymSet carrier = symset_from_json(detail_ser::field(j, "carrier"));
    if (k == "real") {
        if (carrier.kind() != SpaceKind::RealLine)
            throw SchemaError("space: kind/carrier mismatch");
        return Space{SpaceKind::RealLine, std::move(carrier)};
    }
    if (k == "z") {
        if (carrier.kind() != SpaceKind::ZLine)
            throw SchemaError("space: kind/carrier mismatch");
        return Space{SpaceKind::ZLine, std::move(carrier)};
    }
    throw SchemaError("space: unknown kind '" + k + "'");
}

// ---- block groupoids --------------------------------------------------------

inline Json to_json(const BlockGroupoid& g) {
    Json blocks = Json::array();
    for (const Block& b : g.blocks)
        blocks.push_back(Json{{"set", to_json(b.set)}, {"z", to_json(b.zpart)}});
    Json arrows = Json::array();
    ArrowSet all = g.arrows();
    for (const ArrowAtom& a : all.atoms()) {
        Json pair = a.diag ? Json{{"diag", to_json(a.r)}}
                           : Json{{"rect", Json::array({to_json(a.r), to_json(a.d)})}};
        arrows.push_back(Json{{"pair", std::move(pair)}, {"z", to_json(a.z)}});
    }
    return Json{{"kind", "block"},
                {"base", to_json(g.base)},
                {"blocks", std::move(blocks)},
                {"residual_singletons", true},
                {"residual_z", to_json(g.residual_zpart)},
                {"group", g.has_z ? "Z" : "trivial"},
                {"arrows", std::move(arrows)}};
}

/// Decode a block groupoid.  Blocks falling outside the carrier are
/// clipped; in strict mode an out-of-carrier block is a schema error.
/// The "arrows" field, being derived data, is ignored on input.
inline BlockGroupoid groupoid_from_json(const Json& j, bool strict_carrier = false) {
    if (detail_ser::str_field(j, "kind") != "block")
        throw SchemaError("groupoid: only kind 'block' is supported here");
    BlockGroupoid g(space_from_json(detail_ser::field(j, "base")));
    std::string grp = detail_ser::str_field(j, "group");
    if (grp == "Z") g.has_z = true;
    else if (grp != "trivial") throw SchemaError("groupoid: unknown group '" + grp + "'");
    if (j.contains("residual_z"))
        g.residual_zpart = grpset_from_json(j.at("residual_z"));
    else if (g.has_z)
        g.residual_zpart = GrpSet::all();
    const Json& blocks = detail_ser::field(j, "blocks");
    if (!blocks.is_array()) throw SchemaError("groupoid: blocks must be an array");
    for (const Json& bj : blocks) {
        SymSet s = symset_from_json(detail_ser::field(bj, "set"));
        GrpSet z = bj.contains("z") ? grpset_from_json(bj.at("z"))
                                    : GrpSet::singleton(0);
        if (!s.subset_of(g.base.carrier)) {
            if (strict_carrier)
                throw SchemaError("groupoid: block " + s.str() +
                                  " leaves the carrier (strict mode)");
            s = s.intersect(g.base.carrier);
        }
        if (s.empty()) continue;
        g.blocks.push_back(Block{std::move(s), std::move(z)});
    }
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("groupoid: ") + e.what());
    }
    return g;
}

// ---- verdicts and profiles --------------------------------------------------

inline Json to_json(Verdict v) { return verdict_str(v); }

inline Json to_json(const Prop& p) {
    return Json{{"verdict", verdict_str(p.v)}, {"witness", p.witness}};
}

inline Json to_json(const PointFlags& f) {
    return Json{{"fixed", verdict_str(f.fixed)},
                {"periodic", verdict_str(f.periodic)},
                {"weakly_periodic", verdict_str(f.weakly_periodic)},
                {"almost_periodic", verdict_str(f.almost_periodic)},
                {"recurrent", verdict_str(f.recurrent)},
                {"nonwandering", verdict_str(f.nonwandering)},
                {"compact_orbit", verdict_str(f.compact_orbit)},
                {"weakly_transitive", verdict_str(f.weakly_transitive)}};
}

inline Json to_json(const TransitivityProfile& t) {
    return Json{{"transitive", to_json(t.transitive)},
                {"pointwise_transitive", to_json(t.pointwise_transitive)},
                {"weakly_pointwise_transitive", to_json(t.weakly_pointwise_transitive)},
                {"prop_i", to_json(t.prop_i)},
                {"prop_i_prime", to_json(t.prop_i_prime)},
                {"prop_ii", to_json(t.prop_ii)},
                {"prop_iii_recurrent_transitivity", to_json(t.prop_iii)},
                {"prop_iv_topological_transitivity", to_json(t.prop_iv)}};
}

inline Json to_json(const MixingProfile& m) {
    return Json{{"weak", to_json(m.weak)}, {"strong", to_json(m.strong)}};
}

} // namespace gdyn
