/**
 * @file finite.hpp
 * @brief Finite and hybrid instances: Alexandrov topologies on finite point
 *        sets, groupoids given by a pair relation with eventually periodic
 *        integer cocycle sets, actions on finite total spaces, and the
 *        standard constructors (equivalence relations, products with Z,
 *        Deaconu-Renault groupoids of finite self-maps, pull-backs,
 *        rotation extensions).
 *
 * These types are deliberately independent of the symbolic decision
 * procedures: everything here is plain data plus exhaustive enumeration
 * helpers, so a brute-force evaluator built on top of them constitutes an
 * independent reference semantics.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdyn/grpset.hpp"

namespace gdyn {

/// A finite topological space: Alexandrov topology generated by a preorder,
/// stored as the minimal open set of every point.  Subsets are bitmasks.
struct FiniteSpace {
    int n = 0;
    std::vector<std::uint32_t> up; ///< up[i] = minimal open set containing i

    using Mask = std::uint32_t;

    static FiniteSpace discrete(int n) {
        FiniteSpace s;
        s.n = n;
        s.up.resize(n);
        for (int i = 0; i < n; ++i) s.up[i] = Mask{1} << i;
        return s;
    }

    /// Build from a reflexive relation (i <= j encoded as leq[i*n+j]); the
    /// transitive closure is taken, so any reflexive seed is accepted.
    static FiniteSpace from_preorder(int n, std::vector<bool> leq) {
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (leq[i * n + k] && leq[k * n + j]) leq[i * n + j] = true;
        FiniteSpace s;
        s.n = n;
        s.up.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            s.up[i] |= Mask{1} << i;
            for (int j = 0; j < n; ++j)
                if (leq[i * n + j]) s.up[i] |= Mask{1} << j;
        }
        return s;
    }

    Mask all() const { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
    bool is_open(Mask a) const {
        for (int i = 0; i < n; ++i)
            if ((a >> i) & 1 && (up[i] & ~a)) return false;
        return true;
    }
    Mask interior(Mask a) const {
        Mask r = 0;
        for (int i = 0; i < n; ++i)
            if ((a >> i) & 1 && !(up[i] & ~a)) r |= Mask{1} << i;
        return r;
    }
    Mask closure(Mask a) const {
        Mask r = 0;
        for (int i = 0; i < n; ++i)
            if (up[i] & a) r |= Mask{1} << i;
        return r;
    }
    bool is_closed(Mask a) const { return closure(a) == a; }
    bool dense(Mask a) const { return closure(a) == all(); }
    bool nowhere_dense(Mask a) const { return interior(closure(a)) == 0; }
    bool hausdorff() const {
        for (int i = 0; i < n; ++i)
            if (up[i] != (Mask{1} << i)) return false;
        return true;
    }
    /// All open subsets, ascending by mask value (deterministic order).
    std::vector<Mask> opens() const {
        std::vector<Mask> out;
        for (Mask a = 0; a <= all(); ++a) {
            if (is_open(a)) out.push_back(a);
            if (a == all()) break;
        }
        return out;
    }
};

/**
 * @brief A groupoid over a finite unit space, with arrow set
 *        {(x,y,n) | n in z(x,y)}: d(x,y,n)=y, r(x,y,n)=x,
 *        (x,y,n)(y,w,k)=(x,w,n+k), (x,y,n)^{-1}=(y,x,-n).
 *
 * The topology on arrows is the product of the unit-space topology on the
 * pair part with the discrete topology on the integers; a subset is
 * relatively compact exactly when all its integer parts are finite.
 */
struct HybridGroupoid {
    FiniteSpace X;
    std::vector<GrpSet> z; ///< row-major n*n, z[x*n+y]

    int n() const { return X.n; }
    const GrpSet& zat(int x, int y) const { return z[x * X.n + y]; }
    GrpSet& zat(int x, int y) { return z[x * X.n + y]; }

    void validate() const {
        int m = X.n;
        if ((int)z.size() != m * m) throw std::invalid_argument("hybrid: bad table size");
        for (int x = 0; x < m; ++x) {
            if (!zat(x, x).contains(0))
                throw std::invalid_argument("hybrid: missing unit arrow");
            for (int y = 0; y < m; ++y) {
                if (zat(x, y).negate() != zat(y, x))
                    throw std::invalid_argument("hybrid: inversion broken");
                for (int w = 0; w < m; ++w) {
                    if (zat(x, y).empty() || zat(y, w).empty()) continue;
                    if (!zat(x, y).sum(zat(y, w)).subset_of(zat(x, w)))
                        throw std::invalid_argument("hybrid: composition escapes");
                }
            }
        }
    }

    // ---- constructors -----------------------------------------------------

    /// Equivalence relation given by a block id per point, trivial group.
    static HybridGroupoid equivalence(FiniteSpace sp, const std::vector<int>& block_id) {
        HybridGroupoid g;
        g.X = std::move(sp);
        int m = g.X.n;
        g.z.assign(m * m, GrpSet::empty_set());
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                if (block_id[x] == block_id[y]) g.zat(x, y) = GrpSet::singleton(0);
        g.validate();
        return g;
    }

    static HybridGroupoid pair_groupoid(FiniteSpace sp) {
        std::vector<int> ids(sp.n, 0);
        return equivalence(std::move(sp), ids);
    }
    static HybridGroupoid trivial(FiniteSpace sp) {
        std::vector<int> ids(sp.n);
        std::iota(ids.begin(), ids.end(), 0);
        return equivalence(std::move(sp), ids);
    }

    HybridGroupoid product_with_z() const {
        HybridGroupoid g = *this;
        for (auto& s : g.z)
            if (!s.empty()) s = GrpSet::all();
        g.validate();
        return g;
    }

    /// Deaconu-Renault groupoid of a (total) self-map of a finite discrete
    /// set: z(x,y) = {k-l : nu^k(x)=nu^l(y)}, computed exactly through the
    /// eventual periodicity of forward orbits.
    static HybridGroupoid deaconu_renault(const std::vector<int>& nu) {
        int m = (int)nu.size();
        HybridGroupoid g;
        g.X = FiniteSpace::discrete(m);
        g.z.assign(m * m, GrpSet::empty_set());
        // forward orbit data: entry time into the cycle and position on it
        std::vector<int> cyc_id(m, -1), cyc_pos(m, 0), cyc_len(m, 0), entry(m, 0);
        {
            // find all cycle points
            std::vector<int> state(m, 0); // 0 unseen, 1 on stack, 2 done
            std::vector<int> oncycle(m, 0);
            for (int s = 0; s < m; ++s) {
                int x = s;
                std::vector<int> path;
                while (state[x] == 0) {
                    state[x] = 1;
                    path.push_back(x);
                    x = nu[x];
                }
                if (state[x] == 1) { // found a new cycle through x
                    bool in = false;
                    for (int p : path) {
                        if (p == x) in = true;
                        if (in) oncycle[p] = 1;
                    }
                }
                for (int p : path) state[p] = 2;
            }
            int nextid = 0;
            std::vector<int> id_of(m, -1);
            for (int s = 0; s < m; ++s) {
                if (!oncycle[s] || id_of[s] >= 0) continue;
                int len = 0, x = s;
                do {
                    id_of[x] = nextid;
                    x = nu[x];
                    ++len;
                } while (x != s);
                x = s;
                for (int p = 0; p < len; ++p) {
                    cyc_pos[x] = p;
                    cyc_len[x] = len;
                    x = nu[x];
                }
                ++nextid;
            }
            for (int s = 0; s < m; ++s) {
                int x = s, t = 0;
                while (!oncycle[x]) {
                    x = nu[x];
                    ++t;
                }
                cyc_id[s] = id_of[x];
                entry[s] = t;
                cyc_pos[s] = cyc_pos[x];
                cyc_len[s] = cyc_len[x];
            }
        }
        for (int x = 0; x < m; ++x) {
            for (int y = 0; y < m; ++y) {
                if (cyc_id[x] != cyc_id[y]) continue;
                int c = cyc_len[x];
                // on-cycle part: k >= entry[x], l >= entry[y] realize the
                // full residue class of (entry difference corrected by cycle
                // positions) modulo the cycle length
                long long d = ((long long)entry[x] - cyc_pos[x]) -
                              ((long long)entry[y] - cyc_pos[y]);
                GrpSet s = GrpSet::subgroup(c).translate(GrpSet::Int(((d % c) + c) % c));
                // sporadic pre-cycle coincidences
                int bound = 2 * m + 2;
                std::vector<int> fx(bound + 1), fy(bound + 1);
                fx[0] = x;
                fy[0] = y;
                for (int k = 1; k <= bound; ++k) {
                    fx[k] = nu[fx[k - 1]];
                    fy[k] = nu[fy[k - 1]];
                }
                for (int k = 0; k <= bound; ++k)
                    for (int l = 0; l <= bound; ++l)
                        if (fx[k] == fy[l]) s = s.unite(GrpSet::singleton(k - l));
                g.zat(x, y) = s;
            }
        }
        g.validate();
        return g;
    }

    /// Pull-back along a surjection h: Omega -> X with finite fibers; the
    /// result is the groupoid over Omega with z'(w,w') = z(h(w),h(w')).
    HybridGroupoid pullback(const FiniteSpace& omega, const std::vector<int>& h) const {
        int m = omega.n;
        std::vector<bool> hit(X.n, false);
        for (int w = 0; w < m; ++w) hit[h[w]] = true;
        for (bool b : hit)
            if (!b) throw std::invalid_argument("pullback: h not surjective");
        HybridGroupoid g;
        g.X = omega;
        g.z.assign(m * m, GrpSet::empty_set());
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) g.zat(a, b) = zat(h[a], h[b]);
        g.validate();
        return g;
    }

    std::string str() const {
        std::string out;
        for (int x = 0; x < X.n; ++x)
            for (int y = 0; y < X.n; ++y)
                if (!zat(x, y).empty())
                    out += "(" + std::to_string(x) + "," + std::to_string(y) +
                           "):" + zat(x, y).to_string() + " ";
        return out;
    }
};

/// A subset of a hybrid groupoid's arrows: one GrpSet per ordered pair.
struct HybridArrows {
    int n = 0;
    std::vector<GrpSet> z;

    static HybridArrows none(int n) {
        HybridArrows a;
        a.n = n;
        a.z.assign(n * n, GrpSet::empty_set());
        return a;
    }
    const GrpSet& at(int x, int y) const { return z[x * n + y]; }
    GrpSet& at(int x, int y) { return z[x * n + y]; }
    bool empty() const {
        for (const auto& s : z)
            if (!s.empty()) return false;
        return true;
    }
    bool operator==(const HybridArrows& o) const { return n == o.n && z == o.z; }
    HybridArrows unite(const HybridArrows& o) const {
        HybridArrows r = *this;
        for (size_t i = 0; i < z.size(); ++i) r.z[i] = r.z[i].unite(o.z[i]);
        return r;
    }
    HybridArrows intersect(const HybridArrows& o) const {
        HybridArrows r = *this;
        for (size_t i = 0; i < z.size(); ++i) r.z[i] = r.z[i].intersect(o.z[i]);
        return r;
    }
    HybridArrows subtract(const HybridArrows& o) const {
        HybridArrows r = *this;
        for (size_t i = 0; i < z.size(); ++i) r.z[i] = r.z[i].subtract(o.z[i]);
        return r;
    }
    bool subset_of(const HybridArrows& o) const {
        for (size_t i = 0; i < z.size(); ++i)
            if (!z[i].subset_of(o.z[i])) return false;
        return true;
    }
    HybridArrows invert() const {
        HybridArrows r = none(n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) r.at(y, x) = at(x, y).negate();
        return r;
    }
    HybridArrows compose(const HybridArrows& o) const {
        HybridArrows r = none(n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int w = 0; w < n; ++w) {
                    if (at(x, y).empty() || o.at(y, w).empty()) continue;
                    r.at(x, w) = r.at(x, w).unite(at(x, y).sum(o.at(y, w)));
                }
        return r;
    }
    /// Finitely many arrows?
    bool finite() const {
        for (const auto& s : z)
            if (!s.is_finite()) return false;
        return true;
    }
    std::string str() const {
        std::string out;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (!at(x, y).empty())
                    out += "(" + std::to_string(x) + "," + std::to_string(y) +
                           "):" + at(x, y).to_string() + " ";
        return out.empty() ? "{}" : out;
    }
};

/**
 * @brief An action of a hybrid groupoid on a finite total space.
 *
 * Every point s of the total space sits over the unit anchor[s].  An arrow
 * (x,y,n) acts on the fiber over y through a bijection onto the fiber over
 * x that depends on n only through its residue modulo `period`; the
 * bijections are stored explicitly in `table`.  All axioms (units,
 * composition over realized residues, bijectivity, continuity of the
 * anchor) are validated exhaustively.
 *
 * period = 1 with the total space equal to the unit space recovers the
 * canonical action.
 */
struct HybridAction {
    HybridGroupoid g;
    FiniteSpace sigma;
    std::vector<int> anchor; ///< rho: Sigma -> X
    int period = 1;
    /// table[(x*n+y)*period + n0][s] = image of s under (x,y,n) with
    /// n = n0 (mod period); -1 outside the fiber over y.
    std::vector<std::vector<int>> table;

    using Mask = FiniteSpace::Mask;

    int slot(int x, int y, long long nn) const {
        int n0 = (int)(((nn % period) + period) % period);
        return (x * g.X.n + y) * period + n0;
    }

    /// theta_(x,y,n)(s) for rho(s)=y.
    int act(int x, int y, GrpSet::Int nn, int s) const {
        int t = table[slot(x, y, nn)][s];
        if (t < 0) throw std::logic_error("hybrid action: applied outside fiber");
        return t;
    }

    Mask fiber(int x) const {
        Mask r = 0;
        for (int s = 0; s < sigma.n; ++s)
            if (anchor[s] == x) r |= Mask{1} << s;
        return r;
    }

    /// Residues modulo `period` realized by z(x,y).
    std::vector<int> residues(int x, int y) const {
        std::vector<int> out;
        for (int n0 = 0; n0 < period; ++n0)
            if (!g.zat(x, y).intersect(GrpSet::subgroup(period).translate(n0)).empty())
                out.push_back(n0);
        return out;
    }

    /// Canonical action on the unit space.
    static HybridAction canonical(HybridGroupoid gg) {
        HybridAction a;
        a.sigma = gg.X;
        a.g = std::move(gg);
        a.anchor.resize(a.sigma.n);
        std::iota(a.anchor.begin(), a.anchor.end(), 0);
        a.period = 1;
        int n = a.g.X.n;
        a.table.assign(n * n, std::vector<int>(n, -1));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (!a.g.zat(x, y).empty()) a.table[x * n + y][y] = x;
        a.validate();
        return a;
    }

    /// Rotation extension: fibers of size m over every unit; the arrow
    /// (x,y,n) sends fiber position p to p + delta[x] - delta[y] + twist*n
    /// (mod m).  The total space topology lifts the base preorder
    /// position-preservingly, so fibers stay discrete.
    static HybridAction rotation_extension(HybridGroupoid gg, int m, int twist,
                                           const std::vector<int>& delta) {
        HybridAction a;
        a.g = std::move(gg);
        int nx = a.g.X.n;
        a.period = m;
        a.sigma.n = nx * m;
        a.sigma.up.assign(nx * m, 0);
        a.anchor.resize(nx * m);
        for (int x = 0; x < nx; ++x)
            for (int p = 0; p < m; ++p) {
                int s = x * m + p;
                a.anchor[s] = x;
                for (int y = 0; y < nx; ++y)
                    if ((a.g.X.up[x] >> y) & 1) a.sigma.up[s] |= Mask{1} << (y * m + p);
            }
        a.table.assign((size_t)nx * nx * m, std::vector<int>(nx * m, -1));
        for (int x = 0; x < nx; ++x)
            for (int y = 0; y < nx; ++y) {
                if (a.g.zat(x, y).empty()) continue;
                for (int n0 = 0; n0 < m; ++n0)
                    for (int p = 0; p < m; ++p) {
                        int q = (int)((((long long)p + delta[x] - delta[y] +
                                        (long long)twist * n0) %
                                           m +
                                       m) %
                                      m);
                        a.table[a.slot(x, y, n0)][y * m + p] = x * m + q;
                    }
            }
        a.validate();
        return a;
    }

    void validate() const {
        g.validate();
        if (sigma.n > 30) throw std::invalid_argument("hybrid action: too large");
        int nx = g.X.n;
        std::vector<bool> hit(nx, false);
        for (int s = 0; s < sigma.n; ++s) hit[anchor[s]] = true;
        for (bool b : hit)
            if (!b) throw std::invalid_argument("hybrid action: anchor not onto");
        // anchor continuity and openness against the minimal neighborhoods
        for (int s = 0; s < sigma.n; ++s) {
            Mask img = 0;
            for (int t = 0; t < sigma.n; ++t)
                if ((sigma.up[s] >> t) & 1) img |= Mask{1} << anchor[t];
            if (!g.X.is_open(img))
                throw std::invalid_argument("hybrid action: anchor not open");
            for (int t = 0; t < sigma.n; ++t)
                if ((sigma.up[s] >> t) & 1 && !((g.X.up[anchor[s]] >> anchor[t]) & 1))
                    throw std::invalid_argument("hybrid action: anchor not continuous");
        }
        // arrow maps: bijections between the correct fibers, unit law, and
        // the composition law over every realized pair of residues
        for (int x = 0; x < nx; ++x)
            for (int y = 0; y < nx; ++y) {
                if (g.zat(x, y).empty()) continue;
                for (int n0 : residues(x, y)) {
                    const auto& row = table[(x * nx + y) * (size_t)period + n0];
                    std::vector<bool> used(sigma.n, false);
                    for (int s = 0; s < sigma.n; ++s) {
                        if (anchor[s] != y) {
                            if (row[s] >= 0)
                                throw std::invalid_argument("hybrid action: stray image");
                            continue;
                        }
                        int t = row[s];
                        if (t < 0 || anchor[t] != x || used[t])
                            throw std::invalid_argument("hybrid action: not a fiber bijection");
                        used[t] = true;
                    }
                }
            }
        for (int s = 0; s < sigma.n; ++s)
            if (act(anchor[s], anchor[s], 0, s) != s)
                throw std::invalid_argument("hybrid action: unit law broken");
        for (int x = 0; x < nx; ++x)
            for (int y = 0; y < nx; ++y) {
                if (g.zat(x, y).empty()) continue;
                for (int w = 0; w < nx; ++w) {
                    if (g.zat(y, w).empty()) continue;
                    for (int n0 : residues(x, y))
                        for (int k0 : residues(y, w))
                            for (int s = 0; s < sigma.n; ++s) {
                                if (anchor[s] != w) continue;
                                if (act(x, y, n0, act(y, w, k0, s)) !=
                                    act(x, w, (long long)n0 + k0, s))
                                    throw std::invalid_argument(
                                        "hybrid action: composition law broken");
                            }
                }
            }
    }
};

/// Result of restricting an action to the points over a set of units.
struct ActionRestriction {
    HybridAction action;
    std::vector<int> unit_map;  ///< old unit -> new unit (-1 outside)
    std::vector<int> point_map; ///< old point -> new point (-1 outside)
};

/// Non-invariant restriction to the units in `unit_mask` (the groupoid keeps
/// the arrows with both legs inside, the total space keeps the points
/// anchored there, with the subspace topology).
inline ActionRestriction restrict_units(const HybridAction& src,
                                        FiniteSpace::Mask unit_mask) {
    using Mask = FiniteSpace::Mask;
    ActionRestriction r;
    r.unit_map.assign(src.g.X.n, -1);
    r.point_map.assign(src.sigma.n, -1);
    std::vector<int> units_back, points_back;
    for (int x = 0; x < src.g.X.n; ++x)
        if ((unit_mask >> x) & 1) {
            r.unit_map[x] = (int)units_back.size();
            units_back.push_back(x);
        }
    for (int s = 0; s < src.sigma.n; ++s)
        if ((unit_mask >> src.anchor[s]) & 1) {
            r.point_map[s] = (int)points_back.size();
            points_back.push_back(s);
        }
    HybridAction& a = r.action;
    int nu = (int)units_back.size(), np = (int)points_back.size();
    a.g.X.n = nu;
    a.g.X.up.assign(nu, 0);
    for (int x = 0; x < nu; ++x)
        for (int y = 0; y < nu; ++y)
            if ((src.g.X.up[units_back[x]] >> units_back[y]) & 1)
                a.g.X.up[x] |= Mask{1} << y;
    a.g.z.assign(nu * nu, GrpSet::empty_set());
    for (int x = 0; x < nu; ++x)
        for (int y = 0; y < nu; ++y)
            a.g.zat(x, y) = src.g.zat(units_back[x], units_back[y]);
    a.sigma.n = np;
    a.sigma.up.assign(np, 0);
    a.anchor.resize(np);
    for (int s = 0; s < np; ++s) {
        a.anchor[s] = r.unit_map[src.anchor[points_back[s]]];
        for (int t = 0; t < np; ++t)
            if ((src.sigma.up[points_back[s]] >> points_back[t]) & 1)
                a.sigma.up[s] |= Mask{1} << t;
    }
    a.period = src.period;
    a.table.assign((size_t)nu * nu * src.period, std::vector<int>(np, -1));
    for (int x = 0; x < nu; ++x)
        for (int y = 0; y < nu; ++y)
            for (int n0 = 0; n0 < src.period; ++n0) {
                const auto& old_row =
                    src.table[((size_t)units_back[x] * src.g.X.n + units_back[y]) *
                                  src.period +
                              n0];
                auto& row = a.table[((size_t)x * nu + y) * src.period + n0];
                for (int s = 0; s < np; ++s) {
                    int img = old_row[points_back[s]];
                    if (img >= 0) row[s] = r.point_map[img];
                }
            }
    return r;
}

} // namespace gdyn
