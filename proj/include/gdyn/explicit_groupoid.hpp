/**
 * @file explicit_groupoid.hpp
 * @brief Small groupoids given by explicit arrow tables: transformation
 *        groupoids of finite group actions, finite groups as one-unit
 *        groupoids, and groupoids of partial actions.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gdyn/finite.hpp"

namespace gdyn {

struct NotAnAction : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAPartialAction : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A finite group by its multiplication table.
struct FiniteGroup {
    int n = 1;
    std::vector<std::vector<int>> mult; ///< mult[a][b] = a*b
    int identity = 0;

    static FiniteGroup trivial() { return cyclic(1); }

    static FiniteGroup cyclic(int k) {
        FiniteGroup g;
        g.n = k;
        g.mult.assign(k, std::vector<int>(k));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) g.mult[a][b] = (a + b) % k;
        g.validate();
        return g;
    }

    int inverse(int a) const {
        for (int b = 0; b < n; ++b)
            if (mult[a][b] == identity) return b;
        throw std::logic_error("finite group: no inverse");
    }

    void validate() const {
        if (n <= 0 || (int)mult.size() != n)
            throw std::invalid_argument("finite group: bad table size");
        for (int a = 0; a < n; ++a) {
            if ((int)mult[a].size() != n)
                throw std::invalid_argument("finite group: bad table row");
            if (mult[identity][a] != a || mult[a][identity] != a)
                throw std::invalid_argument("finite group: identity broken");
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
                        throw std::invalid_argument("finite group: not associative");
        for (int a = 0; a < n; ++a) inverse(a);
    }
};

/// A groupoid as an explicit arrow table over a finite unit space.
struct ExplicitGroupoid {
    struct Arrow {
        int src = 0, dst = 0;
        int label = 0; ///< group element for (semi)direct constructions
    };
    FiniteSpace X;
    std::vector<Arrow> arrows;
    std::vector<int> unit_arrow;        ///< unit -> its identity arrow
    std::vector<int> inv;               ///< arrow -> inverse arrow
    std::vector<std::vector<int>> comp; ///< comp[i][j] = i after j, -1 undefined

    int arrow_count() const { return (int)arrows.size(); }

    std::vector<int> orbit_of(int x) const {
        std::vector<bool> seen(X.n, false);
        std::vector<int> out, stack{x};
        seen[x] = true;
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            out.push_back(y);
            for (const Arrow& a : arrows)
                if (a.src == y && !seen[a.dst]) {
                    seen[a.dst] = true;
                    stack.push_back(a.dst);
                }
        }
        return out;
    }

    bool transitive() const { return (int)orbit_of(0).size() == X.n; }

    /// True when the groupoid consists of its unit arrows only.
    bool is_trivial() const { return arrow_count() == X.n; }

    void validate() const {
        int m = arrow_count();
        if ((int)unit_arrow.size() != X.n || (int)inv.size() != m ||
            (int)comp.size() != m)
            throw std::invalid_argument("explicit groupoid: bad table sizes");
        for (int x = 0; x < X.n; ++x) {
            const Arrow& u = arrows[unit_arrow[x]];
            if (u.src != x || u.dst != x)
                throw std::invalid_argument("explicit groupoid: bad unit arrow");
        }
        for (int i = 0; i < m; ++i) {
            const Arrow &a = arrows[i], &b = arrows[inv[i]];
            if (b.src != a.dst || b.dst != a.src || inv[inv[i]] != i)
                throw std::invalid_argument("explicit groupoid: bad inversion");
            if (comp[i][unit_arrow[a.src]] != i || comp[unit_arrow[a.dst]][i] != i)
                throw std::invalid_argument("explicit groupoid: unit law broken");
            if (comp[inv[i]][i] != unit_arrow[a.src])
                throw std::invalid_argument("explicit groupoid: inverse law broken");
        }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                bool composable = arrows[i].src == arrows[j].dst;
                if ((comp[i][j] >= 0) != composable)
                    throw std::invalid_argument("explicit groupoid: composability broken");
                if (!composable) continue;
                const Arrow& c = arrows[comp[i][j]];
                if (c.src != arrows[j].src || c.dst != arrows[i].dst)
                    throw std::invalid_argument("explicit groupoid: legs broken");
                for (int k = 0; k < m; ++k)
                    if (arrows[j].src == arrows[k].dst &&
                        comp[comp[i][j]][k] != comp[i][comp[j][k]])
                        throw std::invalid_argument(
                            "explicit groupoid: not associative");
            }
    }
};

/**
 * The transformation groupoid of a finite group acting on a finite space by
 * homeomorphisms: arrows (a, x) from x to gamma_a(x), composed by
 * (b, gamma_a(x)) (a, x) = (ba, x).
 */
inline ExplicitGroupoid transformation_groupoid(const FiniteGroup& g,
                                                const FiniteSpace& X,
                                                const std::vector<std::vector<int>>& gamma) {
    g.validate();
    if ((int)gamma.size() != g.n) throw NotAnAction("one map per group element required");
    for (int a = 0; a < g.n; ++a) {
        if ((int)gamma[a].size() != X.n) throw NotAnAction("map not defined everywhere");
        std::vector<bool> hit(X.n, false);
        for (int x = 0; x < X.n; ++x) {
            int y = gamma[a][x];
            if (y < 0 || y >= X.n || hit[y]) throw NotAnAction("map not a bijection");
            hit[y] = true;
            if (gamma[g.identity][x] != x) throw NotAnAction("identity does not fix");
            for (int t = 0; t < X.n; ++t)
                if (((X.up[x] >> t) & 1) && !((X.up[y] >> gamma[a][t]) & 1))
                    throw NotAnAction("map not continuous");
        }
        for (int b = 0; b < g.n; ++b)
            for (int x = 0; x < X.n; ++x)
                if (gamma[a][gamma[b][x]] != gamma[g.mult[a][b]][x])
                    throw NotAnAction("composition law broken");
    }
    ExplicitGroupoid e;
    e.X = X;
    auto id_of = [&](int a, int x) { return a * X.n + x; };
    for (int a = 0; a < g.n; ++a)
        for (int x = 0; x < X.n; ++x)
            e.arrows.push_back({x, gamma[a][x], a});
    e.unit_arrow.resize(X.n);
    for (int x = 0; x < X.n; ++x) e.unit_arrow[x] = id_of(g.identity, x);
    int m = (int)e.arrows.size();
    e.inv.resize(m);
    e.comp.assign(m, std::vector<int>(m, -1));
    for (int a = 0; a < g.n; ++a)
        for (int x = 0; x < X.n; ++x)
            e.inv[id_of(a, x)] = id_of(g.inverse(a), gamma[a][x]);
    for (int b = 0; b < g.n; ++b)
        for (int a = 0; a < g.n; ++a)
            for (int x = 0; x < X.n; ++x)
                e.comp[id_of(b, gamma[a][x])][id_of(a, x)] = id_of(g.mult[b][a], x);
    e.validate();
    return e;
}

/// A finite group as a groupoid over a single unit.
inline ExplicitGroupoid group_as_groupoid(const FiniteGroup& g) {
    return transformation_groupoid(g, FiniteSpace::discrete(1),
                                   std::vector<std::vector<int>>(g.n, {0}));
}

/**
 * The groupoid of a partial action of a finite group: beta_a is a
 * homeomorphism from the open set Y_{a^{-1}} onto Y_a, beta_e is the
 * identity, and beta_a beta_b restricts beta_{ab}.  Arrows are the pairs
 * (a, y) with y in the domain of beta_a.
 */
inline ExplicitGroupoid partial_action_groupoid(const FiniteGroup& g,
                                                const FiniteSpace& Y,
                                                const std::vector<std::vector<int>>& beta) {
    g.validate();
    if ((int)beta.size() != g.n)
        throw NotAPartialAction("one partial map per group element required");
    auto in_dom = [&](int a, int y) { return beta[a][y] >= 0; };
    for (int a = 0; a < g.n; ++a) {
        if ((int)beta[a].size() != Y.n)
            throw NotAPartialAction("partial map on the wrong space");
        FiniteSpace::Mask dom = 0, img = 0;
        std::vector<bool> hit(Y.n, false);
        for (int y = 0; y < Y.n; ++y) {
            if (!in_dom(a, y)) continue;
            int t = beta[a][y];
            if (t >= Y.n || hit[t])
                throw NotAPartialAction("partial map not injective");
            hit[t] = true;
            dom |= FiniteSpace::Mask{1} << y;
            img |= FiniteSpace::Mask{1} << t;
        }
        if (!Y.is_open(dom) || !Y.is_open(img))
            throw NotAPartialAction("domain or image not open");
        // homeomorphism onto its image, in the subspace topologies
        for (int y = 0; y < Y.n; ++y) {
            if (!in_dom(a, y)) continue;
            for (int t = 0; t < Y.n; ++t) {
                if (!((Y.up[y] >> t) & 1) || !in_dom(a, t)) continue;
                if (!((Y.up[beta[a][y]] >> beta[a][t]) & 1))
                    throw NotAPartialAction("partial map not continuous");
                if (!((Y.up[beta[a][t]] >> beta[a][y]) & 1) &&
                    ((Y.up[t] >> y) & 1))
                    throw NotAPartialAction("partial map not open");
            }
        }
    }
    for (int y = 0; y < Y.n; ++y)
        if (beta[g.identity][y] != y)
            throw NotAPartialAction("identity element must act as the identity");
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int y = 0; y < Y.n; ++y) {
                if (!in_dom(b, y) || !in_dom(a, beta[b][y])) continue;
                int ab = g.mult[a][b];
                if (!in_dom(ab, y) || beta[ab][y] != beta[a][beta[b][y]])
                    throw NotAPartialAction(
                        "composite does not restrict the product map at point " +
                        std::to_string(y));
            }
    ExplicitGroupoid e;
    e.X = Y;
    std::vector<std::vector<int>> id_of(g.n, std::vector<int>(Y.n, -1));
    for (int a = 0; a < g.n; ++a)
        for (int y = 0; y < Y.n; ++y)
            if (in_dom(a, y)) {
                id_of[a][y] = (int)e.arrows.size();
                e.arrows.push_back({y, beta[a][y], a});
            }
    e.unit_arrow.resize(Y.n);
    for (int y = 0; y < Y.n; ++y) e.unit_arrow[y] = id_of[g.identity][y];
    int m = (int)e.arrows.size();
    e.inv.resize(m);
    e.comp.assign(m, std::vector<int>(m, -1));
    for (int a = 0; a < g.n; ++a)
        for (int y = 0; y < Y.n; ++y) {
            if (!in_dom(a, y)) continue;
            e.inv[id_of[a][y]] = id_of[g.inverse(a)][beta[a][y]];
            for (int b = 0; b < g.n; ++b)
                if (in_dom(b, beta[a][y]))
                    e.comp[id_of[b][beta[a][y]]][id_of[a][y]] =
                        id_of[g.mult[b][a]][y];
        }
    e.validate();
    return e;
}

/// A global action restricted to an open subset, as a partial action:
/// the domain of the restricted map for `a` is Y cap gamma_{a^{-1}}(Y).
inline std::vector<std::vector<int>> restrict_action_to(
    const FiniteGroup& g, const std::vector<std::vector<int>>& gamma,
    const std::vector<int>& subset /* new index -> old index, open set */) {
    std::vector<int> back((size_t)1 + (subset.empty()
                                           ? 0
                                           : *std::max_element(subset.begin(),
                                                               subset.end())),
                          -1);
    for (size_t i = 0; i < subset.size(); ++i) back[subset[i]] = (int)i;
    std::vector<std::vector<int>> beta(g.n, std::vector<int>(subset.size(), -1));
    for (int a = 0; a < g.n; ++a)
        for (size_t y = 0; y < subset.size(); ++y) {
            int img = gamma[a][subset[y]];
            if (img < (int)back.size() && back[img] >= 0) beta[a][y] = back[img];
        }
    return beta;
}

} // namespace gdyn
