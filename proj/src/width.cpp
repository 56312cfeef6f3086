#include "chroma/width.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "chroma/errors.hpp"
#include "chroma/families.hpp"
#include "chroma/minor.hpp"

namespace chroma {

using Mask = std::uint32_t;

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Components of the tree after removing node t: node -> component id (t itself -1).
std::vector<int> branches(int nodes, const std::vector<std::vector<int>>& tadj, int t) {
    std::vector<int> comp(nodes, -2);
    comp[t] = -1;
    int id = 0;
    for (int d : tadj[t]) {
        std::vector<int> st{d};
        comp[d] = id;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : tadj[x])
                if (comp[y] == -2) {
                    comp[y] = id;
                    st.push_back(y);
                }
        }
        ++id;
    }
    return comp;
}

// Elimination search: Q(S, v) are the vertices outside S + v reachable from v through S.
struct Elim {
    int n;
    std::vector<Mask> adj;
    Mask all;

    Mask q(Mask s, int v) const {
        Mask seen = Mask{1} << v, frontier = seen, out = 0;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
            out |= next & ~s & ~seen;
            next &= s & ~seen;
            seen |= next;
            frontier = next;
        }
        return out & ~(Mask{1} << v);
    }

    // Elimination order of width <= k, or empty when none exists.
    bool at_most(int k, std::vector<int>& order) const {
        std::vector<char> dead(std::size_t{1} << n, 0);
        order.clear();
        return dfs(0, k, dead, order);
    }

    bool dfs(Mask s, int k, std::vector<char>& dead, std::vector<int>& order) const {
        int rest = n - std::popcount(s);
        if (rest <= k + 1) {
            for (int v = 0; v < n; ++v)
                if (!(s >> v & 1)) order.push_back(v);
            return true;
        }
        if (dead[s]) return false;
        for (int v = 0; v < n; ++v) {
            if (s >> v & 1) continue;
            if (std::popcount(q(s, v)) > k) continue;
            order.push_back(v);
            if (dfs(s | Mask{1} << v, k, dead, order)) return true;
            order.pop_back();
        }
        dead[s] = 1;
        return false;
    }
};

Elim make_elim(const ColorfulGraph& g) {
    Elim e{g.n(), std::vector<Mask>(g.n(), 0), g.n() ? (g.n() == 32 ? ~Mask{0} : (Mask{1} << g.n()) - 1) : 0};
    for (int v = 0; v < g.n(); ++v)
        for (int w : g.neighbors(v)) e.adj[v] |= Mask{1} << w;
    return e;
}

void check_tw_cap(const ColorfulGraph& g, const Caps& caps) {
    if (g.n() > caps.tw_vertices || g.n() > 24)
        throw CapExceeded("treewidth limited to " + std::to_string(std::min(caps.tw_vertices, 24)) + " vertices");
}

// tw lower bound: the degeneracy.
int degeneracy(const Elim& e) {
    Mask alive = e.all;
    int best = 0;
    while (alive) {
        int pick = -1, deg = 1 << 30;
        for (Mask a = alive; a; a &= a - 1) {
            int v = std::countr_zero(a);
            int d = std::popcount(e.adj[v] & alive);
            if (d < deg) {
                deg = d;
                pick = v;
            }
        }
        best = std::max(best, deg);
        alive &= ~(Mask{1} << pick);
    }
    return best;
}

int tw_with_order(const Elim& e, std::vector<int>& order) {
    if (e.n == 0) {
        order.clear();
        return -1;
    }
    for (int k = degeneracy(e);; ++k)
        if (e.at_most(k, order)) return k;
}

}  // namespace

DecompositionReport validate_decomposition(const ColorfulGraph& g, const TreeDecomposition& d) {
    DecompositionReport r;
    int nodes = static_cast<int>(d.bags.size());
    if (nodes == 0) {
        r.valid = g.n() == 0;
        if (!r.valid) r.problem = "no bags";
        return r;
    }
    std::vector<std::vector<int>> tadj(nodes);
    for (auto [a, b] : d.edges) {
        if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) {
            r.problem = "bad tree edge";
            return r;
        }
        tadj[a].push_back(b);
        tadj[b].push_back(a);
    }
    {
        std::vector<bool> seen(nodes, false);
        std::vector<int> st{0};
        seen[0] = true;
        int reached = 1;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : tadj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    ++reached;
                    st.push_back(y);
                }
        }
        if (static_cast<int>(d.edges.size()) != nodes - 1 || reached != nodes) {
            r.problem = "not a tree";
            return r;
        }
    }
    std::vector<std::vector<int>> where(g.n());
    for (int t = 0; t < nodes; ++t)
        for (int v : d.bags[t]) {
            if (v < 0 || v >= g.n()) {
                r.problem = "bag " + std::to_string(t) + " has a missing vertex";
                return r;
            }
            where[v].push_back(t);
        }
    for (int v = 0; v < g.n(); ++v)
        if (where[v].empty()) {
            r.problem = "vertex " + std::to_string(v) + " is in no bag";
            return r;
        }
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (int t : where[u])
            if (std::find(d.bags[t].begin(), d.bags[t].end(), v) != d.bags[t].end()) ok = true;
        if (!ok) {
            r.problem = "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag";
            return r;
        }
    }
    for (int v = 0; v < g.n(); ++v) {
        std::set<int> in(where[v].begin(), where[v].end()), seen{where[v][0]};
        std::vector<int> st{where[v][0]};
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : tadj[x])
                if (in.count(y) && seen.insert(y).second) st.push_back(y);
        }
        if (seen.size() != in.size()) {
            r.problem = "bags containing vertex " + std::to_string(v) + " are not connected";
            return r;
        }
    }
    r.valid = true;
    for (auto& b : d.bags) r.width = std::max(r.width, static_cast<int>(sorted_unique(b).size()) - 1);
    for (auto [a, b] : d.edges) {
        auto x = sorted_unique(d.bags[a]), y = sorted_unique(d.bags[b]);
        std::vector<int> both;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
        r.adhesion = std::max(r.adhesion, static_cast<int>(both.size()));
    }
    return r;
}

ColorfulGraph torso(const ColorfulGraph& g, std::vector<int> X) {
    X = sorted_unique(X);
    std::vector<int> idx(g.n(), -1);
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (X[i] < 0 || X[i] >= g.n()) throw PreconditionError("torso set outside the graph");
        idx[X[i]] = static_cast<int>(i);
    }
    std::set<Edge> e;
    for (auto [u, v] : g.edges())
        if (idx[u] >= 0 && idx[v] >= 0) e.insert({idx[u], idx[v]});
    std::vector<bool> seen(g.n(), false);
    for (int s = 0; s < g.n(); ++s) {
        if (idx[s] >= 0 || seen[s]) continue;
        std::set<int> attach;
        std::vector<int> st{s};
        seen[s] = true;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int w : g.neighbors(v)) {
                if (idx[w] >= 0) attach.insert(idx[w]);
                else if (!seen[w]) {
                    seen[w] = true;
                    st.push_back(w);
                }
            }
        }
        for (int a : attach)
            for (int b : attach)
                if (a < b) e.insert({a, b});
    }
    std::vector<Palette> pal;
    for (int x : X) pal.push_back(g.palette(x));
    return ColorfulGraph(static_cast<int>(X.size()), g.q(), std::vector<Edge>(e.begin(), e.end()), pal);
}

ColorfulGraph colorful_torso(const ColorfulGraph& g, const TreeDecomposition& d, int t) {
    auto rep = validate_decomposition(g, d);
    if (!rep.valid) throw PreconditionError("invalid decomposition: " + rep.problem);
    int nodes = static_cast<int>(d.bags.size());
    if (t < 0 || t >= nodes) throw PreconditionError("node outside the tree");
    std::vector<std::vector<int>> tadj(nodes);
    for (auto [a, b] : d.edges) {
        tadj[a].push_back(b);
        tadj[b].push_back(a);
    }
    auto bag = sorted_unique(d.bags[t]);
    std::vector<int> idx(g.n(), -1);
    for (std::size_t i = 0; i < bag.size(); ++i) idx[bag[i]] = static_cast<int>(i);
    std::set<Edge> e;
    for (auto [u, v] : g.edges())
        if (idx[u] >= 0 && idx[v] >= 0) e.insert({idx[u], idx[v]});
    std::vector<Palette> pal;
    for (int v : bag) pal.push_back(g.palette(v));
    auto comp = branches(nodes, tadj, t);
    for (std::size_t i = 0; i < tadj[t].size(); ++i) {
        int dn = tadj[t][i];
        std::vector<int> adhesion;
        for (int v : d.bags[dn])
            if (idx[v] >= 0) adhesion.push_back(idx[v]);
        adhesion = sorted_unique(adhesion);
        Palette beyond = 0;
        for (int h = 0; h < nodes; ++h)
            if (comp[h] == static_cast<int>(i))
                for (int v : d.bags[h])
                    if (idx[v] < 0) beyond |= g.palette(v);
        for (int a : adhesion) {
            pal[a] |= beyond;
            for (int b : adhesion)
                if (a < b) e.insert({a, b});
        }
    }
    return ColorfulGraph(static_cast<int>(bag.size()), g.q(), std::vector<Edge>(e.begin(), e.end()), pal);
}

int treewidth_exact(const ColorfulGraph& g, const Caps& caps) {
    check_tw_cap(g, caps);
    std::vector<int> order;
    return tw_with_order(make_elim(g), order);
}

TreeDecomposition treewidth_decomposition(const ColorfulGraph& g, const Caps& caps) {
    check_tw_cap(g, caps);
    Elim e = make_elim(g);
    std::vector<int> order;
    tw_with_order(e, order);
    TreeDecomposition d;
    int n = g.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    Mask s = 0;
    std::vector<int> parent(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        Mask q = e.q(s, v);
        std::vector<int> bag{v};
        int first = -1;
        for (Mask m = q; m; m &= m - 1) {
            int w = std::countr_zero(m);
            bag.push_back(w);
            if (first < 0 || pos[w] < pos[first]) first = w;
        }
        std::sort(bag.begin(), bag.end());
        d.bags.push_back(bag);
        parent[i] = first < 0 ? -1 : pos[first];
        s |= Mask{1} << v;
    }
    int last_root = -1;
    for (int i = 0; i < n; ++i) {
        if (parent[i] >= 0) d.edges.emplace_back(i, parent[i]);
        else {
            if (last_root >= 0) d.edges.emplace_back(last_root, i);
            last_root = i;
        }
    }
    return d;
}

bool validate_restricted_leaf_decomposition(const ColorfulGraph& g, const TreeDecomposition& d, int s) {
    auto rep = validate_decomposition(g, d);
    if (!rep.valid) return false;
    if (rep.adhesion > s) return false;
    for (auto& b : d.bags)
        if (static_cast<int>(sorted_unique(b).size()) > s) return false;
    int nodes = static_cast<int>(d.bags.size());
    std::vector<std::vector<int>> tadj(nodes);
    for (auto [a, b] : d.edges) {
        tadj[a].push_back(b);
        tadj[b].push_back(a);
    }
    for (int l : d.leaves) {
        if (l < 0 || l >= nodes || tadj[l].size() > 1) return false;
        std::set<int> other;
        if (!tadj[l].empty()) other.insert(d.bags[tadj[l][0]].begin(), d.bags[tadj[l][0]].end());
        std::vector<int> priv;
        for (int v : sorted_unique(d.bags[l]))
            if (!other.count(v)) priv.push_back(v);
        if (!is_restricted(g.induced(priv))) return false;
    }
    return true;
}

bool restricted_outside(const ColorfulGraph& g, const std::vector<int>& X) {
    std::vector<bool> in(g.n(), false);
    for (int x : X) in[x] = true;
    std::vector<bool> seen(g.n(), false);
    Palette all = full_palette(g.q());
    for (int s = 0; s < g.n(); ++s) {
        if (in[s] || seen[s]) continue;
        Palette c = 0;
        std::vector<int> st{s};
        seen[s] = true;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            c |= g.palette(v);
            for (int w : g.neighbors(v))
                if (!in[w] && !seen[w]) {
                    seen[w] = true;
                    st.push_back(w);
                }
        }
        if (c == all) return false;
    }
    return true;
}

RtwResult rtw_exact(const ColorfulGraph& g, const Caps& caps) {
    check_tw_cap(g, caps);
    int n = g.n();
    int tw = treewidth_exact(g, caps);
    std::vector<int> all_v(n);
    for (int v = 0; v < n; ++v) all_v[v] = v;
    if (g.q() == 0) return {tw, all_v};
    // Candidates that leave only restricted components, by increasing mask.
    std::vector<Mask> candidates;
    for (Mask x = 0; x < (Mask{1} << n); ++x) {
        std::vector<int> X;
        for (int v = 0; v < n; ++v)
            if (x >> v & 1) X.push_back(v);
        if (restricted_outside(g, X)) candidates.push_back(x);
    }
    auto members = [&](Mask x) {
        std::vector<int> X;
        for (int v = 0; v < n; ++v)
            if (x >> v & 1) X.push_back(v);
        return X;
    };
    for (int k = -1; k <= tw; ++k)
        for (Mask x : candidates) {
            int size = std::popcount(x);
            if (k == -1) {
                if (size == 0) return {-1, {}};
                continue;
            }
            if (size == 0) continue;
            ColorfulGraph t = torso(g, members(x));
            // A graph of treewidth k has at most k|V| - k(k+1)/2 edges.
            if (t.m() > static_cast<long long>(k) * t.n() - static_cast<long long>(k) * (k + 1) / 2 && t.n() > k)
                continue;
            Elim e = make_elim(t);
            if (degeneracy(e) > k) continue;
            std::vector<int> order;
            if (e.at_most(k, order)) {
                if (k > tw) throw std::logic_error("rtw exceeds tw");
                return {k, members(x)};
            }
        }
    // X = V(g) always qualifies with the torso g itself.
    return {tw, all_v};
}

RtwResult srtw_exact(const ColorfulGraph& g, const Caps& caps) { return rtw_exact(fusion(g), caps); }

namespace {

template <class Make>
int largest(const ColorfulGraph& g, Make make, const Caps& caps) {
    int k = 0;
    while (true) {
        ColorfulGraph p = make(k + 1);
        if (p.n() > g.n() || !contains_colorful_minor(g, p, caps)) return k;
        ++k;
    }
}

}  // namespace

int hadwiger_number(const ColorfulGraph& g, const Caps& caps) {
    ColorfulGraph u(g.n(), 0, g.edges());
    return largest(u, [](int k) { return complete_graph(k); }, caps);
}

int rainbow_hadwiger(const ColorfulGraph& g, const Caps& caps) {
    return largest(g, [&](int k) { return rainbow(g.q(), complete_graph(k, g.q())); }, caps);
}

int strong_rainbow_hadwiger(const ColorfulGraph& g, const Caps& caps) { return rainbow_hadwiger(fusion(g), caps); }

int bidimensionality(const ColorfulGraph& g, const std::vector<int>& X, const Caps& caps) {
    std::vector<Palette> pal(g.n(), 0);
    for (int x : X) {
        if (x < 0 || x >= g.n()) throw PreconditionError("annotated vertex outside the graph");
        pal[x] = 1;
    }
    ColorfulGraph a(g.n(), 1, g.edges(), pal);
    return largest(a, [](int k) { return rainbow(1, make_grid(k, k).with_q(1)); }, caps);
}

int sbsg(const ColorfulGraph& g, const Caps& caps) {
    return largest(fusion(g), [](int k) { return segregated_grid({1, k, {1}}); }, caps);
}

std::string star_violation(const ColorfulGraph& g, const StarDecomposition& s) {
    auto rep = validate_decomposition(g, as_tree_decomposition(s));
    if (!rep.valid) return rep.problem;
    std::set<int> center(s.center.begin(), s.center.end());
    for (int v = 0; v < g.n(); ++v)
        if (g.palette(v) && !center.count(v)) return "colored vertex " + std::to_string(v) + " outside the center";
    for (std::size_t i = 0; i < s.leaves.size(); ++i) {
        std::vector<int> priv;
        for (int v : sorted_unique(s.leaves[i]))
            if (!center.count(v)) priv.push_back(v);
        if (components(g.induced(priv)).size() > 1)
            return "leaf " + std::to_string(i) + " minus the center is disconnected";
    }
    return {};
}

TreeDecomposition as_tree_decomposition(const StarDecomposition& s) {
    TreeDecomposition d;
    d.bags.push_back(s.center);
    for (std::size_t i = 0; i < s.leaves.size(); ++i) {
        d.bags.push_back(s.leaves[i]);
        d.edges.emplace_back(0, static_cast<int>(i) + 1);
    }
    d.root = 0;
    return d;
}

int star_p_width(const ColorfulGraph& g, const StarDecomposition& s, WidthParameter p, const Caps& caps) {
    std::string bad = star_violation(g, s);
    if (!bad.empty()) throw PreconditionError("invalid star decomposition: " + bad);
    ColorfulGraph t = torso(g, s.center);
    int best = p == WidthParameter::tw ? treewidth_exact(t, caps) : hadwiger_number(t, caps);
    std::set<int> center(s.center.begin(), s.center.end());
    for (auto& leaf : s.leaves) {
        int common = 0;
        for (int v : sorted_unique(leaf)) common += center.count(v);
        best = std::max(best, common);
    }
    return best;
}

}  // namespace chroma
