#include "chroma/rooted.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "chroma/errors.hpp"
#include "chroma/minor.hpp"

namespace chroma {

namespace {

bool is_minor(const ColorfulGraph& host, const std::vector<int>& hroots, const ColorfulGraph& h,
              const std::vector<int>& roots, const Caps& caps) {
    return find_rooted_minor({host, hroots}, {h, roots}, caps).has_value();
}

// Set partitions of {0..k-1} as block labels in restricted-growth form.
void root_partitions(int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    int top = cur.empty() ? 0 : *std::max_element(cur.begin(), cur.end()) + 1;
    for (int b = 0; b <= top; ++b) {
        cur.push_back(b);
        root_partitions(k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<FolioEntry> compute_d_folio(const ColorfulGraph& host, std::vector<int> Z, int d, const Caps& caps) {
    std::sort(Z.begin(), Z.end());
    Z.erase(std::unique(Z.begin(), Z.end()), Z.end());
    for (int z : Z)
        if (z < 0 || z >= host.n()) throw PreconditionError("root outside the graph");
    if (d < 0) throw PreconditionError("detail must be non-negative");
    int k = static_cast<int>(Z.size());
    if (k > caps.folio_roots || d > caps.folio_detail || host.n() > caps.folio_host)
        throw CapExceeded("folio limited to |Z| <= " + std::to_string(caps.folio_roots) + ", d <= " +
                          std::to_string(caps.folio_detail) + ", |host| <= " + std::to_string(caps.folio_host));
    std::map<CanonicalForm, FolioEntry> found;
    std::deque<FolioEntry> queue;
    auto consider = [&](const ColorfulGraph& g, const std::vector<int>& roots) {
        CanonicalForm f = rooted_canonical_form(g, roots, caps);
        if (found.count(f)) return;
        if (!is_minor(host, Z, g, roots, caps)) return;
        FolioEntry e{g, roots, f};
        found.emplace(f, e);
        queue.push_back(e);
    };
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    root_partitions(k, cur, parts);
    for (auto& p : parts) {
        int blocks = k ? *std::max_element(p.begin(), p.end()) + 1 : 0;
        consider(ColorfulGraph(blocks, host.q()), p);
    }
    // Every entry is reached from its root skeleton by adding edges, colors and
    // isolated non-root vertices, each step staying inside the folio.
    while (!queue.empty()) {
        FolioEntry e = queue.front();
        queue.pop_front();
        const ColorfulGraph& g = e.graph;
        int rooted = k ? *std::max_element(e.roots.begin(), e.roots.end()) + 1 : 0;
        if (g.m() < d)
            for (int u = 0; u < g.n(); ++u)
                for (int v = u + 1; v < g.n(); ++v)
                    if (!g.has_edge(u, v)) consider(g.with_edge(u, v), e.roots);
        for (int v = 0; v < g.n(); ++v)
            for (int c = 1; c <= g.q(); ++c)
                if (!(g.palette(v) & color_bit(c))) consider(g.with_palette(v, g.palette(v) | color_bit(c)), e.roots);
        if (g.n() - rooted < d) consider(g.with_vertex(), e.roots);
    }
    std::vector<FolioEntry> out;
    for (auto& [f, e] : found) out.push_back(e);
    return out;
}

std::vector<FolioEntry> permute_folio_roots(const std::vector<FolioEntry>& folio, const std::vector<int>& perm,
                                            const Caps& caps) {
    std::vector<FolioEntry> out;
    for (auto& e : folio) {
        std::vector<int> roots(e.roots.size());
        for (std::size_t i = 0; i < e.roots.size(); ++i) roots.at(perm.at(i)) = e.roots[i];
        out.push_back({e.graph, roots, rooted_canonical_form(e.graph, roots, caps)});
    }
    std::sort(out.begin(), out.end(), [](const FolioEntry& a, const FolioEntry& b) { return a.form < b.form; });
    return out;
}

std::optional<std::vector<int>> folio_root_permutation(const std::vector<FolioEntry>& a,
                                                       const std::vector<FolioEntry>& b, const Caps& caps) {
    if (a.size() != b.size()) return std::nullopt;
    std::size_t k = a.empty() ? 0 : a.front().roots.size();
    std::set<CanonicalForm> target;
    for (auto& e : b) target.insert(e.form);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::set<CanonicalForm> got;
        for (auto& e : permute_folio_roots(a, perm, caps)) got.insert(e.form);
        if (got == target) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

namespace {

struct TreeView {
    std::map<int, std::vector<int>> adj;
};

TreeView check_tree(const ColorfulGraph& host, const TreeEdges& tree, int s, int t) {
    if (s < 0 || s >= host.n() || t < 0 || t >= host.n()) throw PreconditionError("terminal outside the graph");
    TreeView tv;
    tv.adj[s];
    tv.adj[t];
    std::set<Edge> seen;
    for (auto [u, v] : tree) {
        if (u < 0 || v < 0 || u >= host.n() || v >= host.n() || !host.has_edge(u, v))
            throw PreconditionError("tree edge is not a host edge");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw PreconditionError("repeated tree edge");
        tv.adj[u].push_back(v);
        tv.adj[v].push_back(u);
    }
    if (tv.adj.size() != tree.size() + 1) throw PreconditionError("edges do not form a tree containing s and t");
    std::set<int> reach{s};
    std::vector<int> st{s};
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : tv.adj[v])
            if (reach.insert(w).second) st.push_back(w);
    }
    if (reach.size() != tv.adj.size()) throw PreconditionError("edges do not form a tree containing s and t");
    return tv;
}

// Whether the path's internal vertices, each with the colors of its hanging
// subtree, can be cut into consecutive disjoint ranges covering the signature.
bool ranges_cover(const std::vector<Palette>& hang, const Signature& sigma) {
    std::size_t pos = 0;
    for (Palette need : sigma) {
        Palette acc = 0;
        bool done = false;
        while (pos < hang.size()) {
            acc |= hang[pos++];
            if ((need & ~acc) == 0) {
                done = true;
                break;
            }
        }
        if (!done) return false;
    }
    return true;
}

}  // namespace

bool is_sigma_connector(const ColorfulGraph& host, const TreeEdges& tree, int s, int t, const Signature& sigma) {
    TreeView tv = check_tree(host, tree, s, t);
    if (s == t) return tree.empty() && sigma.empty();
    if (tv.adj[s].size() != 1 || tv.adj[t].size() != 1) return false;
    std::map<int, int> parent{{s, s}};
    std::vector<int> st{s};
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : tv.adj[v])
            if (!parent.count(w)) {
                parent[w] = v;
                st.push_back(w);
            }
    }
    std::vector<int> path;
    for (int v = parent[t]; v != s; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    std::set<int> on_path(path.begin(), path.end());
    std::vector<Palette> hang;
    for (int p : path) {
        Palette c = host.palette(p);
        std::vector<int> stack;
        std::set<int> seen{p};
        for (int w : tv.adj[p])
            if (!on_path.count(w) && w != s && w != t) {
                stack.push_back(w);
                seen.insert(w);
            }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            c |= host.palette(v);
            for (int w : tv.adj[v])
                if (seen.insert(w).second) stack.push_back(w);
        }
        hang.push_back(c);
    }
    return ranges_cover(hang, sigma);
}

std::string wcdp_violation(const ColorfulGraph& host, const std::vector<Terminals>& terminals,
                           const std::vector<Signature>& signatures, const std::vector<TreeEdges>& trees) {
    if (trees.size() != terminals.size() || signatures.size() != terminals.size()) return "size mismatch";
    std::vector<std::set<int>> verts(trees.size());
    for (std::size_t i = 0; i < trees.size(); ++i) {
        try {
            if (!is_sigma_connector(host, trees[i], terminals[i].s, terminals[i].t, signatures[i]))
                return "tree " + std::to_string(i) + " is not a connector for its signature";
        } catch (const PreconditionError& e) {
            return "tree " + std::to_string(i) + ": " + e.what();
        }
        verts[i] = {terminals[i].s, terminals[i].t};
        for (auto [u, v] : trees[i]) verts[i].insert({u, v});
    }
    for (std::size_t i = 0; i < trees.size(); ++i)
        for (std::size_t j = i + 1; j < trees.size(); ++j)
            for (int v : verts[i]) {
                if (!verts[j].count(v)) continue;
                bool ti = v == terminals[i].s || v == terminals[i].t;
                bool tj = v == terminals[j].s || v == terminals[j].t;
                if (!ti || !tj)
                    return "trees " + std::to_string(i) + " and " + std::to_string(j) + " share vertex " +
                           std::to_string(v);
            }
    return {};
}

namespace {

struct Wcdp {
    const ColorfulGraph& g;
    const std::vector<Terminals>& term;
    const std::vector<Signature>& sig;
    std::vector<bool> used;
    std::vector<bool> is_terminal;
    std::vector<TreeEdges> trees;

    bool free(int v) const { return !used[v] && !is_terminal[v]; }

    bool tree(std::size_t i) {
        if (i == term.size()) return true;
        int s = term[i].s, t = term[i].t;
        if (s == t) {
            if (!sig[i].empty()) return false;
            trees.push_back({});
            if (tree(i + 1)) return true;
            trees.pop_back();
            return false;
        }
        std::vector<int> path{s};
        return extend_path(i, path);
    }

    bool extend_path(std::size_t i, std::vector<int>& path) {
        int v = path.back();
        int t = term[i].t;
        for (int w : g.neighbors(v)) {
            if (w == t) {
                path.push_back(t);
                TreeEdges edges;
                for (std::size_t a = 0; a + 1 < path.size(); ++a) edges.emplace_back(path[a], path[a + 1]);
                std::vector<int> internal(path.begin() + 1, path.end() - 1);
                if (collect(i, internal, 0, 0, edges)) return true;
                path.pop_back();
                continue;
            }
            if (!free(w)) continue;
            used[w] = true;
            path.push_back(w);
            if (extend_path(i, path)) return true;
            path.pop_back();
            used[w] = false;
        }
        return false;
    }

    // Signature entry j uses a range of internal path vertices starting at `from`.
    bool collect(std::size_t i, const std::vector<int>& internal, std::size_t j, std::size_t from, TreeEdges& edges) {
        if (j == sig[i].size()) {
            trees.push_back(edges);
            if (tree(i + 1)) return true;
            trees.pop_back();
            return false;
        }
        for (std::size_t a = from; a < internal.size(); ++a)
            for (std::size_t b = a; b < internal.size(); ++b) {
                std::vector<int> blob(internal.begin() + a, internal.begin() + b + 1);
                Palette have = 0;
                for (int v : blob) have |= g.palette(v);
                if (grow(i, internal, j, b + 1, blob, have, edges)) return true;
            }
        return false;
    }

    // Attaches paths from the blob to vertices with missing colors.
    bool grow(std::size_t i, const std::vector<int>& internal, std::size_t j, std::size_t next,
              std::vector<int>& blob, Palette have, TreeEdges& edges) {
        Palette missing = sig[i][j] & ~have;
        if (!missing) return collect(i, internal, j + 1, next, edges);
        int c = std::countr_zero(missing) + 1;
        std::vector<int> trail;
        std::function<bool(int)> walk = [&](int v) -> bool {
            for (int w : g.neighbors(v)) {
                if (!free(w)) continue;
                used[w] = true;
                edges.emplace_back(v, w);
                trail.push_back(w);
                if (g.palette(w) & color_bit(c)) {
                    Palette got = have;
                    for (int x : trail) got |= g.palette(x);
                    std::size_t old = blob.size();
                    blob.insert(blob.end(), trail.begin(), trail.end());
                    if (grow(i, internal, j, next, blob, got, edges)) return true;
                    blob.resize(old);
                }
                if (walk(w)) return true;
                trail.pop_back();
                edges.pop_back();
                used[w] = false;
            }
            return false;
        };
        std::vector<int> starts = blob;
        for (int v : starts)
            if (walk(v)) return true;
        return false;
    }
};

}  // namespace

std::optional<std::vector<TreeEdges>> solve_wcdp(const ColorfulGraph& host, const std::vector<Terminals>& terminals,
                                                 const std::vector<Signature>& signatures, const Caps& caps) {
    if (terminals.size() != signatures.size()) throw PreconditionError("one signature per terminal pair");
    std::size_t longest = 0;
    for (auto& s : signatures) longest = std::max(longest, s.size());
    if (host.n() > caps.wcdp_host || static_cast<int>(terminals.size() + longest) > caps.wcdp_complexity)
        throw CapExceeded("wcdp limited to |host| <= " + std::to_string(caps.wcdp_host) +
                          " and complexity <= " + std::to_string(caps.wcdp_complexity));
    Wcdp w{host, terminals, signatures, std::vector<bool>(host.n(), false), std::vector<bool>(host.n(), false), {}};
    for (auto& tp : terminals) {
        if (tp.s < 0 || tp.t < 0 || tp.s >= host.n() || tp.t >= host.n())
            throw PreconditionError("terminal outside the graph");
        w.is_terminal[tp.s] = w.is_terminal[tp.t] = true;
    }
    for (auto& s : signatures)
        for (Palette p : s)
            if (p & ~full_palette(host.q())) throw PreconditionError("signature color exceeds q");
    if (!w.tree(0)) return std::nullopt;
    return w.trees;
}

}  // namespace chroma
