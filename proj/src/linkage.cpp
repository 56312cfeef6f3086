#include "chroma/linkage.hpp"

#include <algorithm>
#include <queue>

#include "chroma/errors.hpp"

namespace chroma {

namespace {

// Flow on the split graph: node 2v is v_in, 2v+1 is v_out. Only the v_in -> v_out
// arcs have unit capacity, so every minimum cut is a vertex set.
struct Flow {
    struct Arc {
        int to, cap, rev;
        bool forward;
        int orig;
        bool used() const { return forward && cap < orig; }
    };
    std::vector<std::vector<Arc>> adj;
    int s, t;

    explicit Flow(int nodes) : adj(nodes + 2), s(nodes), t(nodes + 1) {}

    void arc(int a, int b, int cap = 1) {
        adj[a].push_back({b, cap, static_cast<int>(adj[b].size()), true, cap});
        adj[b].push_back({a, 0, static_cast<int>(adj[a].size()) - 1, false, 0});
    }

    bool augment() {
        std::vector<std::pair<int, int>> pred(adj.size(), {-1, -1});
        std::queue<int> q;
        q.push(s);
        pred[s] = {s, -1};
        while (!q.empty() && pred[t].first < 0) {
            int a = q.front();
            q.pop();
            for (int i = 0; i < static_cast<int>(adj[a].size()); ++i) {
                auto& e = adj[a][i];
                if (e.cap > 0 && pred[e.to].first < 0) {
                    pred[e.to] = {a, i};
                    q.push(e.to);
                }
            }
        }
        if (pred[t].first < 0) return false;
        for (int b = t; b != s;) {
            auto [a, i] = pred[b];
            auto& e = adj[a][i];
            e.cap -= 1;
            adj[b][e.rev].cap += 1;
            b = a;
        }
        return true;
    }

    std::vector<bool> reachable() const {
        std::vector<bool> seen(adj.size(), false);
        std::vector<int> st{s};
        seen[s] = true;
        while (!st.empty()) {
            int a = st.back();
            st.pop_back();
            for (auto& e : adj[a])
                if (e.cap > 0 && !seen[e.to]) {
                    seen[e.to] = true;
                    st.push_back(e.to);
                }
        }
        return seen;
    }
};

void check_set(const ColorfulGraph& g, const VertexSet& X) {
    for (int v : X)
        if (v < 0 || v >= g.n()) throw PreconditionError("vertex " + std::to_string(v) + " outside the graph");
}

struct Solver {
    const ColorfulGraph& g;
    Flow f;
    int flow = 0;

    Solver(const ColorfulGraph& graph, const VertexSet& X, const VertexSet& Y) : g(graph), f(2 * graph.n()) {
        check_set(g, X);
        check_set(g, Y);
        int n = g.n();
        int big = n + 1;
        for (int v = 0; v < n; ++v) f.arc(2 * v, 2 * v + 1);
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) f.arc(2 * v + 1, 2 * w, big);
        std::vector<bool> inx(n, false), iny(n, false);
        for (int x : X) inx[x] = true;
        for (int y : Y) iny[y] = true;
        for (int v = 0; v < n; ++v) {
            if (inx[v]) f.arc(f.s, 2 * v, big);
            if (iny[v]) f.arc(2 * v + 1, f.t, big);
        }
    }

    void run(int limit) {
        while (flow < limit && f.augment()) ++flow;
    }

    // Follows saturated forward arcs from each used source arc.
    std::vector<std::vector<int>> paths() const {
        std::vector<std::vector<int>> out;
        for (auto& e : f.adj[f.s]) {
            if (!e.used()) continue;
            std::vector<int> p;
            int node = e.to;
            while (node != f.t) {
                int v = node / 2;
                p.push_back(v);
                int next = -1;
                for (auto& a : f.adj[2 * v + 1])
                    if (a.used()) {
                        next = a.to;
                        break;
                    }
                node = next;
            }
            out.push_back(p);
        }
        return out;
    }

    VertexSet cut() const {
        auto r = f.reachable();
        VertexSet s;
        for (int v = 0; v < g.n(); ++v)
            if (r[2 * v] && !r[2 * v + 1]) s.push_back(v);
        return s;
    }
};

Linkage to_linkage(const std::vector<std::vector<int>>& ps) {
    Linkage l;
    for (auto& p : ps) l.paths.push_back({0, p});
    return l;
}

bool connected_in(const ColorfulGraph& g, const std::vector<bool>& removed, const VertexSet& A, const VertexSet& B) {
    std::vector<bool> target(g.n(), false), seen(g.n(), false);
    for (int b : B)
        if (!removed[b]) target[b] = true;
    std::vector<int> st;
    for (int a : A)
        if (!removed[a] && !seen[a]) {
            seen[a] = true;
            st.push_back(a);
        }
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        if (target[v]) return true;
        for (int w : g.neighbors(v))
            if (!removed[w] && !seen[w]) {
                seen[w] = true;
                st.push_back(w);
            }
    }
    return false;
}

}  // namespace

Linkage max_linkage(const ColorfulGraph& g, const VertexSet& X, const VertexSet& Y) {
    Solver s(g, X, Y);
    s.run(g.n() + 1);
    return to_linkage(s.paths());
}

VertexSet min_separator(const ColorfulGraph& g, const VertexSet& X, const VertexSet& Y) {
    Solver s(g, X, Y);
    s.run(g.n() + 1);
    return s.cut();
}

std::variant<Linkage, VertexSet> menger(const ColorfulGraph& g, const VertexSet& X, const VertexSet& Y, int k) {
    if (k < 1) throw PreconditionError("k must be positive");
    Solver s(g, X, Y);
    s.run(k);
    if (s.flow >= k) return to_linkage(s.paths());
    return s.cut();
}

std::variant<Linkage, SeparatorResult> multicolor_linkage(const ColorfulGraph& g, const std::vector<VertexSet>& sources,
                                                          const VertexSet& Y, int k) {
    int l = static_cast<int>(sources.size());
    if (l < 1 || k < 1) throw PreconditionError("need at least one source set and k >= 1");
    for (auto& X : sources) check_set(g, X);
    check_set(g, Y);
    int n = g.n();
    // Auxiliary graph: k fresh vertices per source set, each joined to all of X_i.
    std::vector<Edge> e = g.edges();
    VertexSet Z;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < k; ++j) {
            int z = n + i * k + j;
            Z.push_back(z);
            for (int x : sources[i]) e.emplace_back(x, z);
        }
    ColorfulGraph aux(n + l * k, 0, e);
    auto res = menger(aux, Z, Y, k * l);
    if (auto* lk = std::get_if<Linkage>(&res)) {
        Linkage out;
        for (auto& p : lk->paths) {
            int i = (p.vertices.front() - n) / k;
            std::vector<int> rest(p.vertices.begin() + 1, p.vertices.end());
            std::vector<bool> inx(n, false), iny(n, false);
            for (int x : sources[i]) inx[x] = true;
            for (int y : Y) iny[y] = true;
            // Start at the last X_i vertex, stop at the first Y vertex after it.
            std::size_t start = 0;
            for (std::size_t t = 0; t < rest.size(); ++t)
                if (inx[rest[t]]) start = t;
            std::size_t stop = start;
            while (!iny[rest[stop]]) ++stop;
            out.paths.push_back({i, std::vector<int>(rest.begin() + start, rest.begin() + stop + 1)});
        }
        std::stable_sort(out.paths.begin(), out.paths.end(),
                         [](const LinkagePath& a, const LinkagePath& b) { return a.source < b.source; });
        return out;
    }
    SeparatorResult r;
    for (int v : std::get<VertexSet>(res))
        if (v < n) r.S.push_back(v);
    std::vector<bool> removed(n, false);
    for (int v : r.S) removed[v] = true;
    for (int i = 0; i < l; ++i)
        if (!connected_in(g, removed, sources[i], Y)) r.I.push_back(i);
    return r;
}

std::string linkage_violation(const ColorfulGraph& g, const std::vector<VertexSet>& sources, const VertexSet& Y,
                              const Linkage& l) {
    std::vector<int> used(g.n(), -1);
    std::vector<bool> iny(g.n(), false);
    for (int y : Y) iny[y] = true;
    for (std::size_t p = 0; p < l.paths.size(); ++p) {
        auto& path = l.paths[p];
        std::string tag = "path " + std::to_string(p) + ": ";
        if (path.source < 0 || path.source >= static_cast<int>(sources.size())) return tag + "bad source index";
        if (path.vertices.empty()) return tag + "empty";
        std::vector<bool> inx(g.n(), false);
        for (int x : sources[path.source]) inx[x] = true;
        for (std::size_t t = 0; t < path.vertices.size(); ++t) {
            int v = path.vertices[t];
            if (v < 0 || v >= g.n()) return tag + "vertex out of range";
            if (used[v] >= 0) return tag + "shares vertex " + std::to_string(v) + " with path " + std::to_string(used[v]);
            used[v] = static_cast<int>(p);
            if (t > 0 && !g.has_edge(path.vertices[t - 1], v)) return tag + "missing edge";
            bool first = t == 0, last = t + 1 == path.vertices.size();
            if (first != inx[v]) return tag + (first ? "does not start in its source set" : "revisits its source set");
            if (last != iny[v]) return tag + (last ? "does not end in Y" : "meets Y internally");
        }
    }
    return {};
}

std::string separator_violation(const ColorfulGraph& g, const std::vector<VertexSet>& sources, const VertexSet& Y,
                                const SeparatorResult& r) {
    if (r.I.empty()) return "I is empty";
    std::vector<bool> removed(g.n(), false);
    for (int v : r.S) {
        if (v < 0 || v >= g.n()) return "separator vertex out of range";
        removed[v] = true;
    }
    for (int i : r.I) {
        if (i < 0 || i >= static_cast<int>(sources.size())) return "bad source index";
        if (connected_in(g, removed, sources[i], Y)) return "source " + std::to_string(i) + " still reaches Y";
    }
    return {};
}

}  // namespace chroma
