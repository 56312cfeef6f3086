#include "chroma/graph.hpp"

#include <algorithm>
#include <bit>

#include "chroma/errors.hpp"

namespace chroma {

int palette_size(Palette p) { return std::popcount(p); }

std::vector<int> palette_colors(Palette p) {
    std::vector<int> out;
    while (p) {
        out.push_back(std::countr_zero(p) + 1);
        p &= p - 1;
    }
    return out;
}

std::string palette_string(Palette p) {
    std::string s = "{";
    bool first = true;
    for (int c : palette_colors(p)) {
        if (!first) s += ",";
        s += std::to_string(c);
        first = false;
    }
    return s + "}";
}

ColorfulGraph::ColorfulGraph(int n, int q) : q_(q), adj_(n), pal_(n, 0) {
    if (n < 0) throw PreconditionError("negative vertex count");
    if (q < 0 || q > kMaxColors) throw PreconditionError("q must lie in [0,64]");
}

ColorfulGraph::ColorfulGraph(int n, int q, const std::vector<Edge>& edges, std::vector<Palette> palettes)
    : ColorfulGraph(n, q) {
    if (!palettes.empty()) {
        if (static_cast<int>(palettes.size()) != n) throw PreconditionError("palette list length differs from n");
        for (Palette p : palettes)
            if (p & ~full_palette(q)) throw PreconditionError("palette color exceeds q");
        pal_ = std::move(palettes);
    }
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("edge endpoint out of range");
        if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw PreconditionError("parallel edge");
    }
    m_ = static_cast<int>(edges.size());
}

bool ColorfulGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
    const auto& a = adj_[u].size() < adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() < adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
}

Palette ColorfulGraph::colors() const {
    Palette p = 0;
    for (Palette x : pal_) p |= x;
    return p;
}

std::vector<Edge> ColorfulGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

ColorfulGraph ColorfulGraph::with_edge(int u, int v) const {
    if (has_edge(u, v)) throw PreconditionError("edge already present");
    auto e = edges();
    e.emplace_back(std::min(u, v), std::max(u, v));
    return ColorfulGraph(n(), q_, e, pal_);
}

ColorfulGraph ColorfulGraph::with_palette(int v, Palette p) const {
    if (v < 0 || v >= n()) throw PreconditionError("vertex out of range");
    if (p & ~full_palette(q_)) throw PreconditionError("palette color exceeds q");
    ColorfulGraph g = *this;
    g.pal_[v] = p;
    return g;
}

ColorfulGraph ColorfulGraph::with_q(int q) const {
    if (q < 0 || q > kMaxColors) throw PreconditionError("q must lie in [0,64]");
    if (colors() & ~full_palette(q)) throw PreconditionError("palette color exceeds q");
    ColorfulGraph g = *this;
    g.q_ = q;
    return g;
}

ColorfulGraph ColorfulGraph::with_vertex(Palette p) const {
    if (p & ~full_palette(q_)) throw PreconditionError("palette color exceeds q");
    ColorfulGraph g = *this;
    g.adj_.emplace_back();
    g.pal_.push_back(p);
    return g;
}

ColorfulGraph ColorfulGraph::induced(const std::vector<int>& vertices) const {
    std::vector<int> index(n(), -1);
    int k = 0;
    for (int v : vertices) {
        if (v < 0 || v >= n() || index[v] >= 0) throw PreconditionError("bad vertex list for induced subgraph");
        index[v] = k++;
    }
    std::vector<Edge> e;
    std::vector<Palette> p(k);
    for (int v : vertices) {
        p[index[v]] = pal_[v];
        for (int w : adj_[v])
            if (index[w] >= 0 && index[v] < index[w]) e.emplace_back(index[v], index[w]);
    }
    return ColorfulGraph(k, q_, e, p);
}

ColorfulGraph disjoint_union(const ColorfulGraph& a, const ColorfulGraph& b) {
    int q = std::max(a.q(), b.q());
    auto e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
    std::vector<Palette> p = a.palettes();
    p.insert(p.end(), b.palettes().begin(), b.palettes().end());
    return ColorfulGraph(a.n() + b.n(), q, e, p);
}

std::string edit_string(const Edit& e) {
    struct V {
        std::string operator()(const DeleteVertex& d) const { return "DeleteVertex(" + std::to_string(d.v) + ")"; }
        std::string operator()(const DeleteEdge& d) const {
            return "DeleteEdge(" + std::to_string(d.u) + "," + std::to_string(d.v) + ")";
        }
        std::string operator()(const RemoveColor& d) const {
            return "RemoveColor(" + std::to_string(d.v) + "," + std::to_string(d.color) + ")";
        }
        std::string operator()(const ContractEdge& d) const {
            return "ContractEdge(" + std::to_string(d.u) + "," + std::to_string(d.v) + ")";
        }
    };
    return std::visit(V{}, e);
}

namespace {

void check_vertex(const ColorfulGraph& g, int v) {
    if (v < 0 || v >= g.n()) throw PreconditionError("vertex " + std::to_string(v) + " does not exist");
}

void check_edge(const ColorfulGraph& g, int u, int v) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (!g.has_edge(u, v))
        throw PreconditionError("edge " + std::to_string(u) + "-" + std::to_string(v) + " does not exist");
}

// Maps old vertex ids to new ones after removing `gone` (sorted, distinct) and
// renumbering densely.
std::vector<int> dense_map(int n, const std::vector<int>& gone) {
    std::vector<int> map(n);
    int k = 0;
    for (int v = 0; v < n; ++v) {
        if (std::binary_search(gone.begin(), gone.end(), v)) map[v] = -1;
        else map[v] = k++;
    }
    return map;
}

}  // namespace

ColorfulGraph apply_edit(const ColorfulGraph& g, const Edit& e) {
    if (auto* d = std::get_if<DeleteVertex>(&e)) {
        check_vertex(g, d->v);
        auto map = dense_map(g.n(), {d->v});
        std::vector<Edge> edges;
        std::vector<Palette> pal;
        for (int v = 0; v < g.n(); ++v)
            if (map[v] >= 0) pal.push_back(g.palette(v));
        for (auto [u, v] : g.edges())
            if (map[u] >= 0 && map[v] >= 0) edges.emplace_back(map[u], map[v]);
        return ColorfulGraph(g.n() - 1, g.q(), edges, pal);
    }
    if (auto* d = std::get_if<DeleteEdge>(&e)) {
        check_edge(g, d->u, d->v);
        std::vector<Edge> edges;
        int a = std::min(d->u, d->v), b = std::max(d->u, d->v);
        for (auto uv : g.edges())
            if (uv != Edge{a, b}) edges.push_back(uv);
        return ColorfulGraph(g.n(), g.q(), edges, g.palettes());
    }
    if (auto* d = std::get_if<RemoveColor>(&e)) {
        check_vertex(g, d->v);
        if (d->color < 1 || d->color > g.q() || !(g.palette(d->v) & color_bit(d->color)))
            throw PreconditionError("color " + std::to_string(d->color) + " not in palette of vertex " +
                                    std::to_string(d->v));
        return g.with_palette(d->v, g.palette(d->v) & ~color_bit(d->color));
    }
    const auto& c = std::get<ContractEdge>(e);
    check_edge(g, c.u, c.v);
    int keep = std::min(c.u, c.v), gone = std::max(c.u, c.v);
    auto map = dense_map(g.n(), {gone});
    map[gone] = map[keep];
    std::vector<Palette> pal(g.n() - 1);
    for (int v = 0; v < g.n(); ++v) pal[map[v]] |= g.palette(v);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        int a = map[u], b = map[v];
        if (a == b) continue;
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return ColorfulGraph(g.n() - 1, g.q(), edges, pal);
}

std::vector<Edit> all_edits(const ColorfulGraph& g) {
    std::vector<Edit> out;
    for (int v = 0; v < g.n(); ++v) out.push_back(DeleteVertex{v});
    for (auto [u, v] : g.edges()) out.push_back(DeleteEdge{u, v});
    for (int v = 0; v < g.n(); ++v)
        for (int c : palette_colors(g.palette(v))) out.push_back(RemoveColor{v, c});
    for (auto [u, v] : g.edges()) out.push_back(ContractEdge{u, v});
    return out;
}

bool is_restricted(const ColorfulGraph& g) {
    return (g.colors() & full_palette(g.q())) != full_palette(g.q());
}

ColorfulGraph fusion(const ColorfulGraph& g) {
    std::vector<Palette> p(g.n());
    for (int v = 0; v < g.n(); ++v) p[v] = g.palette(v) ? 1 : 0;
    return ColorfulGraph(g.n(), 1, g.edges(), p);
}

std::vector<std::vector<int>> components(const ColorfulGraph& g) {
    std::vector<int> seen(g.n(), 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s}, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace chroma
