#include <algorithm>
#include <bit>

#include "chroma/errors.hpp"
#include "chroma/graph.hpp"

namespace chroma {

namespace {

struct Canon {
    int n;
    std::vector<std::uint64_t> adj;
    std::vector<Palette> pal;
    std::string best;
    std::vector<int> best_order;
    bool have = false;

    std::vector<std::vector<int>> refine(std::vector<std::vector<int>> cells) const {
        std::vector<int> cell_of(n);
        while (true) {
            for (int c = 0; c < static_cast<int>(cells.size()); ++c)
                for (int v : cells[c]) cell_of[v] = c;
            std::vector<std::vector<int>> counts(n, std::vector<int>(cells.size(), 0));
            for (int v = 0; v < n; ++v) {
                std::uint64_t a = adj[v];
                while (a) {
                    int w = std::countr_zero(a);
                    a &= a - 1;
                    ++counts[v][cell_of[w]];
                }
            }
            std::vector<std::vector<int>> next;
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<int> sorted = cell;
                std::stable_sort(sorted.begin(), sorted.end(),
                                 [&](int x, int y) { return counts[x] < counts[y]; });
                std::vector<int> cur{sorted[0]};
                for (std::size_t i = 1; i < sorted.size(); ++i) {
                    if (counts[sorted[i]] != counts[sorted[i - 1]]) {
                        next.push_back(cur);
                        cur.clear();
                    }
                    cur.push_back(sorted[i]);
                }
                next.push_back(cur);
            }
            if (next.size() == cells.size()) return next;
            cells = std::move(next);
        }
    }

    std::string encode(const std::vector<int>& order) const {
        std::string s;
        s.push_back(static_cast<char>(n & 0xff));
        s.push_back(static_cast<char>(n >> 8));
        for (int v : order)
            for (int b = 0; b < 8; ++b) s.push_back(static_cast<char>((pal[v] >> (8 * b)) & 0xff));
        unsigned char acc = 0;
        int bits = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                acc = static_cast<unsigned char>((acc << 1) | ((adj[order[i]] >> order[j]) & 1));
                if (++bits == 8) {
                    s.push_back(static_cast<char>(acc));
                    acc = 0;
                    bits = 0;
                }
            }
        if (bits) s.push_back(static_cast<char>(acc << (8 - bits)));
        return s;
    }

    bool twins(int u, int v) const {
        std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
        return pal[u] == pal[v] && ((adj[u] ^ adj[v]) & mask) == 0;
    }

    void search(std::vector<std::vector<int>> cells) {
        cells = refine(std::move(cells));
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            std::vector<int> order;
            for (auto& c : cells) order.push_back(c[0]);
            std::string code = encode(order);
            if (!have || code < best) {
                best = std::move(code);
                best_order = std::move(order);
                have = true;
            }
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            bool skip = false;
            for (int u : tried)
                if (twins(u, v)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            tried.push_back(v);
            std::vector<std::vector<int>> next;
            next.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    next.push_back(cells[i]);
                    continue;
                }
                next.push_back({v});
                std::vector<int> rest;
                for (int w : cells[i])
                    if (w != v) rest.push_back(w);
                next.push_back(rest);
            }
            search(std::move(next));
        }
    }
};

CanonicalForm canon_impl(const ColorfulGraph& g, std::vector<Palette> pal, std::string head, std::vector<int>* order,
                         const Caps& caps) {
    int n = g.n();
    if (n > caps.canon_vertices || n > 64)
        throw CapExceeded("canonical form limited to " + std::to_string(std::min(caps.canon_vertices, 64)) +
                          " vertices, got " + std::to_string(n));
    Canon c;
    c.n = n;
    c.adj.assign(n, 0);
    c.pal = std::move(pal);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) c.adj[v] |= std::uint64_t{1} << w;
    std::vector<int> verts(n);
    for (int v = 0; v < n; ++v) verts[v] = v;
    std::stable_sort(verts.begin(), verts.end(), [&](int x, int y) {
        if (c.pal[x] != c.pal[y]) return c.pal[x] < c.pal[y];
        return g.degree(x) < g.degree(y);
    });
    std::vector<std::vector<int>> cells;
    for (int v : verts) {
        if (cells.empty() || c.pal[cells.back()[0]] != c.pal[v] || g.degree(cells.back()[0]) != g.degree(v))
            cells.emplace_back();
        cells.back().push_back(v);
    }
    if (n == 0) {
        if (order) order->clear();
        return head + std::string(2, '\0');
    }
    c.search(std::move(cells));
    if (order) *order = c.best_order;
    return head + c.best;
}

}  // namespace

CanonicalForm canonical_form(const ColorfulGraph& g, const Caps& caps) {
    return canon_impl(g, g.palettes(), std::string(1, static_cast<char>(g.q())), nullptr, caps);
}

CanonicalForm canonical_form(const ColorfulGraph& g, std::vector<int>& order, const Caps& caps) {
    return canon_impl(g, g.palettes(), std::string(1, static_cast<char>(g.q())), &order, caps);
}

bool isomorphic(const ColorfulGraph& a, const ColorfulGraph& b, const Caps& caps) {
    if (a.n() != b.n() || a.m() != b.m() || a.q() != b.q()) return false;
    return canonical_form(a, caps) == canonical_form(b, caps);
}

CanonicalForm rooted_canonical_form(const ColorfulGraph& g, const std::vector<int>& roots, const Caps& caps) {
    int k = static_cast<int>(roots.size());
    if (g.q() + k > kMaxColors) throw CapExceeded("too many colors plus roots for a rooted canonical form");
    std::vector<Palette> pal = g.palettes();
    for (int i = 0; i < k; ++i) {
        if (roots[i] < 0 || roots[i] >= g.n()) throw PreconditionError("root outside the graph");
        pal[roots[i]] |= color_bit(g.q() + i + 1);
    }
    std::string head{static_cast<char>(g.q()), 'r', static_cast<char>(k)};
    return canon_impl(g, pal, head, nullptr, caps);
}

}  // namespace chroma
