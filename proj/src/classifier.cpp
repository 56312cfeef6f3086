#include "chroma/classifier.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "chroma/errors.hpp"
#include "chroma/families.hpp"
#include "chroma/obstructions.hpp"

namespace chroma {

namespace {

ColorfulGraph plain(const ColorfulGraph& g) { return ColorfulGraph(g.n(), 0, g.edges()); }

// Deletes degree <= 1 vertices and suppresses degree-2 vertices until neither applies.
ColorfulGraph planarity_kernel(const ColorfulGraph& g) {
    int n = g.n();
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<bool> alive(n, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || adj[v].size() > 2) continue;
            std::vector<int> nb(adj[v].begin(), adj[v].end());
            for (int w : nb) adj[w].erase(v);
            adj[v].clear();
            alive[v] = false;
            if (nb.size() == 2) {
                adj[nb[0]].insert(nb[1]);
                adj[nb[1]].insert(nb[0]);
            }
            changed = true;
        }
    }
    std::vector<int> keep, idx(n, -1);
    for (int v = 0; v < n; ++v)
        if (alive[v]) {
            idx[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    std::vector<Edge> e;
    for (int v : keep)
        for (int w : adj[v])
            if (v < w) e.emplace_back(idx[v], idx[w]);
    return ColorfulGraph(static_cast<int>(keep.size()), 0, e);
}

// Kuratowski pattern found in g, if any.
std::optional<std::string> kuratowski(const ColorfulGraph& g, const Caps& caps) {
    ColorfulGraph k = planarity_kernel(plain(g));
    if (k.n() == 0) return std::nullopt;
    for (auto& [name, pat] : {std::pair{std::string("K5"), complete_graph(5)},
                              std::pair{std::string("K3,3"), complete_bipartite(3, 3)}})
        if (k.n() >= pat.n() && contains_colorful_minor(k, pat, caps)) return name;
    return std::nullopt;
}

std::optional<CrucialWitness> facial_witness(const ColorfulGraph& h, const Caps& caps) {
    for (auto& comp : components(h)) {
        ColorfulGraph c = h.induced(comp);
        ColorfulGraph plus = plain(c).with_vertex();
        int apex = plus.n() - 1;
        for (int v = 0; v < c.n(); ++v)
            if (c.palette(v)) plus = plus.with_edge(v, apex);
        if (auto name = kuratowski(plus, caps)) {
            CrucialWitness w;
            w.predicate = "color_facial";
            w.detail = "component plus apex on its colored vertices contains " + *name;
            w.vertices = comp;
            return w;
        }
    }
    return std::nullopt;
}

std::optional<CrucialWitness> segmented_witness(const ColorfulGraph& h, const Caps& caps) {
    if (h.q() < 2) return std::nullopt;
    Palette present = h.colors();
    for (auto& m : schema_o2(h.q())) {
        if ((m.colors() & ~present) != 0) continue;
        if (auto model = find_colorful_minor(h, m, caps)) {
            CrucialWitness w;
            w.predicate = "color_segmented";
            w.detail = "contains a member of O2";
            w.obstruction = m;
            w.model = model;
            return w;
        }
    }
    return std::nullopt;
}

std::optional<CrucialWitness> component_witness(const ColorfulGraph& h) {
    for (auto& comp : components(h)) {
        Palette p = 0;
        for (int v : comp) p |= h.palette(v);
        if (palette_size(p) > 2) {
            CrucialWitness w;
            w.predicate = "component_wise_bicolored";
            w.detail = "component carries colors " + palette_string(p);
            w.vertices = comp;
            return w;
        }
    }
    return std::nullopt;
}

std::optional<CrucialWitness> single_witness(const ColorfulGraph& h) {
    auto comps = components(h);
    std::vector<Palette> cols;
    for (auto& comp : comps) {
        Palette p = 0;
        for (int v : comp) p |= h.palette(v);
        cols.push_back(p);
    }
    for (std::size_t a = 0; a < comps.size(); ++a)
        for (std::size_t b = a + 1; b < comps.size(); ++b) {
            // Two disjoint pairs exist iff both sides have two colors and the union has four.
            Palette x = cols[a], y = cols[b];
            if (palette_size(x) < 2 || palette_size(y) < 2 || palette_size(x | y) < 4) continue;
            CrucialWitness w;
            w.predicate = "single_component_bicolored";
            w.detail = "components carry " + palette_string(x) + " and " + palette_string(y);
            w.vertices = comps[a];
            w.vertices.insert(w.vertices.end(), comps[b].begin(), comps[b].end());
            std::sort(w.vertices.begin(), w.vertices.end());
            return w;
        }
    return std::nullopt;
}

}  // namespace

bool is_planar(const ColorfulGraph& g, const Caps& caps) { return !kuratowski(g, caps).has_value(); }

bool is_color_facial(const ColorfulGraph& h, const Caps& caps) { return !facial_witness(h, caps); }

bool is_color_segmented(const ColorfulGraph& h, const Caps& caps) { return !segmented_witness(h, caps); }

bool is_component_wise_bicolored(const ColorfulGraph& h) { return !component_witness(h); }

bool is_single_component_bicolored(const ColorfulGraph& h) { return !single_witness(h); }

bool is_color_segmented_direct(const ColorfulGraph& h) {
    int n = h.n();
    if (n > 8) throw CapExceeded("direct segmentation check limited to 8 vertices");
    if (h.q() < 2) return true;
    std::vector<std::uint64_t> nb(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : h.neighbors(v)) nb[v] |= std::uint64_t{1} << w;
    auto connected = [&](std::uint64_t s) {
        if (!s) return false;
        std::uint64_t seen = s & -s, frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1) next |= nb[std::countr_zero(f)];
            next &= s & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen == s;
    };
    auto touches = [&](std::uint64_t a, std::uint64_t b) {
        for (; a; a &= a - 1)
            if (nb[std::countr_zero(a)] & b) return true;
        return false;
    };
    auto colors = [&](std::uint64_t s) {
        Palette p = 0;
        for (; s; s &= s - 1) p |= h.palette(std::countr_zero(s));
        return p;
    };
    // Condition A: four sets around a cycle with colors c_i, {c1,c3} and {c2,c4} disjoint.
    auto bad_a = [&](const std::vector<std::uint64_t>& b) {
        for (int i = 0; i < 4; ++i)
            if (!touches(b[i], b[(i + 1) % 4])) return false;
        Palette p1 = colors(b[0]), p2 = colors(b[1]), p3 = colors(b[2]), p4 = colors(b[3]);
        for (int c1 : palette_colors(p1))
            for (int c3 : palette_colors(p3))
                for (int c2 : palette_colors(p2))
                    for (int c4 : palette_colors(p4))
                        if (c1 != c2 && c1 != c4 && c3 != c2 && c3 != c4) return true;
        return false;
    };
    // Condition B: three mutually adjacent sets each carrying at least two colors.
    auto bad_b = [&](const std::vector<std::uint64_t>& b) {
        for (int i = 0; i < 3; ++i)
            if (palette_size(colors(b[i])) < 2 || !touches(b[i], b[(i + 1) % 3])) return false;
        return true;
    };
    // Condition C: a set meeting three further sets that each carry at least two colors.
    auto bad_c = [&](const std::vector<std::uint64_t>& b) {
        for (int i = 1; i < 4; ++i)
            if (palette_size(colors(b[i])) < 2 || !touches(b[0], b[i])) return false;
        return true;
    };
    auto search = [&](int t, auto&& bad) {
        std::vector<int> label(n, 0);
        std::vector<std::uint64_t> sets(t);
        while (true) {
            std::fill(sets.begin(), sets.end(), 0);
            for (int v = 0; v < n; ++v)
                if (label[v]) sets[label[v] - 1] |= std::uint64_t{1} << v;
            bool ok = true;
            for (auto s : sets)
                if (!connected(s)) {
                    ok = false;
                    break;
                }
            if (ok && bad(sets)) return true;
            int v = 0;
            while (v < n && ++label[v] > t) label[v++] = 0;
            if (v == n) return false;
        }
    };
    return !search(4, bad_a) && !search(3, bad_b) && !search(4, bad_c);
}

CrucialReport is_crucial(const ColorfulGraph& h, const Caps& caps) {
    CrucialReport r;
    auto f = facial_witness(h, caps);
    auto s = segmented_witness(h, caps);
    auto c = component_witness(h);
    auto p = single_witness(h);
    r.color_facial = !f;
    r.color_segmented = !s;
    r.component_wise_bicolored = !c;
    r.single_component_bicolored = !p;
    r.crucial = r.color_facial && r.color_segmented && r.component_wise_bicolored && r.single_component_bicolored;
    for (auto* w : {&f, &s, &p, &c})
        if (*w) {
            r.witness = **w;
            break;
        }
    return r;
}

bool has_erdos_posa(const ColorfulGraph& h, const Caps& caps) { return is_crucial(h, caps).crucial; }

bool rainbow_ep_classification(int q, const ColorfulGraph& g, const Caps& caps) {
    if (q < 0) throw PreconditionError("q must be non-negative");
    if (g.n() == 0) return true;
    if (q >= 3) return false;
    ColorfulGraph u = plain(g);
    return !contains_colorful_minor(u, complete_bipartite(3, 3 - q), caps) &&
           !contains_colorful_minor(u, complete_graph(5 - q), caps);
}

}  // namespace chroma
