#include "chroma/reduction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "chroma/errors.hpp"
#include "chroma/families.hpp"

namespace chroma {

namespace {

// Connected d-regular graphs on n vertices, one per isomorphism class, sorted by form.
// Vertices are completed one at a time; partial graphs are merged up to isomorphism
// with the degree deficit of each vertex as its color.
std::vector<ColorfulGraph> regular_graphs(int n, int d, const Caps& caps) {
    auto key = [&](const std::vector<Edge>& edges) {
        ColorfulGraph g(n, 0, edges);
        std::vector<Palette> pal(n);
        for (int v = 0; v < n; ++v) pal[v] = color_bit(d - g.degree(v) + 1);
        return canonical_form(ColorfulGraph(n, d + 1, edges, pal), caps);
    };
    std::map<CanonicalForm, std::vector<Edge>> level{{key({}), {}}};
    for (int step = 0; step < n; ++step) {
        std::map<CanonicalForm, std::vector<Edge>> next;
        for (auto& [form, edges] : level) {
            ColorfulGraph g(n, 0, edges);
            int v = 0;
            while (v < n && g.degree(v) == d) ++v;
            if (v == n) {
                next.emplace(form, edges);
                continue;
            }
            std::vector<int> open;
            for (int w = 0; w < n; ++w)
                if (w != v && g.degree(w) < d && !g.has_edge(v, w)) open.push_back(w);
            int need = d - g.degree(v);
            if (need > static_cast<int>(open.size())) continue;
            std::vector<int> pick(need);
            std::function<void(int, int)> choose = [&](int i, int from) {
                if (i == need) {
                    auto e = edges;
                    for (int w : pick) e.emplace_back(v, w);
                    next.emplace(key(e), e);
                    return;
                }
                for (int j = from; j < static_cast<int>(open.size()); ++j) {
                    pick[i] = open[j];
                    choose(i + 1, j + 1);
                }
            };
            choose(0, 0);
        }
        level = std::move(next);
    }
    std::map<CanonicalForm, ColorfulGraph> found;
    for (auto& [form, edges] : level) {
        ColorfulGraph g(n, 0, edges);
        bool regular = true;
        for (int v = 0; v < n; ++v) regular = regular && g.degree(v) == d;
        if (regular && components(g).size() == 1) found.emplace(canonical_form(g, caps), g);
    }
    std::vector<ColorfulGraph> out;
    for (auto& [form, g] : found) out.push_back(g);
    return out;
}

ColorfulGraph with_apex(const ColorfulGraph& g) {
    auto edges = g.edges();
    for (int v = 0; v < g.n(); ++v) edges.emplace_back(v, g.n());
    return ColorfulGraph(g.n() + 1, 0, edges);
}

ColorfulGraph plain(const ColorfulGraph& g) { return ColorfulGraph(g.n(), 0, g.edges()); }

using Roots = std::vector<std::pair<int, int>>;  // (pattern vertex, host vertex), sorted
using Branches = std::vector<std::vector<int>>;  // indexed by pattern vertex

class BlockMinor {
public:
    BlockMinor(const ColorfulGraph& g, const ColorfulGraph& h, const Caps& caps) : g_(g), h_(h), caps_(caps) {}

    std::optional<Branches> solve(std::vector<int> P, std::vector<int> V, Roots R) {
        std::sort(P.begin(), P.end());
        std::sort(V.begin(), V.end());
        std::sort(R.begin(), R.end());
        R.erase(std::unique(R.begin(), R.end()), R.end());
        std::string key;
        for (auto* list : {&P, &V}) {
            for (int x : *list) key += std::to_string(x) + ',';
            key += '|';
        }
        for (auto [p, v] : R) key += std::to_string(p) + ':' + std::to_string(v) + ',';
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        auto out = compute(P, V, R);
        memo_.emplace(key, out);
        return out;
    }

private:
    const ColorfulGraph& g_;
    const ColorfulGraph& h_;
    Caps caps_;
    std::map<std::string, std::optional<Branches>> memo_;

    static std::vector<bool> mask(int n, const std::vector<int>& s) {
        std::vector<bool> m(n, false);
        for (int v : s) m[v] = true;
        return m;
    }

    static std::vector<std::vector<int>> comps(const ColorfulGraph& g, const std::vector<int>& s) {
        auto in = mask(g.n(), s);
        std::vector<bool> seen(g.n(), false);
        std::vector<std::vector<int>> out;
        for (int v : s) {
            if (seen[v]) continue;
            std::vector<int> c{v};
            seen[v] = true;
            for (std::size_t i = 0; i < c.size(); ++i)
                for (int w : g.neighbors(c[i]))
                    if (in[w] && !seen[w]) seen[w] = true, c.push_back(w);
            std::sort(c.begin(), c.end());
            out.push_back(c);
        }
        return out;
    }

    static int edge_count(const ColorfulGraph& g, const std::vector<int>& s) {
        auto in = mask(g.n(), s);
        int m = 0;
        for (int v : s)
            for (int w : g.neighbors(v))
                if (in[w] && v < w) ++m;
        return m;
    }

    // Smallest component of G[V] - c over all cut vertices c; empty if none.
    std::pair<int, std::vector<int>> smallest_leaf(const std::vector<int>& V) const {
        int best_c = -1;
        std::vector<int> best;
        for (int c : V) {
            std::vector<int> rest;
            for (int v : V)
                if (v != c) rest.push_back(v);
            auto cs = comps(g_, rest);
            if (cs.size() < 2) continue;
            for (auto& k : cs)
                if (best_c < 0 || k.size() < best.size()) best_c = c, best = k;
        }
        return {best_c, best};
    }

    static Branches merge(Branches a, const Branches& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i].insert(a[i].end(), b[i].begin(), b[i].end());
            std::sort(a[i].begin(), a[i].end());
            a[i].erase(std::unique(a[i].begin(), a[i].end()), a[i].end());
        }
        return a;
    }

    // Splits the pattern components between a side A (host set A) and the rest.
    // side(v) gives the forced side of a root host vertex: 0 for A, 1 otherwise, 2 for both.
    template <class Side, class Try>
    std::optional<Branches> split(const std::vector<std::vector<int>>& hc, const Roots& R, Side side, Try attempt,
                                  bool need_a) {
        std::vector<int> forced(hc.size(), -1);
        std::map<int, int> comp_of;
        for (std::size_t i = 0; i < hc.size(); ++i)
            for (int p : hc[i]) comp_of[p] = static_cast<int>(i);
        for (auto [p, v] : R) {
            auto c = comp_of.find(p);
            if (c == comp_of.end()) continue;
            int s = side(v);
            if (s == 2) return std::nullopt;
            int& f = forced[c->second];
            if (f >= 0 && f != s) return std::nullopt;
            f = s;
        }
        std::vector<int> free;
        for (std::size_t i = 0; i < hc.size(); ++i)
            if (forced[i] < 0) free.push_back(static_cast<int>(i));
        if (free.size() > 20) throw CapExceeded("too many pattern components");
        for (std::uint32_t bits = 0; bits < (1u << free.size()); ++bits) {
            std::vector<int> a, b;
            auto assign = forced;
            for (std::size_t j = 0; j < free.size(); ++j) assign[free[j]] = (bits >> j) & 1 ? 0 : 1;
            for (std::size_t i = 0; i < hc.size(); ++i) {
                auto& side_set = assign[i] == 0 ? a : b;
                side_set.insert(side_set.end(), hc[i].begin(), hc[i].end());
            }
            if (need_a && a.empty()) continue;
            auto r = attempt(a, b);
            if (r) return r;
        }
        return std::nullopt;
    }

    std::optional<Branches> compute(const std::vector<int>& P, const std::vector<int>& V, const Roots& R) {
        Branches empty(h_.n());
        if (P.empty()) return empty;
        if (P.size() > V.size() || edge_count(h_, P) > edge_count(g_, V)) return std::nullopt;
        std::map<int, int> owner;
        for (auto [p, v] : R)
            if (!owner.emplace(v, p).second) return std::nullopt;

        auto gc = comps(g_, V);
        auto hc = comps(h_, P);
        if (P.size() == 1) {
            for (auto& k : gc) {
                auto in = mask(g_.n(), k);
                bool all = true;
                for (auto [p, v] : R) all = all && in[v];
                if (all) {
                    empty[P[0]] = k;
                    return empty;
                }
            }
            return std::nullopt;
        }
        if (gc.size() > 1) {
            auto& K = *std::min_element(gc.begin(), gc.end(), [](auto& x, auto& y) { return x.size() < y.size(); });
            auto inK = mask(g_.n(), K);
            std::vector<int> rest;
            for (int v : V)
                if (!inK[v]) rest.push_back(v);
            return split(
                hc, R, [&](int v) { return inK[v] ? 0 : 1; },
                [&](const std::vector<int>& a, const std::vector<int>& b) -> std::optional<Branches> {
                    auto ra = restrict_roots(R, a), rb = restrict_roots(R, b);
                    auto x = solve(a, K, ra);
                    if (!x) return std::nullopt;
                    auto y = solve(b, rest, rb);
                    if (!y) return std::nullopt;
                    return merge(*x, *y);
                },
                false);
        }

        auto [c, K] = smallest_leaf(V);
        if (c < 0) return base(P, V, R);
        auto inK = mask(g_.n(), K);
        std::vector<int> V1, V1c, V2 = K;
        V2.push_back(c);
        for (int v : V)
            if (!inK[v]) {
                V1.push_back(v);
                if (v != c) V1c.push_back(v);
            }
        bool roots_in_k = false;
        int c_owner = -1;
        for (auto [p, v] : R) {
            roots_in_k = roots_in_k || inK[v];
            if (v == c) c_owner = p;
        }

        // Nothing but part of one branch set inside K: drop K.
        if (!roots_in_k)
            if (auto r = solve(P, V1, R)) return r;

        if (c_owner < 0) {
            auto r = split(
                hc, R, [&](int v) { return inK[v] ? 0 : 1; },
                [&](const std::vector<int>& a, const std::vector<int>& b) -> std::optional<Branches> {
                    if (a.size() > K.size() || b.size() > V1c.size()) return std::nullopt;
                    auto x = solve(a, K, restrict_roots(R, a));
                    if (!x) return std::nullopt;
                    auto y = solve(b, V1c, restrict_roots(R, b));
                    if (!y) return std::nullopt;
                    return merge(*x, *y);
                },
                true);
            if (r) return r;
        }

        std::vector<int> candidates = c_owner >= 0 ? std::vector<int>{c_owner} : P;
        for (int p : candidates) {
            std::vector<int> others;
            for (int x : P)
                if (x != p) others.push_back(x);
            Roots other_roots, p_side1, p_side2;
            for (auto [x, v] : R) {
                if (x != p)
                    other_roots.emplace_back(x, v);
                else
                    (inK[v] ? p_side2 : p_side1).emplace_back(x, v);
            }
            bool p_in_k = !p_side2.empty();
            auto r = split(
                comps(h_, others), other_roots, [&](int v) { return inK[v] ? 0 : 1; },
                [&](std::vector<int> a, std::vector<int> b) -> std::optional<Branches> {
                    if (a.empty() && !p_in_k) return std::nullopt;
                    if (a.size() + 1 > V2.size() || b.size() + 1 > V1.size()) return std::nullopt;
                    Roots ra = restrict_roots(other_roots, a), rb = restrict_roots(other_roots, b);
                    ra.insert(ra.end(), p_side2.begin(), p_side2.end());
                    rb.insert(rb.end(), p_side1.begin(), p_side1.end());
                    ra.emplace_back(p, c);
                    rb.emplace_back(p, c);
                    a.push_back(p);
                    b.push_back(p);
                    auto x = solve(a, V2, ra);
                    if (!x) return std::nullopt;
                    auto y = solve(b, V1, rb);
                    if (!y) return std::nullopt;
                    return merge(*x, *y);
                },
                false);
            if (r) return r;
        }
        return std::nullopt;
    }

    static Roots restrict_roots(const Roots& R, const std::vector<int>& P) {
        Roots out;
        for (auto [p, v] : R)
            if (std::find(P.begin(), P.end(), p) != P.end()) out.emplace_back(p, v);
        return out;
    }

    std::optional<Branches> base(const std::vector<int>& P, const std::vector<int>& V, const Roots& R) {
        std::map<int, int> hp, gv;
        for (std::size_t i = 0; i < P.size(); ++i) hp[P[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < V.size(); ++i) gv[V[i]] = static_cast<int>(i);
        RootedInstance host{g_.induced(V), {}}, pattern{h_.induced(P), {}};
        for (auto [p, v] : R) {
            host.roots.push_back(gv.at(v));
            pattern.roots.push_back(hp.at(p));
        }
        auto m = find_rooted_minor(host, pattern, caps_);
        if (!m) return std::nullopt;
        Branches out(h_.n());
        for (std::size_t i = 0; i < P.size(); ++i)
            for (int v : m->branch_sets[i]) out[P[i]].push_back(V[v]);
        return out;
    }
};

}  // namespace

MinorAntichain build_minor_antichain(int r, int count, const Caps& caps) {
    if (r < 1 || r > 5) throw PreconditionError("anti-chain order r must be in 1..5");
    if (count < 1 || count > 12) throw PreconditionError("anti-chain size must be in 1..12");
    ColorfulGraph kr = complete_graph(r);
    for (int d = 2; d < caps.antichain_vertices; ++d)
        for (int n = d + 1; n <= caps.antichain_vertices; ++n) {
            if ((n * d) % 2) continue;
            MinorAntichain a{r, d, n + 1, {}};
            for (auto& g : regular_graphs(n, d, caps)) {
                ColorfulGraph m = with_apex(g);
                if (contains_colorful_minor(m, kr, caps)) a.members.push_back(m);
            }
            if (static_cast<int>(a.members.size()) < count) continue;
            a.members.resize(count);
            for (std::size_t i = 0; i < a.members.size(); ++i)
                for (std::size_t j = 0; j < a.members.size(); ++j)
                    if (i != j && contains_colorful_minor(a.members[j], a.members[i], caps))
                        throw std::logic_error("anti-chain members are comparable");
            return a;
        }
    throw CapExceeded("no anti-chain of " + std::to_string(count) + " members for r = " +
                      std::to_string(r) + " within " + std::to_string(caps.antichain_vertices) + " vertices");
}

DecoratedGraph decorate(const ColorfulGraph& g, const MinorAntichain& antichain) {
    if (g.q() > static_cast<int>(antichain.members.size()))
        throw PreconditionError("anti-chain has fewer members than colors");
    DecoratedGraph d;
    auto edges = g.edges();
    int next = g.n();
    d.core.resize(g.n());
    for (int v = 0; v < g.n(); ++v) d.core[v] = v;
    for (int v = 0; v < g.n(); ++v)
        for (int i = 1; i <= g.q(); ++i) {
            if (!(g.palette(v) & color_bit(i))) continue;
            const ColorfulGraph& a = antichain.members[i - 1];
            DecorationTag tag{v, i, {}};
            for (int x = 0; x < a.n(); ++x) {
                tag.vertices.push_back(next + x);
                edges.emplace_back(v, next + x);
                d.core.push_back(-1);
            }
            for (auto [x, y] : a.edges()) edges.emplace_back(next + x, next + y);
            next += a.n();
            d.tags.push_back(std::move(tag));
        }
    d.graph = ColorfulGraph(next, 0, edges);
    return d;
}

DecoratedGraph decorate(const ColorfulGraph& g, int r, const Caps& caps) {
    if (g.q() == 0) return decorate(g, MinorAntichain{r, 0, 0, {}});
    return decorate(g, build_minor_antichain(r, g.q(), caps));
}

std::optional<MinorModel> find_plain_minor(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps) {
    if (host.q() != 0 || pattern.q() != 0) throw PreconditionError("plain minor check needs uncolored graphs");
    BlockMinor solver(host, pattern, caps);
    std::vector<int> P(pattern.n()), V(host.n());
    for (int i = 0; i < pattern.n(); ++i) P[i] = i;
    for (int i = 0; i < host.n(); ++i) V[i] = i;
    auto b = solver.solve(P, V, {});
    if (!b) return std::nullopt;
    MinorModel m{*b};
    std::string bad = model_violation(host, pattern, m);
    if (!bad.empty()) throw std::logic_error("block decomposition produced an invalid model: " + bad);
    return m;
}

ReducedCheck reduced_minor_model(const ColorfulGraph& host, const ColorfulGraph& pattern, int r, const Caps& caps) {
    ColorfulGraph kr = complete_graph(r);
    if (contains_colorful_minor(plain(host), kr, caps)) throw PreconditionError("host contains K_r as a minor");
    if (contains_colorful_minor(plain(pattern), kr, caps)) throw PreconditionError("pattern contains K_r as a minor");
    int q = std::max(host.q(), pattern.q());
    MinorAntichain a = q == 0 ? MinorAntichain{r, 0, 0, {}} : build_minor_antichain(r, q, caps);
    ReducedCheck out{false, decorate(host.with_q(q), a), decorate(pattern.with_q(q), a), std::nullopt};
    out.model = find_plain_minor(out.host.graph, out.pattern.graph, caps);
    out.contains = out.model.has_value();
    return out;
}

bool reduced_minor_check(const ColorfulGraph& host, const ColorfulGraph& pattern, int r, const Caps& caps) {
    return reduced_minor_model(host, pattern, r, caps).contains;
}

}  // namespace chroma
