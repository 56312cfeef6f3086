#include "chroma/minor.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "chroma/errors.hpp"

namespace chroma {

namespace {

using Mask = std::uint64_t;
inline Mask bit(int v) { return Mask{1} << v; }

// Branch sets grow one host vertex at a time. Every branching step splits on
// "w joins the branch set of a" versus "w is forbidden for a", so each
// assignment is reached at most once and nothing is lost.
class Engine {
public:
    Engine(const ColorfulGraph& host, const ColorfulGraph& pattern, const std::vector<std::pair<int, int>>& roots)
        : n_(host.n()), p_(pattern.n()) {
        for (int v = 0; v < n_; ++v) {
            hadj_[v] = 0;
            for (int w : host.neighbors(v)) hadj_[v] |= bit(w);
            hcol_[v] = host.palette(v);
        }
        for (int a = 0; a < p_; ++a) {
            padj_[a] = 0;
            for (int b : pattern.neighbors(a)) padj_[a] |= bit(b);
            pcol_[a] = pattern.palette(a);
        }
        for (auto [hv, pv] : roots) rooted_[pv] = true, root_sets_[pv] |= bit(hv);
        build_twins();
    }

    // Necessary conditions checked once before the search.
    bool prefilter(const ColorfulGraph& host, const ColorfulGraph& pattern) const {
        if (p_ > n_ || pattern.m() > host.m()) return false;
        Palette needed = pattern.colors();
        for (int c : palette_colors(needed)) {
            int want = 0, have = 0;
            for (int a = 0; a < p_; ++a) want += (pcol_[a] >> (c - 1)) & 1;
            for (int v = 0; v < n_; ++v) have += (hcol_[v] >> (c - 1)) & 1;
            if (want > have) return false;
        }
        return true;
    }

    std::optional<MinorModel> run() {
        State st;
        st.free = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
        Mask used = 0;
        for (int a = 0; a < p_; ++a) {
            st.S[a] = root_sets_[a];
            st.forb[a] = 0;
            if (used & root_sets_[a]) return std::nullopt;
            used |= root_sets_[a];
        }
        st.free &= ~used;
        if (!dfs(st)) return std::nullopt;
        MinorModel m;
        m.branch_sets.resize(p_);
        for (int a = 0; a < p_; ++a) {
            Mask s = found_[a];
            while (s) {
                m.branch_sets[a].push_back(std::countr_zero(s));
                s &= s - 1;
            }
        }
        return m;
    }

private:
    struct State {
        Mask S[64];
        Mask forb[64];
        Mask free;
    };

    int n_, p_;
    Mask hadj_[64];
    Palette hcol_[64];
    Mask padj_[64];
    Palette pcol_[64];
    Mask root_sets_[64] = {};
    bool rooted_[64] = {};
    int prev_twin_[64];
    Mask found_[64];

    void build_twins() {
        std::vector<std::vector<int>> classes;
        for (int a = 0; a < p_; ++a) {
            prev_twin_[a] = -1;
            if (rooted_[a]) continue;
            bool placed = false;
            for (auto& cls : classes) {
                bool ok = true;
                for (int b : cls)
                    if (!twins(a, b)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    prev_twin_[a] = cls.back();
                    cls.push_back(a);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({a});
        }
    }

    bool twins(int a, int b) const {
        Mask mask = ~(bit(a) | bit(b));
        return pcol_[a] == pcol_[b] && ((padj_[a] ^ padj_[b]) & mask) == 0;
    }

    Mask nbr(Mask x) const {
        Mask r = 0;
        while (x) {
            r |= hadj_[std::countr_zero(x)];
            x &= x - 1;
        }
        return r;
    }

    Palette colors(Mask x) const {
        Palette r = 0;
        while (x) {
            r |= hcol_[std::countr_zero(x)];
            x &= x - 1;
        }
        return r;
    }

    Mask reach(Mask start, Mask region) const {
        Mask r = start, frontier = start;
        while (frontier) {
            Mask next = nbr(frontier) & region & ~r;
            r |= next;
            frontier = next;
        }
        return r;
    }

    bool dfs(State& st) {
        Mask R[64], NR[64], NS[64], avail[64];
        while (true) {
            int unseeded = 0;
            for (int a = 0; a < p_; ++a) {
                avail[a] = st.free & ~st.forb[a];
                Mask s = st.S[a];
                if (s) {
                    Mask r = reach(s & -s, s | avail[a]);
                    if ((r & s) != s) return false;
                    R[a] = r;
                    NS[a] = nbr(s);
                } else {
                    ++unseeded;
                    R[a] = avail[a];
                    NS[a] = 0;
                    if (!avail[a]) return false;
                }
                if ((colors(R[a]) & pcol_[a]) != pcol_[a]) return false;
                NR[a] = nbr(R[a]);
            }
            if (unseeded > std::popcount(st.free)) return false;
            bool dead = false;
            for (int a = 0; a < p_ && !dead; ++a) {
                Mask nb = padj_[a];
                while (nb) {
                    int b = std::countr_zero(nb);
                    nb &= nb - 1;
                    if (b < a && st.S[b] && st.S[a]) continue;
                    if (!st.S[a]) continue;
                    if (!(NR[a] & R[b])) {
                        dead = true;
                        break;
                    }
                }
                int t = prev_twin_[a];
                if (t >= 0 && st.S[a] && std::countr_zero(R[t]) > std::countr_zero(st.S[a])) dead = true;
            }
            if (dead) return false;

            int x = -1, w = -1;
            if (unseeded) {
                int best_count = 1 << 30, best_deg = -1;
                Mask best_t = 0;
                for (int a = 0; a < p_; ++a) {
                    if (st.S[a]) continue;
                    Mask t = avail[a];
                    for (int c : palette_colors(pcol_[a])) {
                        Mask cm = 0;
                        Mask av = avail[a];
                        while (av) {
                            int v = std::countr_zero(av);
                            av &= av - 1;
                            if (hcol_[v] & color_bit(c)) cm |= bit(v);
                        }
                        if (std::popcount(cm) < std::popcount(t)) t = cm;
                    }
                    Mask nb = padj_[a];
                    while (nb) {
                        int b = std::countr_zero(nb);
                        nb &= nb - 1;
                        if (st.S[b] && std::popcount(NR[b] & avail[a]) < std::popcount(t)) t = NR[b] & avail[a];
                    }
                    int cnt = std::popcount(t), deg = std::popcount(padj_[a]);
                    if (cnt < best_count || (cnt == best_count && deg > best_deg)) {
                        best_count = cnt;
                        best_deg = deg;
                        best_t = t;
                        x = a;
                    }
                }
                if (!best_t) return false;
                w = std::countr_zero(best_t);
            } else {
                int best = 1 << 30;
                for (int a = 0; a < p_; ++a) {
                    Mask s = st.S[a];
                    Mask cand = NS[a] & avail[a];
                    bool disconnected = reach(s & -s, s) != s;
                    Palette missing = pcol_[a] & ~colors(s);
                    if (!disconnected && !missing) continue;
                    int cnt = std::popcount(cand);
                    if (cnt < best) {
                        best = cnt;
                        x = a;
                        Mask pref = 0;
                        if (missing) {
                            Mask cc = cand;
                            while (cc) {
                                int v = std::countr_zero(cc);
                                cc &= cc - 1;
                                if (hcol_[v] & missing) pref |= bit(v);
                            }
                        }
                        if (!pref) pref = cand;
                        w = pref ? std::countr_zero(pref) : -1;
                    }
                }
                for (int a = 0; a < p_; ++a) {
                    Mask nb = padj_[a];
                    while (nb) {
                        int b = std::countr_zero(nb);
                        nb &= nb - 1;
                        if (b < a) continue;
                        if (NS[a] & st.S[b]) continue;
                        Mask ca = NS[a] & avail[a], cb = NS[b] & avail[b];
                        int cnt = std::popcount(ca) + std::popcount(cb);
                        if (cnt < best) {
                            best = cnt;
                            if (ca & NS[b]) x = a, w = std::countr_zero(ca & NS[b]);
                            else if (cb & NS[a]) x = b, w = std::countr_zero(cb & NS[a]);
                            else if (ca) x = a, w = std::countr_zero(ca);
                            else if (cb) x = b, w = std::countr_zero(cb);
                            else x = a, w = -1;
                        }
                    }
                }
                if (x < 0) {
                    for (int a = 0; a < p_; ++a) found_[a] = st.S[a];
                    return true;
                }
                if (w < 0) return false;
            }
            State child = st;
            child.S[x] |= bit(w);
            child.free &= ~bit(w);
            if (dfs(child)) return true;
            st.forb[x] |= bit(w);
        }
    }
};

bool small_pattern_ok(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps) {
    return pattern.n() <= caps.engine_small_pattern && host.n() <= caps.engine_host_small_pattern;
}

}  // namespace

void check_engine_caps(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps) {
    bool ok = host.n() <= caps.engine_host || small_pattern_ok(host, pattern, caps);
    if (!ok || host.n() > 64 || pattern.n() > 64)
        throw CapExceeded("minor search on host with " + std::to_string(host.n()) + " vertices and pattern with " +
                          std::to_string(pattern.n()) + " vertices");
}

std::optional<MinorModel> find_colorful_minor(const ColorfulGraph& host, const ColorfulGraph& pattern,
                                              const Caps& caps) {
    return find_rooted_minor({host, {}}, {pattern, {}}, caps);
}

std::optional<MinorModel> find_rooted_minor(const RootedInstance& host, const RootedInstance& pattern,
                                            const Caps& caps) {
    const auto& g = host.graph;
    const auto& h = pattern.graph;
    if (g.q() != h.q()) throw PreconditionError("host and pattern have different q");
    if (host.roots.size() != pattern.roots.size()) throw PreconditionError("root counts differ");
    for (int r : host.roots)
        if (r < 0 || r >= g.n()) throw PreconditionError("host root outside the graph");
    for (int r : pattern.roots)
        if (r < 0 || r >= h.n()) throw PreconditionError("pattern root outside the graph");
    check_engine_caps(g, h, caps);
    if (h.n() == 0) return MinorModel{};
    std::vector<std::pair<int, int>> roots;
    std::map<int, int> host_root_owner;
    for (std::size_t i = 0; i < host.roots.size(); ++i) {
        auto [it, fresh] = host_root_owner.emplace(host.roots[i], pattern.roots[i]);
        if (!fresh && it->second != pattern.roots[i]) return std::nullopt;
        roots.emplace_back(host.roots[i], pattern.roots[i]);
    }
    Engine e(g, h, roots);
    if (!e.prefilter(g, h)) return std::nullopt;
    // Same order and size leaves no room for contraction or deletion.
    if (roots.empty() && g.n() == h.n() && g.m() == h.m() && g.colors() == 0 && h.colors() == 0 &&
        g.n() <= caps.canon_vertices) {
        std::vector<int> go, ho;
        if (canonical_form(g, go, caps) != canonical_form(h, ho, caps)) return std::nullopt;
        MinorModel m;
        m.branch_sets.resize(h.n());
        for (int i = 0; i < h.n(); ++i) m.branch_sets[ho[i]] = {go[i]};
        return m;
    }
    return e.run();
}

bool contains_colorful_minor(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps) {
    return find_colorful_minor(host, pattern, caps).has_value();
}

std::string model_violation(const ColorfulGraph& host, const ColorfulGraph& pattern, const MinorModel& model,
                            const std::vector<std::pair<int, int>>& roots) {
    if (static_cast<int>(model.branch_sets.size()) != pattern.n()) return "model size differs from pattern order";
    std::vector<int> owner(host.n(), -1);
    for (int a = 0; a < pattern.n(); ++a) {
        const auto& bs = model.branch_sets[a];
        if (bs.empty()) return "branch set " + std::to_string(a) + " is empty";
        for (int v : bs) {
            if (v < 0 || v >= host.n()) return "branch set " + std::to_string(a) + " uses a missing vertex";
            if (owner[v] >= 0) return "vertex " + std::to_string(v) + " used twice";
            owner[v] = a;
        }
    }
    for (int a = 0; a < pattern.n(); ++a) {
        const auto& bs = model.branch_sets[a];
        std::vector<int> seen{bs[0]};
        std::vector<bool> mark(host.n(), false);
        mark[bs[0]] = true;
        for (std::size_t i = 0; i < seen.size(); ++i)
            for (int w : host.neighbors(seen[i]))
                if (!mark[w] && owner[w] == a) {
                    mark[w] = true;
                    seen.push_back(w);
                }
        if (seen.size() != bs.size()) return "branch set " + std::to_string(a) + " is disconnected";
        Palette have = 0;
        for (int v : bs) have |= host.palette(v);
        if ((pattern.palette(a) & ~have) != 0) return "branch set " + std::to_string(a) + " misses a color";
    }
    for (auto [a, b] : pattern.edges()) {
        bool touch = false;
        for (int v : model.branch_sets[a]) {
            for (int w : host.neighbors(v))
                if (owner[w] == b) {
                    touch = true;
                    break;
                }
            if (touch) break;
        }
        if (!touch) return "no host edge for pattern edge " + std::to_string(a) + "-" + std::to_string(b);
    }
    for (auto [hv, pv] : roots)
        if (hv < 0 || hv >= host.n() || owner[hv] != pv)
            return "host root " + std::to_string(hv) + " not in branch set " + std::to_string(pv);
    return {};
}

EditReplay replay_model(const ColorfulGraph& host, const ColorfulGraph& pattern, const MinorModel& model) {
    std::string bad = model_violation(host, pattern, model);
    if (!bad.empty()) throw PreconditionError("invalid model: " + bad);
    EditReplay out;
    ColorfulGraph g = host;
    // label[v] = pattern vertex owning current vertex v, or -1.
    std::vector<int> label(host.n(), -1);
    for (int a = 0; a < pattern.n(); ++a)
        for (int v : model.branch_sets[a]) label[v] = a;
    auto apply = [&](const Edit& e) {
        out.edits.push_back(e);
        if (auto* d = std::get_if<DeleteVertex>(&e)) {
            label.erase(label.begin() + d->v);
        } else if (auto* c = std::get_if<ContractEdge>(&e)) {
            label.erase(label.begin() + std::max(c->u, c->v));
        }
        g = apply_edit(g, e);
    };
    for (int v = g.n() - 1; v >= 0; --v)
        if (label[v] < 0) apply(DeleteVertex{v});
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto [u, v] : g.edges())
            if (label[u] == label[v]) {
                apply(ContractEdge{u, v});
                progress = true;
                break;
            }
    }
    for (auto [u, v] : g.edges())
        if (!pattern.has_edge(label[u], label[v])) apply(DeleteEdge{u, v});
    for (int v = 0; v < g.n(); ++v)
        for (int c : palette_colors(g.palette(v) & ~pattern.palette(label[v]))) apply(RemoveColor{v, c});
    // Reorder to pattern order for the result.
    std::vector<int> order(pattern.n());
    for (int v = 0; v < g.n(); ++v) order[label[v]] = v;
    out.result = g.induced(order);
    return out;
}

MinorModel minimize_model(const ColorfulGraph& host, const ColorfulGraph& pattern, MinorModel model) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (int a = 0; a < pattern.n() && !progress; ++a) {
            auto& bs = model.branch_sets[a];
            if (bs.size() <= 1) continue;
            for (std::size_t i = 0; i < bs.size(); ++i) {
                MinorModel trial = model;
                trial.branch_sets[a].erase(trial.branch_sets[a].begin() + i);
                if (model_violation(host, pattern, trial).empty()) {
                    model = std::move(trial);
                    progress = true;
                    break;
                }
            }
        }
    }
    return model;
}

ColorfulGraph multiply(const ColorfulGraph& g, int m) {
    ColorfulGraph out(0, g.q());
    for (int i = 0; i < m; ++i) out = disjoint_union(out, g);
    return out;
}

}  // namespace chroma
