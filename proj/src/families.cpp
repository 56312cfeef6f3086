#include "chroma/families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "chroma/errors.hpp"

namespace chroma {

ColorfulGraph make_grid(int n, int m) {
    if (n < 1 || m < 1) throw PreconditionError("grid dimensions must be positive");
    std::vector<Edge> e;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c) {
            int v = r * m + c;
            if (c + 1 < m) e.emplace_back(v, v + 1);
            if (r + 1 < n) e.emplace_back(v, v + m);
        }
    return ColorfulGraph(n * m, 0, e);
}

ColorfulGraph make_wall(int n, int m) {
    if (n < 2 || m < 2) throw PreconditionError("wall dimensions must be at least 2");
    int cols = 2 * m;
    auto id = [&](int i, int j) { return (i - 1) * cols + (j - 1); };
    std::vector<std::vector<int>> adj(n * cols);
    auto add = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= cols; ++j) {
            if (j < cols) add(id(i, j), id(i, j + 1));
            // Vertical edges survive only where i and j have the same parity.
            if (i < n && (i % 2) == (j % 2)) add(id(i, j), id(i + 1, j));
        }
    std::vector<int> keep, index(n * cols, -1);
    for (int v = 0; v < n * cols; ++v)
        if (adj[v].size() >= 2) {
            index[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    std::vector<Edge> e;
    for (int v : keep)
        for (int w : adj[v])
            if (v < w && index[w] >= 0) e.emplace_back(index[v], index[w]);
    return ColorfulGraph(static_cast<int>(keep.size()), 0, e);
}

ColorfulGraph rainbow(int q, const ColorfulGraph& g) {
    return ColorfulGraph(g.n(), q, g.edges(), std::vector<Palette>(g.n(), full_palette(q)));
}

ColorfulGraph complete_graph(int n, int q) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return ColorfulGraph(n, q, e);
}

ColorfulGraph complete_bipartite(int a, int b, int q) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return ColorfulGraph(a + b, q, e);
}

ColorfulGraph path_graph(int n, int q) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return ColorfulGraph(n, q, e);
}

ColorfulGraph cycle_graph(int n, int q) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return ColorfulGraph(n, q, e);
}

ColorfulGraph segregated_grid_colors(int q_total, int k, const std::vector<int>& block_colors) {
    int q = static_cast<int>(block_colors.size());
    int side = q * k;
    ColorfulGraph grid = make_grid(side, side);
    std::vector<Palette> pal(side * side, 0);
    for (int b = 0; b < q; ++b)
        for (int i = 0; i < k; ++i) pal[(b * k + i) * side] = color_bit(block_colors[b]);
    return ColorfulGraph(side * side, q_total, grid.edges(), pal);
}

ColorfulGraph segregated_grid(const SegregatedSpec& spec) {
    if (spec.q < 1 || spec.k < 1) throw PreconditionError("segregated grid needs q, k >= 1");
    std::vector<int> pi = spec.pi;
    if (pi.empty()) {
        pi.resize(spec.q);
        std::iota(pi.begin(), pi.end(), 1);
    }
    std::vector<int> sorted = pi;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < spec.q; ++i)
        if (static_cast<int>(sorted.size()) != spec.q || sorted[i] != i + 1)
            throw PreconditionError("pi is not a permutation of [q]");
    return segregated_grid_colors(spec.q, spec.k, pi);
}

std::vector<ColorfulGraph> universal_family(int q, int k) {
    if (q < 0 || k < 0) throw PreconditionError("q and k must be non-negative");
    if (k == 0) return {ColorfulGraph(0, q)};
    if (q == 0) return {make_grid(k, k)};
    if (q == 1) return {segregated_grid({1, k, {1}})};
    // A vertical reflection reverses the block order, so each color pair gives a
    // single grid up to isomorphism; members are keyed by their multiset of pairs.
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<ColorfulGraph> out;
    for (int c = 1; c <= q; ++c) {
        std::vector<std::pair<int, int>> pairs;
        for (int j = 1; j <= q; ++j)
            if (j != c) pairs.emplace_back(std::min(c, j), std::max(c, j));
        std::sort(pairs.begin(), pairs.end());
        if (!seen.insert(pairs).second) continue;
        ColorfulGraph g(0, q);
        for (auto [a, b] : pairs) g = disjoint_union(g, segregated_grid_colors(q, k, {a, b}));
        out.push_back(g);
    }
    return out;
}

ColorfulGraph crossing_paths(int k) {
    if (k < 1) throw PreconditionError("crossing_paths needs k >= 1");
    // Colored ends: L_i = i, T_j = k + j, R_i = 2k + i, B_j = 3k + j.
    std::vector<std::vector<int>> x(k, std::vector<int>(k, -1));
    int next = 4 * k;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) x[i][j] = next++;
    std::vector<Palette> pal(next, 0);
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) {
        pal[i] = color_bit(1);
        pal[k + i] = color_bit(2);
        pal[2 * k + i] = color_bit(3);
        pal[3 * k + i] = color_bit(4);
        int prev = i;
        for (int j = 0; j < k; ++j)
            if (j != i) {
                e.emplace_back(std::min(prev, x[i][j]), std::max(prev, x[i][j]));
                prev = x[i][j];
            }
        e.emplace_back(std::min(prev, 2 * k + i), std::max(prev, 2 * k + i));
        prev = k + i;
        for (int r = 0; r < k; ++r)
            if (r != i) {
                e.emplace_back(std::min(prev, x[r][i]), std::max(prev, x[r][i]));
                prev = x[r][i];
            }
        e.emplace_back(std::min(prev, 3 * k + i), std::max(prev, 3 * k + i));
    }
    return ColorfulGraph(next, 4, e, pal);
}

ColorfulGraph two_k1_tau() {
    return ColorfulGraph(2, 4, {}, {color_bit(1) | color_bit(3), color_bit(2) | color_bit(4)});
}

namespace {

int rot_pos(const RotationSystem& rs, int v, int u) {
    const auto& r = rs.rotation[v];
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] == u) return static_cast<int>(i);
    return -1;
}

std::pair<int, int> next_dart(const RotationSystem& rs, int u, int v) {
    const auto& r = rs.rotation[v];
    int p = rot_pos(rs, v, u);
    return {v, r[(p + 1) % r.size()]};
}

}  // namespace

std::string rotation_violation(const ColorfulGraph& h, const RotationSystem& rs) {
    if (static_cast<int>(rs.rotation.size()) != h.n()) return "rotation list size differs from n";
    for (int v = 0; v < h.n(); ++v) {
        std::vector<int> r = rs.rotation[v];
        std::sort(r.begin(), r.end());
        if (r != h.neighbors(v)) return "rotation at vertex " + std::to_string(v) + " is not a permutation of N(v)";
    }
    // Face tracing.
    std::map<std::pair<int, int>, int> face_of;
    int faces = 0;
    for (auto [a, b] : h.edges())
        for (auto d : {std::pair{a, b}, std::pair{b, a}}) {
            if (face_of.count(d)) continue;
            auto cur = d;
            while (!face_of.count(cur)) {
                face_of[cur] = faces;
                cur = next_dart(rs, cur.first, cur.second);
            }
            ++faces;
        }
    auto comps = components(h);
    std::vector<int> comp_of(h.n());
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::vector<int> cv(comps.size(), 0), ce(comps.size(), 0);
    std::vector<std::set<int>> cf(comps.size());
    for (int v = 0; v < h.n(); ++v) ++cv[comp_of[v]];
    for (auto [a, b] : h.edges()) ++ce[comp_of[a]];
    for (auto& [d, f] : face_of) cf[comp_of[d.first]].insert(f);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        int f = ce[c] == 0 ? 1 : static_cast<int>(cf[c].size());
        if (cv[c] - ce[c] + f != 2) return "rotation system is not planar on component " + std::to_string(c);
    }
    std::set<int> outer_faces;
    std::vector<int> outer_per_comp(comps.size(), 0);
    for (auto d : rs.outer) {
        auto it = face_of.find(d);
        if (it == face_of.end()) return "outer dart is not an edge";
        if (outer_faces.insert(it->second).second && ++outer_per_comp[comp_of[d.first]] > 1)
            return "two outer faces in one component";
    }
    std::vector<bool> on_outer(h.n(), false);
    for (auto& [d, f] : face_of)
        if (outer_faces.count(f)) on_outer[d.first] = true;
    for (int v = 0; v < h.n(); ++v)
        if (h.palette(v) && h.degree(v) > 0 && !on_outer[v])
            return "colored vertex " + std::to_string(v) + " is not on an outer face";
    return {};
}

RotationSystem rotation_from_coordinates(const ColorfulGraph& h, const std::vector<std::pair<double, double>>& xy,
                                         const std::vector<std::pair<int, int>>& outer) {
    RotationSystem rs;
    rs.outer = outer;
    rs.rotation.resize(h.n());
    for (int v = 0; v < h.n(); ++v) {
        auto r = h.neighbors(v);
        std::sort(r.begin(), r.end(), [&](int a, int b) {
            double ta = std::atan2(xy[a].second - xy[v].second, xy[a].first - xy[v].first);
            double tb = std::atan2(xy[b].second - xy[v].second, xy[b].first - xy[v].first);
            return ta < tb;
        });
        rs.rotation[v] = r;
    }
    return rs;
}

namespace {

struct Chord {
    int copy;
    int ribbon;
    double a, b;  // angles of center and terminal, in [0, 1)
};

struct Pt {
    double x, y;
};

Pt on_circle(double t) { return {std::cos(2 * M_PI * t), std::sin(2 * M_PI * t)}; }

bool interleave(double a1, double b1, double a2, double b2) {
    auto inside = [](double lo, double hi, double t) {
        if (lo > hi) std::swap(lo, hi);
        return lo < t && t < hi;
    };
    return inside(a1, b1, a2) != inside(a1, b1, b2);
}

// Parameter along chord 1 (0 at its center end) of its crossing with chord 2.
double cross_param(const Chord& c1, const Chord& c2) {
    Pt p = on_circle(c1.a), r{on_circle(c1.b).x - p.x, on_circle(c1.b).y - p.y};
    Pt q = on_circle(c2.a), s{on_circle(c2.b).x - q.x, on_circle(c2.b).y - q.y};
    double den = r.x * s.y - r.y * s.x;
    return ((q.x - p.x) * s.y - (q.y - p.y) * s.x) / den;
}

}  // namespace

Multiplication disk_multiplication(const ColorfulGraph& h, const RotationSystem& rs, int k) {
    if (k < 1) throw PreconditionError("multiplication needs k >= 1");
    std::string bad = rotation_violation(h, rs);
    if (!bad.empty()) throw PreconditionError("invalid rotation certificate: " + bad);
    int n = h.n();

    // Outer sector at each vertex: ribbons start at `first[v]` in rotation order.
    std::vector<int> first(n, 0);
    std::map<std::pair<int, int>, int> face_of;
    std::set<int> outer_faces;
    {
        int faces = 0;
        for (auto [a, b] : h.edges())
            for (auto d : {std::pair{a, b}, std::pair{b, a}}) {
                if (face_of.count(d)) continue;
                auto cur = d;
                while (!face_of.count(cur)) {
                    face_of[cur] = faces;
                    cur = next_dart(rs, cur.first, cur.second);
                }
                ++faces;
            }
        for (auto d : rs.outer) outer_faces.insert(face_of.at(d));
        std::vector<bool> fixed(n, false);
        for (auto& [d, f] : face_of) {
            if (!outer_faces.count(f)) continue;
            auto [v, w] = next_dart(rs, d.first, d.second);
            if (fixed[v]) continue;
            fixed[v] = true;
            first[v] = rot_pos(rs, v, w);
        }
    }

    Multiplication out;
    std::vector<Palette> pal;
    std::vector<Edge> edges;
    out.copy_vertex.assign(k, std::vector<int>(n));
    out.copies.assign(k, {});
    for (int i = 0; i < k; ++i)
        for (int v = 0; v < n; ++v) {
            out.copy_vertex[i][v] = i * n + v;
            out.copies[i].push_back(i * n + v);
            pal.push_back(h.palette(v));
        }
    int next_id = k * n;

    // For every vertex v, every copy i and every neighbor u: the sequence of
    // vertices met along the chord from the center of v^i to the ribbon toward u.
    std::map<std::tuple<int, int, int>, std::vector<int>> chord_path;
    std::map<std::pair<int, int>, int> crossing_id;  // keyed by (chord key, chord key) pairs

    for (int v = 0; v < n; ++v) {
        int d = h.degree(v);
        if (d == 0) continue;
        std::vector<int> ribbons(d);
        for (int m = 0; m < d; ++m) ribbons[m] = rs.rotation[v][(first[v] + m) % d];
        const double gap = 0.25;
        auto jitter = [](int a, int b) { return 1e-4 * std::fmod(std::sqrt(2.0) * (a + 1) + std::sqrt(3.0) * (b + 1), 1.0); };
        auto terminal = [&](int m, int copy) {
            int u = ribbons[m];
            int s = v < u ? k - 1 - copy : copy;  // ccw slot of this copy in the ribbon
            return gap + (1 - gap) * (m + 0.1 + 0.8 * (s + 0.5) / k) / d + jitter(m, s);
        };
        auto build = [&](bool reversed) {
            std::vector<Chord> chords;
            for (int i = 0; i < k; ++i) {
                int slot = reversed ? k - 1 - i : i;
                double center = gap * (slot + 1) / (k + 1) + jitter(-1, slot);
                for (int m = 0; m < d; ++m) chords.push_back({i, m, center, terminal(m, i)});
            }
            return chords;
        };
        auto count = [&](const std::vector<Chord>& ch) {
            int c = 0;
            for (std::size_t x = 0; x < ch.size(); ++x)
                for (std::size_t y = x + 1; y < ch.size(); ++y)
                    if (ch[x].copy != ch[y].copy && interleave(ch[x].a, ch[x].b, ch[y].a, ch[y].b)) ++c;
            return c;
        };
        auto fwd = build(false), rev = build(true);
        bool use_rev = count(rev) < count(fwd);
        auto chords = use_rev ? rev : fwd;
        if (h.palette(v)) {
            for (int s = 0; s < k; ++s) out.boundary.push_back(out.copy_vertex[use_rev ? k - 1 - s : s][v]);
        }
        std::vector<std::vector<std::pair<double, int>>> along(chords.size());
        for (std::size_t x = 0; x < chords.size(); ++x)
            for (std::size_t y = x + 1; y < chords.size(); ++y) {
                if (chords[x].copy == chords[y].copy) continue;
                if (!interleave(chords[x].a, chords[x].b, chords[y].a, chords[y].b)) continue;
                int id = next_id++;
                pal.push_back(0);
                out.copies[chords[x].copy].push_back(id);
                out.copies[chords[y].copy].push_back(id);
                along[x].emplace_back(cross_param(chords[x], chords[y]), id);
                along[y].emplace_back(cross_param(chords[y], chords[x]), id);
            }
        for (std::size_t x = 0; x < chords.size(); ++x) {
            std::sort(along[x].begin(), along[x].end());
            for (std::size_t t = 1; t < along[x].size(); ++t)
                if (along[x][t].first - along[x][t - 1].first < 1e-9)
                    throw PreconditionError("degenerate crossing layout");
            std::vector<int> seq;
            for (auto& [t, id] : along[x]) seq.push_back(id);
            chord_path[{v, chords[x].copy, ribbons[chords[x].ribbon]}] = seq;
        }
    }
    for (auto [u, v] : h.edges())
        for (int i = 0; i < k; ++i) {
            std::vector<int> walk{out.copy_vertex[i][u]};
            for (int id : chord_path[{u, i, v}]) walk.push_back(id);
            auto back = chord_path[{v, i, u}];
            for (auto it = back.rbegin(); it != back.rend(); ++it) walk.push_back(*it);
            walk.push_back(out.copy_vertex[i][v]);
            for (std::size_t t = 0; t + 1 < walk.size(); ++t)
                edges.emplace_back(std::min(walk[t], walk[t + 1]), std::max(walk[t], walk[t + 1]));
        }
    for (auto& c : out.copies) std::sort(c.begin(), c.end());
    out.graph = ColorfulGraph(next_id, h.q(), edges, pal);
    return out;
}

PackingWitness segregated_packing(const SegregatedSpec& small, int k, bool half_integral) {
    int q = small.q, r = small.k;
    if (q < 1 || r < 1 || k < 1) throw PreconditionError("packing needs q, r, k >= 1");
    int host_side = q * k * r;
    int pat_side = q * r;
    auto hid = [&](int row, int col) { return row * host_side + col; };
    PackingWitness w;
    bool nested = !half_integral && q == 2;
    if (!half_integral && q > 2) throw PreconditionError("disjoint packing construction needs q <= 2");
    for (int j = 0; j < k; ++j) {
        MinorModel m;
        m.branch_sets.assign(pat_side * pat_side, {});
        std::vector<int> host_row(pat_side), col(pat_side);
        for (int pr = 0; pr < pat_side; ++pr) {
            int b = pr / r, i = pr % r;
            if (nested) host_row[pr] = b == 0 ? j * r + i : host_side - (j + 1) * r + i;
            else host_row[pr] = b * k * r + j * r + i;
        }
        for (int c = 0; c < pat_side; ++c) col[c] = nested ? 2 * r * (k - j - 1) + c : j * pat_side + c;
        for (int pr = 0; pr < pat_side; ++pr)
            for (int c = 0; c < pat_side; ++c) {
                auto& bs = m.branch_sets[pr * pat_side + c];
                int lo = c == 0 ? 0 : col[c - 1] + 1;
                for (int x = lo; x <= col[c]; ++x) bs.push_back(hid(host_row[pr], x));
                // Gap rows between consecutive pattern rows join the upper branch set.
                if (pr + 1 < pat_side)
                    for (int y = host_row[pr] + 1; y < host_row[pr + 1]; ++y) bs.push_back(hid(y, col[c]));
                std::sort(bs.begin(), bs.end());
            }
        w.models.push_back(std::move(m));
    }
    return w;
}

}  // namespace chroma
