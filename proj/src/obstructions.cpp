#include "chroma/obstructions.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "chroma/errors.hpp"
#include "chroma/families.hpp"
#include "chroma/minor.hpp"

namespace chroma {

std::string family_tag(Family f) {
    switch (f) {
        case Family::O0: return "O0";
        case Family::O1t: return "O1t";
        case Family::O2t: return "O2t";
        case Family::O3: return "O3";
        case Family::O4: return "O4";
    }
    return "?";
}

std::size_t ObstructionCatalog::count(Family f) const {
    std::size_t c = 0;
    for (auto& m : members) c += m.family == f;
    return c;
}

namespace {

ColorfulGraph without_edge(const ColorfulGraph& g, int u, int v) { return apply_edit(g, DeleteEdge{u, v}); }

// Every assignment of one palette from `choices` to each vertex in `slots`.
void assignments(const ColorfulGraph& base, const std::vector<int>& slots, const std::vector<Palette>& choices,
                 const std::function<void(const ColorfulGraph&)>& emit) {
    std::vector<Palette> pal = base.palettes();
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == slots.size()) {
            emit(ColorfulGraph(base.n(), base.q(), base.edges(), pal));
            return;
        }
        for (Palette p : choices) {
            pal[slots[i]] = p;
            rec(i + 1);
        }
        pal[slots[i]] = 0;
    };
    rec(0);
}

std::vector<Palette> singletons(int q) {
    std::vector<Palette> out;
    for (int i = 1; i <= q; ++i) out.push_back(color_bit(i));
    return out;
}

std::vector<Palette> pairs(int q) {
    std::vector<Palette> out;
    for (int i = 1; i <= q; ++i)
        for (int j = i + 1; j <= q; ++j) out.push_back(color_bit(i) | color_bit(j));
    return out;
}

struct Collector {
    std::set<CanonicalForm> seen;
    std::vector<ColorfulGraph> out;
    std::function<bool(const ColorfulGraph&)> keep = [](const ColorfulGraph&) { return true; };
    void operator()(const ColorfulGraph& g) {
        if (!keep(g)) return;
        if (seen.insert(canonical_form(g)).second) out.push_back(g);
    }
};

// Schema members in family order. `tilde` applies the discard rules.
std::vector<ColorfulGraph> o1(int q, bool tilde) {
    if (q < 1) return {};
    Collector c;
    auto sing = singletons(q);
    auto small = [&](const ColorfulGraph& g) { return !tilde || palette_size(g.colors()) <= 2; };
    c.keep = small;
    ColorfulGraph k5m = without_edge(complete_graph(5, q), 0, 1);
    assignments(k5m, {0, 1}, sing, std::ref(c));
    c.keep = [&](const ColorfulGraph& g) {
        if (!small(g)) return false;
        if (!tilde) return true;
        // Two monochromatic pairs on distinct colors.
        auto p = g.palettes();
        std::sort(p.begin(), p.end());
        return !(p[0] == p[1] && p[2] == p[3] && p[1] != p[2]);
    };
    assignments(complete_graph(4, q), {0, 1, 2, 3}, sing, std::ref(c));
    c.keep = small;
    ColorfulGraph k33m = without_edge(complete_bipartite(3, 3, q), 0, 3);
    assignments(k33m, {0, 3}, sing, std::ref(c));
    assignments(complete_bipartite(2, 3, q), {2, 3, 4}, sing, std::ref(c));
    return c.out;
}

std::vector<ColorfulGraph> o2(int q, bool tilde) {
    if (q < 2) return {};
    Collector c;
    auto small = [&](const ColorfulGraph& g) { return !tilde || palette_size(g.colors()) <= 2; };
    c.keep = [&](const ColorfulGraph& g) {
        if (!small(g)) return false;
        return ((g.palette(0) | g.palette(2)) & (g.palette(1) | g.palette(3))) == 0;
    };
    assignments(cycle_graph(4, q), {0, 1, 2, 3}, singletons(q), std::ref(c));
    c.keep = small;
    assignments(complete_graph(3, q), {0, 1, 2}, pairs(q), std::ref(c));
    ColorfulGraph star(4, q, {{0, 1}, {0, 2}, {0, 3}});
    assignments(star, {1, 2, 3}, pairs(q), std::ref(c));
    return c.out;
}

}  // namespace

std::vector<ColorfulGraph> schema_o1(int q) { return o1(q, false); }
std::vector<ColorfulGraph> schema_o2(int q) { return o2(q, false); }

ObstructionCatalog generate_obstructions(int q, const Caps& caps) {
    if (q < 0) throw PreconditionError("q must be non-negative");
    if (q > caps.obstructions_q)
        throw CapExceeded("obstruction catalog limited to q <= " + std::to_string(caps.obstructions_q));
    ObstructionCatalog cat;
    cat.q = q;
    auto add = [&](const ColorfulGraph& g, Family f) { cat.members.push_back({g, f, canonical_form(g, caps)}); };
    add(complete_graph(5, q), Family::O0);
    add(complete_bipartite(3, 3, q), Family::O0);
    for (auto& g : o1(q, true)) add(g, Family::O1t);
    for (auto& g : o2(q, true)) add(g, Family::O2t);
    for (int a = 1; a <= q; ++a)
        for (int b = a + 1; b <= q; ++b)
            for (int c = b + 1; c <= q; ++c)
                add(ColorfulGraph(1, q, {}, {color_bit(a) | color_bit(b) | color_bit(c)}), Family::O3);
    for (int a = 1; a <= q; ++a)
        for (int b = a + 1; b <= q; ++b)
            for (int c = b + 1; c <= q; ++c)
                for (int d = c + 1; d <= q; ++d) {
                    Palette x = color_bit(a), y = color_bit(b), z = color_bit(c), w = color_bit(d);
                    add(ColorfulGraph(2, q, {}, {x | y, z | w}), Family::O4);
                    add(ColorfulGraph(2, q, {}, {x | z, y | w}), Family::O4);
                    add(ColorfulGraph(2, q, {}, {x | w, y | z}), Family::O4);
                }
    std::set<CanonicalForm> forms;
    for (auto& m : cat.members)
        if (!forms.insert(m.form).second) throw std::logic_error("duplicate obstruction " + family_tag(m.family));
    return cat;
}

long long obstruction_count(int q) {
    if (q < 0) throw PreconditionError("q must be non-negative");
    long long x = q;
    return (3 * x * x * x * x - 14 * x * x * x + 129 * x * x - 22 * x + 48) / 24;
}

std::optional<std::pair<int, int>> antichain_violation(const std::vector<ColorfulGraph>& members, const Caps& caps) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (i == j) continue;
            if (contains_colorful_minor(members[j], members[i], caps))
                return std::pair{static_cast<int>(i), static_cast<int>(j)};
        }
    return std::nullopt;
}

}  // namespace chroma
