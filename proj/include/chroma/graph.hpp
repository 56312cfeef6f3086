#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chroma/caps.hpp"

namespace chroma {

// Color i (1-based) is bit i-1.
using Palette = std::uint64_t;

constexpr int kMaxColors = 64;

inline Palette color_bit(int i) { return Palette{1} << (i - 1); }
inline Palette full_palette(int q) { return q >= 64 ? ~Palette{0} : (Palette{1} << q) - 1; }
int palette_size(Palette p);
std::vector<int> palette_colors(Palette p);
std::string palette_string(Palette p);

using Edge = std::pair<int, int>;

// A simple graph with a palette over colors 1..q on every vertex.
// Values are immutable; every modification returns a new graph.
class ColorfulGraph {
public:
    ColorfulGraph() = default;
    // Edgeless graph on n vertices with empty palettes.
    ColorfulGraph(int n, int q);
    // Throws PreconditionError on loops, parallel edges, bad endpoints or colors.
    ColorfulGraph(int n, int q, const std::vector<Edge>& edges, std::vector<Palette> palettes = {});

    int n() const { return static_cast<int>(adj_.size()); }
    int q() const { return q_; }
    int m() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    Palette palette(int v) const { return pal_[v]; }
    const std::vector<Palette>& palettes() const { return pal_; }
    // Union of all palettes.
    Palette colors() const;
    // Sorted list of (u, v) with u < v.
    std::vector<Edge> edges() const;

    ColorfulGraph with_edge(int u, int v) const;
    ColorfulGraph with_palette(int v, Palette p) const;
    ColorfulGraph with_q(int q) const;
    ColorfulGraph with_vertex(Palette p = 0) const;
    ColorfulGraph induced(const std::vector<int>& vertices) const;

    bool operator==(const ColorfulGraph& o) const {
        return q_ == o.q_ && adj_ == o.adj_ && pal_ == o.pal_;
    }

private:
    int q_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Palette> pal_;
};

// Disjoint union; vertices of b follow those of a. Colors are shared.
ColorfulGraph disjoint_union(const ColorfulGraph& a, const ColorfulGraph& b);

struct DeleteVertex { int v; };
struct DeleteEdge { int u, v; };
struct RemoveColor { int v, color; };
struct ContractEdge { int u, v; };
using Edit = std::variant<DeleteVertex, DeleteEdge, RemoveColor, ContractEdge>;

std::string edit_string(const Edit& e);

// Vertices are renumbered densely after a deletion or contraction. The contracted
// vertex takes the identifier min(u, v); identifiers above max(u, v) shift down.
ColorfulGraph apply_edit(const ColorfulGraph& g, const Edit& e);

// All edits valid on g, in a fixed order.
std::vector<Edit> all_edits(const ColorfulGraph& g);

bool is_restricted(const ColorfulGraph& g);
ColorfulGraph fusion(const ColorfulGraph& g);

// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const ColorfulGraph& g);

using CanonicalForm = std::string;

// Byte string identifying g up to palette-preserving isomorphism.
CanonicalForm canonical_form(const ColorfulGraph& g, const Caps& caps = {});
// Canonical form together with the vertex order that produced it:
// order[i] is the vertex placed at position i.
CanonicalForm canonical_form(const ColorfulGraph& g, std::vector<int>& order, const Caps& caps = {});
bool isomorphic(const ColorfulGraph& a, const ColorfulGraph& b, const Caps& caps = {});

// Rooted graphs: roots[i] is the vertex carrying root label i. Roots may coincide.
CanonicalForm rooted_canonical_form(const ColorfulGraph& g, const std::vector<int>& roots,
                                    const Caps& caps = {});

}  // namespace chroma
