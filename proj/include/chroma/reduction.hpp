#pragma once

#include <optional>
#include <vector>

#include "chroma/caps.hpp"
#include "chroma/graph.hpp"
#include "chroma/minor.hpp"

namespace chroma {

// Pairwise incomparable connected graphs of equal order and size, each with a K_r minor.
// Each member is a connected d-regular graph on `order` vertices plus a universal
// apex (the last vertex).
struct MinorAntichain {
    int r = 0;
    int degree = 0;
    int order = 0;
    std::vector<ColorfulGraph> members;
};

// Smallest (d, n) in lexicographic order with at least `count` members; n is bounded
// by caps.antichain_vertices.
MinorAntichain build_minor_antichain(int r, int count, const Caps& caps = {});

struct DecorationTag {
    int owner = 0;
    int color = 0;
    std::vector<int> vertices;
};

struct DecoratedGraph {
    ColorfulGraph graph;    // q = 0
    std::vector<int> core;  // core[v] = original vertex, or -1 inside a decoration
    std::vector<DecorationTag> tags;
};

// For each color i of v, a fresh copy of member i-1 fully joined to v.
DecoratedGraph decorate(const ColorfulGraph& g, const MinorAntichain& antichain);
DecoratedGraph decorate(const ColorfulGraph& g, int r, const Caps& caps = {});

// Plain minor containment for q = 0 graphs. Splits the host at cut vertices and runs
// the engine on its blocks, so caps apply per block.
std::optional<MinorModel> find_plain_minor(const ColorfulGraph& host, const ColorfulGraph& pattern,
                                           const Caps& caps = {});

struct ReducedCheck {
    bool contains = false;
    DecoratedGraph host;
    DecoratedGraph pattern;
    std::optional<MinorModel> model;  // on the decorated graphs
};

// Both underlying graphs must exclude K_r.
ReducedCheck reduced_minor_model(const ColorfulGraph& host, const ColorfulGraph& pattern, int r,
                                 const Caps& caps = {});
bool reduced_minor_check(const ColorfulGraph& host, const ColorfulGraph& pattern, int r, const Caps& caps = {});

}  // namespace chroma
