#pragma once

#include <string>
#include <variant>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

struct LinkagePath {
    int source = 0;  // index of the source set
    std::vector<int> vertices;
};

struct Linkage {
    std::vector<LinkagePath> paths;
};

struct SeparatorResult {
    std::vector<int> I;  // 0-based source indices
    std::vector<int> S;
};

using VertexSet = std::vector<int>;

// Maximum X-Y linkage (vertex-disjoint paths); single-vertex paths for X and Y in common.
Linkage max_linkage(const ColorfulGraph& g, const VertexSet& X, const VertexSet& Y);
// Minimum X-Y separator.
VertexSet min_separator(const ColorfulGraph& g, const VertexSet& X, const VertexSet& Y);

// A linkage of order k, or a separator of size < k. The linkage wins when both exist.
std::variant<Linkage, VertexSet> menger(const ColorfulGraph& g, const VertexSet& X, const VertexSet& Y, int k);

std::variant<Linkage, SeparatorResult> multicolor_linkage(const ColorfulGraph& g, const std::vector<VertexSet>& sources,
                                                          const VertexSet& Y, int k);

// Empty when every path is an X_{source}-Y path and the paths are disjoint.
std::string linkage_violation(const ColorfulGraph& g, const std::vector<VertexSet>& sources, const VertexSet& Y,
                              const Linkage& l);
// Empty when no component of g - S meets both a source in I and Y.
std::string separator_violation(const ColorfulGraph& g, const std::vector<VertexSet>& sources, const VertexSet& Y,
                                const SeparatorResult& r);

}  // namespace chroma
