#pragma once

#include <string>
#include <vector>

#include "chroma/caps.hpp"
#include "chroma/graph.hpp"

namespace chroma {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;  // node -> vertices
    std::vector<Edge> edges;             // between nodes
    int root = -1;                       // -1 when unrooted
    std::vector<int> leaves;             // tagged leaf set L
};

struct DecompositionReport {
    bool valid = false;
    int width = -1;
    int adhesion = 0;
    std::string problem;
};

DecompositionReport validate_decomposition(const ColorfulGraph& g, const TreeDecomposition& d);

// Vertex i of the result is the i-th smallest vertex of X; palettes are kept.
ColorfulGraph torso(const ColorfulGraph& g, std::vector<int> X);
// Vertex i of the result is the i-th smallest vertex of the bag at t.
ColorfulGraph colorful_torso(const ColorfulGraph& g, const TreeDecomposition& d, int t);

int treewidth_exact(const ColorfulGraph& g, const Caps& caps = {});
// An optimal decomposition built from an elimination order.
TreeDecomposition treewidth_decomposition(const ColorfulGraph& g, const Caps& caps = {});

// Adhesion and every bag at most s; each tagged leaf's private part is restricted.
bool validate_restricted_leaf_decomposition(const ColorfulGraph& g, const TreeDecomposition& d, int s);

struct RtwResult {
    int value = -1;
    std::vector<int> X;
};

// Every component of g - X is restricted.
bool restricted_outside(const ColorfulGraph& g, const std::vector<int>& X);
RtwResult rtw_exact(const ColorfulGraph& g, const Caps& caps = {});
RtwResult srtw_exact(const ColorfulGraph& g, const Caps& caps = {});

int hadwiger_number(const ColorfulGraph& g, const Caps& caps = {});
int rainbow_hadwiger(const ColorfulGraph& g, const Caps& caps = {});
int strong_rainbow_hadwiger(const ColorfulGraph& g, const Caps& caps = {});
// Largest k with the fully annotated k x k grid as a minor of (g, X).
int bidimensionality(const ColorfulGraph& g, const std::vector<int>& X, const Caps& caps = {});
// Largest k with the (1,k)-segregated grid as a colorful minor of the fusion.
int sbsg(const ColorfulGraph& g, const Caps& caps = {});

struct StarDecomposition {
    std::vector<int> center;
    std::vector<std::vector<int>> leaves;
};

std::string star_violation(const ColorfulGraph& g, const StarDecomposition& s);
TreeDecomposition as_tree_decomposition(const StarDecomposition& s);

enum class WidthParameter { tw, hw };
int star_p_width(const ColorfulGraph& g, const StarDecomposition& s, WidthParameter p, const Caps& caps = {});

}  // namespace chroma
