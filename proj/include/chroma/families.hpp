#pragma once

#include <map>
#include <optional>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/minor.hpp"

namespace chroma {

// Row-major: vertex (r, c) is r * m + c.
ColorfulGraph make_grid(int n, int m);
// Elementary wall from the n x 2m grid; vertices ordered row-major among survivors.
ColorfulGraph make_wall(int n, int m);
ColorfulGraph rainbow(int q, const ColorfulGraph& g);
ColorfulGraph complete_graph(int n, int q = 0);
ColorfulGraph complete_bipartite(int a, int b, int q = 0);
ColorfulGraph path_graph(int n, int q = 0);
ColorfulGraph cycle_graph(int n, int q = 0);

struct SegregatedSpec {
    int q = 1;
    int k = 1;
    std::vector<int> pi;  // pi[i-1] is the color of block i; empty means identity
};

// qk x qk grid; the first column is split top to bottom into q blocks of k
// vertices, block i colored pi(i). Vertex (r, c) is r * qk + c.
ColorfulGraph segregated_grid(const SegregatedSpec& spec);
// Same shape with colors taken from a q_total palette universe.
ColorfulGraph segregated_grid_colors(int q_total, int k, const std::vector<int>& block_colors);

std::vector<ColorfulGraph> universal_family(int q, int k);

// k horizontal paths (ends colored 1 and 3) and k vertical paths (ends colored 2
// and 4). Horizontal i meets vertical j in an uncolored degree-4 vertex iff i != j;
// horizontal i and vertical i cross without a vertex.
ColorfulGraph crossing_paths(int k);

// The pattern (2 K1, tau) with palettes {1,3} and {2,4}, q = 4.
ColorfulGraph two_k1_tau();

// Planar rotation system: rotation[v] lists the neighbors of v in counterclockwise
// order. outer[i] = (u, v) names a dart whose face is an outer face; the face of a
// dart (u, v) continues with (v, w) where w follows u in the rotation at v.
struct RotationSystem {
    std::vector<std::vector<int>> rotation;
    std::vector<std::pair<int, int>> outer;
};

// Empty string if the certificate is a planar embedding of h with every colored
// vertex on a designated outer face; otherwise the reason it fails.
std::string rotation_violation(const ColorfulGraph& h, const RotationSystem& rs);

struct Multiplication {
    ColorfulGraph graph;
    // copies[i] is the vertex set of copy i (a subdivision of h).
    std::vector<std::vector<int>> copies;
    // copy_vertex[i][v] is the vertex of copy i standing for v in h.
    std::vector<std::vector<int>> copy_vertex;
    // For boundary vertices: the order in which their copies appear on the boundary.
    std::vector<int> boundary;
};

// k drawings of h in a disk overlaid so that only pairs of copies meet, every
// crossing replaced by a fresh uncolored degree-4 vertex. Throws PreconditionError
// when the certificate is invalid.
Multiplication disk_multiplication(const ColorfulGraph& h, const RotationSystem& rs, int k);

// Rotation system of a graph drawn with straight edges at the given coordinates.
RotationSystem rotation_from_coordinates(const ColorfulGraph& h, const std::vector<std::pair<double, double>>& xy,
                                         const std::vector<std::pair<int, int>>& outer);

// Witness of a packing: one model per copy of the pattern.
struct PackingWitness {
    std::vector<MinorModel> models;
};

// Constructive packing of k copies of segregated_grid(q, r, pi) inside
// segregated_grid(q, k * r, pi). Disjoint for q <= 2; for q >= 3 each host vertex
// lies in at most two copies.
PackingWitness segregated_packing(const SegregatedSpec& small, int k, bool half_integral);

}  // namespace chroma
