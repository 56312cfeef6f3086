#pragma once

#include <string>
#include <vector>

#include "chroma/caps.hpp"
#include "chroma/families.hpp"
#include "chroma/graph.hpp"
#include "chroma/minor.hpp"

namespace chroma {

using VertexSets = std::vector<std::vector<int>>;

// All inclusion-minimal U with host[U] containing the pattern, sorted.
// Throws CapExceeded beyond caps.models sets.
VertexSets enumerate_minimal_models(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps = {});

struct PackResult {
    int pack = 0;
    VertexSets witnesses;  // pairwise disjoint, each containing the pattern
};

struct CoverResult {
    int cover = 0;
    std::vector<int> S;  // host minus S has no model
};

// Maximum set packing over the minimal models.
PackResult pack_number(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps = {});
// Minimum hitting set over the minimal models, re-checked on host minus S.
CoverResult cover_number(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps = {});

struct PackCoverResult {
    int pack = 0;
    VertexSets witnesses;
    int cover = 0;
    std::vector<int> S;
};

// Both numbers from a single enumeration of the minimal models.
PackCoverResult pack_cover(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps = {});

// The same two numbers without the model family: the largest m with m disjoint
// copies of the pattern as a colorful minor, and branching on the vertices of one
// minimal model at a time.
PackResult pack_by_copies(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps = {});
CoverResult cover_by_branching(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps = {});

// The same quantities as set packing / hitting set over a family of sets.
VertexSets max_set_packing(const VertexSets& family);
std::vector<int> min_hitting_set(const VertexSets& family);

struct HalfIntegralWitness {
    ColorfulGraph host;
    ColorfulGraph pattern;
    std::vector<MinorModel> models;
    VertexSets subgraphs;          // vertex set of each model
    std::vector<int> multiplicity;  // multiplicity[c] = number of host vertices in exactly c subgraphs
};

// k copies of segregated_grid(q, r, pi) inside segregated_grid(q, k r, pi);
// disjoint for q <= 2.
HalfIntegralWitness half_integral_witness(int q, int k, int r, const std::vector<int>& pi = {});

struct PackingCheck {
    bool ok = true;
    int index = -1;  // first failing witness, -1 for a multiplicity failure or success
    std::string reason;
};

// Each witness subgraph contains the pattern (engine) and no vertex exceeds the multiplicity.
PackingCheck verify_packing(const ColorfulGraph& host, const ColorfulGraph& pattern, const VertexSets& witnesses,
                            int max_multiplicity, const Caps& caps = {});
// Same contract with supplied models checked by the model verifier.
PackingCheck verify_packing_models(const ColorfulGraph& host, const ColorfulGraph& pattern,
                                   const std::vector<MinorModel>& models, int max_multiplicity);

}  // namespace chroma
