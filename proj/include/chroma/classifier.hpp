#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chroma/caps.hpp"
#include "chroma/graph.hpp"
#include "chroma/minor.hpp"

namespace chroma {

// Planarity of the underlying graph via K5 / K3,3 exclusion after removing
// vertices of degree <= 1 and suppressing degree-2 vertices.
bool is_planar(const ColorfulGraph& g, const Caps& caps = {});

bool is_color_facial(const ColorfulGraph& h, const Caps& caps = {});
// No member of the full O2 schema is a colorful minor.
bool is_color_segmented(const ColorfulGraph& h, const Caps& caps = {});
// Conditions A, B, C evaluated over connected vertex sets by exhaustive labeling
// (at most 8 vertices).
bool is_color_segmented_direct(const ColorfulGraph& h);
bool is_component_wise_bicolored(const ColorfulGraph& h);
bool is_single_component_bicolored(const ColorfulGraph& h);

struct CrucialWitness {
    std::string predicate;
    std::string detail;
    std::vector<int> vertices;
    std::optional<ColorfulGraph> obstruction;
    std::optional<MinorModel> model;
};

struct CrucialReport {
    bool color_facial = true;
    bool color_segmented = true;
    bool component_wise_bicolored = true;
    bool single_component_bicolored = true;
    bool crucial = true;
    std::optional<CrucialWitness> witness;
};

CrucialReport is_crucial(const ColorfulGraph& h, const Caps& caps = {});
bool has_erdos_posa(const ColorfulGraph& h, const Caps& caps = {});

// Palettes of g are ignored. True iff q <= 2 and g excludes K_{3,3-q} and K_{5-q},
// or g is empty.
bool rainbow_ep_classification(int q, const ColorfulGraph& g, const Caps& caps = {});

}  // namespace chroma
