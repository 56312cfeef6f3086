#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chroma/caps.hpp"
#include "chroma/graph.hpp"

namespace chroma {

enum class Family { O0, O1t, O2t, O3, O4 };
std::string family_tag(Family f);

struct CatalogMember {
    ColorfulGraph graph;
    Family family;
    CanonicalForm form;
};

struct ObstructionCatalog {
    int q = 0;
    std::vector<CatalogMember> members;
    std::size_t count(Family f) const;
};

ObstructionCatalog generate_obstructions(int q, const Caps& caps = {});

// The unfiltered schemas, deduplicated up to isomorphism.
std::vector<ColorfulGraph> schema_o1(int q);
std::vector<ColorfulGraph> schema_o2(int q);

// (3q^4 - 14q^3 + 129q^2 - 22q + 48) / 24
long long obstruction_count(int q);

// First ordered pair (i, j), i != j, with members[i] a colorful minor of members[j].
std::optional<std::pair<int, int>> antichain_violation(const std::vector<ColorfulGraph>& members,
                                                       const Caps& caps = {});
inline bool verify_antichain(const std::vector<ColorfulGraph>& members, const Caps& caps = {}) {
    return !antichain_violation(members, caps).has_value();
}

}  // namespace chroma
