#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chroma/caps.hpp"
#include "chroma/graph.hpp"

namespace chroma {

// branch_sets[a] is the sorted list of host vertices forming the branch set of
// pattern vertex a.
struct MinorModel {
    std::vector<std::vector<int>> branch_sets;
    bool operator==(const MinorModel&) const = default;
};

struct RootedInstance {
    ColorfulGraph graph;
    std::vector<int> roots;
};

// Throws CapExceeded unless |host| <= engine_host, or |pattern| <= engine_small_pattern
// and |host| <= engine_host_small_pattern.
void check_engine_caps(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps);

std::optional<MinorModel> find_colorful_minor(const ColorfulGraph& host, const ColorfulGraph& pattern,
                                              const Caps& caps = {});

// Host root i must lie in the branch set of pattern root i.
std::optional<MinorModel> find_rooted_minor(const RootedInstance& host, const RootedInstance& pattern,
                                            const Caps& caps = {});

bool contains_colorful_minor(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps = {});

// Independent check of the model invariants. Returns an empty string when valid,
// otherwise a description of the first violation.
std::string model_violation(const ColorfulGraph& host, const ColorfulGraph& pattern, const MinorModel& model,
                            const std::vector<std::pair<int, int>>& roots = {});
inline bool verify_model(const ColorfulGraph& host, const ColorfulGraph& pattern, const MinorModel& model) {
    return model_violation(host, pattern, model).empty();
}

// Replays a model as a sequence of edits on host. The final graph is the pattern
// with vertices in model order.
struct EditReplay {
    std::vector<Edit> edits;
    ColorfulGraph result;
};
EditReplay replay_model(const ColorfulGraph& host, const ColorfulGraph& pattern, const MinorModel& model);

// Removes vertices from the model while it stays valid; the result is inclusion-minimal.
MinorModel minimize_model(const ColorfulGraph& host, const ColorfulGraph& pattern, MinorModel model);

// m disjoint copies of g.
ColorfulGraph multiply(const ColorfulGraph& g, int m);

}  // namespace chroma
