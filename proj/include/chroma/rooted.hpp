#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chroma/caps.hpp"
#include "chroma/graph.hpp"

namespace chroma {

// A rooted colorful graph of bounded detail; roots[i] carries root label i.
struct FolioEntry {
    ColorfulGraph graph;
    std::vector<int> roots;
    CanonicalForm form;
};

// All rooted colorful minors of (host, Z) with at most d edges and at most d
// non-root vertices. Z is used in ascending order. Entries are sorted by form.
std::vector<FolioEntry> compute_d_folio(const ColorfulGraph& host, std::vector<int> Z, int d, const Caps& caps = {});

// Entries with root labels permuted: label i becomes perm[i].
std::vector<FolioEntry> permute_folio_roots(const std::vector<FolioEntry>& folio, const std::vector<int>& perm,
                                            const Caps& caps = {});
// A permutation turning folio a into folio b, if any.
std::optional<std::vector<int>> folio_root_permutation(const std::vector<FolioEntry>& a,
                                                       const std::vector<FolioEntry>& b, const Caps& caps = {});

using Signature = std::vector<Palette>;
using TreeEdges = std::vector<Edge>;

// Throws PreconditionError when the edges are not a tree of host containing s and t.
bool is_sigma_connector(const ColorfulGraph& host, const TreeEdges& tree, int s, int t, const Signature& sigma);

struct Terminals {
    int s, t;
};

// Empty when the trees solve the instance: each is a connector for its pair and
// two trees share only vertices that are terminals of both.
std::string wcdp_violation(const ColorfulGraph& host, const std::vector<Terminals>& terminals,
                           const std::vector<Signature>& signatures, const std::vector<TreeEdges>& trees);

std::optional<std::vector<TreeEdges>> solve_wcdp(const ColorfulGraph& host, const std::vector<Terminals>& terminals,
                                                 const std::vector<Signature>& signatures, const Caps& caps = {});

}  // namespace chroma
