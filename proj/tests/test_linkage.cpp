#include <random>

#include "chroma/families.hpp"
#include "chroma/linkage.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chroma;

namespace {

std::vector<int> random_subset(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution pick(p);
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
        if (pick(rng)) s.push_back(v);
    if (s.empty()) s.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
    return s;
}

// Largest k for which menger returns a linkage.
int linkage_order(const ColorfulGraph& g, const VertexSet& X, const VertexSet& Y) {
    int k = 0;
    while (k < g.n()) {
        auto r = menger(g, X, Y, k + 1);
        if (!std::holds_alternative<Linkage>(r)) break;
        CHECK(linkage_violation(g, {X}, Y, std::get<Linkage>(r)).empty());
        CHECK(std::get<Linkage>(r).paths.size() == static_cast<std::size_t>(k + 1));
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("menger examples") {
    auto p = path_graph(3);
    auto one = menger(p, {0}, {2}, 1);
    REQUIRE(std::holds_alternative<Linkage>(one));
    CHECK(std::get<Linkage>(one).paths[0].vertices == std::vector<int>{0, 1, 2});

    auto c4 = cycle_graph(4);
    auto two = menger(c4, {0}, {2}, 2);
    // Both paths start at the single vertex 0, so no linkage of order 2 exists.
    REQUIRE(std::holds_alternative<VertexSet>(two));
    CHECK(std::get<VertexSet>(two).size() == 1);

    auto sep = menger(p, {0}, {2}, 2);
    REQUIRE(std::holds_alternative<VertexSet>(sep));
    CHECK(std::get<VertexSet>(sep).size() <= 1);
    CHECK(oracle::min_separator_size(p, {0}, {2}) == 1);

    // With two sources on one side and two targets on the other the C4 linkage exists.
    auto pair = menger(c4, {0, 1}, {2, 3}, 2);
    REQUIRE(std::holds_alternative<Linkage>(pair));
    CHECK(linkage_violation(c4, {{0, 1}}, {2, 3}, std::get<Linkage>(pair)).empty());
}

TEST_CASE("C4 separators") {
    auto c4 = cycle_graph(4);
    auto sep = min_separator(c4, {0}, {2});
    CHECK(sep.size() == 1);
    CHECK(max_linkage(c4, {1, 3}, {2}).paths.size() == 1);
    CHECK(max_linkage(c4, {1, 3}, {0, 2}).paths.size() == 2);
    CHECK(min_separator(c4, {0, 1}, {2, 3}).size() == 2);
}

TEST_CASE("shared vertices give single-vertex paths") {
    auto p = path_graph(4);
    auto lk = max_linkage(p, {0, 2}, {1, 2});
    CHECK(lk.paths.size() == 2);
    CHECK(linkage_violation(p, {{0, 2}}, {1, 2}, lk).empty());
    CHECK(max_linkage(p, {1, 2}, {2, 3}).paths.size() == 1);
}

TEST_CASE("max linkage equals the brute-force separator") {
    std::mt19937 rng(31);
    for (int i = 0; i < 300; ++i) {
        int n = 2 + i % 9;
        auto g = oracle::random_graph(rng, n, 0, 0.3, 0);
        auto X = random_subset(rng, n, 0.3), Y = random_subset(rng, n, 0.3);
        int expected = oracle::min_separator_size(g, X, Y);
        auto lk = max_linkage(g, X, Y);
        CHECK(static_cast<int>(lk.paths.size()) == expected);
        CHECK(linkage_violation(g, {X}, Y, lk).empty());
        auto sep = min_separator(g, X, Y);
        CHECK(static_cast<int>(sep.size()) == expected);
        CHECK(separator_violation(g, {X}, Y, {{0}, sep}).empty());
        CHECK(linkage_order(g, X, Y) == expected);
    }
}

TEST_CASE("multicolor linkage examples") {
    auto p = path_graph(3);
    auto single = multicolor_linkage(p, {{0}}, {2}, 1);
    REQUIRE(std::holds_alternative<Linkage>(single));
    CHECK(std::get<Linkage>(single).paths.size() == 1);

    auto split = multicolor_linkage(p, {{0}, {2}}, {1}, 1);
    REQUIRE(std::holds_alternative<SeparatorResult>(split));
    auto& r = std::get<SeparatorResult>(split);
    CHECK(r.S.size() <= 1);
    CHECK_FALSE(r.I.empty());
    CHECK(separator_violation(p, {{0}, {2}}, {1}, r).empty());

    auto k22 = complete_bipartite(2, 2);
    auto both = multicolor_linkage(k22, {{0}, {1}}, {2, 3}, 1);
    REQUIRE(std::holds_alternative<Linkage>(both));
    auto& l = std::get<Linkage>(both);
    CHECK(l.paths.size() == 2);
    CHECK(l.paths[0].source == 0);
    CHECK(l.paths[1].source == 1);
    CHECK(linkage_violation(k22, {{0}, {1}}, {2, 3}, l).empty());
}

TEST_CASE("multicolor linkage passes its verifier") {
    std::mt19937 rng(37);
    int separators = 0, linkages = 0;
    for (int i = 0; i < 500; ++i) {
        int n = 3 + i % 8;
        auto g = oracle::random_graph(rng, n, 0, 0.35, 0);
        int l = 1 + i % 3, k = 1 + (i / 3) % 2;
        std::vector<VertexSet> sources;
        for (int j = 0; j < l; ++j) sources.push_back(random_subset(rng, n, 0.25));
        auto Y = random_subset(rng, n, 0.3);
        auto res = multicolor_linkage(g, sources, Y, k);
        if (auto* lk = std::get_if<Linkage>(&res)) {
            ++linkages;
            CHECK(linkage_violation(g, sources, Y, *lk).empty());
            std::vector<int> per(l, 0);
            for (auto& p : lk->paths) ++per[p.source];
            for (int c : per) CHECK(c == k);
        } else {
            ++separators;
            auto& r = std::get<SeparatorResult>(res);
            CHECK(separator_violation(g, sources, Y, r).empty());
            CHECK_FALSE(r.I.empty());
            CHECK(static_cast<int>(r.S.size()) < k * l);
            for (int v : r.S) CHECK(v < n);
        }
    }
    CHECK(separators > 50);
    CHECK(linkages > 50);
}

TEST_CASE("verifiers catch bad witnesses") {
    auto p = path_graph(3);
    Linkage crossing{{{0, {0, 1, 2}}, {0, {1}}}};
    CHECK_FALSE(linkage_violation(p, {{0, 1}}, {2, 1}, crossing).empty());
    Linkage gap{{{0, {0, 2}}}};
    CHECK_FALSE(linkage_violation(p, {{0}}, {2}, gap).empty());
    CHECK_FALSE(separator_violation(p, {{0}}, {2}, {{0}, {}}).empty());
}
