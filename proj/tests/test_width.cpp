#include <random>

#include "chroma/errors.hpp"
#include "chroma/families.hpp"
#include "chroma/width.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chroma;

namespace {

// Components of g - X, each one checked against all q colors.
bool outside_restricted(const ColorfulGraph& g, const std::vector<int>& X) {
    std::vector<int> rest;
    for (int v = 0; v < g.n(); ++v)
        if (std::find(X.begin(), X.end(), v) == X.end()) rest.push_back(v);
    auto h = g.induced(rest);
    for (auto& c : components(h)) {
        Palette p = 0;
        for (int v : c) p |= h.palette(v);
        if (p == full_palette(g.q())) return false;
    }
    return true;
}

int largest_by_oracle(const ColorfulGraph& g, const std::function<ColorfulGraph(int)>& make) {
    int k = 0;
    while (make(k + 1).n() <= g.n() && oracle::has_minor(g, make(k + 1), {})) ++k;
    return k;
}

// A star around `center` with one leaf per component of g - center.
StarDecomposition star_around(const ColorfulGraph& g, const std::vector<int>& center) {
    StarDecomposition s{center, {}};
    std::vector<int> rest;
    for (int v = 0; v < g.n(); ++v)
        if (std::find(center.begin(), center.end(), v) == center.end()) rest.push_back(v);
    auto h = g.induced(rest);
    for (auto& c : components(h)) {
        std::set<int> leaf;
        for (int i : c) {
            int v = rest[i];
            leaf.insert(v);
            for (int w : g.neighbors(v)) leaf.insert(w);
        }
        s.leaves.emplace_back(leaf.begin(), leaf.end());
    }
    return s;
}

}  // namespace

TEST_CASE("torso examples") {
    auto g = make_grid(2, 3);
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    CHECK(torso(g, all) == g);

    auto p = path_graph(3);
    auto t = torso(p, {0, 2});
    CHECK(t.n() == 2);
    CHECK(t.edges() == std::vector<Edge>{{0, 1}});
    CHECK(torso(p, {}).n() == 0);

    ColorfulGraph c(3, 1, {{0, 1}, {1, 2}}, {color_bit(1), 0, 0});
    auto tc = torso(c, {0, 1});
    CHECK(tc.palette(0) == color_bit(1));
    CHECK_THROWS_AS(torso(p, {3}), PreconditionError);
}

TEST_CASE("colorful torso examples") {
    ColorfulGraph p2(2, 1, {{0, 1}}, {0, color_bit(1)});
    TreeDecomposition one{{{0, 1}}, {}, -1, {}};
    CHECK(colorful_torso(p2, one, 0) == p2);

    TreeDecomposition two{{{0}, {0, 1}}, {{0, 1}}, -1, {}};
    auto near = colorful_torso(p2, two, 0);
    REQUIRE(near.n() == 1);
    CHECK(near.palette(0) == color_bit(1));
    CHECK(colorful_torso(p2, two, 1) == p2);

    ColorfulGraph plain(3, 1, {{0, 1}, {1, 2}}, {color_bit(1), 0, 0});
    TreeDecomposition path{{{0, 1}, {1, 2}}, {{0, 1}}, -1, {}};
    auto t = colorful_torso(plain, path, 0);
    CHECK(t.palette(0) == color_bit(1));
    CHECK(t.palette(1) == 0);

    TreeDecomposition broken{{{0}, {1}}, {{0, 1}}, -1, {}};
    CHECK_THROWS_AS(colorful_torso(p2, broken, 0), PreconditionError);
}

TEST_CASE("treewidth examples") {
    CHECK(treewidth_exact(path_graph(5)) == 1);
    CHECK(treewidth_exact(complete_bipartite(1, 4)) == 1);
    CHECK(treewidth_exact(complete_graph(4)) == 3);
    CHECK(treewidth_exact(make_grid(3, 3)) == 3);
    CHECK(treewidth_exact(ColorfulGraph(0, 0)) == -1);
    CHECK(treewidth_exact(ColorfulGraph(4, 0)) == 0);
    CHECK(treewidth_exact(cycle_graph(6)) == 2);
    CHECK_THROWS_AS(treewidth_exact(make_grid(4, 5)), CapExceeded);
}

TEST_CASE("treewidth matches all elimination orders") {
    std::mt19937 rng(79);
    for (int i = 0; i < 200; ++i) {
        auto g = oracle::random_graph(rng, 1 + i % 7, 0, 0.2 + 0.1 * (i % 6), 0);
        int tw = treewidth_exact(g);
        CHECK(tw == oracle::treewidth(g));
        auto d = treewidth_decomposition(g);
        auto rep = validate_decomposition(g, d);
        CHECK(rep.valid);
        CHECK(rep.width == tw);
    }
}

TEST_CASE("decomposition validation") {
    auto g = cycle_graph(4);
    auto single = validate_decomposition(g, {{{0, 1, 2, 3}}, {}, -1, {}});
    CHECK(single.valid);
    CHECK(single.width == 3);

    auto good = validate_decomposition(g, {{{0, 1, 2}, {0, 2, 3}}, {{0, 1}}, -1, {}});
    CHECK(good.valid);
    CHECK(good.width == 2);
    CHECK(good.adhesion == 2);

    auto missing = validate_decomposition(g, {{{0, 1, 2}, {2, 3}}, {{0, 1}}, -1, {}});
    CHECK_FALSE(missing.valid);
    CHECK(missing.problem.find("edge 0-3") != std::string::npos);

    auto gap = validate_decomposition(g, {{{0, 1, 3}, {1, 2}, {2, 3, 0}}, {{0, 1}, {1, 2}}, -1, {}});
    CHECK_FALSE(gap.valid);
    CHECK(gap.problem.find("vertex 0") != std::string::npos);

    CHECK_FALSE(validate_decomposition(g, {{{0, 1, 2, 3}, {0}}, {}, -1, {}}).valid);
    CHECK(validate_decomposition(ColorfulGraph(0, 0), {}).valid);
}

TEST_CASE("restricted-leaf decompositions") {
    // Colored vertices 0 and 1 in the center; two uncolored pendant paths.
    ColorfulGraph g(5, 1, {{0, 1}, {0, 2}, {2, 3}, {1, 4}}, {color_bit(1), color_bit(1), 0, 0, 0});
    TreeDecomposition d{{{0, 1}, {0, 2, 3}, {1, 4}}, {{0, 1}, {0, 2}}, 0, {1, 2}};
    CHECK(validate_restricted_leaf_decomposition(g, d, 3));
    CHECK_FALSE(validate_restricted_leaf_decomposition(g, d, 2));

    auto colored = g.with_palette(3, color_bit(1));
    CHECK_FALSE(validate_restricted_leaf_decomposition(colored, d, 3));
    TreeDecomposition untagged = d;
    untagged.leaves = {2};
    CHECK(validate_restricted_leaf_decomposition(colored, untagged, 3));

    TreeDecomposition inner = d;
    inner.leaves = {0};
    CHECK_FALSE(validate_restricted_leaf_decomposition(g, inner, 3));
}

TEST_CASE("rtw examples") {
    auto sg = segregated_grid({1, 2, {}});
    auto r = rtw_exact(sg);
    CHECK(r.value == 1);
    std::vector<int> colored;
    for (int v = 0; v < sg.n(); ++v)
        if (sg.palette(v)) colored.push_back(v);
    CHECK(r.X == colored);

    CHECK(rtw_exact(segregated_grid({1, 3, {}})).value >= 2);

    auto uncolored = make_grid(3, 3).with_q(1);
    auto none = rtw_exact(uncolored);
    CHECK(none.value == -1);
    CHECK(none.X.empty());

    auto rb = rainbow(2, make_grid(2, 3));
    CHECK(rtw_exact(rb).value <= treewidth_exact(rb));
    CHECK(rtw_exact(rb).value == treewidth_exact(rb));

    auto plain = make_grid(2, 3);
    CHECK(rtw_exact(plain).value == treewidth_exact(plain));
    CHECK(rtw_exact(ColorfulGraph(0, 0)).value == -1);
    CHECK_THROWS_AS(rtw_exact(make_grid(4, 5).with_q(1)), CapExceeded);
}

TEST_CASE("rtw witnesses and bounds") {
    std::mt19937 rng(83);
    for (int i = 0; i < 150; ++i) {
        auto g = oracle::random_graph(rng, 1 + i % 7, 1 + i % 3, 0.4, 0.25);
        auto r = rtw_exact(g);
        CHECK(outside_restricted(g, r.X));
        CHECK(r.value <= treewidth_exact(g));
        int witness = r.X.empty() ? -1 : oracle::treewidth(torso(g, r.X));
        CHECK(witness == r.value);
        // No smaller value over any other admissible set.
        int best = treewidth_exact(g);
        for (std::uint32_t x = 0; x < (1u << g.n()); ++x) {
            std::vector<int> X;
            for (int v = 0; v < g.n(); ++v)
                if (x >> v & 1) X.push_back(v);
            if (outside_restricted(g, X)) best = std::min(best, X.empty() ? -1 : oracle::treewidth(torso(g, X)));
        }
        CHECK(r.value == best);
        CHECK(srtw_exact(g).value == rtw_exact(fusion(g)).value);
    }
}

TEST_CASE("rainbow Hadwiger examples") {
    CHECK(rainbow_hadwiger(rainbow(2, complete_graph(4))) == 4);
    CHECK(rainbow_hadwiger(ColorfulGraph(2, 2, {{0, 1}}, {color_bit(1), color_bit(2)})) == 1);
    CHECK(rainbow_hadwiger(make_grid(2, 2).with_q(1)) == 0);
    CHECK(hadwiger_number(make_grid(3, 3)) == 4);
    CHECK(hadwiger_number(ColorfulGraph(0, 0)) == 0);
    ColorfulGraph split(2, 2, {{0, 1}}, {color_bit(1), color_bit(2)});
    CHECK(strong_rainbow_hadwiger(split) == 2);
}

TEST_CASE("Hadwiger numbers match the labeling oracle") {
    std::mt19937 rng(89);
    for (int i = 0; i < 80; ++i) {
        int q = i % 3;
        auto g = oracle::random_graph(rng, 1 + i % 6, q, 0.5, 0.4);
        CHECK(rainbow_hadwiger(g) == largest_by_oracle(g, [&](int k) { return rainbow(q, complete_graph(k, q)); }));
        CHECK(hadwiger_number(g) ==
              largest_by_oracle(ColorfulGraph(g.n(), 0, g.edges()), [](int k) { return complete_graph(k); }));
        if (q > 0) CHECK(strong_rainbow_hadwiger(g) >= rainbow_hadwiger(g));
    }
}

TEST_CASE("rh never grows under edits") {
    std::mt19937 rng(97);
    for (int i = 0; i < 60; ++i) {
        auto g = oracle::random_graph(rng, 3 + i % 5, 1 + i % 2, 0.5, 0.5);
        int rh = rainbow_hadwiger(g);
        for (int step = 0; step < 4 && g.n() > 0; ++step) {
            auto edits = all_edits(g);
            if (edits.empty()) break;
            g = apply_edit(g, edits[std::uniform_int_distribution<std::size_t>(0, edits.size() - 1)(rng)]);
            int next = rainbow_hadwiger(g);
            CHECK(next <= rh);
            rh = next;
        }
    }
}

TEST_CASE("bidimensionality") {
    for (int k = 1; k <= 3; ++k) {
        auto g = make_grid(k, k);
        std::vector<int> all(g.n());
        std::iota(all.begin(), all.end(), 0);
        CHECK(bidimensionality(g, all) == k);
        CHECK(bidimensionality(g, {}) == 0);
    }
    auto g = make_grid(3, 3);
    CHECK(bidimensionality(g, {0, 1, 3, 4}) == 2);
    CHECK(bidimensionality(g, {0, 8}) == 1);
    CHECK_THROWS_AS(bidimensionality(g, {9}), PreconditionError);

    CHECK(sbsg(segregated_grid({1, 2, {}})) == 2);
    CHECK(sbsg(make_grid(3, 3).with_q(1)) == 0);
    CHECK(sbsg(segregated_grid({2, 1, {}})) == 2);
}

TEST_CASE("star decompositions") {
    auto g = make_grid(2, 3).with_q(1).with_palette(0, color_bit(1));
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    StarDecomposition trivial{all, {}};
    CHECK(star_violation(g, trivial).empty());
    CHECK(star_p_width(g, trivial, WidthParameter::tw) == treewidth_exact(g));
    CHECK(star_p_width(g, trivial, WidthParameter::hw) == hadwiger_number(g));

    // Triangle 0-1-3 hanging off the center path 0-1-2.
    ColorfulGraph t(4, 1, {{0, 1}, {1, 2}, {0, 3}, {1, 3}}, {0, 0, color_bit(1), 0});
    StarDecomposition s{{0, 1, 2}, {{0, 1, 3}}};
    CHECK(star_violation(t, s).empty());
    CHECK(star_p_width(t, s, WidthParameter::tw) == 2);

    StarDecomposition outside{{0, 1}, {{1, 2}, {0, 1, 3}}};
    CHECK_FALSE(star_violation(t, outside).empty());
    CHECK_THROWS_AS(star_p_width(t, outside, WidthParameter::tw), PreconditionError);

    ColorfulGraph p(4, 1, {{0, 1}, {1, 2}, {2, 3}}, {0, color_bit(1), 0, 0});
    StarDecomposition split{{1, 2}, {{0, 1, 3}}};
    CHECK_FALSE(star_violation(p, split).empty());
}

TEST_CASE("treewidth is decomposable") {
    std::mt19937 rng(101);
    for (int i = 0; i < 150; ++i) {
        int n = 2 + i % 8;
        auto g = oracle::random_graph(rng, n, 1, 0.45, 0.2);
        // A random separation: side 0 is A only, 1 is B only, 2 is both.
        std::vector<int> side(n);
        for (auto& s : side) s = std::uniform_int_distribution<int>(0, 2)(rng);
        std::vector<Edge> kept;
        for (auto [u, v] : g.edges())
            if (side[u] + side[v] != 1) kept.push_back({u, v});
        ColorfulGraph h(n, 1, kept, g.palettes());
        std::vector<int> A, B;
        for (int v = 0; v < n; ++v) {
            if (side[v] != 1) A.push_back(v);
            if (side[v] != 0) B.push_back(v);
        }
        int rhs = std::max(A.empty() ? -1 : treewidth_exact(torso(h, A)), static_cast<int>(B.size()));
        CHECK(treewidth_exact(h) <= rhs);

        std::vector<int> center;
        for (int v = 0; v < n; ++v)
            if (h.palette(v) || std::bernoulli_distribution(0.4)(rng)) center.push_back(v);
        auto star = star_around(h, center);
        CHECK(star_violation(h, star).empty());
        int bound = star_p_width(h, star, WidthParameter::tw);
        for (auto& leaf : star.leaves) bound = std::max(bound, static_cast<int>(leaf.size()));
        CHECK(treewidth_exact(h) <= bound);
    }
}
