#include <random>

#include "chroma/errors.hpp"
#include "chroma/families.hpp"
#include "chroma/obstructions.hpp"
#include "chroma/reduction.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chroma;

namespace {

ColorfulGraph with_apex(const ColorfulGraph& g) {
    auto a = g.with_vertex();
    for (int v = 0; v < g.n(); ++v) a = a.with_edge(v, g.n());
    return a;
}

ColorfulGraph prism() {
    return ColorfulGraph(6, 0, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// Host decoration tags touched by the branch sets of a pattern decoration.
std::set<int> touched(const DecoratedGraph& host, const MinorModel& m, const DecorationTag& t) {
    std::vector<int> tag_of(host.graph.n(), -1);
    for (std::size_t i = 0; i < host.tags.size(); ++i)
        for (int v : host.tags[i].vertices) tag_of[v] = static_cast<int>(i);
    std::set<int> out;
    for (int x : t.vertices)
        for (int v : m.branch_sets[x])
            if (tag_of[v] >= 0) out.insert(tag_of[v]);
    return out;
}

}  // namespace

TEST_CASE("anti-chain for triangles") {
    auto a = build_minor_antichain(3, 2);
    CHECK(a.degree == 3);
    CHECK(a.order == 7);
    REQUIRE(a.members.size() == 2);
    bool k33 = false, pr = false;
    for (auto& m : a.members) {
        k33 = k33 || oracle::isomorphic(m, with_apex(complete_bipartite(3, 3)));
        pr = pr || oracle::isomorphic(m, with_apex(prism()));
        CHECK(find_colorful_minor(m, complete_graph(3)));
        CHECK(m.n() == 7);
        CHECK(m.m() == 15);
    }
    CHECK(k33);
    CHECK(pr);
    CHECK(verify_antichain(a.members));
}

TEST_CASE("anti-chains for larger cliques") {
    for (int r = 4; r <= 5; ++r) {
        auto a = build_minor_antichain(r, 2);
        REQUIRE(a.members.size() == 2);
        for (auto& m : a.members) {
            CHECK(contains_colorful_minor(m, complete_graph(r)));
            CHECK(m.n() == a.order);
            CHECK(m.m() == a.members[0].m());
            for (int v = 0; v + 1 < m.n(); ++v) CHECK(m.degree(v) == a.degree + 1);
        }
        CHECK(verify_antichain(a.members));
        CHECK_FALSE(oracle::isomorphic(a.members[0], a.members[1]));
    }
    CHECK_THROWS_AS(build_minor_antichain(0, 2), PreconditionError);
    CHECK_THROWS_AS(build_minor_antichain(3, 13), PreconditionError);
    Caps tiny;
    tiny.antichain_vertices = 5;
    CHECK_THROWS_AS(build_minor_antichain(3, 2, tiny), CapExceeded);
}

TEST_CASE("decoration sizes and shape") {
    auto g = path_graph(3);
    auto plain = decorate(g, 3);
    CHECK(plain.graph == g);
    CHECK(plain.tags.empty());

    auto a = build_minor_antichain(3, 2);
    ColorfulGraph k1(1, 2, {}, {color_bit(1) | color_bit(2)});
    auto d = decorate(k1, a);
    CHECK(d.graph.n() == 1 + 2 * 7);
    CHECK(d.graph.q() == 0);
    REQUIRE(d.tags.size() == 2);
    for (auto& t : d.tags) {
        CHECK(t.owner == 0);
        CHECK(oracle::isomorphic(d.graph.induced(t.vertices), a.members[t.color - 1]));
        for (int x : t.vertices) {
            CHECK(d.core[x] == -1);
            auto nb = d.graph.neighbors(x);
            CHECK(std::find(nb.begin(), nb.end(), 0) != nb.end());
        }
    }
    CHECK(d.core[0] == 0);

    ColorfulGraph p(2, 2, {{0, 1}}, {color_bit(2), color_bit(1)});
    auto dp = decorate(p, a);
    CHECK(dp.graph.n() == 2 + 2 * 7);
    CHECK(dp.graph.m() == 1 + 2 * (15 + 7));
    // Decorations of different owners are not adjacent.
    for (int x : dp.tags[0].vertices)
        for (int y : dp.tags[1].vertices) CHECK_FALSE(dp.graph.has_edge(x, y));

    CHECK_THROWS_AS(decorate(ColorfulGraph(1, 3, {}, {color_bit(3)}), a), PreconditionError);
}

TEST_CASE("plain minors agree with the engine") {
    std::mt19937 rng(127);
    for (int i = 0; i < 150; ++i) {
        auto host = oracle::random_graph(rng, 2 + i % 8, 0, 0.35, 0);
        auto pattern = oracle::random_graph(rng, 1 + i % 4, 0, 0.5, 0);
        auto m = find_plain_minor(host, pattern);
        CHECK(m.has_value() == contains_colorful_minor(host, pattern));
        if (m) CHECK(verify_model(host, pattern, *m));
    }
    CHECK_THROWS_AS(find_plain_minor(path_graph(2, 1), path_graph(2)), PreconditionError);
}

TEST_CASE("reduced check examples") {
    ColorfulGraph k1(1, 1, {}, {color_bit(1)});
    ColorfulGraph p2(2, 1, {{0, 1}}, {color_bit(1), 0});
    CHECK(reduced_minor_check(p2, k1, 5));
    CHECK(reduced_minor_check(p2, k1, 5) == contains_colorful_minor(p2, k1));

    ColorfulGraph two(1, 2, {}, {color_bit(2)});
    ColorfulGraph host(3, 2, {{0, 1}, {1, 2}}, {color_bit(1), 0, color_bit(1)});
    CHECK_FALSE(reduced_minor_check(host, two, 5));
    CHECK_FALSE(contains_colorful_minor(host, two));

    CHECK_THROWS_AS(reduced_minor_check(complete_graph(4, 1), k1, 4), PreconditionError);
    CHECK_THROWS_AS(reduced_minor_check(k1, complete_graph(3, 1), 3), PreconditionError);
}

TEST_CASE("colorful containment carries over to the decorated graphs") {
    std::mt19937 rng(131);
    int positive = 0;
    for (int i = 0; i < 40; ++i) {
        int q = 1 + i % 2;
        auto host = oracle::random_graph(rng, 2 + i % 4, q, 0.5, 0.3);
        auto pattern = oracle::random_graph(rng, 1 + i % 2, q, 0.6, 0.3);
        if (!oracle::planar(host)) continue;
        if (!contains_colorful_minor(host, pattern)) continue;
        ++positive;
        auto r = reduced_minor_model(host, pattern, 5);
        REQUIRE(r.contains);
        REQUIRE(r.model);
        CHECK(verify_model(r.host.graph, r.pattern.graph, *r.model));
    }
    CHECK(positive > 10);
}

TEST_CASE("decorations map onto matching decorations") {
    std::mt19937 rng(137);
    int checked = 0;
    for (int i = 0; i < 30; ++i) {
        auto host = oracle::random_graph(rng, 2 + i % 3, 2, 0.6, 0.4);
        auto pattern = oracle::random_graph(rng, 1 + i % 2, 2, 0.6, 0.3);
        if (!contains_colorful_minor(host, pattern)) continue;
        auto r = reduced_minor_model(host, pattern, 5);
        REQUIRE(r.model);
        auto m = minimize_model(r.host.graph, r.pattern.graph, *r.model);
        for (auto& t : r.pattern.tags) {
            auto hit = touched(r.host, m, t);
            CHECK(hit.size() == 1);
            for (int h : hit) CHECK(r.host.tags[h].color == t.color);
            ++checked;
        }
    }
    CHECK(checked > 5);
}

TEST_CASE("a decoration can stand in for an uncolored pattern vertex") {
    // One vertex carrying both colors against an edge with a single colored end.
    ColorfulGraph host(1, 2, {}, {color_bit(1) | color_bit(2)});
    ColorfulGraph pattern(2, 2, {{0, 1}}, {color_bit(1), 0});
    CHECK_FALSE(contains_colorful_minor(host, pattern));
    auto r = reduced_minor_model(host, pattern, 5);
    CHECK(r.contains);
    REQUIRE(r.model);
    // The uncolored end lands inside the color-2 decoration.
    auto& b = r.model->branch_sets[1];
    CHECK(std::all_of(b.begin(), b.end(), [&](int v) { return r.host.core[v] == -1; }));
}
