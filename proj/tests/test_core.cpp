#include <random>

#include "chroma/caps.hpp"
#include "chroma/cgf.hpp"
#include "chroma/errors.hpp"
#include "chroma/families.hpp"
#include "chroma/graph.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chroma;

namespace {

ColorfulGraph cycle4(std::vector<Palette> pal, int q) {
    return ColorfulGraph(4, q, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, pal);
}

void check_invariants(const ColorfulGraph& g) {
    for (int v = 0; v < g.n(); ++v) {
        CHECK((g.palette(v) & ~full_palette(g.q())) == 0);
        for (int w : g.neighbors(v)) {
            CHECK(w != v);
            CHECK(w >= 0);
            CHECK(w < g.n());
            CHECK(g.has_edge(w, v));
        }
    }
    CHECK(static_cast<int>(g.edges().size()) == g.m());
}

}  // namespace

TEST_CASE("parse minimal files") {
    auto g = parse_cgf("cgf 1\nq 0\nn 1\n");
    CHECK(g.n() == 1);
    CHECK(g.q() == 0);
    CHECK(g.palette(0) == 0);

    auto k2 = parse_cgf("cgf 1\nq 2\nn 2\nc 0 1 2\ne 0 1\n");
    CHECK(k2.n() == 2);
    CHECK(k2.has_edge(0, 1));
    CHECK(k2.palette(0) == (color_bit(1) | color_bit(2)));
    CHECK(k2.palette(1) == 0);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_cgf("cgf 1\nq 1\nn 1\nc 0 2\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(std::string(e.what()).find("color 2 exceeds q=1") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_cgf("cgf 1\nq 0\nn 2\ne 0 1\ne 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_cgf("cgf 1\nq 0\nn 2\ne 0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_cgf("cgf 2\nq 0\nn 2\n"), ParseError);
    CHECK_THROWS_AS(parse_cgf("cgf 1\nq 0\nn 2\nx 1\n"), ParseError);
    CHECK_THROWS_AS(parse_cgf("cgf 1\nq 0\n"), ParseError);
    CHECK_THROWS_AS(parse_cgf("cgf 1\nq 2\nn 1\nc 0 2 1\n"), ParseError);
}

TEST_CASE("comments are skipped after the header") {
    auto g = parse_cgf("cgf 1\n# note\nq 1\nn 2\n# more\nc 1 1\ne 0 1\n");
    CHECK(g.palette(1) == color_bit(1));
    CHECK(g.m() == 1);
}

TEST_CASE("serializer output is canonical and round-trips") {
    std::string text = "cgf 1\nq 3\nn 4\nc 0 1 3\nc 2 2\ne 0 1\ne 0 3\ne 1 2\n";
    auto g = parse_cgf(text);
    CHECK(serialize_cgf(g) == text);
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        auto h = oracle::random_graph(rng, 1 + i % 9, i % 4, 0.4, 0.3);
        auto back = parse_cgf(serialize_cgf(h));
        CHECK(back == h);
    }
}

TEST_CASE("contraction merges palettes") {
    ColorfulGraph k2(2, 2, {{0, 1}}, {color_bit(1), color_bit(2)});
    auto k1 = apply_edit(k2, ContractEdge{0, 1});
    CHECK(k1.n() == 1);
    CHECK(k1.palette(0) == (color_bit(1) | color_bit(2)));

    auto tri = apply_edit(complete_graph(3), ContractEdge{0, 1});
    CHECK(tri.n() == 2);
    CHECK(tri.m() == 1);

    ColorfulGraph one(1, 1, {}, {color_bit(1)});
    CHECK(apply_edit(one, RemoveColor{0, 1}).palette(0) == 0);
}

TEST_CASE("edits reject missing targets") {
    auto p = path_graph(3);
    CHECK_THROWS_AS(apply_edit(p, DeleteVertex{3}), PreconditionError);
    CHECK_THROWS_AS(apply_edit(p, DeleteEdge{0, 2}), PreconditionError);
    CHECK_THROWS_AS(apply_edit(p, ContractEdge{0, 2}), PreconditionError);
    CHECK_THROWS_AS(apply_edit(p, RemoveColor{0, 1}), PreconditionError);
    CHECK_THROWS_AS(ColorfulGraph(2, 0, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(ColorfulGraph(2, 0, {{0, 1}, {1, 0}}), PreconditionError);
    CHECK_THROWS_AS(ColorfulGraph(1, 1, {}, {color_bit(2)}), PreconditionError);
}

TEST_CASE("random edit sequences keep the graph well formed") {
    std::mt19937 rng(3);
    for (int round = 0; round < 200; ++round) {
        auto g = oracle::random_graph(rng, 2 + round % 8, round % 3, 0.5, 0.4);
        while (true) {
            check_invariants(g);
            auto edits = all_edits(g);
            if (edits.empty()) break;
            auto e = edits[std::uniform_int_distribution<std::size_t>(0, edits.size() - 1)(rng)];
            if (auto* c = std::get_if<ContractEdge>(&e)) {
                Palette want = g.palette(c->u) | g.palette(c->v);
                auto h = apply_edit(g, e);
                CHECK(h.palette(std::min(c->u, c->v)) == want);
                CHECK(h.n() == g.n() - 1);
                g = h;
            } else {
                g = apply_edit(g, e);
            }
        }
    }
}

TEST_CASE("restricted and fusion") {
    ColorfulGraph g(2, 2, {{0, 1}}, {color_bit(1), color_bit(1)});
    CHECK(is_restricted(g));
    CHECK_FALSE(is_restricted(rainbow(2, path_graph(2))));
    CHECK_FALSE(is_restricted(complete_graph(3)));
    CHECK_FALSE(is_restricted(ColorfulGraph(0, 0)));

    ColorfulGraph h(2, 3, {{0, 1}}, {color_bit(2) | color_bit(3), 0});
    auto f = fusion(h);
    CHECK(f.q() == 1);
    CHECK(f.palette(0) == color_bit(1));
    CHECK(f.palette(1) == 0);
    CHECK(fusion(f) == f);
    auto plain = fusion(path_graph(3, 2));
    CHECK(plain.q() == 1);
    CHECK(plain.colors() == 0);
}

TEST_CASE("canonical form examples") {
    auto c = cycle4({}, 0);
    ColorfulGraph relabeled(4, 0, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    CHECK(canonical_form(c) == canonical_form(relabeled));

    auto a = cycle4({color_bit(1), color_bit(2), color_bit(1), color_bit(2)}, 2);
    auto b = cycle4({color_bit(2), color_bit(1), color_bit(2), color_bit(1)}, 2);
    CHECK(oracle::isomorphic(a, b));
    CHECK(canonical_form(a) == canonical_form(b));

    ColorfulGraph p1(3, 1, {{0, 1}, {1, 2}}, {color_bit(1), 0, 0});
    ColorfulGraph p2(3, 1, {{0, 1}, {1, 2}}, {0, 0, color_bit(1)});
    CHECK(canonical_form(p1) == canonical_form(p2));

    ColorfulGraph mid(3, 1, {{0, 1}, {1, 2}}, {0, color_bit(1), 0});
    CHECK(canonical_form(p1) != canonical_form(mid));
    CHECK(canonical_form(p1) != canonical_form(p1.with_q(2)));

    CHECK_THROWS_AS(canonical_form(make_grid(4, 5)), CapExceeded);
}

TEST_CASE("canonical forms agree with brute-force isomorphism") {
    std::vector<ColorfulGraph> pool;
    for (int q = 0; q <= 2; ++q)
        for (int n = 0; n <= 4; ++n) {
            auto part = oracle::colorful_graphs(n, q);
            pool.insert(pool.end(), part.begin(), part.end());
        }
    // Classes are pairwise non-isomorphic, so forms must be pairwise distinct.
    std::set<CanonicalForm> forms;
    for (auto& g : pool) forms.insert(canonical_form(g));
    CHECK(forms.size() == pool.size());

    std::mt19937 rng(5);
    int agreements = 0;
    for (int i = 0; i < 3000; ++i) {
        int n = 1 + i % 6;
        auto g = oracle::random_graph(rng, n, i % 3, 0.5, 0.4);
        ColorfulGraph h;
        if (i % 2 == 0) {
            std::vector<int> p(n);
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            std::vector<Edge> e;
            for (auto [u, v] : g.edges()) e.emplace_back(p[u], p[v]);
            std::vector<Palette> pal(n);
            for (int v = 0; v < n; ++v) pal[p[v]] = g.palette(v);
            h = ColorfulGraph(n, g.q(), e, pal);
        } else {
            h = oracle::random_graph(rng, n, i % 3, 0.5, 0.4);
        }
        bool same = canonical_form(g) == canonical_form(h);
        CHECK(same == oracle::isomorphic(g, h));
        agreements += same;
    }
    CHECK(agreements > 1500);
}

TEST_CASE("caps parse and reject unknown keys") {
    auto c = parse_caps("engine_host=25,models=10");
    CHECK(c.engine_host == 25);
    CHECK(c.models == 10);
    CHECK(c.canon_vertices == Caps{}.canon_vertices);
    CHECK_THROWS(parse_caps("bogus=1"));
    CHECK_THROWS(parse_caps("models=x"));
}

TEST_CASE("components and disjoint union") {
    auto g = disjoint_union(path_graph(2), complete_graph(3));
    auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3, 4});
    CHECK(g.m() == 4);
}
