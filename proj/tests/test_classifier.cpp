#include <random>

#include "chroma/classifier.hpp"
#include "chroma/errors.hpp"
#include "chroma/families.hpp"
#include "chroma/minor.hpp"
#include "chroma/obstructions.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chroma;

namespace {

ColorfulGraph all_colored(const ColorfulGraph& g, int q, Palette p) {
    std::vector<Palette> pal(g.n(), p);
    return ColorfulGraph(g.n(), q, g.edges(), pal);
}

// Planarity of the graph plus an apex joined to every colored vertex.
bool facial_by_embedding(const ColorfulGraph& h) {
    auto plus = ColorfulGraph(h.n(), 0, h.edges()).with_vertex();
    int apex = h.n();
    for (int v = 0; v < h.n(); ++v)
        if (h.palette(v)) plus = plus.with_edge(v, apex);
    return oracle::planar(plus);
}

bool obstruction_free(const ColorfulGraph& h, const ObstructionCatalog& cat) {
    for (auto& m : cat.members)
        if (contains_colorful_minor(h, m.graph)) return false;
    return true;
}

}  // namespace

TEST_CASE("color-facial examples") {
    CHECK(is_color_facial(all_colored(cycle_graph(4), 1, color_bit(1))));
    CHECK_FALSE(is_color_facial(all_colored(complete_graph(4), 1, color_bit(1))));
    CHECK(is_color_facial(complete_graph(4, 1).with_palette(0, color_bit(1)).with_palette(1, color_bit(1))));
    CHECK_FALSE(is_color_facial(complete_graph(5)));
}

TEST_CASE("planarity agrees with an embedding test") {
    for (int n = 0; n <= 6; ++n)
        for (auto& u : oracle::unlabeled_graphs(n)) CHECK(is_planar(u.graph) == oracle::planar(u.graph));
    std::mt19937 rng(41);
    for (int i = 0; i < 200; ++i) {
        auto g = oracle::random_graph(rng, 7 + i % 4, 0, 0.25 + 0.05 * (i % 5), 0);
        CHECK(is_planar(g) == oracle::planar(g));
    }
}

TEST_CASE("color-facial agrees with an embedding of the apex graph") {
    std::mt19937 rng(43);
    for (int i = 0; i < 300; ++i) {
        auto g = oracle::random_graph(rng, 3 + i % 6, 1 + i % 2, 0.35 + 0.05 * (i % 4), 0.4);
        CHECK(is_color_facial(g) == facial_by_embedding(g));
    }
    // Two colored vertices on a planar graph: the apex has degree 2.
    for (int n = 2; n <= 5; ++n)
        for (auto& u : oracle::unlabeled_graphs(n)) {
            if (!oracle::planar(u.graph)) continue;
            auto g = u.graph.with_q(1).with_palette(0, color_bit(1)).with_palette(n - 1, color_bit(1));
            CHECK(is_color_facial(g));
        }
}

TEST_CASE("color-segmented examples") {
    CHECK_FALSE(is_color_segmented(rainbow(2, complete_graph(3))));
    ColorfulGraph p4(4, 2, {{0, 1}, {1, 2}, {2, 3}}, {color_bit(1), 0, 0, color_bit(2)});
    CHECK(is_color_segmented(p4));
    CHECK(is_color_segmented_direct(p4));
    CHECK(is_color_segmented(rainbow(1, complete_graph(5))));
    CHECK(is_color_segmented(complete_graph(5)));
    ColorfulGraph c4(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {color_bit(1), color_bit(2), color_bit(1), color_bit(2)});
    CHECK_FALSE(is_color_segmented(c4));
    CHECK_FALSE(is_color_segmented_direct(c4));
}

TEST_CASE("segmentation modes agree") {
    for (int q = 2; q <= 3; ++q)
        for (auto& g : oracle::colorful_graphs_up_to(q == 2 ? 6 : 5, q))
            CHECK(is_color_segmented(g) == is_color_segmented_direct(g));
    std::mt19937 rng(47);
    for (int i = 0; i < 300; ++i) {
        auto g = oracle::random_graph(rng, 6, 2 + i % 2, 0.4, 0.3);
        CHECK(is_color_segmented(g) == is_color_segmented_direct(g));
    }
    CHECK_THROWS_AS(is_color_segmented_direct(make_grid(3, 3).with_q(2)), CapExceeded);
}

TEST_CASE("bicolored predicates") {
    ColorfulGraph three(1, 3, {}, {full_palette(3)});
    CHECK_FALSE(is_component_wise_bicolored(three));
    ColorfulGraph two_comps(4, 3, {{0, 1}, {2, 3}}, {color_bit(1), color_bit(2), color_bit(2), color_bit(3)});
    CHECK(is_component_wise_bicolored(two_comps));
    CHECK(is_component_wise_bicolored(ColorfulGraph(0, 2)));

    ColorfulGraph tau(2, 4, {}, {color_bit(1) | color_bit(2), color_bit(3) | color_bit(4)});
    CHECK_FALSE(is_single_component_bicolored(tau));
    ColorfulGraph shared(2, 3, {}, {color_bit(1) | color_bit(2), color_bit(1) | color_bit(3)});
    CHECK(is_single_component_bicolored(shared));
    CHECK(is_single_component_bicolored(rainbow(4, path_graph(3))));
}

TEST_CASE("crucial examples") {
    CHECK(is_crucial(make_grid(3, 3)).crucial);
    auto k5 = is_crucial(complete_graph(5));
    CHECK_FALSE(k5.crucial);
    REQUIRE(k5.witness);
    CHECK_FALSE(k5.color_facial);
    ColorfulGraph c4(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {color_bit(1), color_bit(2), color_bit(1), color_bit(2)});
    auto r = is_crucial(c4);
    CHECK_FALSE(r.crucial);
    CHECK(r.crucial == (r.color_facial && r.color_segmented && r.component_wise_bicolored &&
                        r.single_component_bicolored));
}

TEST_CASE("Erdos-Posa examples") {
    CHECK_FALSE(has_erdos_posa(rainbow(1, complete_graph(4))));
    CHECK_FALSE(has_erdos_posa(rainbow(2, complete_graph(3))));
    CHECK(has_erdos_posa(rainbow(2, path_graph(3))));
    CHECK(rainbow_ep_classification(1, cycle_graph(5)));
    CHECK(rainbow_ep_classification(2, disjoint_union(path_graph(5), path_graph(2))));
    CHECK_FALSE(rainbow_ep_classification(3, path_graph(1)));
    CHECK_FALSE(rainbow_ep_classification(2, complete_bipartite(1, 3)));
    CHECK_FALSE(rainbow_ep_classification(1, complete_graph(4)));
    CHECK(rainbow_ep_classification(0, make_grid(3, 3)));
}

TEST_CASE("crucial iff obstruction-free on small graphs") {
    for (int q = 0; q <= 2; ++q) {
        auto cat = generate_obstructions(q);
        for (auto& g : oracle::colorful_graphs_up_to(4, q)) CHECK(is_crucial(g).crucial == obstruction_free(g, cat));
    }
    auto cat3 = generate_obstructions(3);
    std::mt19937 rng(53);
    for (int i = 0; i < 200; ++i) {
        auto g = oracle::random_graph(rng, 1 + i % 7, 3, 0.4, 0.25);
        CHECK(is_crucial(g).crucial == obstruction_free(g, cat3));
    }
}

TEST_CASE("crucial graphs are closed under edits") {
    std::mt19937 rng(59);
    int crucial = 0;
    for (int i = 0; i < 300; ++i) {
        auto g = oracle::random_graph(rng, 2 + i % 6, 1 + i % 3, 0.4, 0.25);
        if (!is_crucial(g).crucial) continue;
        ++crucial;
        for (auto& e : all_edits(g)) CHECK(is_crucial(apply_edit(g, e)).crucial);
    }
    CHECK(crucial > 50);
}

TEST_CASE("rainbow classification agrees with the gate") {
    for (int n = 1; n <= 5; ++n)
        for (auto& u : oracle::unlabeled_graphs(n))
            for (int q = 0; q <= 3; ++q)
                CHECK(rainbow_ep_classification(q, u.graph) == has_erdos_posa(rainbow(q, u.graph)));
}
