#include <cstdlib>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "pwtri/oracle.hpp"

using namespace pwtri;

namespace {

EmbeddedMultigraph complete(int n) {
    std::vector<std::vector<VertexId>> rot(n);
    // Any rotation works: the oracle ignores the embedding.
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (w != v) rot[v].push_back(w);
    EmbeddedMultigraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) g.insert_edge(v, w, kNone, kNone);
    return g;
}

EmbeddedMultigraph grid(int k) {
    EmbeddedMultigraph g;
    for (int i = 0; i < k * k; ++i) g.add_vertex();
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
            int v = r * k + c;
            if (c + 1 < k) g.insert_edge(v, v + 1, kNone, kNone);
            if (r + 1 < k) g.insert_edge(v, v + k, kNone, kNone);
        }
    }
    return g;
}

EmbeddedMultigraph complete_binary_tree(int height) {
    int n = (1 << (height + 1)) - 1;
    EmbeddedMultigraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int v = 1; v < n; ++v) g.insert_edge(v, (v - 1) / 2, kNone, kNone);
    return g;
}

}  // namespace

TEST_CASE("pathwidth of the named small graphs") {
    CHECK(exact_pathwidth(fixtures::path(4)).width == 1);
    CHECK(exact_pathwidth(fixtures::c4()).width == 2);
    CHECK(exact_pathwidth(fixtures::k4()).width == 3);
    CHECK(exact_pathwidth(fixtures::star5()).width == 1);
    CHECK(exact_pathwidth(fixtures::fan5()).width == 2);
}

TEST_CASE("witness always validates at the claimed width") {
    for (const auto& g : {fixtures::c4(), fixtures::k4(), fixtures::octahedron(),
                          fixtures::two_tri(), fixtures::dbl_sq(), fixtures::fan5()}) {
        auto res = exact_pathwidth(g);
        CHECK(res.witness.validates(g));
        CHECK(res.witness.width() == res.width);
    }
}

TEST_CASE("closed-form families agree with the subset DP") {
    for (int n = 3; n <= 8; ++n) CHECK(exact_pathwidth(fixtures::cycle(n)).width == 2);
    for (int n = 2; n <= 7; ++n) CHECK(exact_pathwidth(complete(n)).width == n - 1);
    for (int k = 2; k <= 4; ++k) CHECK(exact_pathwidth(grid(k)).width == k);
    for (int h = 1; h <= 3; ++h)
        CHECK(exact_pathwidth(complete_binary_tree(h)).width == (h + 1) / 2);
}

TEST_CASE("adding an edge never lowers the pathwidth") {
    auto g = fixtures::cycle(6);
    int before = exact_pathwidth(g).width;
    g.insert_edge(0, 3, kNone, kNone);
    CHECK(exact_pathwidth(g).width >= before);
}

TEST_CASE("oracle refuses graphs above the node cap") {
    EmbeddedMultigraph g;
    for (int i = 0; i < 27; ++i) g.add_vertex();
    CHECK_THROWS_AS(exact_pathwidth(g), std::invalid_argument);
}

TEST_CASE("PWTRI_NODE_CAP overrides the default cap") {
    setenv("PWTRI_NODE_CAP", "3", 1);
    CHECK(oracle_node_cap() == 3);
    CHECK_THROWS_AS(exact_pathwidth(fixtures::c4()), std::invalid_argument);
    unsetenv("PWTRI_NODE_CAP");
    CHECK(oracle_node_cap() == 22);
    CHECK(exact_pathwidth(fixtures::c4()).width == 2);
}

TEST_CASE("structural cut pairs by deletion testing") {
    CHECK(structural_cut_pairs(fixtures::octahedron()).empty());
    // The shared edge separates the two squares; the four other pairs each
    // isolate a degree-2 vertex.
    auto pairs = structural_cut_pairs(fixtures::dbl_sq());
    std::vector<std::pair<VertexId, VertexId>> expected{
        {0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}};
    CHECK(pairs == expected);
    // Path: both midpoints are cut vertices, so no pair qualifies.
    CHECK(structural_cut_pairs(fixtures::path(4)).empty());
}

TEST_CASE("maximal outer-planarity recognition") {
    CHECK(is_maximal_outerplanar(fixtures::fan5()));
    CHECK_FALSE(is_maximal_outerplanar(fixtures::c4()));
    CHECK_FALSE(is_maximal_outerplanar(fixtures::k4()));
    CHECK_FALSE(is_maximal_outerplanar(fixtures::star5()));
    CHECK(is_maximal_outerplanar(fixtures::k3()));

    EmbeddedMultigraph single;
    single.add_vertex();
    CHECK(is_maximal_outerplanar(single));
    CHECK(is_maximal_outerplanar(fixtures::path(2)));
}
