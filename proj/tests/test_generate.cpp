#include <set>

#include "doctest.h"
#include "pwtri/augment.hpp"
#include "pwtri/cut_structure.hpp"
#include "pwtri/generate.hpp"
#include "pwtri/oracle.hpp"

using namespace pwtri;

TEST_CASE("fixed families have the expected shape") {
    auto c = gen_cycle(4);
    CHECK(c.num_vertices() == 4);
    CHECK(c.num_edges() == 4);
    auto g = gen_grid(3);
    CHECK(g.num_vertices() == 9);
    CHECK(g.num_edges() == 12);
    CHECK(g.euler_ok());
    auto f = gen_fan(6);
    CHECK(f.num_edges() == 9);
    CHECK(is_maximal_outerplanar(f));
    CHECK(gen_path(5).num_edges() == 4);
}

TEST_CASE("same seed gives identical graphs") {
    Rng a(42), b(42), c(43);
    auto ga = random_planar_2connected(10, a);
    auto gb = random_planar_2connected(10, b);
    auto gc = random_planar_2connected(10, c);
    CHECK(ga.simple_edges() == gb.simple_edges());
    CHECK(rotation_lists(ga) == rotation_lists(gb));
    CHECK(ga.simple_edges() != gc.simple_edges());
}

TEST_CASE("random triangulations are 3-connected triangulations") {
    Rng rng(7);
    for (int n : {4, 6, 9, 12}) {
        auto g = random_triangulation(n, rng);
        CHECK(g.num_vertices() == n);
        CHECK(g.num_edges() == 3 * n - 6);
        CHECK(g.is_multi_triangulated());
        CHECK(g.is_simple());
        CHECK(cut_vertices(g).empty());
        CHECK(structural_cut_pairs(g).empty());
    }
}

TEST_CASE("thinned families keep their connectivity class") {
    Rng rng(11);
    for (int i = 0; i < 10; ++i) {
        auto g3 = random_planar_3connected(6 + i, rng);
        CHECK(cut_vertices(g3).empty());
        CHECK(structural_cut_pairs(g3).empty());
        auto g2 = random_planar_2connected(6 + i, rng);
        CHECK(cut_vertices(g2).empty());
        auto g1 = random_planar_connected(6 + i, rng);
        CHECK(g1.is_connected());
        CHECK(g1.euler_ok());
    }
}

TEST_CASE("random outerplanar graphs carry an outer-planar embedding") {
    Rng rng(23);
    for (int i = 0; i < 10; ++i) {
        auto g = random_outerplanar(4 + i, rng);
        CHECK(g.is_connected());
        CHECK(g.euler_ok());
        // Some face visits every vertex.
        bool outer = false;
        for (const auto& f : g.trace_faces()) {
            std::set<VertexId> vs;
            for (DartId d : f.darts) vs.insert(g.origin(d));
            if ((int)vs.size() == g.num_vertices()) outer = true;
        }
        CHECK(outer);
    }
}

TEST_CASE("block trees are connected and full of cut vertices") {
    Rng rng(5);
    auto g = random_block_tree(4, 5, rng);
    CHECK(g.is_connected());
    CHECK(g.euler_ok());
    CHECK(g.is_simple());
    CHECK(cut_vertices(g).size() >= 1);
}
