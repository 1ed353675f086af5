#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "pwtri/augment.hpp"
#include "pwtri/generate.hpp"
#include "pwtri/io.hpp"

using namespace pwtri;

TEST_CASE("graph round trip preserves the rotation system") {
    Rng rng(13);
    for (auto g : {fixtures::octahedron(), fixtures::fan5(), fixtures::two_tri(),
                   random_planar_connected(9, rng)}) {
        std::string text = emit_graph(g);
        auto h = parse_graph(text);
        CHECK(rotation_lists(h) == rotation_lists(g));
        CHECK(emit_graph(h) == text);
    }
}

TEST_CASE("plain edge lists get a planar embedding") {
    auto g = parse_graph("p tw 4 4\n1 2\n2 3\n3 4\n4 1\n");
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 4);
    CHECK(g.euler_ok());
    // An outer-planar input receives an outer-planar embedding.
    CHECK(has_hamiltonian_face(g));
}

TEST_CASE("graph parse errors") {
    CHECK_THROWS_AS(parse_graph("p tw 2 1\n1 1\n"), std::invalid_argument);  // loop
    CHECK_THROWS_AS(parse_graph("p tw 3 2\n1 2\n1 2\n"), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(parse_graph("p tw 2 1\n1 3\n"), std::invalid_argument);  // range
    CHECK_THROWS_AS(parse_graph("p tw 3 1\n1 2\n2 3\n"), std::invalid_argument);  // count
    // K5 is not planar.
    std::string k5 = "p tw 5 10\n";
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v) k5 += std::to_string(u) + " " + std::to_string(v) + "\n";
    CHECK_THROWS_AS(parse_graph(k5), std::invalid_argument);
    // Rotation block must cover every vertex and match the edges.
    CHECK_THROWS_AS(parse_graph("p tw 3 2\n1 2\n2 3\nr 1 2\n"), std::invalid_argument);
    // A rotation system of the wrong genus is rejected: K4 with both
    // "diagonals" at every vertex ordered to cross.
    CHECK_THROWS_AS(
        parse_graph("p tw 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n"
                    "r 1 2 3 4\nr 2 1 3 4\nr 3 1 2 4\nr 4 1 2 3\n"),
        std::invalid_argument);
}

TEST_CASE("decomposition round trip and errors") {
    auto p = parse_decomposition("s td 2 3 4\nb 1 1 2 4\nb 2 2 3 4\n");
    CHECK(p.num_bags() == 2);
    CHECK(p.width() == 2);
    CHECK(emit_decomposition(p, 4) == "s td 2 3 4\nb 1 1 2 4\nb 2 2 3 4\n");

    // Empty bags are allowed and preserved.
    auto q = parse_decomposition("s td 3 2 2\nb 1 1\nb 2\nb 3 2\n");
    CHECK(q.num_bags() == 3);
    CHECK(q.bag(1).empty());
    CHECK(emit_decomposition(q, 2) == "s td 3 1 2\nb 1 1\nb 2\nb 3 2\n");

    // Gapped interval.
    CHECK_THROWS_AS(parse_decomposition("s td 3 2 2\nb 1 1\nb 2 2\nb 3 1\n"),
                    std::invalid_argument);
    // Bag ids out of order (tree-shaped input).
    CHECK_THROWS_AS(parse_decomposition("s td 2 2 2\nb 2 1\nb 1 2\n"), std::invalid_argument);
}

TEST_CASE("emitted graphs are 1-indexed with sorted edges") {
    auto g = fixtures::k3();
    std::string text = emit_graph(g, false);
    CHECK(text == "p tw 3 3\n1 2\n1 3\n2 3\n");
}
