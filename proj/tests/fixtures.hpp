// Shared small instances.  All are embedded via explicit rotations or an
// oriented face list; vertex ids are 0-based.

#ifndef PWTRI_TESTS_FIXTURES_HPP
#define PWTRI_TESTS_FIXTURES_HPP

#include "pwtri/embedded_graph.hpp"

namespace pwtri::fixtures {

// Triangle 0-1-2.
inline EmbeddedMultigraph k3() {
    return EmbeddedMultigraph::from_oriented_faces(3, {{0, 1, 2}, {0, 2, 1}});
}

// 4-cycle 0-1-2-3.
inline EmbeddedMultigraph c4() {
    return EmbeddedMultigraph::from_rotations(4, {{1, 3}, {0, 2}, {1, 3}, {2, 0}});
}

// Cycle on n vertices.
inline EmbeddedMultigraph cycle(int n) {
    std::vector<std::vector<VertexId>> rot(n);
    for (int v = 0; v < n; ++v) rot[v] = {(v + 1) % n, (v + n - 1) % n};
    return EmbeddedMultigraph::from_rotations(n, rot);
}

// Path 0-1-...-(n-1).
inline EmbeddedMultigraph path(int n) {
    std::vector<std::vector<VertexId>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (v > 0) rot[v].push_back(v - 1);
        if (v + 1 < n) rot[v].push_back(v + 1);
    }
    return EmbeddedMultigraph::from_rotations(n, rot);
}

// Complete graph on 4 vertices, embedded with vertex 3 inside triangle 0-1-2.
inline EmbeddedMultigraph k4() {
    return EmbeddedMultigraph::from_oriented_faces(
        4, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {0, 2, 1}});
}

// Octahedron: apexes 0 (top) and 5 (bottom), ring 1-2-3-4.
inline EmbeddedMultigraph octahedron() {
    return EmbeddedMultigraph::from_oriented_faces(
        6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
            {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}});
}

// Icosahedron: top 0, upper ring 1..5, lower ring 6..10, bottom 11.
inline EmbeddedMultigraph icosahedron() {
    std::vector<std::vector<VertexId>> faces;
    auto up = [](int i) { return 1 + i % 5; };
    auto lo = [](int i) { return 6 + i % 5; };
    for (int i = 0; i < 5; ++i) {
        faces.push_back({0, up(i), up(i + 1)});
        faces.push_back({up(i), lo(i), up(i + 1)});
        faces.push_back({up(i + 1), lo(i), lo(i + 1)});
        faces.push_back({11, lo(i + 1), lo(i)});
    }
    return EmbeddedMultigraph::from_oriented_faces(12, faces);
}

// Fan: path 1-2-3-4-5 plus apex 0 adjacent to all of it.
inline EmbeddedMultigraph fan5() {
    return EmbeddedMultigraph::from_oriented_faces(
        6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 4, 3, 2, 1}});
}

// Star K_{1,4}: center 0.
inline EmbeddedMultigraph star5() {
    return EmbeddedMultigraph::from_rotations(
        5, {{1, 2, 3, 4}, {0}, {0}, {0}, {0}});
}

// Two triangles sharing vertex 0 (bowtie): 0-1-2 and 0-3-4.
inline EmbeddedMultigraph two_tri() {
    return EmbeddedMultigraph::from_rotations(
        5, {{4, 3, 2, 1}, {0, 2}, {0, 1}, {0, 4}, {0, 3}});
}

// Two 4-cycles sharing edge (0,1): 0-2-1-3-0 and 0-4-1-5-0.
inline EmbeddedMultigraph dbl_sq() {
    return EmbeddedMultigraph::from_rotations(
        6, {{1, 5, 3}, {4, 0, 2}, {1, 3}, {2, 0}, {1, 5}, {4, 0}});
}

// Four length-2 paths from 0 to 1 through 2,3,4,5 (no (0,1) edge).
inline EmbeddedMultigraph four_spokes() {
    return EmbeddedMultigraph::from_rotations(
        6, {{2, 3, 4, 5}, {5, 4, 3, 2}, {0, 1}, {0, 1}, {0, 1}, {0, 1}});
}

}  // namespace pwtri::fixtures

#endif
