// Instance generators for the test corpus.  Everything is deterministic
// for a fixed seed; random planar families come from repeated vertex
// insertion into faces of a triangulation followed by edge deletions
// under a connectivity constraint.

#ifndef PWTRI_GENERATE_HPP
#define PWTRI_GENERATE_HPP

#include <cstdint>
#include <random>

#include "pwtri/embedded_graph.hpp"

namespace pwtri {

/// Thin wrapper so generated bytes do not depend on the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}
    /// Uniform-ish value in [0, n).
    int below(int n) { return static_cast<int>(engine_() % static_cast<uint32_t>(n)); }
    bool coin() { return below(2) == 1; }

private:
    std::mt19937 engine_;
};

/// Clockwise neighbor lists of a simple graph with dense vertex ids;
/// normalizes dart numbering when rebuilt via from_rotations.
std::vector<std::vector<VertexId>> rotation_lists(const EmbeddedMultigraph& g);

EmbeddedMultigraph gen_cycle(int n);
EmbeddedMultigraph gen_path(int n);
EmbeddedMultigraph gen_grid(int k);
EmbeddedMultigraph gen_fan(int n);  // path on n-1 vertices plus an apex

/// Stacked triangulation: start from a triangle, repeatedly insert a vertex
/// into a face chosen at random.  Simple, 3-connected for n >= 4.
EmbeddedMultigraph random_triangulation(int n, Rng& rng);

/// Triangulation minus random edges, keeping the stated connectivity.
EmbeddedMultigraph random_planar_3connected(int n, Rng& rng);
EmbeddedMultigraph random_planar_2connected(int n, Rng& rng);
EmbeddedMultigraph random_planar_connected(int n, Rng& rng);

/// Random triangulated polygon minus random edges (kept connected); the
/// embedding keeps every vertex on one face.
EmbeddedMultigraph random_outerplanar(int n, Rng& rng);

/// Tree of 2-connected blocks glued at shared vertices; heavy on
/// cut-vertices.
EmbeddedMultigraph random_block_tree(int blocks, int block_size, Rng& rng);

}  // namespace pwtri

#endif
