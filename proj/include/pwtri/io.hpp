// Graph and decomposition file formats.
//
// Graph (.gr, PACE-style with an embedding extension):
//   c <comment>
//   p tw <n> <m>
//   <u> <v>              m edge lines, 1-indexed, simple graphs only
//   r <v> <w1> ... <wk>  optional: clockwise neighbor order at v
// A file with any `r` line must give one per vertex.  Without a rotation
// block a planar embedding is computed (outer-planar inputs receive an
// outer-planar embedding when one exists); non-planar input is an error.
//
// Decomposition (.td, PACE-style restricted to paths):
//   c <comment>
//   s td <N> <width+1> <n>
//   b <i> <v1> ...       N bag lines with ids 1..N in order

#ifndef PWTRI_IO_HPP
#define PWTRI_IO_HPP

#include <optional>
#include <string>

#include "pwtri/embedded_graph.hpp"
#include "pwtri/path_decomposition.hpp"

namespace pwtri {

EmbeddedMultigraph parse_graph(const std::string& text);
std::string emit_graph(const EmbeddedMultigraph& g, bool with_rotation = true);

PathDecomposition parse_decomposition(const std::string& text);
std::string emit_decomposition(const PathDecomposition& p, int num_vertices);

/// Clockwise neighbor lists of a planar embedding found by the
/// Boyer-Myrvold test, or nullopt for non-planar input.
std::optional<std::vector<std::vector<VertexId>>> planar_embedding(
    int n, const std::vector<EdgeKey>& edges);

/// Embedding with every vertex on one face (via a temporary apex), or
/// nullopt when the graph is not outer-planar.
std::optional<std::vector<std::vector<VertexId>>> outerplanar_embedding(
    int n, const std::vector<EdgeKey>& edges);

}  // namespace pwtri

#endif
