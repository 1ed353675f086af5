// Brute-force ground truth for small graphs: exact pathwidth with a
// certified witness, structural cutting-pair enumeration, and a
// maximal-outer-planarity test.  Everything here is independent of the
// transformation pipeline it is used to check.

#ifndef PWTRI_ORACLE_HPP
#define PWTRI_ORACLE_HPP

#include <vector>

#include "pwtri/embedded_graph.hpp"
#include "pwtri/path_decomposition.hpp"

namespace pwtri {

struct ExactWidthResult {
    int width = 0;
    PathDecomposition witness;
};

/// Oracle size cap; PWTRI_NODE_CAP overrides the default of 22.
int oracle_node_cap();

/// Minimum-width path decomposition via the vertex separation number:
/// dynamic programming over vertex subsets, witness reconstructed by
/// backtracking.  Throws when the graph exceeds the cap.
ExactWidthResult exact_pathwidth(const EmbeddedMultigraph& g);

/// All pairs {u,v} such that g - {u,v} is disconnected and neither u nor v
/// is a cut vertex on its own; on 2-connected graphs this is exactly the
/// cutting-pair notion.  Input must be connected.
std::vector<std::pair<VertexId, VertexId>> structural_cut_pairs(const EmbeddedMultigraph& g);

/// Maximal outer-planarity, checked abstractly (no embedding needed):
/// 2-connected, 2n-3 edges, and ear stripping (repeatedly removing a
/// degree-2 vertex with adjacent neighbors) reduces the graph to a
/// triangle.  n = 1 and a single edge are accepted as degenerate maxima.
bool is_maximal_outerplanar(const EmbeddedMultigraph& g);

}  // namespace pwtri

#endif
