// Outer layers of the pipeline: connect a disconnected graph, destroy
// cut-vertices with helper vertices that are contracted away at the end,
// and the maximal-outer-planarization via a temporary universal vertex.

#ifndef PWTRI_AUGMENT_HPP
#define PWTRI_AUGMENT_HPP

#include <string>
#include <vector>

#include "pwtri/embedded_graph.hpp"
#include "pwtri/path_decomposition.hpp"
#include "pwtri/simplify.hpp"

namespace pwtri {

struct HelperVertexRecord {
    VertexId z = kNone;
    VertexId at_cut_vertex = kNone;
    FacialCircuit face_used;
};

/// Adds one edge between consecutive components (ordered by least
/// contained vertex) and returns the concatenated decomposition; the
/// resulting width is max(1, max component width) whenever there were at
/// least two components.  `per_component[i]` must validate against the
/// i-th component.
PathDecomposition connect(EmbeddedMultigraph& g,
                          const std::vector<PathDecomposition>& per_component);

/// Removes every cut-vertex v by regrouping the embedding at v so one face
/// touches all its cut-components, then inserting a helper vertex in that
/// face adjacent to v and to v's neighbors on it.  The helper joins every
/// bag containing v, so the width at most doubles plus one.
std::vector<HelperVertexRecord> biconnect(EmbeddedMultigraph& g, PathDecomposition& p);

/// Contracts each helper into a neighbor with exactly two common
/// neighbors (triangulation-preserving) and renames it away in p.
void remove_helpers(EmbeddedMultigraph& g, PathDecomposition& p,
                    const std::vector<HelperVertexRecord>& records);

/// True iff some facial circuit is a simple cycle through every vertex.
bool has_hamiltonian_face(const EmbeddedMultigraph& g);

struct PipelineStage {
    std::string name;
    int vertices = 0;
    int edges = 0;
    int width = 0;
};

struct TriangulationOutcome {
    std::vector<PipelineStage> stages;
    SimplifyReport simplify;
};

/// biconnect -> multi_triangulate -> simplify -> remove_helpers.
/// Output is simple and triangulated on the original vertex set with all
/// input edges present; width(p) <= 16 * width_in + 3.
TriangulationOutcome triangulate_connected(EmbeddedMultigraph& g, PathDecomposition& p,
                                           bool audit_tokens = false);

/// Universal vertex into the outer face -> multi_triangulate -> simplify
/// -> drop the universal vertex.  Input must carry an embedding with all
/// vertices on one face.  Output is maximal outer-planar with
/// width(p) <= 4 * width_in + 4.  Graphs with fewer than 3 vertices are
/// returned unchanged.
TriangulationOutcome outerplanar_maximalize(EmbeddedMultigraph& g, PathDecomposition& p,
                                            bool audit_tokens = false);

}  // namespace pwtri

#endif
