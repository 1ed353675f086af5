// Connectivity and cut-structure queries on embedded multigraphs, plus the
// embedding surgery around cutting pairs: in a multi-triangulated graph the
// cutting pairs are exactly the multi-edges, each component of g - {u,v}
// occupies one lens between consecutive copies of (u,v), and whole lenses
// can be permuted or mirrored without breaking the triangulation.

#ifndef PWTRI_CUT_STRUCTURE_HPP
#define PWTRI_CUT_STRUCTURE_HPP

#include <map>
#include <vector>

#include "pwtri/embedded_graph.hpp"

namespace pwtri {

struct CutComponents {
    std::vector<VertexId> separator;  // 1 or 2 vertices

    struct Component {
        std::vector<VertexId> interior;  // sorted
        // Darts from each separator vertex into the interior, in clockwise
        // order.  `consecutive_at` records whether they form one arc.
        std::map<VertexId, std::vector<DartId>> darts_at;
        std::map<VertexId, bool> consecutive_at;
    };
    std::vector<Component> components;
    int parent_index = kNone;  // set by the simplifier

    int count() const { return static_cast<int>(components.size()); }
    int component_of(VertexId v) const;  // kNone for separator vertices
};

/// Cut vertices of a connected graph, ascending.  Throws on disconnected
/// input.
std::vector<VertexId> cut_vertices(const EmbeddedMultigraph& g);

bool is_biconnected(const EmbeddedMultigraph& g);

/// Components of g - separator, with the dart intervals around each
/// separator vertex.
CutComponents cut_components(const EmbeddedMultigraph& g,
                             const std::vector<VertexId>& separator);

struct CuttingPairRecord {
    VertexId u = kNone;
    VertexId v = kNone;
    int multiplicity = 0;
    CutComponents comps;
};

/// The cutting pairs of a multi-triangulated graph: exactly its multi-edges,
/// one record per pair, component count matching the multiplicity.
std::vector<CuttingPairRecord> cutting_pairs(const EmbeddedMultigraph& g);

/// Checks the lens structure of one cutting pair: around both u and v the
/// copies of (u,v) alternate with one consecutive arc per component.
bool pair_alternation_ok(const EmbeddedMultigraph& g, const CuttingPairRecord& rec);

/// Re-embeds the cut-components of a cutting pair: slot k of the cyclic
/// arrangement receives component `slots[k].first`, mirrored when
/// `slots[k].second` is set.  The abstract graph is unchanged and the
/// graph stays multi-triangulated.  The record's dart data is stale
/// afterwards; recompute via cutting_pairs / cut_components.
void arrange_components(EmbeddedMultigraph& g, const CuttingPairRecord& rec,
                        const std::vector<std::pair<int, bool>>& slots);

/// Swap the lenses of two components.
void swap_components(EmbeddedMultigraph& g, const CuttingPairRecord& rec, int i, int j);

/// Mirror one component inside its lens.
void reverse_component(EmbeddedMultigraph& g, const CuttingPairRecord& rec, int i);

/// Deletes one copy of (u,v) and adds (b1,b2) instead, where b1 and b2 are
/// peripheral vertices (first or last rotation neighbors of v inside their
/// component arcs) of two different cut-components.  Rearranges lenses so
/// both face a common copy, removes it, and splits the resulting
/// quadrilateral.  The result is again multi-triangulated.
void replace_multiedge_copy(EmbeddedMultigraph& g, const CuttingPairRecord& rec,
                            int comp_b1, VertexId b1, int comp_b2, VertexId b2);

}  // namespace pwtri

#endif
