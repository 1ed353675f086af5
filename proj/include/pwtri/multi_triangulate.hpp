#ifndef PWTRI_MULTI_TRIANGULATE_HPP
#define PWTRI_MULTI_TRIANGULATE_HPP

#include "pwtri/embedded_graph.hpp"
#include "pwtri/path_decomposition.hpp"

namespace pwtri {

/// Adds chords until every face is a triangle, never widening a bag and
/// never moving a pre-existing dart: each chord's endpoints already share a
/// bag of p, so p stays valid and the width is untouched.  Requires a
/// 2-connected embedded multigraph whose faces all have >= 3 edges and a
/// decomposition that validates against it.  Faces of length >= 4 are
/// processed by least contained dart id; chords are the least shared-bag
/// pair of non-consecutive face vertices.
void multi_triangulate(EmbeddedMultigraph& g, const PathDecomposition& p);

}  // namespace pwtri

#endif
