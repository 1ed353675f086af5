// Path decompositions as mutable, width-accounted objects.  Bags are kept
// as sorted vectors; the per-vertex (first bag, last bag) interval map is
// the primary index for queries.

#ifndef PWTRI_PATH_DECOMPOSITION_HPP
#define PWTRI_PATH_DECOMPOSITION_HPP

#include <map>
#include <optional>
#include <vector>

#include "pwtri/embedded_graph.hpp"

namespace pwtri {

/// Left-open range of bag indices (lo, hi]; empty when lo == hi.
struct BagInterval {
    int lo = 0;
    int hi = 0;

    bool empty() const { return lo == hi; }
};

class PathDecomposition {
public:
    PathDecomposition() = default;
    explicit PathDecomposition(std::vector<std::vector<VertexId>> bags);

    int num_bags() const { return static_cast<int>(bags_.size()); }
    const std::vector<VertexId>& bag(int i) const { return bags_[i]; }
    const std::vector<std::vector<VertexId>>& bags() const { return bags_; }

    /// max bag size - 1; -1 when every bag is empty.
    int width() const;

    bool contains(int i, VertexId v) const;
    /// Inclusive (first, last) bag indices of v, if v appears anywhere.
    std::optional<std::pair<int, int>> interval(VertexId v) const;

    /// Leftmost bag containing every vertex of `vs` (they pairwise share
    /// bags iff their intervals all intersect, so a common bag exists iff
    /// this returns a value).
    std::optional<int> leftmost_common_bag(const std::vector<VertexId>& vs) const;

    /// Add v to every bag of (range.lo, range.hi]; v's bag set must remain
    /// one interval.  Bags already holding v are untouched.  Returns the
    /// indices actually grown.
    std::vector<int> widen(VertexId v, BagInterval range);

    /// Extend v's interval minimally so that bag `target` contains v
    /// (either direction).  Returns the indices actually grown.
    std::vector<int> widen_to_cover(VertexId v, int target);

    /// Remove v from every bag.
    void remove_vertex(VertexId v);
    /// Replace z by y in every bag (deduplicating); their union of
    /// intervals must be contiguous.
    void rename_vertex(VertexId z, VertexId y);
    /// Add v to every bag.
    void add_to_all_bags(VertexId v);

    /// Restriction to a vertex set; leading and trailing empty bags are
    /// dropped (interior empties kept).
    PathDecomposition restricted_to(const std::vector<VertexId>& vs) const;

    /// True iff the three path-decomposition conditions hold for the
    /// underlying simple graph of g.
    bool validates(const EmbeddedMultigraph& g) const;

private:
    void reindex();

    std::vector<std::vector<VertexId>> bags_;
    std::map<VertexId, std::pair<int, int>> interval_;
};

/// Chord query for a facial circuit that is a simple cycle with >= 4
/// vertices: the lexicographically least pair of non-consecutive face
/// vertices sharing a bag.  Throws std::logic_error when none exists
/// (impossible for a decomposition that validates against the graph).
std::pair<VertexId, VertexId> find_chord_in_face(const PathDecomposition& p,
                                                 const EmbeddedMultigraph& g,
                                                 const FacialCircuit& face);

/// Joins decompositions of disjoint graphs: between consecutive parts a new
/// two-element bag {links[i].first, links[i].second} is inserted, where
/// links[i].first lies in the last bag of part i and links[i].second in the
/// first bag of part i+1.
PathDecomposition concatenate(const std::vector<PathDecomposition>& parts,
                              const std::vector<std::pair<VertexId, VertexId>>& links);

}  // namespace pwtri

#endif
