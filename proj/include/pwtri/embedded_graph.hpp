// Planar multigraph stored as a rotation system of darts.
//
// Each edge contributes two darts allocated as a pair, so twin(d) == d ^ 1.
// The clockwise order of darts around each vertex is kept as a circular
// doubly-linked list.  Planarity of the rotation system is certified by
// Euler's relation on the traced faces; there is no geometry anywhere.

#ifndef PWTRI_EMBEDDED_GRAPH_HPP
#define PWTRI_EMBEDDED_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pwtri {

using VertexId = int;
using DartId = int;

constexpr int kNone = -1;

inline std::pair<VertexId, VertexId> ordered_pair(VertexId a, VertexId b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

using EdgeKey = std::pair<VertexId, VertexId>;

/// One face of the embedding: the darts met while walking its boundary.
struct FacialCircuit {
    std::vector<DartId> darts;

    int length() const { return static_cast<int>(darts.size()); }
};

class EmbeddedMultigraph {
public:
    EmbeddedMultigraph() = default;

    // -- construction -------------------------------------------------

    VertexId add_vertex();

    /// Build a simple graph with the given clockwise neighbor order per
    /// vertex.  `rotations[v]` lists the neighbors of v; every edge must
    /// appear in both endpoint lists exactly once.
    static EmbeddedMultigraph from_rotations(
        int n, const std::vector<std::vector<VertexId>>& rotations);

    /// Build from a consistently oriented face list (each directed edge
    /// appears in exactly one face).  Convenient for the fixed solids.
    static EmbeddedMultigraph from_oriented_faces(
        int n, const std::vector<std::vector<VertexId>>& faces);

    // -- dart accessors ------------------------------------------------

    bool dart_alive(DartId d) const { return d >= 0 && d < (int)darts_.size() && darts_[d].alive; }
    VertexId origin(DartId d) const { return darts_[d].origin; }
    VertexId head(DartId d) const { return darts_[d ^ 1].origin; }
    DartId twin(DartId d) const { return d ^ 1; }
    DartId next_cw(DartId d) const { return darts_[d].next; }
    DartId prev_cw(DartId d) const { return darts_[d].prev; }
    DartId first_dart(VertexId v) const { return first_dart_[v]; }

    /// Clockwise dart sequence around v, starting at first_dart(v).
    std::vector<DartId> rotation(VertexId v) const;
    /// Rewrites the rotation at v to exactly `seq` (a permutation of the
    /// current darts at v).
    void set_rotation(VertexId v, const std::vector<DartId>& seq);

    // -- counts and queries ---------------------------------------------

    int vertex_capacity() const { return static_cast<int>(first_dart_.size()); }
    bool vertex_alive(VertexId v) const { return v >= 0 && v < vertex_capacity() && vertex_alive_[v]; }
    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return num_edges_; }
    std::vector<VertexId> vertices() const;
    int degree(VertexId v) const;
    std::vector<VertexId> neighbors(VertexId v) const;  // deduplicated, sorted
    bool has_edge(VertexId u, VertexId v) const;
    int multiplicity(VertexId u, VertexId v) const;
    const std::map<EdgeKey, int>& edge_multiplicities() const { return multiplicity_; }
    std::vector<EdgeKey> simple_edges() const;  // underlying simple edge set
    std::vector<EdgeKey> multi_edges() const;   // keys with multiplicity >= 2
    bool is_simple() const;

    // -- face structure --------------------------------------------------

    std::vector<FacialCircuit> trace_faces() const;
    /// Face containing dart d (walk of the orbit through d).
    FacialCircuit face_of(DartId d) const;
    /// Distinct vertices in face-walk order; throws if a vertex repeats.
    std::vector<VertexId> face_vertices_simple(const FacialCircuit& f) const;

    bool is_connected() const;
    /// Component index per vertex id (kNone for dead ids); count returned.
    int connected_components(std::vector<int>& comp) const;

    /// V - E + F == 2 * #components, i.e. the rotation system is a
    /// genus-0 embedding of every component.
    bool euler_ok() const;

    /// Every face has exactly three edges, no face is two copies of one
    /// edge, and there are no loops.  Throws for fewer than 3 vertices.
    bool is_multi_triangulated() const;

    // -- mutations --------------------------------------------------------

    /// Insert edge (u,v).  The new dart at u is placed immediately after
    /// `after_u` in clockwise order (after_u == kNone picks an arbitrary
    /// position, required when u has no darts); likewise at v.
    /// Returns the dart u -> v.
    DartId insert_edge(VertexId u, VertexId v, DartId after_u, DartId after_v);

    /// Insert a chord between the corners at positions i and j of face f
    /// (positions index f.darts; the chord connects origin(f.darts[i])
    /// with origin(f.darts[j]) and splits f in two).
    DartId insert_chord_in_face(const FacialCircuit& f, int i, int j);

    /// Insert a new vertex inside face f and connect it to the corners at
    /// the given positions (strictly increasing indices into f.darts).
    /// Returns the new vertex.
    VertexId insert_apex_in_face(const FacialCircuit& f, const std::vector<int>& positions);

    void delete_edge(DartId d);
    /// Deletes v and all incident edges.
    void delete_vertex(VertexId v);

    /// Contract edge (z,y): delete z, re-route its darts to y, then drop
    /// loops and merge parallel copies down to multiplicity 1 (collapsing
    /// two-sided faces first, which keeps triangulations triangulated).
    void contract_edge(VertexId z, VertexId y);

    // -- integrity ---------------------------------------------------------

    /// Full structural sweep: twin involution, no loops, rotation lists
    /// are consistent circular permutations, multiplicity table matches.
    /// Throws std::logic_error with a description on failure.
    void validate() const;

private:
    struct DartRec {
        VertexId origin = kNone;
        DartId next = kNone;
        DartId prev = kNone;
        bool alive = false;
    };

    DartId new_dart_pair(VertexId u, VertexId v);
    void attach_after(VertexId v, DartId d, DartId after);
    void detach(DartId d);
    void bump_multiplicity(VertexId u, VertexId v, int delta);

    std::vector<DartRec> darts_;
    std::vector<DartId> first_dart_;
    std::vector<bool> vertex_alive_;
    std::map<EdgeKey, int> multiplicity_;
    int num_vertices_ = 0;
    int num_edges_ = 0;
};

}  // namespace pwtri

#endif
