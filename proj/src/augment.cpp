#include "pwtri/augment.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "pwtri/cut_structure.hpp"
#include "pwtri/multi_triangulate.hpp"

namespace pwtri {

PathDecomposition connect(EmbeddedMultigraph& g,
                          const std::vector<PathDecomposition>& per_component) {
    std::vector<int> comp;
    int count = g.connected_components(comp);
    if ((int)per_component.size() != count)
        throw std::invalid_argument("connect: one decomposition per component expected");
    if (count <= 1) return per_component.empty() ? PathDecomposition{} : per_component[0];

    // connected_components assigns indices by ascending least vertex.
    std::vector<std::pair<VertexId, VertexId>> links;
    for (int i = 0; i + 1 < count; ++i) {
        const PathDecomposition& a = per_component[i];
        const PathDecomposition& b = per_component[i + 1];
        if (a.num_bags() == 0 || a.bag(a.num_bags() - 1).empty() || b.num_bags() == 0 ||
            b.bag(0).empty())
            throw std::invalid_argument("connect: boundary bag of a component is empty");
        VertexId tail = a.bag(a.num_bags() - 1).front();
        VertexId head = b.bag(0).front();
        g.insert_edge(tail, head, g.first_dart(tail), g.first_dart(head));
        links.push_back({tail, head});
    }
    assert(g.is_connected());
    assert(g.euler_ok());
    return concatenate(per_component, links);
}

std::vector<HelperVertexRecord> biconnect(EmbeddedMultigraph& g, PathDecomposition& p) {
    if (!g.is_connected()) throw std::invalid_argument("biconnect: graph is disconnected");
    if (!g.is_simple()) throw std::invalid_argument("biconnect: graph must be simple");
    if (g.num_vertices() < 3) throw std::invalid_argument("biconnect: needs at least 3 vertices");
    if (!p.validates(g)) throw std::invalid_argument("biconnect: decomposition does not validate");

    std::vector<HelperVertexRecord> records;
    for (;;) {
        std::vector<VertexId> cvs = cut_vertices(g);
        if (cvs.empty()) break;
        VertexId v1 = cvs.front();
        CutComponents cc = cut_components(g, {v1});

        // Regroup the rotation at v1: one contiguous block per
        // cut-component, blocks ordered by least interior vertex, internal
        // dart order kept.  All block seams then lie on a single face.
        std::vector<int> order(cc.count());
        for (int i = 0; i < cc.count(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            return cc.components[x].interior.front() < cc.components[y].interior.front();
        });
        std::vector<DartId> new_rot;
        std::vector<DartId> block_first;
        for (int c : order) {
            const auto& darts = cc.components[c].darts_at.at(v1);
            block_first.push_back(darts.front());
            new_rot.insert(new_rot.end(), darts.begin(), darts.end());
        }
        g.set_rotation(v1, new_rot);
        assert(g.euler_ok());

        FacialCircuit f1 = g.face_of(block_first.front());
        for (DartId d : block_first)
            if (std::find(f1.darts.begin(), f1.darts.end(), d) == f1.darts.end())
                throw std::logic_error("biconnect: seam corner missing from the joint face");

        // Helper vertex inside f1, adjacent to v1 and to v1's neighbors on
        // f1 (first occurrence of each).
        std::set<VertexId> nbrs;
        for (VertexId w : g.neighbors(v1)) nbrs.insert(w);
        std::vector<int> positions;
        std::set<VertexId> taken;
        for (int t = 0; t < f1.length(); ++t) {
            VertexId x = g.origin(f1.darts[t]);
            if (x != v1 && !nbrs.count(x)) continue;
            if (!taken.insert(x).second) continue;
            positions.push_back(t);
        }
        VertexId z = g.insert_apex_in_face(f1, positions);
        assert(g.euler_ok());
        assert(g.is_simple());

        auto iv = p.interval(v1);
        if (!iv) throw std::logic_error("biconnect: cut vertex missing from decomposition");
        p.widen(z, {iv->first - 1, iv->second});
        assert(p.validates(g));

        records.push_back({z, v1, std::move(f1)});

        std::vector<VertexId> after = cut_vertices(g);
        assert(!std::binary_search(after.begin(), after.end(), v1));
        assert(!std::binary_search(after.begin(), after.end(), z));
        assert(after.size() < cvs.size());
    }
    return records;
}

void remove_helpers(EmbeddedMultigraph& g, PathDecomposition& p,
                    const std::vector<HelperVertexRecord>& records) {
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        VertexId z = it->z;
        if (!g.vertex_alive(z)) throw std::invalid_argument("remove_helpers: helper already gone");
        VertexId pick = kNone;
        for (VertexId y : g.neighbors(z)) {
            std::vector<VertexId> ny = g.neighbors(y);
            std::vector<VertexId> nz = g.neighbors(z);
            std::vector<VertexId> common;
            std::set_intersection(ny.begin(), ny.end(), nz.begin(), nz.end(),
                                  std::back_inserter(common));
            if (common.size() == 2) {
                pick = y;
                break;
            }
        }
        if (pick == kNone)
            throw std::logic_error("remove_helpers: no neighbor with exactly two common neighbors");
        g.contract_edge(z, pick);
        p.rename_vertex(z, pick);
        assert(g.is_simple());
        assert(g.euler_ok());
        assert(g.is_multi_triangulated());
        assert(p.validates(g));
    }
}

bool has_hamiltonian_face(const EmbeddedMultigraph& g) {
    for (const auto& f : g.trace_faces()) {
        if (f.length() != g.num_vertices()) continue;
        std::set<VertexId> seen;
        for (DartId d : f.darts) seen.insert(g.origin(d));
        if ((int)seen.size() == g.num_vertices()) return true;
    }
    return false;
}

namespace {

PipelineStage stage_of(const std::string& name, const EmbeddedMultigraph& g,
                       const PathDecomposition& p) {
    return {name, g.num_vertices(), g.num_edges(), p.width()};
}

}  // namespace

TriangulationOutcome triangulate_connected(EmbeddedMultigraph& g, PathDecomposition& p,
                                           bool audit_tokens) {
    if (!g.is_simple()) throw std::invalid_argument("triangulate_connected: input must be simple");
    if (!g.is_connected() || g.num_vertices() < 3)
        throw std::invalid_argument("triangulate_connected: input must be connected, n >= 3");
    if (!p.validates(g))
        throw std::invalid_argument("triangulate_connected: decomposition does not validate");

    TriangulationOutcome out;
    const int w_in = p.width();
    const std::vector<VertexId> original_vertices = g.vertices();
    const std::vector<EdgeKey> original_edges = g.simple_edges();
    out.stages.push_back(stage_of("input", g, p));

    std::vector<HelperVertexRecord> helpers = biconnect(g, p);
    assert(p.width() <= 2 * w_in + 1);
    out.stages.push_back(stage_of("biconnect", g, p));

    const auto bags_before = p.bags();
    multi_triangulate(g, p);
    assert(p.bags() == bags_before);
    out.stages.push_back(stage_of("multi_triangulate", g, p));

    out.simplify = simplify(g, p, audit_tokens);
    out.stages.push_back(stage_of("simplify", g, p));

    remove_helpers(g, p, helpers);
    out.stages.push_back(stage_of("remove_helpers", g, p));

    assert(g.is_simple() && g.is_multi_triangulated());
    assert(g.vertices() == original_vertices);
    for (EdgeKey e : original_edges) assert(g.has_edge(e.first, e.second));
    assert(p.validates(g));
    if (p.width() > 16 * w_in + 3)
        throw std::logic_error("triangulate_connected: width bound exceeded");
    return out;
}

TriangulationOutcome outerplanar_maximalize(EmbeddedMultigraph& g, PathDecomposition& p,
                                            bool audit_tokens) {
    if (!g.is_simple())
        throw std::invalid_argument("outerplanar_maximalize: input must be simple");
    if (!g.is_connected())
        throw std::invalid_argument("outerplanar_maximalize: input must be connected");
    if (!p.validates(g))
        throw std::invalid_argument("outerplanar_maximalize: decomposition does not validate");

    TriangulationOutcome out;
    out.stages.push_back(stage_of("input", g, p));
    if (g.num_vertices() <= 2) {  // a vertex or a single edge is already maximal
        out.stages.push_back(stage_of("output", g, p));
        return out;
    }

    // The outer face: a facial circuit visiting every vertex.
    const FacialCircuit* outer = nullptr;
    DartId outer_min = kNone;
    std::vector<FacialCircuit> faces = g.trace_faces();
    for (const auto& f : faces) {
        std::set<VertexId> vs;
        for (DartId d : f.darts) vs.insert(g.origin(d));
        if ((int)vs.size() != g.num_vertices()) continue;
        DartId m = *std::min_element(f.darts.begin(), f.darts.end());
        if (!outer || m < outer_min) {
            outer = &f;
            outer_min = m;
        }
    }
    if (!outer)
        throw std::invalid_argument(
            "outerplanar_maximalize: embedding has no face through all vertices");

    const int w_in = p.width();
    const std::vector<EdgeKey> original_edges = g.simple_edges();

    std::vector<int> positions;
    std::set<VertexId> taken;
    for (int t = 0; t < outer->length(); ++t)
        if (taken.insert(g.origin(outer->darts[t])).second) positions.push_back(t);
    VertexId z = g.insert_apex_in_face(*outer, positions);
    assert(g.degree(z) == g.num_vertices() - 1);
    assert(g.euler_ok());
    p.add_to_all_bags(z);
    out.stages.push_back(stage_of("universal_vertex", g, p));

    const auto bags_before = p.bags();
    multi_triangulate(g, p);
    assert(p.bags() == bags_before);
    out.stages.push_back(stage_of("multi_triangulate", g, p));

    out.simplify = simplify(g, p, audit_tokens);
    assert(out.simplify.budget.c <= w_in + 1);  // every cutting pair uses z
    out.stages.push_back(stage_of("simplify", g, p));

    g.delete_vertex(z);
    p.remove_vertex(z);
    out.stages.push_back(stage_of("drop_universal", g, p));

    assert(g.is_simple());
    assert(g.euler_ok());
    assert(has_hamiltonian_face(g));
    for (EdgeKey e : original_edges) assert(g.has_edge(e.first, e.second));
    assert(p.validates(g));
    if (p.width() > 4 * w_in + 4)
        throw std::logic_error("outerplanar_maximalize: width bound exceeded");
    return out;
}

}  // namespace pwtri
