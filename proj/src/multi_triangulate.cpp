#include "pwtri/multi_triangulate.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "pwtri/cut_structure.hpp"

namespace pwtri {

void multi_triangulate(EmbeddedMultigraph& g, const PathDecomposition& p) {
    if (!is_biconnected(g))
        throw std::invalid_argument("multi_triangulate: graph is not 2-connected");
    for (const auto& f : g.trace_faces())
        if (f.length() < 3)
            throw std::invalid_argument("multi_triangulate: face with fewer than 3 edges");
    if (!p.validates(g))
        throw std::invalid_argument("multi_triangulate: decomposition does not validate");

    for (;;) {
        // Face of length >= 4 holding the least dart id.
        std::vector<FacialCircuit> faces = g.trace_faces();
        const FacialCircuit* pick = nullptr;
        DartId pick_min = kNone;
        for (const auto& f : faces) {
            if (f.length() < 4) continue;
            DartId m = *std::min_element(f.darts.begin(), f.darts.end());
            if (!pick || m < pick_min) {
                pick = &f;
                pick_min = m;
            }
        }
        if (!pick) break;

        auto [a, b] = find_chord_in_face(p, g, *pick);
        int ia = kNone, ib = kNone;
        for (int t = 0; t < pick->length(); ++t) {
            VertexId v = g.origin(pick->darts[t]);
            if (v == a) ia = t;
            if (v == b) ib = t;
        }
        g.insert_chord_in_face(*pick, ia, ib);
        assert(g.euler_ok());
    }
    assert(g.is_multi_triangulated());
}

}  // namespace pwtri
