#include "pwtri/generate.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "pwtri/cut_structure.hpp"
#include "pwtri/oracle.hpp"

namespace pwtri {

std::vector<std::vector<VertexId>> rotation_lists(const EmbeddedMultigraph& g) {
    if (!g.is_simple()) throw std::invalid_argument("rotation_lists: graph must be simple");
    int n = g.num_vertices();
    std::vector<std::vector<VertexId>> rot(n);
    for (VertexId v = 0; v < n; ++v) {
        if (!g.vertex_alive(v)) throw std::invalid_argument("rotation_lists: ids must be dense");
        for (DartId d : g.rotation(v)) rot[v].push_back(g.head(d));
    }
    return rot;
}

EmbeddedMultigraph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle: n >= 3");
    std::vector<std::vector<VertexId>> rot(n);
    for (int v = 0; v < n; ++v) rot[v] = {(v + 1) % n, (v + n - 1) % n};
    return EmbeddedMultigraph::from_rotations(n, rot);
}

EmbeddedMultigraph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("gen_path: n >= 1");
    std::vector<std::vector<VertexId>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (v > 0) rot[v].push_back(v - 1);
        if (v + 1 < n) rot[v].push_back(v + 1);
    }
    return EmbeddedMultigraph::from_rotations(n, rot);
}

EmbeddedMultigraph gen_grid(int k) {
    if (k < 1) throw std::invalid_argument("gen_grid: k >= 1");
    int n = k * k;
    std::vector<std::vector<VertexId>> rot(n);
    auto at = [&](int r, int c) { return r * k + c; };
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
            // Clockwise: up, right, down, left keeps the drawing planar.
            auto& out = rot[at(r, c)];
            if (r > 0) out.push_back(at(r - 1, c));
            if (c + 1 < k) out.push_back(at(r, c + 1));
            if (r + 1 < k) out.push_back(at(r + 1, c));
            if (c > 0) out.push_back(at(r, c - 1));
        }
    }
    return EmbeddedMultigraph::from_rotations(n, rot);
}

EmbeddedMultigraph gen_fan(int n) {
    if (n < 2) throw std::invalid_argument("gen_fan: n >= 2");
    std::vector<std::vector<VertexId>> rot(n);
    for (int v = 1; v < n; ++v) rot[0].push_back(v);
    for (int v = 1; v < n; ++v) {
        if (v + 1 < n) rot[v].push_back(v + 1);
        rot[v].push_back(0);
        if (v > 1) rot[v].push_back(v - 1);
    }
    return EmbeddedMultigraph::from_rotations(n, rot);
}

EmbeddedMultigraph random_triangulation(int n, Rng& rng) {
    if (n < 3) throw std::invalid_argument("random_triangulation: n >= 3");
    auto g = EmbeddedMultigraph::from_oriented_faces(3, {{0, 1, 2}, {0, 2, 1}});
    while (g.num_vertices() < n) {
        auto faces = g.trace_faces();
        const FacialCircuit& f = faces[rng.below((int)faces.size())];
        g.insert_apex_in_face(f, {0, 1, 2});
    }
    // Rebuild for dense, insertion-order-free dart ids.
    return EmbeddedMultigraph::from_rotations(n, rotation_lists(g));
}

namespace {

bool no_cut_vertices(const EmbeddedMultigraph& g) {
    return g.is_connected() && cut_vertices(g).empty();
}

bool three_connected(const EmbeddedMultigraph& g) {
    return no_cut_vertices(g) && structural_cut_pairs(g).empty();
}

// Attempts to delete each edge (in shuffled order, with probability ~2/3),
// keeping `constraint` satisfied.
template <typename Constraint>
EmbeddedMultigraph thin_out(EmbeddedMultigraph g, Rng& rng, Constraint constraint) {
    auto edges = g.simple_edges();
    // Fisher-Yates with the deterministic rng.
    for (int i = (int)edges.size() - 1; i > 0; --i) std::swap(edges[i], edges[rng.below(i + 1)]);
    for (auto [u, v] : edges) {
        if (rng.below(3) == 0) continue;
        EmbeddedMultigraph trial = g;
        for (DartId d : trial.rotation(u)) {
            if (trial.head(d) == v) {
                trial.delete_edge(d);
                break;
            }
        }
        if (constraint(trial)) g = std::move(trial);
    }
    return g;
}

}  // namespace

EmbeddedMultigraph random_planar_3connected(int n, Rng& rng) {
    if (n < 4) throw std::invalid_argument("random_planar_3connected: n >= 4");
    return thin_out(random_triangulation(n, rng), rng, three_connected);
}

EmbeddedMultigraph random_planar_2connected(int n, Rng& rng) {
    if (n < 3) throw std::invalid_argument("random_planar_2connected: n >= 3");
    return thin_out(random_triangulation(n, rng), rng, no_cut_vertices);
}

EmbeddedMultigraph random_planar_connected(int n, Rng& rng) {
    return thin_out(random_triangulation(n, rng), rng,
                    [](const EmbeddedMultigraph& g) { return g.is_connected(); });
}

EmbeddedMultigraph random_outerplanar(int n, Rng& rng) {
    if (n < 3) throw std::invalid_argument("random_outerplanar: n >= 3");
    // Chords of a random triangulation of the polygon 0..n-1.
    std::vector<std::pair<int, int>> chords;
    std::vector<std::pair<int, int>> stack{{0, n - 1}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        if (b - a < 2) continue;
        int k = a + 1 + rng.below(b - a - 1);
        if (k - a >= 2) chords.push_back({a, k});
        if (b - k >= 2) chords.push_back({k, b});
        stack.push_back({a, k});
        stack.push_back({k, b});
    }
    std::vector<std::vector<VertexId>> rot(n);
    std::vector<std::vector<VertexId>> nbrs(n);
    for (int v = 0; v < n; ++v) {
        nbrs[v].push_back((v + 1) % n);
        nbrs[v].push_back((v + n - 1) % n);
    }
    for (auto [a, b] : chords) {
        nbrs[a].push_back(b);
        nbrs[b].push_back(a);
    }
    // All vertices on a circle, chords inside: the clockwise order around v
    // follows the circular order of the targets.
    for (int v = 0; v < n; ++v) {
        std::sort(nbrs[v].begin(), nbrs[v].end(),
                  [&](int x, int y) { return (x - v + n) % n < (y - v + n) % n; });
        rot[v] = nbrs[v];
    }
    auto g = EmbeddedMultigraph::from_rotations(n, rot);
    assert(g.euler_ok());
    return thin_out(std::move(g), rng,
                    [](const EmbeddedMultigraph& h) { return h.is_connected(); });
}

EmbeddedMultigraph random_block_tree(int blocks, int block_size, Rng& rng) {
    if (blocks < 1 || block_size < 3)
        throw std::invalid_argument("random_block_tree: blocks >= 1, block_size >= 3");
    auto rot = rotation_lists(random_planar_2connected(block_size, rng));
    for (int b = 1; b < blocks; ++b) {
        auto block = rotation_lists(random_planar_2connected(block_size, rng));
        int base = (int)rot.size();
        VertexId glue_old = rng.below(base);
        VertexId glue_new = rng.below(block_size);
        // Remap: glue_new collapses onto glue_old, the rest shift up.
        auto remap = [&](VertexId v) {
            if (v == glue_new) return glue_old;
            return base + (v < glue_new ? v : v - 1);
        };
        for (int v = 0; v < block_size; ++v) {
            std::vector<VertexId> mapped;
            for (VertexId w : block[v]) mapped.push_back(remap(w));
            if (v == glue_new) {
                // Wedge: the new block's corner sits in one corner of the
                // old rotation.
                rot[glue_old].insert(rot[glue_old].end(), mapped.begin(), mapped.end());
            } else {
                rot.push_back(std::move(mapped));
            }
        }
    }
    auto g = EmbeddedMultigraph::from_rotations((int)rot.size(), rot);
    assert(g.euler_ok());
    return g;
}

}  // namespace pwtri
