#include "pwtri/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace pwtri {

int oracle_node_cap() {
    if (const char* s = std::getenv("PWTRI_NODE_CAP")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 22;
}

ExactWidthResult exact_pathwidth(const EmbeddedMultigraph& g) {
    std::vector<VertexId> verts = g.vertices();
    int n = static_cast<int>(verts.size());
    if (n > oracle_node_cap() || n > 26)
        throw std::invalid_argument("exact_pathwidth: graph exceeds the oracle node cap");
    if (n == 0) return {-1, PathDecomposition{}};

    std::vector<int> index(g.vertex_capacity(), kNone);
    for (int i = 0; i < n; ++i) index[verts[i]] = i;
    std::vector<uint32_t> adj(n, 0);
    for (auto [u, v] : g.simple_edges()) {
        adj[index[u]] |= 1u << index[v];
        adj[index[v]] |= 1u << index[u];
    }

    // vs(G): cost[S] = min over placement orders of S of the largest
    // boundary seen; boundary(S) = vertices of S with a neighbor outside.
    auto boundary_size = [&](uint32_t s) {
        int b = 0;
        for (int i = 0; i < n; ++i)
            if ((s >> i & 1u) && (adj[i] & ~s)) ++b;
        return b;
    };
    const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<uint8_t> cost(full + 1u, 0);
    for (uint32_t s = 1; s <= full; ++s) {
        int b = boundary_size(s);
        int best = 255;
        for (int i = 0; i < n; ++i) {
            if (!(s >> i & 1u)) continue;
            best = std::min(best, static_cast<int>(cost[s & ~(1u << i)]));
        }
        cost[s] = static_cast<uint8_t>(std::max(b, best));
    }

    // Placement order by backtracking (least vertex breaking ties).
    std::vector<int> order;
    uint32_t s = full;
    while (s) {
        int b = boundary_size(s);
        for (int i = 0; i < n; ++i) {
            if (!(s >> i & 1u)) continue;
            uint32_t rest = s & ~(1u << i);
            if (std::max(b, static_cast<int>(cost[rest])) == cost[s]) {
                order.push_back(i);
                s = rest;
                break;
            }
        }
    }
    std::reverse(order.begin(), order.end());

    // Bags: X_i = boundary(prefix before x_i) + x_i.
    std::vector<std::vector<VertexId>> bags;
    uint32_t prefix = 0;
    for (int x : order) {
        std::vector<VertexId> bag;
        for (int i = 0; i < n; ++i)
            if ((prefix >> i & 1u) && (adj[i] & ~prefix)) bag.push_back(verts[i]);
        bag.push_back(verts[x]);
        bags.push_back(std::move(bag));
        prefix |= 1u << x;
    }
    ExactWidthResult res;
    res.width = cost[full];
    res.witness = PathDecomposition(std::move(bags));
    return res;
}

namespace {

bool connected_without(const EmbeddedMultigraph& g, const std::set<VertexId>& removed) {
    VertexId start = kNone;
    int remaining = 0;
    for (VertexId v : g.vertices()) {
        if (removed.count(v)) continue;
        ++remaining;
        if (start == kNone) start = v;
    }
    if (remaining <= 1) return true;
    std::set<VertexId> seen{start};
    std::queue<VertexId> q;
    q.push(start);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : g.neighbors(v)) {
            if (removed.count(w) || seen.count(w)) continue;
            seen.insert(w);
            q.push(w);
        }
    }
    return static_cast<int>(seen.size()) == remaining;
}

}  // namespace

std::vector<std::pair<VertexId, VertexId>> structural_cut_pairs(const EmbeddedMultigraph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("structural_cut_pairs: graph is disconnected");
    std::vector<VertexId> verts = g.vertices();
    std::set<VertexId> cuts;
    for (VertexId v : verts)
        if (!connected_without(g, {v})) cuts.insert(v);
    std::vector<std::pair<VertexId, VertexId>> out;
    for (size_t i = 0; i < verts.size(); ++i) {
        if (cuts.count(verts[i])) continue;
        for (size_t j = i + 1; j < verts.size(); ++j) {
            if (cuts.count(verts[j])) continue;
            if (!connected_without(g, {verts[i], verts[j]}))
                out.push_back({verts[i], verts[j]});
        }
    }
    return out;
}

bool is_maximal_outerplanar(const EmbeddedMultigraph& g) {
    if (!g.is_simple()) return false;
    int n = g.num_vertices();
    if (n == 1) return g.num_edges() == 0;
    if (n == 2) return g.num_edges() == 1;
    if (g.num_edges() != 2 * n - 3) return false;
    if (!g.is_connected()) return false;
    for (VertexId v : g.vertices())  // 2-connectivity by deletion testing
        if (!connected_without(g, {v})) return false;

    // Ear stripping on an adjacency-set copy.
    std::map<VertexId, std::set<VertexId>> adj;
    for (auto [u, v] : g.simple_edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    int remaining = n;
    while (remaining > 3) {
        VertexId ear = kNone;
        for (const auto& [v, nb] : adj) {
            if (nb.size() != 2) continue;
            auto it = nb.begin();
            VertexId a = *it++, b = *it;
            if (adj[a].count(b)) {
                ear = v;
                break;
            }
        }
        if (ear == kNone) return false;
        for (VertexId w : adj[ear]) adj[w].erase(ear);
        adj.erase(ear);
        --remaining;
    }
    // Three vertices must remain as a triangle.
    for (const auto& [v, nb] : adj) {
        (void)v;
        if (nb.size() != 2) return false;
    }
    return true;
}

}  // namespace pwtri
