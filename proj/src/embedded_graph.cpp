#include "pwtri/embedded_graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pwtri {

namespace {

[[noreturn]] void corrupt(const std::string& what) {
    throw std::logic_error("embedded graph corrupt: " + what);
}

}  // namespace

VertexId EmbeddedMultigraph::add_vertex() {
    first_dart_.push_back(kNone);
    vertex_alive_.push_back(true);
    ++num_vertices_;
    return static_cast<VertexId>(first_dart_.size()) - 1;
}

EmbeddedMultigraph EmbeddedMultigraph::from_rotations(
    int n, const std::vector<std::vector<VertexId>>& rotations) {
    EmbeddedMultigraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();

    // Darts per edge (u,v), u < v: created when u's rotation is scanned.
    std::map<EdgeKey, DartId> dart_of_edge;
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId w : rotations[v]) {
            if (w == v) throw std::invalid_argument("loop in rotation input");
            if (w < 0 || w >= n) throw std::invalid_argument("bad neighbor id");
            auto key = ordered_pair(v, w);
            if (!dart_of_edge.count(key)) dart_of_edge[key] = g.new_dart_pair(key.first, key.second);
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        std::vector<DartId> seq;
        std::set<VertexId> seen;
        for (VertexId w : rotations[v]) {
            if (!seen.insert(w).second)
                throw std::invalid_argument("from_rotations: repeated neighbor (simple graphs only)");
            DartId d = dart_of_edge.at(ordered_pair(v, w));
            seq.push_back(v < w ? d : g.twin(d));
        }
        // Link the circular list by hand; set_rotation needs an existing list.
        int k = static_cast<int>(seq.size());
        g.first_dart_[v] = k ? seq[0] : kNone;
        for (int i = 0; i < k; ++i) {
            g.darts_[seq[i]].next = seq[(i + 1) % k];
            g.darts_[seq[i]].prev = seq[(i + k - 1) % k];
        }
    }
    for (const auto& [key, d] : dart_of_edge) {
        (void)d;
        g.bump_multiplicity(key.first, key.second, 1);
        ++g.num_edges_;
    }
    g.validate();
    return g;
}

EmbeddedMultigraph EmbeddedMultigraph::from_oriented_faces(
    int n, const std::vector<std::vector<VertexId>>& faces) {
    // For a face walk ... x -> v -> y ..., y follows x clockwise at v.
    std::vector<std::map<VertexId, VertexId>> next_at(n);
    for (const auto& f : faces) {
        int k = static_cast<int>(f.size());
        for (int i = 0; i < k; ++i) {
            VertexId x = f[i], v = f[(i + 1) % k], y = f[(i + 2) % k];
            if (next_at[v].count(x)) throw std::invalid_argument("face list not consistently oriented");
            next_at[v][x] = y;
        }
    }
    std::vector<std::vector<VertexId>> rot(n);
    for (VertexId v = 0; v < n; ++v) {
        if (next_at[v].empty()) continue;
        VertexId start = next_at[v].begin()->first;
        VertexId w = start;
        do {
            rot[v].push_back(w);
            auto it = next_at[v].find(w);
            if (it == next_at[v].end()) throw std::invalid_argument("open rotation in face list");
            w = it->second;
        } while (w != start);
        if (rot[v].size() != next_at[v].size())
            throw std::invalid_argument("face list induces several cycles at a vertex");
    }
    return from_rotations(n, rot);
}

std::vector<DartId> EmbeddedMultigraph::rotation(VertexId v) const {
    std::vector<DartId> seq;
    DartId f = first_dart_[v];
    if (f == kNone) return seq;
    DartId d = f;
    do {
        seq.push_back(d);
        d = darts_[d].next;
    } while (d != f);
    return seq;
}

void EmbeddedMultigraph::set_rotation(VertexId v, const std::vector<DartId>& seq) {
    std::vector<DartId> cur = rotation(v);
    if (cur.size() != seq.size()) corrupt("set_rotation: size mismatch");
    std::set<DartId> a(cur.begin(), cur.end()), b(seq.begin(), seq.end());
    if (a != b) corrupt("set_rotation: not a permutation of the darts at v");
    int k = static_cast<int>(seq.size());
    first_dart_[v] = k ? seq[0] : kNone;
    for (int i = 0; i < k; ++i) {
        darts_[seq[i]].next = seq[(i + 1) % k];
        darts_[seq[i]].prev = seq[(i + k - 1) % k];
    }
}

std::vector<VertexId> EmbeddedMultigraph::vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < vertex_capacity(); ++v)
        if (vertex_alive_[v]) out.push_back(v);
    return out;
}

int EmbeddedMultigraph::degree(VertexId v) const {
    return static_cast<int>(rotation(v).size());
}

std::vector<VertexId> EmbeddedMultigraph::neighbors(VertexId v) const {
    std::set<VertexId> s;
    for (DartId d : rotation(v)) s.insert(head(d));
    return {s.begin(), s.end()};
}

bool EmbeddedMultigraph::has_edge(VertexId u, VertexId v) const {
    return multiplicity(u, v) > 0;
}

int EmbeddedMultigraph::multiplicity(VertexId u, VertexId v) const {
    auto it = multiplicity_.find(ordered_pair(u, v));
    return it == multiplicity_.end() ? 0 : it->second;
}

std::vector<EdgeKey> EmbeddedMultigraph::simple_edges() const {
    std::vector<EdgeKey> out;
    for (const auto& [key, m] : multiplicity_)
        if (m > 0) out.push_back(key);
    return out;
}

std::vector<EdgeKey> EmbeddedMultigraph::multi_edges() const {
    std::vector<EdgeKey> out;
    for (const auto& [key, m] : multiplicity_)
        if (m >= 2) out.push_back(key);
    return out;
}

bool EmbeddedMultigraph::is_simple() const { return multi_edges().empty(); }

std::vector<FacialCircuit> EmbeddedMultigraph::trace_faces() const {
    std::vector<FacialCircuit> faces;
    std::vector<bool> seen(darts_.size(), false);
    for (DartId d0 = 0; d0 < (int)darts_.size(); ++d0) {
        if (!darts_[d0].alive || seen[d0]) continue;
        FacialCircuit f;
        DartId d = d0;
        do {
            seen[d] = true;
            f.darts.push_back(d);
            d = darts_[twin(d)].next;  // face successor
        } while (d != d0);
        faces.push_back(std::move(f));
    }
    return faces;
}

FacialCircuit EmbeddedMultigraph::face_of(DartId d0) const {
    FacialCircuit f;
    DartId d = d0;
    do {
        f.darts.push_back(d);
        d = darts_[twin(d)].next;
    } while (d != d0);
    return f;
}

std::vector<VertexId> EmbeddedMultigraph::face_vertices_simple(const FacialCircuit& f) const {
    std::vector<VertexId> vs;
    std::set<VertexId> seen;
    for (DartId d : f.darts) {
        VertexId v = origin(d);
        if (!seen.insert(v).second)
            throw std::logic_error("face walk is not a simple cycle");
        vs.push_back(v);
    }
    return vs;
}

bool EmbeddedMultigraph::is_connected() const {
    std::vector<int> comp;
    return connected_components(comp) <= 1;
}

int EmbeddedMultigraph::connected_components(std::vector<int>& comp) const {
    comp.assign(vertex_capacity(), kNone);
    int count = 0;
    for (VertexId s = 0; s < vertex_capacity(); ++s) {
        if (!vertex_alive_[s] || comp[s] != kNone) continue;
        comp[s] = count;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (DartId d : rotation(v)) {
                VertexId w = head(d);
                if (comp[w] == kNone) {
                    comp[w] = count;
                    q.push(w);
                }
            }
        }
        ++count;
    }
    return count;
}

bool EmbeddedMultigraph::euler_ok() const {
    std::vector<int> comp;
    int c = connected_components(comp);
    int f = static_cast<int>(trace_faces().size());
    // Isolated vertices contribute no darts and hence no faces; give each
    // its one trivial face.
    for (VertexId v = 0; v < vertex_capacity(); ++v)
        if (vertex_alive_[v] && first_dart_[v] == kNone) ++f;
    return num_vertices_ - num_edges_ + f == 2 * c;
}

bool EmbeddedMultigraph::is_multi_triangulated() const {
    if (num_vertices_ < 3)
        throw std::invalid_argument("is_multi_triangulated: needs at least 3 vertices");
    if (num_edges_ == 0) return false;
    for (const auto& f : trace_faces()) {
        if (f.length() != 3) return false;
    }
    // Loops are impossible by construction (insert_edge rejects them), and
    // a face of two copies of one edge has length 2, so reaching here with
    // all faces of length 3 settles both remaining clauses.
    return true;
}

DartId EmbeddedMultigraph::new_dart_pair(VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("loops are never added");
    DartId d = static_cast<DartId>(darts_.size());
    darts_.push_back({u, kNone, kNone, true});
    darts_.push_back({v, kNone, kNone, true});
    return d;
}

void EmbeddedMultigraph::attach_after(VertexId v, DartId d, DartId after) {
    if (after == kNone) after = first_dart_[v];
    if (after == kNone) {
        first_dart_[v] = d;
        darts_[d].next = d;
        darts_[d].prev = d;
        return;
    }
    if (origin(after) != v) corrupt("attach_after: anchor dart not at vertex");
    DartId nxt = darts_[after].next;
    darts_[after].next = d;
    darts_[d].prev = after;
    darts_[d].next = nxt;
    darts_[nxt].prev = d;
}

void EmbeddedMultigraph::detach(DartId d) {
    VertexId v = origin(d);
    if (darts_[d].next == d) {
        first_dart_[v] = kNone;
    } else {
        DartId p = darts_[d].prev, n = darts_[d].next;
        darts_[p].next = n;
        darts_[n].prev = p;
        if (first_dart_[v] == d) first_dart_[v] = n;
    }
    darts_[d].next = darts_[d].prev = kNone;
}

void EmbeddedMultigraph::bump_multiplicity(VertexId u, VertexId v, int delta) {
    auto key = ordered_pair(u, v);
    int m = (multiplicity_[key] += delta);
    if (m < 0) corrupt("negative multiplicity");
    if (m == 0) multiplicity_.erase(key);
}

DartId EmbeddedMultigraph::insert_edge(VertexId u, VertexId v, DartId after_u, DartId after_v) {
    if (!vertex_alive(u) || !vertex_alive(v)) throw std::invalid_argument("insert_edge: dead vertex");
    DartId d = new_dart_pair(u, v);
    attach_after(u, d, after_u);
    attach_after(v, d ^ 1, after_v);
    bump_multiplicity(u, v, 1);
    ++num_edges_;
    return d;
}

DartId EmbeddedMultigraph::insert_chord_in_face(const FacialCircuit& f, int i, int j) {
    int k = f.length();
    if (i == j || i < 0 || j < 0 || i >= k || j >= k)
        throw std::invalid_argument("insert_chord_in_face: bad corner positions");
    // The corner at position t lies between twin(f.darts[t-1]) and
    // f.darts[t]; inserting after the former routes the chord inside f.
    VertexId x = origin(f.darts[i]);
    VertexId y = origin(f.darts[j]);
    DartId anchor_x = twin(f.darts[(i + k - 1) % k]);
    DartId anchor_y = twin(f.darts[(j + k - 1) % k]);
    return insert_edge(x, y, anchor_x, anchor_y);
}

VertexId EmbeddedMultigraph::insert_apex_in_face(const FacialCircuit& f,
                                                 const std::vector<int>& positions) {
    if (positions.empty()) throw std::invalid_argument("insert_apex_in_face: no corners");
    for (size_t t = 1; t < positions.size(); ++t)
        if (positions[t] <= positions[t - 1])
            throw std::invalid_argument("insert_apex_in_face: positions must increase");
    int k = f.length();
    VertexId z = add_vertex();
    // Attach z's darts in reverse face order: walking the face boundary,
    // successive spokes appear counterclockwise around z.
    DartId prev_at_z = kNone;
    for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
        int pos = *it;
        if (pos < 0 || pos >= k) throw std::invalid_argument("insert_apex_in_face: bad position");
        VertexId x = origin(f.darts[pos]);
        DartId anchor_x = twin(f.darts[(pos + k - 1) % k]);
        DartId d = insert_edge(z, x, prev_at_z, anchor_x);
        prev_at_z = d;
    }
    return z;
}

void EmbeddedMultigraph::delete_edge(DartId d) {
    if (!dart_alive(d)) throw std::invalid_argument("delete_edge: dead dart");
    DartId t = twin(d);
    VertexId u = origin(d), v = origin(t);
    detach(d);
    detach(t);
    darts_[d].alive = darts_[t].alive = false;
    bump_multiplicity(u, v, -1);
    --num_edges_;
}

void EmbeddedMultigraph::delete_vertex(VertexId v) {
    if (!vertex_alive(v)) throw std::invalid_argument("delete_vertex: dead vertex");
    while (first_dart_[v] != kNone) delete_edge(first_dart_[v]);
    vertex_alive_[v] = false;
    --num_vertices_;
}

void EmbeddedMultigraph::contract_edge(VertexId z, VertexId y) {
    if (!has_edge(z, y)) throw std::invalid_argument("contract_edge: not an edge");

    // Remove all copies of (z,y) itself; they would become loops.
    std::vector<DartId> copies;
    for (DartId d : rotation(z))
        if (head(d) == y) copies.push_back(d);
    DartId zy = copies.front();
    // Splice z's remaining darts into y's rotation where (y,z) sat: the cw
    // order around the merged vertex is z's order (after z->y) followed by
    // y's order (after y->z).
    std::vector<DartId> rot_z = rotation(z);
    std::vector<DartId> rot_y = rotation(y);
    auto rotate_to = [](std::vector<DartId>& seq, DartId front) {
        auto it = std::find(seq.begin(), seq.end(), front);
        std::rotate(seq.begin(), it, seq.end());
    };
    rotate_to(rot_z, zy);
    rotate_to(rot_y, twin(zy));
    for (DartId d : copies) delete_edge(d);

    std::vector<DartId> merged;
    for (DartId d : rot_z)
        if (dart_alive(d)) merged.push_back(d);
    for (DartId d : rot_y)
        if (dart_alive(d)) merged.push_back(d);

    // Re-originate z's darts at y and fix the multiplicity table.
    for (DartId d : merged) {
        if (origin(d) == z) {
            VertexId w = head(d);
            bump_multiplicity(z, w, -1);
            bump_multiplicity(y, w, 1);
            darts_[d].origin = y;
        }
    }
    int k = static_cast<int>(merged.size());
    first_dart_[y] = k ? merged[0] : kNone;
    for (int i = 0; i < k; ++i) {
        darts_[merged[i]].next = merged[(i + 1) % k];
        darts_[merged[i]].prev = merged[(i + k - 1) % k];
    }
    first_dart_[z] = kNone;
    vertex_alive_[z] = false;
    --num_vertices_;

    // Merge parallel copies down to multiplicity 1.  Two-sided faces are
    // collapsed first: dropping one side keeps every other face intact.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& f : trace_faces()) {
            // A length-2 face of twin darts is a pendant edge, not a lens.
            if (f.length() == 2 && twin(f.darts[0]) != f.darts[1]) {
                delete_edge(std::max(f.darts[0], f.darts[1]));
                changed = true;
                break;
            }
        }
    }
    // Any copies still parallel (possible only when z and y had common
    // neighbors that were not face apexes) are deleted arbitrarily.
    for (auto [a, b] : multi_edges()) {
        while (multiplicity(a, b) > 1) {
            for (DartId d : rotation(a)) {
                if (head(d) == b) {
                    delete_edge(d);
                    break;
                }
            }
        }
    }
}

void EmbeddedMultigraph::validate() const {
    std::vector<int> darts_seen_at(vertex_capacity(), 0);
    std::map<EdgeKey, int> mult;
    int alive_darts = 0;
    for (DartId d = 0; d < (int)darts_.size(); ++d) {
        if (!darts_[d].alive) continue;
        ++alive_darts;
        if (!darts_[twin(d)].alive) corrupt("twin dead");
        VertexId u = origin(d), v = origin(twin(d));
        if (u == v) corrupt("loop");
        if (!vertex_alive(u)) corrupt("dart at dead vertex");
        if (darts_[darts_[d].next].prev != d || darts_[darts_[d].prev].next != d)
            corrupt("rotation links broken");
        if (origin(darts_[d].next) != u) corrupt("rotation leaves vertex");
        if (d < twin(d)) ++mult[ordered_pair(u, v)];
    }
    if (alive_darts != 2 * num_edges_) corrupt("dart count != 2 * edge count");
    if (mult != multiplicity_) corrupt("multiplicity table out of sync");
    int alive_vertices = 0;
    for (VertexId v = 0; v < vertex_capacity(); ++v) {
        if (!vertex_alive_[v]) {
            if (first_dart_[v] != kNone) corrupt("dead vertex with darts");
            continue;
        }
        ++alive_vertices;
        for (DartId d : rotation(v)) {
            if (origin(d) != v) corrupt("foreign dart in rotation");
            ++darts_seen_at[v];
        }
    }
    if (alive_vertices != num_vertices_) corrupt("vertex count out of sync");
    int sum = 0;
    for (int c : darts_seen_at) sum += c;
    if (sum != alive_darts) corrupt("rotations do not cover all darts");
}

}  // namespace pwtri
