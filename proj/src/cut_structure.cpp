#include "pwtri/cut_structure.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace pwtri {

int CutComponents::component_of(VertexId v) const {
    for (int i = 0; i < count(); ++i)
        if (std::binary_search(components[i].interior.begin(), components[i].interior.end(), v))
            return i;
    return kNone;
}

std::vector<VertexId> cut_vertices(const EmbeddedMultigraph& g) {
    if (!g.is_connected()) throw std::invalid_argument("cut_vertices: graph is disconnected");
    int cap = g.vertex_capacity();
    std::vector<int> disc(cap, kNone), low(cap, 0);
    std::vector<bool> is_cut(cap, false);
    int timer = 0;

    // Iterative DFS with lowpoints.  Walks darts rather than neighbor sets
    // so that a second parallel copy of the parent edge counts as a back
    // edge.
    struct Frame {
        VertexId v;
        DartId entry;  // dart parent -> v, kNone at the root
        std::vector<DartId> darts;
        size_t idx = 0;
        int tree_children = 0;
        bool root;
    };
    for (VertexId root : g.vertices()) {
        if (disc[root] != kNone) continue;
        std::vector<Frame> stack;
        stack.push_back({root, kNone, g.rotation(root), 0, 0, true});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if (fr.idx < fr.darts.size()) {
                DartId d = fr.darts[fr.idx++];
                if (fr.entry != kNone && d == g.twin(fr.entry)) continue;
                VertexId w = g.head(d);
                if (disc[w] == kNone) {
                    disc[w] = low[w] = timer++;
                    ++fr.tree_children;
                    stack.push_back({w, d, g.rotation(w), 0, 0, false});
                } else {
                    low[fr.v] = std::min(low[fr.v], disc[w]);
                }
            } else {
                if (stack.size() >= 2) {
                    Frame& up = stack[stack.size() - 2];
                    low[up.v] = std::min(low[up.v], low[fr.v]);
                    if (!up.root && low[fr.v] >= disc[up.v]) is_cut[up.v] = true;
                }
                if (fr.root && fr.tree_children >= 2) is_cut[fr.v] = true;
                stack.pop_back();
            }
        }
    }
    std::vector<VertexId> out;
    for (VertexId v = 0; v < cap; ++v)
        if (is_cut[v]) out.push_back(v);
    return out;
}

bool is_biconnected(const EmbeddedMultigraph& g) {
    return g.num_vertices() >= 3 && g.is_connected() && cut_vertices(g).empty();
}

CutComponents cut_components(const EmbeddedMultigraph& g,
                             const std::vector<VertexId>& separator) {
    if (separator.empty() || separator.size() > 2)
        throw std::invalid_argument("cut_components: separator must have 1 or 2 vertices");
    CutComponents cc;
    cc.separator = separator;
    std::set<VertexId> sep(separator.begin(), separator.end());

    std::vector<int> comp(g.vertex_capacity(), kNone);
    int count = 0;
    for (VertexId s : g.vertices()) {
        if (sep.count(s) || comp[s] != kNone) continue;
        std::queue<VertexId> q;
        q.push(s);
        comp[s] = count;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId w : g.neighbors(v)) {
                if (sep.count(w) || comp[w] != kNone) continue;
                comp[w] = count;
                q.push(w);
            }
        }
        ++count;
    }
    cc.components.resize(count);
    for (VertexId v : g.vertices())
        if (comp[v] != kNone) cc.components[comp[v]].interior.push_back(v);
    for (auto& c : cc.components) std::sort(c.interior.begin(), c.interior.end());

    // Dart intervals: scan the rotation at each separator vertex and chop
    // it into maximal arcs per component.  Darts to other separator
    // vertices (copies of a pair edge) break arcs.
    for (VertexId s : separator) {
        std::vector<DartId> rot = g.rotation(s);
        int k = static_cast<int>(rot.size());
        if (k == 0) continue;
        auto comp_of_dart = [&](DartId d) {
            VertexId h = g.head(d);
            return sep.count(h) ? kNone : comp[h];
        };
        // Start at an arc boundary so arcs are not split by the wrap.
        int start = 0;
        for (int i = 0; i < k; ++i) {
            if (comp_of_dart(rot[i]) != comp_of_dart(rot[(i + k - 1) % k])) {
                start = i;
                break;
            }
        }
        std::vector<int> arcs_seen(count, 0);
        int i = 0;
        while (i < k) {
            int pos = (start + i) % k;
            int c = comp_of_dart(rot[pos]);
            if (c == kNone) {
                ++i;
                continue;
            }
            auto& darts = cc.components[c].darts_at[s];
            ++arcs_seen[c];
            while (i < k && comp_of_dart(rot[(start + i) % k]) == c) {
                darts.push_back(rot[(start + i) % k]);
                ++i;
            }
        }
        for (int c = 0; c < count; ++c)
            if (arcs_seen[c] > 0) cc.components[c].consecutive_at[s] = (arcs_seen[c] == 1);
    }
    return cc;
}

std::vector<CuttingPairRecord> cutting_pairs(const EmbeddedMultigraph& g) {
    if (!g.is_multi_triangulated())
        throw std::invalid_argument("cutting_pairs: graph is not multi-triangulated");
    std::vector<CuttingPairRecord> out;
    for (auto [u, v] : g.multi_edges()) {
        CuttingPairRecord rec;
        rec.u = u;
        rec.v = v;
        rec.multiplicity = g.multiplicity(u, v);
        rec.comps = cut_components(g, {u, v});
        assert(rec.comps.count() == rec.multiplicity);
        assert(pair_alternation_ok(g, rec));
        out.push_back(std::move(rec));
    }
    return out;
}

bool pair_alternation_ok(const EmbeddedMultigraph& g, const CuttingPairRecord& rec) {
    for (VertexId s : {rec.u, rec.v}) {
        VertexId other = (s == rec.u) ? rec.v : rec.u;
        std::vector<DartId> rot = g.rotation(s);
        int copies = 0;
        for (DartId d : rot)
            if (g.head(d) == other) ++copies;
        if (copies != rec.multiplicity) return false;
        for (const auto& c : rec.comps.components) {
            auto it = c.consecutive_at.find(s);
            if (it == c.consecutive_at.end() || !it->second) return false;
        }
    }
    return true;
}

namespace {

// Copies of (u,v) leaving s, in clockwise order starting at first_dart(s).
std::vector<DartId> copy_darts_at(const EmbeddedMultigraph& g, VertexId s, VertexId other) {
    std::vector<DartId> out;
    for (DartId d : g.rotation(s))
        if (g.head(d) == other) out.push_back(d);
    return out;
}

// Component indices in current lens order around v, starting at the lens
// after the first copy of (u,v).
std::vector<int> current_slot_order(const EmbeddedMultigraph& g, const CuttingPairRecord& rec) {
    std::vector<DartId> rot = g.rotation(rec.v);
    auto first_copy = std::find_if(rot.begin(), rot.end(),
                                   [&](DartId d) { return g.head(d) == rec.u; });
    std::rotate(rot.begin(), first_copy, rot.end());
    std::vector<int> order;
    for (DartId d : rot) {
        if (g.head(d) == rec.u) continue;
        int c = rec.comps.component_of(g.head(d));
        if (order.empty() || order.back() != c) order.push_back(c);
    }
    if ((int)order.size() != rec.comps.count())
        throw std::logic_error("current_slot_order: lens structure broken");
    return order;
}

}  // namespace

void arrange_components(EmbeddedMultigraph& g, const CuttingPairRecord& rec,
                        const std::vector<std::pair<int, bool>>& slots) {
    const int L = rec.comps.count();
    if ((int)slots.size() != L) throw std::invalid_argument("arrange_components: slot count mismatch");
    {
        std::set<int> used;
        for (auto [c, rev] : slots) {
            (void)rev;
            if (c < 0 || c >= L || !used.insert(c).second)
                throw std::invalid_argument("arrange_components: slots must be a permutation");
        }
    }
    VertexId u = rec.u, v = rec.v;
    std::vector<DartId> copies_v = copy_darts_at(g, v, u);
    if ((int)copies_v.size() != L) throw std::logic_error("arrange_components: stale record");

    auto arc = [&](int c, VertexId s, bool reversed) {
        std::vector<DartId> a = rec.comps.components[c].darts_at.at(s);
        if (reversed) std::reverse(a.begin(), a.end());
        return a;
    };

    // New rotation at v: copy_0, arc(slot 1), copy_1, arc(slot 2), ...
    std::vector<DartId> rot_v;
    for (int k = 0; k < L; ++k) {
        rot_v.push_back(copies_v[k]);
        auto a = arc(slots[k].first, v, slots[k].second);
        rot_v.insert(rot_v.end(), a.begin(), a.end());
    }
    // At u the lens pattern appears mirrored:
    // twin(copy_0), arc(slot L), twin(copy_{L-1}), arc(slot L-1), ...,
    // twin(copy_1), arc(slot 1).
    std::vector<DartId> rot_u;
    for (int k = 0; k < L; ++k) {
        rot_u.push_back(g.twin(copies_v[(L - k) % L]));
        auto a = arc(slots[L - 1 - k].first, u, slots[L - 1 - k].second);
        rot_u.insert(rot_u.end(), a.begin(), a.end());
    }
    g.set_rotation(v, rot_v);
    g.set_rotation(u, rot_u);

    // Mirroring a lens flips the rotation of every interior vertex.
    for (auto [c, rev] : slots) {
        if (!rev) continue;
        for (VertexId w : rec.comps.components[c].interior) {
            std::vector<DartId> r = g.rotation(w);
            std::reverse(r.begin(), r.end());
            g.set_rotation(w, r);
        }
    }
}

void swap_components(EmbeddedMultigraph& g, const CuttingPairRecord& rec, int i, int j) {
    std::vector<std::pair<int, bool>> slots;
    for (int c : current_slot_order(g, rec)) {
        int target = c == i ? j : (c == j ? i : c);
        slots.push_back({target, false});
    }
    arrange_components(g, rec, slots);
}

void reverse_component(EmbeddedMultigraph& g, const CuttingPairRecord& rec, int i) {
    std::vector<std::pair<int, bool>> slots;
    for (int c : current_slot_order(g, rec)) slots.push_back({c, c == i});
    arrange_components(g, rec, slots);
}

void replace_multiedge_copy(EmbeddedMultigraph& g, const CuttingPairRecord& rec,
                            int comp_b1, VertexId b1, int comp_b2, VertexId b2) {
    if (comp_b1 == comp_b2)
        throw std::invalid_argument("replace_multiedge_copy: same component");
    if (rec.multiplicity < 2)
        throw std::invalid_argument("replace_multiedge_copy: not a multi-edge");
    if (g.has_edge(b1, b2))
        throw std::logic_error("replace_multiedge_copy: edge already present");
    VertexId v = rec.v;

    // Orientation: b1 must end up as the last interior neighbor of v in its
    // lens and b2 as the first of the next lens, so that both face the copy
    // separating slot 1 from slot 2.
    auto flag_for = [&](int c, VertexId b, bool want_last) {
        const auto& a = rec.comps.components[c].darts_at.at(v);
        VertexId first = g.head(a.front()), last = g.head(a.back());
        if (b == (want_last ? last : first)) return false;
        if (b == (want_last ? first : last)) return true;
        throw std::invalid_argument("replace_multiedge_copy: vertex is not peripheral");
    };
    std::vector<std::pair<int, bool>> slots;
    slots.push_back({comp_b1, flag_for(comp_b1, b1, true)});
    slots.push_back({comp_b2, flag_for(comp_b2, b2, false)});
    for (int c : current_slot_order(g, rec))
        if (c != comp_b1 && c != comp_b2) slots.push_back({c, false});
    arrange_components(g, rec, slots);

    // The copy between slot 1 and slot 2 is the second copy at v.
    std::vector<DartId> copies_v = copy_darts_at(g, v, rec.u);
    g.delete_edge(copies_v[1]);

    // Removing it merged the two seam triangles into one quadrilateral
    // containing u, b1, v, b2; split it with the new chord.
    for (const auto& f : g.trace_faces()) {
        if (f.length() != 4) continue;
        int i1 = kNone, i2 = kNone;
        for (int t = 0; t < 4; ++t) {
            if (g.origin(f.darts[t]) == b1) i1 = t;
            if (g.origin(f.darts[t]) == b2) i2 = t;
        }
        if (i1 == kNone || i2 == kNone) continue;
        g.insert_chord_in_face(f, i1, i2);
        return;
    }
    throw std::logic_error("replace_multiedge_copy: quadrilateral not found");
}

}  // namespace pwtri
