#include "pwtri/path_decomposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pwtri {

PathDecomposition::PathDecomposition(std::vector<std::vector<VertexId>> bags)
    : bags_(std::move(bags)) {
    for (auto& b : bags_) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    reindex();
}

void PathDecomposition::reindex() {
    interval_.clear();
    for (int i = 0; i < num_bags(); ++i) {
        for (VertexId v : bags_[i]) {
            auto it = interval_.find(v);
            if (it == interval_.end()) {
                interval_[v] = {i, i};
            } else {
                if (i != it->second.second + 1)
                    throw std::invalid_argument("bags of a vertex do not form an interval");
                it->second.second = i;
            }
        }
    }
}

int PathDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags_) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

bool PathDecomposition::contains(int i, VertexId v) const {
    return std::binary_search(bags_[i].begin(), bags_[i].end(), v);
}

std::optional<std::pair<int, int>> PathDecomposition::interval(VertexId v) const {
    auto it = interval_.find(v);
    if (it == interval_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> PathDecomposition::leftmost_common_bag(const std::vector<VertexId>& vs) const {
    int lo = 0, hi = num_bags() - 1;
    for (VertexId v : vs) {
        auto iv = interval(v);
        if (!iv) return std::nullopt;
        lo = std::max(lo, iv->first);
        hi = std::min(hi, iv->second);
    }
    if (lo > hi) return std::nullopt;
    return lo;
}

std::vector<int> PathDecomposition::widen(VertexId v, BagInterval range) {
    if (range.lo > range.hi || range.lo < -1 || range.hi >= num_bags())
        throw std::invalid_argument("widen: bad range");
    if (range.empty()) return {};
    if (auto iv = interval(v)) {
        bool touches = range.lo <= iv->second && range.hi >= iv->first - 1;
        if (!touches) throw std::invalid_argument("widen: range not adjacent to current interval");
    }
    std::vector<int> grown;
    for (int i = range.lo + 1; i <= range.hi; ++i) {
        if (!contains(i, v)) {
            bags_[i].insert(std::lower_bound(bags_[i].begin(), bags_[i].end(), v), v);
            grown.push_back(i);
        }
    }
    reindex();
    return grown;
}

std::vector<int> PathDecomposition::widen_to_cover(VertexId v, int target) {
    auto iv = interval(v);
    if (!iv) throw std::invalid_argument("widen_to_cover: vertex not in decomposition");
    if (target >= iv->first && target <= iv->second) return {};
    if (target > iv->second) return widen(v, {iv->second, target});
    return widen(v, {target - 1, iv->first - 1});
}

void PathDecomposition::remove_vertex(VertexId v) {
    for (auto& b : bags_) b.erase(std::remove(b.begin(), b.end(), v), b.end());
    reindex();
}

void PathDecomposition::rename_vertex(VertexId z, VertexId y) {
    for (auto& b : bags_) {
        bool had_z = std::binary_search(b.begin(), b.end(), z);
        if (!had_z) continue;
        b.erase(std::remove(b.begin(), b.end(), z), b.end());
        if (!std::binary_search(b.begin(), b.end(), y))
            b.insert(std::lower_bound(b.begin(), b.end(), y), y);
    }
    reindex();
}

void PathDecomposition::add_to_all_bags(VertexId v) {
    for (auto& b : bags_)
        if (!std::binary_search(b.begin(), b.end(), v))
            b.insert(std::lower_bound(b.begin(), b.end(), v), v);
    reindex();
}

PathDecomposition PathDecomposition::restricted_to(const std::vector<VertexId>& vs) const {
    std::set<VertexId> keep(vs.begin(), vs.end());
    std::vector<std::vector<VertexId>> bags;
    for (const auto& b : bags_) {
        std::vector<VertexId> nb;
        for (VertexId v : b)
            if (keep.count(v)) nb.push_back(v);
        bags.push_back(std::move(nb));
    }
    while (!bags.empty() && bags.front().empty()) bags.erase(bags.begin());
    while (!bags.empty() && bags.back().empty()) bags.pop_back();
    return PathDecomposition(std::move(bags));
}

bool PathDecomposition::validates(const EmbeddedMultigraph& g) const {
    for (VertexId v : g.vertices())
        if (!interval(v)) return false;
    for (auto [u, v] : g.simple_edges())
        if (!leftmost_common_bag({u, v})) return false;
    // Interval contiguity is enforced by reindex() on every mutation.
    return true;
}

std::pair<VertexId, VertexId> find_chord_in_face(const PathDecomposition& p,
                                                 const EmbeddedMultigraph& g,
                                                 const FacialCircuit& face) {
    std::vector<VertexId> cycle = g.face_vertices_simple(face);
    int k = static_cast<int>(cycle.size());
    if (k < 4) throw std::invalid_argument("find_chord_in_face: face has fewer than 4 vertices");
    std::optional<std::pair<VertexId, VertexId>> best;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;  // consecutive around the wrap
            VertexId a = std::min(cycle[i], cycle[j]);
            VertexId b = std::max(cycle[i], cycle[j]);
            if (!p.leftmost_common_bag({a, b})) continue;
            if (!best || std::make_pair(a, b) < *best) best = {a, b};
        }
    }
    if (!best)
        throw std::logic_error("find_chord_in_face: no shared-bag chord (invalid decomposition?)");
    return *best;
}

PathDecomposition concatenate(const std::vector<PathDecomposition>& parts,
                              const std::vector<std::pair<VertexId, VertexId>>& links) {
    if (parts.empty()) return {};
    if (links.size() + 1 != parts.size())
        throw std::invalid_argument("concatenate: need exactly one link between consecutive parts");
    std::vector<std::vector<VertexId>> bags = parts[0].bags();
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        auto [a, b] = links[i];
        if (parts[i].num_bags() == 0 || !parts[i].contains(parts[i].num_bags() - 1, a))
            throw std::invalid_argument("concatenate: link tail not in last bag");
        if (parts[i + 1].num_bags() == 0 || !parts[i + 1].contains(0, b))
            throw std::invalid_argument("concatenate: link head not in first bag");
        bags.push_back({a, b});
        const auto& nb = parts[i + 1].bags();
        bags.insert(bags.end(), nb.begin(), nb.end());
    }
    return PathDecomposition(std::move(bags));
}

}  // namespace pwtri
