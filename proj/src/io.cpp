#include "pwtri/io.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pwtri/generate.hpp"

namespace pwtri {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

std::optional<std::vector<std::vector<VertexId>>> planar_embedding(
    int n, const std::vector<EdgeKey>& edges) {
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                        boost::property<boost::vertex_index_t, int>,
                                        boost::property<boost::edge_index_t, int>>;
    Graph bg(n);
    for (auto [u, v] : edges) boost::add_edge(u, v, bg);
    int ei = 0;
    for (auto [it, end] = boost::edges(bg); it != end; ++it)
        boost::put(boost::edge_index, bg, *it, ei++);

    using Embedding = std::vector<std::vector<boost::graph_traits<Graph>::edge_descriptor>>;
    Embedding embedding(n);
    auto emap = boost::make_iterator_property_map(embedding.begin(),
                                                  boost::get(boost::vertex_index, bg));
    if (!boost::boyer_myrvold_planarity_test(
            boost::boyer_myrvold_params::graph = bg,
            boost::boyer_myrvold_params::embedding = emap))
        return std::nullopt;

    std::vector<std::vector<VertexId>> rot(n);
    for (int v = 0; v < n; ++v)
        for (auto e : embedding[v])
            rot[v].push_back(static_cast<VertexId>(boost::target(e, bg) == (size_t)v
                                                       ? boost::source(e, bg)
                                                       : boost::target(e, bg)));
    return rot;
}

std::optional<std::vector<std::vector<VertexId>>> outerplanar_embedding(
    int n, const std::vector<EdgeKey>& edges) {
    std::vector<EdgeKey> with_apex = edges;
    for (int v = 0; v < n; ++v) with_apex.push_back({v, n});
    auto rot = planar_embedding(n + 1, with_apex);
    if (!rot) return std::nullopt;
    rot->pop_back();
    for (auto& r : *rot) r.erase(std::remove(r.begin(), r.end(), n), r.end());
    return rot;
}

EmbeddedMultigraph parse_graph(const std::string& text) {
    int n = -1, m = -1;
    std::vector<EdgeKey> edges;
    std::set<EdgeKey> seen;
    std::vector<std::vector<VertexId>> rot;
    std::vector<bool> rot_given;

    for (const std::string& line : lines_of(text)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream in(line);
        if (line[0] == 'p') {
            std::string p, tw;
            if (!(in >> p >> tw >> n >> m) || tw != "tw" || n < 0 || m < 0)
                bad("graph: malformed problem line");
            rot.assign(n, {});
            rot_given.assign(n, false);
        } else if (line[0] == 'r') {
            if (n < 0) bad("graph: rotation before problem line");
            std::string r;
            int v;
            in >> r >> v;
            if (!in && r != "r") bad("graph: malformed rotation line");
            if (v < 1 || v > n) bad("graph: rotation vertex out of range");
            if (rot_given[v - 1]) bad("graph: duplicate rotation line");
            rot_given[v - 1] = true;
            int w;
            while (in >> w) {
                if (w < 1 || w > n) bad("graph: rotation neighbor out of range");
                rot[v - 1].push_back(w - 1);
            }
            if (in.fail() && !in.eof()) bad("graph: malformed rotation line");
        } else {
            if (n < 0) bad("graph: edge before problem line");
            int u, v;
            if (!(in >> u >> v)) bad("graph: malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n) bad("graph: vertex out of range");
            if (u == v) bad("graph: loops are not allowed");
            auto key = ordered_pair(u - 1, v - 1);
            if (!seen.insert(key).second) bad("graph: duplicate edge");
            edges.push_back(key);
        }
    }
    if (n < 0) bad("graph: missing problem line");
    if ((int)edges.size() != m) bad("graph: edge count does not match the problem line");

    bool any_rot = std::any_of(rot_given.begin(), rot_given.end(), [](bool b) { return b; });
    if (any_rot) {
        for (int v = 0; v < n; ++v)
            if (!rot_given[v]) bad("graph: rotation block must cover every vertex");
        std::vector<std::set<VertexId>> want(n);
        for (auto [u, v] : edges) {
            want[u].insert(v);
            want[v].insert(u);
        }
        for (int v = 0; v < n; ++v)
            if (std::set<VertexId>(rot[v].begin(), rot[v].end()) != want[v] ||
                rot[v].size() != want[v].size())
                bad("graph: rotation of a vertex does not list its neighbors exactly once");
        auto g = EmbeddedMultigraph::from_rotations(n, rot);
        if (!g.euler_ok()) bad("graph: rotation block is not a planar embedding");
        return g;
    }

    auto embedding = outerplanar_embedding(n, edges);
    if (!embedding) embedding = planar_embedding(n, edges);
    if (!embedding) bad("graph: input is not planar");
    auto g = EmbeddedMultigraph::from_rotations(n, *embedding);
    if (!g.euler_ok()) throw std::logic_error("graph: computed embedding failed Euler check");
    return g;
}

std::string emit_graph(const EmbeddedMultigraph& g, bool with_rotation) {
    auto rot = rotation_lists(g);  // enforces simple + dense ids
    std::ostringstream out;
    out << "p tw " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.simple_edges()) out << u + 1 << " " << v + 1 << "\n";
    if (with_rotation) {
        for (int v = 0; v < g.num_vertices(); ++v) {
            out << "r " << v + 1;
            for (VertexId w : rot[v]) out << " " << w + 1;
            out << "\n";
        }
    }
    return out.str();
}

PathDecomposition parse_decomposition(const std::string& text) {
    int bag_count = -1, max_size = -1, n = -1;
    std::vector<std::vector<VertexId>> bags;
    for (const std::string& line : lines_of(text)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream in(line);
        if (line[0] == 's') {
            std::string s, td;
            if (!(in >> s >> td >> bag_count >> max_size >> n) || td != "td")
                bad("decomposition: malformed solution line");
        } else if (line[0] == 'b') {
            if (bag_count < 0) bad("decomposition: bag before solution line");
            std::string b;
            int idx;
            if (!(in >> b >> idx)) bad("decomposition: malformed bag line");
            if (idx != (int)bags.size() + 1)
                bad("decomposition: bag ids must be 1..N in order (paths only)");
            std::vector<VertexId> bag;
            int v;
            while (in >> v) {
                if (v < 1 || (n >= 0 && v > n)) bad("decomposition: vertex out of range");
                bag.push_back(v - 1);
            }
            bags.push_back(std::move(bag));
        } else {
            bad("decomposition: unexpected line (tree edges are not supported)");
        }
    }
    if (bag_count < 0) bad("decomposition: missing solution line");
    if ((int)bags.size() != bag_count) bad("decomposition: bag count mismatch");
    PathDecomposition p(std::move(bags));  // throws on gapped intervals
    if (p.width() + 1 > max_size) bad("decomposition: width exceeds the declared bag size");
    return p;
}

std::string emit_decomposition(const PathDecomposition& p, int num_vertices) {
    std::ostringstream out;
    out << "s td " << p.num_bags() << " " << p.width() + 1 << " " << num_vertices << "\n";
    for (int i = 0; i < p.num_bags(); ++i) {
        out << "b " << i + 1;
        for (VertexId v : p.bag(i)) out << " " << v + 1;
        out << "\n";
    }
    return out.str();
}

}  // namespace pwtri
