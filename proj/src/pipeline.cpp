#include "pwtri/pipeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pwtri/cut_structure.hpp"
#include "pwtri/multi_triangulate.hpp"
#include "pwtri/oracle.hpp"
#include "pwtri/simplify.hpp"

namespace pwtri {

PipelineMode parse_mode(const std::string& name) {
    if (name == "auto") return PipelineMode::kAuto;
    if (name == "3conn") return PipelineMode::kThreeConnected;
    if (name == "2conn") return PipelineMode::kTwoConnected;
    if (name == "general") return PipelineMode::kGeneral;
    if (name == "outerplanar") return PipelineMode::kOuterplanar;
    throw std::invalid_argument("unknown mode: " + name);
}

std::string mode_name(PipelineMode m) {
    switch (m) {
        case PipelineMode::kAuto: return "auto";
        case PipelineMode::kThreeConnected: return "3conn";
        case PipelineMode::kTwoConnected: return "2conn";
        case PipelineMode::kGeneral: return "general";
        case PipelineMode::kOuterplanar: return "outerplanar";
    }
    return "?";
}

bool PipelineReport::ok() const {
    bool shape = output_maximal_outerplanar || (output_simple && output_triangulated);
    return shape && vertex_set_preserved && edges_preserved && planar_certificate &&
           bound_satisfied && (!tokens_audited || token_invariant_ok);
}

std::string PipelineReport::render_text() const {
    std::ostringstream os;
    os << "mode: " << mode << "\n";
    os << "stage                vertices  edges  width\n";
    for (const auto& s : stages) {
        os << "  " << s.name;
        for (size_t t = s.name.size(); t < 20; ++t) os << ' ';
        os << s.vertices << "\t" << s.edges << "\t" << s.width << "\n";
    }
    os << "input width: " << input_width;
    if (oracle_input_width) os << " (oracle: " << *oracle_input_width << ")";
    os << "\noutput width: " << output_width << "  target: " << bound_target
       << (bound_reference_is_oracle ? " (from oracle width)" : " (from given width)") << "\n";
    auto flag = [&](const char* name, bool v) { os << "  " << name << ": " << (v ? "yes" : "NO") << "\n"; };
    flag("simple", output_simple);
    if (output_maximal_outerplanar || mode == "outerplanar")
        flag("maximal outer-planar", output_maximal_outerplanar);
    else
        flag("triangulated", output_triangulated);
    flag("vertex set preserved", vertex_set_preserved);
    flag("input edges preserved", edges_preserved);
    flag("planar (Euler)", planar_certificate);
    flag("width bound", bound_satisfied);
    if (tokens_audited) flag("token invariant", token_invariant_ok);
    for (const auto& n : notes) os << "  note: " << n << "\n";
    os << (ok() ? "RESULT: pass" : "RESULT: FAIL") << "\n";
    return os.str();
}

namespace {

bool three_connected_class(const EmbeddedMultigraph& g) {
    return g.num_vertices() >= 3 && g.is_connected() && cut_vertices(g).empty() &&
           structural_cut_pairs(g).empty();
}

}  // namespace

PipelineReport run_pipeline(EmbeddedMultigraph& g, PathDecomposition& p, PipelineMode mode,
                            const PipelineOptions& opts) {
    if (!p.validates(g))
        throw std::invalid_argument("pipeline: decomposition does not validate against the graph");
    if (!g.is_simple()) throw std::invalid_argument("pipeline: input graphs must be simple");

    if (mode == PipelineMode::kAuto) {
        if (!g.is_connected() || !cut_vertices(g).empty())
            mode = PipelineMode::kGeneral;
        else if (!structural_cut_pairs(g).empty())
            mode = PipelineMode::kTwoConnected;
        else
            mode = PipelineMode::kThreeConnected;
    }

    PipelineReport rep;
    rep.mode = mode_name(mode);
    rep.input_width = p.width();
    rep.oracle_input_width = opts.oracle_input_width;
    const int w_ref = opts.oracle_input_width.value_or(rep.input_width);
    rep.bound_reference_is_oracle = opts.oracle_input_width.has_value();

    const std::vector<VertexId> vertices_in = g.vertices();
    const std::vector<EdgeKey> edges_in = g.simple_edges();

    TriangulationOutcome outcome;
    switch (mode) {
        case PipelineMode::kThreeConnected: {
            if (!three_connected_class(g))
                throw std::invalid_argument("pipeline: input is not 3-connected");
            outcome.stages.push_back({"input", g.num_vertices(), g.num_edges(), p.width()});
            multi_triangulate(g, p);
            outcome.stages.push_back(
                {"multi_triangulate", g.num_vertices(), g.num_edges(), p.width()});
            outcome.simplify = simplify(g, p, opts.audit_tokens);  // no-op on simple output
            outcome.stages.push_back({"simplify", g.num_vertices(), g.num_edges(), p.width()});
            rep.bound_target = w_ref;
            rep.bound_satisfied = p.width() <= w_ref;  // equality: width never grew
            break;
        }
        case PipelineMode::kTwoConnected: {
            if (!is_biconnected(g))
                throw std::invalid_argument("pipeline: input is not 2-connected");
            outcome.stages.push_back({"input", g.num_vertices(), g.num_edges(), p.width()});
            multi_triangulate(g, p);
            outcome.stages.push_back(
                {"multi_triangulate", g.num_vertices(), g.num_edges(), p.width()});
            outcome.simplify = simplify(g, p, opts.audit_tokens);
            outcome.stages.push_back({"simplify", g.num_vertices(), g.num_edges(), p.width()});
            rep.bound_target = 8 * w_ref - 5;
            rep.bound_satisfied = p.width() <= rep.bound_target;
            break;
        }
        case PipelineMode::kGeneral: {
            if (g.num_vertices() < 3)
                throw std::invalid_argument("pipeline: general mode needs at least 3 vertices");
            int w_for_bound = w_ref;
            if (!g.is_connected()) {
                std::vector<int> comp;
                int count = g.connected_components(comp);
                std::vector<std::vector<VertexId>> members(count);
                for (VertexId v : g.vertices()) members[comp[v]].push_back(v);
                std::vector<PathDecomposition> parts;
                for (int c = 0; c < count; ++c) parts.push_back(p.restricted_to(members[c]));
                p = connect(g, parts);
                w_for_bound = std::max(1, w_ref);
                outcome.stages.push_back({"connect", g.num_vertices(), g.num_edges(), p.width()});
            }
            TriangulationOutcome inner = triangulate_connected(g, p, opts.audit_tokens);
            outcome.simplify = inner.simplify;
            outcome.stages.insert(outcome.stages.end(), inner.stages.begin(), inner.stages.end());
            rep.bound_target = 16 * w_for_bound + 3;
            rep.bound_satisfied = p.width() <= rep.bound_target;
            break;
        }
        case PipelineMode::kOuterplanar: {
            outcome = outerplanar_maximalize(g, p, opts.audit_tokens);
            rep.bound_target = 4 * w_ref + 4;
            rep.bound_satisfied = p.width() <= rep.bound_target;
            break;
        }
        case PipelineMode::kAuto:
            break;  // unreachable
    }

    rep.stages = std::move(outcome.stages);
    rep.output_width = p.width();
    rep.tokens_audited = outcome.simplify.audited;
    rep.token_invariant_ok =
        outcome.simplify.invariant_ok && outcome.simplify.growth_within_budget;
    rep.notes = outcome.simplify.notes;

    rep.output_simple = g.is_simple();
    if (mode == PipelineMode::kOuterplanar) {
        rep.output_maximal_outerplanar =
            g.num_vertices() <= 2 ? is_maximal_outerplanar(g)
                                  : is_maximal_outerplanar(g) && has_hamiltonian_face(g);
        rep.output_triangulated = rep.output_maximal_outerplanar;
    } else {
        rep.output_triangulated = g.num_vertices() >= 3 && g.is_multi_triangulated() &&
                                  g.is_simple();
    }
    rep.planar_certificate = g.euler_ok();
    rep.vertex_set_preserved = g.vertices() == vertices_in;
    rep.edges_preserved = std::all_of(edges_in.begin(), edges_in.end(), [&](EdgeKey e) {
        return g.has_edge(e.first, e.second);
    });
    if (!p.validates(g)) {
        rep.notes.push_back("output decomposition does not validate");
        rep.bound_satisfied = false;
    }
    return rep;
}

}  // namespace pwtri
