// Turns a multi-triangulated graph into a simple triangulated one: every
// copy of a multi-edge (u,v) is traded for an edge between peripheral
// vertices of two different cut-components, widening the decomposition by
// at most a factor 2 plus a term for cutting pairs sharing a bag.  The
// token ledger is a debug-mode audit of that width budget, never a driver.

#ifndef PWTRI_SIMPLIFY_HPP
#define PWTRI_SIMPLIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "pwtri/cut_structure.hpp"
#include "pwtri/embedded_graph.hpp"
#include "pwtri/path_decomposition.hpp"

namespace pwtri {

/// First and last neighbor of v inside one component's dart arc, oriented
/// so that bag_left <= bag_right.  b_left == b_right is possible (single
/// interior neighbor).
struct PeripheralPair {
    int component_index = kNone;
    VertexId b_left = kNone;
    VertexId b_right = kNone;
    int bag_left = kNone;   // index of a bag containing {u, v, b_left}
    int bag_right = kNone;  // likewise for b_right
    bool is_child = false;
};

/// A cutting pair together with its peripheral pairs and the parent mark
/// derived from the anchor edge.
struct PairAnalysis {
    CuttingPairRecord rec;
    std::vector<PeripheralPair> peripheral;  // one per component
    int parent_index = kNone;
};

enum class CaseKind { kMergeInterleaved, kMergeNested, kCollapseAll };

struct CaseChoice {
    CaseKind kind = CaseKind::kCollapseAll;
    int i = kNone;  // component indices for the two merge cases
    int j = kNone;
};

/// Width budget of one simplify run: c is the largest number of multi-edges
/// fully inside a single input bag.
struct SimplifyBudget {
    int c = 0;
    int target_width = 0;  // 2 * input width + 1 + 2 * c
};

/// Debug-mode token accounting (one vertex token per bag member, two
/// tokens per cutting pair contained in a bag, child-peripheral-pair
/// tokens fed from vertex tokens along per-pair paths).
struct TokenLedger {
    using CppKey = std::pair<EdgeKey, EdgeKey>;  // ({u,v}, {b_left,b_right})

    std::vector<std::map<VertexId, int>> vertex_tokens;
    std::vector<std::map<EdgeKey, int>> pair_tokens;
    std::vector<std::map<CppKey, int>> cpp_tokens;
    std::vector<int> base_size;        // bag sizes at init
    std::vector<int> base_pair_count;  // cutting pairs fully inside, at init
    std::vector<int> gained;           // vertices actually added per bag
    bool paths_disjoint = true;
    bool spend_ok = true;  // every widening found a token to pay with
    std::vector<std::string> notes;
};

/// Lexicographically least edge of multiplicity 1 (one always exists in a
/// multi-triangulated graph).
EdgeKey pick_anchor_edge(const EmbeddedMultigraph& g);

/// Fills peripheral pairs and the parent mark for one cutting pair.  Bag
/// marks are the witness choice minimizing each bag-interval, which keeps
/// the intervals inside the bags holding the component's tokens even as
/// peripheral pairs drift during the resolution of neighboring pairs.
PairAnalysis analyze_pair(const EmbeddedMultigraph& g, CuttingPairRecord rec,
                          const PathDecomposition& p, EdgeKey anchor);

/// Case selection over the child components: nested bag-intervals first,
/// then strictly interleaved ones, otherwise collapse-all; least (i,j).
CaseChoice classify_case(const PairAnalysis& a);

void resolve_case1(EmbeddedMultigraph& g, PathDecomposition& p, const PairAnalysis& a,
                   int i, int j, TokenLedger* ledger);
void resolve_case2(EmbeddedMultigraph& g, PathDecomposition& p, const PairAnalysis& a,
                   int i, int j, TokenLedger* ledger);
void resolve_case3(EmbeddedMultigraph& g, PathDecomposition& p, const PairAnalysis& a,
                   TokenLedger* ledger);

/// Vertex and pair tokens for the current (g, p); no path assignment yet.
TokenLedger init_token_ledger(const EmbeddedMultigraph& g, const PathDecomposition& p);

/// Assigns vertex tokens along a path between the ends of every
/// child-peripheral pair (shortest path inside the component, biased away
/// from other pairs' child interiors) and checks the paths are pairwise
/// vertex-disjoint.
void redistribute_tokens(TokenLedger& ledger, const EmbeddedMultigraph& g,
                         const PathDecomposition& p, EdgeKey anchor);

/// Token ownership follows cut-components, but the ledger keys tokens by
/// the component's peripheral pair, and resolving one cutting pair can
/// relabel a neighboring pair's peripheral pair (its arc grows by the new
/// edge).  This re-keys orphaned tokens onto the current label of the
/// component that owns them; called after every resolve.
void migrate_cpp_tokens(TokenLedger& ledger, const EmbeddedMultigraph& g,
                        const PathDecomposition& p, EdgeKey anchor);

/// Both clauses of the bag-token invariant, recomputed from the current
/// graph and decomposition.  On failure returns false and, when given,
/// fills `diagnostic` with the starved bag.
bool verify_invariant1(const TokenLedger& ledger, const EmbeddedMultigraph& g,
                       const PathDecomposition& p, EdgeKey anchor,
                       std::string* diagnostic = nullptr);

struct SimplifyReport {
    SimplifyBudget budget;
    int input_width = 0;
    int output_width = 0;
    int resolve_steps = 0;
    bool audited = false;
    bool invariant_ok = true;
    bool growth_within_budget = true;
    std::vector<std::string> notes;
};

/// Main loop: while a multi-edge exists, analyze the least one, classify,
/// resolve; cutting-pair records are recomputed from scratch each round.
/// Output is simple, triangulated, and covered by p with
/// width(p) <= budget.target_width.
SimplifyReport simplify(EmbeddedMultigraph& g, PathDecomposition& p, bool audit_tokens = false);

}  // namespace pwtri

#endif
