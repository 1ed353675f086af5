#include "pwtri/simplify.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pwtri {

namespace {

std::string pair_str(EdgeKey e) {
    std::ostringstream os;
    os << "{" << e.first << "," << e.second << "}";
    return os.str();
}

// Component index owning the anchor edge: the one whose interior contains
// an anchor endpoint (at least one endpoint is interior, since the anchor
// has multiplicity 1 and (u,v) does not).
int parent_component(const CutComponents& cc, EdgeKey anchor) {
    int c = cc.component_of(anchor.first);
    if (c == kNone) c = cc.component_of(anchor.second);
    if (c == kNone) throw std::logic_error("anchor edge lies inside the separator");
    return c;
}

// Innermost live pair relative to the anchor: no other multi-edge lies
// inside any of its child components (components not holding the anchor
// edge).  Processing these first keeps every widened vertex away from the
// separators of still-live pairs, which is what makes the token ranges of
// later pairs line up with where their tokens were placed.
EdgeKey select_innermost_pair(const EmbeddedMultigraph& g, EdgeKey anchor) {
    std::vector<EdgeKey> multi = g.multi_edges();
    for (EdgeKey me : multi) {
        CutComponents cc = cut_components(g, {me.first, me.second});
        int parent = parent_component(cc, anchor);
        bool leaf = true;
        for (EdgeKey other : multi) {
            if (other == me) continue;
            // `other` lies inside the component holding either of its
            // endpoints (an endpoint may coincide with a separator vertex,
            // but never both).
            int c = cc.component_of(other.first);
            if (c == kNone) c = cc.component_of(other.second);
            if (c != kNone && c != parent) {
                leaf = false;
                break;
            }
        }
        if (leaf) return me;
    }
    return multi.front();
}

}  // namespace

EdgeKey pick_anchor_edge(const EmbeddedMultigraph& g) {
    for (const auto& [key, m] : g.edge_multiplicities())
        if (m == 1) return key;
    throw std::logic_error("pick_anchor_edge: every edge is a multi-edge");
}

PairAnalysis analyze_pair(const EmbeddedMultigraph& g, CuttingPairRecord rec,
                          const PathDecomposition& p, EdgeKey anchor) {
    PairAnalysis a;
    a.parent_index = parent_component(rec.comps, anchor);
    for (int c = 0; c < rec.comps.count(); ++c) {
        const auto& darts = rec.comps.components[c].darts_at.at(rec.v);
        PeripheralPair pp;
        pp.component_index = c;
        pp.is_child = (c != a.parent_index);
        VertexId first = g.head(darts.front());
        VertexId last = g.head(darts.back());
        // Bags eligible for a mark form a contiguous range (intersection of
        // three vertex intervals).  The marks are the witness choice that
        // makes the bag-interval as small as possible: a common bag when
        // the ranges meet, the facing range ends otherwise.  This keeps
        // every interval inside the bags where the component's tokens
        // were placed even after peripheral pairs drift.
        auto range_of = [&](VertexId b) {
            int lo = 0, hi = p.num_bags() - 1;
            for (VertexId w : {rec.u, rec.v, b}) {
                auto iv = p.interval(w);
                if (!iv) throw std::logic_error("peripheral vertex missing from decomposition");
                lo = std::max(lo, iv->first);
                hi = std::min(hi, iv->second);
            }
            if (lo > hi) throw std::logic_error("peripheral triangle has no common bag");
            return std::make_pair(lo, hi);
        };
        auto [lf, hf] = range_of(first);
        auto [ll, hl] = range_of(last);
        if (hf < ll) {
            pp.b_left = first;
            pp.b_right = last;
            pp.bag_left = hf;
            pp.bag_right = ll;
        } else if (hl < lf) {
            pp.b_left = last;
            pp.b_right = first;
            pp.bag_left = hl;
            pp.bag_right = lf;
        } else {
            int common = std::max(lf, ll);
            pp.b_left = std::min(first, last);
            pp.b_right = std::max(first, last);
            pp.bag_left = pp.bag_right = common;
        }
        a.peripheral.push_back(pp);
    }
    a.rec = std::move(rec);
    return a;
}

CaseChoice classify_case(const PairAnalysis& a) {
    std::vector<int> children;
    for (const auto& pp : a.peripheral)
        if (pp.is_child) children.push_back(pp.component_index);
    if (children.empty()) throw std::logic_error("classify_case: no child components");

    // Nested intervals first: boundary equalities always satisfy the
    // non-strict chain, so testing the strict interleaving first would
    // never fire on them.
    for (int i : children) {
        for (int j : children) {
            if (i == j) continue;
            const auto& pi = a.peripheral[i];
            const auto& pj = a.peripheral[j];
            if (pi.bag_left <= pj.bag_left && pj.bag_left <= pj.bag_right &&
                pj.bag_right <= pi.bag_right)
                return {CaseKind::kMergeNested, i, j};
        }
    }
    for (int i : children) {
        for (int j : children) {
            if (i == j) continue;
            const auto& pi = a.peripheral[i];
            const auto& pj = a.peripheral[j];
            if (pi.bag_left < pj.bag_left && pj.bag_left < pi.bag_right &&
                pi.bag_right < pj.bag_right)
                return {CaseKind::kMergeInterleaved, i, j};
        }
    }
    return {CaseKind::kCollapseAll, kNone, kNone};
}

namespace {

// Ledger bookkeeping for one widening: each bag actually grown pays with
// one token.  `cpp_keys` are tried in order; an empty list pays with a
// cutting-pair token of `pair`.
void pay_for_widening(TokenLedger* ledger, const std::vector<int>& grown, EdgeKey pair,
                      const std::vector<TokenLedger::CppKey>& cpp_keys) {
    if (!ledger) return;
    for (int bag : grown) {
        ++ledger->gained[bag];
        bool paid = false;
        if (cpp_keys.empty()) {
            auto& pool = ledger->pair_tokens[bag][pair];
            if (pool > 0) {
                --pool;
                paid = true;
            }
        } else {
            for (const auto& key : cpp_keys) {
                auto it = ledger->cpp_tokens[bag].find(key);
                if (it != ledger->cpp_tokens[bag].end() && it->second > 0) {
                    --it->second;
                    paid = true;
                    break;
                }
            }
        }
        if (!paid) {
            ledger->spend_ok = false;
            std::ostringstream os;
            os << "bag " << bag << ": no token available for pair " << pair_str(pair);
            ledger->notes.push_back(os.str());
        }
    }
}

// After merging two child components their unspent tokens belong to the
// merged peripheral pair.
void relabel_cpp_tokens(TokenLedger* ledger, EdgeKey pair, EdgeKey old_a, EdgeKey old_b,
                        EdgeKey merged) {
    if (!ledger) return;
    for (auto& per_bag : ledger->cpp_tokens) {
        int moved = 0;
        for (EdgeKey old_pp : {old_a, old_b}) {
            auto it = per_bag.find({pair, old_pp});
            if (it != per_bag.end()) {
                moved += it->second;
                per_bag.erase(it);
            }
        }
        if (moved > 0) per_bag[{pair, merged}] += moved;
    }
}

void drop_pair_tokens(TokenLedger* ledger, EdgeKey pair) {
    if (!ledger) return;
    for (auto& per_bag : ledger->pair_tokens) per_bag.erase(pair);
    for (auto& per_bag : ledger->cpp_tokens) {
        for (auto it = per_bag.begin(); it != per_bag.end();) {
            if (it->first.first == pair)
                it = per_bag.erase(it);
            else
                ++it;
        }
    }
}

EdgeKey pp_key(const PeripheralPair& pp) { return ordered_pair(pp.b_left, pp.b_right); }

}  // namespace

void resolve_case1(EmbeddedMultigraph& g, PathDecomposition& p, const PairAnalysis& a,
                   int i, int j, TokenLedger* ledger) {
    const auto& pi = a.peripheral[i];
    const auto& pj = a.peripheral[j];
    EdgeKey pair = ordered_pair(a.rec.u, a.rec.v);
    replace_multiedge_copy(g, a.rec, j, pj.b_left, i, pi.b_right);
    auto grown = p.widen_to_cover(pj.b_left, pi.bag_right);
    pay_for_widening(ledger, grown, pair, {{pair, pp_key(pj)}, {pair, pp_key(pi)}});
    relabel_cpp_tokens(ledger, pair, pp_key(pi), pp_key(pj),
                       ordered_pair(pi.b_left, pj.b_right));
}

void resolve_case2(EmbeddedMultigraph& g, PathDecomposition& p, const PairAnalysis& a,
                   int i, int j, TokenLedger* ledger) {
    const auto& pi = a.peripheral[i];
    const auto& pj = a.peripheral[j];
    EdgeKey pair = ordered_pair(a.rec.u, a.rec.v);
    replace_multiedge_copy(g, a.rec, i, pi.b_left, j, pj.b_left);
    auto grown = p.widen_to_cover(pi.b_left, pj.bag_left);
    pay_for_widening(ledger, grown, pair, {{pair, pp_key(pi)}, {pair, pp_key(pj)}});
    relabel_cpp_tokens(ledger, pair, pp_key(pi), pp_key(pj),
                       ordered_pair(pi.b_right, pj.b_right));
}

void resolve_case3(EmbeddedMultigraph& g, PathDecomposition& p, const PairAnalysis& a,
                   TokenLedger* ledger) {
    EdgeKey pair = ordered_pair(a.rec.u, a.rec.v);
    const PeripheralPair& parent = a.peripheral[a.parent_index];
    std::vector<PeripheralPair> children;
    for (const auto& pp : a.peripheral)
        if (pp.is_child) children.push_back(pp);
    std::sort(children.begin(), children.end(), [](const auto& x, const auto& y) {
        return std::tie(x.bag_left, x.bag_right, x.component_index) <
               std::tie(y.bag_left, y.bag_right, y.component_index);
    });

    // Chain the children left to right, then hook the chain to the parent.
    // Components merge as edges are added, so the record is rebuilt before
    // every step; the peripheral vertices and their bags stay as analyzed.
    auto fresh_record = [&]() {
        CuttingPairRecord rec;
        rec.u = a.rec.u;
        rec.v = a.rec.v;
        rec.multiplicity = g.multiplicity(a.rec.u, a.rec.v);
        rec.comps = cut_components(g, {a.rec.u, a.rec.v});
        return rec;
    };
    auto add_edge = [&](VertexId from, VertexId to) {
        CuttingPairRecord rec = fresh_record();
        int ci = rec.comps.component_of(from);
        int cj = rec.comps.component_of(to);
        replace_multiedge_copy(g, rec, ci, from, cj, to);
    };
    int L = static_cast<int>(children.size());
    for (int k = 0; k + 1 < L; ++k) {
        add_edge(children[k].b_right, children[k + 1].b_left);
        auto grown = p.widen_to_cover(children[k].b_right, children[k + 1].bag_left);
        pay_for_widening(ledger, grown, pair, {});
    }
    add_edge(children[0].b_left, parent.b_right);
    auto grown = p.widen_to_cover(children[0].b_left, parent.bag_right);
    pay_for_widening(ledger, grown, pair, {});

    assert(g.multiplicity(a.rec.u, a.rec.v) == 1);
    drop_pair_tokens(ledger, pair);
}

TokenLedger init_token_ledger(const EmbeddedMultigraph& g, const PathDecomposition& p) {
    TokenLedger led;
    int n = p.num_bags();
    led.vertex_tokens.resize(n);
    led.pair_tokens.resize(n);
    led.cpp_tokens.resize(n);
    led.gained.assign(n, 0);
    led.base_size.resize(n);
    led.base_pair_count.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        led.base_size[i] = static_cast<int>(p.bag(i).size());
        for (VertexId v : p.bag(i)) led.vertex_tokens[i][v] = 1;
    }
    for (EdgeKey me : g.multi_edges()) {
        for (int i = 0; i < n; ++i) {
            if (p.contains(i, me.first) && p.contains(i, me.second)) {
                led.pair_tokens[i][me] = 2;
                ++led.base_pair_count[i];
            }
        }
    }
    return led;
}

namespace {

// Shortest path between the ends of a child-peripheral pair inside the
// component interior, counting entries into other pairs' child interiors
// as expensive (this matches the disjoint-path choice the accounting
// argument uses without building triconnected components).
std::vector<VertexId> peripheral_path(const EmbeddedMultigraph& g,
                                      const std::vector<VertexId>& interior, VertexId from,
                                      VertexId to, const std::set<VertexId>& penalized) {
    if (from == to) return {from};
    std::set<VertexId> inside(interior.begin(), interior.end());
    std::map<VertexId, std::pair<int, VertexId>> best;  // vertex -> (cost, pred)
    auto cost_of = [&](VertexId v) { return penalized.count(v) ? 1 : 0; };
    // 0/1-weight Dijkstra via a deque.
    std::deque<VertexId> dq{from};
    best[from] = {cost_of(from), kNone};
    while (!dq.empty()) {
        VertexId v = dq.front();
        dq.pop_front();
        for (VertexId w : g.neighbors(v)) {
            if (!inside.count(w)) continue;
            int c = best[v].first + cost_of(w);
            auto it = best.find(w);
            if (it != best.end() && it->second.first <= c) continue;
            best[w] = {c, v};
            if (cost_of(w))
                dq.push_back(w);
            else
                dq.push_front(w);
        }
    }
    if (!best.count(to)) throw std::logic_error("peripheral_path: interior not connected");
    std::vector<VertexId> path;
    for (VertexId v = to; v != kNone; v = best[v].second) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

void redistribute_tokens(TokenLedger& ledger, const EmbeddedMultigraph& g,
                         const PathDecomposition& p, EdgeKey anchor) {
    std::vector<CuttingPairRecord> records = cutting_pairs(g);
    std::vector<PairAnalysis> analyses;
    for (auto& rec : records) analyses.push_back(analyze_pair(g, std::move(rec), p, anchor));

    // Interiors of child components, per pair, for the path penalty.
    std::vector<std::set<VertexId>> child_interiors(analyses.size());
    for (size_t t = 0; t < analyses.size(); ++t) {
        for (const auto& pp : analyses[t].peripheral) {
            if (!pp.is_child) continue;
            const auto& in = analyses[t].rec.comps.components[pp.component_index].interior;
            child_interiors[t].insert(in.begin(), in.end());
        }
    }

    std::map<VertexId, EdgeKey> claimed_by;
    for (size_t t = 0; t < analyses.size(); ++t) {
        const PairAnalysis& a = analyses[t];
        EdgeKey pair = ordered_pair(a.rec.u, a.rec.v);
        std::set<VertexId> penalized;
        for (size_t s = 0; s < analyses.size(); ++s)
            if (s != t) penalized.insert(child_interiors[s].begin(), child_interiors[s].end());
        for (const auto& pp : a.peripheral) {
            if (!pp.is_child) continue;
            auto path = peripheral_path(g, a.rec.comps.components[pp.component_index].interior,
                                        pp.b_left, pp.b_right, penalized);
            TokenLedger::CppKey key{pair, pp_key(pp)};
            for (VertexId w : path) {
                auto it = claimed_by.find(w);
                if (it != claimed_by.end()) {
                    ledger.paths_disjoint = false;
                    ledger.notes.push_back("vertex " + std::to_string(w) +
                                           " claimed by two peripheral-pair paths");
                    continue;
                }
                claimed_by[w] = pair;
                auto iv = p.interval(w);
                for (int i = iv->first; i <= iv->second; ++i) {
                    auto vt = ledger.vertex_tokens[i].find(w);
                    if (vt != ledger.vertex_tokens[i].end() && vt->second > 0) {
                        --vt->second;
                        ++ledger.cpp_tokens[i][key];
                    }
                }
            }
        }
    }
}

void migrate_cpp_tokens(TokenLedger& ledger, const EmbeddedMultigraph& g,
                        const PathDecomposition& p, EdgeKey anchor) {
    for (const auto& rec : cutting_pairs(g)) {
        EdgeKey pair = ordered_pair(rec.u, rec.v);
        PairAnalysis a = analyze_pair(g, rec, p, anchor);
        std::set<EdgeKey> current;
        for (const auto& pp : a.peripheral)
            if (pp.is_child) current.insert(pp_key(pp));
        // Keys recorded for this pair that no longer name a live
        // peripheral pair.
        std::set<EdgeKey> orphaned;
        for (const auto& per_bag : ledger.cpp_tokens)
            for (const auto& [key, count] : per_bag)
                if (count > 0 && key.first == pair && !current.count(key.second))
                    orphaned.insert(key.second);
        for (EdgeKey old_pp : orphaned) {
            int comp = rec.comps.component_of(old_pp.first);
            if (comp == kNone) comp = rec.comps.component_of(old_pp.second);
            if (comp == kNone || !a.peripheral[comp].is_child) continue;
            EdgeKey target = pp_key(a.peripheral[comp]);
            for (auto& per_bag : ledger.cpp_tokens) {
                auto it = per_bag.find({pair, old_pp});
                if (it == per_bag.end()) continue;
                per_bag[{pair, target}] += it->second;
                per_bag.erase(it);
            }
        }
    }
}

bool verify_invariant1(const TokenLedger& ledger, const EmbeddedMultigraph& g,
                       const PathDecomposition& p, EdgeKey anchor, std::string* diagnostic) {
    auto fail = [&](const std::string& msg) {
        if (diagnostic) *diagnostic = msg;
        return false;
    };
    for (const auto& rec : cutting_pairs(g)) {
        EdgeKey pair = ordered_pair(rec.u, rec.v);
        PairAnalysis a = analyze_pair(g, rec, p, anchor);
        for (int i = 0; i < p.num_bags(); ++i) {
            if (!p.contains(i, rec.u) || !p.contains(i, rec.v)) continue;
            auto it = ledger.pair_tokens[i].find(pair);
            int have = it == ledger.pair_tokens[i].end() ? 0 : it->second;
            if (have < 2)
                return fail("bag " + std::to_string(i) + " holds cutting pair " + pair_str(pair) +
                            " but only " + std::to_string(have) + " of its tokens");
        }
        for (const auto& pp : a.peripheral) {
            if (!pp.is_child) continue;
            TokenLedger::CppKey key{pair, pp_key(pp)};
            for (int i = pp.bag_left + 1; i <= pp.bag_right; ++i) {
                auto it = ledger.cpp_tokens[i].find(key);
                if (it == ledger.cpp_tokens[i].end() || it->second < 1)
                    return fail("bag " + std::to_string(i) + " starved for peripheral pair " +
                                pair_str(pp_key(pp)) + " of " + pair_str(pair));
            }
        }
    }
    return true;
}

SimplifyReport simplify(EmbeddedMultigraph& g, PathDecomposition& p, bool audit_tokens) {
    if (!g.is_multi_triangulated())
        throw std::invalid_argument("simplify: input is not multi-triangulated");
    if (!p.validates(g))
        throw std::invalid_argument("simplify: decomposition does not validate");

    SimplifyReport rep;
    rep.input_width = p.width();
    rep.budget.c = 0;
    for (int i = 0; i < p.num_bags(); ++i) {
        int inside = 0;
        for (EdgeKey me : g.multi_edges())
            if (p.contains(i, me.first) && p.contains(i, me.second)) ++inside;
        rep.budget.c = std::max(rep.budget.c, inside);
    }
    rep.budget.target_width = 2 * rep.input_width + 1 + 2 * rep.budget.c;

    if (g.is_simple()) {  // no-op
        rep.output_width = p.width();
        return rep;
    }

    EdgeKey anchor = pick_anchor_edge(g);
    std::optional<TokenLedger> ledger;
    if (audit_tokens) {
        rep.audited = true;
        ledger = init_token_ledger(g, p);
        redistribute_tokens(*ledger, g, p, anchor);
        std::string diag;
        if (!verify_invariant1(*ledger, g, p, anchor, &diag)) {
            rep.invariant_ok = false;
            rep.notes.push_back("after init: " + diag);
        }
    }

    while (!g.is_simple()) {
        EdgeKey me = select_innermost_pair(g, anchor);
        CuttingPairRecord rec;
        rec.u = me.first;
        rec.v = me.second;
        rec.multiplicity = g.multiplicity(me.first, me.second);
        rec.comps = cut_components(g, {rec.u, rec.v});
        assert(rec.comps.count() == rec.multiplicity);
        PairAnalysis a = analyze_pair(g, rec, p, anchor);
        CaseChoice choice = classify_case(a);
        TokenLedger* led = ledger ? &*ledger : nullptr;
        switch (choice.kind) {
            case CaseKind::kMergeNested:
                resolve_case2(g, p, a, choice.i, choice.j, led);
                break;
            case CaseKind::kMergeInterleaved:
                resolve_case1(g, p, a, choice.i, choice.j, led);
                break;
            case CaseKind::kCollapseAll:
                resolve_case3(g, p, a, led);
                break;
        }
        ++rep.resolve_steps;
        assert(g.is_multi_triangulated());
        assert(p.validates(g));
        if (ledger) {
            if (!g.is_simple()) migrate_cpp_tokens(*ledger, g, p, anchor);
            std::string diag;
            if (!verify_invariant1(*ledger, g, p, anchor, &diag)) {
                rep.invariant_ok = false;
                rep.notes.push_back("after resolve " + std::to_string(rep.resolve_steps) + ": " +
                                    diag);
            }
        }
    }

    rep.output_width = p.width();
    if (rep.output_width > rep.budget.target_width)
        throw std::logic_error("simplify: width budget exceeded");
    if (ledger) {
        if (!ledger->paths_disjoint)
            rep.notes.push_back("peripheral-pair paths were not vertex-disjoint");
        if (!ledger->spend_ok) rep.invariant_ok = false;
        for (int i = 0; i < p.num_bags() && i < (int)ledger->gained.size(); ++i) {
            if (ledger->gained[i] > ledger->base_size[i] + 2 * ledger->base_pair_count[i]) {
                rep.growth_within_budget = false;
                rep.notes.push_back("bag " + std::to_string(i) + " grew past its token budget");
            }
        }
        for (const auto& n : ledger->notes) rep.notes.push_back(n);
    }
    return rep;
}

}  // namespace pwtri
