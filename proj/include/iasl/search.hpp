#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iasl/error.hpp"
#include "iasl/graph.hpp"
#include "iasl/ground.hpp"
#include "iasl/labeling.hpp"
#include "iasl/setalg.hpp"
#include "iasl/topology.hpp"

namespace iasl {

struct SearchBudget {
    int max_ground = 4;                      // decide requires |X| <= this ...
    int max_vertices = 8;                    // ... or |V| <= this
    std::uint64_t max_nodes = 50'000'000;    // hard cap on explored nodes
    bool orbit_anchoring = true;             // anchor {0} per automorphism orbit
};

enum class SearchStatus { sat, unsat, inconclusive_budget };

inline std::string_view to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::sat: return "sat";
        case SearchStatus::unsat: return "unsat";
        case SearchStatus::inconclusive_budget: return "inconclusive_budget";
    }
    return "?";
}

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t assignments = 0;
    double wall_ms = 0.0;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::unsat;
    std::optional<Labeling> witness;  // present iff status == sat
    SearchStats stats;
    std::string note;
};

namespace detail {

struct ClassNeeds {
    bool edge_injective = false;  // f+ must be injective
    bool topology = false;        // f(V) u {{}} must be a topology
    bool cover_all = false;       // f(V) u f+(E) must cover all non-empty subsets
    bool edges_cover = false;     // f+(E) must equal non-empty subsets minus {0}
    bool fstar = false;           // extension injective over vertices and edges
    bool anchored = false;        // {0} is forced into f(V); branch on its vertex
};

inline ClassNeeds needs_for(LabelClass cls, bool strict_tiassl) {
    ClassNeeds n;
    switch (cls) {
        case LabelClass::iasl:
            break;
        case LabelClass::iasi:
            n.edge_injective = true;
            break;
        case LabelClass::tiasl:
            n.topology = true;
            break;
        case LabelClass::iassl:
            n.cover_all = true;
            break;
        case LabelClass::iasgl:
            n.edges_cover = true;
            break;
        case LabelClass::tiasgl:
            n.edges_cover = true;
            n.topology = true;
            break;
        case LabelClass::tiassl:
            n.topology = true;
            n.cover_all = true;
            n.edge_injective = strict_tiassl;
            break;
        case LabelClass::tiassi:
            n.topology = true;
            n.cover_all = true;
            n.edge_injective = true;
            n.fstar = true;
            break;
    }
    // Coverage forces {0} into f(V): an edge labeled {0} would need two equal
    // {0} vertex labels, and the sumset-free subsets (which always include the
    // smallest positive singleton) can only reach an edge via a {0} endpoint.
    n.anchored = n.cover_all || n.edges_cover;
    return n;
}

// Complete backtracking over injective assignments of non-empty subset masks
// to vertices.  Every prune below rejects only assignments for which no
// completion can satisfy the class conditions; a full check() at each leaf
// delivers the verdict, so SAT witnesses re-verify by construction.
class DecideSearcher {
public:
    DecideSearcher(const Graph& g, const GroundSet& x, LabelClass cls, bool strict_tiassl,
                   const SearchBudget& budget)
        : g_(g), ctx_(x), cls_(cls), strict_(strict_tiassl), budget_(budget),
          needs_(needs_for(cls, strict_tiassl)) {
        n_ = static_cast<int>(g_.vertex_count());
        m_ = static_cast<int>(g_.edge_count());
        full_ = ctx_.full_mask();
        all_nonempty_ = 0;
        for (std::uint32_t s = 1; s <= full_; ++s) all_nonempty_ |= std::uint64_t(1) << s;
        needed_edge_bits_ = all_nonempty_ & ~(std::uint64_t(1) << GroundContext::kZeroMask);
        sumset_free_bits_ = compute_structural_masks(ctx_).sumset_free;

        incident_.resize(n_);
        const auto& edges = g_.edge_indices();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            incident_[edges[e].first].push_back({static_cast<int>(e), edges[e].second});
            incident_[edges[e].second].push_back({static_cast<int>(e), edges[e].first});
        }
        assigned_.assign(n_, 0);
        edge_label_of_.assign(m_, -1);
    }

    SearchOutcome run() {
        auto start = std::chrono::steady_clock::now();
        SearchOutcome out;
        if (!(ctx_.count() <= budget_.max_ground || n_ <= budget_.max_vertices)) {
            out.status = SearchStatus::inconclusive_budget;
            out.note = "inconclusive: budget (|X| > " + std::to_string(budget_.max_ground) +
                       " and |V| > " + std::to_string(budget_.max_vertices) + ")";
            out.stats.wall_ms = elapsed_ms(start);
            return out;
        }
        if (static_cast<std::uint64_t>(n_) > static_cast<std::uint64_t>(full_)) {
            // Fewer non-empty subsets than vertices: no injective labeling.
            out.status = SearchStatus::unsat;
            out.note = "more vertices than non-empty subsets of X";
            out.stats.wall_ms = elapsed_ms(start);
            return out;
        }

        // Vertices by decreasing degree (ties by index): high-degree vertices
        // are the most constrained, since every incident sumset must stay in X.
        std::vector<int> base(n_);
        for (int i = 0; i < n_; ++i) base[i] = i;
        std::stable_sort(base.begin(), base.end(), [&](int a, int b) {
            return g_.degree_of(a) > g_.degree_of(b);
        });

        bool found = false;
        if (needs_.anchored && n_ > 0) {
            // Branch first on which vertex receives {0}; one candidate per
            // automorphism orbit suffices, since automorphisms carry
            // labelings of a class to labelings of the same class.
            std::vector<int> candidates;
            if (budget_.orbit_anchoring) {
                for (const auto& orbit : automorphism_orbits(g_)) {
                    int rep = *std::min_element(orbit.begin(), orbit.end(), [&](int a, int b) {
                        return rank_of(base, a) < rank_of(base, b);
                    });
                    candidates.push_back(rep);
                }
            } else {
                candidates = base;
            }
            std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
                return rank_of(base, a) < rank_of(base, b);
            });
            for (int anchor : candidates) {
                order_.clear();
                order_.push_back(anchor);
                for (int v : base)
                    if (v != anchor) order_.push_back(v);
                if (try_assign(0, GroundContext::kZeroMask)) {
                    if (dfs(1)) {
                        found = true;
                        break;
                    }
                    unassign(0);
                }
                if (budget_hit_) break;
            }
        } else {
            order_ = base;
            found = dfs(0);
        }

        out.stats = stats_;
        out.stats.wall_ms = elapsed_ms(start);
        if (budget_hit_ && !found) {
            out.status = SearchStatus::inconclusive_budget;
            out.note = "inconclusive: budget (node limit " + std::to_string(budget_.max_nodes) +
                       " reached)";
            return out;
        }
        if (found) {
            out.status = SearchStatus::sat;
            out.witness = make_labeling();
        } else {
            out.status = SearchStatus::unsat;
        }
        return out;
    }

private:
    static double elapsed_ms(std::chrono::steady_clock::time_point start) {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }

    static int rank_of(const std::vector<int>& base, int v) {
        return static_cast<int>(std::find(base.begin(), base.end(), v) - base.begin());
    }

    Labeling make_labeling() const {
        std::map<std::string, IntSet> labels;
        for (int i = 0; i < n_; ++i) labels.emplace(g_.id_of(i), ctx_.set_of(assigned_[i]));
        return Labeling(ctx_.ground(), labels);
    }

    // Attempts to place mask m on order_[pos]; returns false (without side
    // effects) when a prune rejects the placement.
    bool try_assign(std::size_t pos, std::uint32_t m) {
        const int v = order_[pos];
        ++stats_.assignments;
        if (used_ & (std::uint64_t(1) << m)) return false;

        std::uint64_t new_edge_bits = 0;
        int new_full_edges = 0;
        for (const auto& [e, other] : incident_[v]) {
            std::uint32_t mo = assigned_[other];
            if (mo == 0) continue;
            int s = ctx_.sum_mask(m, mo);
            if (s < 0) return false;  // induced label leaves X
            ++new_full_edges;
            std::uint64_t sbit = std::uint64_t(1) << s;
            if (needs_.edge_injective) {
                if (edge_count_[s] > 0 || (new_edge_bits & sbit)) return false;
            }
            if (needs_.fstar) {
                std::uint64_t vbits_after = used_ | (std::uint64_t(1) << m);
                if ((vbits_after >> s) & 1) return false;          // edge label equals a vertex label
            }
            new_edge_bits |= sbit;
        }
        if (needs_.fstar && ((edge_bits_ | new_edge_bits) >> m) & 1) return false;

        if (needs_.topology) {
            // Any completion's vertex-label family contains the labels so
            // far, X, and the whole union/intersection closure thereof; that
            // closure cannot outgrow the vertex count.
            std::uint64_t fam = used_ | (std::uint64_t(1) << m) | (std::uint64_t(1) << full_);
            std::uint64_t cl = close_family(ctx_, fam);
            if (std::popcount(cl & ~std::uint64_t(1)) > n_) return false;
        }

        const int unassigned_after = n_ - assigned_count_ - 1;
        const int open_edges_after = m_ - (full_edges_ + new_full_edges);
        if (needs_.cover_all) {
            std::uint64_t covered =
                used_ | (std::uint64_t(1) << m) | edge_bits_ | new_edge_bits;
            int uncovered = std::popcount(all_nonempty_ & ~covered);
            // Each unassigned vertex and each edge with an unassigned
            // endpoint contributes at most one new subset.
            if (uncovered > unassigned_after + open_edges_after) return false;
            // Sumset-free subsets can only be covered by vertices.
            int missing_free =
                std::popcount(sumset_free_bits_ & ~(used_ | (std::uint64_t(1) << m)));
            if (missing_free > unassigned_after) return false;
        }
        if (needs_.edges_cover) {
            int uncovered = std::popcount(needed_edge_bits_ & ~(edge_bits_ | new_edge_bits));
            if (uncovered > open_edges_after) return false;
        }

        // Commit.
        assigned_[v] = m;
        used_ |= std::uint64_t(1) << m;
        ++assigned_count_;
        for (const auto& [e, other] : incident_[v]) {
            if (assigned_[other] == 0) continue;
            int s = ctx_.sum_mask(m, assigned_[other]);
            edge_label_of_[e] = s;
            if (++edge_count_[s] == 1) edge_bits_ |= std::uint64_t(1) << s;
            ++full_edges_;
        }
        return true;
    }

    void unassign(std::size_t pos) {
        const int v = order_[pos];
        for (const auto& [e, other] : incident_[v]) {
            if (assigned_[other] == 0 || other == v) continue;
            int s = edge_label_of_[e];
            if (--edge_count_[s] == 0) edge_bits_ &= ~(std::uint64_t(1) << s);
            --full_edges_;
        }
        used_ &= ~(std::uint64_t(1) << assigned_[v]);
        assigned_[v] = 0;
        --assigned_count_;
    }

    bool dfs(std::size_t pos) {
        if (++stats_.nodes > budget_.max_nodes) {
            budget_hit_ = true;
            return false;
        }
        if (pos == order_.size()) {
            Labeling l = make_labeling();
            return check(g_, l, cls_, strict_).pass;
        }
        for (std::uint32_t m = 1; m <= full_; ++m) {
            if (!try_assign(pos, m)) continue;
            if (dfs(pos + 1)) return true;
            unassign(pos);
            if (budget_hit_) return false;
        }
        return false;
    }

    const Graph& g_;
    GroundContext ctx_;
    LabelClass cls_;
    bool strict_;
    SearchBudget budget_;
    ClassNeeds needs_;

    int n_ = 0, m_ = 0;
    std::uint32_t full_ = 0;
    std::uint64_t all_nonempty_ = 0, needed_edge_bits_ = 0, sumset_free_bits_ = 0;
    std::vector<std::vector<std::pair<int, int>>> incident_;  // vertex -> (edge, other)

    std::vector<int> order_;
    std::vector<std::uint32_t> assigned_;  // mask, 0 = unassigned
    std::uint64_t used_ = 0;             // assigned vertex-label masks
    std::uint64_t edge_bits_ = 0;        // induced edge-label masks
    std::array<int, 64> edge_count_{};   // multiplicity per edge-label mask
    std::vector<int> edge_label_of_;     // per edge index, valid while fully assigned
    int assigned_count_ = 0;
    int full_edges_ = 0;

    SearchStats stats_;
    bool budget_hit_ = false;
};

}  // namespace detail

/// Does g admit a labeling of the given class over x?  Complete backtracking
/// with sound pruning; "inconclusive: budget" is a third status distinct from
/// unsat, so exhausting a node budget is never mistaken for a refutation.
inline SearchOutcome decide(const Graph& g, const GroundSet& x, LabelClass cls,
                            bool strict_tiassl = true, const SearchBudget& budget = {}) {
    return detail::DecideSearcher(g, x, cls, strict_tiassl, budget).run();
}

/// Result rows of the star-theorem sweep: over all trees on 2^|X|-1 vertices
/// (a tiassl with the discrete vertex-label family forces a tree of that
/// size), exactly the star K_{1,2^|X|-2} should admit a strict tiassl.
struct StarTheoremReport {
    struct Row {
        std::size_t tree_index = 0;
        bool star = false;
        SearchStatus status = SearchStatus::unsat;
    };
    std::vector<Graph> trees;
    std::vector<Row> rows;
    std::vector<std::optional<Labeling>> witnesses;
    bool pass = false;
    bool inconclusive = false;

    std::string summary() const {
        std::string out;
        for (const Row& r : rows) {
            out += "tree " + std::to_string(r.tree_index) + ": " +
                   std::string(to_string(r.status)) + (r.star ? " (star)" : "") + "\n";
        }
        out += pass ? "star theorem: verified\n" : "star theorem: FAILED\n";
        return out;
    }
};

inline StarTheoremReport verify_star_theorem(const GroundSet& x, const SearchBudget& budget = {}) {
    const int k = static_cast<int>(x.size());
    if (k < 2 || k > 3)
        throw error("star-theorem verification supports ground sets of size 2 or 3");
    const int n = (1 << k) - 1;
    StarTheoremReport rep;
    rep.trees = enumerate_trees(n);
    rep.pass = true;
    for (std::size_t i = 0; i < rep.trees.size(); ++i) {
        SearchOutcome out = decide(rep.trees[i], x, LabelClass::tiassl, true, budget);
        rep.rows.push_back({i, rep.trees[i].is_star(), out.status});
        rep.witnesses.push_back(out.witness);
        if (out.status == SearchStatus::inconclusive_budget) {
            rep.inconclusive = true;
            rep.pass = false;
        } else if ((out.status == SearchStatus::sat) != rep.trees[i].is_star()) {
            rep.pass = false;
        }
    }
    return rep;
}

/// Sweep over all connected-graph isomorphism classes on up to max_n
/// vertices: none admits a tiassi.  Any sat row is a counterexample.
struct NoConnectedTiassiReport {
    struct Row {
        int n = 0;
        std::size_t class_index = 0;
        SearchStatus status = SearchStatus::unsat;
    };
    std::vector<Row> rows;
    std::vector<std::pair<Graph, Labeling>> counterexamples;
    bool pass = false;
    bool inconclusive = false;

    std::string summary() const {
        std::size_t unsat = 0;
        for (const Row& r : rows)
            if (r.status == SearchStatus::unsat) ++unsat;
        std::string out = "connected classes checked: " + std::to_string(rows.size()) +
                          ", unsat: " + std::to_string(unsat) + "\n";
        out += pass ? "no connected tiassi: verified\n" : "no connected tiassi: FAILED\n";
        return out;
    }
};

inline NoConnectedTiassiReport verify_no_connected_tiassi(int max_n, const GroundSet& x,
                                                          const SearchBudget& budget = {}) {
    if (max_n < 1 || max_n > 6) throw error("tiassi sweep supports 1 <= max_n <= 6");
    if (x.size() > 3) throw error("tiassi sweep supports ground sets of size at most 3");
    NoConnectedTiassiReport rep;
    rep.pass = true;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Graph> classes = enumerate_connected_graphs(n);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            SearchOutcome out = decide(classes[i], x, LabelClass::tiassi, true, budget);
            rep.rows.push_back({n, i, out.status});
            if (out.status == SearchStatus::sat) {
                rep.pass = false;
                rep.counterexamples.emplace_back(classes[i], *out.witness);
            } else if (out.status == SearchStatus::inconclusive_budget) {
                rep.pass = false;
                rep.inconclusive = true;
            }
        }
    }
    return rep;
}

/// Exhaustive sweep over all labeled graphs on up to 3 vertices and all
/// injective labelings over x, plus any provided samples: every labeling
/// passing tiasgl also passes strict tiassl.
struct ImplicationReport {
    std::uint64_t labelings_checked = 0;
    std::uint64_t tiasgl_found = 0;
    std::vector<std::string> violations;
    bool pass = false;

    std::string summary() const {
        std::string out = "labelings checked: " + std::to_string(labelings_checked) +
                          ", tiasgl instances: " + std::to_string(tiasgl_found) + "\n";
        out += pass ? "tiasgl => tiassl: verified\n" : "tiasgl => tiassl: FAILED\n";
        return out;
    }
};

inline ImplicationReport verify_tiasgl_implies_tiassl(
    const GroundSet& x, const std::vector<std::pair<Graph, Labeling>>& samples = {}) {
    if (x.size() > 3) throw error("implication sweep supports ground sets of size at most 3");
    ImplicationReport rep;
    rep.pass = true;
    GroundContext ctx(x);

    auto consider = [&](const Graph& g, const Labeling& l) {
        ++rep.labelings_checked;
        ClassificationReport cls = classify(g, l, /*strict_tiassl=*/true);
        if (cls.for_class(LabelClass::tiasgl).pass) {
            ++rep.tiasgl_found;
            if (!cls.for_class(LabelClass::tiassl).pass) {
                rep.pass = false;
                rep.violations.push_back("graph on " + std::to_string(g.vertex_count()) +
                                         " vertices: tiasgl holds but tiassl fails: " +
                                         cls.for_class(LabelClass::tiassl).witness);
            }
        }
    };

    for (int n = 1; n <= 3; ++n) {
        const int bits = n * (n - 1) / 2;
        for (std::uint64_t code = 0; code < (std::uint64_t(1) << bits); ++code) {
            Graph g = detail::graph_from_code(code, n);
            std::vector<std::uint32_t> masks(n, 0);
            std::uint64_t used = 0;
            auto rec = [&](auto&& self, int pos) -> void {
                if (pos == n) {
                    std::map<std::string, IntSet> labels;
                    for (int i = 0; i < n; ++i) labels.emplace(g.id_of(i), ctx.set_of(masks[i]));
                    consider(g, Labeling(ctx.ground(), labels));
                    return;
                }
                for (std::uint32_t m = 1; m <= ctx.full_mask(); ++m) {
                    if (used & (std::uint64_t(1) << m)) continue;
                    used |= std::uint64_t(1) << m;
                    masks[pos] = m;
                    self(self, pos + 1);
                    used &= ~(std::uint64_t(1) << m);
                }
            };
            rec(rec, 0);
        }
    }
    for (const auto& [g, l] : samples) consider(g, l);
    return rep;
}

}  // namespace iasl
