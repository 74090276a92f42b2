#pragma once

#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "iasl/error.hpp"
#include "iasl/family.hpp"
#include "iasl/graph.hpp"
#include "iasl/ground.hpp"
#include "iasl/intset.hpp"
#include "iasl/topology.hpp"

namespace iasl {

/// An injective assignment of non-empty subsets of the ground set to
/// vertices.  The induced edge map sends an edge uv to the sumset
/// f(u) + f(v); the extension map covers vertices and edges jointly.
class Labeling {
public:
    Labeling(GroundSet ground, std::map<std::string, IntSet> labels)
        : ground_(std::move(ground)), labels_(std::move(labels)) {
        std::map<IntSet, std::string> seen;
        for (const auto& [id, s] : labels_) {
            if (s.empty()) throw error("empty set-label on vertex '" + id + "'");
            if (!s.subset_of(ground_.elements()))
                throw error("label " + s.to_string() + " on vertex '" + id +
                            "' is not a subset of ground set " + ground_.to_string());
            auto [it, inserted] = seen.emplace(s, id);
            if (!inserted)
                throw error("label " + s.to_string() + " assigned to both '" + it->second +
                            "' and '" + id + "' (labels must be injective)");
        }
    }

    const GroundSet& ground() const { return ground_; }
    const std::map<std::string, IntSet>& labels() const { return labels_; }

    const IntSet& label_of(const std::string& id) const {
        auto it = labels_.find(id);
        if (it == labels_.end()) throw error("vertex '" + id + "' has no label");
        return it->second;
    }

    /// True iff the labeled vertex set is exactly V(g).
    bool covers(const Graph& g) const {
        if (labels_.size() != g.vertex_count()) return false;
        for (const auto& id : g.vertices())
            if (!labels_.count(id)) return false;
        return true;
    }

private:
    GroundSet ground_;
    std::map<std::string, IntSet> labels_;
};

/// f+(uv) = f(u) + f(v).  The result need not be a subset of X; callers that
/// care test containment.
inline IntSet induced_edge_label(const Labeling& l, const std::string& u, const std::string& v) {
    if (u == v) throw error("edge endpoints must differ, got '" + u + "' twice");
    return sumset(l.label_of(u), l.label_of(v));
}

/// The ladder of labeling classes, ordered by increasing strength along the
/// main chain.  Abbreviations: IAS = integer additive set-, L = labeling,
/// I = indexer, T = topological, S = sequential, G = graceful.
enum class LabelClass { iasl, iasi, tiasl, iassl, iasgl, tiasgl, tiassl, tiassi };

inline constexpr std::array<LabelClass, 8> kAllClasses = {
    LabelClass::iasl,  LabelClass::iasi,   LabelClass::tiasl,  LabelClass::iassl,
    LabelClass::iasgl, LabelClass::tiasgl, LabelClass::tiassl, LabelClass::tiassi};

inline std::string_view to_string(LabelClass c) {
    switch (c) {
        case LabelClass::iasl: return "iasl";
        case LabelClass::iasi: return "iasi";
        case LabelClass::tiasl: return "tiasl";
        case LabelClass::iassl: return "iassl";
        case LabelClass::iasgl: return "iasgl";
        case LabelClass::tiasgl: return "tiasgl";
        case LabelClass::tiassl: return "tiassl";
        case LabelClass::tiassi: return "tiassi";
    }
    return "?";
}

inline LabelClass parse_label_class(std::string_view name) {
    std::string lower(name);
    for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (LabelClass c : kAllClasses)
        if (to_string(c) == lower) return c;
    throw error("unknown labeling class '" + std::string(name) + "'");
}

struct CheckResult {
    bool pass = false;
    std::string witness;  // empty iff pass; first violation in canonical order
};

struct ClassificationReport {
    std::array<CheckResult, 8> results;
    bool strict_tiassl = true;

    const CheckResult& for_class(LabelClass c) const { return results[static_cast<int>(c)]; }

    std::string to_table() const {
        std::string out = "class   result  witness\n";
        for (LabelClass c : kAllClasses) {
            const CheckResult& r = for_class(c);
            std::string name(to_string(c));
            name.resize(7, ' ');
            out += name;
            out += r.pass ? " pass   " : " FAIL   ";
            out += r.witness;
            out += '\n';
        }
        return out;
    }
};

namespace detail {

// Shared evaluation of all elementary labeling conditions.  Vertices and
// edges are processed in canonical order (ascending label mask for vertices,
// ascending endpoint-mask pair for edges) so every witness is the canonically
// smallest violating object and is stable under relabeling of vertex ids.
struct LabelingEvaluation {
    GroundContext ctx;
    std::vector<std::uint32_t> vertex_masks;           // canonical order
    std::vector<std::string> vertex_ids;               // parallel to vertex_masks
    std::uint64_t vertex_bits = 0;                     // bitset over subset masks

    struct EdgeEval {
        std::uint32_t lo, hi;      // endpoint masks, lo <= hi
        std::string lo_id, hi_id;
        IntSet sum;                // value-level sumset
        int mask;                  // subset mask, or -1 when the sumset leaves X
    };
    std::vector<EdgeEval> edges;   // canonical order
    std::uint64_t edge_bits = 0;   // masks of in-X edge labels

    CheckResult containment;       // every edge sumset inside X
    CheckResult edge_injective;    // f+ injective over edges
    CheckResult topology;          // f(V) plus the empty set is a topology on X
    CheckResult cover_sequential;  // f(V) u f+(E) = all non-empty subsets
    CheckResult cover_graceful;    // f+(E) = all non-empty subsets except {0}
    CheckResult star_injective;    // extension injective over vertices and edges jointly

    LabelingEvaluation(const Graph& g, const Labeling& l) : ctx(l.ground()) {
        if (!l.covers(g))
            throw error("labeling does not cover exactly the vertex set of the graph");
        const std::uint32_t full = ctx.full_mask();

        std::vector<std::pair<std::uint32_t, std::string>> vs;
        for (const auto& [id, s] : l.labels()) vs.emplace_back(*ctx.mask_of(s), id);
        std::sort(vs.begin(), vs.end());
        for (auto& [m, id] : vs) {
            vertex_masks.push_back(m);
            vertex_ids.push_back(id);
            vertex_bits |= std::uint64_t(1) << m;
        }

        for (auto [a, b] : g.edge_indices()) {
            EdgeEval e;
            const std::string &ua = g.id_of(a), &ub = g.id_of(b);
            std::uint32_t ma = *ctx.mask_of(l.label_of(ua));
            std::uint32_t mb = *ctx.mask_of(l.label_of(ub));
            e.lo = std::min(ma, mb);
            e.hi = std::max(ma, mb);
            e.lo_id = (ma <= mb) ? ua : ub;
            e.hi_id = (ma <= mb) ? ub : ua;
            e.sum = sumset(ctx.set_of(ma), ctx.set_of(mb));
            e.mask = ctx.sum_mask(ma, mb);
            edges.push_back(std::move(e));
        }
        std::sort(edges.begin(), edges.end(), [](const EdgeEval& x, const EdgeEval& y) {
            return std::pair(x.lo, x.hi) < std::pair(y.lo, y.hi);
        });

        // Containment of every induced edge label in X.
        containment.pass = true;
        for (const EdgeEval& e : edges) {
            if (e.mask < 0) {
                std::string offending;
                for (int v : e.sum.values()) {
                    if (!ctx.ground().elements().contains(v)) {
                        if (!offending.empty()) offending += ',';
                        offending += std::to_string(v);
                    }
                }
                containment = {false, "edge " + ctx.str_of(e.lo) + "+" + ctx.str_of(e.hi) + " = " +
                                          e.sum.to_string() + " leaves the ground set (offending: " +
                                          offending + ")"};
                break;
            }
        }

        // Injectivity of f+ over edges.
        edge_injective.pass = true;
        {
            std::array<int, 64> count{};
            for (const EdgeEval& e : edges)
                if (e.mask >= 0) ++count[e.mask];
            for (const EdgeEval& e : edges) {
                if (e.mask >= 0 && count[e.mask] > 1) {
                    edge_injective = {false, "edge label " + ctx.str_of(e.mask) +
                                                 " is induced on more than one edge"};
                    break;
                }
            }
            if (edge_injective.pass && !containment.pass) {
                // Escaped sumsets can still collide at value level.
                std::map<IntSet, int> value_count;
                for (const EdgeEval& e : edges) ++value_count[e.sum];
                for (const EdgeEval& e : edges) {
                    if (value_count[e.sum] > 1) {
                        edge_injective = {false, "edge label " + e.sum.to_string() +
                                                     " is induced on more than one edge"};
                        break;
                    }
                }
            }
            for (const EdgeEval& e : edges)
                if (e.mask >= 0) edge_bits |= std::uint64_t(1) << e.mask;
        }

        // Topology of f(V) plus the empty set.
        {
            TopologyCheck t = check_topology_bits(ctx, vertex_bits | 1);
            topology = {t.ok, t.ok ? "" : "f(V) with {} is not a topology: " + t.witness};
        }

        // Sequential coverage: all non-empty subsets of X appear on a vertex
        // or an edge.
        {
            std::uint64_t all_nonempty = 0;
            for (std::uint32_t m = 1; m <= full; ++m) all_nonempty |= std::uint64_t(1) << m;
            std::uint64_t missing = all_nonempty & ~(vertex_bits | edge_bits);
            if (missing == 0) {
                cover_sequential.pass = true;
            } else {
                std::uint32_t m = std::countr_zero(missing);
                cover_sequential = {false, "subset " + ctx.str_of(m) +
                                               " is neither a vertex nor an edge label"};
            }
        }

        // Graceful coverage: the edge labels are exactly the non-empty
        // subsets other than {0}.  An edge labeled {0} would need two equal
        // {0} vertex labels, which injectivity forbids, so only omissions
        // can occur.
        {
            std::uint64_t needed = 0;
            for (std::uint32_t m = 1; m <= full; ++m)
                if (m != GroundContext::kZeroMask) needed |= std::uint64_t(1) << m;
            std::uint64_t missing = needed & ~edge_bits;
            if (missing == 0) {
                cover_graceful.pass = true;
            } else {
                std::uint32_t m = std::countr_zero(missing);
                cover_graceful = {false, "edge labels do not include " + ctx.str_of(m)};
            }
        }

        // Joint injectivity of the extension map.
        {
            star_injective.pass = true;
            std::uint64_t shared = vertex_bits & edge_bits;
            if (!edge_injective.pass) {
                star_injective = edge_injective;
            } else if (shared != 0) {
                std::uint32_t m = std::countr_zero(shared);
                star_injective = {false, "label " + ctx.str_of(m) +
                                             " appears on both a vertex and an edge"};
            }
        }
    }
};

}  // namespace detail

/// Verdict for one labeling class, with the first violation as witness.
///
/// The classes are conjunctions of elementary conditions:
///   iasl   : every induced edge label stays inside X (f injective is already
///            enforced by Labeling);
///   iasi   : iasl and f+ injective over edges;
///   tiasl  : iasl and f(V) u {{}} a topology on X;
///   iassl  : iasl and f(V) u f+(E) covering all non-empty subsets;
///   iasgl  : iasl and f+(E) equal to the non-empty subsets except {0};
///   tiasgl : iasgl and the topology condition;
///   tiassl : tiasl and iassl, plus iasi when strict_tiassl is set;
///   tiassi : tiassl and the extension map injective over vertices and edges
///            jointly (this absorbs the iasi requirement either way).
inline CheckResult check(const Graph& g, const Labeling& l, LabelClass cls,
                         bool strict_tiassl = true) {
    detail::LabelingEvaluation ev(g, l);
    auto conjunction = [](std::initializer_list<const CheckResult*> conds) -> CheckResult {
        for (const CheckResult* c : conds)
            if (!c->pass) return *c;
        return {true, ""};
    };
    switch (cls) {
        case LabelClass::iasl:
            return conjunction({&ev.containment});
        case LabelClass::iasi:
            return conjunction({&ev.containment, &ev.edge_injective});
        case LabelClass::tiasl:
            return conjunction({&ev.containment, &ev.topology});
        case LabelClass::iassl:
            return conjunction({&ev.containment, &ev.cover_sequential});
        case LabelClass::iasgl:
            return conjunction({&ev.containment, &ev.cover_graceful});
        case LabelClass::tiasgl:
            return conjunction({&ev.containment, &ev.cover_graceful, &ev.topology});
        case LabelClass::tiassl:
            if (strict_tiassl)
                return conjunction(
                    {&ev.containment, &ev.topology, &ev.cover_sequential, &ev.edge_injective});
            return conjunction({&ev.containment, &ev.topology, &ev.cover_sequential});
        case LabelClass::tiassi:
            return conjunction({&ev.containment, &ev.topology, &ev.cover_sequential,
                                &ev.edge_injective, &ev.star_injective});
    }
    throw error("unknown labeling class");
}

/// Runs check for all eight classes with one shared evaluation.
inline ClassificationReport classify(const Graph& g, const Labeling& l,
                                     bool strict_tiassl = true) {
    detail::LabelingEvaluation ev(g, l);
    auto conjunction = [](std::initializer_list<const CheckResult*> conds) -> CheckResult {
        for (const CheckResult* c : conds)
            if (!c->pass) return *c;
        return {true, ""};
    };
    ClassificationReport rep;
    rep.strict_tiassl = strict_tiassl;
    rep.results[static_cast<int>(LabelClass::iasl)] = conjunction({&ev.containment});
    rep.results[static_cast<int>(LabelClass::iasi)] =
        conjunction({&ev.containment, &ev.edge_injective});
    rep.results[static_cast<int>(LabelClass::tiasl)] = conjunction({&ev.containment, &ev.topology});
    rep.results[static_cast<int>(LabelClass::iassl)] =
        conjunction({&ev.containment, &ev.cover_sequential});
    rep.results[static_cast<int>(LabelClass::iasgl)] =
        conjunction({&ev.containment, &ev.cover_graceful});
    rep.results[static_cast<int>(LabelClass::tiasgl)] =
        conjunction({&ev.containment, &ev.cover_graceful, &ev.topology});
    rep.results[static_cast<int>(LabelClass::tiassl)] =
        strict_tiassl ? conjunction({&ev.containment, &ev.topology, &ev.cover_sequential,
                                     &ev.edge_injective})
                      : conjunction({&ev.containment, &ev.topology, &ev.cover_sequential});
    rep.results[static_cast<int>(LabelClass::tiassi)] =
        conjunction({&ev.containment, &ev.topology, &ev.cover_sequential, &ev.edge_injective,
                     &ev.star_injective});
    return rep;
}

}  // namespace iasl
