#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iasl/error.hpp"
#include "iasl/family.hpp"
#include "iasl/graph.hpp"
#include "iasl/ground.hpp"
#include "iasl/labeling.hpp"
#include "iasl/setalg.hpp"
#include "iasl/topology.hpp"

namespace iasl {

namespace detail {

// A topology is usable as the vertex-label family of a tiassl witness iff
// every non-empty subset outside it is the sumset of two distinct members.
// This single condition subsumes the others: {0} and every other sumset-free
// subset must already be members, since they have no representation at all
// (a covering pair (A,B) is automatically non-trivial, as {0}+B = B would be
// a member), and self pairs are unusable because simple graphs have no loops.
// Returns the first uncovered subset in canonical order, or nullopt when the
// topology is admissible.
inline std::optional<std::uint32_t> admissibility_gap(const GroundContext& ctx,
                                                      std::uint64_t family_bits) {
    for (std::uint32_t c = 1; c <= ctx.full_mask(); ++c) {
        if (family_bits & (std::uint64_t(1) << c)) continue;
        bool covered = false;
        for (std::uint32_t a = 1; a <= ctx.full_mask() && !covered; ++a) {
            if (!(family_bits & (std::uint64_t(1) << a))) continue;
            for (std::uint32_t b = a + 1; b <= ctx.full_mask(); ++b) {
                if (!(family_bits & (std::uint64_t(1) << b))) continue;
                if (ctx.sum_mask(a, b) == static_cast<int>(c)) {
                    covered = true;
                    break;
                }
            }
        }
        if (!covered) return c;
    }
    return std::nullopt;
}

}  // namespace detail

/// Every topology on X whose non-empty members, together with their pairwise
/// sumsets over distinct members, cover all non-empty subsets of X.  These
/// are exactly the topologies build_from_topology accepts.  Canonical order;
/// the discrete topology is always admissible, so the result is non-empty.
inline std::vector<SetFamily> admissible_topologies(const GroundSet& x,
                                                    int limit = kDefaultTopologyLimit) {
    GroundContext ctx(x);
    if (ctx.count() > limit) throw error("ground set too large for exhaustive topology enumeration");
    std::vector<SetFamily> out;
    for (std::uint64_t bits : detail::enumerate_topology_bits(ctx, 0)) {
        if (!detail::admissibility_gap(ctx, bits)) out.push_back(SetFamily::from_mask_bits(ctx, bits));
    }
    return out;
}

struct ConstructedWitness {
    Graph graph;
    Labeling labeling;
    SetFamily topology;
};

/// Realizes a tiassl witness from an admissible topology:
///   - one vertex per non-empty member, labeled by it ("v1" gets {0});
///   - each vertex whose label is summand-free, or labeled X, is joined to
///     the {0}-vertex (those labels can only be covered through that edge or
///     the vertex itself);
///   - each non-member subset gets one edge between the canonically smallest
///     pair of distinct members whose sumset it is;
///   - vertices still isolated are joined to the {0}-vertex, which keeps the
///     graph connected without disturbing coverage.
///
/// The result always verifies as a strict tiassl, and in fact as an iasi:
/// edges at the {0}-vertex carry their far endpoint's label, the remaining
/// edges carry non-member labels, and within each group labels are distinct.
inline ConstructedWitness build_from_topology(const GroundContext& ctx, const SetFamily& topo) {
    const std::uint64_t bits = SetFamily(ctx, topo.members()).mask_bits();
    TopologyCheck tc = detail::check_topology_bits(ctx, bits);
    if (!tc.ok) throw error("not a topology on " + ctx.ground().to_string() + ": " + tc.witness);
    if (auto gap = detail::admissibility_gap(ctx, bits)) {
        throw error("inadmissible topology: subset " + ctx.str_of(*gap) +
                    " is neither a member nor a sumset of two distinct members");
    }

    StructuralMaskSets structural = compute_structural_masks(ctx);

    Graph g;
    std::map<std::string, IntSet> labels;
    std::map<std::uint32_t, std::string> vertex_of;
    int next = 1;
    for (std::uint32_t m = 1; m <= ctx.full_mask(); ++m) {
        if (!(bits & (std::uint64_t(1) << m))) continue;
        std::string id = "v" + std::to_string(next++);
        g.add_vertex(id);
        labels.emplace(id, ctx.set_of(m));
        vertex_of.emplace(m, id);
    }
    const std::string& zero_id = vertex_of.at(GroundContext::kZeroMask);

    for (auto& [m, id] : vertex_of) {
        if (m == GroundContext::kZeroMask) continue;
        bool summand_free = (structural.summand_free >> m) & 1;
        if (summand_free || m == ctx.full_mask()) g.add_edge(id, zero_id);
    }

    for (std::uint32_t c = 1; c <= ctx.full_mask(); ++c) {
        if (bits & (std::uint64_t(1) << c)) continue;
        bool placed = false;
        for (std::uint32_t a = 1; a <= ctx.full_mask() && !placed; ++a) {
            if (!(bits & (std::uint64_t(1) << a))) continue;
            for (std::uint32_t b = a + 1; b <= ctx.full_mask(); ++b) {
                if (!(bits & (std::uint64_t(1) << b))) continue;
                if (ctx.sum_mask(a, b) == static_cast<int>(c)) {
                    g.add_edge(vertex_of.at(a), vertex_of.at(b));
                    placed = true;
                    break;
                }
            }
        }
    }

    // Connectivity repair: join every component that misses the {0}-vertex
    // to it through the component's canonically smallest vertex.  The new
    // edge carries that vertex's own label ({0}+L = L), which is already
    // covered and collides with no other edge label, so coverage and edge
    // injectivity survive.  Isolated vertices are the one-vertex case.
    {
        const int zero_index = g.index_of(zero_id);
        std::vector<int> component(g.vertex_count(), -1);
        int components = 0;
        for (std::size_t start = 0; start < g.vertex_count(); ++start) {
            if (component[start] != -1) continue;
            std::vector<int> stack{static_cast<int>(start)};
            component[start] = components;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : g.neighbors(v)) {
                    if (component[w] == -1) {
                        component[w] = components;
                        stack.push_back(w);
                    }
                }
            }
            ++components;
        }
        std::vector<char> joined(components, 0);
        joined[component[zero_index]] = 1;
        for (auto& [m, id] : vertex_of) {
            int c = component[g.index_of(id)];
            if (!joined[c]) {
                g.add_edge(id, zero_id);  // vertex_of iterates masks ascending
                joined[c] = 1;
            }
        }
    }

    Labeling l(ctx.ground(), std::move(labels));
    CheckResult verdict = check(g, l, LabelClass::tiassl, /*strict_tiassl=*/true);
    if (!verdict.pass)
        throw error("internal: constructed labeling fails tiassl: " + verdict.witness);
    return {std::move(g), std::move(l), SetFamily::from_mask_bits(ctx, bits)};
}

/// Constructive existence: a graph plus labeling verifying as a strict
/// tiassl over X, built from the canonically first admissible topology.
/// When X is too large for exhaustive topology enumeration, the discrete
/// topology (always admissible) is used directly.
inline ConstructedWitness construct_tiass_graph(const GroundSet& x,
                                                int limit = kDefaultTopologyLimit) {
    GroundContext ctx(x);
    if (ctx.count() <= limit) {
        for (std::uint64_t bits : detail::enumerate_topology_bits(ctx, 0)) {
            if (!detail::admissibility_gap(ctx, bits))
                return build_from_topology(ctx, SetFamily::from_mask_bits(ctx, bits));
        }
        throw error("internal: no admissible topology found (discrete should qualify)");
    }
    std::uint64_t discrete = 0;
    for (std::uint32_t m = 0; m <= ctx.full_mask(); ++m) discrete |= std::uint64_t(1) << m;
    return build_from_topology(ctx, SetFamily::from_mask_bits(ctx, discrete));
}

}  // namespace iasl
