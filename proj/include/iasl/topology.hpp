#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <unordered_set>
#include <vector>

#include "iasl/error.hpp"
#include "iasl/family.hpp"
#include "iasl/ground.hpp"

namespace iasl {

inline constexpr int kDefaultTopologyLimit = 5;

struct TopologyCheck {
    bool ok = false;
    std::string witness;  // set on failure: first violation in canonical order
};

namespace detail {

// Union/intersection closure of a family bitset; the result always contains
// the input.  Caller is responsible for seeding the empty set and X.
inline std::uint64_t close_family(const GroundContext& ctx, std::uint64_t bits) {
    std::vector<std::uint32_t> work;
    for (std::uint32_t m = 0; m <= ctx.full_mask(); ++m)
        if (bits & (std::uint64_t(1) << m)) work.push_back(m);
    for (std::size_t i = 0; i < work.size(); ++i) {
        std::uint32_t a = work[i];
        for (std::size_t j = 0; j <= i; ++j) {
            std::uint32_t b = work[j];
            for (std::uint32_t c : {a | b, a & b}) {
                if (!(bits & (std::uint64_t(1) << c))) {
                    bits |= std::uint64_t(1) << c;
                    work.push_back(c);
                }
            }
        }
    }
    return bits;
}

// Checks whether a family bitset is a topology on X; on failure reports the
// first violation in canonical order (empty set, X, then union/intersection
// over member pairs ascending).
inline TopologyCheck check_topology_bits(const GroundContext& ctx, std::uint64_t bits) {
    if (!(bits & 1)) return {false, "the empty set is missing"};
    if (!(bits & (std::uint64_t(1) << ctx.full_mask())))
        return {false, "X = " + ctx.str_of(ctx.full_mask()) + " is missing"};
    std::vector<std::uint32_t> members;
    for (std::uint32_t m = 0; m <= ctx.full_mask(); ++m)
        if (bits & (std::uint64_t(1) << m)) members.push_back(m);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            std::uint32_t a = members[i], b = members[j];
            if (!(bits & (std::uint64_t(1) << (a | b))))
                return {false, "union " + ctx.str_of(a) + " U " + ctx.str_of(b) + " = " +
                                   ctx.str_of(a | b) + " is missing"};
            if (!(bits & (std::uint64_t(1) << (a & b))))
                return {false, "intersection " + ctx.str_of(a) + " n " + ctx.str_of(b) + " = " +
                                   ctx.str_of(a & b) + " is missing"};
        }
    }
    return {true, ""};
}

// Every topology on X that contains all subsets flagged in required_bits,
// as family bitsets in ascending (canonical) order.  Closure-completion BFS:
// start from the coarsest admissible topology and repeatedly close the family
// after adding one absent subset.  Any topology T' strictly finer than a
// reached topology T is reachable, since closing T plus any member of T'\T
// stays inside T'.
inline std::vector<std::uint64_t> enumerate_topology_bits(const GroundContext& ctx,
                                                          std::uint64_t required_bits) {
    std::uint64_t start = close_family(
        ctx, required_bits | 1 | (std::uint64_t(1) << ctx.full_mask()));
    std::unordered_set<std::uint64_t> seen{start};
    std::vector<std::uint64_t> queue{start};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::uint64_t fam = queue[i];
        for (std::uint32_t m = 1; m < ctx.full_mask(); ++m) {
            if (fam & (std::uint64_t(1) << m)) continue;
            std::uint64_t next = close_family(ctx, fam | (std::uint64_t(1) << m));
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

}  // namespace detail

/// True iff the family is a topology on X: contains the empty set and X and
/// is closed under pairwise union and intersection (binary closure suffices
/// for finite families).  Members must be subsets of X.
inline TopologyCheck is_topology(const GroundContext& ctx, const SetFamily& family) {
    for (const IntSet& s : family.members()) {
        if (!ctx.mask_of(s))
            throw error("family member " + s.to_string() + " is not a subset of ground set " +
                        ctx.ground().to_string());
    }
    return detail::check_topology_bits(ctx, family.mask_bits());
}

inline TopologyCheck is_topology(const GroundSet& x, const SetFamily& family) {
    GroundContext ctx(x);
    SetFamily rebuilt(ctx, family.members());  // revalidates against x
    return is_topology(ctx, rebuilt);
}

/// All topologies on X containing every member of `required`, in canonical
/// order (ascending family bitset, so coarser topologies come first and the
/// discrete topology last).  Exhaustive, so |X| is capped by `limit`.
inline std::vector<SetFamily> enumerate_topologies(const GroundContext& ctx,
                                                   const SetFamily& required,
                                                   int limit = kDefaultTopologyLimit) {
    if (ctx.count() > limit) throw error("ground set too large for exhaustive topology enumeration");
    std::vector<SetFamily> out;
    for (std::uint64_t bits : detail::enumerate_topology_bits(ctx, required.mask_bits()))
        out.push_back(SetFamily::from_mask_bits(ctx, bits));
    return out;
}

inline std::vector<SetFamily> enumerate_topologies(const GroundSet& x,
                                                   const SetFamily& required = {},
                                                   int limit = kDefaultTopologyLimit) {
    GroundContext ctx(x);
    SetFamily req = required.empty() ? SetFamily() : SetFamily(ctx, required.members());
    return enumerate_topologies(ctx, req, limit);
}

}  // namespace iasl
