#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "iasl/error.hpp"
#include "iasl/family.hpp"
#include "iasl/ground.hpp"
#include "iasl/intset.hpp"

namespace iasl {

/// One way of writing a subset C of X as a sumset C = first + second of two
/// non-empty subsets of X, neither equal to {0}.  Pairs are unordered and
/// reported with first <= second in canonical (mask) order.  A self pair
/// (first == second) still witnesses that C is a non-trivial sumset, but it
/// cannot label an edge of a simple graph.
struct Representation {
    IntSet first;
    IntSet second;
    bool self_pair = false;
};

/// All non-trivial representations of c as a sumset of subsets of x, in
/// canonical pair order.  c must be a non-empty subset of x.
inline std::vector<Representation> nontrivial_representations(const IntSet& c, const GroundSet& x) {
    GroundContext ctx(x);
    auto cm = ctx.mask_of(c);
    if (!cm || c.empty()) throw error("not a subset of ground set");
    std::vector<Representation> out;
    for (std::uint32_t a = 1; a <= ctx.full_mask(); ++a) {
        if (a == GroundContext::kZeroMask) continue;
        for (std::uint32_t b = a; b <= ctx.full_mask(); ++b) {
            if (b == GroundContext::kZeroMask) continue;
            if (ctx.sum_mask(a, b) == static_cast<int>(*cm)) {
                out.push_back({ctx.set_of(a), ctx.set_of(b), a == b});
            }
        }
    }
    return out;
}

/// The structural subset families of a ground set X.
///
///   sumset_free   (rho)  : non-empty subsets that are not the sumset of any
///                          two subsets of X other than via {0}+C.
///   summand_free  (rho') : non-empty subsets, {0} excluded, that occur in no
///                          such representation as a summand.  {0} is excluded
///                          because a {0}-labeled vertex cannot be adjacent to
///                          itself, so it never realizes a summand edge.
///   doubly_free   (rho''): the intersection of the two.
///   representable        : complement of sumset_free among non-empty subsets;
///                          exactly the candidate edge labels.
struct StructuralSets {
    SetFamily sumset_free;
    SetFamily summand_free;
    SetFamily doubly_free;
    SetFamily representable;

    int rho() const { return static_cast<int>(sumset_free.size()); }
    int rho_prime() const { return static_cast<int>(summand_free.size()); }
    int rho_second() const { return static_cast<int>(doubly_free.size()); }
};

/// Mask-level variant used by the search and construct internals.
struct StructuralMaskSets {
    std::uint64_t sumset_free = 0;
    std::uint64_t summand_free = 0;
    std::uint64_t doubly_free = 0;
    std::uint64_t representable = 0;
};

inline StructuralMaskSets compute_structural_masks(const GroundContext& ctx) {
    const std::uint32_t full = ctx.full_mask();
    const std::uint32_t zero = GroundContext::kZeroMask;
    std::uint64_t is_sumset = 0;   // has a non-trivial representation
    std::uint64_t is_summand = 0;  // occurs as a summand in one
    for (std::uint32_t a = 1; a <= full; ++a) {
        if (a == zero) continue;
        for (std::uint32_t b = a; b <= full; ++b) {
            if (b == zero) continue;
            int s = ctx.sum_mask(a, b);
            if (s >= 0) {
                is_sumset |= std::uint64_t(1) << s;
                is_summand |= (std::uint64_t(1) << a) | (std::uint64_t(1) << b);
            }
        }
    }
    std::uint64_t nonempty = 0;
    for (std::uint32_t m = 1; m <= full; ++m) nonempty |= std::uint64_t(1) << m;
    StructuralMaskSets out;
    out.sumset_free = nonempty & ~is_sumset;
    out.summand_free = nonempty & ~is_summand & ~(std::uint64_t(1) << zero);
    out.doubly_free = out.sumset_free & out.summand_free;
    out.representable = nonempty & is_sumset;
    return out;
}

inline StructuralSets compute_structural_sets(const GroundContext& ctx) {
    StructuralMaskSets m = compute_structural_masks(ctx);
    StructuralSets out;
    out.sumset_free = SetFamily::from_mask_bits(ctx, m.sumset_free);
    out.summand_free = SetFamily::from_mask_bits(ctx, m.summand_free);
    out.doubly_free = SetFamily::from_mask_bits(ctx, m.doubly_free);
    out.representable = SetFamily::from_mask_bits(ctx, m.representable);
    return out;
}

inline StructuralSets compute_structural_sets(const GroundSet& x) {
    return compute_structural_sets(GroundContext(x));
}

}  // namespace iasl
