#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iasl/error.hpp"
#include "iasl/ground.hpp"
#include "iasl/intset.hpp"

namespace iasl {

/// A duplicate-free collection of subsets of a ground set, kept in canonical
/// order (ascending subset mask).  Used for topologies, vertex-label families
/// and the structural families of setalg.
class SetFamily {
public:
    SetFamily() = default;

    SetFamily(const GroundContext& ctx, const std::vector<IntSet>& members) {
        std::uint64_t bits = 0;
        for (const IntSet& s : members) {
            auto m = ctx.mask_of(s);
            if (!m) throw error("family member " + s.to_string() + " is not a subset of ground set " +
                                ctx.ground().to_string());
            bits |= std::uint64_t(1) << *m;
        }
        *this = from_mask_bits(ctx, bits);
    }

    /// Builds the family from a bitset with one bit per subset mask.
    static SetFamily from_mask_bits(const GroundContext& ctx, std::uint64_t bits) {
        SetFamily fam;
        fam.bits_ = bits;
        for (std::uint32_t m = 0; m <= ctx.full_mask(); ++m)
            if (bits & (std::uint64_t(1) << m)) fam.members_.push_back(ctx.set_of(m));
        return fam;
    }

    const std::vector<IntSet>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    /// Family bitset relative to the context this family was built under.
    std::uint64_t mask_bits() const { return bits_; }

    bool contains(const IntSet& s) const {
        for (const IntSet& m : members_)
            if (m == s) return true;
        return false;
    }

    /// One-line rendering as a sequence of serialized sets, e.g. "[] [0] [0,1]".
    std::string to_line() const {
        std::string out;
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (i) out += ' ';
            out += members_[i].to_compact();
        }
        return out;
    }

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (i) out += ", ";
            out += members_[i].to_string();
        }
        out += '}';
        return out;
    }

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    std::vector<IntSet> members_;
    std::uint64_t bits_ = 0;
};

}  // namespace iasl
