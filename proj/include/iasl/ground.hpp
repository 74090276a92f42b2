#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iasl/error.hpp"
#include "iasl/intset.hpp"

namespace iasl {

// Subsets of the ground set are encoded as bit-vectors indexed by the sorted
// elements of X, so for X = {0,1,4} the mask 0b101 means {0,4}.  All subset
// enumerations use ascending mask value as the canonical order.  Family-level
// bitsets (one bit per subset mask) then fit in a std::uint64_t, which is what
// caps |X| at kHardGroundCap.
inline constexpr int kHardGroundCap = 6;

/// Size cap for ground sets: the SUMSET_MAX_GROUND environment variable,
/// clamped to [1, kHardGroundCap].  Defaults to kHardGroundCap.
inline int max_ground_size() {
    static const int limit = [] {
        const char* env = std::getenv("SUMSET_MAX_GROUND");
        if (!env || !*env) return kHardGroundCap;
        int v = std::atoi(env);
        if (v < 1) return 1;
        if (v > kHardGroundCap) return kHardGroundCap;
        return v;
    }();
    return limit;
}

/// The fixed finite ground set X: non-empty, contains 0, at most
/// max_ground_size() elements.  Every set-label is a non-empty subset of X.
class GroundSet {
public:
    static GroundSet create(IntSet elems) {
        if (elems.empty()) throw error("ground set must be non-empty");
        if (!elems.contains(0)) throw error("ground set must contain 0");
        if (static_cast<int>(elems.size()) > max_ground_size()) {
            throw error("ground set has " + std::to_string(elems.size()) +
                        " elements, limit is " + std::to_string(max_ground_size()) +
                        " (set SUMSET_MAX_GROUND to adjust, hard cap " +
                        std::to_string(kHardGroundCap) + ")");
        }
        return GroundSet(std::move(elems));
    }

    static GroundSet parse(std::string_view text) { return create(IntSet::parse(text)); }

    const IntSet& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    std::string to_string() const { return elems_.to_string(); }

    friend auto operator<=>(const GroundSet&, const GroundSet&) = default;

private:
    explicit GroundSet(IntSet elems) : elems_(std::move(elems)) {}
    IntSet elems_;
};

/// Mask codec for subsets of a ground set, with a precomputed sumset table.
///
/// sum_mask(a, b) gives the subset mask of the sumset of the subsets encoded
/// by a and b when that sumset stays inside X, and -1 when it escapes.  Since
/// 0 is the smallest element of X, the mask of {0} is always 1.
class GroundContext {
public:
    static constexpr std::uint32_t kZeroMask = 1;  // mask of {0}

    explicit GroundContext(GroundSet ground) : ground_(std::move(ground)) {
        k_ = static_cast<int>(ground_.size());
        full_ = (1u << k_) - 1;
        const std::vector<int>& vals = ground_.elements().values();
        sets_.resize(1u << k_);
        for (std::uint32_t m = 0; m <= full_; ++m) {
            std::vector<int> elems;
            for (int i = 0; i < k_; ++i)
                if (m & (1u << i)) elems.push_back(vals[i]);
            sets_[m] = IntSet(std::move(elems));
        }
        sum_.assign((1u << k_) * (1u << k_), -1);
        for (std::uint32_t a = 1; a <= full_; ++a) {
            for (std::uint32_t b = a; b <= full_; ++b) {
                IntSet s = sumset(sets_[a], sets_[b]);
                int entry = -1;
                if (s.subset_of(ground_.elements())) entry = static_cast<int>(*mask_of_sorted(s));
                sum_[(a << k_) | b] = static_cast<std::int16_t>(entry);
                sum_[(b << k_) | a] = static_cast<std::int16_t>(entry);
            }
        }
    }

    const GroundSet& ground() const { return ground_; }
    int count() const { return k_; }
    std::uint32_t full_mask() const { return full_; }
    std::uint32_t subset_count() const { return full_ + 1; }

    const IntSet& set_of(std::uint32_t mask) const { return sets_[mask]; }
    std::string str_of(std::uint32_t mask) const { return sets_[mask].to_string(); }

    /// Subset mask of s, or nullopt when s is not a subset of X.
    std::optional<std::uint32_t> mask_of(const IntSet& s) const {
        if (!s.subset_of(ground_.elements())) return std::nullopt;
        return mask_of_sorted(s);
    }

    /// Sumset of the subsets with masks a and b: the resulting subset mask,
    /// or -1 when the sumset leaves X.  Operands must be non-empty.
    int sum_mask(std::uint32_t a, std::uint32_t b) const {
        return sum_[(a << k_) | b];
    }

private:
    std::optional<std::uint32_t> mask_of_sorted(const IntSet& s) const {
        std::uint32_t m = 0;
        const std::vector<int>& vals = ground_.elements().values();
        std::size_t i = 0;
        for (int v : s.values()) {
            while (i < vals.size() && vals[i] < v) ++i;
            if (i == vals.size() || vals[i] != v) return std::nullopt;
            m |= 1u << i;
        }
        return m;
    }

    GroundSet ground_;
    int k_ = 0;
    std::uint32_t full_ = 0;
    std::vector<IntSet> sets_;
    std::vector<std::int16_t> sum_;
};

}  // namespace iasl
