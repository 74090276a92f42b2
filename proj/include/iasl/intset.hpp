#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "iasl/error.hpp"

namespace iasl {

/// A finite set of non-negative integers, stored sorted ascending.
///
/// This is the value type for vertex set-labels, induced edge set-labels
/// and sumset results.  The empty set is representable (it shows up as an
/// intersection and as the conventional extra member of a topology) but is
/// never a valid set-label.
class IntSet {
public:
    IntSet() = default;

    explicit IntSet(std::vector<int> elems) : elems_(std::move(elems)) {
        for (int v : elems_) {
            if (v < 0) throw error("set elements must be non-negative, got " + std::to_string(v));
        }
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    }

    IntSet(std::initializer_list<int> elems) : IntSet(std::vector<int>(elems)) {}

    /// Parses a comma-separated list such as "0,1,2".
    static IntSet parse(std::string_view text) {
        std::vector<int> vals;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            if (tok.empty()) throw error("cannot parse set from '" + std::string(text) + "'");
            int v = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || p != tok.data() + tok.size()) {
                throw error("cannot parse set element '" + std::string(tok) + "'");
            }
            vals.push_back(v);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return IntSet(std::move(vals));
    }

    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    const std::vector<int>& values() const { return elems_; }

    bool contains(int v) const {
        return std::binary_search(elems_.begin(), elems_.end(), v);
    }

    bool subset_of(const IntSet& other) const {
        return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
    }

    int min() const {
        if (elems_.empty()) throw error("min of empty set");
        return elems_.front();
    }
    int max() const {
        if (elems_.empty()) throw error("max of empty set");
        return elems_.back();
    }

    IntSet unioned(const IntSet& other) const {
        std::vector<int> out;
        std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                       std::back_inserter(out));
        return IntSet(std::move(out));
    }

    IntSet intersected(const IntSet& other) const {
        std::vector<int> out;
        std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                              std::back_inserter(out));
        return IntSet(std::move(out));
    }

    /// Human-oriented rendering, e.g. "{0,2}".  The empty set prints as "{}".
    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(elems_[i]);
        }
        out += '}';
        return out;
    }

    /// Serialized rendering matching the JSON form, e.g. "[0,2]".
    std::string to_compact() const {
        std::string out = "[";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(elems_[i]);
        }
        out += ']';
        return out;
    }

    /// Comma list without braces, e.g. "0,2" (CLI output form).
    std::string to_comma_list() const {
        std::string out;
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(elems_[i]);
        }
        return out;
    }

    // Ordering is lexicographic on the sorted element sequence; intended for
    // container use.  Canonical subset order is mask-based and lives in
    // GroundContext.
    friend auto operator<=>(const IntSet&, const IntSet&) = default;

private:
    std::vector<int> elems_;
};

/// Sumset A+B = { a+b : a in A, b in B }.  Both operands must be non-empty.
inline IntSet sumset(const IntSet& a, const IntSet& b) {
    if (a.empty() || b.empty()) throw error("empty set-label operand");
    std::set<int> sums;
    for (int x : a.values())
        for (int y : b.values()) sums.insert(x + y);
    return IntSet(std::vector<int>(sums.begin(), sums.end()));
}

}  // namespace iasl
