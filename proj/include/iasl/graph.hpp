#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "iasl/error.hpp"

namespace iasl {

/// Finite simple undirected graph with stable string vertex identifiers.
/// No self-loops, no parallel edges; immutable once built (construction via
/// add_vertex/add_edge, then treated as a value).
class Graph {
public:
    Graph() = default;

    void add_vertex(std::string id) {
        if (index_.count(id)) throw error("duplicate vertex id '" + id + "'");
        index_[id] = static_cast<int>(ids_.size());
        ids_.push_back(std::move(id));
        adj_.emplace_back();
    }

    void add_edge(const std::string& u, const std::string& v) {
        int ui = index_of(u), vi = index_of(v);
        if (ui == vi) throw error("self-loop at vertex '" + u + "'");
        if (has_edge_index(ui, vi)) throw error("parallel edge " + u + "-" + v);
        adj_[ui].push_back(vi);
        adj_[vi].push_back(ui);
        edges_.emplace_back(std::min(ui, vi), std::max(ui, vi));
    }

    static Graph from_parts(const std::vector<std::string>& vertices,
                            const std::vector<std::pair<std::string, std::string>>& edges) {
        Graph g;
        for (const auto& v : vertices) g.add_vertex(v);
        for (const auto& [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& vertices() const { return ids_; }

    bool has_vertex(const std::string& id) const { return index_.count(id) > 0; }

    int index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw error("unknown vertex '" + id + "'");
        return it->second;
    }

    const std::string& id_of(int index) const { return ids_.at(index); }

    /// Edges as index pairs (lo, hi), in insertion order.
    const std::vector<std::pair<int, int>>& edge_indices() const { return edges_; }

    /// Edges as id pairs with endpoints in identifier order, sorted.
    std::vector<std::pair<std::string, std::string>> edges() const {
        std::vector<std::pair<std::string, std::string>> out;
        out.reserve(edges_.size());
        for (auto [a, b] : edges_) {
            std::string u = ids_[a], v = ids_[b];
            if (v < u) std::swap(u, v);
            out.emplace_back(std::move(u), std::move(v));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    const std::vector<int>& neighbors(int index) const { return adj_.at(index); }

    int degree(const std::string& id) const { return static_cast<int>(adj_[index_of(id)].size()); }
    int degree_of(int index) const { return static_cast<int>(adj_.at(index).size()); }

    /// Vertices of degree exactly 1.
    std::vector<std::string> pendant_vertices() const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < ids_.size(); ++i)
            if (adj_[i].size() == 1) out.push_back(ids_[i]);
        return out;
    }

    /// Vertices of degree 0.
    std::vector<std::string> isolated_vertices() const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < ids_.size(); ++i)
            if (adj_[i].empty()) out.push_back(ids_[i]);
        return out;
    }

    bool is_connected() const {
        if (ids_.empty()) return true;
        std::vector<char> seen(ids_.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached == ids_.size();
    }

    /// True iff the graph is a star K_{1,n-1}: at least two vertices, one
    /// center adjacent to all others, and no other edges.
    bool is_star() const {
        std::size_t n = ids_.size();
        if (n < 2 || edges_.size() != n - 1) return false;
        for (std::size_t i = 0; i < n; ++i)
            if (adj_[i].size() == n - 1) return true;
        return false;
    }

private:
    bool has_edge_index(int a, int b) const {
        for (int w : adj_[a])
            if (w == b) return true;
        return false;
    }

    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

namespace detail {

// Edge bit layout for small-graph codes: pair (i,j), i<j, gets bit
// j*(j-1)/2 + i, so codes on fewer vertices are prefixes of larger ones.
inline int edge_bit(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

inline std::vector<std::pair<int, int>> edge_bit_pairs(int n) {
    std::vector<std::pair<int, int>> pairs(n * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs[edge_bit(i, j)] = {i, j};
    return pairs;
}

inline bool code_connected(std::uint64_t code, int n) {
    if (n <= 1) return true;
    auto pairs = edge_bit_pairs(n);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int components = n;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (code & (std::uint64_t(1) << k)) {
            int a = find(pairs[k].first), b = find(pairs[k].second);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    }
    return components == 1;
}

// Precomputed bit remappings, one per vertex permutation.
inline std::vector<std::vector<int>> permutation_bit_maps(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto pairs = edge_bit_pairs(n);
    std::vector<std::vector<int>> maps;
    do {
        std::vector<int> map(pairs.size());
        for (std::size_t k = 0; k < pairs.size(); ++k)
            map[k] = edge_bit(perm[pairs[k].first], perm[pairs[k].second]);
        maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

inline std::uint64_t permute_code(std::uint64_t code, const std::vector<int>& map) {
    std::uint64_t out = 0;
    while (code) {
        int k = std::countr_zero(code);
        code &= code - 1;
        out |= std::uint64_t(1) << map[k];
    }
    return out;
}

inline Graph graph_from_code(std::uint64_t code, int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i + 1));
    auto pairs = edge_bit_pairs(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (code & (std::uint64_t(1) << k))
            g.add_edge("v" + std::to_string(pairs[k].first + 1),
                       "v" + std::to_string(pairs[k].second + 1));
    return g;
}

// One representative per isomorphism class among labeled graph codes
// accepted by `keep`.  The representative is the minimum code over all
// vertex permutations; whole orbits are marked seen in one sweep, so each
// class is canonicalized exactly once.
template <typename Keep>
std::vector<Graph> enumerate_classes(int n, Keep keep) {
    const int bits = n * (n - 1) / 2;
    auto maps = permutation_bit_maps(n);
    std::vector<char> seen(std::uint64_t(1) << bits, 0);
    std::vector<std::uint64_t> canon_codes;
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << bits); ++code) {
        if (seen[code] || !keep(code)) continue;
        std::uint64_t best = ~std::uint64_t(0);
        for (const auto& map : maps) {
            std::uint64_t img = permute_code(code, map);
            seen[img] = 1;
            best = std::min(best, img);
        }
        canon_codes.push_back(best);
    }
    std::sort(canon_codes.begin(), canon_codes.end());
    std::vector<Graph> out;
    out.reserve(canon_codes.size());
    for (std::uint64_t c : canon_codes) out.push_back(graph_from_code(c, n));
    return out;
}

}  // namespace detail

/// One representative per isomorphism class of connected simple graphs on n
/// vertices (1 <= n <= 6), deduplicated by the adjacency code minimized over
/// all vertex permutations, in ascending canonical-code order.
inline std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1 || n > 6) throw error("connected-graph enumeration supports 1 <= n <= 6");
    return detail::enumerate_classes(n, [n](std::uint64_t code) {
        return detail::code_connected(code, n);
    });
}

/// One representative per isomorphism class of trees on n vertices
/// (1 <= n <= 7).
inline std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > 7) throw error("tree enumeration supports 1 <= n <= 7");
    return detail::enumerate_classes(n, [n](std::uint64_t code) {
        return std::popcount(code) == n - 1 && detail::code_connected(code, n);
    });
}

/// Vertex orbits under the automorphism group, as a partition of vertex
/// indices.  Exact for n <= 8 (brute force over all permutations); for larger
/// graphs falls back to singleton orbits, which is always sound.
inline std::vector<std::vector<int>> automorphism_orbits(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    if (n <= 8 && n > 0) {
        std::vector<std::uint16_t> rows(n, 0);
        for (auto [a, b] : g.edge_indices()) {
            rows[a] |= std::uint16_t(1) << b;
            rows[b] |= std::uint16_t(1) << a;
        }
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool iso = true;
            for (auto [a, b] : g.edge_indices()) {
                if (!(rows[perm[a]] & (std::uint16_t(1) << perm[b]))) {
                    iso = false;
                    break;
                }
            }
            if (iso) {
                for (int v = 0; v < n; ++v) {
                    int a = find(v), b = find(perm[v]);
                    if (a != b) parent[a] = b;
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

}  // namespace iasl
