// graph.hpp - balanced tripartite graphs, column layouts and K_{h,h,h} copies.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tritile/bitset.hpp"
#include "tritile/errors.hpp"
#include "tritile/rational.hpp"

namespace tritile {

struct Vertex {
    int cls = 0;
    int idx = 0;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// the three class pairs in canonical scan order
inline constexpr std::array<std::pair<int, int>, 3> kClassPairs{{{0, 1}, {0, 2}, {1, 2}}};

// Edge between two cross-class vertices, as it appears in input lists.
using EdgeSpec = std::tuple<int, int, int, int>;  // (class, vertex, class, vertex)

// Three vertex classes with dense boolean adjacency between each class pair.
// Immutable once built (builders call add_edge, everything else reads).
// Class sizes are usually equal; unequal sizes are allowed for bipartite
// pair views (third class empty).
class TripartiteGraph {
public:
    TripartiteGraph() : TripartiteGraph({0, 0, 0}) {}
    explicit TripartiteGraph(std::array<int, 3> sizes);

    const std::array<int, 3>& class_sizes() const { return sizes_; }
    int class_size(int cls) const { return sizes_[cls]; }
    int total_vertices() const { return sizes_[0] + sizes_[1] + sizes_[2]; }
    bool balanced() const { return sizes_[0] == sizes_[1] && sizes_[1] == sizes_[2]; }

    void add_edge(int ci, int u, int cj, int v);  // idempotent; rejects within-class and out-of-range
    void remove_edge(int ci, int u, int cj, int v);
    bool has_edge(int ci, int u, int cj, int v) const;

    // neighbors of (ci,u) inside class cj, as a bitset over class cj
    const Bitset& neighbors(int ci, int u, int cj) const {
        return adj_[ci][cj][u];
    }
    int degree(int ci, int u, int cj) const { return adj_[ci][cj][u].count(); }

    int64_t edge_count() const;
    int64_t edge_count_between(int ci, int cj) const;

    bool operator==(const TripartiteGraph& o) const { return sizes_ == o.sizes_ && adj_ == o.adj_; }

    static TripartiteGraph complete(std::array<int, 3> sizes);

private:
    void check_vertex(int cls, int v) const;

    std::array<int, 3> sizes_{};
    // adj_[a][b][u] = bitset over class b of the neighbors of (a,u); adj_[a][a] unused
    std::array<std::array<std::vector<Bitset>, 3>, 3> adj_;
};

// The 3x3 partition of the vertex classes into columns A^(i)_j.
// cells[i][j] holds the sorted vertex indices of class i lying in column j.
struct ColumnLayout {
    std::array<std::array<std::vector<int>, 3>, 3> cells;

    // column of vertex (cls,v), or -1 when the layout does not cover it
    int column_of(int cls, int v) const;

    std::array<int, 3> cell_sizes(int cls) const {
        return {int(cells[cls][0].size()), int(cells[cls][1].size()), int(cells[cls][2].size())};
    }

    // throws Error unless every class is exactly partitioned by its three cells
    void validate(const TripartiteGraph& g) const;

    // contiguous layout: class i = [0,s0) + [s0,s0+s1) + [s0+s1,s0+s1+s2)
    static ColumnLayout contiguous(const std::array<int, 3>& col_sizes);
    // everything in column 0
    static ColumnLayout trivial(const std::array<int, 3>& class_sizes);

    bool operator==(const ColumnLayout&) const = default;
};

// An ordered triple of h-sets, one per class, pairwise completely joined in
// the host graph. Parts are kept sorted; copies compare lexicographically,
// which fixes the canonical enumeration order.
struct KhhhCopy {
    std::array<std::vector<int>, 3> parts;

    int h() const { return int(parts[0].size()); }
    void normalize();
    friend auto operator<=>(const KhhhCopy&, const KhhhCopy&) = default;
};

// true iff parts sit in their classes, all have size h >= 1, and every
// cross-part pair is adjacent
bool is_valid_copy(const TripartiteGraph& g, const KhhhCopy& copy, std::string* why = nullptr);

// --- spec operations -------------------------------------------------------

TripartiteGraph build_graph(std::array<int, 3> sizes, const std::vector<EdgeSpec>& edges);

// min over vertices v and classes c != class(v) of |N(v) inter c|
int min_pair_degree(const TripartiteGraph& g);

// exact density e(X,Y) / (|X||Y|); X,Y must be non-empty and in distinct classes
Rat pair_density(const TripartiteGraph& g, int ci, const std::vector<int>& X, int cj,
                 const std::vector<int>& Y);

int64_t edges_between_sets(const TripartiteGraph& g, int ci, const std::vector<int>& X, int cj,
                           const std::vector<int>& Y);

}  // namespace tritile
