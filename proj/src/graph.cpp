#include "tritile/graph.hpp"

#include <algorithm>

namespace tritile {

TripartiteGraph::TripartiteGraph(std::array<int, 3> sizes) : sizes_(sizes) {
    for (int s : sizes_)
        if (s < 0) throw Error("negative class size");
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            adj_[a][b].assign(sizes_[a], Bitset(sizes_[b]));
        }
}

void TripartiteGraph::check_vertex(int cls, int v) const {
    if (cls < 0 || cls > 2) throw Error("class index out of range: " + std::to_string(cls));
    if (v < 0 || v >= sizes_[cls])
        throw Error("vertex index out of range: class " + std::to_string(cls) + ", vertex " +
                    std::to_string(v));
}

void TripartiteGraph::add_edge(int ci, int u, int cj, int v) {
    check_vertex(ci, u);
    check_vertex(cj, v);
    if (ci == cj)
        throw Error("within-class edge (" + std::to_string(ci) + "," + std::to_string(u) + ")-(" +
                    std::to_string(cj) + "," + std::to_string(v) + ")");
    adj_[ci][cj][u].set(v);
    adj_[cj][ci][v].set(u);
}

void TripartiteGraph::remove_edge(int ci, int u, int cj, int v) {
    check_vertex(ci, u);
    check_vertex(cj, v);
    if (ci == cj) return;
    adj_[ci][cj][u].reset(v);
    adj_[cj][ci][v].reset(u);
}

bool TripartiteGraph::has_edge(int ci, int u, int cj, int v) const {
    check_vertex(ci, u);
    check_vertex(cj, v);
    if (ci == cj) return false;
    return adj_[ci][cj][u].test(v);
}

int64_t TripartiteGraph::edge_count_between(int ci, int cj) const {
    int64_t e = 0;
    for (int u = 0; u < sizes_[ci]; ++u) e += adj_[ci][cj][u].count();
    return e;
}

int64_t TripartiteGraph::edge_count() const {
    return edge_count_between(0, 1) + edge_count_between(0, 2) + edge_count_between(1, 2);
}

TripartiteGraph TripartiteGraph::complete(std::array<int, 3> sizes) {
    TripartiteGraph g(sizes);
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            for (int u = 0; u < sizes[a]; ++u)
                for (int v = 0; v < sizes[b]; ++v) g.add_edge(a, u, b, v);
    return g;
}

int ColumnLayout::column_of(int cls, int v) const {
    for (int j = 0; j < 3; ++j)
        if (std::binary_search(cells[cls][j].begin(), cells[cls][j].end(), v)) return j;
    return -1;
}

void ColumnLayout::validate(const TripartiteGraph& g) const {
    for (int i = 0; i < 3; ++i) {
        std::vector<int> all;
        for (int j = 0; j < 3; ++j) {
            if (!std::is_sorted(cells[i][j].begin(), cells[i][j].end()))
                throw Error("layout cell (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not sorted");
            all.insert(all.end(), cells[i][j].begin(), cells[i][j].end());
        }
        std::sort(all.begin(), all.end());
        bool ok = int(all.size()) == g.class_size(i);
        for (size_t k = 0; ok && k < all.size(); ++k) ok = all[k] == int(k);
        if (!ok)
            throw Error("layout cells do not partition class " + std::to_string(i));
    }
}

ColumnLayout ColumnLayout::contiguous(const std::array<int, 3>& col_sizes) {
    ColumnLayout layout;
    for (int i = 0; i < 3; ++i) {
        int base = 0;
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < col_sizes[j]; ++k) layout.cells[i][j].push_back(base + k);
            base += col_sizes[j];
        }
    }
    return layout;
}

ColumnLayout ColumnLayout::trivial(const std::array<int, 3>& class_sizes) {
    ColumnLayout layout;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < class_sizes[i]; ++k) layout.cells[i][0].push_back(k);
    return layout;
}

void KhhhCopy::normalize() {
    for (auto& p : parts) std::sort(p.begin(), p.end());
}

bool is_valid_copy(const TripartiteGraph& g, const KhhhCopy& copy, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    size_t h = copy.parts[0].size();
    if (h == 0) return fail("empty parts");
    for (int i = 0; i < 3; ++i) {
        if (copy.parts[i].size() != h) return fail("parts of unequal size");
        for (int v : copy.parts[i])
            if (v < 0 || v >= g.class_size(i))
                return fail("vertex out of range: class " + std::to_string(i) + ", vertex " +
                            std::to_string(v));
        for (size_t k = 1; k < copy.parts[i].size(); ++k)
            if (copy.parts[i][k] == copy.parts[i][k - 1])
                return fail("repeated vertex in part " + std::to_string(i));
    }
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            for (int u : copy.parts[a])
                for (int v : copy.parts[b])
                    if (!g.has_edge(a, u, b, v))
                        return fail("missing edge (" + std::to_string(a) + "," + std::to_string(u) +
                                    ")-(" + std::to_string(b) + "," + std::to_string(v) + ")");
    return true;
}

TripartiteGraph build_graph(std::array<int, 3> sizes, const std::vector<EdgeSpec>& edges) {
    TripartiteGraph g(sizes);
    for (const auto& [ci, u, cj, v] : edges) g.add_edge(ci, u, cj, v);
    return g;
}

int min_pair_degree(const TripartiteGraph& g) {
    int best = -1;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            for (int u = 0; u < g.class_size(a); ++u) {
                int d = g.degree(a, u, b);
                if (best < 0 || d < best) best = d;
            }
        }
    return best < 0 ? 0 : best;
}

int64_t edges_between_sets(const TripartiteGraph& g, int ci, const std::vector<int>& X, int cj,
                           const std::vector<int>& Y) {
    Bitset ybits = Bitset::from_vector(g.class_size(cj), Y);
    int64_t e = 0;
    for (int u : X) e += g.neighbors(ci, u, cj).count_and(ybits);
    return e;
}

Rat pair_density(const TripartiteGraph& g, int ci, const std::vector<int>& X, int cj,
                 const std::vector<int>& Y) {
    if (ci == cj) throw Error("pair_density: sets must lie in distinct classes");
    if (X.empty() || Y.empty()) throw Error("pair_density: empty set");
    int64_t e = edges_between_sets(g, ci, X, cj, Y);
    return Rat(e, int64_t(X.size()) * int64_t(Y.size()));
}

}  // namespace tritile
