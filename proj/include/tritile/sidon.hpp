// sidon.hpp - Sidon sets over Z_n and the C4-free bipartite Cayley graphs
// they generate.
#pragma once

#include <optional>
#include <vector>

#include "tritile/graph.hpp"

namespace tritile {

// Subset of Z_n with all pairwise differences distinct. The Cayley bipartite
// graph of such a set is |S|-regular and C4-free.
struct SidonSet {
    int modulus = 1;
    std::vector<int> elements;  // sorted residues

    int degree() const { return int(elements.size()); }
    bool operator==(const SidonSet&) const = default;
};

// brute check: all ordered differences a-b (a != b) distinct mod n
bool is_sidon(int n, const std::vector<int>& elements);

// Lexicographically-least Sidon d-set in Z_n, by deterministic backtracking.
// The search is complete: nullopt means no Sidon d-set exists in Z_n.
std::optional<SidonSet> find_sidon_set(int n, int d);

// All Sidon d-sets in Z_n in lexicographic order, capped at `limit`.
std::vector<SidonSet> enumerate_sidon_sets(int n, int d, size_t limit);

// Lexicographically-least Sidon d-set avoiding `forbidden` residues entirely.
std::optional<SidonSet> find_sidon_set_avoiding(int n, int d, const std::vector<bool>& forbidden);

// Bipartite Cayley graph on Z_n + Z_n with u ~ v iff v-u in S, returned as a
// pair view (classes 0 and 1 of size n, class 2 empty). Rejects non-Sidon S.
TripartiteGraph sidon_bipartite(int n, const SidonSet& s);

// add Cayley edges (ci,u_off+u) ~ (cj,v_off+v) for v-u in S
void add_cayley_edges(TripartiteGraph& g, int ci, int u_off, int cj, int v_off, int n,
                      const SidonSet& s);

}  // namespace tritile
