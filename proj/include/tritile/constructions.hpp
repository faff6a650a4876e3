// constructions.hpp - generators for every graph family the project studies:
// Q(n,d) gadgets, the three lower-bound graphs, Gamma_r and its blow-up,
// and seeded random degree-constrained instances.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tritile/graph.hpp"
#include "tritile/sidon.hpp"

namespace tritile {

// gadget search could not realize the requested parameters
struct GadgetInfeasible : ConstructionError {
    GadgetInfeasible(const std::string& what, bool exhausted_)
        : ConstructionError(what), search_exhausted(exhausted_) {}
    bool search_exhausted;  // true: no gadget exists in this encoding; false: budget hit
};

// Balanced tripartite gadget on 3n vertices whose natural bipartite subgraphs
// are d-regular C4-free Cayley graphs of three Sidon difference sets with
// (S01 + S12) disjoint from S02, which rules out triangles. d <= 0 means the
// empty gadget.
struct QGadgetSpec {
    int n = 1;
    int d = 0;
    // S01, S12, S02 when d > 0
    std::optional<std::array<SidonSet, 3>> diff_sets;

    bool empty() const { return d <= 0; }
};

struct QSearchOptions {
    size_t set_limit = 4096;       // Sidon sets enumerated per side
    size_t pair_budget = 200000;   // (S01,S12) pairs tried before giving up
};

// Deterministic lexicographic search for the difference sets; throws
// GadgetInfeasible when none is found.
QGadgetSpec find_q_gadget(int n, int d, const QSearchOptions& opts = {});

// lay the gadget's Cayley edges down at the given per-class offsets
void add_q_edges(TripartiteGraph& g, const QGadgetSpec& spec, std::array<int, 3> offsets);

struct QGraph {
    TripartiteGraph graph;
    ColumnLayout layout;  // trivial: everything in column 0
    QGadgetSpec spec;
};

// Q(n,d): builds the gadget and verifies d-regularity, C4-freeness and
// triangle-freeness by brute force before returning.
QGraph q_graph(int n, int d, const QSearchOptions& opts = {});

// --- lower-bound graphs ------------------------------------------------------

struct LbGraph {
    TripartiteGraph graph;
    ColumnLayout layout;
    int h = 0, q = 0, r = 0;
    int declared_min_degree = 0;
    std::array<int, 3> column_sizes{};       // per column (same for all classes)
    std::array<QGadgetSpec, 3> gadgets{};    // per column
    std::vector<SidonSet> cross_sets;        // 6 cross-pair sets (vexc family only)
};

// N = 3qh; columns (qh-1, qh, qh+1) carry Q(.,h-3), Q(.,h-2), Q(.,h-1);
// min pair degree 2qh + h - 2 (post-checked).
LbGraph lb0_graph(int h, int q);

// N = (3q+r)h; columns (qh+rh-1, qh, qh+1) carry Q(.,rh+h-4), Q(.,h-3),
// Q(.,h-2); min pair degree 2qh + rh + h - 3 (post-checked).
// `alternative_gadgets` swaps in the denser variant Q(.,rh+h-3)/Q(.,h-2) for
// columns 0 and 1; the minimum degree stays the same.
LbGraph lb12_graph(int h, int q, int r, bool alternative_gadgets = false);

// N = (6q+3)h; all nine cells of size 2qh+h; column 0 is Q(2qh+h,h-2),
// columns 1 and 2 are internally complete, column-0 vertices see everything
// outside their own column, and the six cross (col1,col2) pairs are
// (h-2)-regular C4-free. Min pair degree (4q+2)h + h - 2 (post-checked).
LbGraph lbvexc_graph(int h, int q);

// --- Gamma_r and blow-ups ----------------------------------------------------

// r classes of r vertices each; adjacency h_{i,j} ~ h_{i',j'} iff i != i' and
// either (j != j' and one of them is among the first r-2 columns) or
// (j == j' and the column is one of the last two). Min pair degree r-1.
struct GammaGraph {
    int r = 3;

    bool adjacent(int ci, int col_i, int cj, int col_j) const {
        if (ci == cj) return false;
        if (col_i != col_j) return col_i <= r - 3 || col_j <= r - 3;
        return col_i >= r - 2;
    }
    int min_pair_degree() const;
};

GammaGraph gamma_r(int r);  // throws unless r >= 3

struct BlowupGraph {
    TripartiteGraph graph;
    ColumnLayout layout;  // cells are the blown-up Gamma_3 vertices
};

// each Gamma_3 edge replaced by K_{N/3,N/3}; requires 3 | N
BlowupGraph gamma3_blowup(int N);

// --- random instances --------------------------------------------------------

// Start from the complete balanced tripartite graph and remove cross edges in
// seeded random order, never letting any per-class degree drop below
// `target_min_degree`. Reproducible across platforms.
TripartiteGraph random_min_degree_graph(int N, int target_min_degree, uint64_t seed);

// iid cross edges with probability p (test/experiment plumbing)
TripartiteGraph random_tripartite(std::array<int, 3> sizes, double p, uint64_t seed);

}  // namespace tritile
