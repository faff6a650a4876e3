// checks.hpp - brute-force verifiers for the structural claims the proofs
// rest on: C4-freeness, triangle-freeness, degree regularity, K_{h,h,h}
// enumeration, intersection-shape classification, certificate validation.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tritile/graph.hpp"

namespace tritile {

// number of workers the parallel kernels will use (1 when built without OpenMP)
int worker_count();

// --- C4 detection ------------------------------------------------------------

struct C4Witness {
    int class_a = -1, class_b = -1;
    int u = -1, u2 = -1;  // in class_a, u < u2
    int v = -1, v2 = -1;  // in class_b, v < v2, all four edges present
};

struct C4Result {
    bool c4_free = true;
    std::optional<C4Witness> witness;  // canonical: lexicographically first
};

// exhaustive scan over same-side pairs counting common neighborhoods >= 2
C4Result check_c4_free_serial(const TripartiteGraph& g, int a, int b);
C4Result check_c4_free_parallel(const TripartiteGraph& g, int a, int b);
C4Result check_c4_free(const TripartiteGraph& g, int a, int b);  // dispatches

// all three class pairs in order (0,1), (0,2), (1,2); first witness wins
C4Result check_c4_free_all(const TripartiteGraph& g);

// --- triangle detection ------------------------------------------------------

struct TriangleResult {
    bool triangle_free = true;
    // witness vertex index per class when !triangle_free
    std::array<int, 3> witness{-1, -1, -1};
};

TriangleResult check_triangle_free(const TripartiteGraph& g);
// restricted to column j's induced subgraph
TriangleResult check_triangle_free(const TripartiteGraph& g, const ColumnLayout& layout, int j);

// --- degree regularity -------------------------------------------------------

// every vertex of class a has exactly d neighbors in class b and vice versa
bool is_d_regular_pair(const TripartiteGraph& g, int a, int b, int d,
                       std::string* why = nullptr);

// --- K_{h,h,h} enumeration ---------------------------------------------------

struct EnumerationResult {
    std::vector<KhhhCopy> copies;     // canonical order (lex on sorted parts)
    bool complete = true;             // false iff the membership-test budget tripped
    uint64_t membership_tests = 0;    // adjacency probes spent
};

inline constexpr uint64_t kDefaultEnumBudget = 100'000'000;

EnumerationResult enumerate_khhh_serial(const TripartiteGraph& g, int h,
                                        uint64_t budget = kDefaultEnumBudget);
EnumerationResult enumerate_khhh_parallel(const TripartiteGraph& g, int h,
                                          uint64_t budget = kDefaultEnumBudget);
// parallel first; on budget overrun re-runs serial so partial output is the
// deterministic canonical prefix
EnumerationResult enumerate_khhh(const TripartiteGraph& g, int h,
                                 uint64_t budget = kDefaultEnumBudget);

// --- intersection shapes -----------------------------------------------------

enum class ShapeKind { EMPTY, WITHIN_ONE_CLASS, STAR, OTHER };

std::string shape_kind_name(ShapeKind k);

struct IntersectionShape {
    ShapeKind kind = ShapeKind::EMPTY;
    int cls = -1;                   // WITHIN_ONE_CLASS: the class index
    std::optional<Vertex> center;   // STAR: the center
    std::vector<Vertex> members;    // copy ∩ column j, sorted
};

// classifies copy ∩ column j using only edges with both ends inside column j
IntersectionShape column_intersection_shape(const TripartiteGraph& g, const KhhhCopy& copy,
                                            const ColumnLayout& layout, int j);

// --- tiling certificates -----------------------------------------------------

struct TilingViolation {
    std::string condition;  // "invalid copy" | "not disjoint" | "incomplete cover" | ...
    std::string detail;
};

struct TilingCheckResult {
    bool pass = true;
    std::optional<TilingViolation> violation;  // first violated condition
};

// copies must be valid, pairwise vertex-disjoint, and cover all 3N vertices
TilingCheckResult check_tiling_certificate(const TripartiteGraph& g, int h,
                                           const std::vector<KhhhCopy>& copies);

// --- very extreme degree condition -------------------------------------------

struct VexcResult {
    bool pass = true;
    int bound = 0;             // allowed nonadjacency, 3h-3
    int max_nonadjacency = 0;  // worst value seen over all Gamma_3-edge cell pairs
    // worst offender: vertex u in cell (ci,cj), counted against cell (di,dj)
    Vertex u{};
    int from_col = -1, to_class = -1, to_col = -1;
};

// every vertex is nonadjacent to at most 3h-3 vertices of each cell its own
// cell sees along a Gamma_3 edge
VexcResult check_vexc_condition(const TripartiteGraph& g, const ColumnLayout& layout, int h);

}  // namespace tritile
