// solver.hpp - exact K_{h,h,h}-factor decision (dancing-links exact cover),
// maximum partial tilings, profile-counting refutations, and the two proof
// search procedures (almost-covering augmentation, reachability chains).
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tritile/checks.hpp"
#include "tritile/graph.hpp"
#include "tritile/rational.hpp"

namespace tritile {

enum class SolveStatus { FACTOR_FOUND, NO_FACTOR, INCONCLUSIVE };

std::string solve_status_name(SolveStatus s);

struct SolveBudget {
    uint64_t enum_tests = kDefaultEnumBudget;  // adjacency probes in enumeration
    uint64_t nodes = 50'000'000;               // search tree nodes
};

struct TilingCertificate {
    int h = 1;
    std::vector<KhhhCopy> copies;  // canonical order
};

// proof that the exact-cover search space was exhausted
struct SearchExhausted {
    uint64_t nodes = 0;       // search tree nodes visited
    uint64_t copy_count = 0;  // rows of the exact-cover instance
};

struct DecisionResult {
    SolveStatus status = SolveStatus::INCONCLUSIVE;
    std::optional<TilingCertificate> tiling;    // FACTOR_FOUND
    std::optional<SearchExhausted> exhaustion;  // NO_FACTOR
    std::string reason;                         // INCONCLUSIVE
    uint64_t nodes = 0;
    uint64_t enum_tests = 0;
};

// Sound and complete within budget: FACTOR_FOUND certificates validate, and
// NO_FACTOR is only reported after full exhaustion. Budget overruns yield
// INCONCLUSIVE, never a false NO. Requires h | class size (all classes).
DecisionResult exact_factor_decision(const TripartiteGraph& g, int h,
                                     const SolveBudget& budget = {});

// --- maximum partial tiling ----------------------------------------------------

struct MaxTilingResult {
    std::vector<KhhhCopy> tiling;  // largest found, canonical order
    bool exact = false;            // branch-and-bound closed the gap
    uint64_t nodes = 0;
    std::string note;              // why not exact, when applicable
};

MaxTilingResult max_tiling(const TripartiteGraph& g, int h, const SolveBudget& budget = {});

// --- profile-counting refutation -----------------------------------------------

// profile[i][j] = |copy ∩ A^(i)_j|; every row sums to h
struct ColumnProfile {
    std::array<std::array<int, 3>, 3> cell{};
    friend auto operator<=>(const ColumnProfile&, const ColumnProfile&) = default;
};

ColumnProfile profile_of(const KhhhCopy& copy, const ColumnLayout& layout);

struct ProfileInfeasible {
    std::string layout_id;  // fingerprint of the layout the profiles refer to
    int h = 1;
    int total_copies = 0;                         // N/h, the factor size
    std::array<std::array<int, 3>, 3> capacity{};  // |A^(i)_j|
    std::vector<ColumnProfile> profiles;           // realized profiles, sorted
    std::vector<int> variable_bounds;              // exhausted range [0,b] per profile
    uint64_t nodes = 0;                            // feasibility search nodes
};

struct RefutationOutcome {
    SolveStatus status = SolveStatus::INCONCLUSIVE;  // NO_FACTOR | INCONCLUSIVE
    std::optional<ProfileInfeasible> cert;
    // when the relaxation is feasible: one solution (copy count per profile)
    std::optional<std::vector<int>> feasible_counts;
    std::string reason;
    uint64_t enum_tests = 0;
};

// Computes the profiles realized by actual copies, then decides integer
// feasibility of { x_p >= 0 : sum x_p = N/h, sum x_p p[i][j] = |A^(i)_j| }.
// Infeasible => no factor exists (sound). Feasible => INCONCLUSIVE (the
// relaxation ignores disjointness).
RefutationOutcome profile_counting_refutation(const TripartiteGraph& g, int h,
                                              const ColumnLayout& layout,
                                              const SolveBudget& budget = {});

// Independent certificate re-check: re-enumerates profiles from scratch
// (serial), verifies the certificate's profile list is a superset of the
// realized ones, and re-establishes infeasibility by plain bounded
// composition enumeration (no shared code with the refuter's search).
bool recheck_profile_certificate(const TripartiteGraph& g, const ColumnLayout& layout,
                                 const ProfileInfeasible& cert, std::string* why = nullptr);

std::string layout_fingerprint(const ColumnLayout& layout);

// --- almost-covering augmentation ----------------------------------------------

struct SparseHint {
    std::array<std::vector<int>, 3> sets;  // one per class, each of size floor(M/3)
    std::array<Rat, 3> densities;          // d(S0,S1), d(S0,S2), d(S1,S2)
};

struct AugmentResult {
    bool improved = false;
    std::vector<KhhhCopy> tiling;  // the larger tiling when improved
    int added = 0;                 // |T' \ T|
    int removed = 0;               // |T \ T'|
    bool lemma_hypothesis_satisfied = false;  // |T| < M - 3 held on entry
    bool search_complete = true;              // false iff the node budget tripped
    std::optional<SparseHint> hint;           // on failure: a density hint, not a proof
    uint64_t nodes = 0;
};

// Bounded local search: remove up to swap_budget-1 triangles, exactly re-tile
// the freed + uncovered vertices with one more triangle than was removed.
// Guarantees |T' \ T| <= swap_budget and disjointness on success.
AugmentResult augment_tiling(const TripartiteGraph& g, const std::vector<KhhhCopy>& tiling,
                             int swap_budget = 15, const SolveBudget& budget = {});

// --- reachability chains --------------------------------------------------------

struct ReachResult {
    bool reachable = false;
    bool degenerate = false;       // x == y, empty chain (k = 0)
    int k = 0;                     // chain has 2k triangles
    std::vector<KhhhCopy> chain;   // T_1..T_2k as h=1 copies
};

// Finds a chain T_1..T_2k (k <= max_k) per the reachability definition:
// x = T_1 and y = T_2k in their own class, consecutive odd/even triangles
// share both other-class vertices, consecutive even/odd share the own-class
// vertex. Breadth-first over k; the returned chain is re-validated.
ReachResult reachability_chain(const TripartiteGraph& g, Vertex x, Vertex y, int max_k = 2);

// chain validity per the definition (exposed for tests and re-validation)
bool chain_is_valid(const TripartiteGraph& g, Vertex x, Vertex y,
                    const std::vector<KhhhCopy>& chain, std::string* why = nullptr);

}  // namespace tritile
