#include "tritile/constructions.hpp"

#include <climits>
#include <string>

#include "tritile/checks.hpp"
#include "tritile/rng.hpp"

namespace tritile {

// --- Q(n,d) gadgets ----------------------------------------------------------

QGadgetSpec find_q_gadget(int n, int d, const QSearchOptions& opts) {
    if (n < 1) throw ConstructionError("Q(n,d): n must be >= 1");
    QGadgetSpec spec;
    spec.n = n;
    spec.d = d;
    if (d <= 0) return spec;  // empty gadget convention
    std::string tag = "Q(" + std::to_string(n) + "," + std::to_string(d) + ")";
    if (d > n) throw GadgetInfeasible(tag + ": degree exceeds class size", true);

    std::vector<SidonSet> sets = enumerate_sidon_sets(n, d, opts.set_limit);
    bool sets_complete = sets.size() < opts.set_limit;
    if (sets.empty()) {
        if (!sets_complete) throw GadgetInfeasible(tag + ": Sidon enumeration budget hit", false);
        throw GadgetInfeasible(tag + ": no Sidon " + std::to_string(d) + "-set mod " +
                                   std::to_string(n),
                               true);
    }
    // deterministic lexicographic sweep over (S12, S23); for each, take the
    // lex-least Sidon set avoiding the sumset
    size_t tried = 0;
    for (const SidonSet& s12 : sets) {
        for (const SidonSet& s23 : sets) {
            if (++tried > opts.pair_budget)
                throw GadgetInfeasible(tag + ": pair budget " + std::to_string(opts.pair_budget) +
                                           " exhausted",
                                       false);
            std::vector<bool> forbidden(static_cast<size_t>(n), false);
            for (int a : s12.elements)
                for (int b : s23.elements) forbidden[static_cast<size_t>((a + b) % n)] = true;
            if (auto s13 = find_sidon_set_avoiding(n, d, forbidden)) {
                spec.diff_sets = {s12, s23, *s13};
                return spec;
            }
        }
    }
    throw GadgetInfeasible(tag + ": no gadget within " + std::to_string(sets.size()) +
                               " Sidon sets per side" + (sets_complete ? " (search complete)" : ""),
                           sets_complete);
}

void add_q_edges(TripartiteGraph& g, const QGadgetSpec& spec, std::array<int, 3> offsets) {
    if (spec.empty()) return;
    const auto& ds = *spec.diff_sets;
    add_cayley_edges(g, 0, offsets[0], 1, offsets[1], spec.n, ds[0]);  // S12
    add_cayley_edges(g, 1, offsets[1], 2, offsets[2], spec.n, ds[1]);  // S23
    add_cayley_edges(g, 0, offsets[0], 2, offsets[2], spec.n, ds[2]);  // S13
}

QGraph q_graph(int n, int d, const QSearchOptions& opts) {
    QGraph out;
    out.spec = find_q_gadget(n, d, opts);
    out.graph = TripartiteGraph({n, n, n});
    add_q_edges(out.graph, out.spec, {0, 0, 0});
    out.layout = ColumnLayout::trivial({n, n, n});

    std::string tag = "Q(" + std::to_string(n) + "," + std::to_string(d) + ")";
    int d_eff = d > 0 ? d : 0;
    std::string why;
    for (auto [a, b] : kClassPairs)
        if (!is_d_regular_pair(out.graph, a, b, d_eff, &why))
            throw ConstructionError(tag + " post-check failed (regularity): " + why);
    C4Result c4 = check_c4_free_all(out.graph);
    if (!c4.c4_free)
        throw ConstructionError(tag + " post-check failed: C4 between classes " +
                                std::to_string(c4.witness->class_a) + "," +
                                std::to_string(c4.witness->class_b));
    TriangleResult tri = check_triangle_free(out.graph);
    if (!tri.triangle_free)
        throw ConstructionError(tag + " post-check failed: triangle (" +
                                std::to_string(tri.witness[0]) + "," +
                                std::to_string(tri.witness[1]) + "," +
                                std::to_string(tri.witness[2]) + ")");
    return out;
}

// --- lower-bound graphs ------------------------------------------------------

namespace {

// shared skeleton: per-column gadgets + complete different-column cross-class edges
LbGraph build_column_graph(int h, int q, int r, std::array<int, 3> col_sizes,
                           std::array<int, 3> gadget_d, int declared, const char* name) {
    LbGraph out;
    out.h = h;
    out.q = q;
    out.r = r;
    out.column_sizes = col_sizes;
    out.declared_min_degree = declared;
    int N = col_sizes[0] + col_sizes[1] + col_sizes[2];
    out.graph = TripartiteGraph({N, N, N});
    out.layout = ColumnLayout::contiguous(col_sizes);

    std::array<int, 3> off{0, col_sizes[0], col_sizes[0] + col_sizes[1]};
    for (int j = 0; j < 3; ++j) {
        out.gadgets[static_cast<size_t>(j)] = find_q_gadget(col_sizes[static_cast<size_t>(j)],
                                                            gadget_d[static_cast<size_t>(j)]);
        add_q_edges(out.graph, out.gadgets[static_cast<size_t>(j)],
                    {off[static_cast<size_t>(j)], off[static_cast<size_t>(j)],
                     off[static_cast<size_t>(j)]});
    }
    for (auto [a, b] : kClassPairs)
        for (int u = 0; u < N; ++u) {
            int ju = out.layout.column_of(a, u);
            for (int v = 0; v < N; ++v)
                if (out.layout.column_of(b, v) != ju) out.graph.add_edge(a, u, b, v);
        }

    int computed = min_pair_degree(out.graph);
    if (computed != declared)
        throw ConstructionError(std::string(name) + ": min pair degree post-check failed, declared " +
                                std::to_string(declared) + " but computed " +
                                std::to_string(computed));
    return out;
}

}  // namespace

LbGraph lb0_graph(int h, int q) {
    if (h < 2 || q < 1) throw ConstructionError("lb0_graph requires h >= 2, q >= 1");
    std::array<int, 3> cols{q * h - 1, q * h, q * h + 1};
    std::array<int, 3> d{h - 3, h - 2, h - 1};
    return build_column_graph(h, q, 0, cols, d, 2 * q * h + h - 2, "lb0_graph");
}

LbGraph lb12_graph(int h, int q, int r, bool alternative_gadgets) {
    if (h < 2 || q < 1 || r < 0 || r > 2)
        throw ConstructionError("lb12_graph requires h >= 2, q >= 1, r in {0,1,2}");
    std::array<int, 3> cols{q * h + r * h - 1, q * h, q * h + 1};
    std::array<int, 3> d{r * h + h - 4, h - 3, h - 2};
    if (alternative_gadgets) d = {r * h + h - 3, h - 2, h - 2};
    LbGraph out = build_column_graph(h, q, r, cols, d, 2 * q * h + r * h + h - 3, "lb12_graph");
    return out;
}

LbGraph lbvexc_graph(int h, int q) {
    if (h < 2 || q < 1) throw ConstructionError("lbvexc_graph requires h >= 2, q >= 1");
    int nc = 2 * q * h + h;  // all nine cells this size
    int N = 3 * nc;
    LbGraph out;
    out.h = h;
    out.q = q;
    out.r = 0;
    out.column_sizes = {nc, nc, nc};
    out.declared_min_degree = (4 * q + 2) * h + h - 2;
    out.graph = TripartiteGraph({N, N, N});
    out.layout = ColumnLayout::contiguous(out.column_sizes);

    // column 0 carries Q(nc, h-2); columns 1 and 2 have no internal gadget
    out.gadgets[0] = find_q_gadget(nc, h - 2);
    add_q_edges(out.graph, out.gadgets[0], {0, 0, 0});
    out.gadgets[1] = QGadgetSpec{nc, 0, std::nullopt};
    out.gadgets[2] = QGadgetSpec{nc, 0, std::nullopt};

    std::array<int, 3> off{0, nc, 2 * nc};
    // complete pieces: column-0 vertices to every other column, and columns 1,2
    // internally complete across classes
    for (auto [a, b] : kClassPairs)
        for (int u = 0; u < N; ++u) {
            int ju = out.layout.column_of(a, u);
            for (int v = 0; v < N; ++v) {
                int jv = out.layout.column_of(b, v);
                bool complete = (ju != jv && (ju == 0 || jv == 0)) || (ju == jv && ju >= 1);
                if (complete) out.graph.add_edge(a, u, b, v);
            }
        }
    // six sparse cross pairs (A^(i)_1, A^(i')_2), i != i': (h-2)-regular C4-free
    if (h - 2 > 0) {
        std::vector<SidonSet> sets = enumerate_sidon_sets(nc, h - 2, 6);
        if (sets.empty())
            throw GadgetInfeasible("lbvexc_graph: no Sidon " + std::to_string(h - 2) +
                                       "-set mod " + std::to_string(nc) + " for cross pairs",
                                   true);
        size_t k = 0;
        for (int i = 0; i < 3; ++i)
            for (int ip = 0; ip < 3; ++ip) {
                if (ip == i) continue;
                const SidonSet& s = sets[k % sets.size()];
                out.cross_sets.push_back(s);
                // class i column 1  ->  class ip column 2
                if (i < ip)
                    add_cayley_edges(out.graph, i, off[1], ip, off[2], nc, s);
                else {
                    // add_edge is symmetric; orient from the lower class
                    for (int u = 0; u < nc; ++u)
                        for (int e : s.elements)
                            out.graph.add_edge(ip, off[2] + (u + e) % nc, i, off[1] + u);
                }
                ++k;
            }
    }

    int computed = min_pair_degree(out.graph);
    if (computed != out.declared_min_degree)
        throw ConstructionError("lbvexc_graph: min pair degree post-check failed, declared " +
                                std::to_string(out.declared_min_degree) + " but computed " +
                                std::to_string(computed));
    return out;
}

// --- Gamma_r and blow-ups ----------------------------------------------------

int GammaGraph::min_pair_degree() const {
    int best = INT_MAX;
    for (int ci = 0; ci < r; ++ci)
        for (int j = 0; j < r; ++j)
            for (int cj = 0; cj < r; ++cj) {
                if (cj == ci) continue;
                int deg = 0;
                for (int jp = 0; jp < r; ++jp)
                    if (adjacent(ci, j, cj, jp)) ++deg;
                best = std::min(best, deg);
            }
    return best;
}

GammaGraph gamma_r(int r) {
    if (r < 3) throw ConstructionError("gamma_r requires r >= 3");
    return GammaGraph{r};
}

BlowupGraph gamma3_blowup(int N) {
    if (N < 3 || N % 3 != 0) throw ConstructionError("gamma3_blowup: N must be a positive multiple of 3");
    int m = N / 3;
    BlowupGraph out;
    out.graph = TripartiteGraph({N, N, N});
    out.layout = ColumnLayout::contiguous({m, m, m});
    GammaGraph gamma = gamma_r(3);
    for (auto [a, b] : kClassPairs)
        for (int ju = 0; ju < 3; ++ju)
            for (int jv = 0; jv < 3; ++jv) {
                if (!gamma.adjacent(a, ju, b, jv)) continue;
                for (int u = ju * m; u < (ju + 1) * m; ++u)
                    for (int v = jv * m; v < (jv + 1) * m; ++v) out.graph.add_edge(a, u, b, v);
            }
    return out;
}

// --- random instances --------------------------------------------------------

TripartiteGraph random_min_degree_graph(int N, int target_min_degree, uint64_t seed) {
    if (N < 1) throw ConstructionError("random_min_degree_graph: N must be >= 1");
    if (target_min_degree > N)
        throw ConstructionError("random_min_degree_graph: target degree exceeds class size");
    TripartiteGraph g = TripartiteGraph::complete({N, N, N});
    std::vector<EdgeSpec> order;
    order.reserve(static_cast<size_t>(3) * N * N);
    for (auto [a, b] : kClassPairs)
        for (int u = 0; u < N; ++u)
            for (int v = 0; v < N; ++v) order.emplace_back(a, u, b, v);
    Rng rng(seed);
    rng.shuffle(order);
    for (auto [a, u, b, v] : order)
        if (g.degree(a, u, b) > target_min_degree && g.degree(b, v, a) > target_min_degree)
            g.remove_edge(a, u, b, v);
    return g;
}

TripartiteGraph random_tripartite(std::array<int, 3> sizes, double p, uint64_t seed) {
    TripartiteGraph g(sizes);
    Rng rng(seed);
    for (auto [a, b] : kClassPairs)
        for (int u = 0; u < sizes[static_cast<size_t>(a)]; ++u)
            for (int v = 0; v < sizes[static_cast<size_t>(b)]; ++v)
                if (rng.bernoulli(p)) g.add_edge(a, u, b, v);
    return g;
}

}  // namespace tritile
