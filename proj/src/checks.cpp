#include "tritile/checks.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tritile {

int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// --- C4 detection ------------------------------------------------------------

namespace {

// smallest (v,v2) completing a C4 with (u,u2), or nullopt
std::optional<std::pair<int, int>> c4_partner(const TripartiteGraph& g, int a, int b,
                                              int u, int u2) {
    const Bitset& nu = g.neighbors(a, u, b);
    const Bitset& nu2 = g.neighbors(a, u2, b);
    if (nu.count_and(nu2) < 2) return std::nullopt;
    Bitset common = nu;
    common &= nu2;
    int v = common.find_first();
    int v2 = common.find_next(v);
    return std::make_pair(v, v2);
}

// canonical witness among pairs with first vertex u, or nullopt
std::optional<C4Witness> c4_scan_row(const TripartiteGraph& g, int a, int b, int u) {
    int na = g.class_size(a);
    for (int u2 = u + 1; u2 < na; ++u2) {
        if (auto vv = c4_partner(g, a, b, u, u2)) {
            return C4Witness{a, b, u, u2, vv->first, vv->second};
        }
    }
    return std::nullopt;
}

}  // namespace

C4Result check_c4_free_serial(const TripartiteGraph& g, int a, int b) {
    int na = g.class_size(a);
    for (int u = 0; u < na; ++u) {
        if (auto w = c4_scan_row(g, a, b, u)) return {false, w};
    }
    return {true, std::nullopt};
}

C4Result check_c4_free_parallel(const TripartiteGraph& g, int a, int b) {
#ifndef _OPENMP
    return check_c4_free_serial(g, a, b);
#else
    int na = g.class_size(a);
    std::atomic<int> best_u{na};  // rows beyond the best hit can be skipped
    std::vector<std::optional<C4Witness>> hits(static_cast<size_t>(std::max(na, 1)));
#pragma omp parallel for schedule(dynamic, 4)
    for (int u = 0; u < na; ++u) {
        if (u > best_u.load(std::memory_order_relaxed)) continue;
        if (auto w = c4_scan_row(g, a, b, u)) {
            hits[static_cast<size_t>(u)] = w;
            int cur = best_u.load(std::memory_order_relaxed);
            while (u < cur && !best_u.compare_exchange_weak(cur, u)) {
            }
        }
    }
    for (int u = 0; u < na; ++u) {
        if (hits[static_cast<size_t>(u)]) return {false, hits[static_cast<size_t>(u)]};
    }
    return {true, std::nullopt};
#endif
}

C4Result check_c4_free(const TripartiteGraph& g, int a, int b) {
    if (worker_count() > 1 && g.class_size(a) >= 64) return check_c4_free_parallel(g, a, b);
    return check_c4_free_serial(g, a, b);
}

C4Result check_c4_free_all(const TripartiteGraph& g) {
    for (auto [a, b] : kClassPairs) {
        C4Result r = check_c4_free(g, a, b);
        if (!r.c4_free) return r;
    }
    return {true, std::nullopt};
}

// --- triangle detection ------------------------------------------------------

TriangleResult check_triangle_free(const TripartiteGraph& g) {
    int n0 = g.class_size(0);
    for (int u = 0; u < n0; ++u) {
        const Bitset& n01 = g.neighbors(0, u, 1);
        const Bitset& n02 = g.neighbors(0, u, 2);
        for (int v = n01.find_first(); v != Bitset::npos; v = n01.find_next(v)) {
            if (n02.count_and(g.neighbors(1, v, 2)) > 0) {
                Bitset common = n02;
                common &= g.neighbors(1, v, 2);
                return {false, {u, v, common.find_first()}};
            }
        }
    }
    return {true, {-1, -1, -1}};
}

TriangleResult check_triangle_free(const TripartiteGraph& g, const ColumnLayout& layout,
                                   int j) {
    assert(j >= 0 && j < 3);
    Bitset mask2(g.class_size(2));
    for (int w : layout.cells[2][j]) mask2.set(w);
    for (int u : layout.cells[0][j]) {
        const Bitset& n01 = g.neighbors(0, u, 1);
        for (int v : layout.cells[1][j]) {
            if (!n01.test(v)) continue;
            Bitset common = g.neighbors(0, u, 2);
            common &= g.neighbors(1, v, 2);
            common &= mask2;
            int w = common.find_first();
            if (w != Bitset::npos) return {false, {u, v, w}};
        }
    }
    return {true, {-1, -1, -1}};
}

// --- degree regularity -------------------------------------------------------

bool is_d_regular_pair(const TripartiteGraph& g, int a, int b, int d, std::string* why) {
    for (int u = 0; u < g.class_size(a); ++u) {
        int deg = g.degree(a, u, b);
        if (deg != d) {
            if (why)
                *why = "class " + std::to_string(a) + " vertex " + std::to_string(u) +
                       " has degree " + std::to_string(deg) + " to class " +
                       std::to_string(b) + ", expected " + std::to_string(d);
            return false;
        }
    }
    for (int v = 0; v < g.class_size(b); ++v) {
        int deg = g.degree(b, v, a);
        if (deg != d) {
            if (why)
                *why = "class " + std::to_string(b) + " vertex " + std::to_string(v) +
                       " has degree " + std::to_string(deg) + " to class " +
                       std::to_string(a) + ", expected " + std::to_string(d);
            return false;
        }
    }
    return true;
}

// --- K_{h,h,h} enumeration ---------------------------------------------------

namespace {

// lexicographic h-subsets of items; f returns false to stop early
template <class F>
bool for_each_subset(const std::vector<int>& items, int h, F&& f) {
    int n = static_cast<int>(items.size());
    if (h > n) return true;
    std::vector<int> idx(static_cast<size_t>(h));
    for (int i = 0; i < h; ++i) idx[static_cast<size_t>(i)] = i;
    std::vector<int> chosen(static_cast<size_t>(h));
    for (;;) {
        for (int i = 0; i < h; ++i)
            chosen[static_cast<size_t>(i)] = items[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        if (!f(chosen)) return false;
        int i = h - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - h + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<size_t>(i)];
        for (int k = i + 1; k < h; ++k)
            idx[static_cast<size_t>(k)] = idx[static_cast<size_t>(k - 1)] + 1;
    }
}

struct EnumCtx {
    const TripartiteGraph& g;
    int h;
    uint64_t budget;
    uint64_t tests = 0;
    bool tripped = false;
};

// all copies whose class-0 part is exactly S0, in canonical order
void expand_s0(EnumCtx& ctx, const std::vector<int>& S0, std::vector<KhhhCopy>& out) {
    const TripartiteGraph& g = ctx.g;
    int h = ctx.h;
    Bitset inter1(g.class_size(1));
    Bitset inter2(g.class_size(2));
    inter1.set_all();
    inter2.set_all();
    for (int u : S0) {
        inter1 &= g.neighbors(0, u, 1);
        inter2 &= g.neighbors(0, u, 2);
    }
    ctx.tests += static_cast<uint64_t>(h) * (g.class_size(1) + g.class_size(2));
    if (inter1.count() < h || inter2.count() < h) return;
    std::vector<int> cand1 = inter1.to_vector();
    for_each_subset(cand1, h, [&](const std::vector<int>& S1) {
        if (ctx.tests > ctx.budget) {
            ctx.tripped = true;
            return false;
        }
        Bitset i2 = inter2;
        for (int v : S1) i2 &= g.neighbors(1, v, 2);
        ctx.tests += static_cast<uint64_t>(h) * g.class_size(2);
        if (i2.count() < h) return true;
        std::vector<int> cand2 = i2.to_vector();
        for_each_subset(cand2, h, [&](const std::vector<int>& S2) {
            KhhhCopy copy;
            copy.parts[0] = S0;
            copy.parts[1] = S1;
            copy.parts[2] = S2;
            out.push_back(std::move(copy));
            return true;
        });
        return true;
    });
}

}  // namespace

EnumerationResult enumerate_khhh_serial(const TripartiteGraph& g, int h, uint64_t budget) {
    assert(h >= 1);
    EnumerationResult res;
    if (g.class_size(0) < h || g.class_size(1) < h || g.class_size(2) < h) return res;
    EnumCtx ctx{g, h, budget};
    std::vector<int> all0(static_cast<size_t>(g.class_size(0)));
    for (int i = 0; i < g.class_size(0); ++i) all0[static_cast<size_t>(i)] = i;
    for_each_subset(all0, h, [&](const std::vector<int>& S0) {
        if (ctx.tests > ctx.budget) {
            ctx.tripped = true;
            return false;
        }
        expand_s0(ctx, S0, res.copies);
        return !ctx.tripped;
    });
    res.complete = !ctx.tripped;
    res.membership_tests = ctx.tests;
    return res;
}

EnumerationResult enumerate_khhh_parallel(const TripartiteGraph& g, int h, uint64_t budget) {
#ifndef _OPENMP
    return enumerate_khhh_serial(g, h, budget);
#else
    assert(h >= 1);
    EnumerationResult res;
    if (g.class_size(0) < h || g.class_size(1) < h || g.class_size(2) < h) return res;
    int n0 = g.class_size(0);
    int n_first = n0 - h + 1;  // possible first elements of S0
    std::vector<std::vector<KhhhCopy>> out(static_cast<size_t>(n_first));
    std::atomic<uint64_t> total_tests{0};
    std::atomic<bool> stop{false};
#pragma omp parallel for schedule(dynamic)
    for (int e = 0; e < n_first; ++e) {
        if (stop.load(std::memory_order_relaxed)) continue;
        // subsets starting at e = {e} ∪ (h-1)-subsets of (e, n0)
        std::vector<int> tail;
        for (int i = e + 1; i < n0; ++i) tail.push_back(i);
        EnumCtx ctx{g, h, UINT64_MAX};
        std::vector<int> S0(static_cast<size_t>(h));
        S0[0] = e;
        auto run_one = [&](const std::vector<int>& rest) {
            for (int i = 0; i < h - 1; ++i) S0[static_cast<size_t>(i + 1)] = rest[static_cast<size_t>(i)];
            expand_s0(ctx, S0, out[static_cast<size_t>(e)]);
            return !stop.load(std::memory_order_relaxed);
        };
        if (h == 1) {
            expand_s0(ctx, S0, out[static_cast<size_t>(e)]);
        } else {
            for_each_subset(tail, h - 1, run_one);
        }
        uint64_t now = total_tests.fetch_add(ctx.tests) + ctx.tests;
        if (now > budget) stop.store(true, std::memory_order_relaxed);
    }
    res.membership_tests = total_tests.load();
    res.complete = !stop.load();
    if (!res.complete) {
        res.copies.clear();  // partial parallel output is not canonical; caller re-runs serial
        return res;
    }
    size_t total = 0;
    for (auto& v : out) total += v.size();
    res.copies.reserve(total);
    for (auto& v : out)
        for (auto& c : v) res.copies.push_back(std::move(c));
    return res;
#endif
}

EnumerationResult enumerate_khhh(const TripartiteGraph& g, int h, uint64_t budget) {
    if (worker_count() > 1 && g.class_size(0) >= 16) {
        EnumerationResult res = enumerate_khhh_parallel(g, h, budget);
        if (res.complete) return res;
        return enumerate_khhh_serial(g, h, budget);  // deterministic prefix
    }
    return enumerate_khhh_serial(g, h, budget);
}

// --- intersection shapes -----------------------------------------------------

std::string shape_kind_name(ShapeKind k) {
    switch (k) {
        case ShapeKind::EMPTY: return "EMPTY";
        case ShapeKind::WITHIN_ONE_CLASS: return "WITHIN_ONE_CLASS";
        case ShapeKind::STAR: return "STAR";
        case ShapeKind::OTHER: return "OTHER";
    }
    return "?";
}

IntersectionShape column_intersection_shape(const TripartiteGraph& g, const KhhhCopy& copy,
                                            const ColumnLayout& layout, int j) {
    IntersectionShape shape;
    std::array<std::vector<int>, 3> per_class;
    for (int i = 0; i < 3; ++i)
        for (int v : copy.parts[static_cast<size_t>(i)])
            if (layout.column_of(i, v) == j) {
                per_class[static_cast<size_t>(i)].push_back(v);
                shape.members.push_back(Vertex{i, v});
            }
    int classes_present = 0;
    for (int i = 0; i < 3; ++i)
        if (!per_class[static_cast<size_t>(i)].empty()) ++classes_present;

    if (classes_present == 0) {
        shape.kind = ShapeKind::EMPTY;
        return shape;
    }
    if (classes_present == 1) {
        shape.kind = ShapeKind::WITHIN_ONE_CLASS;
        for (int i = 0; i < 3; ++i)
            if (!per_class[static_cast<size_t>(i)].empty()) shape.cls = i;
        return shape;
    }
    if (classes_present == 3) {
        shape.kind = ShapeKind::OTHER;
        return shape;
    }
    // two classes: a star needs a singleton center adjacent to every vertex on
    // the other side (all members lie in column j, so graph edges are induced)
    int p = -1, r = -1;
    for (int i = 0; i < 3; ++i)
        if (!per_class[static_cast<size_t>(i)].empty()) (p < 0 ? p : r) = i;
    auto star_with_center = [&](int center_cls, int leaf_cls) -> bool {
        if (per_class[static_cast<size_t>(center_cls)].size() != 1) return false;
        int c = per_class[static_cast<size_t>(center_cls)][0];
        for (int v : per_class[static_cast<size_t>(leaf_cls)])
            if (!g.has_edge(center_cls, c, leaf_cls, v)) return false;
        return true;
    };
    if (star_with_center(p, r)) {
        shape.kind = ShapeKind::STAR;
        shape.center = Vertex{p, per_class[static_cast<size_t>(p)][0]};
        shape.cls = r;
        return shape;
    }
    if (star_with_center(r, p)) {
        shape.kind = ShapeKind::STAR;
        shape.center = Vertex{r, per_class[static_cast<size_t>(r)][0]};
        shape.cls = p;
        return shape;
    }
    shape.kind = ShapeKind::OTHER;
    return shape;
}

// --- tiling certificates -----------------------------------------------------

TilingCheckResult check_tiling_certificate(const TripartiteGraph& g, int h,
                                           const std::vector<KhhhCopy>& copies) {
    if (h < 1) return {false, TilingViolation{"bad h", "h must be >= 1"}};
    std::array<Bitset, 3> covered;
    for (int i = 0; i < 3; ++i) covered[static_cast<size_t>(i)] = Bitset(g.class_size(i));
    for (size_t c = 0; c < copies.size(); ++c) {
        const KhhhCopy& copy = copies[c];
        if (copy.h() != h)
            return {false, TilingViolation{"wrong h", "copy " + std::to_string(c) +
                                                          " has part size " +
                                                          std::to_string(copy.h()) +
                                                          ", expected " + std::to_string(h)}};
        std::string why;
        if (!is_valid_copy(g, copy, &why))
            return {false, TilingViolation{"invalid copy", "copy " + std::to_string(c) + ": " + why}};
        for (int i = 0; i < 3; ++i)
            for (int v : copy.parts[static_cast<size_t>(i)]) {
                if (covered[static_cast<size_t>(i)].test(v))
                    return {false, TilingViolation{"not disjoint",
                                                   "vertex (class " + std::to_string(i) + ", " +
                                                       std::to_string(v) + ") covered twice, second in copy " +
                                                       std::to_string(c)}};
                covered[static_cast<size_t>(i)].set(v);
            }
    }
    for (int i = 0; i < 3; ++i) {
        if (covered[static_cast<size_t>(i)].count() != g.class_size(i)) {
            Bitset missing(g.class_size(i));
            missing.set_all();
            missing -= covered[static_cast<size_t>(i)];
            return {false, TilingViolation{"incomplete cover",
                                           "vertex (class " + std::to_string(i) + ", " +
                                               std::to_string(missing.find_first()) + ") uncovered"}};
        }
    }
    return {true, std::nullopt};
}

// --- very extreme degree condition -------------------------------------------

namespace {

// Gamma_3 adjacency between cells (ci, ji) and (cj, jj) of a 3x3 layout
bool gamma3_cells_adjacent(int ci, int ji, int cj, int jj) {
    if (ci == cj) return false;
    if (ji != jj) return ji == 0 || jj == 0;
    return ji >= 1;
}

}  // namespace

VexcResult check_vexc_condition(const TripartiteGraph& g, const ColumnLayout& layout, int h) {
    VexcResult res;
    res.bound = 3 * h - 3;
    std::array<std::array<Bitset, 3>, 3> mask;  // mask[class][col]
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            mask[static_cast<size_t>(i)][static_cast<size_t>(j)] = Bitset(g.class_size(i));
            for (int v : layout.cells[static_cast<size_t>(i)][static_cast<size_t>(j)])
                mask[static_cast<size_t>(i)][static_cast<size_t>(j)].set(v);
        }
    res.max_nonadjacency = 0;
    for (int ci = 0; ci < 3; ++ci)
        for (int ji = 0; ji < 3; ++ji)
            for (int cj = 0; cj < 3; ++cj)
                for (int jj = 0; jj < 3; ++jj) {
                    if (!gamma3_cells_adjacent(ci, ji, cj, jj)) continue;
                    int target = static_cast<int>(
                        layout.cells[static_cast<size_t>(cj)][static_cast<size_t>(jj)].size());
                    for (int u : layout.cells[static_cast<size_t>(ci)][static_cast<size_t>(ji)]) {
                        int adj = g.neighbors(ci, u, cj).count_and(
                            mask[static_cast<size_t>(cj)][static_cast<size_t>(jj)]);
                        int nonadj = target - adj;
                        if (nonadj > res.max_nonadjacency) {
                            res.max_nonadjacency = nonadj;
                            res.u = Vertex{ci, u};
                            res.from_col = ji;
                            res.to_class = cj;
                            res.to_col = jj;
                        }
                    }
                }
    res.pass = res.max_nonadjacency <= res.bound;
    return res;
}

}  // namespace tritile
