#include "tritile/solver.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <cstdio>

namespace tritile {

std::string solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::FACTOR_FOUND: return "FACTOR_FOUND";
        case SolveStatus::NO_FACTOR: return "NO_FACTOR";
        case SolveStatus::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "?";
}

// --- dancing links exact cover -------------------------------------------------

namespace {

// Knuth's algorithm X on a doubly-linked sparse matrix. Columns are vertices,
// rows are copies; column choice is minimum-size with first-in-list tie-break,
// rows are tried in insertion (canonical) order, so the search is deterministic.
class Dlx {
public:
    explicit Dlx(int n_cols) : ncols_(n_cols), root_(n_cols) {
        int total = n_cols + 1;
        L_.resize(total);
        R_.resize(total);
        U_.resize(total);
        D_.resize(total);
        col_.resize(total);
        rowid_.assign(total, -1);
        sz_.assign(n_cols, 0);
        for (int i = 0; i <= n_cols; ++i) {
            L_[i] = i == 0 ? root_ : i - 1;
            R_[i] = i == root_ ? 0 : i + 1;
            U_[i] = D_[i] = i;
            col_[i] = i;
        }
        if (n_cols == 0) L_[root_] = R_[root_] = root_;
    }

    void add_row(int row_id, const std::vector<int>& cols) {
        assert(!cols.empty());
        int first = -1, prev = -1;
        for (int c : cols) {
            assert(c >= 0 && c < ncols_);
            int idx = static_cast<int>(L_.size());
            L_.push_back(0);
            R_.push_back(0);
            U_.push_back(U_[c]);
            D_.push_back(c);
            col_.push_back(c);
            rowid_.push_back(row_id);
            D_[U_[c]] = idx;
            U_[c] = idx;
            ++sz_[c];
            if (first < 0) {
                first = idx;
                L_[idx] = R_[idx] = idx;
            } else {
                L_[idx] = prev;
                R_[idx] = R_[prev];
                L_[R_[prev]] = idx;
                R_[prev] = idx;
            }
            prev = idx;
        }
    }

    enum class Outcome { SOLVED, EXHAUSTED, BUDGET };

    Outcome solve(uint64_t node_budget, std::vector<int>& solution_rows, uint64_t& nodes) {
        budget_ = node_budget;
        nodes_ = 0;
        hit_ = false;
        solution_.clear();
        bool found = search();
        nodes = nodes_;
        if (found) {
            solution_rows = solution_;
            return Outcome::SOLVED;
        }
        return hit_ ? Outcome::BUDGET : Outcome::EXHAUSTED;
    }

private:
    void cover(int c) {
        R_[L_[c]] = R_[c];
        L_[R_[c]] = L_[c];
        for (int i = D_[c]; i != c; i = D_[i])
            for (int j = R_[i]; j != i; j = R_[j]) {
                U_[D_[j]] = U_[j];
                D_[U_[j]] = D_[j];
                --sz_[col_[j]];
            }
    }
    void uncover(int c) {
        for (int i = U_[c]; i != c; i = U_[i])
            for (int j = L_[i]; j != i; j = L_[j]) {
                ++sz_[col_[j]];
                U_[D_[j]] = j;
                D_[U_[j]] = j;
            }
        R_[L_[c]] = c;
        L_[R_[c]] = c;
    }

    bool search() {
        if (nodes_ >= budget_) {
            hit_ = true;
            return false;
        }
        ++nodes_;
        if (R_[root_] == root_) return true;
        int best = -1, best_sz = INT_MAX;
        for (int c = R_[root_]; c != root_; c = R_[c])
            if (sz_[c] < best_sz) {
                best_sz = sz_[c];
                best = c;
                if (best_sz == 0) break;
            }
        if (best_sz == 0) return false;  // some vertex has no remaining compatible copy
        cover(best);
        for (int r = D_[best]; r != best; r = D_[r]) {
            solution_.push_back(rowid_[r]);
            for (int j = R_[r]; j != r; j = R_[j]) cover(col_[j]);
            if (search()) return true;
            for (int j = L_[r]; j != r; j = L_[j]) uncover(col_[j]);
            solution_.pop_back();
            if (hit_) break;
        }
        uncover(best);
        return false;
    }

    int ncols_, root_;
    std::vector<int> L_, R_, U_, D_, col_, rowid_, sz_;
    std::vector<int> solution_;
    uint64_t budget_ = 0, nodes_ = 0;
    bool hit_ = false;
};

}  // namespace

DecisionResult exact_factor_decision(const TripartiteGraph& g, int h, const SolveBudget& budget) {
    if (h < 1) throw Error("exact_factor_decision: h must be >= 1");
    for (int i = 0; i < 3; ++i)
        if (g.class_size(i) % h != 0)
            throw Error("exact_factor_decision: h must divide every class size");

    DecisionResult res;
    EnumerationResult en = enumerate_khhh(g, h, budget.enum_tests);
    res.enum_tests = en.membership_tests;
    if (!en.complete) {
        res.status = SolveStatus::INCONCLUSIVE;
        res.reason = "enumeration budget exceeded";
        return res;
    }

    std::array<int, 3> off{0, g.class_size(0), g.class_size(0) + g.class_size(1)};
    int n_cols = g.total_vertices();
    Dlx dlx(n_cols);
    for (size_t r = 0; r < en.copies.size(); ++r) {
        std::vector<int> cols;
        cols.reserve(static_cast<size_t>(3) * h);
        for (int i = 0; i < 3; ++i)
            for (int v : en.copies[r].parts[static_cast<size_t>(i)])
                cols.push_back(off[static_cast<size_t>(i)] + v);
        dlx.add_row(static_cast<int>(r), cols);
    }

    std::vector<int> rows;
    Dlx::Outcome out = dlx.solve(budget.nodes, rows, res.nodes);
    switch (out) {
        case Dlx::Outcome::SOLVED: {
            TilingCertificate cert;
            cert.h = h;
            for (int r : rows) cert.copies.push_back(en.copies[static_cast<size_t>(r)]);
            std::sort(cert.copies.begin(), cert.copies.end());
            TilingCheckResult chk = check_tiling_certificate(g, h, cert.copies);
            if (!chk.pass)
                throw Error("internal: factor certificate failed validation: " +
                            chk.violation->condition);
            res.status = SolveStatus::FACTOR_FOUND;
            res.tiling = std::move(cert);
            return res;
        }
        case Dlx::Outcome::EXHAUSTED:
            res.status = SolveStatus::NO_FACTOR;
            res.exhaustion = SearchExhausted{res.nodes, en.copies.size()};
            return res;
        case Dlx::Outcome::BUDGET:
            res.status = SolveStatus::INCONCLUSIVE;
            res.reason = "node budget exceeded";
            return res;
    }
    return res;
}

// --- maximum partial tiling ------------------------------------------------------

namespace {

struct MaxTilingSearch {
    const TripartiteGraph& g;
    int h;
    const std::vector<KhhhCopy>& pool;
    std::array<std::vector<Bitset>, 3> copy_bits;  // per class, per copy
    std::vector<std::vector<int>> containing;      // flat vertex id -> copy ids
    std::array<int, 3> off;
    std::array<Bitset, 3> covered, excluded;
    std::vector<int> current, best;
    uint64_t nodes = 0, budget = 0;
    bool hit = false;

    MaxTilingSearch(const TripartiteGraph& g_, int h_, const std::vector<KhhhCopy>& pool_)
        : g(g_), h(h_), pool(pool_) {
        off = {0, g.class_size(0), g.class_size(0) + g.class_size(1)};
        containing.assign(static_cast<size_t>(g.total_vertices()), {});
        for (int i = 0; i < 3; ++i) {
            covered[static_cast<size_t>(i)] = Bitset(g.class_size(i));
            excluded[static_cast<size_t>(i)] = Bitset(g.class_size(i));
            copy_bits[static_cast<size_t>(i)].reserve(pool.size());
        }
        for (size_t c = 0; c < pool.size(); ++c)
            for (int i = 0; i < 3; ++i) {
                Bitset b(g.class_size(i));
                for (int v : pool[c].parts[static_cast<size_t>(i)]) {
                    b.set(v);
                    containing[static_cast<size_t>(off[static_cast<size_t>(i)] + v)].push_back(
                        static_cast<int>(c));
                }
                copy_bits[static_cast<size_t>(i)].push_back(std::move(b));
            }
    }

    // first vertex neither covered nor excluded, class-major order; {-1,-1} if none
    Vertex pivot() const {
        for (int i = 0; i < 3; ++i) {
            Bitset free(g.class_size(i));
            free.set_all();
            free -= covered[static_cast<size_t>(i)];
            free -= excluded[static_cast<size_t>(i)];
            int v = free.find_first();
            if (v != Bitset::npos) return {i, v};
        }
        return {-1, -1};
    }

    bool copy_fits(int c) const {
        for (int i = 0; i < 3; ++i) {
            const Bitset& b = copy_bits[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (covered[static_cast<size_t>(i)].count_and(b) != 0) return false;
            if (excluded[static_cast<size_t>(i)].count_and(b) != 0) return false;
        }
        return true;
    }

    void dfs() {
        if (nodes >= budget) {
            hit = true;
            return;
        }
        ++nodes;
        if (current.size() > best.size()) best = current;
        int bound = INT_MAX;
        for (int i = 0; i < 3; ++i) {
            int avail = g.class_size(i) - covered[static_cast<size_t>(i)].count() -
                        excluded[static_cast<size_t>(i)].count();
            bound = std::min(bound, avail / h);
        }
        if (current.size() + static_cast<size_t>(bound) <= best.size()) return;
        Vertex p = pivot();
        if (p.cls < 0) return;
        for (int c : containing[static_cast<size_t>(off[static_cast<size_t>(p.cls)] + p.idx)]) {
            if (!copy_fits(c)) continue;
            for (int i = 0; i < 3; ++i)
                covered[static_cast<size_t>(i)] |=
                    copy_bits[static_cast<size_t>(i)][static_cast<size_t>(c)];
            current.push_back(c);
            dfs();
            current.pop_back();
            for (int i = 0; i < 3; ++i)
                covered[static_cast<size_t>(i)] -=
                    copy_bits[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (hit) return;
        }
        excluded[static_cast<size_t>(p.cls)].set(p.idx);
        dfs();
        excluded[static_cast<size_t>(p.cls)].reset(p.idx);
    }
};

}  // namespace

MaxTilingResult max_tiling(const TripartiteGraph& g, int h, const SolveBudget& budget) {
    if (h < 1) throw Error("max_tiling: h must be >= 1");
    MaxTilingResult res;
    EnumerationResult en = enumerate_khhh(g, h, budget.enum_tests);
    if (en.copies.empty()) {
        res.exact = en.complete;
        if (!en.complete) res.note = "enumeration budget exceeded";
        return res;
    }
    MaxTilingSearch search(g, h, en.copies);
    search.budget = budget.nodes;
    search.dfs();
    res.nodes = search.nodes;
    for (int c : search.best) res.tiling.push_back(en.copies[static_cast<size_t>(c)]);
    std::sort(res.tiling.begin(), res.tiling.end());
    res.exact = !search.hit && en.complete;
    if (search.hit)
        res.note = "node budget exceeded";
    else if (!en.complete)
        res.note = "enumeration budget exceeded";
    return res;
}

// --- profile-counting refutation --------------------------------------------------

ColumnProfile profile_of(const KhhhCopy& copy, const ColumnLayout& layout) {
    ColumnProfile p;
    for (int i = 0; i < 3; ++i)
        for (int v : copy.parts[static_cast<size_t>(i)]) {
            int j = layout.column_of(i, v);
            if (j < 0) throw Error("profile_of: vertex not covered by layout");
            ++p.cell[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
    return p;
}

std::string layout_fingerprint(const ColumnLayout& layout) {
    uint64_t wh = 1469598103934665603ull;  // FNV-1a
    auto mix = [&](uint64_t x) {
        wh ^= x;
        wh *= 1099511628211ull;
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            mix(layout.cells[static_cast<size_t>(i)][static_cast<size_t>(j)].size());
            for (int v : layout.cells[static_cast<size_t>(i)][static_cast<size_t>(j)])
                mix(static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull);
        }
    char buf[32];
    std::snprintf(buf, sizeof buf, "layout-%016llx", static_cast<unsigned long long>(wh));
    return buf;
}

namespace {

struct ProfileFeasibility {
    int K;
    const std::vector<ColumnProfile>& profiles;
    std::vector<std::array<std::array<int, 3>, 3>> suffix_max;  // per start index
    std::array<std::array<int, 3>, 3> residual;
    std::vector<int> counts;
    uint64_t nodes = 0, budget = 0;
    bool hit = false;

    ProfileFeasibility(int K_, const std::vector<ColumnProfile>& ps,
                       std::array<std::array<int, 3>, 3> capacity)
        : K(K_), profiles(ps), residual(capacity), counts(ps.size(), 0) {
        size_t P = profiles.size();
        suffix_max.assign(P + 1, {});
        for (size_t t = P; t-- > 0;) {
            suffix_max[t] = suffix_max[t + 1];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    suffix_max[t][static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        std::max(suffix_max[t][static_cast<size_t>(i)][static_cast<size_t>(j)],
                                 profiles[t].cell[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
    }

    bool dfs(size_t t, int remaining) {
        if (nodes >= budget) {
            hit = true;
            return false;
        }
        ++nodes;
        if (t == profiles.size()) {
            if (remaining != 0) return false;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (residual[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) return false;
            return true;
        }
        // no later profile can fill a cell faster than suffix_max per copy
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (residual[static_cast<size_t>(i)][static_cast<size_t>(j)] >
                    suffix_max[t][static_cast<size_t>(i)][static_cast<size_t>(j)] * remaining)
                    return false;
        const auto& p = profiles[t].cell;
        int ub = remaining;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (p[static_cast<size_t>(i)][static_cast<size_t>(j)] > 0)
                    ub = std::min(ub, residual[static_cast<size_t>(i)][static_cast<size_t>(j)] /
                                          p[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        for (int x = 0; x <= ub; ++x) {
            if (x > 0)
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        residual[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                            p[static_cast<size_t>(i)][static_cast<size_t>(j)];
            counts[t] = x;
            if (dfs(t + 1, remaining - x)) return true;
            if (hit) break;
        }
        // restore whatever was subtracted (counts[t] holds the last x attempted)
        int spent = counts[t];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                residual[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                    spent * p[static_cast<size_t>(i)][static_cast<size_t>(j)];
        counts[t] = 0;
        return false;
    }
};

}  // namespace

RefutationOutcome profile_counting_refutation(const TripartiteGraph& g, int h,
                                              const ColumnLayout& layout,
                                              const SolveBudget& budget) {
    if (h < 1) throw Error("profile_counting_refutation: h must be >= 1");
    layout.validate(g);
    if (!g.balanced()) throw Error("profile_counting_refutation: graph must be balanced");
    int N = g.class_size(0);
    if (N % h != 0) throw Error("profile_counting_refutation: h must divide N");
    int K = N / h;

    RefutationOutcome res;
    EnumerationResult en = enumerate_khhh(g, h, budget.enum_tests);
    res.enum_tests = en.membership_tests;
    if (!en.complete) {
        res.status = SolveStatus::INCONCLUSIVE;
        res.reason = "profile enumeration budget exceeded";
        return res;
    }
    std::vector<ColumnProfile> profiles;
    profiles.reserve(en.copies.size());
    for (const KhhhCopy& c : en.copies) profiles.push_back(profile_of(c, layout));
    std::sort(profiles.begin(), profiles.end());
    profiles.erase(std::unique(profiles.begin(), profiles.end()), profiles.end());

    std::array<std::array<int, 3>, 3> capacity{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            capacity[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(
                layout.cells[static_cast<size_t>(i)][static_cast<size_t>(j)].size());

    ProfileFeasibility feas(K, profiles, capacity);
    feas.budget = budget.nodes;
    bool feasible = feas.dfs(0, K);
    if (feas.hit) {
        res.status = SolveStatus::INCONCLUSIVE;
        res.reason = "feasibility search budget exceeded";
        return res;
    }
    if (feasible) {
        res.status = SolveStatus::INCONCLUSIVE;
        res.feasible_counts = feas.counts;
        res.reason = "profile relaxation feasible; counting argument cannot refute";
        return res;
    }
    ProfileInfeasible cert;
    cert.layout_id = layout_fingerprint(layout);
    cert.h = h;
    cert.total_copies = K;
    cert.capacity = capacity;
    cert.profiles = profiles;
    for (const ColumnProfile& p : profiles) {
        int ub = K;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (p.cell[static_cast<size_t>(i)][static_cast<size_t>(j)] > 0)
                    ub = std::min(ub, capacity[static_cast<size_t>(i)][static_cast<size_t>(j)] /
                                          p.cell[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        cert.variable_bounds.push_back(ub);
    }
    cert.nodes = feas.nodes;
    res.status = SolveStatus::NO_FACTOR;
    res.cert = std::move(cert);
    return res;
}

bool recheck_profile_certificate(const TripartiteGraph& g, const ColumnLayout& layout,
                                 const ProfileInfeasible& cert, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    try {
        layout.validate(g);
    } catch (const Error& e) {
        return fail(std::string("layout invalid: ") + e.what());
    }
    if (layout_fingerprint(layout) != cert.layout_id)
        return fail("layout fingerprint mismatch");
    if (!g.balanced()) return fail("graph is not balanced");
    int N = g.class_size(0);
    if (cert.h < 1 || N % cert.h != 0) return fail("h does not divide N");
    if (cert.total_copies != N / cert.h) return fail("total copy count mismatch");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (cert.capacity[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                static_cast<int>(layout.cells[static_cast<size_t>(i)][static_cast<size_t>(j)].size()))
                return fail("capacity matrix does not match layout cell sizes");

    // fresh serial enumeration; certificate profiles must cover everything realized
    EnumerationResult en = enumerate_khhh_serial(g, cert.h, UINT64_MAX);
    for (const KhhhCopy& c : en.copies) {
        ColumnProfile p = profile_of(c, layout);
        if (!std::binary_search(cert.profiles.begin(), cert.profiles.end(), p))
            return fail("a realized profile is missing from the certificate");
    }

    // plain composition enumeration over the certificate's profiles
    size_t P = cert.profiles.size();
    std::vector<int> cap(P, 0);
    for (size_t t = 0; t < P; ++t) {
        int ub = cert.total_copies;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int pij = cert.profiles[t].cell[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (pij > 0)
                    ub = std::min(
                        ub, cert.capacity[static_cast<size_t>(i)][static_cast<size_t>(j)] / pij);
            }
        cap[t] = ub;
    }
    // plain recursive enumeration of all bounded compositions; a solution to
    // the full system means the certificate refuted nothing
    struct PlainEnum {
        const ProfileInfeasible& cert;
        const std::vector<int>& cap;
        std::vector<int> x;
        bool found = false;

        explicit PlainEnum(const ProfileInfeasible& c, const std::vector<int>& caps)
            : cert(c), cap(caps), x(caps.size(), 0) {}

        void rec(size_t t, int used) {
            if (found || used > cert.total_copies) return;
            if (t == cap.size()) {
                if (used != cert.total_copies) return;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) {
                        int acc = 0;
                        for (size_t k = 0; k < cap.size(); ++k)
                            acc += x[k] * cert.profiles[k]
                                              .cell[static_cast<size_t>(i)][static_cast<size_t>(j)];
                        if (acc != cert.capacity[static_cast<size_t>(i)][static_cast<size_t>(j)])
                            return;
                    }
                found = true;
                return;
            }
            for (int v = 0; v <= cap[t] && !found; ++v) {
                x[t] = v;
                rec(t + 1, used + v);
            }
            x[t] = 0;
        }
    };
    PlainEnum pe(cert, cap);
    pe.rec(0, 0);
    if (pe.found) return fail("profile system is feasible; certificate refuted nothing");
    if (why) why->clear();
    return true;
}

// --- almost-covering augmentation -------------------------------------------------

namespace {

// exact search for `need` vertex-disjoint triangles inside `allowed`
struct TriangleFinder {
    const TripartiteGraph& g;
    std::array<Bitset, 3> free;  // allowed and not yet used
    std::vector<int> class0;     // allowed class-0 vertices, ascending
    std::vector<KhhhCopy> found;
    uint64_t* nodes;
    uint64_t budget;
    bool hit = false;

    bool dfs(size_t pos, int need) {
        if (need == 0) return true;
        if (*nodes >= budget) {
            hit = true;
            return false;
        }
        ++*nodes;
        // not enough class-0 vertices left
        int avail = 0;
        for (size_t k = pos; k < class0.size(); ++k)
            if (free[0].test(class0[k])) ++avail;
        if (avail < need) return false;
        for (size_t k = pos; k < class0.size(); ++k) {
            int a = class0[k];
            if (!free[0].test(a)) continue;
            Bitset nb = g.neighbors(0, a, 1);
            nb &= free[1];
            for (int b = nb.find_first(); b != Bitset::npos; b = nb.find_next(b)) {
                Bitset nc = g.neighbors(0, a, 2);
                nc &= g.neighbors(1, b, 2);
                nc &= free[2];
                for (int c = nc.find_first(); c != Bitset::npos; c = nc.find_next(c)) {
                    free[0].reset(a);
                    free[1].reset(b);
                    free[2].reset(c);
                    KhhhCopy t;
                    t.parts = {std::vector<int>{a}, std::vector<int>{b}, std::vector<int>{c}};
                    found.push_back(t);
                    if (dfs(k + 1, need - 1)) return true;
                    found.pop_back();
                    free[0].set(a);
                    free[1].set(b);
                    free[2].set(c);
                    if (hit) return false;
                }
            }
            // skipping vertex a is implicit: continue the loop
        }
        return false;
    }
};

}  // namespace

AugmentResult augment_tiling(const TripartiteGraph& g, const std::vector<KhhhCopy>& tiling,
                             int swap_budget, const SolveBudget& budget) {
    if (!g.balanced()) throw Error("augment_tiling: graph must be balanced");
    if (swap_budget < 1) throw Error("augment_tiling: swap budget must be >= 1");
    int M = g.class_size(0);
    TilingCheckResult pre = check_tiling_certificate(g, 1, tiling);
    // a partial tiling fails only the coverage condition; anything else is caller error
    if (!pre.pass && pre.violation->condition != "incomplete cover")
        throw Error("augment_tiling: invalid input tiling: " + pre.violation->condition + " (" +
                    pre.violation->detail + ")");

    AugmentResult res;
    res.lemma_hypothesis_satisfied = static_cast<int>(tiling.size()) < M - 3;

    std::array<Bitset, 3> covered;
    for (int i = 0; i < 3; ++i) covered[static_cast<size_t>(i)] = Bitset(M);
    for (const KhhhCopy& t : tiling)
        for (int i = 0; i < 3; ++i) covered[static_cast<size_t>(i)].set(t.parts[static_cast<size_t>(i)][0]);

    int rmax = std::min<int>(swap_budget - 1, static_cast<int>(tiling.size()));
    std::vector<int> removal;
    for (int r = 0; r <= rmax && !res.improved; ++r) {
        // lexicographic r-subsets of tiling indices
        removal.assign(static_cast<size_t>(r), 0);
        for (int i = 0; i < r; ++i) removal[static_cast<size_t>(i)] = i;
        bool more = true;
        while (more && !res.improved) {
            if (res.nodes >= budget.nodes) {
                res.search_complete = false;
                break;
            }
            ++res.nodes;
            TriangleFinder finder{g, {}, {}, {}, &res.nodes, budget.nodes};
            for (int i = 0; i < 3; ++i) {
                finder.free[static_cast<size_t>(i)] = Bitset(M);
                finder.free[static_cast<size_t>(i)].set_all();
                finder.free[static_cast<size_t>(i)] -= covered[static_cast<size_t>(i)];
            }
            for (int idx : removal)
                for (int i = 0; i < 3; ++i)
                    finder.free[static_cast<size_t>(i)].set(
                        tiling[static_cast<size_t>(idx)].parts[static_cast<size_t>(i)][0]);
            finder.class0 = finder.free[0].to_vector();
            if (finder.dfs(0, r + 1)) {
                res.improved = true;
                res.added = r + 1;
                res.removed = r;
                std::vector<char> removed_mask(tiling.size(), 0);
                for (int idx : removal) removed_mask[static_cast<size_t>(idx)] = 1;
                for (size_t k = 0; k < tiling.size(); ++k)
                    if (!removed_mask[k]) res.tiling.push_back(tiling[k]);
                for (const KhhhCopy& t : finder.found) res.tiling.push_back(t);
                std::sort(res.tiling.begin(), res.tiling.end());
                TilingCheckResult post = check_tiling_certificate(g, 1, res.tiling);
                if (!post.pass && post.violation->condition != "incomplete cover")
                    throw Error("internal: augmented tiling invalid: " + post.violation->condition);
                break;
            }
            if (finder.hit) {
                res.search_complete = false;
                break;
            }
            // advance the r-subset
            int i = r - 1;
            while (i >= 0 &&
                   removal[static_cast<size_t>(i)] == static_cast<int>(tiling.size()) - r + i)
                --i;
            if (i < 0) {
                more = false;
            } else {
                ++removal[static_cast<size_t>(i)];
                for (int k = i + 1; k < r; ++k)
                    removal[static_cast<size_t>(k)] = removal[static_cast<size_t>(k - 1)] + 1;
            }
        }
        if (res.nodes >= budget.nodes) break;
    }
    if (res.improved) return res;

    // greedy sparse-triple hint: one floor(M/3)-set per class minimizing density
    int k = M / 3;
    if (k >= 1) {
        SparseHint hint;
        std::vector<std::pair<int, int>> score;  // (key, vertex)
        for (int u = 0; u < M; ++u)
            score.emplace_back(g.degree(0, u, 1) + g.degree(0, u, 2), u);
        std::sort(score.begin(), score.end());
        for (int t = 0; t < k; ++t) hint.sets[0].push_back(score[static_cast<size_t>(t)].second);
        std::sort(hint.sets[0].begin(), hint.sets[0].end());
        Bitset s0 = Bitset::from_vector(M, hint.sets[0]);
        score.clear();
        for (int v = 0; v < M; ++v)
            score.emplace_back(g.neighbors(1, v, 0).count_and(s0), v);
        std::sort(score.begin(), score.end());
        for (int t = 0; t < k; ++t) hint.sets[1].push_back(score[static_cast<size_t>(t)].second);
        std::sort(hint.sets[1].begin(), hint.sets[1].end());
        Bitset s1 = Bitset::from_vector(M, hint.sets[1]);
        score.clear();
        for (int w = 0; w < M; ++w)
            score.emplace_back(
                g.neighbors(2, w, 0).count_and(s0) + g.neighbors(2, w, 1).count_and(s1), w);
        std::sort(score.begin(), score.end());
        for (int t = 0; t < k; ++t) hint.sets[2].push_back(score[static_cast<size_t>(t)].second);
        std::sort(hint.sets[2].begin(), hint.sets[2].end());
        hint.densities = {pair_density(g, 0, hint.sets[0], 1, hint.sets[1]),
                          pair_density(g, 0, hint.sets[0], 2, hint.sets[2]),
                          pair_density(g, 1, hint.sets[1], 2, hint.sets[2])};
        res.hint = std::move(hint);
    }
    return res;
}

// --- reachability chains -----------------------------------------------------------

namespace {

// lexicographically least (b,c) in the two non-cls classes forming triangles
// with both u and w (u, w in class cls)
std::optional<std::pair<int, int>> common_pair(const TripartiteGraph& g, int cls, int u, int w) {
    int o1 = cls == 0 ? 1 : 0;
    int o2 = cls == 2 ? 1 : 2;
    Bitset bs = g.neighbors(cls, u, o1);
    bs &= g.neighbors(cls, w, o1);
    for (int b = bs.find_first(); b != Bitset::npos; b = bs.find_next(b)) {
        Bitset cs = g.neighbors(cls, u, o2);
        cs &= g.neighbors(cls, w, o2);
        cs &= g.neighbors(o1, b, o2);
        int c = cs.find_first();
        if (c != Bitset::npos) return std::make_pair(b, c);
    }
    return std::nullopt;
}

KhhhCopy make_triangle(int cls, int own, int o1, int b, int o2, int c) {
    KhhhCopy t;
    t.parts[static_cast<size_t>(cls)] = {own};
    t.parts[static_cast<size_t>(o1)] = {b};
    t.parts[static_cast<size_t>(o2)] = {c};
    return t;
}

}  // namespace

bool chain_is_valid(const TripartiteGraph& g, Vertex x, Vertex y,
                    const std::vector<KhhhCopy>& chain, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (x.cls != y.cls) return fail("x and y are in different classes");
    int cls = x.cls;
    if (chain.empty()) {
        if (x.idx != y.idx) return fail("empty chain but x != y");
        return true;
    }
    if (chain.size() % 2 != 0) return fail("chain length must be even");
    size_t k = chain.size() / 2;
    for (size_t t = 0; t < chain.size(); ++t) {
        std::string cw;
        if (chain[t].h() != 1) return fail("chain element is not a triangle");
        if (!is_valid_copy(g, chain[t], &cw))
            return fail("chain element " + std::to_string(t) + " is not a triangle: " + cw);
    }
    if (chain.front().parts[static_cast<size_t>(cls)][0] != x.idx)
        return fail("T_1 does not contain x in its own class");
    if (chain.back().parts[static_cast<size_t>(cls)][0] != y.idx)
        return fail("T_2k does not contain y in its own class");
    int o1 = cls == 0 ? 1 : 0;
    int o2 = cls == 2 ? 1 : 2;
    for (size_t j = 1; j <= k; ++j) {
        const KhhhCopy& odd = chain[2 * j - 2];
        const KhhhCopy& even = chain[2 * j - 1];
        if (odd.parts[static_cast<size_t>(o1)] != even.parts[static_cast<size_t>(o1)] ||
            odd.parts[static_cast<size_t>(o2)] != even.parts[static_cast<size_t>(o2)])
            return fail("triangles " + std::to_string(2 * j - 1) + "," + std::to_string(2 * j) +
                        " do not share their cross pair");
    }
    for (size_t j = 1; j + 1 <= k; ++j) {
        if (chain[2 * j - 1].parts[static_cast<size_t>(cls)] !=
            chain[2 * j].parts[static_cast<size_t>(cls)])
            return fail("triangles " + std::to_string(2 * j) + "," + std::to_string(2 * j + 1) +
                        " do not share their own-class vertex");
    }
    if (why) why->clear();
    return true;
}

ReachResult reachability_chain(const TripartiteGraph& g, Vertex x, Vertex y, int max_k) {
    if (x.cls != y.cls) throw Error("reachability_chain: x and y must be in the same class");
    if (x.cls < 0 || x.cls > 2 || x.idx < 0 || x.idx >= g.class_size(x.cls) || y.idx < 0 ||
        y.idx >= g.class_size(y.cls))
        throw Error("reachability_chain: vertex out of range");
    ReachResult res;
    int cls = x.cls;
    if (x.idx == y.idx) {
        res.reachable = true;
        res.degenerate = true;  // the definition starts at k = 1; we flag k = 0
        res.k = 0;
        return res;
    }
    // BFS over "linked by a common cross pair" with at most max_k hops
    int n = g.class_size(cls);
    std::vector<int> dist(static_cast<size_t>(n), -1), pred(static_cast<size_t>(n), -1);
    dist[static_cast<size_t>(x.idx)] = 0;
    std::vector<int> frontier{x.idx};
    bool found = false;
    for (int step = 1; step <= max_k && !found && !frontier.empty(); ++step) {
        std::vector<int> next;
        for (int u : frontier) {
            for (int w = 0; w < n && !found; ++w) {
                if (dist[static_cast<size_t>(w)] >= 0) continue;
                if (!common_pair(g, cls, u, w)) continue;
                dist[static_cast<size_t>(w)] = step;
                pred[static_cast<size_t>(w)] = u;
                next.push_back(w);
                if (w == y.idx) found = true;
            }
            if (found) break;
        }
        frontier = std::move(next);
    }
    if (!found) return res;
    std::vector<int> path;  // y back to x
    for (int v = y.idx; v != -1; v = pred[static_cast<size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    int o1 = cls == 0 ? 1 : 0;
    int o2 = cls == 2 ? 1 : 2;
    for (size_t s = 0; s + 1 < path.size(); ++s) {
        auto bc = common_pair(g, cls, path[s], path[s + 1]);
        assert(bc);
        res.chain.push_back(make_triangle(cls, path[s], o1, bc->first, o2, bc->second));
        res.chain.push_back(make_triangle(cls, path[s + 1], o1, bc->first, o2, bc->second));
    }
    res.reachable = true;
    res.k = static_cast<int>(res.chain.size() / 2);
    std::string why;
    if (!chain_is_valid(g, x, y, res.chain, &why))
        throw Error("internal: reachability chain failed validation: " + why);
    return res;
}

}  // namespace tritile
