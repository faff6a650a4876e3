#include "tritile/sidon.hpp"

namespace tritile {

bool is_sidon(int n, const std::vector<int>& elements) {
    std::vector<bool> seen(n, false);
    for (int a : elements)
        for (int b : elements) {
            if (a == b) continue;
            int d = ((a - b) % n + n) % n;
            if (seen[d]) return false;
            seen[d] = true;
        }
    return true;
}

namespace {

// Backtracking over increasing residues. `diff_used` tracks both signs of
// every pairwise difference so the Sidon property holds at every step.
struct SidonSearch {
    int n, d;
    const std::vector<bool>* forbidden;
    std::vector<bool> diff_used;
    std::vector<int> cur;
    size_t limit;
    std::vector<SidonSet>* sink;
    std::optional<SidonSet> first;

    bool extend(int from) {
        if (int(cur.size()) == d) {
            if (sink) {
                sink->push_back({n, cur});
                return sink->size() >= limit;
            }
            first = SidonSet{n, cur};
            return true;
        }
        int slots_left = d - int(cur.size());
        for (int x = from; x <= n - slots_left; ++x) {
            if (forbidden && (*forbidden)[x]) continue;
            // mark incrementally so collisions among this step's own new
            // differences are caught too
            bool ok = true;
            std::vector<int> marked;
            for (int y : cur) {
                int d1 = ((x - y) % n + n) % n;
                int d2 = (n - d1) % n;
                if (d1 == 0 || d1 == d2 || diff_used[d1] || diff_used[d2]) {
                    ok = false;
                    break;
                }
                diff_used[d1] = diff_used[d2] = true;
                marked.push_back(d1);
                marked.push_back(d2);
            }
            if (ok) {
                cur.push_back(x);
                if (extend(x + 1)) return true;
                cur.pop_back();
            }
            for (int m : marked) diff_used[m] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<SidonSet> find_sidon_set(int n, int d) {
    if (n < 1 || d < 0) throw Error("find_sidon_set: need n >= 1, d >= 0");
    if (d == 0) return SidonSet{n, {}};
    if (d > n) return std::nullopt;
    SidonSearch s{n, d, nullptr, std::vector<bool>(n, false), {}, 0, nullptr, std::nullopt};
    s.extend(0);
    return s.first;
}

std::vector<SidonSet> enumerate_sidon_sets(int n, int d, size_t limit) {
    if (d == 0) return {SidonSet{n, {}}};
    std::vector<SidonSet> out;
    if (d > n || limit == 0) return out;
    SidonSearch s{n, d, nullptr, std::vector<bool>(n, false), {}, limit, &out, std::nullopt};
    s.extend(0);
    return out;
}

std::optional<SidonSet> find_sidon_set_avoiding(int n, int d, const std::vector<bool>& forbidden) {
    if (d == 0) return SidonSet{n, {}};
    if (d > n) return std::nullopt;
    SidonSearch s{n, d, &forbidden, std::vector<bool>(n, false), {}, 0, nullptr, std::nullopt};
    s.extend(0);
    return s.first;
}

void add_cayley_edges(TripartiteGraph& g, int ci, int u_off, int cj, int v_off, int n,
                      const SidonSet& s) {
    for (int u = 0; u < n; ++u)
        for (int e : s.elements) g.add_edge(ci, u_off + u, cj, v_off + (u + e) % n);
}

TripartiteGraph sidon_bipartite(int n, const SidonSet& s) {
    if (s.modulus != n || !is_sidon(n, s.elements))
        throw Error("sidon_bipartite: generating set is not Sidon over Z_" + std::to_string(n));
    TripartiteGraph g({n, n, 0});
    add_cayley_edges(g, 0, 0, 1, 0, n, s);
    return g;
}

}  // namespace tritile
