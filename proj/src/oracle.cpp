#include "nuclique/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <vector>

#include "nuclique/errors.hpp"
#include "nuclique/linalg.hpp"

namespace nuclique::oracle {

namespace {

constexpr int kMaxCliqueGuard = 40;
constexpr int kMaxBicliqueGuard = 20;

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

struct CliqueSearch {
    int n;
    std::array<std::uint64_t, kMaxCliqueGuard> adj{};
    std::uint64_t nodes = 0;
    int best = 0;

    /// Greedy sequential coloring; fills verts/colors so that color
    /// numbers are non-decreasing along verts. Returns the count.
    int color(std::uint64_t p, std::array<int, kMaxCliqueGuard>& verts,
              std::array<int, kMaxCliqueGuard>& colors) const {
        int cnt = 0, c = 0;
        while (p) {
            ++c;
            std::uint64_t cand = p;
            while (cand) {
                const int v = std::countr_zero(cand);
                cand &= ~(bit(v) | adj[static_cast<std::size_t>(v)]);
                p &= ~bit(v);
                verts[static_cast<std::size_t>(cnt)] = v;
                colors[static_cast<std::size_t>(cnt)] = c;
                ++cnt;
            }
        }
        return cnt;
    }

    void find_max_size(std::uint64_t p, int rsize) {
        ++nodes;
        if (!p) {
            best = std::max(best, rsize);
            return;
        }
        std::array<int, kMaxCliqueGuard> verts, colors;
        const int cnt = color(p, verts, colors);
        for (int k = cnt - 1; k >= 0; --k) {
            if (rsize + colors[static_cast<std::size_t>(k)] <= best) return;
            const int v = verts[static_cast<std::size_t>(k)];
            find_max_size(p & adj[static_cast<std::size_t>(v)], rsize + 1);
            p &= ~bit(v);
        }
    }

    /// Ascending-index DFS; the first clique reaching `target` is the
    /// lexicographically smallest one of that size.
    bool find_lex_smallest(std::uint64_t p, int rsize, int target, std::vector<int>& out) {
        ++nodes;
        if (rsize == target) return true;
        std::array<int, kMaxCliqueGuard> verts, colors;
        const int cnt = color(p, verts, colors);
        if (cnt == 0 || rsize + colors[static_cast<std::size_t>(cnt - 1)] < target)
            return false;
        while (p) {
            const int v = std::countr_zero(p);
            p &= ~bit(v);
            if (rsize + 1 + std::popcount(p & adj[static_cast<std::size_t>(v)]) < target)
                continue;
            out.push_back(v);
            if (find_lex_smallest(p & adj[static_cast<std::size_t>(v)], rsize + 1, target, out))
                return true;
            out.pop_back();
        }
        return false;
    }
};

struct BicliqueSearch {
    int small_count = 0;
    std::size_t words = 0;
    std::vector<std::vector<std::uint64_t>> rows;  // small-side vertex -> other-side bits
    std::uint64_t nodes = 0;
    long long best = 0;
    std::vector<int> best_small;
    std::vector<std::uint64_t> best_other;

    long long count_bits(const std::vector<std::uint64_t>& w) const {
        long long c = 0;
        for (std::uint64_t x : w) c += std::popcount(x);
        return c;
    }

    void rec(int idx, std::vector<int>& chosen, const std::vector<std::uint64_t>& common,
             long long common_size) {
        ++nodes;
        if (!chosen.empty()) {
            const long long obj = static_cast<long long>(chosen.size()) * common_size;
            if (obj > best) {  // first-in-prefix-order wins ties
                best = obj;
                best_small = chosen;
                best_other = common;
            }
        }
        if (idx == small_count || common_size == 0) return;
        // Even taking every remaining vertex cannot grow the neighborhood.
        const long long reach =
            (static_cast<long long>(chosen.size()) + (small_count - idx)) * common_size;
        if (reach < best) return;

        std::vector<std::uint64_t> next(words);
        const auto& row = rows[static_cast<std::size_t>(idx)];
        for (std::size_t w = 0; w < words; ++w) next[w] = common[w] & row[w];
        chosen.push_back(idx);
        rec(idx + 1, chosen, next, count_bits(next));
        chosen.pop_back();
        rec(idx + 1, chosen, common, common_size);
    }
};

}  // namespace

OracleResult max_clique_exact(const Graph& g) {
    const int n = g.num_vertices();
    if (n > kMaxCliqueGuard)
        throw SizeGuardError("max_clique_exact: graph exceeds the N <= 40 guard");

    OracleResult result;
    result.best_right = VertexSet({}, 0);
    if (n == 0) {
        result.best_left = VertexSet({}, 0);
        return result;
    }

    CliqueSearch search;
    search.n = n;
    for (int v = 0; v < n; ++v) {
        std::uint64_t row = 0;
        for (int u = 0; u < n; ++u)
            if (u != v && g.has_edge(v, u)) row |= bit(u);
        search.adj[static_cast<std::size_t>(v)] = row;
    }

    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (bit(n) - 1);
    search.find_max_size(all, 0);

    std::vector<int> members;
    search.find_lex_smallest(all, 0, search.best, members);
    result.best_left = VertexSet(members, n);
    result.objective = search.best;
    result.nodes_explored = search.nodes;
    return result;
}

OracleResult max_edge_biclique_exact(const BipartiteGraph& g) {
    const int m = g.left_count(), n = g.right_count();
    if (std::min(m, n) > kMaxBicliqueGuard)
        throw SizeGuardError("max_edge_biclique_exact: smaller side exceeds the 20 guard");

    const bool enumerate_left = m <= n;
    const int small = enumerate_left ? m : n;
    const int other = enumerate_left ? n : m;

    BicliqueSearch search;
    search.small_count = small;
    search.words = static_cast<std::size_t>((other + 63) / 64);
    search.rows.assign(static_cast<std::size_t>(small),
                       std::vector<std::uint64_t>(search.words, 0));
    for (auto [u, v] : g.edges()) {
        const int s = enumerate_left ? u : v;
        const int o = enumerate_left ? v : u;
        search.rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(o) >> 6] |=
            bit(o & 63);
    }

    std::vector<std::uint64_t> full(search.words, 0);
    for (int o = 0; o < other; ++o)
        full[static_cast<std::size_t>(o) >> 6] |= bit(o & 63);
    std::vector<int> chosen;
    search.rec(0, chosen, full, other);

    OracleResult result;
    result.nodes_explored = search.nodes;
    result.objective = search.best;
    if (search.best == 0) {
        result.best_left = VertexSet({}, m);
        result.best_right = VertexSet({}, n);
        return result;
    }
    std::vector<int> other_members;
    for (int o = 0; o < other; ++o)
        if (search.best_other[static_cast<std::size_t>(o) >> 6] & bit(o & 63))
            other_members.push_back(o);
    if (enumerate_left) {
        result.best_left = VertexSet(search.best_small, m);
        result.best_right = VertexSet(other_members, n);
    } else {
        result.best_left = VertexSet(other_members, m);
        result.best_right = VertexSet(search.best_small, n);
    }
    return result;
}

int matrix_rank(const Eigen::MatrixXd& a, double tol) { return linalg::matrix_rank(a, tol); }

}  // namespace nuclique::oracle
