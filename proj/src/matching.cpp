#include "qtutte/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "qtutte/errors.hpp"

namespace qtutte {

std::vector<int> hopcroft_karp(std::size_t left, std::size_t right, const std::vector<std::vector<int>>& adj) {
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<int> match_l(left, -1), match_r(right, -1), dist(left);

    auto bfs = [&]() {
        std::queue<int> q;
        bool found = false;
        for (std::size_t u = 0; u < left; ++u) {
            if (match_l[u] == -1) {
                dist[u] = 0;
                q.push(int(u));
            } else {
                dist[u] = kInf;
            }
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[std::size_t(u)]) {
                int w = match_r[std::size_t(v)];
                if (w == -1) {
                    found = true;
                } else if (dist[std::size_t(w)] == kInf) {
                    dist[std::size_t(w)] = dist[std::size_t(u)] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };

    // iterative DFS along the layered graph
    auto dfs = [&](int root) {
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        std::vector<int> path_v;
        while (!stack.empty()) {
            auto& [u, i] = stack.back();
            const auto& nb = adj[std::size_t(u)];
            if (i == nb.size()) {
                dist[std::size_t(u)] = kInf;
                stack.pop_back();
                if (!path_v.empty()) path_v.pop_back();
                continue;
            }
            int v = nb[i++];
            int w = match_r[std::size_t(v)];
            if (w == -1) {
                path_v.push_back(v);
                // augment along the stack
                for (std::size_t k = 0; k < stack.size(); ++k) {
                    int lu = stack[k].first;
                    int rv = path_v[k];
                    match_l[std::size_t(lu)] = rv;
                    match_r[std::size_t(rv)] = lu;
                }
                return true;
            }
            if (dist[std::size_t(w)] == dist[std::size_t(u)] + 1) {
                path_v.push_back(v);
                stack.emplace_back(w, 0);
            }
        }
        return false;
    };

    while (bfs()) {
        for (std::size_t u = 0; u < left; ++u)
            if (match_l[u] == -1) dfs(int(u));
    }
    return match_l;
}

namespace {

struct Dlx {
    // node 0 is the header root; nodes 1..C are column headers
    std::vector<std::size_t> L, R, U, D, col, row, size;
    std::vector<std::size_t> solution;
    std::uint64_t budget, visited = 0;

    Dlx(std::size_t cols, const std::vector<std::vector<std::size_t>>& rows, std::uint64_t b) : budget(b) {
        std::size_t total = cols + 1;
        for (const auto& r : rows) total += r.size();
        L.resize(total);
        R.resize(total);
        U.resize(total);
        D.resize(total);
        col.resize(total);
        row.resize(total);
        size.assign(cols + 1, 0);
        for (std::size_t c = 0; c <= cols; ++c) {
            L[c] = c == 0 ? cols : c - 1;
            R[c] = c == cols ? 0 : c + 1;
            U[c] = D[c] = c;
            col[c] = c;
        }
        std::size_t next = cols + 1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::size_t first = next;
            for (std::size_t k = 0; k < rows[r].size(); ++k) {
                std::size_t c = rows[r][k] + 1;
                std::size_t nd = next++;
                col[nd] = c;
                row[nd] = r;
                U[nd] = U[c];
                D[nd] = c;
                D[U[c]] = nd;
                U[c] = nd;
                ++size[c];
                L[nd] = k == 0 ? nd : nd - 1;
                R[nd] = first;
                if (k) R[nd - 1] = nd;
                L[first] = nd;
            }
        }
    }

    void cover(std::size_t c) {
        R[L[c]] = R[c];
        L[R[c]] = L[c];
        for (std::size_t i = D[c]; i != c; i = D[i])
            for (std::size_t j = R[i]; j != i; j = R[j]) {
                D[U[j]] = D[j];
                U[D[j]] = U[j];
                --size[col[j]];
            }
    }

    void uncover(std::size_t c) {
        for (std::size_t i = U[c]; i != c; i = U[i])
            for (std::size_t j = L[i]; j != i; j = L[j]) {
                ++size[col[j]];
                D[U[j]] = j;
                U[D[j]] = j;
            }
        R[L[c]] = c;
        L[R[c]] = c;
    }

    bool search() {
        if (++visited > budget) throw ResourceError("exact cover search exceeded its node budget");
        if (R[0] == 0) return true;
        std::size_t best = R[0];
        for (std::size_t c = R[0]; c != 0; c = R[c])
            if (size[c] < size[best]) best = c;
        if (size[best] == 0) return false;
        cover(best);
        for (std::size_t r = D[best]; r != best; r = D[r]) {
            solution.push_back(row[r]);
            for (std::size_t j = R[r]; j != r; j = R[j]) cover(col[j]);
            if (search()) return true;
            for (std::size_t j = L[r]; j != r; j = L[j]) uncover(col[j]);
            solution.pop_back();
        }
        uncover(best);
        return false;
    }
};

}  // namespace

std::optional<std::vector<std::size_t>> exact_cover(std::size_t columns,
                                                    const std::vector<std::vector<std::size_t>>& rows,
                                                    std::uint64_t node_budget) {
    for (const auto& r : rows)
        for (auto c : r)
            if (c >= columns) throw DimensionError("exact cover row refers to a missing column");
    Dlx dlx(columns, rows, node_budget);
    if (!dlx.search()) return std::nullopt;
    auto sol = dlx.solution;
    std::sort(sol.begin(), sol.end());
    return sol;
}

}  // namespace qtutte
