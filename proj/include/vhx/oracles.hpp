#pragma once

#include "ribbon.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace vhx {

/// Underlying multigraph, loops allowed.
struct AbstractGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;

    static AbstractGraph from(const RotationSystem& rs) {
        return {rs.vertex_count(), rs.edge_endpoints()};
    }

    std::vector<std::vector<int>> incidence() const {
        std::vector<std::vector<int>> inc(vertices);
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            inc[edges[e].first].push_back(e);
            if (edges[e].second != edges[e].first) inc[edges[e].second].push_back(e);
        }
        return inc;
    }
};

/// All perfect matchings as ascending edge lists, in lexicographic order.
inline std::vector<std::vector<int>> perfect_matchings(const AbstractGraph& g) {
    auto inc = g.incidence();
    std::vector<std::vector<int>> out;
    std::vector<char> covered(g.vertices, 0);
    std::vector<int> cur;
    std::function<void()> rec = [&]() {
        int v = 0;
        while (v < g.vertices && covered[v]) ++v;
        if (v == g.vertices) {
            auto m = cur;
            std::sort(m.begin(), m.end());
            out.push_back(std::move(m));
            return;
        }
        covered[v] = 1;
        for (int e : inc[v]) {
            auto [a, b] = g.edges[e];
            if (a == b) continue;
            int w = a == v ? b : a;
            if (covered[w]) continue;
            covered[w] = 1;
            cur.push_back(e);
            rec();
            cur.pop_back();
            covered[w] = 0;
        }
        covered[v] = 0;
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

struct MatchingProfile {
    bool even;
    std::vector<int> cycle_lengths;  // ascending
};

/// Cycle decomposition of G \ M for a trivalent G.
inline MatchingProfile classify_matching(const AbstractGraph& g, const std::vector<int>& M) {
    std::vector<char> inM(g.edges.size(), 0);
    std::vector<int> cover(g.vertices, 0);
    for (int e : M) {
        inM[e] = 1;
        auto [a, b] = g.edges[e];
        if (a == b) throw std::invalid_argument("matching contains a loop");
        ++cover[a];
        ++cover[b];
    }
    for (int c : cover)
        if (c != 1) throw std::invalid_argument("not a perfect matching");
    auto inc = g.incidence();
    std::vector<char> used(g.edges.size(), 0);
    MatchingProfile p{true, {}};
    for (int e0 = 0; e0 < static_cast<int>(g.edges.size()); ++e0) {
        if (inM[e0] || used[e0]) continue;
        int len = 0;
        int e = e0, v = g.edges[e0].first;
        while (!used[e]) {
            used[e] = 1;
            ++len;
            auto [a, b] = g.edges[e];
            v = a == v ? b : a;
            int nxt = -1;
            for (int f : inc[v])
                if (!inM[f] && !used[f]) nxt = f;
            if (nxt < 0) break;
            e = nxt;
        }
        p.cycle_lengths.push_back(len);
        if (len % 2) p.even = false;
    }
    std::sort(p.cycle_lengths.begin(), p.cycle_lengths.end());
    return p;
}

/// Proper 3-edge colorings.
inline std::uint64_t count_tait_colorings(const AbstractGraph& g) {
    auto inc = g.incidence();
    std::vector<int> deg(g.vertices, 0);
    for (auto [a, b] : g.edges) {
        ++deg[a];
        ++deg[b];
    }
    for (int d : deg)
        if (d != 3) throw std::invalid_argument("Tait colorings need a trivalent graph");
    for (auto [a, b] : g.edges)
        if (a == b) return 0;
    int E = static_cast<int>(g.edges.size());
    // edge order: BFS-like so constraints bite early
    std::vector<int> order;
    std::vector<char> placed(E, 0);
    for (int v = 0; v < g.vertices; ++v)
        for (int e : inc[v])
            if (!placed[e]) {
                placed[e] = 1;
                order.push_back(e);
            }
    std::vector<int> mask(g.vertices, 0);  // colors used at each vertex
    std::uint64_t total = 0;
    std::function<void(int)> rec = [&](int p) {
        if (p == E) {
            ++total;
            return;
        }
        int e = order[p];
        auto [a, b] = g.edges[e];
        for (int c = 0; c < 3; ++c) {
            int bit = 1 << c;
            if ((mask[a] & bit) || (mask[b] & bit)) continue;
            mask[a] |= bit;
            mask[b] |= bit;
            rec(p + 1);
            mask[a] &= ~bit;
            mask[b] &= ~bit;
        }
    };
    rec(0);
    return total;
}

/// Cut edges; parallel edges are distinguished by id and loops are never bridges.
inline std::vector<int> bridges(const AbstractGraph& g) {
    auto inc = g.incidence();
    std::vector<int> tin(g.vertices, -1), low(g.vertices, 0);
    std::vector<int> out;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int via) {
        tin[v] = low[v] = timer++;
        for (int e : inc[v]) {
            if (e == via) continue;
            auto [a, b] = g.edges[e];
            if (a == b) continue;
            int w = a == v ? b : a;
            if (tin[w] >= 0) {
                low[v] = std::min(low[v], tin[w]);
            } else {
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > tin[v]) out.push_back(e);
            }
        }
    };
    for (int v = 0; v < g.vertices; ++v)
        if (tin[v] < 0) dfs(v, -1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace vhx
