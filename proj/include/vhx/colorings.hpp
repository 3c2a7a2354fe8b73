#pragma once

#include "invariants.hpp"
#include "parallel.hpp"
#include "poly.hpp"
#include "states.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace vhx {

/// Number of n-colorings of the circles with no vertex seeing one color at
/// all three corners.  Colors are introduced in canonical order and each new
/// color is weighted by the number of unused colors.
inline std::uint64_t count_partial_colorings(int circles, const std::vector<std::vector<int>>& corners, int n) {
    if (circles == 0) return 1;
    // touching vertices per circle, for the fail-fast order
    std::vector<std::vector<int>> touch(circles);
    for (std::size_t v = 0; v < corners.size(); ++v) {
        auto c = corners[v];
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        if (c.size() == 1) return 0;
        for (int x : c) touch[x].push_back(static_cast<int>(v));
    }
    std::vector<int> order(circles);
    for (int i = 0; i < circles; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return touch[a].size() > touch[b].size(); });
    std::vector<int> pos(circles);
    for (int i = 0; i < circles; ++i) pos[order[i]] = i;
    // constraints checked once their last circle is colored
    std::vector<std::vector<std::array<int, 3>>> due(circles);
    for (auto& c : corners) {
        int last = std::max({pos[c[0]], pos[c[1]], pos[c[2]]});
        due[last].push_back({c[0], c[1], c[2]});
    }
    std::vector<int> color(circles, -1);
    std::uint64_t total = 0;
    auto rec = [&](auto&& self, int p, int used, std::uint64_t weight) -> void {
        if (p == circles) {
            total += weight;
            return;
        }
        int c = order[p];
        int top = std::min(used + 1, n);
        for (int col = 0; col < top; ++col) {
            color[c] = col;
            bool ok = true;
            for (auto& d : due[p])
                if (color[d[0]] == color[d[1]] && color[d[1]] == color[d[2]]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (col == used)
                self(self, p + 1, used + 1, weight * static_cast<std::uint64_t>(n - used));
            else
                self(self, p + 1, used, weight);
        }
        color[c] = -1;
    };
    rec(rec, 0, 0, 1);
    return total;
}

inline std::uint64_t count_partial_colorings(const CircleDecomposition& d, int n) {
    return count_partial_colorings(d.circle_count(), d.corner_map, n);
}

/// Canonical key of a corner incidence structure: circles renumbered by
/// first appearance, triples sorted.
inline std::vector<int> corner_key(const std::vector<std::vector<int>>& corners, int circles) {
    std::vector<int> ren(circles, -1);
    int next = 0;
    std::vector<std::array<int, 3>> tr;
    for (auto& c : corners) {
        std::array<int, 3> t;
        for (int i = 0; i < 3; ++i) {
            if (ren[c[i]] < 0) ren[c[i]] = next++;
            t[i] = ren[c[i]];
        }
        std::sort(t.begin(), t.end());
        tr.push_back(t);
    }
    std::sort(tr.begin(), tr.end());
    std::vector<int> key{next};
    for (auto& t : tr) key.insert(key.end(), t.begin(), t.end());
    return key;
}

struct FilteredRanks {
    int n = 2;
    std::vector<BigInt> ranks;              // per homological degree
    std::vector<std::uint64_t> per_state;   // harmonic count per state
    BigInt euler() const {
        BigInt s = 0;
        for (std::size_t i = 0; i < ranks.size(); ++i) s += i % 2 ? -ranks[i] : ranks[i];
        return s;
    }
    BigInt total() const {
        BigInt s = 0;
        for (auto& r : ranks) s += r;
        return s;
    }
};

struct FilteredOptions {
    bool memo = true;
    int threads = 0;
    bool keep_per_state = true;
};

inline FilteredRanks filtered_ranks(const RotationSystem& rs, int n, const FilteredOptions& opt = {}) {
    if (!rs.trivalent()) throw std::invalid_argument("filtered ranks need a trivalent diagram");
    int V = rs.vertex_count();
    if (V > 40) throw std::invalid_argument("too many vertices for state enumeration");
    VertexStateTracer tr(rs);
    std::uint64_t S = 1ull << V;
    FilteredRanks out;
    out.n = n;
    if (opt.keep_per_state) out.per_state.assign(S, 0);
    std::mutex mu;
    std::map<std::vector<int>, std::uint64_t> memo;
    struct Acc {
        std::vector<BigInt> ranks;
        std::vector<int> signs, label;
    };
    auto acc = parallel_fold(
        S, thread_count(opt.threads), Acc{std::vector<BigInt>(V + 1, 0), {}, {}},
        [&](Acc& a, std::uint64_t mask) {
            int k = tr.count(mask, a.signs, a.label);
            std::vector<std::vector<int>> corners;
            corners.reserve(V);
            for (auto& vt : rs.vertices)
                corners.push_back({a.label[out_tok(vt[0])], a.label[out_tok(vt[1])], a.label[out_tok(vt[2])]});
            std::uint64_t c = 0;
            if (opt.memo) {
                auto key = corner_key(corners, k);
                bool hit = false;
                {
                    std::lock_guard<std::mutex> lk(mu);
                    auto it = memo.find(key);
                    if (it != memo.end()) {
                        c = it->second;
                        hit = true;
                    }
                }
                if (!hit) {
                    c = count_partial_colorings(k, corners, n);
                    std::lock_guard<std::mutex> lk(mu);
                    memo.emplace(std::move(key), c);
                }
            } else {
                c = count_partial_colorings(k, corners, n);
            }
            a.ranks[std::popcount(mask)] += c;
            if (opt.keep_per_state) out.per_state[mask] = c;
        },
        [](Acc& o, const Acc& p) {
            for (std::size_t i = 0; i < o.ranks.size(); ++i) o.ranks[i] += p.ranks[i];
        });
    out.ranks = std::move(acc.ranks);
    return out;
}

/// Filtered ranks as polynomials in n, by interpolation over n = 0..deg.
inline std::vector<IntPoly> filtered_rank_polynomials(const RotationSystem& rs, const FilteredOptions& opt = {}) {
    int kmax = rs.edge_count() - rs.vertex_count() + 2;  // Euler bound on circle count
    int V = rs.vertex_count();
    std::vector<std::vector<BigInt>> samples(V + 1);
    FilteredOptions o = opt;
    o.keep_per_state = false;
    for (int n = 0; n <= kmax; ++n) {
        auto f = filtered_ranks(rs, n, o);
        for (int i = 0; i <= V; ++i) samples[i].push_back(f.ranks[i]);
    }
    std::vector<IntPoly> out;
    for (auto& s : samples) out.push_back(interpolate_integer(s));
    return out;
}

/// TM(G, n, t) = sum_i t^i rank_i
inline TPoly total_matching_polynomial(const FilteredRanks& f) {
    TPoly p;
    for (std::size_t i = 0; i < f.ranks.size(); ++i) p.add_term(static_cast<int>(i), f.ranks[i]);
    return p;
}

enum class MatchingClass { empty, perfect, mixed };

struct InducedMatching {
    std::vector<int> edges;
    MatchingClass kind;
};

/// Edges whose two band sides lie on circles of the same color.
inline InducedMatching induced_matching(const RotationSystem& rs, StateIndex nu, const std::vector<int>& colors) {
    auto st = vertex_state(rs, nu);
    auto d = trace_boundary(st);
    if (static_cast<int>(colors.size()) != d.circle_count()) throw std::invalid_argument("one color per circle required");
    for (auto& c : d.corner_map)
        if (colors[c[0]] == colors[c[1]] && colors[c[1]] == colors[c[2]])
            throw std::invalid_argument("coloring is monochromatic at a vertex");
    InducedMatching im;
    auto hv = rs.half_edge_vertex();
    std::vector<int> deg(rs.vertex_count(), 0);
    for (int e = 0; e < rs.edge_count(); ++e) {
        int h = 2 * e;
        if (colors[d.label[out_tok(h)]] == colors[d.label[in_tok(h)]]) {
            im.edges.push_back(e);
            ++deg[hv[2 * e]];
            ++deg[hv[2 * e + 1]];
        }
    }
    bool all0 = true, all1 = true;
    for (int x : deg) {
        all0 = all0 && x == 0;
        all1 = all1 && x == 1;
    }
    im.kind = all0 ? MatchingClass::empty : all1 ? MatchingClass::perfect : MatchingClass::mixed;
    return im;
}

/// Every partial coloring of one state, for small debugging dumps.
inline std::vector<std::vector<int>> enumerate_partial_colorings(const CircleDecomposition& d, int n) {
    std::vector<std::vector<int>> out;
    int k = d.circle_count();
    std::vector<int> c(k, 0);
    while (true) {
        bool ok = true;
        for (auto& cm : d.corner_map)
            if (c[cm[0]] == c[cm[1]] && c[cm[1]] == c[cm[2]]) ok = false;
        if (ok) out.push_back(c);
        int i = 0;
        while (i < k && ++c[i] == n) c[i++] = 0;
        if (i == k) break;
    }
    return out;
}

}  // namespace vhx
