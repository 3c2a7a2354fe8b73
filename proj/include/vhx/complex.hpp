#pragma once

#include "algebra.hpp"
#include "invariants.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "states.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace vhx {

/// Monomial x^{e_0} (x) ... (x) x^{e_{k-1}} indexed by sum e_c n^c
/// (colexicographic order, circle 0 least significant).
inline std::uint64_t ipow(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= static_cast<std::uint64_t>(n);
    return r;
}

inline std::vector<int> decode_monomial(std::uint64_t idx, int n, int k) {
    std::vector<int> e(k);
    for (int c = 0; c < k; ++c) {
        e[c] = static_cast<int>(idx % n);
        idx /= n;
    }
    return e;
}

inline std::uint64_t encode_monomial(const std::vector<int>& e, int n) {
    std::uint64_t idx = 0;
    for (int c = static_cast<int>(e.size()) - 1; c >= 0; --c) idx = idx * n + e[c];
    return idx;
}

struct MapEntry {
    std::uint64_t src, tgt;
    QuadScalar c;
};

struct ComplexMap {
    std::uint64_t tail, head;
    int site;
    int sign;
    std::array<std::vector<MapEntry>, 4> parts;  // parts[t]: compositions with t tilde maps
};

struct ChainComplex {
    int n = 2;
    int sites = 0;
    int shift = 0;                // qdeg shift per unit of state weight
    std::vector<int> k;           // circle count per state
    std::vector<ComplexMap> maps; // ascending by (tail, site)

    int m() const { return n / 2; }
    std::uint64_t state_count() const { return k.size(); }
    std::uint64_t dim(std::uint64_t s) const { return ipow(n, k[s]); }

    int degree(std::uint64_t s, std::uint64_t idx) const {
        int j = shift * std::popcount(s);
        for (int c = 0; c < k[s]; ++c) {
            j += m() - static_cast<int>(idx % n);
            idx /= n;
        }
        return j;
    }
};

/// Sparse vector over the monomials of one state, split by tilde count.
using LocalVec = std::map<std::pair<std::uint64_t, int>, QuadScalar>;

inline void add_to(LocalVec& v, std::uint64_t idx, int t, const QuadScalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(idx, t);
    auto it = v.find(key);
    if (it == v.end()) {
        v.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

/// One elementary map m / Delta / eta on the active circles, identity on
/// the stable ones.
inline LocalVec apply_step(const LocalVec& in, const CircleCorrespondence& cc, int n, Part part) {
    LocalVec out;
    std::vector<std::uint64_t> pw(cc.after_count + 1, 1);
    for (int c = 1; c <= cc.after_count; ++c) pw[c] = pw[c - 1] * n;
    for (auto& [key, coef] : in) {
        auto e = decode_monomial(key.first, n, cc.before_count);
        std::uint64_t base = 0;
        for (int c = 0; c < cc.before_count; ++c)
            if (cc.stable[c] >= 0) base += static_cast<std::uint64_t>(e[c]) * pw[cc.stable[c]];
        int t = key.second;
        switch (cc.kind) {
            case StepKind::merge: {
                int d = cc.active_after[0];
                for (auto& r : m_terms(n, e[cc.active_before[0]], e[cc.active_before[1]], part))
                    add_to(out, base + r.k * pw[d], t + r.tilde, coef * r.c);
                break;
            }
            case StepKind::split: {
                int d1 = cc.active_after[0], d2 = cc.active_after[1];
                for (auto& r : delta_terms(n, e[cc.active_before[0]], part))
                    add_to(out, base + r.i * pw[d1] + r.j * pw[d2], t + r.tilde, coef * r.c);
                break;
            }
            case StepKind::same_circle: {
                int d = cc.active_after[0];
                for (auto& r : eta_terms(n, e[cc.active_before[0]], part))
                    add_to(out, base + r.k * pw[d], t + r.tilde, coef * r.c);
                break;
            }
        }
    }
    return out;
}

inline std::vector<int> edge_tokens(int e) {
    return {4 * e, 4 * e + 1, 4 * e + 2, 4 * e + 3};
}

struct VertexComplexOptions {
    bool verify_paths = false;  // compare all six paths and retrace on the bubbled blowup
    int max_vertices = 12;
};

namespace detail {

struct TwistLabels {
    std::vector<int> label;
    int k;
};

inline TwistLabels trace_twist(const RotationSystem& rs, const std::vector<int>& arc, const std::vector<char>& tw) {
    TwistLabels r;
    r.k = label_circles(arc, twisted_signs(rs, tw), r.label);
    return r;
}

/// Matrix of a 3-step path from state tail (vertex v flipped), before signing.
inline std::vector<MapEntry> path_entries(const RotationSystem& rs, const std::vector<int>& arc, int n,
                                          std::uint64_t tail, const std::vector<int>& sites, int t_level,
                                          std::vector<std::vector<MapEntry>>* all_levels,
                                          const PerfectMatchingDiagram* bubbled) {
    std::vector<char> tw = vertex_twist(rs, {tail, rs.vertex_count()});
    std::vector<TwistLabels> st{trace_twist(rs, arc, tw)};
    std::vector<CircleCorrespondence> cc;
    for (int h : sites) {
        tw[h] ^= 1;
        st.push_back(trace_twist(rs, arc, tw));
        auto& b = st[st.size() - 2];
        auto& a = st.back();
        cc.push_back(circle_correspondence(b.label, b.k, a.label, a.k, edge_tokens(edge_of(h))));
        if (bubbled) {
            std::vector<int> alpha(tw.begin(), tw.end()), lab;
            int kb = pm_circle_labels(*bubbled, alpha, lab);
            if (kb != a.k) throw std::logic_error("bubbled blowup retrace disagrees with the local model");
        }
    }
    int k0 = st.front().k;
    std::vector<std::vector<MapEntry>> levels(4);
    for (std::uint64_t src = 0; src < ipow(n, k0); ++src) {
        LocalVec v;
        add_to(v, src, 0, QuadScalar(1));
        for (auto& c : cc) v = apply_step(v, c, n, Part::hat);
        for (auto& [key, coef] : v) levels[key.second].push_back({src, key.first, coef});
    }
    if (all_levels) *all_levels = levels;
    return levels[t_level];
}

}  // namespace detail

/// Vertex hypercube complex.  parts[t] of every map holds the t-tilde
/// compositions, so parts[0] is the bigraded differential and parts[t]
/// is delta_{tn}.
inline ChainComplex build_vertex_complex(const RotationSystem& rs, int n, const VertexComplexOptions& opt = {}) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (!rs.trivalent()) throw std::invalid_argument("vertex complex needs a trivalent diagram");
    int V = rs.vertex_count();
    if (V > opt.max_vertices) throw std::invalid_argument("diagram exceeds the vertex cap for homology");
    ChainComplex C;
    C.n = n;
    C.sites = V;
    C.shift = 3 * (n / 2);
    auto arc = corner_arcs(rs);
    std::uint64_t S = 1ull << V;
    C.k.resize(S);
    std::vector<int> sg, lab;
    VertexStateTracer tr(rs);
    for (std::uint64_t s = 0; s < S; ++s) C.k[s] = tr.count(s, sg, lab);
    PerfectMatchingDiagram bub;
    if (opt.verify_paths) bub = bubbled_blowup(rs);
    for (std::uint64_t s = 0; s < S; ++s) {
        for (int v = 0; v < V; ++v) {
            if ((s >> v) & 1u) continue;
            ComplexMap M;
            M.tail = s;
            M.head = s | (1ull << v);
            M.site = v;
            M.sign = edge_sign(s, v);
            std::vector<std::vector<MapEntry>> levels;
            detail::path_entries(rs, arc, n, s, vertex_to_bubbled_path(rs, v), 0, &levels,
                                 opt.verify_paths ? &bub : nullptr);
            if (opt.verify_paths) {
                for (auto& path : all_bubbled_paths(rs, v)) {
                    std::vector<std::vector<MapEntry>> other;
                    detail::path_entries(rs, arc, n, s, path, 0, &other, &bub);
                    for (int t = 0; t < 4; ++t) {
                        auto a = levels[t], b = other[t];
                        auto key = [](const MapEntry& x, const MapEntry& y) {
                            return std::tie(x.src, x.tgt) < std::tie(y.src, y.tgt);
                        };
                        std::sort(a.begin(), a.end(), key);
                        std::sort(b.begin(), b.end(), key);
                        bool same = a.size() == b.size();
                        for (std::size_t i = 0; same && i < a.size(); ++i)
                            same = a[i].src == b[i].src && a[i].tgt == b[i].tgt && a[i].c == b[i].c;
                        if (!same) throw std::logic_error("3-edge paths give different maps");
                    }
                }
            }
            for (int t = 0; t < 4; ++t) {
                for (auto& e : levels[t])
                    if (M.sign < 0) e.c = -e.c;
                M.parts[t] = std::move(levels[t]);
            }
            C.maps.push_back(std::move(M));
        }
    }
    return C;
}

/// Matching hypercube complex of the thin-strand states.
inline ChainComplex build_pm_complex(const PerfectMatchingDiagram& pmd, int n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    int l = static_cast<int>(pmd.matching.size());
    if (l > 20) throw std::invalid_argument("matching too large for the hypercube complex");
    ChainComplex C;
    C.n = n;
    C.sites = l;
    C.shift = n / 2;
    std::uint64_t S = 1ull << l;
    std::vector<std::vector<int>> labels(S);
    C.k.resize(S);
    for (std::uint64_t s = 0; s < S; ++s) C.k[s] = pm_circle_labels(pmd, StateIndex{s, l}.bits(), labels[s]);
    for (std::uint64_t s = 0; s < S; ++s) {
        for (int i = 0; i < l; ++i) {
            if ((s >> i) & 1u) continue;
            std::uint64_t h = s | (1ull << i);
            auto cc = circle_correspondence(labels[s], C.k[s], labels[h], C.k[h], edge_tokens(pmd.matching[i]));
            ComplexMap M{s, h, i, edge_sign(s, i), {}};
            for (std::uint64_t src = 0; src < C.dim(s); ++src) {
                LocalVec v;
                add_to(v, src, 0, QuadScalar(1));
                v = apply_step(v, cc, n, Part::hat);
                for (auto& [key, coef] : v)
                    M.parts[key.second].push_back({src, key.first, M.sign < 0 ? -coef : coef});
            }
            C.maps.push_back(std::move(M));
        }
    }
    return C;
}

using RankTable = std::map<std::pair<int, int>, int>;  // (i, j) -> rank

/// Bigraded chain group dimensions.
inline RankTable chain_dimensions(const ChainComplex& C) {
    RankTable d;
    for (std::uint64_t s = 0; s < C.state_count(); ++s) {
        int i = std::popcount(s);
        for (std::uint64_t idx = 0; idx < C.dim(s); ++idx) ++d[{i, C.degree(s, idx)}];
    }
    return d;
}

namespace detail {

/// Global position of every (state, monomial) inside its (i, j) block.
struct BlockIndex {
    std::vector<std::vector<int>> pos;  // [state][monomial]
};

inline BlockIndex block_index(const ChainComplex& C) {
    BlockIndex b;
    std::map<std::pair<int, int>, int> next;
    b.pos.resize(C.state_count());
    for (std::uint64_t s = 0; s < C.state_count(); ++s) {
        int i = std::popcount(s);
        b.pos[s].resize(C.dim(s));
        for (std::uint64_t idx = 0; idx < C.dim(s); ++idx) b.pos[s][idx] = next[{i, C.degree(s, idx)}]++;
    }
    return b;
}

}  // namespace detail

/// Ranks of the differential (tilde level t) per (source i, source j).
inline RankTable differential_ranks(const ChainComplex& C, int t = 0) {
    auto bi = detail::block_index(C);
    // column vectors grouped by (i, j)
    std::map<std::pair<int, int>, std::map<std::pair<std::uint64_t, std::uint64_t>, SparseVec<QuadScalar>>> cols;
    for (auto& M : C.maps) {
        int i = std::popcount(M.tail);
        for (auto& e : M.parts[t]) {
            int j = C.degree(M.tail, e.src);
            auto& col = cols[{i, j}][{M.tail, e.src}];
            col.emplace_back(bi.pos[M.head][e.tgt], e.c);
        }
    }
    RankTable r;
    for (auto& [ij, group] : cols) {
        Echelon<QuadScalar> ech;
        for (auto& [key, col] : group) {
            std::sort(col.begin(), col.end(), [](auto& a, auto& b) { return a.first < b.first; });
            SparseVec<QuadScalar> merged;
            for (auto& [p, c] : col) {
                if (!merged.empty() && merged.back().first == p) {
                    merged.back().second += c;
                    if (merged.back().second.is_zero()) merged.pop_back();
                } else {
                    merged.emplace_back(p, c);
                }
            }
            ech.insert(std::move(merged));
        }
        if (ech.rank()) r[ij] = ech.rank();
    }
    return r;
}

inline RankTable bigraded_homology(const ChainComplex& C) {
    auto dims = chain_dimensions(C);
    auto rk = differential_ranks(C, 0);
    RankTable h;
    for (auto& [ij, d] : dims) {
        auto [i, j] = ij;
        int out = rk.count({i, j}) ? rk.at({i, j}) : 0;
        int in = rk.count({i - 1, j}) ? rk.at({i - 1, j}) : 0;
        int r = d - out - in;
        if (r) h[ij] = r;
    }
    return h;
}

inline LaurentPoly graded_euler(const RankTable& t) {
    LaurentPoly p;
    for (auto& [ij, r] : t) p.add_term(ij.second, BigInt(ij.first % 2 ? -r : r));
    return p;
}

/// Image of one basis monomial under the summed maps out of its state.
/// Result keyed by (head state, monomial).
inline std::map<std::pair<std::uint64_t, std::uint64_t>, QuadScalar> apply_differential(const ChainComplex& C,
                                                                                       std::uint64_t state,
                                                                                       std::uint64_t mono, int t) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, QuadScalar> out;
    for (auto& M : C.maps) {
        if (M.tail != state) continue;
        for (auto& e : M.parts[t])
            if (e.src == mono) {
                auto& x = out[{M.head, e.tgt}];
                x += e.c;
            }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

/// Largest failure of sum_{p+q=k} d_p d_q = 0 over all basis elements;
/// returns the list of k with a nonzero composite.
inline std::vector<int> graded_square_failures(const ChainComplex& C) {
    std::vector<int> bad;
    // group maps by tail for fast lookup
    std::map<std::uint64_t, std::vector<const ComplexMap*>> by_tail;
    for (auto& M : C.maps) by_tail[M.tail].push_back(&M);
    for (int k = 0; k <= 6; ++k) {
        bool fail = false;
        for (std::uint64_t s = 0; s < C.state_count() && !fail; ++s) {
            // compose two steps for every source monomial
            std::map<std::uint64_t, std::map<std::pair<std::uint64_t, std::uint64_t>, QuadScalar>> acc;
            for (auto* A : by_tail[s])
                for (int p = 0; p <= std::min(k, 3); ++p) {
                    int q = k - p;
                    if (q > 3) continue;
                    for (auto& ea : A->parts[p])
                        for (auto* B : by_tail[A->head])
                            for (auto& eb : B->parts[q])
                                if (eb.src == ea.tgt) acc[ea.src][{B->head, eb.tgt}] += ea.c * eb.c;
                }
            for (auto& [src, vec] : acc)
                for (auto& [key, c] : vec)
                    if (!c.is_zero()) fail = true;
        }
        if (fail) bad.push_back(k);
    }
    return bad;
}

}  // namespace vhx
