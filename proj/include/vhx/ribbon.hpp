#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vhx {

// Half-edges are 0-based: label L <-> index L-1, edge e owns half-edges 2e and 2e+1.
// Every half-edge h carries two side tokens: out(h) = 2h and in(h) = 2h+1.
// At a vertex (h0, h1, ..., h_{r-1}) the corner between h_i and h_{i+1}
// is the arc out(h_i) -- in(h_{i+1}).  A positive band glues out to in across
// the edge, a negative band glues out to out and in to in.

inline int out_tok(int h) { return 2 * h; }
inline int in_tok(int h) { return 2 * h + 1; }
inline int tok_half(int t) { return t >> 1; }
inline int edge_of(int h) { return h >> 1; }
inline int partner(int h) { return h ^ 1; }

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_, col_;
};

struct RotationSystem {
    std::vector<std::vector<int>> vertices;  // half-edge indices in ccw order
    std::vector<int> signs;                  // per edge, +1 or -1

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(signs.size()); }
    int half_edge_count() const { return 2 * edge_count(); }
    int token_count() const { return 4 * edge_count(); }

    bool trivalent() const {
        for (auto& v : vertices)
            if (v.size() != 3) return false;
        return true;
    }

    /// vertex owning each half-edge
    std::vector<int> half_edge_vertex() const {
        std::vector<int> hv(half_edge_count(), -1);
        for (int v = 0; v < vertex_count(); ++v)
            for (int h : vertices[v]) hv[h] = v;
        return hv;
    }

    /// position of each half-edge inside its vertex tuple
    std::vector<int> half_edge_position() const {
        std::vector<int> hp(half_edge_count(), -1);
        for (auto& vt : vertices)
            for (int i = 0; i < static_cast<int>(vt.size()); ++i) hp[vt[i]] = i;
        return hp;
    }

    /// endpoints (u, v) of every edge
    std::vector<std::pair<int, int>> edge_endpoints() const {
        auto hv = half_edge_vertex();
        std::vector<std::pair<int, int>> ends(edge_count());
        for (int e = 0; e < edge_count(); ++e) ends[e] = {hv[2 * e], hv[2 * e + 1]};
        return ends;
    }

    bool operator==(const RotationSystem&) const = default;
};

/// Structural checks; throws std::invalid_argument.
inline void validate(const RotationSystem& rs, bool any_valence = false) {
    int H = rs.half_edge_count();
    std::vector<int> seen(H, 0);
    for (std::size_t v = 0; v < rs.vertices.size(); ++v) {
        auto& vt = rs.vertices[v];
        if (vt.empty()) throw std::invalid_argument("vertex " + std::to_string(v + 1) + " is empty");
        if (!any_valence && vt.size() != 3)
            throw std::invalid_argument("vertex " + std::to_string(v + 1) + " has valence " +
                                        std::to_string(vt.size()) + ", expected 3");
        for (int h : vt) {
            if (h < 0 || h >= H) throw std::invalid_argument("half-edge index out of range");
            if (seen[h]++) throw std::invalid_argument("duplicate half-edge label " + std::to_string(h + 1));
        }
    }
    for (int h = 0; h < H; ++h)
        if (!seen[h]) throw std::invalid_argument("missing half-edge label " + std::to_string(h + 1));
    for (int s : rs.signs)
        if (s != 1 && s != -1) throw std::invalid_argument("edge sign must be +1 or -1");
}

inline RotationSystem parse_vpd(const std::string& text, bool any_valence = false) {
    std::size_t pos = 0;
    int line = 1, col = 1;
    auto advance = [&]() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    };
    auto skip_ws = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
    };
    auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, line, col); };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size()) fail(std::string("unexpected end of input, expected '") + c + "'");
        if (text[pos] != c) fail(std::string("expected '") + c + "', found '" + text[pos] + "'");
        advance();
    };
    auto peek = [&]() -> char {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    };

    struct Raw {
        long long value;
        int line, col;
    };
    std::vector<std::vector<Raw>> raw;

    expect('G');
    expect('[');
    do {
        expect('V');
        expect('[');
        std::vector<Raw> tuple;
        do {
            skip_ws();
            int l0 = line, c0 = col;
            bool neg = false;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
                neg = text[pos] == '-';
                advance();
            }
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                fail("expected an integer label");
            long long v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                if (v > 1000000000LL) fail("label too large");
                advance();
            }
            if (v == 0) throw ParseError("labels must be nonzero", l0, c0);
            tuple.push_back({neg ? -v : v, l0, c0});
        } while (peek() == ',' && (advance(), true));
        expect(']');
        raw.push_back(std::move(tuple));
    } while (peek() == ',' && (advance(), true));
    expect(']');
    skip_ws();
    if (pos != text.size()) fail("trailing characters after diagram");

    long long maxlab = 0;
    std::size_t count = 0;
    for (auto& t : raw)
        for (auto& r : t) {
            maxlab = std::max(maxlab, r.value < 0 ? -r.value : r.value);
            ++count;
        }
    if (count % 2 != 0 || static_cast<long long>(count) != maxlab)
        throw ParseError("half-edge labels must be exactly 1.." + std::to_string(count + (count % 2)) +
                             " (found " + std::to_string(count) + " labels, largest " +
                             std::to_string(maxlab) + "); some label is unpaired",
                         1, 1);

    RotationSystem rs;
    rs.signs.assign(count / 2, 1);
    std::vector<int> seen(count, 0);
    for (std::size_t v = 0; v < raw.size(); ++v) {
        if (!any_valence && raw[v].size() != 3)
            throw ParseError("vertex " + std::to_string(v + 1) + " has " + std::to_string(raw[v].size()) +
                                 " half-edges; trivalent input expected",
                             raw[v][0].line, raw[v][0].col);
        std::vector<int> vt;
        for (auto& r : raw[v]) {
            long long mag = r.value < 0 ? -r.value : r.value;
            int h = static_cast<int>(mag - 1);
            if (seen[h]++) throw ParseError("duplicate half-edge label " + std::to_string(mag), r.line, r.col);
            if (r.value < 0) {
                if (mag % 2 == 0)
                    throw ParseError("minus sign on even label " + std::to_string(mag) +
                                         "; negative edges are marked on the odd label",
                                     r.line, r.col);
                rs.signs[h / 2] = -1;
            }
            vt.push_back(h);
        }
        rs.vertices.push_back(std::move(vt));
    }
    return rs;
}

inline std::string serialize_vpd(const RotationSystem& rs) {
    std::ostringstream os;
    os << "G[";
    for (int v = 0; v < rs.vertex_count(); ++v) {
        if (v) os << ",";
        os << "V[";
        for (std::size_t i = 0; i < rs.vertices[v].size(); ++i) {
            int h = rs.vertices[v][i];
            if (i) os << ",";
            if (h % 2 == 0 && rs.signs[h / 2] < 0) os << "-";
            os << h + 1;
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

/// Arc partner of every token (the vertex corners).
inline std::vector<int> corner_arcs(const RotationSystem& rs) {
    std::vector<int> arc(rs.token_count(), -1);
    for (auto& vt : rs.vertices) {
        int r = static_cast<int>(vt.size());
        for (int i = 0; i < r; ++i) {
            int a = out_tok(vt[i]), b = in_tok(vt[(i + 1) % r]);
            arc[a] = b;
            arc[b] = a;
        }
    }
    return arc;
}

/// Glue partner of token t across its band with the given sign.
inline int glue(int t, int sign) {
    int h = tok_half(t);
    int side = t & 1;
    int ph = partner(h);
    return sign > 0 ? 2 * ph + (side ^ 1) : 2 * ph + side;
}

struct CircleDecomposition {
    std::vector<std::vector<int>> circles;    // token cycles, starting at their minimal token
    std::vector<int> label;                   // circle of every token
    std::vector<std::vector<int>> corner_map; // per vertex, circle of each corner (h_i, h_{i+1})
    int circle_count() const { return static_cast<int>(circles.size()); }
};

/// Labels tokens by circle, given the corner arcs and per-edge signs.
/// Circles are numbered in order of their minimal token.  Returns the count.
inline int label_circles(const std::vector<int>& arc, const std::vector<int>& signs, std::vector<int>& label) {
    int T = static_cast<int>(arc.size());
    label.assign(T, -1);
    int k = 0;
    for (int s = 0; s < T; ++s) {
        if (label[s] >= 0) continue;
        int t = s;
        do {
            label[t] = k;
            int g = glue(t, signs[edge_of(tok_half(t))]);
            label[g] = k;
            t = arc[g];
        } while (t != s);
        ++k;
    }
    return k;
}

inline CircleDecomposition decompose(const RotationSystem& rs, const std::vector<int>& arc) {
    CircleDecomposition d;
    int T = rs.token_count();
    d.label.assign(T, -1);
    for (int s = 0; s < T; ++s) {
        if (d.label[s] >= 0) continue;
        int id = static_cast<int>(d.circles.size());
        std::vector<int> cyc;
        int t = s;
        do {
            d.label[t] = id;
            cyc.push_back(t);
            int g = glue(t, rs.signs[edge_of(tok_half(t))]);
            d.label[g] = id;
            cyc.push_back(g);
            t = arc[g];
        } while (t != s);
        d.circles.push_back(std::move(cyc));
    }
    for (auto& vt : rs.vertices) {
        std::vector<int> cm;
        for (int h : vt) cm.push_back(d.label[out_tok(h)]);
        d.corner_map.push_back(std::move(cm));
    }
    return d;
}

/// Boundary circles of the ribbon surface (the all-zero vertex state).
inline CircleDecomposition trace_boundary(const RotationSystem& rs) {
    return decompose(rs, corner_arcs(rs));
}

inline bool is_connected(const RotationSystem& rs) {
    int V = rs.vertex_count();
    if (V == 0) return true;
    std::vector<int> parent(V);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : rs.edge_endpoints()) parent[find(u)] = find(v);
    int r = find(0);
    for (int v = 0; v < V; ++v)
        if (find(v) != r) return false;
    return true;
}

struct SurfaceType {
    bool orientable;
    int genus;      // orientable genus, or number of crosscaps when non-orientable
    int faces;
    int euler;      // |V| - |E| + F
};

inline SurfaceType genus_and_orientability(const RotationSystem& rs) {
    if (!is_connected(rs)) throw std::invalid_argument("ribbon graph is disconnected");
    int V = rs.vertex_count();
    auto ends = rs.edge_endpoints();
    // propagate vertex reflections along a spanning forest
    std::vector<std::vector<int>> inc(V);
    for (int e = 0; e < rs.edge_count(); ++e) {
        inc[ends[e].first].push_back(e);
        if (ends[e].second != ends[e].first) inc[ends[e].second].push_back(e);
    }
    std::vector<int> flip(V, 0);
    std::vector<char> seen(V, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int e : inc[u]) {
            int w = ends[e].first == u ? ends[e].second : ends[e].first;
            if (seen[w]) continue;
            seen[w] = 1;
            flip[w] = flip[u] ^ (rs.signs[e] < 0 ? 1 : 0);
            stack.push_back(w);
        }
    }
    bool orientable = true;
    for (int e = 0; e < rs.edge_count(); ++e) {
        int want = flip[ends[e].first] ^ flip[ends[e].second];
        if (want != (rs.signs[e] < 0 ? 1 : 0)) orientable = false;
    }
    int F = trace_boundary(rs).circle_count();
    int chi = V - rs.edge_count() + F;
    SurfaceType st{orientable, 0, F, chi};
    st.genus = orientable ? (2 - chi) / 2 : 2 - chi;
    return st;
}

/// Rotation system with the given vertices reflected: cyclic order reversed
/// and incident band signs toggled once per reflected endpoint.
inline RotationSystem reflect_vertices(const RotationSystem& rs, const std::vector<int>& which) {
    RotationSystem out = rs;
    auto hv = rs.half_edge_vertex();
    std::vector<char> on(rs.vertex_count(), 0);
    for (int v : which) on[v] = 1;
    for (int v = 0; v < rs.vertex_count(); ++v)
        if (on[v]) std::reverse(out.vertices[v].begin(), out.vertices[v].end());
    for (int e = 0; e < rs.edge_count(); ++e)
        if (on[hv[2 * e]] != on[hv[2 * e + 1]]) out.signs[e] = -out.signs[e];
    return out;
}

/// Same diagram with vertex tuples permuted and every tuple rotated.
inline RotationSystem permute_vertices(const RotationSystem& rs, const std::vector<int>& order,
                                       const std::vector<int>& rotate = {}) {
    RotationSystem out;
    out.signs = rs.signs;
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto vt = rs.vertices[order[i]];
        if (!rotate.empty() && !vt.empty())
            std::rotate(vt.begin(), vt.begin() + (rotate[i] % static_cast<int>(vt.size())), vt.end());
        out.vertices.push_back(std::move(vt));
    }
    return out;
}

/// Relabel edges by a permutation (new index of old edge e is perm[e]),
/// optionally swapping the two half-edges of chosen edges.
inline RotationSystem relabel_edges(const RotationSystem& rs, const std::vector<int>& perm,
                                    const std::vector<char>& swap_ends = {}) {
    RotationSystem out;
    out.signs.assign(rs.edge_count(), 1);
    for (int e = 0; e < rs.edge_count(); ++e) out.signs[perm[e]] = rs.signs[e];
    for (auto& vt : rs.vertices) {
        std::vector<int> nv;
        for (int h : vt) {
            int e = edge_of(h), b = h & 1;
            if (!swap_ends.empty() && swap_ends[e]) b ^= 1;
            nv.push_back(2 * perm[e] + b);
        }
        out.vertices.push_back(std::move(nv));
    }
    return out;
}

struct PerfectMatchingDiagram {
    RotationSystem rs;
    std::vector<int> matching;  // edge indices; site i of the matching hypercube is matching[i]
};

inline void validate(const PerfectMatchingDiagram& pmd) {
    validate(pmd.rs);
    auto ends = pmd.rs.edge_endpoints();
    std::vector<int> cover(pmd.rs.vertex_count(), 0);
    for (int e : pmd.matching) {
        if (e < 0 || e >= pmd.rs.edge_count()) throw std::invalid_argument("matching edge out of range");
        if (ends[e].first == ends[e].second) throw std::invalid_argument("matching contains a loop");
        ++cover[ends[e].first];
        ++cover[ends[e].second];
    }
    for (int c : cover)
        if (c != 1) throw std::invalid_argument("matching is not perfect");
}

namespace detail {

struct Builder {
    RotationSystem rs;
    int add_edge(int sign = 1) {
        rs.signs.push_back(sign);
        return rs.edge_count() - 1;
    }
};

}  // namespace detail

/// Blow up the chosen vertices into cycles.  Original edges keep their
/// indices; cycle edges are appended in vertex order.  New vertices replace
/// a blown-up vertex in place, one per half-edge, in tuple order.
inline RotationSystem blowup_at(const RotationSystem& rs, const std::vector<int>& which) {
    std::vector<char> on(rs.vertex_count(), 0);
    for (int v : which) on[v] = 1;
    detail::Builder b;
    b.rs.signs = rs.signs;
    // successor / predecessor cycle half-edges per original half-edge
    std::vector<int> succ(rs.half_edge_count(), -1), pred(rs.half_edge_count(), -1);
    for (int v = 0; v < rs.vertex_count(); ++v) {
        if (!on[v]) continue;
        auto& vt = rs.vertices[v];
        int r = static_cast<int>(vt.size());
        for (int i = 0; i < r; ++i) {
            int e = b.add_edge();
            succ[vt[i]] = 2 * e;
            pred[vt[(i + 1) % r]] = 2 * e + 1;
        }
    }
    for (int v = 0; v < rs.vertex_count(); ++v) {
        if (!on[v]) {
            b.rs.vertices.push_back(rs.vertices[v]);
            continue;
        }
        for (int h : rs.vertices[v]) b.rs.vertices.push_back({h, succ[h], pred[h]});
    }
    return b.rs;
}

inline PerfectMatchingDiagram blowup(const RotationSystem& rs) {
    std::vector<int> all(rs.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    PerfectMatchingDiagram p;
    p.rs = blowup_at(rs, all);
    p.matching.resize(rs.edge_count());
    std::iota(p.matching.begin(), p.matching.end(), 0);
    return p;
}

/// Bubbled blowup.  Matching edge i is the matching half-edge at original
/// half-edge i (so sites are indexed by original half-edges).  The original
/// band sign sits on the site of the lower half-edge.
inline PerfectMatchingDiagram bubbled_blowup(const RotationSystem& rs) {
    int E = rs.edge_count();
    int H = 2 * E;
    detail::Builder b;
    for (int s = 0; s < H; ++s) b.add_edge(s % 2 == 0 ? rs.signs[s / 2] : 1);
    // site s: half-edge 2s at the cycle vertex of original half-edge s,
    // half-edge 2s+1 at the bubble
    std::vector<int> u1(E), u2(E);
    for (int e = 0; e < E; ++e) {
        u1[e] = b.add_edge();
        u2[e] = b.add_edge();
    }
    std::vector<int> succ(H, -1), pred(H, -1);
    for (auto& vt : rs.vertices) {
        int r = static_cast<int>(vt.size());
        for (int i = 0; i < r; ++i) {
            int e = b.add_edge();
            succ[vt[i]] = 2 * e;
            pred[vt[(i + 1) % r]] = 2 * e + 1;
        }
    }
    for (auto& vt : rs.vertices)
        for (int h : vt) b.rs.vertices.push_back({2 * h, succ[h], pred[h]});
    for (int e = 0; e < E; ++e) {
        int sa = 2 * e, sb = 2 * e + 1;
        b.rs.vertices.push_back({2 * sa + 1, 2 * u1[e], 2 * u2[e]});
        b.rs.vertices.push_back({2 * sb + 1, 2 * u2[e] + 1, 2 * u1[e] + 1});
    }
    PerfectMatchingDiagram p;
    p.rs = std::move(b.rs);
    p.matching.resize(H);
    std::iota(p.matching.begin(), p.matching.end(), 0);
    return p;
}

/// Thin-strand circle model of a perfect matching state: the complement of
/// the matching is shrunk to strands and every matching band is kept, with
/// a half-twist added when its bit is set.  Tokens are those of matching
/// half-edges; circles are numbered by minimal token and labels of other
/// tokens are -1.
inline int pm_circle_labels(const PerfectMatchingDiagram& pmd, const std::vector<int>& alpha,
                            std::vector<int>& label) {
    const auto& rs = pmd.rs;
    int T = rs.token_count();
    auto hv = rs.half_edge_vertex();
    auto hp = rs.half_edge_position();
    std::vector<int> mhalf(rs.vertex_count(), -1);  // matching half-edge per vertex
    std::vector<int> msign(rs.edge_count(), 0);
    for (std::size_t i = 0; i < pmd.matching.size(); ++i) {
        int e = pmd.matching[i];
        mhalf[hv[2 * e]] = 2 * e;
        mhalf[hv[2 * e + 1]] = 2 * e + 1;
        msign[e] = rs.signs[e] * (alpha[i] ? -1 : 1);
    }
    // strand end of a non-matching half-edge
    auto strand_tok = [&](int g) {
        int v = hv[g];
        int mu = mhalf[v];
        int r = static_cast<int>(rs.vertices[v].size());
        int after = rs.vertices[v][(hp[mu] + 1) % r];
        return after == g ? out_tok(mu) : in_tok(mu);
    };
    std::vector<int> link(T, -1);
    for (int e = 0; e < rs.edge_count(); ++e) {
        if (msign[e] != 0) continue;
        int a = strand_tok(2 * e), c = strand_tok(2 * e + 1);
        link[a] = c;
        link[c] = a;
    }
    label.assign(T, -1);
    int k = 0;
    for (int s = 0; s < T; ++s) {
        if (label[s] >= 0 || link[s] < 0) continue;
        int t = s;
        do {
            label[t] = k;
            int g = glue(t, msign[edge_of(tok_half(t))]);
            label[g] = k;
            t = link[g];
        } while (t != s);
        ++k;
    }
    return k;
}

}  // namespace vhx
