#pragma once

#include "ribbon.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace vhx {

struct StateIndex {
    std::uint64_t mask = 0;
    int sites = 0;

    bool bit(int i) const { return (mask >> i) & 1u; }
    int weight() const { return std::popcount(mask); }
    StateIndex complement() const {
        std::uint64_t full = sites >= 64 ? ~0ull : ((1ull << sites) - 1);
        return {~mask & full, sites};
    }
    std::vector<int> bits() const {
        std::vector<int> b(sites);
        for (int i = 0; i < sites; ++i) b[i] = bit(i);
        return b;
    }
    bool operator==(const StateIndex&) const = default;
};

inline StateIndex state_from_bits(const std::vector<int>& b) {
    if (b.size() > 63) throw std::invalid_argument("too many sites for a 64-bit state index");
    StateIndex s{0, static_cast<int>(b.size())};
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i]) s.mask |= 1ull << i;
    return s;
}

/// (-1)^(number of 1s before the flipped site)
inline int edge_sign(std::uint64_t tail, int site) {
    std::uint64_t below = site == 0 ? 0 : (tail & ((1ull << site) - 1));
    return (std::popcount(below) & 1) ? -1 : 1;
}

struct HypercubeEdge {
    StateIndex tail, head;
    int site;
    int sign;
};

inline HypercubeEdge make_edge(StateIndex tail, int site) {
    if (tail.bit(site)) throw std::invalid_argument("site already set");
    StateIndex head{tail.mask | (1ull << site), tail.sites};
    return {tail, head, site, edge_sign(tail.mask, site)};
}

/// Edge signs after twisting the listed half-edges (bit h of twist set).
inline std::vector<int> twisted_signs(const RotationSystem& rs, const std::vector<char>& twist) {
    std::vector<int> s = rs.signs;
    for (int e = 0; e < rs.edge_count(); ++e)
        if (twist[2 * e] ^ twist[2 * e + 1]) s[e] = -s[e];
    return s;
}

/// Half-edge twist pattern of a vertex state: every half-edge at a
/// 1-smoothed vertex is twisted.
inline std::vector<char> vertex_twist(const RotationSystem& rs, StateIndex nu) {
    if (nu.sites != rs.vertex_count()) throw std::invalid_argument("state length does not match vertex count");
    std::vector<char> tw(rs.half_edge_count(), 0);
    for (int v = 0; v < rs.vertex_count(); ++v)
        if (nu.bit(v))
            for (int h : rs.vertices[v]) tw[h] = 1;
    return tw;
}

inline RotationSystem vertex_state(const RotationSystem& rs, StateIndex nu) {
    RotationSystem out = rs;
    out.signs = twisted_signs(rs, vertex_twist(rs, nu));
    return out;
}

inline RotationSystem pm_state(const PerfectMatchingDiagram& pmd, StateIndex alpha) {
    if (alpha.sites != static_cast<int>(pmd.matching.size()))
        throw std::invalid_argument("state length does not match matching size");
    RotationSystem out = pmd.rs;
    for (int i = 0; i < alpha.sites; ++i)
        if (alpha.bit(i)) out.signs[pmd.matching[i]] *= -1;
    return out;
}

/// Circle count of a matching state in the thin-strand model.
inline int pm_circle_count(const PerfectMatchingDiagram& pmd, StateIndex alpha) {
    std::vector<int> lab;
    return pm_circle_labels(pmd, alpha.bits(), lab);
}

/// Fast repeated circle counting for vertex states of a fixed diagram.
class VertexStateTracer {
public:
    explicit VertexStateTracer(const RotationSystem& rs) : rs_(rs), arc_(corner_arcs(rs)) {
        auto hv = rs.half_edge_vertex();
        ends_.resize(rs.edge_count());
        for (int e = 0; e < rs.edge_count(); ++e) ends_[e] = {hv[2 * e], hv[2 * e + 1]};
    }

    const RotationSystem& rs() const { return rs_; }
    const std::vector<int>& arcs() const { return arc_; }

    void signs_for(std::uint64_t mask, std::vector<int>& s) const {
        s.resize(rs_.edge_count());
        for (int e = 0; e < rs_.edge_count(); ++e) {
            int f = static_cast<int>(((mask >> ends_[e].first) ^ (mask >> ends_[e].second)) & 1u);
            s[e] = f ? -rs_.signs[e] : rs_.signs[e];
        }
    }

    int count(std::uint64_t mask, std::vector<int>& signs, std::vector<int>& label) const {
        signs_for(mask, signs);
        return label_circles(arc_, signs, label);
    }

    CircleDecomposition decomposition(StateIndex nu) const {
        return decompose(vertex_state(rs_, nu), arc_);
    }

private:
    RotationSystem rs_;
    std::vector<int> arc_;
    std::vector<std::pair<int, int>> ends_;
};

enum class StepKind { merge, split, same_circle };

inline const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::merge: return "merge";
        case StepKind::split: return "split";
        default: return "same-circle";
    }
}

struct CircleCorrespondence {
    StepKind kind;
    std::vector<int> stable;        // before circle -> after circle, -1 for active circles
    std::vector<int> active_before; // ascending
    std::vector<int> active_after;  // ascending
    int before_count = 0;
    int after_count = 0;
};

/// Correspondence between two token labelings that differ only at the
/// listed local tokens.
inline CircleCorrespondence circle_correspondence(const std::vector<int>& before, int kb,
                                                  const std::vector<int>& after, int ka,
                                                  const std::vector<int>& local_tokens) {
    CircleCorrespondence c;
    c.before_count = kb;
    c.after_count = ka;
    if (ka == kb - 1) c.kind = StepKind::merge;
    else if (ka == kb + 1) c.kind = StepKind::split;
    else if (ka == kb) c.kind = StepKind::same_circle;
    else throw std::logic_error("circle count changed by more than one across a single flip");
    std::vector<char> ab(kb, 0), aa(ka, 0);
    for (int t : local_tokens) {
        ab[before[t]] = 1;
        aa[after[t]] = 1;
    }
    for (int i = 0; i < kb; ++i)
        if (ab[i]) c.active_before.push_back(i);
    for (int i = 0; i < ka; ++i)
        if (aa[i]) c.active_after.push_back(i);
    c.stable.assign(kb, -1);
    for (int t = 0; t < static_cast<int>(before.size()); ++t) {
        int b = before[t];
        if (b < 0 || ab[b] || c.stable[b] >= 0) continue;
        c.stable[b] = after[t];
    }
    if (c.kind == StepKind::same_circle && c.active_before.size() != 1)
        throw std::logic_error("same-circle step touching two circles");
    return c;
}

/// The three bubbled-blowup sites (original half-edges) met when vertex v
/// changes smoothing, in ascending order.
inline std::vector<int> vertex_to_bubbled_path(const RotationSystem& rs, int v) {
    std::vector<int> s = rs.vertices[v];
    std::sort(s.begin(), s.end());
    return s;
}

/// All orderings of the path sites, the canonical one first.
inline std::vector<std::vector<int>> all_bubbled_paths(const RotationSystem& rs, int v) {
    std::vector<std::vector<int>> out;
    auto s = vertex_to_bubbled_path(rs, v);
    do out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

}  // namespace vhx
