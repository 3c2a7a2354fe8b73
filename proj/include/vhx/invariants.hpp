#pragma once

#include "parallel.hpp"
#include "poly.hpp"
#include "states.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vhx {

inline int half_n(int n) { return n / 2; }  // m for both parities

/// q^m + ... + q^{-m+1} (n even) or q^m + ... + q^{-m} (n odd).
inline LaurentPoly loop_polynomial(int n) {
    if (n <= 0) throw std::invalid_argument("n must be positive");
    int m = half_n(n);
    LaurentPoly p;
    for (int k = 0; k < n; ++k) p.add_term(m - k, 1);
    return p;
}

/// hist[w][k] = number of vertex states of weight w with k circles.
using StateHistogram = std::vector<std::vector<std::int64_t>>;

inline StateHistogram state_histogram(const RotationSystem& rs, int threads = 0) {
    int V = rs.vertex_count();
    if (V > 40) throw std::invalid_argument("too many vertices for state enumeration");
    if (!rs.trivalent()) throw std::invalid_argument("vertex states need a trivalent diagram");
    VertexStateTracer tr(rs);
    int kmax = rs.token_count() / 2 + 1;
    StateHistogram init(V + 1, std::vector<std::int64_t>(kmax + 1, 0));
    struct Acc {
        StateHistogram h;
        std::vector<int> signs, label;
    };
    std::uint64_t total = 1ull << V;
    auto acc = parallel_fold(
        total, thread_count(threads), Acc{init, {}, {}},
        [&](Acc& a, std::uint64_t mask) {
            int k = tr.count(mask, a.signs, a.label);
            ++a.h[std::popcount(mask)][k];
        },
        [](Acc& out, const Acc& p) {
            for (std::size_t w = 0; w < out.h.size(); ++w)
                for (std::size_t k = 0; k < out.h[w].size(); ++k) out.h[w][k] += p.h[w][k];
        });
    return acc.h;
}

inline LaurentPoly ncolor_from_histogram(const StateHistogram& h, int n) {
    int m = half_n(n);
    LaurentPoly L = loop_polynomial(n);
    std::vector<LaurentPoly> Lk{LaurentPoly(1)};
    LaurentPoly out;
    for (std::size_t w = 0; w < h.size(); ++w)
        for (std::size_t k = 0; k < h[w].size(); ++k) {
            if (!h[w][k]) continue;
            while (Lk.size() <= k) Lk.push_back(Lk.back() * L);
            BigInt c = h[w][k];
            if (w % 2) c = -c;
            out += Lk[k].shifted(static_cast<int>(3 * m * w)).scaled(c);
        }
    return out;
}

inline IntPoly vertex_from_histogram(const StateHistogram& h) {
    IntPoly out;
    for (std::size_t w = 0; w < h.size(); ++w)
        for (std::size_t k = 0; k < h[w].size(); ++k)
            if (h[w][k]) out.add_term(static_cast<int>(k), BigInt(w % 2 ? -h[w][k] : h[w][k]));
    return out;
}

inline LaurentPoly ncolor_vertex_polynomial(const RotationSystem& rs, int n, int threads = 0) {
    return ncolor_from_histogram(state_histogram(rs, threads), n);
}

inline IntPoly vertex_polynomial(const RotationSystem& rs, int threads = 0) {
    return vertex_from_histogram(state_histogram(rs, threads));
}

/// Evaluate a Laurent polynomial at q = 1.
inline BigInt at_one(const LaurentPoly& p) {
    BigInt s = 0;
    for (auto& [e, c] : p.terms()) s += c;
    return s;
}

struct AbstractPolyReport {
    IntPoly poly;           // may carry negative exponents
    bool negated = false;   // sign normalization applied
    bool negative_powers = false;
};

/// n^{-|V|} V(blowup), normalized to a positive leading coefficient.
inline AbstractPolyReport abstract_vertex_polynomial(const RotationSystem& rs, int threads = 0) {
    std::vector<int> all(rs.vertex_count());
    for (int v = 0; v < rs.vertex_count(); ++v) all[v] = v;
    RotationSystem b = blowup_at(rs, all);
    AbstractPolyReport r;
    r.poly = vertex_polynomial(b, threads).shifted(-rs.vertex_count());
    if (r.poly.leading() < 0) {
        r.poly = -r.poly;
        r.negated = true;
    }
    r.negative_powers = !r.poly.is_zero() && r.poly.min_exp() < 0;
    return r;
}

}  // namespace vhx
