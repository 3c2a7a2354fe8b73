#pragma once

#include "quad.hpp"

#include <stdexcept>
#include <vector>

namespace vhx {

/// Which part of a local map: the t = 0 map, its tilde (degree-n) part,
/// or their sum, the map for k[x]/(x^n - 1).
enum class Part { plain, tilde, hat };

/// qdeg of x^k in V: m - k for both parities of n.
inline int qdeg(int n, int k) {
    if (k < 0 || k >= n) throw std::out_of_range("exponent out of range");
    return n / 2 - k;
}

struct Term1 {
    int k;
    QuadScalar c;
    int tilde;  // 0 or 1
};

struct Term2 {
    int i, j;
    QuadScalar c;
    int tilde;
};

inline void check_exp(int n, int k) {
    if (n < 1 || k < 0 || k >= n) throw std::out_of_range("exponent out of range");
}

inline bool want(Part p, int tilde) {
    return p == Part::hat || (p == Part::plain) == (tilde == 0);
}

/// Multiplication x^i (x) x^j.
inline std::vector<Term1> m_terms(int n, int i, int j, Part p = Part::hat) {
    check_exp(n, i);
    check_exp(n, j);
    std::vector<Term1> out;
    int s = i + j;
    if (s < n) {
        if (want(p, 0)) out.push_back({s, QuadScalar(1), 0});
    } else if (want(p, 1)) {
        out.push_back({s - n, QuadScalar(1), 1});
    }
    return out;
}

/// Comultiplication of x^k: sum over i + j = k + 2m (plain) or k + 2m - n (tilde).
inline std::vector<Term2> delta_terms(int n, int k, Part p = Part::hat) {
    check_exp(n, k);
    int m = n / 2;
    std::vector<Term2> out;
    for (int tilde = 0; tilde < 2; ++tilde) {
        if (!want(p, tilde)) continue;
        int s = k + 2 * m - tilde * n;
        for (int i = 0; i < n; ++i) {
            int j = s - i;
            if (j >= 0 && j < n) out.push_back({i, j, QuadScalar(1), tilde});
        }
    }
    return out;
}

/// Same-circle map: sqrt(n) x^{k+m}, wrapped into the tilde part past x^{n-1}.
inline std::vector<Term1> eta_terms(int n, int k, Part p = Part::hat) {
    check_exp(n, k);
    int m = n / 2;
    std::vector<Term1> out;
    int s = k + m;
    if (s < n) {
        if (want(p, 0)) out.push_back({s, QuadScalar::sqrt_n(n), 0});
    } else if (want(p, 1)) {
        out.push_back({s - n, QuadScalar::sqrt_n(n), 1});
    }
    return out;
}

/// Dense forms: element of V as n coefficients, of V (x) V as n*n with
/// index i*n + j for x^i (x) x^j.
inline std::vector<QuadScalar> map_m(int n, Part p, int i, int j) {
    std::vector<QuadScalar> v(n);
    for (auto& t : m_terms(n, i, j, p)) v[t.k] += t.c;
    return v;
}

inline std::vector<QuadScalar> map_delta(int n, Part p, int k) {
    std::vector<QuadScalar> v(n * n);
    for (auto& t : delta_terms(n, k, p)) v[t.i * n + t.j] += t.c;
    return v;
}

inline std::vector<QuadScalar> map_eta(int n, Part p, int k) {
    std::vector<QuadScalar> v(n);
    for (auto& t : eta_terms(n, k, p)) v[t.k] += t.c;
    return v;
}

}  // namespace vhx
