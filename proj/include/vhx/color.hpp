#pragma once

// Numeric validation layer: color basis of k[x]/(x^n - 1) and the harmonic
// kernel count.  Floating point on purpose; nothing exact depends on it.

#include "algebra.hpp"
#include "colorings.hpp"
#include "complex.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <vector>

namespace vhx {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

inline cplx root_of_unity(int n, long long k) {
    const double pi = std::acos(-1.0);
    double a = 2 * pi * static_cast<double>(k % n) / n;
    return {std::cos(a), std::sin(a)};
}

/// Columns are c_i = (1/n) sum_j lambda^{ij} x^j in monomial coordinates.
inline CMatrix color_basis(int n) {
    CMatrix C(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) C(j, i) = root_of_unity(n, static_cast<long long>(i) * j) / double(n);
    return C;
}

inline double sqrt_n(int n) { return std::sqrt(static_cast<double>(n)); }

/// Hat maps in the monomial basis.  V (x) V uses index i*n + j.
inline CMatrix hat_m_matrix(int n) {
    CMatrix M = CMatrix::Zero(n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (auto& t : m_terms(n, i, j, Part::hat)) M(t.k, i * n + j) += t.c.to_double();
    return M;
}

inline CMatrix hat_delta_matrix(int n) {
    CMatrix M = CMatrix::Zero(n * n, n);
    for (int k = 0; k < n; ++k)
        for (auto& t : delta_terms(n, k, Part::hat)) M(t.i * n + t.j, k) += t.c.to_double();
    return M;
}

inline CMatrix hat_eta_matrix(int n) {
    CMatrix M = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k)
        for (auto& t : eta_terms(n, k, Part::hat)) M(t.k, k) += t.c.to_double();
    return M;
}

/// Structure constants predicted in the color basis, with their adjoints.
struct ColorMaps {
    CMatrix m, delta, eta;              // in color coordinates
    CMatrix m_adj, delta_adj, eta_adj;  // adjoints, color coordinates
};

inline ColorMaps color_maps(int n) {
    int m = n / 2;
    ColorMaps c;
    c.m = CMatrix::Zero(n, n * n);
    c.delta = CMatrix::Zero(n * n, n);
    c.eta = CMatrix::Zero(n, n);
    c.m_adj = CMatrix::Zero(n * n, n);
    c.delta_adj = CMatrix::Zero(n, n * n);
    c.eta_adj = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        c.m(i, i * n + i) = 1;
        c.delta(i * n + i, i) = double(n) * root_of_unity(n, -2LL * m * i + 2LL * n * n);
        c.eta(i, i) = sqrt_n(n) * root_of_unity(n, -1LL * m * i + 1LL * n * n);
        c.m_adj(i * n + i, i) = 1;
        c.delta_adj(i, i * n + i) = double(n) * root_of_unity(n, 2LL * m * i);
        c.eta_adj(i, i) = sqrt_n(n) * root_of_unity(n, 1LL * m * i);
    }
    return c;
}

/// Kronecker product of two square change-of-basis matrices.
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

/// Monomial-basis adjoint under the metric making the color basis
/// orthonormal: <x^a, x^b> = n delta_ab on every tensor factor.
inline CMatrix monomial_adjoint(const CMatrix& A, int n, int k_src, int k_tgt) {
    double scale = std::pow(static_cast<double>(n), k_tgt - k_src);
    return scale * A.adjoint();
}

struct HarmonicReport {
    bool agree = true;
    bool inconclusive = false;
    std::vector<int> kernel;       // per state
    std::vector<std::uint64_t> colorings;
    double worst_gap = 0;          // smallest singular value above threshold / threshold
};

/// dim(ker hat-delta_nu  cap  ker hat-delta*_nu) per state, against partial colorings.
inline HarmonicReport harmonic_kernel_check(const RotationSystem& rs, int n, double tol = 1e-7) {
    auto C = build_vertex_complex(rs, n);
    auto fr = filtered_ranks(rs, n);
    HarmonicReport rep;
    std::uint64_t S = C.state_count();
    rep.kernel.assign(S, 0);
    rep.colorings = fr.per_state;
    rep.worst_gap = 1e300;
    for (std::uint64_t s = 0; s < S; ++s) {
        long d = static_cast<long>(C.dim(s));
        std::vector<CMatrix> blocks;
        for (auto& M : C.maps) {
            if (M.tail != s && M.head != s) continue;
            long dt = static_cast<long>(C.dim(M.tail)), dh = static_cast<long>(C.dim(M.head));
            CMatrix A = CMatrix::Zero(dh, dt);
            for (int t = 0; t < 4; ++t)
                for (auto& e : M.parts[t]) A(static_cast<long>(e.tgt), static_cast<long>(e.src)) += e.c.to_double();
            if (M.tail == s) blocks.push_back(A);
            else blocks.push_back(monomial_adjoint(A, n, C.k[M.tail], C.k[M.head]));
        }
        long rows = 0;
        for (auto& b : blocks) rows += b.rows();
        CMatrix stack(std::max(rows, 1L), d);
        stack.setZero();
        long r = 0;
        for (auto& b : blocks) {
            stack.block(r, 0, b.rows(), d) = b;
            r += b.rows();
        }
        Eigen::JacobiSVD<CMatrix> svd(stack);
        auto sv = svd.singularValues();
        int rank = 0;
        for (long i = 0; i < sv.size(); ++i) {
            if (sv(i) > tol) {
                ++rank;
                rep.worst_gap = std::min(rep.worst_gap, sv(i) / tol);
            } else if (sv(i) > tol / 10) {
                rep.inconclusive = true;
            }
        }
        rep.kernel[s] = static_cast<int>(d - rank);
        if (static_cast<std::uint64_t>(rep.kernel[s]) != rep.colorings[s]) rep.agree = false;
    }
    if (rep.worst_gap < 10) rep.inconclusive = true;
    return rep;
}

}  // namespace vhx
