#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace vhx;

namespace {

LaurentPoly lp(std::initializer_list<std::pair<int, long long>> t) {
    LaurentPoly p;
    for (auto [e, c] : t) p.add_term(e, c);
    return p;
}

IntPoly ip(std::initializer_list<std::pair<int, long long>> t) {
    IntPoly p;
    for (auto [e, c] : t) p.add_term(e, c);
    return p;
}

LaurentPoly q(int e) { return LaurentPoly::monomial(e); }
IntPoly n_(int e) { return IntPoly::monomial(e); }

}  // namespace

TEST(Poly, Arithmetic) {
    auto a = lp({{1, 1}, {0, 1}});
    EXPECT_EQ((a * a).str(), "q^2 + 2*q + 1");
    EXPECT_EQ((a - a).str(), "0");
    EXPECT_EQ(a.pow(3), a * a * a);
    EXPECT_EQ(lp({{-1, 1}, {0, -3}}).str(), "-3 + q^-1");
    EXPECT_EQ(ip({{3, 2}, {1, -2}}).str(), "2*n^3 - 2*n");
    EXPECT_EQ(ip({{3, 2}, {1, -2}}).eval(2), 12);
}

TEST(Poly, Interpolation) {
    std::vector<BigInt> ys;
    for (int x = 0; x < 6; ++x) ys.push_back(BigInt(4) * x * (x - 1) * (x - 1));
    EXPECT_EQ(interpolate_integer(ys), ip({{3, 4}, {2, -8}, {1, 4}}));
}

TEST(LoopPolynomial, SmallN) {
    EXPECT_EQ(loop_polynomial(2), lp({{1, 1}, {0, 1}}));
    EXPECT_EQ(loop_polynomial(3), lp({{1, 1}, {0, 1}, {-1, 1}}));
    EXPECT_EQ(loop_polynomial(4), lp({{2, 1}, {1, 1}, {0, 1}, {-1, 1}}));
    EXPECT_EQ(loop_polynomial(1), LaurentPoly(1));
    EXPECT_THROW(loop_polynomial(0), std::invalid_argument);
}

TEST(NColor, Theta) {
    auto L = loop_polynomial(2);
    auto expect = L.pow(3) - q(3) * L.scaled(2) + q(6) * L.pow(3);
    auto got = ncolor_vertex_polynomial(fixture("theta"), 2);
    EXPECT_EQ(got, expect);
    EXPECT_EQ(got, lp({{0, 1}, {1, 3}, {2, 3}, {3, -1}, {4, -2}, {6, 1}, {7, 3}, {8, 3}, {9, 1}}));
    EXPECT_EQ(at_one(got), 12);
}

TEST(NColor, P3) {
    auto expect = lp({{0, 1},    {1, 5},    {2, 10},  {3, 4},   {4, -13}, {5, -17}, {6, 9},   {7, 33},
                      {8, 27},   {9, -11},  {10, -36}, {11, -24}, {12, 7},  {13, 33}, {14, 27}, {15, 3},
                      {16, -18}, {17, -18}, {18, -5}, {19, 5},  {20, 10}, {21, 10}, {22, 5},  {23, 1}});
    EXPECT_EQ(ncolor_vertex_polynomial(fixture("P3"), 2), expect);
    // the factored form
    auto a = lp({{0, 1}, {1, 1}});
    auto a2 = a * a, a4 = a2 * a2;
    auto f = a * (q(3).scaled(-6) * a2 - q(15).scaled(6) * a2 + a4 + q(18) * a4 -
                  q(9).scaled(4) * (LaurentPoly(3) + a2.scaled(2)) + q(6).scaled(3) * (LaurentPoly(2) + a2.scaled(3)) +
                  q(12).scaled(3) * (LaurentPoly(2) + a2.scaled(3)));
    EXPECT_EQ(f, expect);
}

TEST(NColor, K33Factored) {
    auto a = lp({{0, 1}, {1, 1}});
    auto a2 = a * a;
    auto c = lp({{0, -1}, {3, 1}});
    auto expect = a * c * c *
                  (a2 + q(12) * a2 - q(3).scaled(2) * (LaurentPoly(1) + a2) - q(9).scaled(2) * (LaurentPoly(1) + a2) +
                   q(6).scaled(2) * (LaurentPoly(1) + a2.scaled(2)));
    EXPECT_EQ(ncolor_vertex_polynomial(fixture("K33"), 2), expect);
}

TEST(VertexPoly, Fixtures) {
    EXPECT_EQ(vertex_polynomial(fixture("theta")), ip({{3, 2}, {1, -2}}));
    EXPECT_EQ(vertex_polynomial(fixture("thetaNeg")), ip({{2, 2}, {1, -2}}));
    EXPECT_EQ(vertex_polynomial(fixture("K4")), ip({{4, 2}, {2, -2}}));
    EXPECT_EQ(vertex_polynomial(fixture("P3")), ip({{5, 2}, {3, -2}}));
    EXPECT_EQ(vertex_polynomial(fixture("thetab")), ip({{5, 2}, {3, -2}}));
    EXPECT_TRUE(vertex_polynomial(fixture("K33")).is_zero());
}

TEST(VertexPoly, Dodecahedron) {
    auto n = n_(1);
    auto expect = IntPoly(2) * (n + IntPoly(1)) * n * n * (n - IntPoly(1)) *
                  (IntPoly(240) - n_(2).scaled(116) + n_(4).scaled(114) + n_(6).scaled(11) + n_(8));
    auto V = vertex_polynomial(fixture("Dodec"));
    EXPECT_EQ(V, expect);
    EXPECT_EQ(V.eval(2), 61440);
}

TEST(VertexPoly, SpecializationOfNColor) {
    for (auto name : {"theta", "thetaNeg", "K4", "P3", "K33"}) {
        auto rs = fixture(name);
        auto V = vertex_polynomial(rs);
        for (int n = 2; n <= 5; ++n) EXPECT_EQ(at_one(ncolor_vertex_polynomial(rs, n)), V.eval(n)) << name << n;
    }
}

TEST(VertexPoly, Parity) {
    for (auto name : {"theta", "K4", "P3", "thetab", "K33", "Dodec"}) {
        auto rs = fixture(name);
        auto V = vertex_polynomial(rs);
        if (V.is_zero()) continue;
        if ((rs.vertex_count() / 2) % 2 == 0) EXPECT_TRUE(is_even_function(V)) << name;
        else EXPECT_TRUE(is_odd_function(V)) << name;
    }
}

TEST(VertexPoly, BlowupChain) {
    auto th = fixture("theta");
    auto k4 = blowup_at(th, {1});
    auto p3 = blowup_at(k4, {0});
    auto V0 = vertex_polynomial(th), V1 = vertex_polynomial(k4), V2 = vertex_polynomial(p3);
    EXPECT_EQ(V1, V0 * n_(1));
    EXPECT_EQ(V2, V1 * n_(1));
    EXPECT_EQ(V2, vertex_polynomial(fixture("P3")));
    // blowing down the triangles recovers the chain: V(P3) = n^2 V(theta)
    EXPECT_EQ(vertex_polynomial(fixture("P3")), V0 * n_(2));
    // every vertex of K4 and of theta
    for (int v = 0; v < 4; ++v) EXPECT_EQ(vertex_polynomial(blowup_at(fixture("K4"), {v})), V1 * n_(1));
}

TEST(VertexPoly, RelabelingInvariance) {
    for (auto name : {"theta", "K4", "P3", "K33"}) {
        auto rs = fixture(name);
        std::vector<int> order(rs.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        std::reverse(order.begin(), order.end());
        std::vector<int> rot(rs.vertex_count());
        for (int i = 0; i < rs.vertex_count(); ++i) rot[i] = i % 3;
        auto p = permute_vertices(rs, order, rot);
        std::vector<int> perm(rs.edge_count());
        for (int e = 0; e < rs.edge_count(); ++e) perm[e] = (e * 5 + 1) % rs.edge_count();
        std::vector<char> sw(rs.edge_count());
        for (int e = 0; e < rs.edge_count(); ++e) sw[e] = e % 2;
        auto r = relabel_edges(p, perm, sw);
        validate(r);
        EXPECT_EQ(vertex_polynomial(r), vertex_polynomial(rs)) << name;
        EXPECT_EQ(ncolor_vertex_polynomial(r, 2), ncolor_vertex_polynomial(rs, 2)) << name;
        EXPECT_EQ(ncolor_vertex_polynomial(r, 3), ncolor_vertex_polynomial(rs, 3)) << name;
    }
}

TEST(VertexPoly, OrientedRibbonUpToSign) {
    // reverse the rotation at one vertex: another oriented ribbon structure
    for (auto name : {"theta", "K4", "P3"}) {
        auto rs = fixture(name);
        for (int v = 0; v < rs.vertex_count(); ++v) {
            auto alt = rs;
            std::reverse(alt.vertices[v].begin(), alt.vertices[v].end());
            auto a = vertex_polynomial(rs), b = vertex_polynomial(alt);
            EXPECT_TRUE(a == b || a == -b) << name << " v" << v;
        }
    }
}

TEST(VertexPoly, DisjointUnionProduct) {
    auto th = fixture("theta");
    auto k4 = fixture("K4");
    auto hist = [](const RotationSystem& a, const RotationSystem& b) {
        RotationSystem u = a;
        int off = a.half_edge_count();
        for (auto vt : b.vertices) {
            for (int& h : vt) h += off;
            u.vertices.push_back(vt);
        }
        u.signs.insert(u.signs.end(), b.signs.begin(), b.signs.end());
        return u;
    };
    auto u = hist(th, k4);
    EXPECT_EQ(vertex_polynomial(u), vertex_polynomial(th) * vertex_polynomial(k4));
    EXPECT_EQ(ncolor_vertex_polynomial(u, 2), ncolor_vertex_polynomial(th, 2) * ncolor_vertex_polynomial(k4, 2));
}

TEST(AbstractPoly, Trivalent) {
    auto th = fixture("theta");
    auto r = abstract_vertex_polynomial(th);
    EXPECT_EQ(r.poly, vertex_polynomial(th));
    EXPECT_FALSE(r.negative_powers);
    EXPECT_EQ(vertex_polynomial(blowup(th).rs), ip({{5, 2}, {3, -2}}));
    EXPECT_TRUE(abstract_vertex_polynomial(fixture("K33")).poly.is_zero());
    EXPECT_EQ(abstract_vertex_polynomial(fixture("K4")).poly, ip({{4, 2}, {2, -2}}));
}

TEST(AbstractPoly, AnyValence) {
    // two vertices joined by four parallel edges, a 4-valent plane diagram
    auto rs = parse_vpd("G[V[1,3,5,7],V[2,8,6,4]]", true);
    auto r = abstract_vertex_polynomial(rs);
    EXPECT_FALSE(r.negative_powers);
    EXPECT_GT(r.poly.leading(), 0);
    // a degree-2 vertex blows up into a bubble
    auto loop = parse_vpd("G[V[1,2]]", true);
    auto rl = abstract_vertex_polynomial(loop);
    EXPECT_FALSE(rl.poly.is_zero());
}
