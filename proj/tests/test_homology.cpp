#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace vhx;

namespace {

int at(const RankTable& t, int i, int j) {
    auto it = t.find({i, j});
    return it == t.end() ? 0 : it->second;
}

QuadScalar r2() { return QuadScalar::sqrt_n(2); }

using Image = std::map<std::pair<std::uint64_t, std::uint64_t>, QuadScalar>;

}  // namespace

TEST(Homology, ThetaTable) {
    auto C = build_vertex_complex(fixture("theta"), 2);
    auto H = bigraded_homology(C);
    RankTable want{{{0, 0}, 1}, {{0, 1}, 3}, {{0, 2}, 3}, {{1, 3}, 1}, {{1, 4}, 2},
                   {{2, 6}, 1}, {{2, 7}, 3}, {{2, 8}, 3}, {{2, 9}, 1}};
    EXPECT_EQ(H, want);
    EXPECT_EQ(graded_euler(H).str(), ncolor_vertex_polynomial(fixture("theta"), 2).str());
}

TEST(Homology, P3Degree6) {
    auto H = bigraded_homology(build_vertex_complex(fixture("P3"), 2));
    EXPECT_EQ(at(H, 1, 6), 1);
    EXPECT_EQ(at(H, 2, 6), 10);
}

TEST(Homology, LollipopHasNoDifferential) {
    auto rs = lollipop3();
    auto C = build_vertex_complex(rs, 2);
    for (auto& M : C.maps) EXPECT_TRUE(M.parts[0].empty());
    EXPECT_EQ(bigraded_homology(C), chain_dimensions(C));
}

TEST(Homology, ThetaLeeMaps) {
    auto C = build_vertex_complex(fixture("theta"), 2);
    ASSERT_EQ(C.k[0], 3);
    ASSERT_EQ(C.k[1], 1);
    ASSERT_EQ(C.k[2], 1);
    ASSERT_EQ(C.k[3], 3);
    Image both{{{1, 0}, r2()}, {{2, 0}, r2()}};
    EXPECT_EQ(apply_differential(C, 0, 4, 1), both);  // 1 (x) 1 (x) x
    EXPECT_EQ(apply_differential(C, 0, 7, 2), both);  // x (x) x (x) x
    EXPECT_EQ(apply_differential(C, 2, 1, 3), (Image{{{3, 0}, r2()}}));
    EXPECT_EQ(apply_differential(C, 1, 1, 3), (Image{{{3, 0}, -r2()}}));
}

TEST(Homology, ThetaGradedSquares) {
    auto C = build_vertex_complex(fixture("theta"), 2);
    EXPECT_TRUE(graded_square_failures(C).empty());
}

TEST(Homology, SquaresVanishEverywhere) {
    for (auto name : {"theta", "thetaNeg", "K4", "thetab"})
        for (int n : {2, 3, 4}) {
            auto C = build_vertex_complex(fixture(name), n);
            EXPECT_TRUE(graded_square_failures(C).empty()) << name << " n=" << n;
        }
    for (int n : {2, 3}) {
        EXPECT_TRUE(graded_square_failures(build_vertex_complex(fixture("P3"), n)).empty()) << n;
        EXPECT_TRUE(graded_square_failures(build_vertex_complex(lollipop3(), n)).empty()) << n;
    }
}

TEST(Homology, PathIndependence) {
    VertexComplexOptions opt;
    opt.verify_paths = true;
    for (auto name : {"theta", "K4"})
        for (int n : {2, 3}) {
            auto a = build_vertex_complex(fixture(name), n, opt);
            auto b = build_vertex_complex(fixture(name), n);
            ASSERT_EQ(a.maps.size(), b.maps.size());
            for (std::size_t i = 0; i < a.maps.size(); ++i)
                for (int t = 0; t < 4; ++t) EXPECT_EQ(a.maps[i].parts[t].size(), b.maps[i].parts[t].size());
        }
}

TEST(Homology, ConfigurationThree) {
    // some 2 -> 2 edge must send 1 (x) 1 to sqrt3 (x^2 (x) x + x (x) x^2) up to sign
    bool found = false;
    for (auto name : {"theta", "K4", "P3"}) {
        auto C = build_vertex_complex(fixture(name), 3);
        for (auto& M : C.maps) {
            if (C.k[M.tail] != 2 || C.k[M.head] != 2) continue;
            std::map<std::uint64_t, QuadScalar> img;
            for (auto& e : M.parts[0])
                if (e.src == 0) img[e.tgt] += e.c;
            auto s = QuadScalar::sqrt_n(3) * M.sign;
            if (img.size() == 2 && img.count(5) && img.count(7) && img[5] == s && img[7] == s) found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(Homology, EntriesRespectBigrading) {
    for (auto name : {"theta", "K4", "thetaNeg"})
        for (int n : {2, 3, 4}) {
            auto C = build_vertex_complex(fixture(name), n);
            for (auto& M : C.maps)
                for (int t = 0; t < 4; ++t)
                    for (auto& e : M.parts[t])
                        EXPECT_EQ(C.degree(M.head, e.tgt), C.degree(M.tail, e.src) + n * t) << name;
        }
}

TEST(Homology, EulerCharacteristicIsColorPolynomial) {
    for (auto name : {"theta", "thetaNeg", "K4", "thetab", "P3"})
        for (int n : {2, 3}) {
            auto rs = fixture(name);
            auto C = build_vertex_complex(rs, n);
            auto want = ncolor_vertex_polynomial(rs, n);
            EXPECT_EQ(graded_euler(chain_dimensions(C)), want) << name;
            EXPECT_EQ(graded_euler(bigraded_homology(C)), want) << name << " n=" << n;
        }
}

TEST(Homology, K33EulerCharacteristic) {
    auto rs = fixture("K33");
    auto C = build_vertex_complex(rs, 2);
    EXPECT_EQ(graded_euler(bigraded_homology(C)), ncolor_vertex_polynomial(rs, 2));
    EXPECT_EQ(at_one(ncolor_vertex_polynomial(rs, 2)), 0);
}

TEST(Homology, VertexCap) {
    EXPECT_THROW(build_vertex_complex(fixture("Dodec"), 2), std::invalid_argument);
    EXPECT_THROW(build_vertex_complex(fixture("theta"), 1), std::invalid_argument);
}

TEST(PmComplex, SquaresAndEuler) {
    for (auto name : {"theta", "K4"})
        for (int n : {2, 3}) {
            auto pmd = blowup(fixture(name));
            auto C = build_pm_complex(pmd, n);
            EXPECT_TRUE(graded_square_failures(C).empty()) << name;
            int l = static_cast<int>(pmd.matching.size());
            int m = n / 2;
            LaurentPoly want;
            for (std::uint64_t a = 0; a < (1ull << l); ++a) {
                int k = pm_circle_count(pmd, StateIndex{a, l});
                auto term = loop_polynomial(n).pow(k) * LaurentPoly::monomial(m * std::popcount(a));
                want = std::popcount(a) % 2 ? want - term : want + term;
            }
            EXPECT_EQ(graded_euler(chain_dimensions(C)), want);
            EXPECT_EQ(graded_euler(bigraded_homology(C)), want);
        }
}
