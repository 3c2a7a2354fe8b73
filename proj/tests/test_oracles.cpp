#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace vhx;

namespace {

AbstractGraph graph(const char* name) { return AbstractGraph::from(fixture(name)); }

}  // namespace

TEST(Oracles, PerfectMatchingCounts) {
    EXPECT_EQ(perfect_matchings(graph("theta")).size(), 3u);
    EXPECT_EQ(perfect_matchings(graph("K4")).size(), 3u);
    EXPECT_EQ(perfect_matchings(graph("P3")).size(), 4u);
    EXPECT_EQ(perfect_matchings(graph("K33")).size(), 6u);
    EXPECT_EQ(perfect_matchings(AbstractGraph::from(lollipop3())).size(), 0u);
    EXPECT_EQ(perfect_matchings(AbstractGraph::from(dumbbell())).size(), 1u);
}

TEST(Oracles, MatchingsAreDisjointCovers) {
    auto g = graph("Dodec");
    auto pms = perfect_matchings(g);
    EXPECT_EQ(pms.size(), 36u);
    for (auto& M : pms) {
        std::vector<int> cover(g.vertices, 0);
        for (int e : M) {
            ++cover[g.edges[e].first];
            ++cover[g.edges[e].second];
        }
        for (int c : cover) EXPECT_EQ(c, 1);
    }
}

TEST(Oracles, Classification) {
    auto g = graph("K33");
    for (auto& M : perfect_matchings(g)) {
        auto p = classify_matching(g, M);
        EXPECT_TRUE(p.even);
        EXPECT_EQ(p.cycle_lengths, std::vector<int>{6});
    }
    auto t = graph("theta");
    for (auto& M : perfect_matchings(t)) {
        auto p = classify_matching(t, M);
        EXPECT_TRUE(p.even);
        EXPECT_EQ(p.cycle_lengths, std::vector<int>{2});
    }
    EXPECT_THROW(classify_matching(t, {}), std::invalid_argument);
}

TEST(Oracles, OddMatchingsExist) {
    // the triangular prism has a perfect matching leaving two triangles
    auto g = graph("P3");
    int odd = 0;
    for (auto& M : perfect_matchings(g)) odd += !classify_matching(g, M).even;
    EXPECT_EQ(odd, 1);
}

TEST(Oracles, TaitCounts) {
    EXPECT_EQ(count_tait_colorings(graph("theta")), 6u);
    EXPECT_EQ(count_tait_colorings(graph("K4")), 6u);
    EXPECT_EQ(count_tait_colorings(graph("K33")), 12u);
    EXPECT_EQ(count_tait_colorings(graph("Dodec")), 60u);
    EXPECT_EQ(count_tait_colorings(AbstractGraph::from(lollipop3())), 0u);
}

TEST(Oracles, Bridges) {
    EXPECT_TRUE(bridges(graph("theta")).empty());
    EXPECT_TRUE(bridges(graph("K33")).empty());
    EXPECT_EQ(bridges(AbstractGraph::from(lollipop3())).size(), 3u);
    EXPECT_EQ(bridges(AbstractGraph::from(dumbbell())), std::vector<int>{1});
}

TEST(Oracles, TaitFromEvenMatchings) {
    // color the matching one way and alternate the other two around each cycle
    for (auto name : {"theta", "K4", "P3", "K33", "Dodec"}) {
        auto g = graph(name);
        std::uint64_t sum = 0;
        for (auto& M : perfect_matchings(g)) {
            auto p = classify_matching(g, M);
            if (p.even) sum += 1ull << p.cycle_lengths.size();
        }
        EXPECT_EQ(sum, count_tait_colorings(g)) << name;
    }
}
