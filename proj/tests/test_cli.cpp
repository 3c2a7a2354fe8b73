#include "fixtures.hpp"
#include "vhx/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace vhx;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "vhx");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return std::string(VHX_FIXTURES) + "/" + name + ".vpd"; }

std::string temp_file(const std::string& name, const std::string& text) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST(Cli, VertexPoly) {
    auto r = call({"vertex-poly", fx("theta")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2*n^3 - 2*n\n");
    auto j = json::parse(call({"vertex-poly", "--json", fx("theta")}).out);
    EXPECT_EQ(j["var"], "n");
    EXPECT_EQ(j["terms"].dump(), "[[1,-2],[3,2]]");
}

TEST(Cli, NColorPoly) {
    auto r = call({"ncolor-poly", "--n", "2", fx("theta")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, ncolor_vertex_polynomial(fixture("theta"), 2).str() + "\n");
    auto multi = call({"ncolor-poly", "--n", "2,3", fx("theta")});
    EXPECT_NE(multi.out.find("n=3: "), std::string::npos);
}

TEST(Cli, Filtered) {
    auto r = call({"filtered", "--n", "2", fx("K33")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("ranks 2 8 22 32 22 8 2"), std::string::npos);
    EXPECT_NE(r.out.find("euler 0"), std::string::npos);
    EXPECT_NE(r.out.find("tm 96"), std::string::npos);
    auto j = json::parse(call({"filtered", "--json", "--n", "2", fx("K33")}).out);
    EXPECT_EQ(j["tm"], 96);
    EXPECT_EQ(j["ranks"].size(), 7u);
}

TEST(Cli, Tait) {
    auto r = call({"tait", fx("Dodec")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "60\n");
}

TEST(Cli, Homology) {
    auto r = call({"homology", "--n", "2", "--json", fx("theta")});
    EXPECT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["n"], 2);
    EXPECT_EQ(j["ranks"].size(), 9u);
    auto t = call({"homology", "--n", "2", fx("theta")});
    EXPECT_NE(t.out.find("j\\i"), std::string::npos);
}

TEST(Cli, JsonIsDeterministic) {
    auto a = call({"filtered", "--json", "--n", "2,3", "--threads", "1", fx("P3")});
    auto b = call({"filtered", "--json", "--n", "2,3", "--threads", "4", fx("P3")});
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, FacesAndMatchings) {
    auto f = json::parse(call({"faces", "--json", fx("K4")}).out);
    EXPECT_EQ(f["faces"], 4);
    auto m = call({"matchings", fx("P3")});
    EXPECT_NE(m.out.find("count 4"), std::string::npos);
}

TEST(Cli, TmPoly) {
    auto r = call({"tm-poly", "--n", "2", fx("theta")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("6*t^2 + 6"), std::string::npos);
    auto two = call({"tm-poly", "--two-var", fx("theta")});
    EXPECT_EQ(two.code, 0);
    EXPECT_NE(two.out.find("t^0: "), std::string::npos);
}

TEST(Cli, Check) {
    auto r = call({"check", "--n", "2,3", fx("theta")});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(call({"vertex-poly", temp_file("bad.vpd", "G[V[1,2,3],V[1,5,6]]")}).code, 2);
    auto p = call({"vertex-poly", temp_file("bad2.vpd", "G[V[1,2,3],\nV[4,5,x]]")});
    EXPECT_EQ(p.code, 2);
    EXPECT_NE(p.err.find("2:"), std::string::npos);
    EXPECT_EQ(call({"vertex-poly", "/nonexistent.vpd"}).code, 1);
    EXPECT_EQ(call({"frobnicate", fx("theta")}).code, 1);
    EXPECT_EQ(call({"homology", "--n", "2", fx("Dodec")}).code, 1);
    EXPECT_EQ(call({"vertex-poly", "--state-cap", "2", fx("K4")}).code, 1);
    EXPECT_EQ(call({"vertex-poly", temp_file("square.vpd", "G[V[1,3,5,7],V[2,4,6,8]]")}).code, 2);
    EXPECT_EQ(call({"vertex-poly", "--any-valence", temp_file("square2.vpd", "G[V[1,3,5,7],V[2,4,6,8]]")}).code, 0);
}
