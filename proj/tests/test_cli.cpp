#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tolman/cli.hpp"

using tolman::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = tolman::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ChernC1Cubed) {
    auto r = run({"chern", "--a", "2", "--b", "1", "--monomial", "c1^3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.doc()["value"], "64");
}

TEST(Cli, NegativeFlagValues) {
    auto r = run({"chern", "--a", "-2", "--b", "1", "--monomial", "c1c2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc()["value"], "24");
}

TEST(Cli, WeightsAtX40) {
    auto r = run({"weights", "--a", "7", "--b", "2", "--point", "x40"});
    ASSERT_EQ(r.code, 0);
    auto w = r.doc()["weights"].get<std::vector<std::int64_t>>();
    std::sort(w.begin(), w.end());
    EXPECT_EQ(w, (std::vector<std::int64_t>{-12, -7, -5}));
}

TEST(Cli, Betti) {
    auto r = run({"betti", "--a", "2", "--b", "1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.doc()["betti"].get<std::vector<int>>(), (std::vector<int>{1, 0, 2, 0, 2, 0, 1}));
}

TEST(Cli, CoprimeAndSpheres) {
    EXPECT_EQ(run({"coprime", "--a", "7", "--b", "2"}).doc()["coprime"], true);
    EXPECT_EQ(run({"coprime", "--a", "2", "--b", "1"}).doc()["coprime"], false);
    auto s = run({"spheres", "--a", "7", "--b", "2"});
    ASSERT_EQ(s.code, 0);
    EXPECT_EQ(s.doc()["spheres"].size(), 9u);
    EXPECT_EQ(s.doc()["isotropy_spheres"].size(), 9u);
}

TEST(Cli, DhVolume) {
    auto r = run({"dh-volume", "--a", "2", "--b", "1", "--l1", "1", "--l2", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.doc()["text"], "2*l1^3 + 3*l1^2*l2 + 3*l1*l2^2");
    EXPECT_EQ(r.doc()["value"], "20");
}

TEST(Cli, Ring) {
    auto r = run({"ring", "--k1", "-1", "--k2", "-1"});
    ASSERT_EQ(r.code, 0);
    auto d = r.doc();
    EXPECT_EQ(d["c1"]["text"], "2*eta + 2*xi");
    EXPECT_EQ(d["c2"]["text"], "6*eta*xi");
    EXPECT_EQ(d["p1"]["text"], "8*eta^2");
    EXPECT_EQ(d["c1_cubed"], "64");
}

TEST(Cli, JuppAndSearch) {
    auto r = run({"jupp", "--search"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.doc()["comparison"]["equivalent"], true);
    EXPECT_FALSE(r.doc()["search"]["found"].is_null());
    auto bad = run({"jupp", "--q", "2,0,0,1"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(bad.doc()["error"], "NotUnimodular");
}

TEST(Cli, ToricGlue) {
    auto r = run({"toric-glue"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.doc()["glued"], true);
    EXPECT_EQ(r.doc()["matches"].size(), 6u);
}

TEST(Cli, KahlerCone) {
    auto r = run({"kahler-cone", "--l1", "1", "--l2", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.doc()["verdict"], "Obstructed");
    EXPECT_EQ(r.doc()["certificate"]["class_on_S"], "0");
    EXPECT_EQ(run({"kahler-cone", "--l1", "1/2", "--l2", "3/2"}).doc()["verdict"], "NotObstructedByThisTest");
    auto bad = run({"kahler-cone", "--l1", "2", "--l2", "1"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(bad.doc()["error"], "InvalidKahlerParameters");
}

TEST(Cli, ReproduceAllPasses) {
    auto r = run({"reproduce-all"});
    EXPECT_EQ(r.code, 0);
    auto d = r.doc();
    EXPECT_FALSE(d["checks"].empty());
    for (const auto& c : d["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
}

TEST(Cli, GraphFileRoundTrip) {
    auto path = std::filesystem::temp_directory_path() / "tolman_cli_graph.json";
    {
        std::ofstream f(path);
        f << run({"graph"}).doc()["graph"].dump();
    }
    auto r = run({"chern", "--a", "3", "--b", "5", "--graph", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.doc()["value"], "64");
    std::filesystem::remove(path);
    auto missing = run({"chern", "--a", "3", "--b", "5", "--graph", path.string()});
    EXPECT_EQ(missing.code, 1);
    EXPECT_EQ(missing.doc()["error"], "ParseError");
}

TEST(Cli, ComputationErrorsExitOne) {
    auto r = run({"chern", "--a", "1", "--b", "1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.doc()["error"], "DegenerateWeight");
    auto p = run({"weights", "--a", "1", "--b", "1", "--point", "x77"});
    EXPECT_EQ(p.code, 1);
    EXPECT_EQ(p.doc()["error"], "NoSuchFixedPoint");
    EXPECT_EQ(run({"coprime", "--a", "0", "--b", "3"}).doc()["error"], "AxisSubcircle");
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"chern", "--a", "2"}).code, 2);
    EXPECT_EQ(run({"chern", "--a", "2", "--b", "1", "--bogus"}).code, 2);
    EXPECT_EQ(run({"chern", "--a", "x", "--b", "1"}).code, 2);
}

TEST(Cli, OutputIsDeterministic) {
    for (auto args : std::vector<std::vector<std::string>>{{"reproduce-all"}, {"dh-volume", "--a", "3", "--b", "2"},
                                                            {"spheres", "--a", "7", "--b", "2"}})
        EXPECT_EQ(run(args).out, run(args).out);
}
