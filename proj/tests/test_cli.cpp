#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = tsurf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ContinuedFractions) {
  EXPECT_EQ(run({"cf", "expand", "15/11"}).out, "[1, 2, 1, 3]\n");
  EXPECT_EQ(run({"cf", "eval", "1,2,1,3"}).out, "15/11\n");
  EXPECT_EQ(run({"cf", "to-word", "7/4"}).out, "BABAABAABAA\n");
  EXPECT_EQ(run({"cf", "from-word", "BAABABAABABA"}).out, "[1, 2, 2] = 7/5\n");
}

TEST(Cli, CuttingSequences) {
  EXPECT_EQ(run({"cutseq", "from-slope", "7/4"}).out, "BABAABAABAA\n");
  auto r = run({"cutseq", "validate", "AABB"});
  EXPECT_EQ(r.out, "REJECTED: both AA and BB present\n");
  EXPECT_EQ(r.code, 1);
  auto ok = run({"cutseq", "validate", "ABABB"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "VALID: slope 2/3\n");
  EXPECT_EQ(run({"cutseq", "shear", "ABABB", "--op", "lengthen-b"}).out, "ABBABBB\n");
  EXPECT_EQ(run({"cutseq", "enumerate", "4"}).out, "AAAB\nABBB\n# 2 words, 1 swap classes\n");
}

TEST(Cli, Matrices) {
  EXPECT_EQ(run({"matrix", "decompose", "3,7,2,5"}).out, "S^1 T^2 S^2\n");
  EXPECT_EQ(run({"matrix", "act", "3,7,2,5", "--slope", "1"}).out, "7/10\n");
  auto bad = run({"matrix", "decompose", "2,0,0,1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("InvalidDeterminant"), std::string::npos);
}

TEST(Cli, SurfacesAndCylinders) {
  auto info = run({"surface", "info", "octagon"});
  EXPECT_EQ(info.code, 0);
  EXPECT_NE(info.out.find("vertices: 1"), std::string::npos);
  EXPECT_NE(info.out.find("genus: 2"), std::string::npos);
  auto made = run({"surface", "make", "double-ngon", "5"});
  EXPECT_EQ(made.code, 0);
  EXPECT_NE(made.out.find("\"gluings\""), std::string::npos);
  auto cyl = run({"cylinders", "three-square-l", "--direction", "1,0"});
  EXPECT_NE(cyl.out.find("modulus 2 "), std::string::npos);
  EXPECT_NE(cyl.out.find("minimal shear parameter: 2"), std::string::npos);
  auto sq = run({"surface", "info", "escalator"});
  EXPECT_NE(sq.out.find("genus: 3"), std::string::npos);
}

TEST(Cli, TraceCsv) {
  auto r = run({"trace", "square-torus", "--direction", "3,2", "--start", "1/4,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 16), "index,label,x,y\n");
  EXPECT_NE(r.out.find("# periodic, period 5"), std::string::npos);
}

TEST(Cli, Billiards) {
  EXPECT_EQ(run({"billiard", "unfold", "ABBB"}).out, "ABBBABBB\n");
  EXPECT_EQ(run({"billiard", "fold", "ABBBABBB"}).out, "ABBB\n");
  EXPECT_EQ(run({"billiard", "trace", "--slope", "1/3"}).out, "ABBBABBB\nperiod 8\n");
}

TEST(Cli, RenderIsDeterministic) {
  auto a = run({"render", "octagon", "--direction", "1,0", "--cylinders"});
  auto b = run({"render", "octagon", "--direction", "1,0", "--cylinders"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("<svg"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"cf", "expand", "abc"}).code, 2);
  EXPECT_EQ(run({"surface", "info", "no-such-surface"}).code, 2);
  EXPECT_EQ(run({"cutseq", "validate", "ABC"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  auto usage = run({"matrix", "act", "3,7,2,5"});
  EXPECT_EQ(usage.code, 2);
  EXPECT_NE(usage.err.find("--slope"), std::string::npos);
}

TEST(Cli, GlobalFlags) {
  EXPECT_EQ(run({"--eps", "1e-6", "cf", "expand", "15/11"}).code, 0);
  auto a = run({"--seed", "5", "cutseq", "check", "--samples", "30"});
  auto b = run({"cutseq", "check", "--samples", "30", "--seed", "5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
