#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string("\"") + LORENTZQI_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("lorentzqi_cli_" + name); }

}  // namespace

TEST(Cli, FigureOneCIsDeterministic) {
  const auto a = scratch("1c_a.csv"), b = scratch("1c_b.csv");
  ASSERT_EQ(run("figure 1c --out " + a.string()), 0);
  ASSERT_EQ(run("figure 1c --out " + b.string()), 0);
  const auto body = slurp(a);
  EXPECT_EQ(body, slurp(b));
  EXPECT_EQ(std::count(body.begin(), body.end(), '\n'), 258);
  EXPECT_EQ(body.rfind("state,alpha,omega1,omega2,omega3,measure,value\n", 0), 0u);
  fs::remove(a);
  fs::remove(b);
}

TEST(Cli, SweepWritesRequestedRows) {
  const auto out = scratch("sweep.csv");
  ASSERT_EQ(run("sweep --state w --omega1 0:2pi:9 --tie omega1=omega2 --tie omega1=omega3 "
                "--measure fidelity_w,entropy_a --out " + out.string()),
            0);
  const auto body = slurp(out);
  EXPECT_EQ(std::count(body.begin(), body.end(), '\n'), 19);
  EXPECT_NE(body.find("w,0,0,0,0,fidelity_w,1\n"), std::string::npos);
  fs::remove(out);
}

TEST(Cli, UsageErrorsExitTwo) {
  const auto out = scratch("bad.csv").string();
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("sweep --state ghz --measure fidelity_w --out " + out), 2);
  EXPECT_EQ(run("sweep --measure nope --out " + out), 2);
  EXPECT_EQ(run("sweep --omega1 0:1:x --measure fidelity_w --out " + out), 2);
  EXPECT_EQ(run("sweep --mode traced --measure three_tangle --out " + out), 2);
  EXPECT_EQ(run("figure 9z --out " + out), 2);
  EXPECT_FALSE(fs::exists(out));
}

TEST(Cli, UnwritableOutputExitsThree) {
  EXPECT_EQ(run("figure 1c --out /nonexistent-dir/x.csv"), 3);
}
