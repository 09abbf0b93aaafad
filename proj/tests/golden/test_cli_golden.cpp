// Each line of cases.tsv is "name<TAB>args"; an argument "@f" is the path of
// inputs/f. Expected output is "exit N" followed by stdout and then stderr.
// Set DBLBRAUER_UPDATE_GOLDEN=1 to rewrite the expected files.
#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dblbrauer/cli/dispatch.hpp"

namespace {

const std::string dir = GOLDEN_DIR;

struct Case {
  std::string name;
  std::vector<std::string> args;
};

std::vector<Case> load_cases() {
  std::vector<Case> out;
  std::ifstream f(dir + "/cases.tsv");
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    Case c{line.substr(0, tab), {}};
    std::istringstream ws(line.substr(tab + 1));
    for (std::string w; ws >> w;) c.args.push_back(w[0] == '@' ? dir + "/inputs/" + w.substr(1) : w);
    out.push_back(std::move(c));
  }
  return out;
}

std::string run(const Case& c) {
  std::vector<const char*> argv{"dblbrauer"};
  for (auto& a : c.args) argv.push_back(a.c_str());
  std::istringstream in;
  std::ostringstream out, err;
  int rc = dblbrauer::run_cli(int(argv.size()), argv.data(), in, out, err);
  return "exit " + std::to_string(rc) + "\n" + out.str() + (err.str().empty() ? "" : "--- stderr\n" + err.str());
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

class Golden : public ::testing::TestWithParam<Case> {};

TEST_P(Golden, MatchesExpected) {
  const Case& c = GetParam();
  const std::string got = run(c), path = dir + "/expected/" + c.name + ".txt";
  if (std::getenv("DBLBRAUER_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << got;
    GTEST_SKIP() << "rewrote " << path;
  }
  EXPECT_EQ(got, slurp(path));
}

TEST_P(Golden, Deterministic) { EXPECT_EQ(run(GetParam()), run(GetParam())); }

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(load_cases()),
                         [](const ::testing::TestParamInfo<Case>& i) { return i.param.name; });

TEST(CliSeed, DifferentSeedsGiveDifferentFixtures) {
  Case a{"a", {"--seed", "1", "gen-fixture", "2,2,2"}}, b{"b", {"--seed", "2", "gen-fixture", "2,2,2"}};
  EXPECT_NE(run(a), run(b));
}

TEST(CliOut, WritesFile) {
  const std::string path = ::testing::TempDir() + "dblbrauer_out.txt";
  Case c{"o", {"--out", path, "invariants", "2", "3"}};
  EXPECT_EQ(run(c), "exit 0\n");
  EXPECT_EQ(slurp(path), "2\t3\t0\t1\t22\t10\n");
}

}  // namespace
