#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  // stderr is discarded; stdout is captured
  const std::string cmd = std::string("COXETER_CACHE_DIR= ") + COXETER_CLI + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, EmptyArgvIsAUsageError) { EXPECT_EQ(cli("").code, 2); }

TEST(Cli, UnknownCommandFamilyTypeAndFlag) {
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("realize --family F4").code, 2);
  EXPECT_EQ(cli("orbit --family E6 --type 9").code, 2);
  EXPECT_EQ(cli("orbit --family E6 --type 2 --bogus").code, 2);
  EXPECT_EQ(cli("bigon --family E8 --base 7 --target 7 --min-angle 91deg").code, 2);
  EXPECT_EQ(cli("segment --family E7 --from v2 --to v2").code, 2);
}

TEST(Cli, SegmentReportsTypeAndDistance) {
  CliRun r = cli("segment --family E7 --from v2 --to \"(1,-1,1,1,1,1,-1,-1)\"");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["type"], "232");
  EXPECT_EQ(j["distance"], "pi/3");
  EXPECT_EQ(j["singular"], true);
}

TEST(Cli, OrbitCount) {
  CliRun r = cli("orbit --family E6 --type 2 --format count");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "27\n");
}

TEST(Cli, BigonOutputIsDeterministic) {
  const std::string args = "bigon --family E8 --base 7 --exclude 2,8 --target 7 --min-angle 90deg --exclude-ends";
  CliRun a = cli(args), b = cli(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("arccos(-2/3)"), std::string::npos);
  EXPECT_NE(a.out.find("arccos(-1/3)"), std::string::npos);
  CliRun j = cli(args + " --format json");
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out)["rows"].size(), 2u);
}

TEST(Cli, VerifyTablesPassesAndDetectsMismatch) {
  CliRun ok = cli("verify-tables --family E6");
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("0 mismatched"), std::string::npos);

  const std::string dir = testing::TempDir() + "coxeter-cli-golden";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  {
    std::FILE* f = std::fopen((dir + "/broken.json").c_str(), "w");
    ASSERT_NE(f, nullptr);
    std::fputs(R"({"kind":"bigon","name":"broken","family":"E6",
      "spec":{"base":2,"exclude":[],"target":6,"min_angle":null,"exclude_ends":false},
      "rows":[{"representative":[3,3,3,3,3,1,1,1],"distance":"pi/2","sigma":"6"}]})",
               f);
    std::fclose(f);
  }
  EXPECT_EQ(cli("verify-tables --golden-dir " + dir).code, 1);
}

TEST(Cli, LabGapEmitsVerdict) {
  CliRun r = cli("lab gap --family D4 --roots 1-6 --samples 12 --seed 3");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["samples"], 12);
  EXPECT_EQ(cli("lab gap --family D4 --roots 1-6 --samples 12 --seed 3").out, r.out);
}
