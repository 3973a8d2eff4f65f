#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(DUHA_BINARY) + " " + args + " 2>/dev/null";
  CliResult r;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("duha_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, F1HomologyJsonMatches) {
  const CliResult r = run("homology --preset f1-rational --max-deg 12 --output json");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["report"]["comparisons"].size(), 4u * 13u);
  for (const auto& c : j["report"]["comparisons"]) EXPECT_TRUE(c["match"].get<bool>());
}

TEST(Cli, DimsTable) {
  const CliResult r = run("dims --preset f2-root-3 --max-deg 8");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dim A: 1 2 4 6 9 12 16 20 25"), std::string::npos) << r.out;
}

TEST(Cli, JsonOutputIsByteIdentical) {
  const CliResult a = run("cyclic --preset f2-root-6 --max-deg 9 --output json --jobs 1");
  const CliResult b = run("cyclic --preset f2-root-6 --max-deg 9 --output json --jobs 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CsvColumns) {
  const CliResult r = run("homology --preset f2-root-4 --max-deg 4 --output csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "theory,i,deg,sdeg,dim,predicted,match");
  EXPECT_NE(r.out.find("HH_homology,0,4,total,3,3,true"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("HH_homology,3,4,0,1,,"), std::string::npos);
}

TEST(Cli, MismatchExitsOne) {
  // The printed non-root series misses the degree-8 classes.
  EXPECT_EQ(run("homology --preset f2-generic --max-deg 8").code, 1);
  EXPECT_EQ(run("homology --preset f2-generic --max-deg 7").code, 0);
}

TEST(Cli, ErratumNotesDoNotFail) {
  const CliResult r = run("homology --preset f2-root-1 --max-deg 8");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("erratum"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("homology --preset nonexistent").code, 2);
  EXPECT_EQ(run("homology").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("homology --preset f1-rational --r1 2 --r2 3").code, 2);
  EXPECT_EQ(run("homology --r1 0 --r2 0").code, 2);
  EXPECT_EQ(run("homology --r1 2 --r2 x").code, 2);
  EXPECT_EQ(run("homology --preset f1-rational --min-deg 5 --max-deg 2").code, 2);
  EXPECT_EQ(run("cohomology --preset f1-rational --output xml").code, 2);
  // Reducible modulus surfaces as a configuration error.
  EXPECT_EQ(run("homology --minpoly=-1,0,1 --r1 1,1 --r2 1,-1 --max-deg 3").code, 2);
  EXPECT_EQ(run("check --output csv").code, 2);
}

TEST(Cli, CustomFieldMatchesPreset) {
  // Q(i) with r1 = i, r2 = -i is the n = 4 preset.
  const CliResult custom = run("homology --minpoly 1,0,1 --r1 0,1 --r2 0,-1 --max-deg 6 --output csv");
  const CliResult preset = run("homology --preset f2-root-4 --max-deg 6 --output csv");
  EXPECT_EQ(custom.code, 0);
  EXPECT_EQ(custom.out, preset.out);
}

TEST(Cli, ConfigFileAndOverrides) {
  const auto cfg = temp_file("config.json");
  const auto out = temp_file("out.json");
  std::ofstream(cfg) << R"({"preset": "f1-rational", "window": {"min_deg": 0, "max_deg": 3},
                            "output": {"format": "json"}, "jobs": 2})";
  CliResult r = run("homology --config " + cfg.string() + " --out " + out.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["table"]["window"]["max_deg"], 3);

  r = run("homology --config " + cfg.string() + " --max-deg 2");
  EXPECT_EQ(nlohmann::json::parse(r.out)["table"]["window"]["max_deg"], 2);

  std::ofstream(cfg) << R"({"preset": "f1-rational", "colour": "blue"})";
  EXPECT_EQ(run("homology --config " + cfg.string()).code, 2);
  std::ofstream(cfg) << "{ not json";
  EXPECT_EQ(run("homology --config " + cfg.string()).code, 2);
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
}

TEST(Cli, CertifyAndCohomology) {
  EXPECT_EQ(run("certify --preset f1-rational --max-deg 6").code, 0);
  EXPECT_EQ(run("cohomology --preset f1-rational --min-deg -6 --max-deg 6").code, 0);
  EXPECT_EQ(run("certify --preset f2-generic --max-deg 8").code, 1);
}

TEST(Cli, EnvironmentJobs) {
  EXPECT_EQ(run("dims --preset f1-rational --max-deg 4").code, 0);
  const std::string cmd = "DUHA_JOBS=abc " + std::string(DUHA_BINARY) +
                          " dims --preset f1-rational >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}
