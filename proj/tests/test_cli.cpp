#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include "contra/contra.hpp"

namespace fs = std::filesystem;
using contra::json;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(VERIFY_BINARY) + " " + args + " 2>&1";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return o;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), got);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("verify-cli-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

std::string data(const std::string& name) { return std::string(SAMPLE_DATA_DIR) + "/" + name; }

json read(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

json without_elapsed(json report) {
  for (auto& c : report["checks"]) c.erase("elapsed_seconds");
  return report;
}

}  // namespace

TEST(Cli, ListShowsTheCatalogue) {
  const Outcome o = run("list");
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("P3.5-hh-separation"), std::string::npos);
  EXPECT_NE(o.out.find("C3.2-relations@p=3"), std::string::npos);
  const Outcome two = run("list --p 2");
  EXPECT_EQ(two.out.find("@p=3"), std::string::npos);
}

TEST(Cli, HochschildSeparationReport) {
  const fs::path out = scratch("hh.json");
  const Outcome o = run("run --id P3.5-hh-separation --json " + out.string());
  EXPECT_EQ(o.code, 0) << o.out;
  const json j = read(out);
  ASSERT_EQ(j["checks"].size(), 1u);
  EXPECT_EQ(j["checks"][0]["status"], "pass");
  EXPECT_EQ(j["checks"][0]["witnesses"]["dims"], (json{{"mixed", 2}, {"stable", 1}}));
  EXPECT_TRUE(j["summary"]["all_passed"].get<bool>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("run --id no-such-check").code, 2);
  EXPECT_EQ(run("run --p 4").code, 2);
  EXPECT_EQ(run("run --p 5 --id P3.5-hh-separation").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("ingest /nonexistent/file.json").code, 2);
  EXPECT_EQ(run("export").code, 2);
  const fs::path bad = scratch("bad_config.json");
  std::ofstream(bad) << "{\"primes\": [2], \"colour\": 1}";
  const Outcome o = run("run --config " + bad.string() + " --id P3.5-hh-separation");
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.out.find("colour"), std::string::npos);
  const fs::path broken = scratch("broken.json");
  std::ofstream(broken) << "{ not json";
  EXPECT_EQ(run("run --config " + broken.string()).code, 2);
}

TEST(Cli, ConfigFromEnvironment) {
  const fs::path cfg = scratch("env_config.json");
  std::ofstream(cfg) << "{\"primes\": [9]}";
  const std::string cmd = "CONTRA_VERIFY_CONFIG=" + cfg.string() + " " + std::string(VERIFY_BINARY) +
                          " run --id P3.5-hh-separation -q >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
  EXPECT_EQ(run("run --config " + data("verify_config.json") + " --id P3.5-hh-separation -q").code, 0);
}

TEST(Cli, IngestAcceptsAndRejects) {
  const Outcome ok = run("ingest " + data("z2_group_algebra.json"));
  EXPECT_EQ(ok.code, 0) << ok.out;
  const Outcome bad = run("ingest " + data("z2_bad_antipode.json"));
  EXPECT_EQ(bad.code, 1) << bad.out;
  EXPECT_NE(bad.out.find("antipode"), std::string::npos);
  const fs::path schema = scratch("schema.json");
  std::ofstream(schema) << "{\"dim\": 2, \"unit\": [1, 0]}";
  EXPECT_EQ(run("ingest " + schema.string()).code, 2);
}

TEST(Cli, ExportIngestRoundTrip) {
  for (const std::string flags : {"--taft 2", "--taft 3 --dual", "--group 3"}) {
    const fs::path out = scratch("export.json");
    ASSERT_EQ(run("export " + flags + " -o " + out.string()).code, 0) << flags;
    const json first = read(out);
    const contra::HopfData h = contra::hopf_from_json(first);
    const contra::HopfData again = contra::hopf_from_json(contra::to_json(h));
    EXPECT_TRUE(contra::same_structure(h.algebra, again.algebra)) << flags;
    EXPECT_EQ(h.comult, again.comult) << flags;
    EXPECT_EQ(h.antipode, again.antipode) << flags;
    EXPECT_EQ(run("ingest " + out.string()).code, 0) << flags;
  }
  EXPECT_EQ(run("export --taft 4").code, 2);
}

TEST(Cli, RepeatedRunsAgree) {
  const fs::path a = scratch("a.json"), b = scratch("b.json");
  const std::string sel = "run --tag sweedler -q --jobs 2 --json ";
  ASSERT_EQ(run(sel + a.string()).code, 0);
  ASSERT_EQ(run(sel + b.string()).code, 0);
  EXPECT_EQ(without_elapsed(read(a)), without_elapsed(read(b)));
}

TEST(Cli, FullRunExitCodeMatchesSummary) {
  const fs::path out = scratch("all.json");
  const Outcome o = run("run --all -q --json " + out.string());
  const json j = read(out);
  const bool all = j["summary"]["all_passed"].get<bool>();
  EXPECT_EQ(o.code, all ? 0 : 1) << o.out;
  EXPECT_EQ(j["summary"]["total"], 59);
  std::size_t pass = 0;
  for (const auto& c : j["checks"]) pass += c["status"] == "pass" ? 1 : 0;
  EXPECT_EQ(j["summary"]["pass"], pass);
}
