#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace contra;

TEST(Catalogue, IdsAreUniqueAndSorted) {
  const auto cat = build_catalogue({});
  std::set<std::string> ids;
  for (const auto& e : cat) {
    EXPECT_TRUE(ids.insert(e.id).second) << e.id;
    EXPECT_FALSE(e.anchor.empty()) << e.id;
    EXPECT_FALSE(e.tags.empty()) << e.id;
  }
  EXPECT_TRUE(std::is_sorted(cat.begin(), cat.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  EXPECT_EQ(cat.size(), 59u);
}

TEST(Catalogue, PrimesControlTaftEntries) {
  RunConfig only_two;
  only_two.primes = {2};
  const auto cat = build_catalogue(only_two);
  for (const auto& e : cat) EXPECT_EQ(e.id.find("p=3"), std::string::npos) << e.id;
  EXPECT_LT(cat.size(), build_catalogue({}).size());
  RunConfig repeated;
  repeated.primes = {3, 2, 3};
  EXPECT_EQ(build_catalogue(repeated).size(), build_catalogue({}).size());
}

TEST(Catalogue, SelectionByIdNameAndTag) {
  const auto cat = build_catalogue({});
  std::vector<std::string> unknown;
  EXPECT_EQ(select_checks(cat, {"C3.2-relations"}, {}, unknown).size(), 2u);
  EXPECT_EQ(select_checks(cat, {"C3.2-relations@p=3"}, {}, unknown).size(), 1u);
  EXPECT_EQ(select_checks(cat, {}, {}, unknown).size(), cat.size());
  const auto sweedler = select_checks(cat, {}, {"sweedler"}, unknown);
  EXPECT_FALSE(sweedler.empty());
  for (const auto& e : sweedler) EXPECT_NE(std::find(e.tags.begin(), e.tags.end(), "sweedler"), e.tags.end());
  EXPECT_TRUE(unknown.empty());
  EXPECT_TRUE(select_checks(cat, {"no-such-check"}, {}, unknown).empty());
  EXPECT_EQ(unknown, std::vector<std::string>{"no-such-check"});
}

TEST(Config, ParsesKnownKeys) {
  const RunConfig c = config_from_json(json::parse(
      R"({"primes": [2], "allow_large": true, "jobs": 2, "json": "out.json",
          "associativity": {"exhaustive_limit": 10, "samples": 50, "seed": 7}})"));
  EXPECT_EQ(c.primes, std::vector<int>{2});
  EXPECT_TRUE(c.allow_large);
  EXPECT_EQ(c.jobs, 2u);
  EXPECT_EQ(c.json_path, "out.json");
  EXPECT_EQ(c.policy.exhaustive_limit, 10u);
  EXPECT_EQ(c.policy.samples, 50u);
  EXPECT_EQ(c.policy.seed, 7u);
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(config_from_json(json::parse(R"({"prime": [2]})")), std::invalid_argument);
  EXPECT_THROW(config_from_json(json::parse(R"({"primes": "2"})")), std::invalid_argument);
  EXPECT_THROW(config_from_json(json::parse(R"({"associativity": {"depth": 1}})")), std::invalid_argument);
  EXPECT_THROW(config_from_json(json::parse("[1]")), std::invalid_argument);
  RunConfig c;
  c.primes = {4};
  EXPECT_THROW(validate_config(c), std::invalid_argument);
  c.primes = {5};
  EXPECT_THROW(validate_config(c), std::invalid_argument);
  c.allow_large = true;
  EXPECT_NO_THROW(validate_config(c));
  c.primes = {};
  EXPECT_THROW(validate_config(c), std::invalid_argument);
}

TEST(RunChecks, ReportsAreDeterministicAcrossJobCounts) {
  const auto cat = build_catalogue({});
  std::vector<std::string> unknown;
  const auto chosen = select_checks(cat, {"P3.5-hh-separation", "E3.23-minpoly", "A.3-uhu-iso@kZ2"}, {}, unknown);
  ASSERT_EQ(chosen.size(), 4u);
  Fixtures one, two;
  const json a = report_json(run_checks(chosen, one, 1), false);
  const json b = report_json(run_checks(chosen, two, 3), false);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a["summary"]["total"], 4);
  EXPECT_EQ(a["summary"]["pass"], 4);
  EXPECT_TRUE(a["summary"]["all_passed"].get<bool>());
  for (const auto& r : a["checks"]) EXPECT_FALSE(r.contains("elapsed_seconds"));
  const auto& hh = a["checks"][3];
  EXPECT_EQ(hh["id"], "P3.5-hh-separation");
  EXPECT_EQ(hh["witnesses"]["dims"], (json{{"mixed", 2}, {"stable", 1}}));
}

TEST(RunChecks, ExceptionsBecomeInternalErrors) {
  std::vector<CheckEntry> entries{
      {"b-ok", "passes", {"t"}, [](Fixtures&, CheckReport& r) { r.expect(true, "fine"); }},
      {"a-throws", "throws", {"t"}, [](Fixtures&, CheckReport&) { throw std::runtime_error("boom"); }},
  };
  Fixtures fx;
  const RunResult res = run_checks(entries, fx, 2);
  ASSERT_EQ(res.reports.size(), 2u);
  EXPECT_EQ(res.reports[0].id, "a-throws");
  EXPECT_EQ(res.reports[0].status, Status::fail);
  EXPECT_EQ(res.internal_errors.size(), 1u);
  EXPECT_FALSE(res.all_passed());
  EXPECT_EQ(report_json(res)["summary"]["fail"], 1);
}

TEST(Fixtures, SharedAcrossThreads) {
  Fixtures fx;
  std::vector<const TwistedDouble*> seen(4);
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < seen.size(); ++i) pool.emplace_back([&, i] { seen[i] = &fx.twisted("kZ3"); });
  for (auto& t : pool) t.join();
  for (const auto* p : seen) EXPECT_EQ(p, seen[0]);
  EXPECT_EQ(Fixtures::xi(2), Cyclotomic(-1));
  EXPECT_EQ(root_order(Fixtures::xi(3)), 3);
}
