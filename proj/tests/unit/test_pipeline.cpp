#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "canmap/pipeline/scenario.hpp"
#include "canmap/pipeline/statements.hpp"
#include "fixtures.hpp"

namespace canmap::pipeline {
namespace {

using canmap::testing::x40_data;
using canmap::testing::y48_data;

const CheckResult& check(const Report& r, const std::string& id) {
  for (const auto& c : r.checks) {
    if (c.id == id) return c;
  }
  throw std::out_of_range(id);
}

RunOptions single(const std::string& id, Mode mode = Mode::Default) {
  RunOptions o;
  o.mode = mode;
  o.check = id;
  return o;
}

TEST(Statements, Parse) {
  const auto st = parse_statements("h:=-x-y;\nD:={P![1,r-5, 3],P![2,2,2]};\nL:=[\n x+1,\n (y-2)*(x+3)\n];");
  ASSERT_EQ(st.size(), 3u);
  EXPECT_EQ(st[0].name, "h");
  EXPECT_EQ(st[0].kind, Statement::Kind::Expression);
  EXPECT_EQ(st[1].kind, Statement::Kind::PointSet);
  ASSERT_EQ(st[1].points.size(), 2u);
  EXPECT_EQ(st[1].points[0], (std::vector<std::string>{"1", "r-5", "3"}));
  EXPECT_EQ(st[2].kind, Statement::Kind::List);
  EXPECT_EQ(st[2].items.size(), 2u);
  EXPECT_THROW(parse_statements("h:=x"), ConfigError);
  EXPECT_THROW(parse_statements("h=x;"), ConfigError);
}

TEST(Statements, Checksum) {
  EXPECT_EQ(to_hex(fnv1a64("")), "cbf29ce484222325");
  EXPECT_EQ(to_hex(fnv1a64("a")), "af63dc4c8601ec8c");
}

TEST(Data, ListingsLoad) {
  const auto& d = x40_data();
  EXPECT_EQ(d.node_count(), 40u);
  EXPECT_EQ(d.tropes.size(), 9u);
  EXPECT_EQ(d.set_names.front(), "Da");
  const auto& y = y48_data();
  EXPECT_EQ(y.y48_gens.size(), 4u);
  EXPECT_EQ(y.ring->nvars(), 7u);
}

TEST(X40, ExactRunPassesEveryCheck) {
  const Report r = run_x40(x40_data(), {});
  EXPECT_EQ(r.mode, "exact");
  ASSERT_EQ(r.checks.size(), 12u);
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.id << ": " << c.observed.dump();
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(check(r, "X12").observed["chi_X16"], "6");
  EXPECT_EQ(check(r, "X12").observed["node_counts"], json({16, 32, 40, 48}));
  EXPECT_EQ(check(r, "X10").observed["trace_dimension"], 2);
}

TEST(X40, ModularRunAgreesWithExact) {
  RunOptions o;
  o.mode = Mode::ModP;
  const Report p = run_x40(x40_data(), o);
  const Report e = run_x40(x40_data(), {});
  ASSERT_EQ(p.primes.size(), 3u);
  ASSERT_EQ(p.checks.size(), e.checks.size());
  for (std::size_t i = 0; i < p.checks.size(); ++i) {
    EXPECT_EQ(p.checks[i].pass, e.checks[i].pass) << p.checks[i].id;
    EXPECT_TRUE(p.checks[i].probabilistic);
    EXPECT_FALSE(e.checks[i].probabilistic);
  }
}

TEST(X40, SingleChecks) {
  const Report r = run_x40(x40_data(), single("X6"));
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.checks[0].observed["s1"], 20);
  EXPECT_THROW(run_x40(x40_data(), single("X13")), ConfigError);
}

TEST(X40, PerturbedNodeFailsX1AndX2) {
  X40Data d = x40_data();
  auto coords = d.sets[0][0].coords();
  coords[0] += TowerField(d.tower).one();
  d.sets[0][0] = RationalPoint<TowerField>(coords);
  const Report r1 = run_x40(d, single("X1"));
  const Report r2 = run_x40(d, single("X2"));
  EXPECT_FALSE(r1.pass() && r2.pass());
  EXPECT_FALSE(r1.pass());
  EXPECT_FALSE(r2.pass());
}

TEST(X40, DroppedTropeIsReported) {
  X40Data d = x40_data();
  d.drop_trope(9);
  const Report r = run_x40(d, single("X8"));
  EXPECT_EQ(r.checks[0].observed["tropes"].size(), 8u);
}

TEST(X40, InvalidPrimeIsAConfigurationError) {
  RunOptions o;
  o.mode = Mode::ModP;
  o.primes = {5};
  EXPECT_THROW(run_x40(x40_data(), o), ConfigError);
  o.primes = {1073741971, 1000};
  EXPECT_THROW(run_x40(x40_data(), o), ConfigError);
}

TEST(Y48, DefaultRun) {
  const Report r = run_y48(y48_data(), {});
  ASSERT_EQ(r.checks.size(), 4u);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.primes.size(), 3u);
  EXPECT_EQ(check(r, "Y1").mode, "exact+mod-p");
  EXPECT_FALSE(check(r, "Y1").probabilistic);
  EXPECT_TRUE(check(r, "Y3").probabilistic);
  EXPECT_EQ(check(r, "Y3").observed["degree"], "48");
}

TEST(Report, JsonLayoutAndDeterminism) {
  RunOptions o = single("Y3", Mode::ModP);
  o.primes = {1073741971};
  auto strip = [](json j) {
    j.erase("wall_time_seconds");
    for (auto& c : j["checks"]) c.erase("wall_time_seconds");
    return j;
  };
  const json a = run_y48(y48_data(), o).to_json();
  const json b = run_y48(y48_data(), o).to_json();
  EXPECT_EQ(strip(a), strip(b));
  std::vector<std::string> keys;
  for (const auto& [k, v] : a.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"scenario", "mode", "primes", "pass", "wall_time_seconds", "warnings", "checks"}));
  EXPECT_EQ(a["checks"][0]["primes"], json({1073741971}));
}

TEST(Scenario, UnknownAndTampered) {
  EXPECT_THROW(run_scenario("x41", {}), ConfigError);
  const auto dir = std::filesystem::temp_directory_path() / "canmap_tampered";
  std::filesystem::remove_all(dir);
  std::filesystem::copy(default_data_dir(), dir, std::filesystem::copy_options::recursive);
  {
    std::ofstream f(dir / "x40" / "tropes.txt", std::ios::app);
    f << " ";
  }
  EXPECT_THROW(load_source(dir, "x40"), ConfigError);
  EXPECT_NO_THROW(load_source(dir, "y48"));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace canmap::pipeline
