#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "canmap/pipeline/scenario.hpp"

namespace {

using canmap::pipeline::ConfigError;
using canmap::pipeline::json;

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long p = std::stoull(item, &used);
      if (used != item.size() || p > 0xffffffffull) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(p));
    } catch (const std::exception&) {
      throw ConfigError("bad prime '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("--modp needs at least one prime");
  return out;
}

void summarize(const canmap::pipeline::Report& r) {
  for (const auto& c : r.checks) {
    std::cerr << (c.pass ? "PASS " : "FAIL ") << r.scenario << ' ' << c.id << " [" << c.mode << "] " << c.description
              << '\n';
  }
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Replays the x40 and y48 verification scenarios"};
  std::string scenario;
  bool exact = false;
  std::string modp;
  std::string report_path;
  std::string check;
  canmap::pipeline::RunOptions opts;
  app.add_option("--scenario", scenario, "x40, y48 or all")->required()->check(CLI::IsMember({"x40", "y48", "all"}));
  auto* exact_opt = app.add_flag("--exact", exact, "exact arithmetic for every check");
  app.add_option("--modp", modp, "comma-separated primes; empty selects three automatically")
      ->expected(0, 1)
      ->excludes(exact_opt);
  app.add_option("--report", report_path, "write the JSON report to this file instead of stdout");
  app.add_option("--check", check, "run a single check id");
  app.add_flag("--all-partitions", opts.all_partitions, "enumerate every branch partition in X8");
  app.add_flag("--check-nodes", opts.check_nodes, "also verify that every node is an ordinary double point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (exact) opts.mode = canmap::pipeline::Mode::Exact;
    if (app.count("--modp") > 0) {
      opts.mode = canmap::pipeline::Mode::ModP;
      if (!modp.empty()) opts.primes = parse_primes(modp);
    }
    if (!check.empty()) opts.check = check;

    std::vector<std::string> names = scenario == "all" ? std::vector<std::string>{"x40", "y48"}
                                                       : std::vector<std::string>{scenario};
    if (opts.check && scenario == "all") throw ConfigError("--check needs a single scenario");

    json out;
    bool pass = true;
    if (names.size() == 1) {
      const auto r = canmap::pipeline::run_scenario(names.front(), opts);
      summarize(r);
      pass = r.pass();
      out = r.to_json();
    } else {
      json reports = json::array();
      for (const auto& n : names) {
        const auto r = canmap::pipeline::run_scenario(n, opts);
        summarize(r);
        pass = pass && r.pass();
        reports.push_back(r.to_json());
      }
      out["pass"] = pass;
      out["scenarios"] = std::move(reports);
    }

    if (report_path.empty()) {
      std::cout << out.dump(2) << '\n';
    } else {
      std::ofstream f(report_path);
      if (!f) throw ConfigError("cannot write " + report_path);
      f << out.dump(2) << '\n';
    }
    return pass ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
