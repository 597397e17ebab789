#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "canmap/arith/field_tower.hpp"
#include "canmap/arith/tower_element.hpp"
#include "canmap/cover/cover.hpp"
#include "canmap/pipeline/statements.hpp"
#include "canmap/poly/parser.hpp"
#include "canmap/scheme/scheme.hpp"

namespace canmap::pipeline {

using json = nlohmann::ordered_json;

enum class Mode {
  Default,  // x40 exact; y48 Y1 exact plus every check modulo auto-selected primes
  Exact,
  ModP,
};

struct RunOptions {
  Mode mode = Mode::Default;
  std::vector<std::uint32_t> primes;  // Mode::ModP; empty means auto-select
  std::optional<std::string> check;   // run a single check
  bool all_partitions = false;
  bool check_nodes = false;           // ordinary double point test in X2
  std::uint32_t prime_floor = 1u << 30;
  std::size_t prime_count = 3;
};

struct CheckResult {
  std::string id;
  std::string description;
  json expected;
  json observed;
  bool pass = false;
  std::string mode;  // "exact" or "mod-p"
  std::vector<std::uint32_t> primes;
  bool probabilistic = false;
  double seconds = 0;
};

struct Report {
  std::string scenario;
  std::string mode;
  std::vector<std::uint32_t> primes;
  std::vector<std::string> warnings;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool pass() const;
  json to_json() const;
};

// $CANMAP_DATA_DIR if set, else the data directory of the source tree.
std::filesystem::path default_data_dir();

// scenario.json plus the verified contents of its data files.
struct ScenarioSource {
  std::filesystem::path dir;
  json config;
  std::map<std::string, std::string> files;
};

// Throws ConfigError on a missing scenario, unreadable file or checksum mismatch.
ScenarioSource load_source(const std::filesystem::path& data_dir, const std::string& name);

using TowerRing = RingPtr<TowerField>;
using TowerPoly = Poly<TowerField>;
using TowerPoint = RationalPoint<TowerField>;

struct X40Data {
  TowerPtr tower;
  TowerRing ring;
  std::vector<TowerPoly> surface;  // Q, I
  std::size_t codimension = 2;
  // Node sets in listing order with their group elements.
  std::vector<std::string> set_names;
  std::vector<cover::GroupElem> set_sigmas;
  std::vector<std::vector<TowerPoint>> sets;
  // Trope equations with their 1-based ids in the listing.
  std::vector<int> trope_ids;
  std::vector<TowerPoly> tropes;
  std::size_t nodes_per_trope = 12;
  std::vector<std::pair<int, int>> divisible_pairs;
  std::vector<std::pair<int, int>> character_sum_pairs;
  std::pair<int, int> branch_tropes;
  std::vector<std::size_t> partition_sizes;
  long chi_x = 0, pg_x = 0, k2_x = 0;
  std::vector<std::string> checks;

  std::vector<TowerPoint> nodes() const;
  std::size_t node_count() const;
  // The listing's assignment node -> sigma, nodes numbered as in nodes().
  cover::BranchAssignment assignment() const;
  void drop_trope(int id);
};

struct Y48Data {
  TowerPtr tower;
  TowerRing ring;
  std::vector<TowerPoly> x_gens;    // V(F, Q, u, v)
  std::vector<TowerPoly> x40_gens;  // V(Q, I, u, v)
  std::vector<TowerPoly> y48_gens;  // the four quadrics
  std::size_t codimension = 4;
  std::vector<std::string> checks;
};

X40Data load_x40(const ScenarioSource& src);
Y48Data load_y48(const ScenarioSource& src);

Report run_x40(const X40Data& data, const RunOptions& opts);
Report run_y48(const Y48Data& data, const RunOptions& opts);

// Loads and runs "x40" or "y48"; throws ConfigError for unknown names,
// invalid primes or unknown check ids.
Report run_scenario(const std::string& name, const RunOptions& opts,
                    const std::filesystem::path& data_dir = default_data_dir());

}  // namespace canmap::pipeline
